#include <algorithm>
#include <cmath>

#include "ctknot/error.hpp"
#include "ctknot/numgeom.hpp"

namespace ctknot {

Vec4 to_r4(const PointC2& x) {
    return {x.z.real(), x.z.imag(), x.w.real(), x.w.imag()};
}

PointC2 from_r4(const Vec4& v) {
    return {Complex(v[0], v[1]), Complex(v[2], v[3])};
}

Eigen::Matrix<double, 2, 4> real_jacobian(const Jet& jet) {
    const Complex i(0.0, 1.0);
    const Complex cols[4] = {jet.dz + jet.dzb, i * (jet.dz - jet.dzb), jet.dw + jet.dwb,
                             i * (jet.dw - jet.dwb)};
    Eigen::Matrix<double, 2, 4> J;
    for (int c = 0; c < 4; ++c) {
        J(0, c) = cols[c].real();
        J(1, c) = cols[c].imag();
    }
    return J;
}

PolyField::PolyField(const Polynomial& p) : text_(p.to_string()) {
    if (p.form() != Form::Ambient) {
        throw Error(ErrorKind::WrongForm, "numeric fields need ambient polynomials");
    }
    terms_.reserve(p.size());
    for (const auto& [mono, c] : p.terms()) {
        terms_.push_back({c.to_complex(), mono.j, mono.k, mono.m, mono.l});
        max_[0] = std::max(max_[0], mono.j);
        max_[1] = std::max(max_[1], mono.k);
        max_[2] = std::max(max_[2], mono.m);
        max_[3] = std::max(max_[3], mono.l);
    }
}

namespace {

struct PowerTables {
    // powers of z, zb, w, wb; index 0 holds 1
    std::vector<Complex> table[4];

    PowerTables(const PointC2& x, const unsigned (&max)[4]) {
        const Complex base[4] = {x.z, std::conj(x.z), x.w, std::conj(x.w)};
        for (int v = 0; v < 4; ++v) {
            table[v].resize(std::max(max[v], 1U) + 1);
            table[v][0] = 1.0;
            for (unsigned e = 1; e < table[v].size(); ++e) table[v][e] = table[v][e - 1] * base[v];
        }
    }
};

}  // namespace

Complex PolyField::value(const PointC2& x) const {
    const PowerTables pw(x, max_);
    Complex sum = 0.0;
    for (const Term& t : terms_) {
        sum += t.c * pw.table[0][t.j] * pw.table[1][t.k] * pw.table[2][t.m] * pw.table[3][t.l];
    }
    return sum;
}

Jet PolyField::jet(const PointC2& x) const {
    const PowerTables pw(x, max_);
    const auto& Z = pw.table[0];
    const auto& ZB = pw.table[1];
    const auto& W = pw.table[2];
    const auto& WB = pw.table[3];
    Jet out{};
    for (const Term& t : terms_) {
        const Complex zz = Z[t.j], zzb = ZB[t.k], ww = W[t.m], wwb = WB[t.l];
        out.value += t.c * zz * zzb * ww * wwb;
        if (t.j) out.dz += t.c * static_cast<double>(t.j) * Z[t.j - 1] * zzb * ww * wwb;
        if (t.k) out.dzb += t.c * static_cast<double>(t.k) * zz * ZB[t.k - 1] * ww * wwb;
        if (t.m) out.dw += t.c * static_cast<double>(t.m) * zz * zzb * W[t.m - 1] * wwb;
        if (t.l) out.dwb += t.c * static_cast<double>(t.l) * zz * zzb * ww * WB[t.l - 1];
    }
    return out;
}

namespace {

Polynomial shift_to_pole(const Polynomial& num) {
    const Polynomial one = Polynomial::constant(GaussianRational(1));
    return substitute(num, {{Var::z, Polynomial::variable(Var::z)},
                            {Var::zb, Polynomial::variable(Var::zb)},
                            {Var::w, one - Polynomial::variable(Var::w)},
                            {Var::wb, one - Polynomial::variable(Var::wb)}});
}

std::string punctured_text(const PuncturedRational& g) {
    return "(" + g.num.to_string() + ") (1-w)^" + std::to_string(g.alpha) + " (1-wb)^" +
           std::to_string(g.beta);
}

}  // namespace

PuncturedField::PuncturedField(const PuncturedRational& g)
    : shifted_(shift_to_pole(g.num)), alpha_(g.alpha), beta_(g.beta), text_(punctured_text(g)) {}

Complex PuncturedField::value_near_pole(Complex z, Complex zeta) const {
    return shifted_.value({z, zeta}) * int_pow(zeta, alpha_) * int_pow(std::conj(zeta), beta_);
}

Complex PuncturedField::value(const PointC2& x) const {
    return value_near_pole(x.z, 1.0 - x.w);
}

Jet PuncturedField::jet(const PointC2& x) const {
    const Complex zeta = 1.0 - x.w;
    const Complex zetab = std::conj(zeta);
    // jet of the numerator in (z, zeta); d/dw = -d/dzeta
    const Jet n = shifted_.jet({x.z, zeta});
    const Complex A = int_pow(zeta, alpha_);
    const Complex B = int_pow(zetab, beta_);
    const Complex dA = alpha_ == 0 ? Complex(0.0) : static_cast<double>(alpha_) * int_pow(zeta, alpha_ - 1);
    const Complex dB = beta_ == 0 ? Complex(0.0) : static_cast<double>(beta_) * int_pow(zetab, beta_ - 1);
    Jet out;
    out.value = n.value * A * B;
    out.dz = n.dz * A * B;
    out.dzb = n.dzb * A * B;
    out.dw = -(n.dw * A + n.value * dA) * B;
    out.dwb = -(n.dwb * B + n.value * dB) * A;
    return out;
}

Polynomial unit_scaled(const Polynomial& p) {
    Rational biggest = 0;
    for (const auto& [mono, c] : p.terms()) {
        biggest = std::max({biggest, Rational(abs(c.re())), Rational(abs(c.im()))});
    }
    if (sgn(biggest) == 0) return p;
    return p * GaussianRational(Rational(1) / biggest);
}

}  // namespace ctknot
