#include "ctknot/transfer.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

#include "ctknot/cr.hpp"
#include "ctknot/error.hpp"

namespace ctknot {

namespace {

const GaussianRational kI = GaussianRational::i();
const GaussianRational kMinusI(0, -1);

Polynomial var(Var v) { return Polynomial::variable(v); }
Polynomial one() { return Polynomial::constant(GaussianRational(1)); }

/// Table base^0 .. base^n.
std::vector<Polynomial> powers(const Polynomial& base, unsigned n) {
    std::vector<Polynomial> t{one()};
    for (unsigned e = 1; e <= n; ++e) t.push_back(t.back() * base);
    return t;
}

}  // namespace

PuncturedRational normalize(PuncturedRational g) {
    if (g.num.is_zero()) return {};
    // (1 - v) q = -(v - 1) q
    while (auto q = divide_linear(g.num, Var::w, GaussianRational(1))) {
        g.num = -*q;
        ++g.alpha;
    }
    while (auto q = divide_linear(g.num, Var::wb, GaussianRational(1))) {
        g.num = -*q;
        ++g.beta;
    }
    return g;
}

Complex evaluate(const PuncturedRational& g, const PointC2& x) {
    const Complex zeta = 1.0 - x.w;
    return evaluate(g.num, x) * int_pow(zeta, g.alpha) * int_pow(std::conj(zeta), g.beta);
}

PointC2 eval_map(MapDirection dir, const PointC2& x) {
    const Complex i(0.0, 1.0);
    if (dir == MapDirection::phi) {
        const Complex den = x.w + i;
        if (std::abs(den) < 1e-12) throw Error(ErrorKind::PoleHit, "phi evaluated at w = -i");
        return {2.0 * x.z / den, (x.w - i) / den};
    }
    const Complex den = 1.0 - x.w;
    if (std::abs(den) < 1e-12) throw Error(ErrorKind::PoleHit, "psi evaluated at w = 1");
    return {i * x.z / den, i * (1.0 + x.w) / den};
}

Pullback pullback_numerator(const Polynomial& p) {
    if (p.form() != Form::Ambient) {
        throw Error(ErrorKind::WrongForm, "pullback_numerator requires ambient form");
    }
    Pullback out;
    for (const auto& [mono, c] : p.terms()) {
        out.M = std::max(out.M, mono.j + mono.m);
        out.N = std::max(out.N, mono.k + mono.l);
    }
    const Polynomial w_plus_i = var(Var::w) + Polynomial::constant(kI);
    const Polynomial w_minus_i = var(Var::w) - Polynomial::constant(kI);
    const Polynomial wb_minus_i = var(Var::wb) - Polynomial::constant(kI);
    const Polynomial wb_plus_i = var(Var::wb) + Polynomial::constant(kI);
    const auto wpi = powers(w_plus_i, out.M);
    const auto wmi = powers(w_minus_i, p.degree_in(Var::w));
    const auto wbmi = powers(wb_minus_i, out.N);
    const auto wbpi = powers(wb_plus_i, p.degree_in(Var::wb));

    // z^j zb^k w^m wb^l -> 2^(j+k) z^j zb^k (w-i)^m (wb+i)^l / ((w+i)^(j+m) (wb-i)^(k+l))
    for (const auto& [mono, c] : p.terms()) {
        const GaussianRational scale = c * GaussianRational(2).pow(mono.j + mono.k);
        Polynomial t = Polynomial::term(scale, Monomial{mono.j, mono.k, 0, 0});
        t = t * wmi[mono.m] * wbpi[mono.l] * wpi[out.M - mono.j - mono.m] *
            wbmi[out.N - mono.k - mono.l];
        out.q += t;
    }

    while (out.M > 0) {
        auto q = divide_linear(out.q, Var::w, kMinusI);
        if (!q) break;
        out.q = std::move(*q);
        --out.M;
    }
    while (out.N > 0) {
        auto q = divide_linear(out.q, Var::wb, kI);
        if (!q) break;
        out.q = std::move(*q);
        --out.N;
    }
    return out;
}

PuncturedRational transfer_to_sphere(const Polynomial& f, int r) {
    if (r < 2) {
        throw Error(ErrorKind::InvalidArgument,
                    "r must be at least 2 for a continuously differentiable transfer, got " +
                        std::to_string(r));
    }
    if (f.form() != Form::Ambient) {
        throw Error(ErrorKind::WrongForm, "transfer_to_sphere requires ambient form");
    }
    const unsigned n = static_cast<unsigned>(std::max(f.degree(), 0));
    const Polynomial one_minus_w = one() - var(Var::w);
    const Polynomial one_minus_wb = one() - var(Var::wb);
    const auto omw = powers(one_minus_w, n);
    const auto omwb = powers(one_minus_wb, n);
    const auto opw = powers(one() + var(Var::w), f.degree_in(Var::w));
    const auto opwb = powers(one() + var(Var::wb), f.degree_in(Var::wb));

    // psi: z -> iz/(1-w), zb -> -i zb/(1-wb), w -> i(1+w)/(1-w), wb -> -i(1+wb)/(1-wb).
    // Over the common denominator (1-w)^n (1-wb)^n each term keeps
    // (1-w)^(n-j-m) (1-wb)^(n-k-l) in its numerator.
    Polynomial num(Form::Ambient);
    for (const auto& [mono, c] : f.terms()) {
        const GaussianRational scale = c * kI.pow(mono.j + mono.m) * kMinusI.pow(mono.k + mono.l);
        Polynomial t = Polynomial::term(scale, Monomial{mono.j, mono.k, 0, 0});
        t = t * opw[mono.m] * opwb[mono.l] * omw[n - mono.j - mono.m] * omwb[n - mono.k - mono.l];
        num += t;
    }
    const int ni = static_cast<int>(n);
    return normalize({std::move(num), ni + r, -ni});
}

PuncturedRational apply_cr_punctured(const PuncturedRational& g) {
    if (g.num.is_zero()) return {};
    const Polynomial lnum = apply_cr(CROperator::sphere(), g.num);
    Polynomial num = (one() - var(Var::wb)) * lnum +
                     var(Var::z) * g.num * GaussianRational(static_cast<long>(g.beta));
    return normalize({std::move(num), g.alpha, g.beta - 1});
}

Polynomial link_product(std::span<const Polynomial> gs) {
    if (gs.empty()) throw Error(ErrorKind::InvalidArgument, "link_product of an empty list");
    Polynomial result = gs.front();
    for (std::size_t i = 1; i < gs.size(); ++i) result = result * gs[i];
    return result;
}

}  // namespace ctknot
