#include "ctknot/polynomial.hpp"

#include <algorithm>
#include <tuple>
#include <vector>

#include "ctknot/error.hpp"

namespace ctknot {

const char* to_string(Form form) {
    return form == Form::Ambient ? "ambient" : "hcoord";
}

const char* to_string(Var var) {
    switch (var) {
        case Var::z: return "z";
        case Var::zb: return "zb";
        case Var::w: return "w";
        case Var::wb: return "wb";
        case Var::u: return "u";
    }
    return "?";
}

namespace {

bool var_allowed(Var v, Form form) {
    if (form == Form::Ambient) return v != Var::u;
    return v == Var::z || v == Var::zb || v == Var::u;
}

constexpr std::array<Var, 4> kAmbientVars{Var::z, Var::zb, Var::w, Var::wb};
constexpr std::array<Var, 3> kHVars{Var::z, Var::zb, Var::u};

}  // namespace

unsigned Monomial::exponent(Var v) const {
    switch (v) {
        case Var::z: return j;
        case Var::zb: return k;
        case Var::w:
        case Var::u: return m;
        case Var::wb: return l;
    }
    return 0;
}

unsigned& Monomial::exponent(Var v) {
    switch (v) {
        case Var::z: return j;
        case Var::zb: return k;
        case Var::wb: return l;
        case Var::w:
        case Var::u: break;
    }
    return m;
}

Monomial operator*(const Monomial& a, const Monomial& b) {
    return {a.j + b.j, a.k + b.k, a.m + b.m, a.l + b.l};
}

bool MonomialOrder::operator()(const Monomial& a, const Monomial& b) const {
    return std::make_tuple(a.weight(), a.j, a.k, a.m, a.l) <
           std::make_tuple(b.weight(), b.j, b.k, b.m, b.l);
}

Polynomial Polynomial::constant(const GaussianRational& c, Form form) {
    Polynomial p(form);
    p.add_term(c, Monomial{});
    return p;
}

Polynomial Polynomial::variable(Var v, Form form) {
    if (!var_allowed(v, form)) {
        throw Error(ErrorKind::WrongForm,
                    std::string("variable ") + ctknot::to_string(v) + " not available in " +
                        ctknot::to_string(form) + " form");
    }
    Monomial mono;
    mono.exponent(v) = 1;
    return term(GaussianRational(1), mono, form);
}

Polynomial Polynomial::term(const GaussianRational& c, const Monomial& mono, Form form) {
    Polynomial p(form);
    p.add_term(c, mono);
    return p;
}

int Polynomial::degree() const {
    int d = -1;
    for (const auto& [mono, c] : terms_) d = std::max(d, static_cast<int>(mono.degree()));
    return d;
}

unsigned Polynomial::degree_in(Var v) const {
    if (!var_allowed(v, form_)) return 0;
    unsigned d = 0;
    for (const auto& [mono, c] : terms_) d = std::max(d, mono.exponent(v));
    return d;
}

bool Polynomial::contains(Var v) const {
    return degree_in(v) > 0;
}

bool Polynomial::is_holomorphic() const {
    return !contains(Var::zb) && !contains(Var::wb);
}

GaussianRational Polynomial::coefficient(const Monomial& mono) const {
    auto it = terms_.find(mono);
    return it == terms_.end() ? GaussianRational() : it->second;
}

void Polynomial::require_monomial_fits(const Monomial& mono) const {
    if (form_ == Form::HCoord && mono.l != 0) {
        throw Error(ErrorKind::WrongForm, "wb does not exist in hcoord form");
    }
}

void Polynomial::add_term(const GaussianRational& c, const Monomial& mono) {
    if (c.is_zero()) return;
    require_monomial_fits(mono);
    auto [it, inserted] = terms_.try_emplace(mono, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

Polynomial Polynomial::operator-() const {
    Polynomial r(*this);
    for (auto& [mono, c] : r.terms_) c = -c;
    return r;
}

namespace {

void require_same_form(const Polynomial& a, const Polynomial& b) {
    if (a.form() != b.form()) {
        throw Error(ErrorKind::MixedForm, std::string("mixed-form operands: ") +
                                              to_string(a.form()) + " and " + to_string(b.form()));
    }
}

}  // namespace

Polynomial& Polynomial::operator+=(const Polynomial& o) {
    require_same_form(*this, o);
    for (const auto& [mono, c] : o.terms_) add_term(c, mono);
    return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
    require_same_form(*this, o);
    for (const auto& [mono, c] : o.terms_) add_term(-c, mono);
    return *this;
}

Polynomial& Polynomial::operator*=(const GaussianRational& c) {
    if (c.is_zero()) {
        terms_.clear();
        return *this;
    }
    for (auto& [mono, coef] : terms_) coef *= c;
    return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    require_same_form(a, b);
    Polynomial r(a.form());
    for (const auto& [ma, ca] : a.terms_) {
        for (const auto& [mb, cb] : b.terms_) r.add_term(ca * cb, ma * mb);
    }
    return r;
}

Polynomial Polynomial::pow(unsigned e) const {
    Polynomial result = constant(GaussianRational(1), form_);
    Polynomial base = *this;
    while (e != 0) {
        if (e & 1U) result = result * base;
        e >>= 1U;
        if (e != 0) base = base * base;
    }
    return result;
}

// ---------------------------------------------------------------------------
// Canonical text

namespace {

bool is_integer(const Rational& q) { return q.get_den() == 1; }

std::string factors_text(const Monomial& mono, Form form) {
    std::string out;
    auto emit = [&out](const char* name, unsigned e) {
        if (e == 0) return;
        if (!out.empty()) out += ' ';
        out += name;
        if (e > 1) out += "^" + std::to_string(e);
    };
    emit("z", mono.j);
    emit("zb", mono.k);
    if (form == Form::Ambient) {
        emit("w", mono.m);
        emit("wb", mono.l);
    } else {
        emit("u", mono.m);
    }
    return out;
}

}  // namespace

std::string Polynomial::to_string() const {
    if (terms_.empty()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [mono, c] : terms_) {
        const std::string factors = factors_text(mono, form_);
        const bool bare_real = c.is_real() && is_integer(c.re());
        const bool bare_imag = sgn(c.re()) == 0 && is_integer(c.im());

        std::string coef;
        bool negative = false;
        if (bare_real || bare_imag) {
            const Rational& v = bare_real ? c.re() : c.im();
            negative = sgn(v) < 0;
            const Rational mag = abs(v);
            if (bare_imag) {
                coef = mag == 1 ? "i" : mag.get_str() + "i";
            } else if (mag != 1 || factors.empty()) {
                coef = mag.get_str();
            }
        } else {
            coef = "(" + c.to_string() + ")";
        }

        if (first) {
            if (negative) out += '-';
        } else {
            out += negative ? " - " : " + ";
        }
        out += coef;
        if (!factors.empty()) {
            if (!coef.empty()) out += ' ';
            out += factors;
        }
        first = false;
    }
    return out;
}

// ---------------------------------------------------------------------------
// Calculus and evaluation

Polynomial conjugate(const Polynomial& p) {
    Polynomial r(p.form());
    for (const auto& [mono, c] : p.terms()) {
        Monomial swapped{mono.k, mono.j, mono.l, mono.m};
        if (p.form() == Form::HCoord) swapped = {mono.k, mono.j, mono.m, 0};
        r.add_term(c.conj(), swapped);
    }
    return r;
}

Polynomial wirtinger(const Polynomial& p, Var var) {
    if (p.form() != Form::Ambient) {
        throw Error(ErrorKind::WrongForm, "wirtinger derivative requires ambient form");
    }
    if (var == Var::u) throw Error(ErrorKind::WrongForm, "u is not an ambient variable");
    Polynomial r(Form::Ambient);
    for (const auto& [mono, c] : p.terms()) {
        const unsigned e = mono.exponent(var);
        if (e == 0) continue;
        Monomial d = mono;
        d.exponent(var) = e - 1;
        r.add_term(c * GaussianRational(static_cast<long>(e)), d);
    }
    return r;
}

namespace {

/// powers[e] = base^e for e <= max_exp.
std::vector<Complex> power_table(Complex base, unsigned max_exp) {
    std::vector<Complex> t(max_exp + 1);
    t[0] = 1.0;
    for (unsigned e = 1; e <= max_exp; ++e) t[e] = t[e - 1] * base;
    return t;
}

Complex evaluate_with(const Polynomial& p, Complex z, Complex zb, Complex w, Complex wb) {
    if (p.is_zero()) return 0.0;
    unsigned mj = 0, mk = 0, mm = 0, ml = 0;
    for (const auto& [mono, c] : p.terms()) {
        mj = std::max(mj, mono.j);
        mk = std::max(mk, mono.k);
        mm = std::max(mm, mono.m);
        ml = std::max(ml, mono.l);
    }
    const auto pz = power_table(z, mj);
    const auto pzb = power_table(zb, mk);
    const auto pw = power_table(w, mm);
    const auto pwb = power_table(wb, ml);
    Complex sum = 0.0;
    for (const auto& [mono, c] : p.terms()) {
        sum += c.to_complex() * pz[mono.j] * pzb[mono.k] * pw[mono.m] * pwb[mono.l];
    }
    return sum;
}

}  // namespace

Complex evaluate(const Polynomial& p, const PointC2& x) {
    if (p.form() == Form::HCoord) return evaluate_h(p, x.z, x.w.real());
    return evaluate_with(p, x.z, std::conj(x.z), x.w, std::conj(x.w));
}

Complex evaluate_h(const Polynomial& p, Complex z, double u) {
    if (p.form() != Form::HCoord) {
        throw Error(ErrorKind::WrongForm, "evaluate_h requires hcoord form");
    }
    return evaluate_with(p, z, std::conj(z), Complex(u, 0.0), 1.0);
}

std::optional<unsigned> weight(const Polynomial& p) {
    if (p.is_zero()) throw Error(ErrorKind::InvalidArgument, "weight of the zero polynomial");
    const unsigned s = p.terms().begin()->first.weight();
    for (const auto& [mono, c] : p.terms()) {
        if (mono.weight() != s) return std::nullopt;
    }
    return s;
}

Polynomial substitute(const Polynomial& p, const Substitution& map) {
    std::optional<Form> out_form;
    for (const auto& [v, image] : map) {
        if (out_form && *out_form != image.form()) {
            throw Error(ErrorKind::MixedForm, "substitution images must share one form");
        }
        out_form = image.form();
    }

    const auto vars = p.form() == Form::Ambient
                          ? std::vector<Var>(kAmbientVars.begin(), kAmbientVars.end())
                          : std::vector<Var>(kHVars.begin(), kHVars.end());
    // powers[v][e] = image(v)^e, grown on demand
    std::map<Var, std::vector<Polynomial>> powers;
    for (Var v : vars) {
        const unsigned d = p.degree_in(v);
        if (d == 0) continue;
        auto it = map.find(v);
        if (it == map.end()) {
            throw Error(ErrorKind::InvalidArgument,
                        std::string("incomplete variable map: missing ") + to_string(v));
        }
        auto& table = powers[v];
        table.push_back(Polynomial::constant(GaussianRational(1), it->second.form()));
        for (unsigned e = 1; e <= d; ++e) table.push_back(table.back() * it->second);
    }

    Polynomial result(out_form.value_or(p.form()));
    for (const auto& [mono, c] : p.terms()) {
        Polynomial t = Polynomial::constant(c, result.form());
        for (Var v : vars) {
            const unsigned e = mono.exponent(v);
            if (e != 0) t = t * powers.at(v)[e];
        }
        result += t;
    }
    return result;
}

Polynomial to_ambient(const Polynomial& p) {
    if (p.form() == Form::Ambient) return p;
    const Polynomial half_sum =
        (Polynomial::variable(Var::w) + Polynomial::variable(Var::wb)) * GaussianRational(Rational(1, 2));
    return substitute(p, {{Var::z, Polynomial::variable(Var::z)},
                          {Var::zb, Polynomial::variable(Var::zb)},
                          {Var::u, half_sum}});
}

Polynomial to_h_coords(const Polynomial& p) {
    if (p.form() == Form::HCoord) return p;
    const Polynomial z = Polynomial::variable(Var::z, Form::HCoord);
    const Polynomial zb = Polynomial::variable(Var::zb, Form::HCoord);
    const Polynomial u = Polynomial::variable(Var::u, Form::HCoord);
    const Polynomial izzb = z * zb * GaussianRational::i();
    return substitute(p, {{Var::z, z}, {Var::zb, zb}, {Var::w, u + izzb}, {Var::wb, u - izzb}});
}

std::optional<Polynomial> divide_linear(const Polynomial& p, Var v, const GaussianRational& root) {
    // Group by the monomial with v stripped; each group is univariate in v.
    std::map<Monomial, std::map<unsigned, GaussianRational>, MonomialOrder> groups;
    for (const auto& [mono, c] : p.terms()) {
        Monomial rest = mono;
        rest.exponent(v) = 0;
        groups[rest][mono.exponent(v)] = c;
    }
    Polynomial q(p.form());
    for (const auto& [rest, coeffs] : groups) {
        const unsigned top = coeffs.rbegin()->first;
        auto coeff_at = [&coeffs](unsigned e) {
            auto it = coeffs.find(e);
            return it == coeffs.end() ? GaussianRational() : it->second;
        };
        if (top == 0) return std::nullopt;
        // p = (v - root) q:  q_{e-1} = c_e + root * q_e, remainder c_0 + root * q_0.
        std::vector<GaussianRational> quot(top);
        GaussianRational carry;
        for (unsigned e = top; e >= 1; --e) {
            carry = coeff_at(e) + root * carry;
            quot[e - 1] = carry;
        }
        if (!(coeff_at(0) + root * carry).is_zero()) return std::nullopt;
        for (unsigned e = 0; e < top; ++e) {
            Monomial mono = rest;
            mono.exponent(v) = e;
            q.add_term(quot[e], mono);
        }
    }
    return q;
}

void RealPolynomial::add_term(const Rational& c, const Exponents& exps) {
    if (sgn(c) == 0) return;
    auto [it, inserted] = terms_.try_emplace(exps, c);
    if (!inserted) {
        it->second += c;
        if (sgn(it->second) == 0) terms_.erase(it);
    }
}

double RealPolynomial::evaluate(const std::array<double, 4>& x) const {
    double sum = 0.0;
    for (const auto& [e, c] : terms_) {
        double t = c.get_d();
        for (std::size_t i = 0; i < 4; ++i) {
            for (unsigned n = 0; n < e[i]; ++n) t *= x[i];
        }
        sum += t;
    }
    return sum;
}

Polynomial from_real(const RealPolynomial& p) {
    const Polynomial z = Polynomial::variable(Var::z);
    const Polynomial zb = Polynomial::variable(Var::zb);
    const Polynomial w = Polynomial::variable(Var::w);
    const Polynomial wb = Polynomial::variable(Var::wb);
    const GaussianRational half(Rational(1, 2));
    const GaussianRational minus_half_i(0, Rational(-1, 2));
    const std::array<Polynomial, 4> images{(z + zb) * half, (z - zb) * minus_half_i,
                                           (w + wb) * half, (w - wb) * minus_half_i};
    Polynomial result(Form::Ambient);
    for (const auto& [e, c] : p.terms()) {
        Polynomial t = Polynomial::constant(GaussianRational(c));
        for (std::size_t i = 0; i < 4; ++i) {
            if (e[i] != 0) t = t * images[i].pow(e[i]);
        }
        result += t;
    }
    return result;
}

Polynomial sphere_rho() {
    return parse_poly("z zb + w wb - 1");
}

Polynomial heisenberg_rho() {
    return parse_poly("-i w + i wb - 2 z zb");
}

}  // namespace ctknot
