#pragma once

#include <array>
#include <complex>
#include <map>
#include <optional>
#include <string>
#include <string_view>

#include "ctknot/gaussian.hpp"

namespace ctknot {

using Complex = std::complex<double>;

/// Variable set a polynomial lives in.
///   Ambient: the four formal variables z, zb, w, wb of C^2.
///   HCoord:  z, zb, u  with u = Re(w), i.e. coordinates on the Heisenberg group.
enum class Form { Ambient, HCoord };

enum class Var { z, zb, w, wb, u };

const char* to_string(Form form);
const char* to_string(Var var);

/// z^j zb^k w^m wb^l in ambient form; z^j zb^k u^m (l = 0) in H-form.
struct Monomial {
    unsigned j = 0;
    unsigned k = 0;
    unsigned m = 0;
    unsigned l = 0;

    /// z, zb count 1; w, wb, u count 2.
    unsigned weight() const { return j + k + 2 * (m + l); }
    unsigned degree() const { return j + k + m + l; }
    unsigned exponent(Var v) const;
    unsigned& exponent(Var v);

    friend bool operator==(const Monomial&, const Monomial&) = default;
};

Monomial operator*(const Monomial& a, const Monomial& b);

/// Canonical term order: by weight, then lexicographic on (j, k, m, l).
struct MonomialOrder {
    bool operator()(const Monomial& a, const Monomial& b) const;
};

/// Integer power by repeated squaring; negative exponents invert.
inline Complex int_pow(Complex base, int e) {
    Complex result = 1.0;
    Complex b = e < 0 ? 1.0 / base : base;
    for (unsigned n = e < 0 ? -static_cast<unsigned>(e) : static_cast<unsigned>(e); n != 0; n >>= 1U) {
        if (n & 1U) result *= b;
        b *= b;
    }
    return result;
}

struct PointC2 {
    Complex z;
    Complex w;
};

/// Sparse polynomial with exact Gaussian-rational coefficients. Zero
/// coefficients are never stored, so structural equality is equality.
class Polynomial {
public:
    using Terms = std::map<Monomial, GaussianRational, MonomialOrder>;

    explicit Polynomial(Form form = Form::Ambient) : form_(form) {}

    static Polynomial constant(const GaussianRational& c, Form form = Form::Ambient);
    static Polynomial variable(Var v, Form form = Form::Ambient);
    static Polynomial term(const GaussianRational& c, const Monomial& mono,
                           Form form = Form::Ambient);

    Form form() const noexcept { return form_; }
    const Terms& terms() const noexcept { return terms_; }
    bool is_zero() const noexcept { return terms_.empty(); }
    std::size_t size() const noexcept { return terms_.size(); }

    /// Total degree; -1 for the zero polynomial.
    int degree() const;
    unsigned degree_in(Var v) const;
    bool contains(Var v) const;
    /// True when no antiholomorphic variable (zb, wb) occurs.
    bool is_holomorphic() const;
    GaussianRational coefficient(const Monomial& mono) const;
    GaussianRational constant_term() const { return coefficient(Monomial{}); }

    /// Adds c*mono in place; drops the term if it cancels.
    void add_term(const GaussianRational& c, const Monomial& mono);

    Polynomial operator-() const;
    Polynomial& operator+=(const Polynomial& o);
    Polynomial& operator-=(const Polynomial& o);
    Polynomial& operator*=(const GaussianRational& c);

    friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
    friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
    friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
    friend Polynomial operator*(Polynomial a, const GaussianRational& c) { return a *= c; }
    friend Polynomial operator*(const GaussianRational& c, Polynomial a) { return a *= c; }

    friend bool operator==(const Polynomial& a, const Polynomial& b) {
        return a.form_ == b.form_ && a.terms_ == b.terms_;
    }

    Polynomial pow(unsigned e) const;

    /// Canonical text; parse_poly(to_string()) reproduces the polynomial.
    std::string to_string() const;

private:
    void require_monomial_fits(const Monomial& mono) const;

    Form form_;
    Terms terms_;
};

/// Reads the polynomial text grammar (see README). Throws ParseError.
Polynomial parse_poly(std::string_view text, Form form = Form::Ambient);

Polynomial conjugate(const Polynomial& p);

/// Formal partial derivative treating z, zb, w, wb as independent. Ambient form only.
Polynomial wirtinger(const Polynomial& p, Var var);

/// Ambient: value at (z, w). HCoord: value at (z, u = Re w).
Complex evaluate(const Polynomial& p, const PointC2& x);
/// H-form value at (z, u).
Complex evaluate_h(const Polynomial& p, Complex z, double u);

/// Common weight of every monomial, or nullopt when inhomogeneous. Throws on zero.
std::optional<unsigned> weight(const Polynomial& p);

using Substitution = std::map<Var, Polynomial>;

/// Replaces every variable of p by its image. The map must cover every
/// variable that occurs in p and all images must share one form.
Polynomial substitute(const Polynomial& p, const Substitution& map);

/// u -> (w + wb)/2.
Polynomial to_ambient(const Polynomial& p);
/// w -> u + i z zb, wb -> u - i z zb; agrees with p on the Heisenberg group only.
Polynomial to_h_coords(const Polynomial& p);

/// Exact quotient p / (v - root) when it divides, nullopt otherwise.
std::optional<Polynomial> divide_linear(const Polynomial& p, Var v, const GaussianRational& root);

/// Real polynomial in x1..x4 with rational coefficients, under the
/// identification z = x1 + i x2, w = x3 + i x4.
class RealPolynomial {
public:
    using Exponents = std::array<unsigned, 4>;

    void add_term(const Rational& c, const Exponents& exps);
    const std::map<Exponents, Rational>& terms() const noexcept { return terms_; }
    double evaluate(const std::array<double, 4>& x) const;

private:
    std::map<Exponents, Rational> terms_;
};

Polynomial from_real(const RealPolynomial& p);

/// The sphere defining function zz̄ + ww̄ - 1.
Polynomial sphere_rho();
/// The Heisenberg defining function i(w̄ - w) - 2zz̄.
Polynomial heisenberg_rho();

}  // namespace ctknot
