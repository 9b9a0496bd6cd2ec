#include <cctype>
#include <string>

#include "ctknot/error.hpp"
#include "ctknot/polynomial.hpp"

namespace ctknot {

namespace {

// Recursive-descent reader for
//   poly   := sign? term (('+'|'-') term)*
//   term   := coeff? factor*
//   factor := var ('^' nat)?
//   coeff  := '(' gauss ')' | rat | rat? 'i'   (whitespace allowed before 'i')
//   gauss  := signed parts, at most one real and one imaginary, e.g. 1/2-1/3i, -1/2i
// Whitespace and '*' between factors are optional.
class Reader {
public:
    Reader(std::string_view text, Form form) : text_(text), form_(form) {}

    Polynomial read() {
        Polynomial result(form_);
        skip_ws();
        bool negative = false;
        if (peek() == '+' || peek() == '-') {
            negative = get() == '-';
        }
        result += read_term(negative);
        for (;;) {
            skip_ws();
            if (at_end()) break;
            const char c = peek();
            if (c != '+' && c != '-') fail("expected '+', '-' or end of input");
            get();
            result += read_term(c == '-');
        }
        return result;
    }

private:
    bool at_end() const { return pos_ >= text_.size(); }
    char peek(std::size_t ahead = 0) const {
        return pos_ + ahead < text_.size() ? text_[pos_ + ahead] : '\0';
    }
    char get() { return text_[pos_++]; }
    void skip_ws() {
        while (!at_end() && std::isspace(static_cast<unsigned char>(peek()))) ++pos_;
    }
    [[noreturn]] void fail(const std::string& message) const { throw ParseError(pos_, message); }

    static bool is_digit(char c) { return std::isdigit(static_cast<unsigned char>(c)) != 0; }

    mpz_class read_nat() {
        if (!is_digit(peek())) fail("expected a natural number");
        const std::size_t start = pos_;
        while (is_digit(peek())) ++pos_;
        return mpz_class(std::string(text_.substr(start, pos_ - start)));
    }

    Rational read_unsigned_rat() {
        mpz_class num = read_nat();
        mpz_class den = 1;
        if (peek() == '/') {
            get();
            den = read_nat();
            if (den == 0) fail("zero denominator");
        }
        Rational q(num, den);
        q.canonicalize();
        return q;
    }

    GaussianRational read_gauss() {
        Rational re = 0, im = 0;
        bool have_re = false, have_im = false, first = true;
        for (;;) {
            skip_ws();
            if (peek() == ')') break;
            bool negative = false;
            if (peek() == '+' || peek() == '-') {
                negative = get() == '-';
                skip_ws();
            } else if (!first) {
                fail("expected '+' or '-' inside coefficient");
            }
            Rational mag = 1;
            const bool has_digits = is_digit(peek());
            if (has_digits) mag = read_unsigned_rat();
            skip_ws();
            if (peek() == 'i') {
                get();
                if (have_im) fail("coefficient has two imaginary parts");
                have_im = true;
                im = negative ? Rational(-mag) : mag;
            } else {
                if (!has_digits) fail("expected a number or 'i'");
                if (have_re || have_im) fail("real part must come first in a coefficient");
                have_re = true;
                re = negative ? Rational(-mag) : mag;
            }
            first = false;
        }
        if (first) fail("empty coefficient");
        return {re, im};
    }

    Polynomial read_term(bool negative) {
        skip_ws();
        GaussianRational coef(1);
        bool have_coef = false;
        if (peek() == '(') {
            get();
            coef = read_gauss();
            skip_ws();
            if (peek() != ')') fail("expected ')'");
            get();
            have_coef = true;
        } else if (is_digit(peek())) {
            const Rational mag = read_unsigned_rat();
            skip_ws();
            if (peek() == 'i') {
                get();
                coef = GaussianRational(0, mag);
            } else {
                coef = GaussianRational(mag);
            }
            have_coef = true;
        } else if (peek() == 'i') {
            get();
            coef = GaussianRational::i();
            have_coef = true;
        }

        Monomial mono;
        bool have_factor = false;
        for (;;) {
            skip_ws();
            if (peek() == '*') {
                if (!have_coef && !have_factor) fail("'*' must follow a coefficient or factor");
                get();
                skip_ws();
                if (!is_var_start(peek())) fail("expected a variable after '*'");
            }
            if (!is_var_start(peek())) break;
            const std::size_t var_pos = pos_;
            const Var v = read_var();
            if (form_ == Form::HCoord && (v == Var::w || v == Var::wb)) {
                throw ParseError(var_pos, "w and wb are not allowed in hcoord form");
            }
            if (form_ == Form::Ambient && v == Var::u) {
                throw ParseError(var_pos, "u is only allowed in hcoord form");
            }
            unsigned e = 1;
            skip_ws();
            if (peek() == '^') {
                get();
                skip_ws();
                if (peek() == '-') fail("negative exponent");
                const mpz_class n = read_nat();
                if (n > 100000) fail("exponent too large");
                e = static_cast<unsigned>(n.get_ui());
            }
            mono.exponent(v) += e;
            have_factor = true;
        }
        if (!have_coef && !have_factor) fail("expected a term");
        if (negative) coef = -coef;
        return Polynomial::term(coef, mono, form_);
    }

    static bool is_var_start(char c) { return c == 'z' || c == 'w' || c == 'u'; }

    Var read_var() {
        const char c = get();
        const bool bar = peek() == 'b';
        if (bar) get();
        if (c == 'u') {
            if (bar) fail("unknown variable 'ub'");
            return Var::u;
        }
        if (c == 'z') return bar ? Var::zb : Var::z;
        return bar ? Var::wb : Var::w;
    }

    std::string_view text_;
    Form form_;
    std::size_t pos_ = 0;
};

}  // namespace

Polynomial parse_poly(std::string_view text, Form form) {
    return Reader(text, form).read();
}

}  // namespace ctknot
