#include <doctest.h>

#include "ctknot/error.hpp"
#include "ctknot/polynomial.hpp"
#include "support.hpp"

using namespace ctknot;
using ctknot::testing::P;

namespace {

ErrorKind kind_of(const std::function<void()>& f) {
    try {
        f();
    } catch (const Error& e) {
        return e.kind();
    }
    FAIL("expected an error");
    return ErrorKind::Parse;
}

}  // namespace

TEST_CASE("gaussian rationals are exact and canonical") {
    const GaussianRational a(Rational(2, 4), Rational(-3, 6));
    CHECK(a.re() == Rational(1, 2));
    CHECK(a.im() == Rational(-1, 2));
    CHECK(a.re().get_den() == 2);
    CHECK(a * a.conj() == GaussianRational(Rational(1, 2)));
    CHECK(GaussianRational::i() * GaussianRational::i() == GaussianRational(-1));
    CHECK(GaussianRational(1) / GaussianRational::i() == GaussianRational(0, -1));
    CHECK(GaussianRational(1, 1).pow(4) == GaussianRational(-4));
    CHECK_THROWS_AS(GaussianRational(1) / GaussianRational(0), Error);

    CHECK(GaussianRational(Rational(1, 2), Rational(1, 3)).to_string() == "1/2+1/3i");
    CHECK(GaussianRational(0, Rational(-1, 2)).to_string() == "-1/2i");
    CHECK(GaussianRational::i().to_string() == "i");
    CHECK(GaussianRational(0, -1).to_string() == "-i");
    CHECK(GaussianRational(7).to_string() == "7");
}

TEST_CASE("parse_poly reads the documented examples") {
    const Polynomial zb = P("zb");
    CHECK(zb.size() == 1);
    CHECK(zb.coefficient({0, 1, 0, 0}) == GaussianRational(1));

    const Polynomial torus = P("w^2*zb - z*wb");
    CHECK(torus.coefficient({0, 1, 2, 0}) == GaussianRational(1));
    CHECK(torus.coefficient({1, 0, 0, 1}) == GaussianRational(-1));
    CHECK(torus.size() == 2);

    const Polynomial h = parse_poly("(1/2+1/3i) z^2 u", Form::HCoord);
    CHECK(h.form() == Form::HCoord);
    CHECK(h.size() == 1);
    CHECK(h.coefficient({2, 0, 1, 0}) == GaussianRational(Rational(1, 2), Rational(1, 3)));

    CHECK(P("3/4 i z") == Polynomial::term(GaussianRational(0, Rational(3, 4)), {1, 0, 0, 0}));
    CHECK(P("i") == Polynomial::constant(GaussianRational::i()));
    CHECK(P("z z") == P("z^2"));
    CHECK(P("-i zb") == Polynomial::term(GaussianRational(0, -1), {0, 1, 0, 0}));
}

TEST_CASE("parse errors carry positions") {
    try {
        (void)P("z + ^2");
        FAIL("no error");
    } catch (const ParseError& e) {
        CHECK(e.kind() == ErrorKind::Parse);
        CHECK(e.position() == 4);
    }
    CHECK(kind_of([] { (void)P("z^-1"); }) == ErrorKind::Parse);
    CHECK(kind_of([] { (void)parse_poly("w z", Form::HCoord); }) == ErrorKind::Parse);
    CHECK(kind_of([] { (void)parse_poly("u", Form::Ambient); }) == ErrorKind::Parse);
    CHECK(kind_of([] { (void)P("1/0 z"); }) == ErrorKind::Parse);
    CHECK(kind_of([] { (void)P("z +"); }) == ErrorKind::Parse);
    CHECK(kind_of([] { (void)P("q"); }) == ErrorKind::Parse);
}

TEST_CASE("canonical text round trips") {
    CHECK(Polynomial().to_string() == "0");
    CHECK(P("z - z").to_string() == "0");
    CHECK(P("w^2*zb - z*wb").to_string() == "-z wb + zb w^2");
    CHECK(P("zb wb").to_string() == "zb wb");
    CHECK(P("(-1/2i) zb^2 wb + (1/3) z zb^3").to_string() == "(-1/2i) zb^2 wb + (1/3) z zb^3");

    std::mt19937_64 rng(11);
    for (int n = 0; n < 200; ++n) {
        const Polynomial p = testing::random_poly(rng, 6);
        CHECK(parse_poly(p.to_string()) == p);
        const Polynomial h = to_h_coords(p);
        CHECK(parse_poly(h.to_string(), Form::HCoord) == h);
    }
}

TEST_CASE("ring arithmetic") {
    CHECK(P("z") + P("-z") == Polynomial());
    CHECK((P("z") + P("-z")).is_zero());
    CHECK((P("z + w") * P("z - w")) == P("z^2 - w^2"));
    CHECK(P("z + 1").pow(3) == P("z^3 + 3 z^2 + 3 z + 1"));
    CHECK(kind_of([] { (void)(P("z") + parse_poly("u", Form::HCoord)); }) == ErrorKind::MixedForm);
    CHECK(kind_of([] { (void)(P("z") * parse_poly("u", Form::HCoord)); }) == ErrorKind::MixedForm);

    // Product zero set is the union: vanishes wherever a factor does.
    const Polynomial g1 = P("z - 1/2");
    const Polynomial g2 = P("w + 1/3 i");
    const Polynomial prod = g1 * g2;
    CHECK(std::abs(evaluate(prod, {0.5, 0.7})) < 1e-15);
    CHECK(std::abs(evaluate(prod, {{0.3, 0.2}, {0.0, -1.0 / 3.0}})) < 1e-15);
    CHECK(std::abs(evaluate(prod, {0.1, 0.1})) > 1e-3);
}

TEST_CASE("conjugation") {
    CHECK(conjugate(P("z")) == P("zb"));
    CHECK(conjugate(P("(1+2i) z wb")) == P("(1-2i) zb w"));
    CHECK(conjugate(heisenberg_rho()) == heisenberg_rho());
    CHECK(conjugate(sphere_rho()) == sphere_rho());

    std::mt19937_64 rng(12);
    for (int n = 0; n < 50; ++n) {
        const Polynomial p = testing::random_poly(rng, 4);
        const Polynomial q = testing::random_poly(rng, 4);
        CHECK(conjugate(conjugate(p)) == p);
        CHECK(conjugate(p * q) == conjugate(p) * conjugate(q));
        CHECK(conjugate(p + q) == conjugate(p) + conjugate(q));
        const PointC2 x = testing::random_c2_point(rng);
        CHECK(std::abs(evaluate(conjugate(p), x) - std::conj(evaluate(p, x))) < 1e-10);
    }
}

TEST_CASE("wirtinger derivatives") {
    CHECK(wirtinger(P("zb^2"), Var::zb) == P("2 zb"));
    CHECK(wirtinger(P("z wb"), Var::wb) == P("z"));
    CHECK(wirtinger(P("z wb"), Var::w).is_zero());
    CHECK_THROWS_AS((void)wirtinger(parse_poly("u", Form::HCoord), Var::z), Error);

    std::mt19937_64 rng(13);
    for (int n = 0; n < 100; ++n) {
        const Polynomial p = testing::random_poly(rng, 4);
        const Polynomial q = testing::random_poly(rng, 4);
        for (Var v : {Var::z, Var::zb, Var::w, Var::wb}) {
            CHECK(wirtinger(p * q, v) == wirtinger(p, v) * q + p * wirtinger(q, v));
        }
        CHECK(wirtinger(conjugate(p), Var::zb) == conjugate(wirtinger(p, Var::z)));
    }
}

TEST_CASE("evaluation") {
    CHECK(std::abs(evaluate(P("z^2 + w^3"), {0.0, -1.0}) - Complex(-1.0)) < 1e-15);
    std::mt19937_64 rng(14);
    std::normal_distribution<double> normal;
    for (int n = 0; n < 100; ++n) {
        std::array<double, 4> v{normal(rng), normal(rng), normal(rng), normal(rng)};
        const double len = std::hypot(std::hypot(v[0], v[1]), std::hypot(v[2], v[3]));
        const PointC2 x{{v[0] / len, v[1] / len}, {v[2] / len, v[3] / len}};
        CHECK(std::abs(evaluate(sphere_rho(), x)) < 1e-12);
    }
    for (int n = 0; n < 100; ++n) {
        const Polynomial p = testing::random_poly(rng, 4);
        const Polynomial q = testing::random_poly(rng, 4);
        const PointC2 x = testing::random_c2_point(rng, 1.4);
        const Complex a = evaluate(p, x);
        const Complex b = evaluate(q, x);
        const double scale = 1.0 + std::abs(a) * std::abs(b);
        CHECK(std::abs(evaluate(p * q, x) - a * b) < 1e-10 * scale);
        CHECK(std::abs(evaluate(p + q, x) - (a + b)) < 1e-10 * (1.0 + std::abs(a) + std::abs(b)));
    }
}

TEST_CASE("weight grading") {
    CHECK(weight(P("z zb")) == 2U);
    CHECK(weight(P("z^2 + w")) == 2U);
    CHECK(!weight(P("z + w")).has_value());
    CHECK(weight(parse_poly("z u", Form::HCoord)) == 3U);
    CHECK_THROWS_AS((void)weight(Polynomial()), Error);
}

TEST_CASE("substitution") {
    const Polynomial z = P("z");
    CHECK(substitute(P("z^2"), {{Var::z, P("z + 1")}}) == P("z^2 + 2 z + 1"));
    const Substitution id{{Var::z, P("z")}, {Var::zb, P("zb")}, {Var::w, P("w")}, {Var::wb, P("wb")}};
    std::mt19937_64 rng(15);
    const Substitution sigma{{Var::z, P("z + w")},
                             {Var::zb, P("zb + wb")},
                             {Var::w, P("(1/2) z - i")},
                             {Var::wb, P("(1/2) zb + i")}};
    for (int n = 0; n < 50; ++n) {
        const Polynomial p = testing::random_poly(rng, 4);
        CHECK(substitute(p, id) == p);
        const PointC2 x = testing::random_c2_point(rng);
        const PointC2 sx{x.z + x.w, 0.5 * x.z - Complex(0, 1)};
        const Complex direct = evaluate(p, sx);
        CHECK(std::abs(evaluate(substitute(p, sigma), x) - direct) < 1e-10 * (1.0 + std::abs(direct)));
    }
    CHECK(kind_of([&] { (void)substitute(P("z w"), {{Var::z, z}}); }) == ErrorKind::InvalidArgument);
}

TEST_CASE("coordinate changes between C^2 and the Heisenberg group") {
    CHECK(to_ambient(parse_poly("u", Form::HCoord)) == P("(1/2) w + (1/2) wb"));
    CHECK(to_ambient(parse_poly("z u^2", Form::HCoord)) ==
          P("(1/4) z w^2 + (1/2) z w wb + (1/4) z wb^2"));
    CHECK(to_h_coords(P("w")) == parse_poly("u + i z zb", Form::HCoord));
    CHECK(to_h_coords(P("w wb")) == parse_poly("u^2 + z^2 zb^2", Form::HCoord));
    CHECK(to_h_coords(heisenberg_rho()).is_zero());

    std::mt19937_64 rng(16);
    for (int n = 0; n < 50; ++n) {
        const Polynomial p = testing::random_poly(rng, 4);
        const Polynomial h = to_h_coords(p);
        const Polynomial back = to_ambient(h);
        for (int s = 0; s < 5; ++s) {
            const PointC2 x = testing::random_h_point(rng);
            const Complex ref = evaluate(p, x);
            const double tol = 1e-10 * (1.0 + std::abs(ref));
            CHECK(std::abs(evaluate_h(h, x.z, x.w.real()) - ref) < tol);
            CHECK(std::abs(evaluate(back, x) - ref) < tol);
        }
        // Exactly: H-form -> ambient -> H-form is the identity.
        CHECK(to_h_coords(to_ambient(h)) == h);
    }
}

TEST_CASE("linear division") {
    const Polynomial p = P("w - 1") * P("z + wb^2");
    const auto q = divide_linear(p, Var::w, GaussianRational(1));
    REQUIRE(q.has_value());
    CHECK(*q == P("z + wb^2"));
    CHECK(!divide_linear(P("w + z"), Var::w, GaussianRational(1)).has_value());
    const auto r = divide_linear(P("wb^2 + 1"), Var::wb, GaussianRational::i());
    REQUIRE(r.has_value());
    CHECK(*r == P("wb + i"));
}

TEST_CASE("real polynomials") {
    RealPolynomial x1;
    x1.add_term(1, {1, 0, 0, 0});
    CHECK(from_real(x1) == P("(1/2) z + (1/2) zb"));

    RealPolynomial r2;
    r2.add_term(1, {2, 0, 0, 0});
    r2.add_term(1, {0, 2, 0, 0});
    CHECK(from_real(r2) == P("z zb"));

    RealPolynomial sphere = r2;
    sphere.add_term(1, {0, 0, 2, 0});
    sphere.add_term(1, {0, 0, 0, 2});
    sphere.add_term(-1, {0, 0, 0, 0});
    CHECK(from_real(sphere) == sphere_rho());

    RealPolynomial mixed;
    mixed.add_term(Rational(3, 2), {1, 2, 0, 1});
    mixed.add_term(-2, {0, 0, 3, 0});
    std::mt19937_64 rng(17);
    for (int n = 0; n < 20; ++n) {
        const PointC2 x = testing::random_c2_point(rng);
        const double v = mixed.evaluate({x.z.real(), x.z.imag(), x.w.real(), x.w.imag()});
        CHECK(std::abs(evaluate(from_real(mixed), x) - Complex(v)) < 1e-12);
    }
}
