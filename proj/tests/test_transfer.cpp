#include <doctest.h>

#include "ctknot/cr.hpp"
#include "ctknot/error.hpp"
#include "ctknot/numgeom.hpp"
#include "ctknot/transfer.hpp"
#include "support.hpp"

using namespace ctknot;
using ctknot::testing::P;

namespace {

const Complex I(0.0, 1.0);

double dist(const PointC2& a, const PointC2& b) { return std::abs(a.z - b.z) + std::abs(a.w - b.w); }

/// Sphere point at distance roughly eps from the pole (0,1), |1 - w| = eps.
PointC2 near_pole(double eps, double theta = 0.3) {
    const double s = std::sqrt(eps * (2.0 - eps));
    return {std::polar(s, theta), 1.0 - eps};
}

RationalMatrix3 pythagorean_z() {
    return {{{Rational(3, 5), Rational(-4, 5), 0}, {Rational(4, 5), Rational(3, 5), 0}, {0, 0, 1}}};
}

RationalMatrix3 pythagorean_tilt() {
    // Rotation in the (y, u) plane by the 5-12-13 angle.
    return {{{1, 0, 0}, {0, Rational(5, 13), Rational(-12, 13)}, {0, Rational(12, 13), Rational(5, 13)}}};
}

}  // namespace

TEST_CASE("Cayley maps") {
    CHECK(dist(phi({0.0, 0.0}), {0.0, -1.0}) < 1e-15);
    const PointC2 back = psi({0.0, -1.0});
    CHECK(dist(back, {0.0, 0.0}) < 1e-15);
    CHECK(std::abs(back.w.imag() - std::norm(back.z)) < 1e-15);

    std::mt19937_64 rng(31);
    for (int n = 0; n < 100; ++n) {
        const PointC2 x = testing::random_h_point(rng);
        const PointC2 y = phi(x);
        CHECK(std::abs(std::norm(y.z) + std::norm(y.w) - 1.0) < 1e-12);
        CHECK(dist(psi(y), x) < 1e-10);
    }
    CHECK_THROWS_AS((void)phi({0.0, -I}), Error);
    try {
        (void)psi({0.0, 1.0});
        FAIL("pole accepted");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::PoleHit);
    }
}

TEST_CASE("pullback numerators") {
    Pullback pb = pullback_numerator(P("z"));
    CHECK(pb.q == P("2 z"));
    CHECK(pb.M == 1);
    CHECK(pb.N == 0);

    pb = pullback_numerator(P("w"));
    CHECK(pb.q == P("w - i"));
    CHECK(pb.M == 1);
    CHECK(pb.N == 0);

    pb = pullback_numerator(P("zb"));
    CHECK(pb.q == P("2 zb"));
    CHECK(pb.M == 0);
    CHECK(pb.N == 1);

    pb = pullback_numerator(P("7"));
    CHECK(pb.q == P("7"));
    CHECK(pb.M + pb.N == 0);

    // Common (w+i) factors are divided back out: 1 + (w-i)/(w+i) = 2w/(w+i).
    pb = pullback_numerator(P("1 + w"));
    CHECK(pb.q == P("2 w"));
    CHECK(pb.M == 1);
}

TEST_CASE("pullback identity holds numerically") {
    std::mt19937_64 rng(32);
    for (int n = 0; n < 30; ++n) {
        const Polynomial p = testing::random_poly(rng, 4);
        const Pullback pb = pullback_numerator(p);
        for (int s = 0; s < 10; ++s) {
            const PointC2 x = testing::random_h_point(rng);
            const Complex lhs = evaluate(p, phi(x)) * int_pow(I + x.w, static_cast<int>(pb.M)) *
                                int_pow(std::conj(x.w) - I, static_cast<int>(pb.N));
            const Complex q = evaluate(pb.q, x);
            CHECK(std::abs(lhs - q) < 1e-9 * std::max(1.0, std::abs(q)));
        }
    }
}

TEST_CASE("pullback zero sets correspond") {
    const Polynomial p = P("z^2 + w^3");
    const Pullback pb = pullback_numerator(p);
    const SurfaceSpec h = SurfaceSpec::heisenberg();
    const PolyField qf(pb.q);
    int found = 0;
    for (const PointC2& seed : sample_surface(h, 40, 3)) {
        PointC2 x;
        try {
            x = project_to_variety(h, qf, seed);
        } catch (const Error&) {
            continue;
        }
        ++found;
        CHECK(std::abs(evaluate(p, phi(x))) < 1e-6);
    }
    CHECK(found > 10);

    // Conversely, trefoil points on S^3 pull back into {q = 0}.
    const PolyField pf(p);
    const SurfaceSpec s = SurfaceSpec::sphere();
    for (const PointC2& seed : sample_surface(s, 20, 4)) {
        const PointC2 y = project_to_variety(s, pf, seed);
        CHECK(std::abs(evaluate(pb.q, psi(y))) < 1e-6 * std::max(1.0, std::norm(psi(y).w)));
    }
}

TEST_CASE("transfer to the sphere") {
    const PuncturedRational t = transfer_to_sphere(P("zb"), 2);
    CHECK(t.num == P("-i zb"));
    CHECK(t.alpha == 4);
    CHECK(t.beta == -1);

    const PuncturedRational c = transfer_to_sphere(P("3/2 - i"), 2);
    CHECK(c.num == P("3/2 - i"));
    CHECK(c.alpha == 2);
    CHECK(c.beta == 0);

    try {
        (void)transfer_to_sphere(P("zb"), 1);
        FAIL("r = 1 accepted");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::InvalidArgument);
    }

    // Two-path oracle: (1-w)^(2n+r) f(psi(x)).
    std::mt19937_64 rng(33);
    const SurfaceSpec s = SurfaceSpec::sphere();
    for (int n = 0; n < 20; ++n) {
        const Polynomial f = testing::random_poly(rng, 4);
        const int r = 2 + n % 3;
        const PuncturedRational g = transfer_to_sphere(f, r);
        const int deg = std::max(f.degree(), 0);
        CHECK(g.alpha >= r);
        CHECK(g.beta >= -deg);
        for (const PointC2& x : sample_surface(s, 5, 100 + n)) {
            if (std::abs(1.0 - x.w) < 0.2) continue;
            const Complex ref = int_pow(1.0 - x.w, 2 * deg + r) * evaluate(f, psi(x));
            CHECK(std::abs(evaluate(g, x) - ref) < 1e-9 * std::max(1.0, std::abs(ref)));
        }
    }
}

TEST_CASE("transfer is flat at the pole") {
    std::mt19937_64 rng(34);
    for (int n = 0; n < 10; ++n) {
        const Polynomial f = testing::random_poly(rng, 3);
        for (int r : {2, 3}) {
            const PuncturedField g(transfer_to_sphere(f, r));
            const double far = std::abs(g.value_near_pole(near_pole(1e-1).z, 1e-1));
            const double near = std::abs(g.value_near_pole(near_pole(1e-4).z, 1e-4));
            // C |1-w|^r with C fixed by the far value (plus slack for the constant).
            CHECK(near <= 1e3 * std::max(far, 1e-300) * std::pow(1e-3, r) + 1e-300);
        }
    }
}

TEST_CASE("punctured CR image") {
    const PuncturedRational g{P("-i zb"), 4, -1};
    const PuncturedRational lg = apply_cr_punctured(g);
    CHECK(lg.alpha == 4);

    // Oracle: finite differences of g along the antiholomorphic directions.
    const testing::ComplexFn fn = [&](const PointC2& x) { return evaluate(g, x); };
    std::mt19937_64 rng(35);
    for (const PointC2& x : sample_surface(SurfaceSpec::sphere(), 30, 9)) {
        if (std::abs(1.0 - x.w) < 0.2) continue;
        const Complex numeric = x.w * testing::d_zb(fn, x) - x.z * testing::d_wb(fn, x);
        CHECK(std::abs(evaluate(lg, x) - numeric) < 1e-6);
    }

    for (int n = 0; n < 10; ++n) {
        const PuncturedRational t = transfer_to_sphere(testing::random_poly(rng, 3), 2);
        const PuncturedRational lt = apply_cr_punctured(t);
        CHECK((lt.num.is_zero() || lt.alpha >= t.alpha));
        const testing::ComplexFn tf = [&](const PointC2& x) { return evaluate(t, x); };
        for (const PointC2& x : sample_surface(SurfaceSpec::sphere(), 10, 50 + n)) {
            if (std::abs(1.0 - x.w) < 0.3) continue;
            const Complex numeric = x.w * testing::d_zb(tf, x) - x.z * testing::d_wb(tf, x);
            CHECK(std::abs(evaluate(lt, x) - numeric) < 1e-5 * std::max(1.0, std::abs(numeric)));
        }
    }

    CHECK(apply_cr_punctured({P("z^2 + w"), 3, 0}).num.is_zero());

    for (int n = 0; n < 20; ++n) {
        const Polynomial p = testing::random_poly(rng, 4);
        CHECK(apply_cr_punctured(normalize({p, 0, 0})) ==
              normalize({apply_cr(CROperator::sphere(), p), 0, 0}));
    }
}

TEST_CASE("normalization divides out pole factors") {
    const PuncturedRational g = normalize({P("z - z w"), 0, 0});
    CHECK(g.num == P("z"));
    CHECK(g.alpha == 1);
    CHECK(g.beta == 0);
    const PuncturedRational h = normalize({P("1 - wb").pow(2) * P("1 - w") * P("zb"), 1, -5});
    CHECK(h.num == P("zb"));
    CHECK(h.alpha == 2);
    CHECK(h.beta == -3);
    CHECK(normalize({Polynomial(), 4, 2}) == PuncturedRational{});
}

TEST_CASE("knot motions") {
    CHECK(move_knot(P("z"), RigidMotionH::translation(GaussianRational(1), 0)) == P("z - 1"));
    CHECK(move_knot(P("z^2 + w^3"), RigidMotionH{}) == to_ambient(to_h_coords(P("z^2 + w^3"))));
    const RationalMatrix3 quarter{{{0, -1, 0}, {1, 0, 0}, {0, 0, 1}}};
    CHECK(move_knot(P("z"), RigidMotionH::rotation(quarter)) == P("-i z"));

    RationalMatrix3 bad = quarter;
    bad[0][0] = 1;
    try {
        (void)move_knot(P("z"), RigidMotionH::rotation(bad));
        FAIL("non-orthogonal matrix accepted");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::NotOrthogonal);
    }
}

TEST_CASE("moved zero sets follow the motion") {
    const std::vector<RigidMotionH> motions = {
        RigidMotionH::translation(GaussianRational(Rational(1, 2), Rational(-1, 3)), Rational(3, 4)),
        RigidMotionH::rotation(pythagorean_z()),
        compose(RigidMotionH::translation(GaussianRational(0, 1), Rational(-1, 2)),
                RigidMotionH::rotation(pythagorean_tilt()))};
    const SurfaceSpec h = SurfaceSpec::heisenberg();
    for (const RigidMotionH& m : motions) {
        for (const char* text : {"z - 1/3", "z^2 + w - 1/2 i", "z w + 1/4"}) {
            const Polynomial g = P(text);
            const Polynomial moved = move_knot(g, m);
            CHECK(to_h_coords(moved).degree() == to_h_coords(g).degree());
            const PolyField gf(g);
            int found = 0;
            for (const PointC2& seed : sample_surface(h, 40, 5)) {
                PointC2 x;
                try {
                    x = project_to_variety(h, gf, seed);
                } catch (const Error&) {
                    continue;
                }
                ++found;
                CHECK(std::abs(evaluate(moved, m.apply(x))) < 1e-8);
            }
            CHECK(found > 5);
        }
    }
}

TEST_CASE("composition of motions") {
    const RigidMotionH a = RigidMotionH::rotation(pythagorean_z());
    const RigidMotionH b = RigidMotionH::translation(GaussianRational(1, 2), Rational(1, 3));
    const RigidMotionH ab = compose(a, b);
    std::mt19937_64 rng(36);
    for (int n = 0; n < 20; ++n) {
        const PointC2 x = testing::random_h_point(rng);
        CHECK(dist(ab.apply(x), a.apply(b.apply(x))) < 1e-12);
    }
    CHECK(move_knot(P("z zb - w"), ab) == move_knot(move_knot(P("z zb - w"), b), a));
}

TEST_CASE("link products") {
    const std::vector<Polynomial> gs = {P("z"), P("w - i")};
    const Polynomial prod = link_product(gs);
    CHECK(prod == P("z w - i z"));
    CHECK(std::abs(evaluate(prod, {0.0, 3.0})) < 1e-15);
    CHECK(std::abs(evaluate(prod, {0.5, I})) < 1e-15);
    CHECK(std::abs(evaluate(prod, {0.5, 3.0})) > 0.1);
    const std::vector<Polynomial> one = {P("z^2 + w^3")};
    CHECK(link_product(one) == one.front());
    CHECK_THROWS_AS((void)link_product(std::span<const Polynomial>{}), Error);
}
