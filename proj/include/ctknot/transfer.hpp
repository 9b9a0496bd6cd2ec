#pragma once

#include <array>
#include <span>

#include "ctknot/polynomial.hpp"

namespace ctknot {

/// num * (1-w)^alpha * (1-wb)^beta, defined off {w = 1}. Kept normalized:
/// num is divisible by neither (1-w) nor (1-wb), and the zero function is
/// stored as num = 0 with both exponents 0.
struct PuncturedRational {
    Polynomial num{Form::Ambient};
    int alpha = 0;
    int beta = 0;

    friend bool operator==(const PuncturedRational&, const PuncturedRational&) = default;
};

PuncturedRational normalize(PuncturedRational g);
Complex evaluate(const PuncturedRational& g, const PointC2& x);

enum class MapDirection { phi, psi };

/// phi: Heisenberg group -> S^3 minus (0,1),  (z,w) -> (2z/(w+i), (w-i)/(w+i)).
/// psi: its inverse,                          (z,w) -> (iz/(1-w), i(1+w)/(1-w)).
/// Throws PoleHit within 1e-12 of the excluded point.
PointC2 eval_map(MapDirection dir, const PointC2& x);
inline PointC2 phi(const PointC2& x) { return eval_map(MapDirection::phi, x); }
inline PointC2 psi(const PointC2& x) { return eval_map(MapDirection::psi, x); }

/// p(phi(z,w)) = q(z,w) / ((w+i)^M (wb-i)^N).
struct Pullback {
    Polynomial q{Form::Ambient};
    unsigned M = 0;
    unsigned N = 0;
};

/// Denominators are cleared with the per-monomial maximum exponents, then any
/// common (w+i) / (wb-i) factor is divided back out of q.
Pullback pullback_numerator(const Polynomial& p);

/// (1-w)^(2n+r) * (f o psi) with n = deg f, as a normalized punctured rational.
/// Requires r >= 2.
PuncturedRational transfer_to_sphere(const Polynomial& f, int r);

/// Sphere CR operator w d/dzb - z d/dwb applied to a punctured rational:
///   L(N (1-w)^a (1-wb)^b) = (1-w)^a (1-wb)^(b-1) [ (1-wb) L(N) + b z N ].
PuncturedRational apply_cr_punctured(const PuncturedRational& g);

using RationalMatrix3 = std::array<std::array<Rational, 3>, 3>;

/// Rigid motion of the Heisenberg group through the chart (x, y, u) =
/// (Re z, Im z, Re w):  P -> R P + (Re a, Im a, t).
struct RigidMotionH {
    GaussianRational a;
    Rational t{0};
    RationalMatrix3 R{{{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}};

    static RigidMotionH translation(const GaussianRational& a, const Rational& t);
    static RigidMotionH rotation(const RationalMatrix3& R);

    bool is_orthogonal() const;
    /// Image of a Heisenberg point; the result is put back on the group.
    PointC2 apply(const PointC2& x) const;
};

/// outer o inner.
RigidMotionH compose(const RigidMotionH& outer, const RigidMotionH& inner);

/// Polynomial whose Heisenberg zero set is the image of g's under the motion.
Polynomial move_knot(const Polynomial& g, const RigidMotionH& motion);

Polynomial link_product(std::span<const Polynomial> gs);

}  // namespace ctknot
