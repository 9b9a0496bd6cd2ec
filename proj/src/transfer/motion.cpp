#include "ctknot/error.hpp"
#include "ctknot/transfer.hpp"

namespace ctknot {

RigidMotionH RigidMotionH::translation(const GaussianRational& a, const Rational& t) {
    RigidMotionH m;
    m.a = a;
    m.t = t;
    return m;
}

RigidMotionH RigidMotionH::rotation(const RationalMatrix3& R) {
    RigidMotionH m;
    m.R = R;
    return m;
}

bool RigidMotionH::is_orthogonal() const {
    for (int r = 0; r < 3; ++r) {
        for (int c = 0; c < 3; ++c) {
            Rational dot = 0;
            for (int k = 0; k < 3; ++k) dot += R[k][r] * R[k][c];
            if (dot != (r == c ? 1 : 0)) return false;
        }
    }
    return true;
}

PointC2 RigidMotionH::apply(const PointC2& x) const {
    const double p[3] = {x.z.real(), x.z.imag(), x.w.real()};
    const double shift[3] = {a.re().get_d(), a.im().get_d(), t.get_d()};
    double q[3];
    for (int r = 0; r < 3; ++r) {
        q[r] = shift[r];
        for (int c = 0; c < 3; ++c) q[r] += R[r][c].get_d() * p[c];
    }
    const Complex z(q[0], q[1]);
    return {z, Complex(q[2], std::norm(z))};
}

RigidMotionH compose(const RigidMotionH& outer, const RigidMotionH& inner) {
    RigidMotionH m;
    const Rational ci[3] = {inner.a.re(), inner.a.im(), inner.t};
    const Rational co[3] = {outer.a.re(), outer.a.im(), outer.t};
    Rational c[3];
    for (int r = 0; r < 3; ++r) {
        c[r] = co[r];
        for (int k = 0; k < 3; ++k) c[r] += outer.R[r][k] * ci[k];
        for (int col = 0; col < 3; ++col) {
            Rational s = 0;
            for (int k = 0; k < 3; ++k) s += outer.R[r][k] * inner.R[k][col];
            m.R[r][col] = s;
        }
    }
    m.a = GaussianRational(c[0], c[1]);
    m.t = c[2];
    return m;
}

Polynomial move_knot(const Polynomial& g, const RigidMotionH& motion) {
    if (!motion.is_orthogonal()) {
        throw Error(ErrorKind::NotOrthogonal, "motion matrix is not orthogonal");
    }
    const Form H = Form::HCoord;
    const Polynomial z = Polynomial::variable(Var::z, H);
    const Polynomial zb = Polynomial::variable(Var::zb, H);
    const Polynomial u = Polynomial::variable(Var::u, H);

    // Chart coordinates shifted by the translation: Q = P - c.
    const GaussianRational half(Rational(1, 2));
    const GaussianRational minus_half_i(0, Rational(-1, 2));
    const Polynomial Q[3] = {
        (z + zb) * half - Polynomial::constant(GaussianRational(motion.a.re()), H),
        (z - zb) * minus_half_i - Polynomial::constant(GaussianRational(motion.a.im()), H),
        u - Polynomial::constant(GaussianRational(motion.t), H)};

    // Inverse motion R^T Q.
    Polynomial back[3] = {Polynomial(H), Polynomial(H), Polynomial(H)};
    for (int r = 0; r < 3; ++r) {
        for (int k = 0; k < 3; ++k) back[r] += Q[k] * GaussianRational(motion.R[k][r]);
    }
    const Polynomial iy = back[1] * GaussianRational::i();
    const Polynomial moved = substitute(
        to_h_coords(g), {{Var::z, back[0] + iy}, {Var::zb, back[0] - iy}, {Var::u, back[2]}});
    return to_ambient(moved);
}

}  // namespace ctknot
