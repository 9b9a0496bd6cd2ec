#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>

#include <Eigen/Eigenvalues>
#include <Eigen/Householder>
#include <Eigen/QR>
#include <Eigen/SVD>

#include "ctknot/error.hpp"
#include "ctknot/numgeom.hpp"

namespace ctknot {

const char* to_string(SurfaceKind kind) {
    return kind == SurfaceKind::Sphere ? "sphere" : "heisenberg";
}

SurfaceKind surface_kind_from_string(const std::string& name) {
    if (name == "sphere") return SurfaceKind::Sphere;
    if (name == "heisenberg") return SurfaceKind::Heisenberg;
    throw Error(ErrorKind::InvalidArgument, "unknown surface '" + name + "'");
}

SurfaceSpec SurfaceSpec::sphere() { return {SurfaceKind::Sphere, sphere_rho()}; }
SurfaceSpec SurfaceSpec::heisenberg() { return {SurfaceKind::Heisenberg, heisenberg_rho()}; }
SurfaceSpec SurfaceSpec::of(SurfaceKind kind) {
    return kind == SurfaceKind::Sphere ? sphere() : heisenberg();
}

// Closed forms of the two built-in defining functions:
//   sphere      |z|^2 + |w|^2 - 1
//   heisenberg  i(wb - w) - 2 z zb = 2 Im w - 2|z|^2
double rho_value(const SurfaceSpec& s, const PointC2& x) {
    if (s.kind == SurfaceKind::Sphere) return std::norm(x.z) + std::norm(x.w) - 1.0;
    return 2.0 * x.w.imag() - 2.0 * std::norm(x.z);
}

Vec4 rho_gradient(const SurfaceSpec& s, const PointC2& x) {
    if (s.kind == SurfaceKind::Sphere) return 2.0 * to_r4(x);
    return {-4.0 * x.z.real(), -4.0 * x.z.imag(), 0.0, 2.0};
}

std::vector<PointC2> sample_surface(const SurfaceSpec& s, std::size_t n, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::vector<PointC2> out;
    out.reserve(n);
    if (s.kind == SurfaceKind::Sphere) {
        std::normal_distribution<double> normal;
        while (out.size() < n) {
            Vec4 v(normal(rng), normal(rng), normal(rng), normal(rng));
            const double len = v.norm();
            if (len < 1e-9) continue;
            out.push_back(from_r4(v / len));
        }
        return out;
    }
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    for (std::size_t i = 0; i < n; ++i) {
        const double radius = 2.0 * std::sqrt(unit(rng));
        const double angle = 2.0 * std::numbers::pi * unit(rng);
        const double u = -2.0 + 4.0 * unit(rng);
        const Complex z = std::polar(radius, angle);
        out.push_back({z, Complex(u, std::norm(z))});
    }
    return out;
}

TangentFrame tangent_frame(const SurfaceSpec& s, const Field& f, const PointC2& x) {
    if (std::abs(rho_value(s, x)) >= 1e-8) {
        throw Error(ErrorKind::OffSurface, "tangent_frame: point is not on the surface");
    }
    const Vec4 grad = rho_gradient(s, x);
    if (grad.norm() < 1e-14) {
        throw Error(ErrorKind::DegenerateFrame, "tangent_frame: defining function has zero gradient");
    }
    const Eigen::Matrix<double, 4, 1> normal = grad.normalized();
    const Eigen::HouseholderQR<Eigen::Matrix<double, 4, 1>> qr(normal);
    const Eigen::Matrix4d Q = qr.householderQ();

    TangentFrame frame;
    frame.point = x;
    frame.surface_basis = Q.rightCols<3>();
    frame.basis.topRows<4>() = frame.surface_basis;
    frame.basis.bottomRows<2>() = real_jacobian(f.jet(x)) * frame.surface_basis;
    return frame;
}

TangentFrame rebase(const TangentFrame& frame, const Eigen::Matrix3d& change) {
    TangentFrame out = frame;
    out.surface_basis = frame.surface_basis * change;
    out.basis = frame.basis * change;
    return out;
}

double tangency_defect(const TangentFrame& frame) {
    using Mat63 = Eigen::Matrix<double, 6, 3>;
    Mat63 B = frame.basis;
    for (int c = 0; c < 3; ++c) {
        const double n = B.col(c).norm();
        if (!(n > 0.0) || !std::isfinite(n)) {
            throw Error(ErrorKind::DegenerateFrame, "tangency_defect: zero or non-finite basis column");
        }
        B.col(c) /= n;
    }
    // Smallest singular value of B from the eigenvalues of its Gram matrix.
    const Eigen::SelfAdjointEigenSolver<Eigen::Matrix3d> gram(B.transpose() * B, Eigen::EigenvaluesOnly);
    if (std::sqrt(std::max(gram.eigenvalues()(0), 0.0)) <= 1e-8) {
        throw Error(ErrorKind::DegenerateFrame, "tangency_defect: frame basis is rank deficient");
    }
    // Orthonormalize so the result depends on the plane, not on the basis.
    const Eigen::HouseholderQR<Mat63> qr(B);
    const Mat63 Qb = qr.householderQ() * Mat63::Identity();
    Mat63 JQ;
    for (int pair = 0; pair < 3; ++pair) {
        JQ.row(2 * pair) = -Qb.row(2 * pair + 1);
        JQ.row(2 * pair + 1) = Qb.row(2 * pair);
    }
    Eigen::Matrix<double, 6, 6> M;
    M << Qb, JQ;
    const Eigen::JacobiSVD<Eigen::Matrix<double, 6, 6>> svd(M);
    return svd.singularValues()(5);
}

}  // namespace ctknot
