#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include <Eigen/Geometry>
#include <Eigen/Householder>
#include <Eigen/QR>
#include <Eigen/SVD>

#include "ctknot/error.hpp"
#include "ctknot/numgeom.hpp"

namespace ctknot {

namespace {

using Mat34 = Eigen::Matrix<double, 3, 4>;

struct System {
    Eigen::Vector3d residual;
    Mat34 jacobian;
};

System evaluate_system(const SurfaceSpec& s, const Field& g, const PointC2& x) {
    const Jet jet = g.jet(x);
    System sys;
    sys.residual << rho_value(s, x), jet.value.real(), jet.value.imag();
    sys.jacobian.row(0) = rho_gradient(s, x).transpose();
    sys.jacobian.bottomRows<2>() = real_jacobian(jet);
    return sys;
}

}  // namespace

PointC2 project_to_variety(const SurfaceSpec& s, const Field& g, const PointC2& x0, double tol,
                           int max_iterations) {
    Vec4 x = to_r4(x0);
    for (int it = 0; it <= max_iterations; ++it) {
        const PointC2 p = from_r4(x);
        const System sys = evaluate_system(s, g, p);
        if (!sys.residual.allFinite()) break;
        if (sys.residual.norm() < tol) return p;
        if (it == max_iterations) break;

        const Eigen::JacobiSVD<Mat34> svd(sys.jacobian, Eigen::ComputeFullU | Eigen::ComputeFullV);
        const auto& sv = svd.singularValues();
        if (!(sv(2) > 1e-12 * std::max(1.0, sv(0)))) {
            throw Error(ErrorKind::RankDeficientJacobian,
                        "project_to_variety: Jacobian lost rank near " + std::to_string(x.norm()));
        }
        Vec4 dx = svd.solve(-sys.residual);
        // Cap the step so far-off seeds do not jump across the surface.
        const double cap = 1.0 + 0.5 * x.norm();
        if (dx.norm() > cap) dx *= cap / dx.norm();
        x += dx;
    }
    throw Error(ErrorKind::NonConvergence, "project_to_variety: no convergence within " +
                                               std::to_string(max_iterations) + " iterations");
}

Vec4 curve_tangent(const SurfaceSpec& s, const Field& g, const PointC2& x) {
    const System sys = evaluate_system(s, g, x);
    const Eigen::JacobiSVD<Mat34> svd(sys.jacobian, Eigen::ComputeFullV);
    const auto& sv = svd.singularValues();
    if (!(sv(2) > 1e-10 * std::max(1.0, sv(0)))) {
        throw Error(ErrorKind::SingularPoint, "curve_tangent: Jacobian rank drop");
    }
    return svd.matrixV().col(3).normalized();
}

std::size_t TracedCurve::closed_count() const {
    return static_cast<std::size_t>(
        std::count_if(components.begin(), components.end(), [](const auto& c) { return c.closed; }));
}

namespace {

void orient_first_nonzero(Vec4& t) {
    for (int i = 0; i < 4; ++i) {
        if (std::abs(t[i]) > 1e-12) {
            if (t[i] < 0) t = -t;
            return;
        }
    }
}

struct March {
    std::vector<Vec4> points;
    bool closed = false;
    bool truncated = false;
};

class Tracer {
public:
    Tracer(const SurfaceSpec& s, const Field& g, const TraceOptions& opts)
        : s_(s), g_(g), opts_(opts) {}

    March march(const Vec4& start, Vec4 dir) const {
        March out;
        out.points.push_back(start);
        Vec4 x = start;
        for (std::size_t n = 1; n <= opts_.max_steps; ++n) {
            Vec4 next;
            Vec4 next_dir;
            if (!advance(x, dir, next, next_dir)) {
                out.truncated = true;
                return out;
            }
            if (n >= opts_.min_closure_steps && (next - start).norm() < 2.0 * opts_.step) {
                if ((next - start).norm() >= 0.5 * opts_.step) out.points.push_back(next);
                out.closed = true;
                return out;
            }
            out.points.push_back(next);
            if (next.cwiseAbs().maxCoeff() > opts_.bound) return out;
            x = next;
            dir = next_dir;
        }
        return out;
    }

private:
    /// Predictor along dir, Gauss-Newton corrector; halves the step on failure.
    bool advance(const Vec4& x, const Vec4& dir, Vec4& next, Vec4& next_dir) const {
        double h = opts_.step;
        for (int attempt = 0; attempt < 6; ++attempt, h *= 0.5) {
            try {
                const PointC2 p = project_to_variety(s_, g_, from_r4(x + h * dir), opts_.tol);
                const Vec4 candidate = to_r4(p);
                const double dist = (candidate - x).norm();
                if (dist > 2.0 * opts_.step || dist < 0.1 * h) continue;
                Vec4 t = curve_tangent(s_, g_, p);
                if (t.dot(dir) < 0) t = -t;
                if (t.dot(dir) < 0.5) continue;
                next = candidate;
                next_dir = t;
                return true;
            } catch (const Error&) {
                continue;
            }
        }
        return false;
    }

    const SurfaceSpec& s_;
    const Field& g_;
    const TraceOptions& opts_;
};

double min_distance(const Vec4& x, const std::vector<CurveComponent>& comps) {
    double best = std::numeric_limits<double>::infinity();
    for (const auto& c : comps) {
        for (const auto& p : c.points) best = std::min(best, (p - x).norm());
    }
    return best;
}

}  // namespace

TracedCurve trace_curve(const SurfaceSpec& s, const Field& g, const TraceOptions& opts) {
    if (!(opts.step > 0.0)) throw Error(ErrorKind::InvalidArgument, "trace step must be positive");
    TracedCurve curve;
    curve.surface = to_string(s.kind);
    curve.polynomial = g.describe();
    curve.step = opts.step;
    curve.seed = opts.seed;

    const Tracer tracer(s, g, opts);
    const auto seeds = sample_surface(s, opts.seeds, opts.seed);
    for (const PointC2& seed : seeds) {
        PointC2 start;
        try {
            start = project_to_variety(s, g, seed, opts.tol);
        } catch (const Error&) {
            continue;
        }
        const Vec4 x0 = to_r4(start);
        if (min_distance(x0, curve.components) < 5.0 * opts.step) continue;

        Vec4 dir;
        try {
            dir = curve_tangent(s, g, start);
        } catch (const Error&) {
            continue;
        }
        orient_first_nonzero(dir);

        March forward = tracer.march(x0, dir);
        CurveComponent comp;
        if (forward.closed) {
            comp.points = std::move(forward.points);
            comp.closed = true;
        } else {
            March backward = tracer.march(x0, -dir);
            comp.points.assign(backward.points.rbegin(), backward.points.rend());
            comp.points.insert(comp.points.end(), forward.points.begin() + 1, forward.points.end());
            comp.truncated = forward.truncated || backward.truncated;
        }
        if (comp.points.size() >= 2) curve.components.push_back(std::move(comp));
    }
    if (curve.components.empty()) {
        throw Error(ErrorKind::NoCurveFound, "trace_curve: no seed reached the zero set of " +
                                                 g.describe());
    }
    return curve;
}

namespace {

/// Orthonormal basis of the hyperplane orthogonal to the unit vector p.
Eigen::Matrix<double, 4, 3> complement_basis(const Vec4& p) {
    const Eigen::HouseholderQR<Eigen::Matrix<double, 4, 1>> qr(p);
    const Eigen::Matrix4d Q = qr.householderQ();
    return Q.rightCols<3>();
}

}  // namespace

std::vector<Vec3> stereo_project(const std::vector<Vec4>& points, const PointC2& pole) {
    const Vec4 p = to_r4(pole).normalized();
    const auto E = complement_basis(p);
    std::vector<Vec3> out;
    out.reserve(points.size());
    for (const Vec4& x : points) {
        if ((x - p).norm() < 1e-3) {
            throw Error(ErrorKind::PoleTooClose, "stereo_project: point within 1e-3 of the pole");
        }
        out.push_back(E.transpose() * x / (1.0 - x.dot(p)));
    }
    return out;
}

Vec4 stereo_unproject(const Vec3& y, const PointC2& pole) {
    const Vec4 p = to_r4(pole).normalized();
    const auto E = complement_basis(p);
    const double s = y.squaredNorm();
    return (2.0 * (E * y) + (s - 1.0) * p) / (s + 1.0);
}

PointC2 choose_pole(const std::vector<Vec4>& points, std::size_t candidates, std::uint64_t seed) {
    const auto options = sample_surface(SurfaceSpec::sphere(), candidates, seed);
    PointC2 best = options.front();
    double best_dist = -1.0;
    for (const PointC2& c : options) {
        const Vec4 v = to_r4(c);
        double d = std::numeric_limits<double>::infinity();
        for (const Vec4& x : points) d = std::min(d, (x - v).norm());
        if (d > best_dist) {
            best_dist = d;
            best = c;
        }
    }
    return best;
}

namespace {

double max_segment(const Polyline3& c) {
    double m = 0.0;
    for (std::size_t i = 0; i < c.points.size(); ++i) {
        const std::size_t j = (i + 1) % c.points.size();
        m = std::max(m, (c.points[j] - c.points[i]).norm());
    }
    return m;
}

}  // namespace

double linking_number(const Polyline3& a, const Polyline3& b) {
    if (!a.closed || !b.closed) throw Error(ErrorKind::OpenCurve, "linking_number needs closed curves");
    if (a.points.size() < 3 || b.points.size() < 3) {
        throw Error(ErrorKind::OpenCurve, "linking_number needs at least three points per curve");
    }
    const double step = std::max(max_segment(a), max_segment(b));
    double sep = std::numeric_limits<double>::infinity();
    for (const Vec3& p : a.points) {
        for (const Vec3& q : b.points) sep = std::min(sep, (p - q).norm());
    }
    if (!(sep > 10.0 * step)) {
        throw Error(ErrorKind::CurvesTooClose, "linking_number: curves closer than 10x segment length");
    }

    auto segments = [](const Polyline3& c) {
        std::vector<std::pair<Vec3, Vec3>> out;  // midpoint, direction
        const std::size_t n = c.points.size();
        out.reserve(n);
        for (std::size_t i = 0; i < n; ++i) {
            const Vec3& p = c.points[i];
            const Vec3& q = c.points[(i + 1) % n];
            out.emplace_back(0.5 * (p + q), q - p);
        }
        return out;
    };
    const auto sa = segments(a);
    const auto sb = segments(b);
    double sum = 0.0;
    for (const auto& [ma, da] : sa) {
        for (const auto& [mb, db] : sb) {
            const Vec3 r = ma - mb;
            const double d = r.norm();
            sum += r.dot(da.cross(db)) / (d * d * d);
        }
    }
    return sum / (4.0 * std::numbers::pi);
}

Vec3 heisenberg_chart(const Vec4& x) {
    return {x[0], x[1], x[2]};
}

double hausdorff_distance(const std::vector<Vec4>& a, const std::vector<Vec4>& b) {
    auto directed = [](const std::vector<Vec4>& from, const std::vector<Vec4>& to) {
        double worst = 0.0;
        for (const Vec4& p : from) {
            double best = std::numeric_limits<double>::infinity();
            for (const Vec4& q : to) best = std::min(best, (p - q).squaredNorm());
            worst = std::max(worst, best);
        }
        return std::sqrt(worst);
    };
    return std::max(directed(a, b), directed(b, a));
}

}  // namespace ctknot
