#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include <Eigen/Core>

#include "ctknot/cr.hpp"
#include "ctknot/polynomial.hpp"
#include "ctknot/transfer.hpp"

namespace ctknot {

using Vec3 = Eigen::Vector3d;
using Vec4 = Eigen::Vector4d;

/// (Re z, Im z, Re w, Im w).
Vec4 to_r4(const PointC2& x);
PointC2 from_r4(const Vec4& v);

/// Value of a complex function and its four Wirtinger derivatives.
struct Jet {
    Complex value;
    Complex dz;
    Complex dzb;
    Complex dw;
    Complex dwb;
};

/// Real 2x4 Jacobian (rows Re, Im) with respect to (x1, x2, x3, x4).
Eigen::Matrix<double, 2, 4> real_jacobian(const Jet& jet);

/// Smooth complex-valued function on an open set of C^2, evaluated numerically.
class Field {
public:
    virtual ~Field() = default;
    virtual Jet jet(const PointC2& x) const = 0;
    virtual Complex value(const PointC2& x) const { return jet(x).value; }
    virtual std::string describe() const = 0;
};

/// Polynomial compiled to double coefficients.
class PolyField final : public Field {
public:
    explicit PolyField(const Polynomial& p);

    Jet jet(const PointC2& x) const override;
    Complex value(const PointC2& x) const override;
    std::string describe() const override { return text_; }

private:
    struct Term {
        Complex c;
        unsigned j, k, m, l;
    };
    std::vector<Term> terms_;
    unsigned max_[4] = {0, 0, 0, 0};
    std::string text_;
};

/// Punctured rational num (1-w)^alpha (1-wb)^beta. The numerator is stored
/// re-expanded around the pole in zeta = 1 - w, so values close to (0,1) do
/// not suffer cancellation.
class PuncturedField final : public Field {
public:
    explicit PuncturedField(const PuncturedRational& g);

    Jet jet(const PointC2& x) const override;
    Complex value(const PointC2& x) const override;
    /// Value at (z, w = 1 - zeta) with zeta given directly.
    Complex value_near_pole(Complex z, Complex zeta) const;
    std::string describe() const override { return text_; }

private:
    PolyField shifted_;
    int alpha_;
    int beta_;
    std::string text_;
};

/// Divides p by its largest coefficient component (exactly), leaving the zero set alone.
Polynomial unit_scaled(const Polynomial& p);

enum class SurfaceKind { Sphere, Heisenberg };

const char* to_string(SurfaceKind kind);
SurfaceKind surface_kind_from_string(const std::string& name);

struct SurfaceSpec {
    SurfaceKind kind;
    Polynomial rho;

    static SurfaceSpec sphere();
    static SurfaceSpec heisenberg();
    static SurfaceSpec of(SurfaceKind kind);

    CROperator cr_operator() const { return cr_from_rho(rho); }
};

double rho_value(const SurfaceSpec& s, const PointC2& x);
Vec4 rho_gradient(const SurfaceSpec& s, const PointC2& x);

/// Deterministic in the seed. Sphere: normalized 4D Gaussians. Heisenberg: z
/// uniform in the radius-2 disc, u uniform in [-2, 2], w = u + i|z|^2.
std::vector<PointC2> sample_surface(const SurfaceSpec& s, std::size_t n, std::uint64_t seed);

/// Tangent 3-plane of the graph x -> (x, f(x)) over the surface, in R^6.
/// `surface_basis` is an orthonormal basis of ker grad rho(x) in R^4 and
/// `basis` its pushforward (v, Df v).
struct TangentFrame {
    PointC2 point;
    Eigen::Matrix<double, 4, 3> surface_basis;
    Eigen::Matrix<double, 6, 3> basis;
};

TangentFrame tangent_frame(const SurfaceSpec& s, const Field& f, const PointC2& x);

/// Replaces the surface basis by another one spanning the same plane.
TangentFrame rebase(const TangentFrame& frame, const Eigen::Matrix3d& change);

/// Smallest singular value of [B | JB] with B an orthonormalized frame basis
/// and J multiplication by i on each coordinate pair. Zero exactly when the
/// tangent plane contains a complex line; lies in [0, 1].
double tangency_defect(const TangentFrame& frame);

/// Gauss-Newton on (rho, Re g, Im g) : R^4 -> R^3 with minimum-norm steps.
/// Returns a point with residual norm < tol; throws NonConvergence or
/// RankDeficientJacobian.
PointC2 project_to_variety(const SurfaceSpec& s, const Field& g, const PointC2& x0,
                           double tol = 1e-10, int max_iterations = 50);

struct TraceOptions {
    double step = 0.01;
    std::size_t seeds = 64;
    double tol = 1e-10;
    std::uint64_t seed = 0;
    std::size_t max_steps = 200000;
    /// Tracing stops once a coordinate exceeds this in absolute value
    /// (only reachable on the unbounded Heisenberg group).
    double bound = 10.0;
    std::size_t min_closure_steps = 10;
};

struct CurveComponent {
    std::vector<Vec4> points;
    bool closed = false;
    /// Set when the tracer met a rank drop and cut the component short.
    bool truncated = false;
};

struct TracedCurve {
    std::string surface;
    std::string polynomial;
    double step = 0.0;
    std::uint64_t seed = 0;
    std::vector<CurveComponent> components;

    std::size_t closed_count() const;
};

/// Predictor-corrector continuation of {g = 0} on the surface from projected
/// random seeds. Components are merged in seed order, so the output is
/// deterministic in opts.seed. Throws NoCurveFound when no seed projects.
TracedCurve trace_curve(const SurfaceSpec& s, const Field& g, const TraceOptions& opts = {});

/// Unit tangent of {rho = 0, g = 0} at x (kernel of the 3x4 Jacobian).
Vec4 curve_tangent(const SurfaceSpec& s, const Field& g, const PointC2& x);

/// Stereographic projection of S^3 minus `pole` onto the 3-space orthogonal
/// to the pole; the antipode goes to the origin.
std::vector<Vec3> stereo_project(const std::vector<Vec4>& points, const PointC2& pole);
Vec4 stereo_unproject(const Vec3& y, const PointC2& pole);

/// Pole among `candidates` seeded sphere samples farthest from all points.
PointC2 choose_pole(const std::vector<Vec4>& points, std::size_t candidates = 100,
                    std::uint64_t seed = 7);

struct Polyline3 {
    std::vector<Vec3> points;
    bool closed = true;
};

/// Discrete Gauss double sum over segment midpoints. Requires closed curves
/// whose minimum separation exceeds 10x their longest segment.
double linking_number(const Polyline3& a, const Polyline3& b);

/// Heisenberg chart (Re z, Im z, Re w).
Vec3 heisenberg_chart(const Vec4& x);

/// Symmetric Hausdorff distance between point sets.
double hausdorff_distance(const std::vector<Vec4>& a, const std::vector<Vec4>& b);

/// Complex-tangency statistics for the graph of f over a surface.
struct DefectStats {
    Polynomial cr_image{Form::Ambient};
    std::size_t variety_points = 0;
    double max_variety_defect = 0.0;
    std::size_t off_points = 0;
    double min_off_defect = 0.0;
    std::size_t samples = 0;

    /// On-variety defects below on_tol and off-variety defects above off_tol.
    bool passes(double on_tol = 1e-6, double off_tol = 1e-4) const;
};

/// Samples the surface; points projected onto {L f = 0} feed the variety
/// maximum (at most `variety_target` of them), samples with
/// |L f| > 0.1 (1 + |x|^deg L f) feed the off-variety minimum. When L f is
/// identically zero every sample counts as a variety point.
DefectStats defect_statistics(const SurfaceSpec& s, const Polynomial& f, std::size_t samples,
                              std::uint64_t seed, std::size_t variety_target = 50);

/// Decay of a punctured rational toward the pole (0,1) along S^3 paths
/// w = 1 - eps, z = s e^{i theta} for four phases theta; at each eps the
/// largest modulus over the phases is used.
struct PoleDecay {
    /// Least-squares slope of log|g| against log eps over eps = 1e-1 .. 1e-4;
    /// nullopt when g vanishes on every probe.
    std::optional<double> slope;
    double value_near = 0.0;  ///< at eps = 1e-6
    double value_far = 0.0;   ///< at eps = 1e-1
};

PoleDecay pole_decay(const PuncturedRational& g);

}  // namespace ctknot
