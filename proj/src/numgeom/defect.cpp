#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include "ctknot/cr.hpp"
#include "ctknot/error.hpp"
#include "ctknot/numgeom.hpp"

namespace ctknot {

bool DefectStats::passes(double on_tol, double off_tol) const {
    const bool on_ok = variety_points == 0 || max_variety_defect < on_tol;
    const bool off_ok = off_points == 0 || min_off_defect > off_tol;
    return on_ok && off_ok;
}

DefectStats defect_statistics(const SurfaceSpec& s, const Polynomial& f, std::size_t samples,
                              std::uint64_t seed, std::size_t variety_target) {
    DefectStats out;
    out.samples = samples;
    out.cr_image = apply_cr(s.cr_operator(), f);
    const PolyField field(f);
    const auto points = sample_surface(s, samples, seed);

    if (out.cr_image.is_zero()) {
        for (const PointC2& x : points) {
            const double d = tangency_defect(tangent_frame(s, field, x));
            out.max_variety_defect = std::max(out.max_variety_defect, d);
            ++out.variety_points;
        }
        return out;
    }

    const PolyField g(out.cr_image);
    for (const PointC2& x : points) {
        if (out.variety_points >= variety_target) break;
        PointC2 p;
        try {
            p = project_to_variety(s, g, x);
        } catch (const Error&) {
            continue;
        }
        // The projection may drift off the surface by ~tol; that is inside the frame's tolerance.
        const double d = tangency_defect(tangent_frame(s, field, p));
        out.max_variety_defect = std::max(out.max_variety_defect, d);
        ++out.variety_points;
    }

    const int deg = out.cr_image.degree();
    out.min_off_defect = std::numeric_limits<double>::infinity();
    for (const PointC2& x : points) {
        const double scale = 1.0 + std::pow(to_r4(x).norm(), deg);
        if (std::abs(g.value(x)) <= 0.1 * scale) continue;
        const double d = tangency_defect(tangent_frame(s, field, x));
        out.min_off_defect = std::min(out.min_off_defect, d);
        ++out.off_points;
    }
    if (out.off_points == 0) out.min_off_defect = 0.0;
    return out;
}

namespace {

double probe(const PuncturedField& field, double eps) {
    const double s = std::sqrt(eps * (2.0 - eps));
    double best = 0.0;
    for (int q = 0; q < 4; ++q) {
        const Complex z = std::polar(s, q * std::numbers::pi / 2.0);
        best = std::max(best, std::abs(field.value_near_pole(z, eps)));
    }
    return best;
}

}  // namespace

PoleDecay pole_decay(const PuncturedRational& g) {
    const PuncturedField field(g);
    PoleDecay out;
    out.value_near = probe(field, 1e-6);
    out.value_far = probe(field, 1e-1);

    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    int n = 0;
    for (double eps : {1e-1, 1e-2, 1e-3, 1e-4}) {
        const double v = probe(field, eps);
        if (!(v > 0.0) || !std::isfinite(v)) continue;
        const double x = std::log(eps), y = std::log(v);
        sx += x;
        sy += y;
        sxx += x * x;
        sxy += x * y;
        ++n;
    }
    if (n >= 2) out.slope = (n * sxy - sx * sy) / (n * sxx - sx * sx);
    return out;
}

}  // namespace ctknot
