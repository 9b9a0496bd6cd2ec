#include <algorithm>
#include <cmath>
#include <limits>

#include "ctknot/cli.hpp"
#include "ctknot/cr.hpp"
#include "ctknot/numgeom.hpp"
#include "ctknot/transfer.hpp"

namespace ctknot {

namespace {

using nlohmann::json;

constexpr double kDistanceTol = 1e-5;
constexpr double kOnDefectTol = 1e-6;

json punctured_json(const PuncturedRational& g) {
    return {{"num", g.num.to_string()}, {"alpha", g.alpha}, {"beta", g.beta}};
}

/// Runs one stage; an Error ends the pipeline with the stage name recorded.
template <class F>
bool stage(RealizeResult& res, const char* name, F&& body) {
    try {
        body();
        return true;
    } catch (const Error& e) {
        res.report["failed_stage"] = name;
        res.report["error"] = e.what();
        res.report["passed"] = false;
        res.exit_code = exit_code_for(e.kind());
        return false;
    }
}

}  // namespace

RealizeResult realize(const RealizeOptions& opts) {
    RealizeResult res;
    json& rep = res.report;
    rep["version"] = kVersion;
    rep["seed"] = opts.seed;
    rep["input"] = opts.polynomial;
    rep["input_hash"] = input_hash({opts.polynomial, std::to_string(opts.r), opts.frame});
    rep["frame"] = opts.frame;
    rep["r"] = opts.r;
    rep["step"] = opts.step;

    Polynomial target;
    if (!stage(res, "input", [&] {
            if (opts.r < 2) {
                throw Error(ErrorKind::InvalidArgument,
                            "r = " + std::to_string(opts.r) +
                                " rejected: the transfer needs r >= 2 for a C^1 embedding");
            }
            if (opts.frame != "heisenberg" && opts.frame != "sphere") {
                throw Error(ErrorKind::InvalidArgument, "frame must be heisenberg or sphere");
            }
            const Polynomial g = parse_poly(opts.polynomial);
            if (opts.frame == "sphere") {
                const Pullback pb = pullback_numerator(g);
                target = pb.q;
                rep["pullback"] = {{"q", pb.q.to_string()}, {"M", pb.M}, {"N", pb.N}};
            } else {
                target = g;
            }
            if (target.is_zero()) throw Error(ErrorKind::InvalidArgument, "zero polynomial has no knot");
            rep["heisenberg_target"] = target.to_string();
        })) {
        return res;
    }

    Polynomial f;
    bool checks = true;
    if (!stage(res, "solve", [&] {
            f = solve_heisenberg(target);
            const bool exact = apply_cr(CROperator::heisenberg(), f) == target;
            rep["embedding"] = f.to_string();
            rep["checks"]["round_trip_exact"] = exact;
            checks = checks && exact;
        })) {
        return res;
    }

    PuncturedRational q;
    PuncturedRational lq;
    if (!stage(res, "transfer", [&] {
            q = transfer_to_sphere(f, opts.r);
            lq = apply_cr_punctured(q);
            rep["transfer"] = punctured_json(q);
            rep["transfer"]["n"] = std::max(f.degree(), 0);
            rep["transfer"]["r"] = opts.r;
            rep["cr_image"] = punctured_json(lq);
        })) {
        return res;
    }

    TracedCurve curve;
    TraceOptions topts;
    topts.step = opts.step;
    topts.seeds = opts.seeds;
    topts.seed = opts.seed;
    if (!stage(res, "trace", [&] {
            curve = trace_curve(SurfaceSpec::heisenberg(), PolyField(target), topts);
            json closed = json::array();
            std::size_t points = 0;
            for (const auto& c : curve.components) {
                closed.push_back(c.closed);
                points += c.points.size();
            }
            rep["curve"] = {{"components", curve.components.size()}, {"closed", closed},
                            {"points", points}};
        })) {
        return res;
    }

    const SurfaceSpec sphere = SurfaceSpec::sphere();
    std::vector<PointC2> variety;
    if (!stage(res, "compare", [&] {
            // Off the pole the zero set of L(Q) is that of its numerator.
            const PolyField zero_field(unit_scaled(lq.num));
            double worst = 0.0;
            for (const auto& c : curve.components) {
                for (const Vec4& x : c.points) {
                    const PointC2 y = phi(from_r4(x));
                    const PointC2 p = project_to_variety(sphere, zero_field, y);
                    worst = std::max(worst, (to_r4(p) - to_r4(y)).norm());
                    variety.push_back(p);
                }
            }
            rep["checks"]["max_distance"] = worst;
            const bool ok = worst < kDistanceTol;
            rep["checks"]["distance_ok"] = ok;
            checks = checks && ok;

            // Independent trace on S^3. Open Heisenberg components close up through the pole.
            const TracedCurve direct = trace_curve(sphere, zero_field, topts);
            std::vector<Vec4> direct_points;
            std::vector<Vec4> mapped;
            for (const auto& c : direct.components) {
                direct_points.insert(direct_points.end(), c.points.begin(), c.points.end());
            }
            for (const PointC2& p : variety) mapped.push_back(to_r4(p));
            const bool count_ok = direct.components.size() == curve.components.size();
            rep["sphere_trace"] = {{"components", direct.components.size()},
                                   {"closed", direct.closed_count()},
                                   {"hausdorff_to_mapped", hausdorff_distance(direct_points, mapped)}};
            rep["checks"]["component_count_match"] = count_ok;
            checks = checks && count_ok;
        })) {
        return res;
    }

    if (!stage(res, "pole", [&] {
            const PoleDecay decay = pole_decay(lq);
            const bool slope_ok = !decay.slope || *decay.slope >= opts.r - 1.1;
            const bool ratio_ok = decay.value_near <= 1e-6 * decay.value_far;
            rep["checks"]["pole_slope"] = decay.slope ? json(*decay.slope) : json(nullptr);
            rep["checks"]["pole_value_near"] = decay.value_near;
            rep["checks"]["pole_value_far"] = decay.value_far;
            rep["checks"]["pole_ok"] = slope_ok && ratio_ok;
            checks = checks && slope_ok && ratio_ok;
        })) {
        return res;
    }

    if (!stage(res, "defect", [&] {
            const PuncturedField qf(q);
            const PuncturedField lqf(lq);
            double on_max = 0.0;
            for (const PointC2& p : variety) {
                on_max = std::max(on_max, tangency_defect(tangent_frame(sphere, qf, p)));
            }
            double off_min = std::numeric_limits<double>::infinity();
            std::size_t off_count = 0;
            for (const PointC2& x : sample_surface(sphere, opts.samples, opts.seed)) {
                if (std::abs(1.0 - x.w) < 1e-3) continue;
                if (std::abs(lqf.value(x)) <= 0.2) continue;  // 0.1 (1 + |x|^d) on S^3
                off_min = std::min(off_min, tangency_defect(tangent_frame(sphere, qf, x)));
                ++off_count;
            }
            const bool ok = variety.empty() || on_max < kOnDefectTol;
            rep["checks"]["max_variety_defect"] = on_max;
            rep["checks"]["variety_points"] = variety.size();
            rep["checks"]["min_off_defect"] = off_count ? json(off_min) : json(nullptr);
            rep["checks"]["off_points"] = off_count;
            rep["checks"]["defect_ok"] = ok;
            checks = checks && ok;
        })) {
        return res;
    }

    rep["passed"] = checks;
    res.exit_code = checks ? 0 : 3;
    return res;
}

}  // namespace ctknot
