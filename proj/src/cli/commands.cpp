#include <algorithm>
#include <cstdio>
#include <fstream>
#include <iomanip>
#include <numeric>
#include <sstream>

#include <CLI11.hpp>

#include "ctknot/cli.hpp"
#include "ctknot/cr.hpp"
#include "ctknot/curve_io.hpp"
#include "ctknot/numgeom.hpp"
#include "ctknot/transfer.hpp"

namespace ctknot {

std::string input_hash(const std::vector<std::string>& parts) {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    auto mix = [&h](unsigned char c) {
        h ^= c;
        h *= 0x100000001b3ULL;
    };
    for (const std::string& p : parts) {
        for (unsigned char c : p) mix(c);
        mix(0);
    }
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
    return buf;
}

int exit_code_for(ErrorKind kind) {
    switch (kind) {
        case ErrorKind::NonConvergence:
        case ErrorKind::RankDeficientJacobian:
        case ErrorKind::NoCurveFound:
        case ErrorKind::SingularPoint:
        case ErrorKind::PoleTooClose:
        case ErrorKind::CurvesTooClose:
        case ErrorKind::PoleHit:
        case ErrorKind::DegenerateFrame:
        case ErrorKind::OffSurface:
            return 2;
        default:
            return 1;
    }
}

namespace {

using nlohmann::json;

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error(ErrorKind::InvalidArgument, "cannot read '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_file(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw Error(ErrorKind::InvalidArgument, "cannot write '" + path + "'");
    out << text;
}

/// Polynomial argument: literal text, or @path to read it from a file.
std::string poly_text(const std::string& arg) {
    if (arg.empty() || arg[0] != '@') return arg;
    std::string text = read_file(arg.substr(1));
    const auto last = text.find_last_not_of(" \t\r\n");
    text.erase(last == std::string::npos ? 0 : last + 1);
    return text;
}

Rational parse_rational(const std::string& text) {
    Rational q;
    if (text.empty() || q.set_str(text, 10) != 0) {
        throw Error(ErrorKind::InvalidArgument, "not a rational number: '" + text + "'");
    }
    if (sgn(q.get_den()) == 0) throw Error(ErrorKind::InvalidArgument, "zero denominator in '" + text + "'");
    q.canonicalize();
    return q;
}

std::string sci(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.4e", v);
    return buf;
}

std::string fixed(double v, int digits = 6) {
    char buf[48];
    std::snprintf(buf, sizeof buf, "%.*f", digits, v);
    return buf;
}

struct Common {
    std::string surface = "sphere";
    std::uint64_t seed = 0;
    double step = 0.01;
    std::size_t seeds = 64;
    std::size_t samples = 1000;
    std::string out_path;
    bool porcelain = false;
};

std::vector<std::vector<Vec3>> project_components(const TracedCurve& curve) {
    std::vector<std::vector<Vec3>> out;
    if (curve.surface == "heisenberg") {
        for (const auto& c : curve.components) {
            std::vector<Vec3> pts;
            for (const Vec4& x : c.points) pts.push_back(heisenberg_chart(x));
            out.push_back(std::move(pts));
        }
        return out;
    }
    std::vector<Vec4> all;
    for (const auto& c : curve.components) all.insert(all.end(), c.points.begin(), c.points.end());
    const PointC2 pole = choose_pole(all);
    for (const auto& c : curve.components) out.push_back(stereo_project(c.points, pole));
    return out;
}

void print_curve_summary(std::ostream& out, const TracedCurve& curve, bool porcelain) {
    if (porcelain) {
        out << "components\t" << curve.components.size() << '\n';
        for (std::size_t i = 0; i < curve.components.size(); ++i) {
            const auto& c = curve.components[i];
            out << "component\t" << i << '\t' << c.points.size() << '\t'
                << (c.closed ? "closed" : "open") << (c.truncated ? "\ttruncated" : "") << '\n';
        }
        return;
    }
    out << "surface: " << curve.surface << '\n'
        << "polynomial: " << curve.polynomial << '\n'
        << "components: " << curve.components.size() << " (" << curve.closed_count() << " closed)\n";
    for (std::size_t i = 0; i < curve.components.size(); ++i) {
        const auto& c = curve.components[i];
        out << "  component " << i << ": " << c.points.size() << " points, "
            << (c.closed ? "closed" : "open") << (c.truncated ? ", truncated" : "") << '\n';
    }
}

/// Linking numbers of every pair of closed components.
void print_links(std::ostream& out, const TracedCurve& curve, bool porcelain) {
    const auto projected = project_components(curve);
    for (std::size_t a = 0; a < projected.size(); ++a) {
        for (std::size_t b = a + 1; b < projected.size(); ++b) {
            if (!curve.components[a].closed || !curve.components[b].closed) continue;
            const double lk = linking_number({projected[a], true}, {projected[b], true});
            if (porcelain) {
                out << "link\t" << a << '\t' << b << '\t' << fixed(lk, 4) << '\n';
            } else {
                out << "linking number " << a << "-" << b << ": " << fixed(lk, 4) << '\n';
            }
        }
    }
}

TraceOptions trace_options(const Common& c) {
    TraceOptions t;
    t.step = c.step;
    t.seeds = c.seeds;
    t.seed = c.seed;
    return t;
}

int cmd_solve_h(const std::string& arg, std::ostream& out) {
    out << solve_heisenberg(parse_poly(poly_text(arg))).to_string() << '\n';
    return 0;
}

int cmd_apply(const std::string& arg, const Common& c, const std::string& rho, std::ostream& out) {
    const CROperator op = rho.empty() ? SurfaceSpec::of(surface_kind_from_string(c.surface)).cr_operator()
                                      : cr_from_rho(parse_poly(poly_text(rho)));
    out << apply_cr(op, parse_poly(poly_text(arg))).to_string() << '\n';
    return 0;
}

int cmd_pullback(const std::string& arg, std::ostream& out) {
    const Pullback pb = pullback_numerator(parse_poly(poly_text(arg)));
    out << "q: " << pb.q.to_string() << '\n' << "M: " << pb.M << '\n' << "N: " << pb.N << '\n';
    return 0;
}

int cmd_transfer(const std::string& arg, int r, std::ostream& out) {
    const PuncturedRational q = transfer_to_sphere(parse_poly(poly_text(arg)), r);
    const PuncturedRational lq = apply_cr_punctured(q);
    out << "num: " << q.num.to_string() << '\n'
        << "alpha: " << q.alpha << '\n'
        << "beta: " << q.beta << '\n'
        << "cr_num: " << lq.num.to_string() << '\n'
        << "cr_alpha: " << lq.alpha << '\n'
        << "cr_beta: " << lq.beta << '\n';
    return 0;
}

int cmd_torus(int p, int q, bool trace, const Common& c, std::ostream& out) {
    if (p < 1 || q < 1) throw Error(ErrorKind::InvalidArgument, "p and q must be at least 1");
    const Polynomial source = torus_knot_source(static_cast<unsigned>(p), static_cast<unsigned>(q));
    const Polynomial image = apply_cr(CROperator::sphere(), source);
    out << (c.porcelain ? "source\t" : "source: ") << source.to_string() << '\n'
        << (c.porcelain ? "cr_image\t" : "cr_image: ") << image.to_string() << '\n';
    if (!trace && c.out_path.empty()) return 0;
    const TracedCurve curve = trace_curve(SurfaceSpec::sphere(), PolyField(image), trace_options(c));
    print_curve_summary(out, curve, c.porcelain);
    print_links(out, curve, c.porcelain);
    if (!c.out_path.empty()) write_file(c.out_path, curve_to_json(curve) + "\n");
    return 0;
}

int cmd_trace(const std::string& arg, const Common& c, const std::string& columns, std::ostream& out) {
    const SurfaceSpec s = SurfaceSpec::of(surface_kind_from_string(c.surface));
    const TracedCurve curve = trace_curve(s, PolyField(parse_poly(poly_text(arg))), trace_options(c));
    print_curve_summary(out, curve, c.porcelain);
    if (!c.out_path.empty()) write_file(c.out_path, curve_to_json(curve) + "\n");
    if (!columns.empty()) {
        std::ostringstream cols;
        write_columns(cols, project_components(curve));
        write_file(columns, cols.str());
    }
    return 0;
}

int cmd_link(const std::vector<std::string>& files, std::ostream& out) {
    std::vector<Polyline3> closed;
    for (const std::string& f : files) {
        const TracedCurve curve = curve_from_json(read_file(f));
        const auto projected = project_components(curve);
        for (std::size_t i = 0; i < projected.size(); ++i) {
            if (curve.components[i].closed) closed.push_back({projected[i], true});
        }
    }
    if (closed.size() < 2) {
        throw Error(ErrorKind::OpenCurve, "need two closed components, found " + std::to_string(closed.size()));
    }
    out << fixed(linking_number(closed[0], closed[1]), 4) << '\n';
    return 0;
}

int cmd_move(const std::string& arg, const std::string& shift_z, const std::string& shift_u,
             const std::string& rotate, std::ostream& out) {
    RigidMotionH m;
    if (!shift_z.empty()) {
        const Polynomial a = parse_poly(shift_z);
        if (a.degree() > 0) throw Error(ErrorKind::InvalidArgument, "--shift-z must be a constant");
        m.a = a.constant_term();
    }
    if (!shift_u.empty()) m.t = parse_rational(shift_u);
    if (!rotate.empty()) {
        std::vector<std::string> entries;
        std::stringstream ss(rotate);
        for (std::string e; std::getline(ss, e, ',');) {
            e.erase(std::remove_if(e.begin(), e.end(), ::isspace), e.end());
            entries.push_back(e);
        }
        if (entries.size() != 9) {
            throw Error(ErrorKind::InvalidArgument, "--rotate takes 9 comma-separated entries, row major");
        }
        for (int i = 0; i < 9; ++i) m.R[i / 3][i % 3] = parse_rational(entries[i]);
    }
    out << move_knot(parse_poly(poly_text(arg)), m).to_string() << '\n';
    return 0;
}

int cmd_verify(const std::string& arg, const Common& c, std::ostream& out) {
    const std::string text = poly_text(arg);
    const SurfaceSpec s = SurfaceSpec::of(surface_kind_from_string(c.surface));
    const Polynomial f = parse_poly(text);
    const DefectStats st = defect_statistics(s, f, c.samples, c.seed);
    const bool pass = st.passes();
    const std::string on = st.variety_points ? sci(st.max_variety_defect) : "-";
    const std::string off = st.off_points ? sci(st.min_off_defect) : "-";
    const char* sep = c.porcelain ? "\t" : ": ";
    out << "version" << sep << kVersion << '\n'
        << "seed" << sep << c.seed << '\n'
        << "input_hash" << sep << input_hash({text, c.surface}) << '\n'
        << "surface" << sep << c.surface << '\n'
        << "f" << sep << f.to_string() << '\n'
        << "cr_image" << sep << st.cr_image.to_string() << '\n'
        << "samples" << sep << st.samples << '\n'
        << "variety_points" << sep << st.variety_points << '\n'
        << "max_variety_defect" << sep << on << '\n'
        << "off_points" << sep << st.off_points << '\n'
        << "min_off_defect" << sep << off << '\n'
        << "result" << sep << (pass ? "pass" : "fail") << '\n';
    return pass ? 0 : 3;
}

int cmd_realize(const std::string& arg, int r, const std::string& frame, const Common& c,
                std::ostream& out) {
    RealizeOptions o;
    o.polynomial = poly_text(arg);
    o.r = r;
    o.seed = c.seed;
    o.step = c.step;
    o.seeds = c.seeds;
    o.samples = c.samples;
    o.frame = frame;
    const RealizeResult res = realize(o);
    if (c.out_path.empty()) {
        out << res.report.dump(2) << '\n';
    } else {
        write_file(c.out_path, res.report.dump(2) + "\n");
        out << "report: " << c.out_path << '\n'
            << "passed: " << (res.report.value("passed", false) ? "yes" : "no") << '\n';
    }
    return res.exit_code;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Algebraic knots as complex-tangent loci of real 3-folds in C^3", "ctknot"};
    app.set_version_flag("--version", kVersion);
    app.require_subcommand(1);

    Common c;
    std::string poly;
    auto add_poly = [&poly](CLI::App* sub) {
        sub->add_option("polynomial", poly, "Polynomial text, or @file")->required();
    };
    auto add_surface = [&c](CLI::App* sub) {
        sub->add_option("--surface", c.surface, "sphere or heisenberg")
            ->check(CLI::IsMember({"sphere", "heisenberg"}))
            ->capture_default_str();
    };
    auto add_trace = [&c](CLI::App* sub) {
        sub->add_option("--seed", c.seed, "Random seed")->capture_default_str();
        sub->add_option("--step", c.step, "Continuation step")->capture_default_str();
        sub->add_option("--seeds", c.seeds, "Number of tracing seeds")->capture_default_str();
    };

    auto* solve = app.add_subcommand("solve-h", "Solve L_H f = g on the Heisenberg group");
    add_poly(solve);

    std::string rho;
    auto* apply = app.add_subcommand("apply", "Apply a tangential CR operator");
    add_poly(apply);
    add_surface(apply);
    apply->add_option("--rho", rho, "Custom real defining function (overrides --surface)");

    auto* pullback = app.add_subcommand("pullback", "Numerator of p o phi with cleared denominators");
    add_poly(pullback);

    int r = 2;
    auto* transfer = app.add_subcommand("transfer", "Transfer an embedding function to the sphere");
    add_poly(transfer);
    transfer->add_option("--r", r, "Extra flatness exponent (>= 2)")->capture_default_str();

    int p = 0;
    int q = 0;
    bool do_trace = false;
    auto* torus = app.add_subcommand("torus", "Torus knot (p,q) source, CR image and trace");
    torus->add_option("p", p)->required();
    torus->add_option("q", q)->required();
    torus->add_flag("--trace", do_trace, "Trace the knot on S^3");
    torus->add_option("--out", c.out_path, "Write the traced curve document");
    torus->add_flag("--porcelain", c.porcelain, "Tab-separated output");
    add_trace(torus);

    std::string columns;
    auto* trace = app.add_subcommand("trace", "Trace {g = 0} on a surface");
    add_poly(trace);
    add_surface(trace);
    add_trace(trace);
    trace->add_option("--out", c.out_path, "Write the traced curve document");
    trace->add_option("--columns", columns, "Write 3D projections as x y z columns");
    trace->add_flag("--porcelain", c.porcelain, "Tab-separated output");

    std::vector<std::string> files;
    auto* link = app.add_subcommand("link", "Gauss linking number of traced curves");
    link->add_option("files", files, "One or two curve documents")->required()->expected(1, 2);

    std::string shift_z;
    std::string shift_u;
    std::string rotate;
    auto* move = app.add_subcommand("move", "Move a knot polynomial by a rigid motion of H");
    add_poly(move);
    move->add_option("--shift-z", shift_z, "Gaussian rational z translation");
    move->add_option("--shift-u", shift_u, "Rational u translation");
    move->add_option("--rotate", rotate, "Orthogonal 3x3 rational matrix, 9 entries row major");

    auto* verify = app.add_subcommand("verify", "Complex-tangency defect statistics");
    add_poly(verify);
    add_surface(verify);
    verify->add_option("--seed", c.seed, "Random seed")->capture_default_str();
    verify->add_option("--samples", c.samples, "Surface samples")->capture_default_str();
    verify->add_flag("--porcelain", c.porcelain, "Tab-separated output");

    std::string frame = "heisenberg";
    auto* realize_cmd = app.add_subcommand("realize", "End-to-end knot realization report");
    add_poly(realize_cmd);
    realize_cmd->add_option("--r", r, "Extra flatness exponent (>= 2)")->capture_default_str();
    realize_cmd->add_option("--frame", frame, "Where the polynomial's curve lives")
        ->check(CLI::IsMember({"heisenberg", "sphere"}))
        ->capture_default_str();
    realize_cmd->add_option("--samples", c.samples, "Off-variety samples")->capture_default_str();
    realize_cmd->add_option("--out", c.out_path, "Write the report here instead of stdout");
    add_trace(realize_cmd);

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? 0 : 1;
    }

    try {
        if (*solve) return cmd_solve_h(poly, out);
        if (*apply) return cmd_apply(poly, c, rho, out);
        if (*pullback) return cmd_pullback(poly, out);
        if (*transfer) return cmd_transfer(poly, r, out);
        if (*torus) return cmd_torus(p, q, do_trace, c, out);
        if (*trace) return cmd_trace(poly, c, columns, out);
        if (*link) return cmd_link(files, out);
        if (*move) return cmd_move(poly, shift_z, shift_u, rotate, out);
        if (*verify) return cmd_verify(poly, c, out);
        if (*realize_cmd) return cmd_realize(poly, r, frame, c, out);
    } catch (const Error& e) {
        err << "error: " << e.what() << '\n';
        return exit_code_for(e.kind());
    }
    return 1;
}

}  // namespace ctknot
