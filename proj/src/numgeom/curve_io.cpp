#include "ctknot/curve_io.hpp"

#include <cstdio>
#include <ostream>

#include <json.hpp>

#include "ctknot/error.hpp"

namespace ctknot {

using nlohmann::json;

std::string curve_to_json(const TracedCurve& curve, int indent) {
    json comps = json::array();
    for (const CurveComponent& c : curve.components) {
        json pts = json::array();
        for (const Vec4& p : c.points) pts.push_back({p[0], p[1], p[2], p[3]});
        comps.push_back({{"closed", c.closed}, {"truncated", c.truncated}, {"points", std::move(pts)}});
    }
    const json doc = {{"surface", curve.surface}, {"polynomial", curve.polynomial},
                      {"step", curve.step},       {"seed", curve.seed},
                      {"components", std::move(comps)}};
    return doc.dump(indent);
}

TracedCurve curve_from_json(std::string_view text) {
    try {
        const json doc = json::parse(text);
        TracedCurve curve;
        curve.surface = doc.at("surface").get<std::string>();
        curve.polynomial = doc.value("polynomial", std::string{});
        curve.step = doc.value("step", 0.0);
        curve.seed = doc.value("seed", std::uint64_t{0});
        for (const json& c : doc.at("components")) {
            CurveComponent comp;
            comp.closed = c.at("closed").get<bool>();
            comp.truncated = c.value("truncated", false);
            for (const json& p : c.at("points")) {
                if (p.size() != 4) throw Error(ErrorKind::Parse, "curve point needs 4 coordinates");
                comp.points.emplace_back(p[0].get<double>(), p[1].get<double>(), p[2].get<double>(),
                                         p[3].get<double>());
            }
            curve.components.push_back(std::move(comp));
        }
        return curve;
    } catch (const json::exception& e) {
        throw Error(ErrorKind::Parse, std::string("malformed curve document: ") + e.what());
    }
}

void write_columns(std::ostream& out, const std::vector<std::vector<Vec3>>& components) {
    char line[96];
    for (std::size_t i = 0; i < components.size(); ++i) {
        if (i) out << '\n';
        for (const Vec3& p : components[i]) {
            std::snprintf(line, sizeof line, "%.10g %.10g %.10g\n", p[0], p[1], p[2]);
            out << line;
        }
    }
}

}  // namespace ctknot
