#pragma once

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "ctknot/numgeom.hpp"

namespace ctknot {

/// {"surface", "polynomial", "step", "seed", "components": [{"closed", "truncated",
/// "points": [[x1, x2, x3, x4], ...]}]}
std::string curve_to_json(const TracedCurve& curve, int indent = -1);
/// Throws Error(Parse) on malformed documents.
TracedCurve curve_from_json(std::string_view text);

/// One "x y z" line per point; components separated by a blank line.
void write_columns(std::ostream& out, const std::vector<std::vector<Vec3>>& components);

}  // namespace ctknot
