#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include <json.hpp>

#include "ctknot/error.hpp"

namespace ctknot {

inline constexpr const char* kVersion = "0.1.0";

/// 64-bit FNV-1a over the parts, each followed by a NUL byte, as 16 hex digits.
std::string input_hash(const std::vector<std::string>& parts);

/// 1 for bad input, 2 for numeric failures.
int exit_code_for(ErrorKind kind);

struct RealizeOptions {
    std::string polynomial;
    int r = 2;
    std::uint64_t seed = 0;
    double step = 0.01;
    std::size_t seeds = 64;
    std::size_t samples = 1000;
    /// "heisenberg": the polynomial already lives on the Heisenberg group.
    /// "sphere": it describes a curve on S^3 and is pulled back by phi first.
    std::string frame = "heisenberg";
};

struct RealizeResult {
    nlohmann::json report;
    /// 0 pass, 1 input error, 2 numeric failure, 3 a check failed.
    int exit_code = 0;
};

/// Solve, transfer, trace and cross-check one knot polynomial; every stage is
/// recorded in the report, a failing stage under "failed_stage".
RealizeResult realize(const RealizeOptions& opts);

/// Entry point of the command-line tool; args excludes the program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace ctknot
