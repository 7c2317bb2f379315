#pragma once

// Command-line surface. execute() never writes to the process streams; the
// caller prints `help` (stdout), the rendered report (stdout) and `diagnostic`
// (stderr).

#include <optional>
#include <string>
#include <vector>

#include "diaglab/report.hpp"

namespace diaglab {

inline constexpr int exit_ok = 0;
inline constexpr int exit_verification_failed = 1;
inline constexpr int exit_usage = 2;

struct Outcome {
    std::optional<Report> report;
    Format format = Format::text;
    int exit_code = exit_ok;
    std::string help;
    std::string diagnostic;
};

/// argv without the program name.
Outcome execute(const std::vector<std::string>& argv);

/// Parses an alpha list: "3,4,1/2,0.25" or "pow:s" (k^{-s}, k = 1..nmax).
std::vector<double> parse_alpha(const std::string& text, std::size_t nmax);

}  // namespace diaglab
