#pragma once

// Report: the value every CLI command produces, plus its text and JSON renderers.
// Results are kept as tagged JSON objects ("type" field) so a report re-parses
// into an equal value.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

namespace diaglab {

inline constexpr const char* report_schema = "diaglab.report/1";
inline constexpr const char* diaglab_version = "0.1.0";
inline constexpr std::uint64_t default_seed = 0x5eed;

struct Report {
    std::string schema = report_schema;
    std::string version = diaglab_version;
    std::vector<std::string> command;
    nlohmann::ordered_json params = nlohmann::ordered_json::object();
    nlohmann::ordered_json results = nlohmann::ordered_json::array();
    std::uint64_t seed = default_seed;
    /// Only set with --timing; omitted by default so output is byte-identical.
    std::optional<double> wall_time_s;

    friend bool operator==(const Report&, const Report&) = default;
};

enum class Format { text, json };

Format parse_format(std::string_view text);

nlohmann::ordered_json to_json(const Report& r);
Report report_from_json(const nlohmann::ordered_json& j);

/// JSON: pretty-printed report followed by a newline. Text: one block per result.
std::string render(const Report& r, Format f);

}  // namespace diaglab
