// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

namespace onesided::cli {

enum class Command { tau, sandwich_step, approximate, oracle, verify };
enum class Format { csv, json };

[[nodiscard]] std::string to_string(Command c);
[[nodiscard]] std::string to_string(Format f);
/// Both throw std::invalid_argument on unknown names.
[[nodiscard]] Command parse_command(std::string_view name);
[[nodiscard]] Format parse_format(std::string_view name);

/// Degree list: comma-separated items, each "n", "a:b" or "a:b:step"
/// (inclusive). Throws std::invalid_argument when malformed or empty.
[[nodiscard]] std::vector<int> parse_k_spec(std::string_view spec);

struct RunConfig {
    Command command = Command::verify;
    std::string function_id;
    std::string expression;
    bool singular_left = false;
    bool singular_right = false;
    std::string k;  // as typed; empty selects the command default
    std::optional<double> y;
    double p = 1.0;
    double delta = 0.1;
    std::string weight_id = "one";
    std::string weight_expression;
    int grid_n = 0;  // 0 selects the command default
    int panels = 64;
    int nodes = 16;
    std::string output;  // empty writes to stdout
    Format format = Format::csv;
    std::string suite = "default";
    std::uint64_t seed = 0;

    bool operator==(const RunConfig&) const = default;
};

[[nodiscard]] nlohmann::json to_json(const RunConfig& cfg);
/// Missing keys keep their defaults; wrong types or unknown enum names throw.
[[nodiscard]] RunConfig config_from_json(const nlohmann::json& j);

}  // namespace onesided::cli
