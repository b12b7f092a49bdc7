// SPDX-License-Identifier: Apache-2.0
#include "run_config.hpp"

#include <charconv>
#include <stdexcept>

namespace onesided::cli {

namespace {

constexpr std::pair<Command, std::string_view> kCommands[] = {
    {Command::tau, "tau"},
    {Command::sandwich_step, "sandwich-step"},
    {Command::approximate, "approximate"},
    {Command::oracle, "oracle"},
    {Command::verify, "verify"},
};

int to_int(std::string_view s, std::string_view whole) {
    int v = 0;
    const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc() || ptr != s.data() + s.size() || s.empty())
        throw std::invalid_argument("malformed degree list '" + std::string(whole) + "'");
    if (v < 0) throw std::invalid_argument("negative degree in '" + std::string(whole) + "'");
    return v;
}

}  // namespace

std::string to_string(Command c) {
    for (const auto& [cmd, name] : kCommands)
        if (cmd == c) return std::string(name);
    return "unknown";
}

std::string to_string(Format f) { return f == Format::csv ? "csv" : "json"; }

Command parse_command(std::string_view name) {
    for (const auto& [cmd, n] : kCommands)
        if (n == name) return cmd;
    throw std::invalid_argument("unknown command '" + std::string(name) + "'");
}

Format parse_format(std::string_view name) {
    if (name == "csv") return Format::csv;
    if (name == "json") return Format::json;
    throw std::invalid_argument("unknown format '" + std::string(name) + "'");
}

std::vector<int> parse_k_spec(std::string_view spec) {
    std::vector<int> out;
    std::size_t start = 0;
    while (start <= spec.size()) {
        const std::size_t comma = std::min(spec.find(',', start), spec.size());
        const std::string_view item = spec.substr(start, comma - start);
        std::vector<int> parts;
        std::size_t s = 0;
        while (s <= item.size()) {
            const std::size_t colon = std::min(item.find(':', s), item.size());
            parts.push_back(to_int(item.substr(s, colon - s), spec));
            s = colon + 1;
        }
        if (parts.size() == 1) {
            out.push_back(parts[0]);
        } else if (parts.size() <= 3) {
            const int step = parts.size() == 3 ? parts[2] : 1;
            if (step <= 0 || parts[1] < parts[0])
                throw std::invalid_argument("empty degree range '" + std::string(item) + "'");
            for (int k = parts[0]; k <= parts[1]; k += step) out.push_back(k);
        } else {
            throw std::invalid_argument("malformed degree range '" + std::string(item) + "'");
        }
        start = comma + 1;
    }
    if (out.empty()) throw std::invalid_argument("empty degree list");
    return out;
}

nlohmann::json to_json(const RunConfig& c) {
    nlohmann::json j;
    j["command"] = to_string(c.command);
    j["function_id"] = c.function_id;
    j["expression"] = c.expression;
    j["singular_left"] = c.singular_left;
    j["singular_right"] = c.singular_right;
    j["k"] = c.k;
    j["y"] = c.y ? nlohmann::json(*c.y) : nlohmann::json(nullptr);
    j["p"] = c.p;
    j["delta"] = c.delta;
    j["weight_id"] = c.weight_id;
    j["weight_expression"] = c.weight_expression;
    j["grid_n"] = c.grid_n;
    j["panels"] = c.panels;
    j["nodes"] = c.nodes;
    j["output"] = c.output;
    j["format"] = to_string(c.format);
    j["suite"] = c.suite;
    j["seed"] = c.seed;
    return j;
}

RunConfig config_from_json(const nlohmann::json& j) {
    RunConfig c;
    auto get = [&j](const char* key, auto& field) {
        if (j.contains(key)) j.at(key).get_to(field);
    };
    if (j.contains("command")) c.command = parse_command(j.at("command").get<std::string>());
    get("function_id", c.function_id);
    get("expression", c.expression);
    get("singular_left", c.singular_left);
    get("singular_right", c.singular_right);
    get("k", c.k);
    if (j.contains("y") && !j.at("y").is_null()) c.y = j.at("y").get<double>();
    get("p", c.p);
    get("delta", c.delta);
    get("weight_id", c.weight_id);
    get("weight_expression", c.weight_expression);
    get("grid_n", c.grid_n);
    get("panels", c.panels);
    get("nodes", c.nodes);
    get("output", c.output);
    if (j.contains("format")) c.format = parse_format(j.at("format").get<std::string>());
    get("suite", c.suite);
    get("seed", c.seed);
    return c;
}

}  // namespace onesided::cli
