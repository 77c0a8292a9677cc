#pragma once

#include <optional>
#include <string>
#include <variant>

#include <json.hpp>

#include "blockset/search_context.hpp"
#include "blockset/vertex_set.hpp"

namespace blockset::cli {

enum class Mode { Exactly, AtMost, AtLeast };

Mode parse_mode(const std::string& s);
std::string mode_symbol(Mode m);

/// Result of one solve before it is turned into a report line.
struct Solved {
    /// true/false, or a status string such as "timeout".
    std::variant<bool, std::string> answer = false;
    std::optional<int> value;
    std::optional<VertexSet> certificate;
    BranchStats stats;
    nlohmann::json extra = nlohmann::json::object();
};

/// 1-indexed ascending ids.
nlohmann::json vertex_list(const VertexSet& s);
nlohmann::json stats_json(const BranchStats& s);

/// {"instance_id", "solver", "question", "answer", "value"?, "certificate"?, "stats", "config", ...extra}
nlohmann::json solve_report(const std::string& instance_id, const std::string& solver, const std::string& question,
                            const Solved& s, const nlohmann::json& config);

nlohmann::json error_report(const std::string& instance_id, const std::string& message);

/// Single-line JSON.
std::string line(const nlohmann::json& j);

}  // namespace blockset::cli
