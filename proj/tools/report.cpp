#include "report.hpp"

#include <stdexcept>

namespace blockset::cli {

using nlohmann::json;

Mode parse_mode(const std::string& s) {
    if (s == "exactly") return Mode::Exactly;
    if (s == "at-most") return Mode::AtMost;
    if (s == "at-least") return Mode::AtLeast;
    throw std::invalid_argument("unknown mode '" + s + "'");
}

std::string mode_symbol(Mode m) {
    switch (m) {
        case Mode::Exactly:
            return "==";
        case Mode::AtMost:
            return "<=";
        case Mode::AtLeast:
            break;
    }
    return ">=";
}

json vertex_list(const VertexSet& s) {
    json out = json::array();
    s.for_each([&](Vertex v) { out.push_back(v + 1); });
    return out;
}

json stats_json(const BranchStats& s) {
    return json{{"nodes_expanded", s.nodes_expanded}, {"max_depth", s.max_depth}, {"time_ms", s.time_ms}};
}

json solve_report(const std::string& instance_id, const std::string& solver, const std::string& question,
                  const Solved& s, const json& config) {
    json j{{"instance_id", instance_id}, {"solver", solver}, {"question", question}};
    if (const bool* b = std::get_if<bool>(&s.answer))
        j["answer"] = *b;
    else
        j["answer"] = std::get<std::string>(s.answer);
    if (s.value) j["value"] = *s.value;
    if (s.certificate) j["certificate"] = vertex_list(*s.certificate);
    j["stats"] = stats_json(s.stats);
    j["config"] = config;
    for (const auto& [k, v] : s.extra.items()) j[k] = v;
    return j;
}

json error_report(const std::string& instance_id, const std::string& message) {
    return json{{"instance_id", instance_id}, {"error", message}};
}

std::string line(const json& j) { return j.dump(); }

}  // namespace blockset::cli
