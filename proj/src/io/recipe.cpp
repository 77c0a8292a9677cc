#include "blockset/recipe.hpp"

#include <stdexcept>

namespace blockset::gen {

namespace {

template <typename T>
T field(const nlohmann::json& r, const char* key) {
    if (!r.contains(key)) throw std::invalid_argument(std::string("recipe is missing '") + key + "'");
    return r.at(key).get<T>();
}

Graph base_graph(const nlohmann::json& r) {
    Instance inst = build_recipe(field<nlohmann::json>(r, "base"));
    if (!std::holds_alternative<Graph>(inst)) throw std::invalid_argument("recipe base must produce a graph");
    return std::get<Graph>(inst);
}

}  // namespace

Instance build_recipe(const nlohmann::json& r) {
    const auto kind = field<std::string>(r, "kind");
    const std::uint64_t seed = r.value("seed", std::uint64_t{0});
    if (kind == "graph") return random_graph(field<int>(r, "n"), field<double>(r, "p"), seed);
    if (kind == "hypergraph")
        return random_hypergraph(field<int>(r, "n"), field<int>(r, "m"), field<int>(r, "max_edge_size"), seed);
    if (kind == "mcis_join" || kind == "updom") {
        const auto pg = random_partitioned(field<std::vector<int>>(r, "parts"), field<double>(r, "cross_prob"), seed);
        return kind == "updom" ? gen_updom(pg) : gen_mcis_join(pg);
    }
    if (kind == "pendant") return gen_pendant(base_graph(r));
    if (kind == "complement_mmvc") return gen_complement_mmvc(base_graph(r));
    if (kind == "updom_mmhs") return updom_to_mmhs(base_graph(r));
    throw std::invalid_argument("unknown recipe kind '" + kind + "'");
}

}  // namespace blockset::gen
