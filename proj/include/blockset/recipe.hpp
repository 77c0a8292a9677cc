#pragma once

#include <string>
#include <variant>

#include <json.hpp>

#include "blockset/generators.hpp"

// JSON instance recipes, so that generated corpora can be rebuilt exactly.
//
//   {"kind":"graph","n":8,"p":0.4,"seed":7}
//   {"kind":"hypergraph","n":8,"m":10,"max_edge_size":4,"seed":7}
//   {"kind":"mcis_join","parts":[2,2],"cross_prob":0.5,"seed":3}
//   {"kind":"updom","parts":[2,2],"cross_prob":0.5,"seed":3}
//   {"kind":"pendant","base":{...graph recipe...}}
//   {"kind":"complement_mmvc","base":{...}}
//   {"kind":"updom_mmhs","base":{...}}
namespace blockset::gen {

using Instance = std::variant<Graph, Hypergraph>;

/// Throws std::invalid_argument on unknown kinds or missing fields.
Instance build_recipe(const nlohmann::json& recipe);

}  // namespace blockset::gen
