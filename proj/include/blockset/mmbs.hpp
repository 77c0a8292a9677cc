#pragma once

#include <optional>

#include "blockset/graph.hpp"
#include "blockset/hypergraph.hpp"
#include "blockset/mmhs.hpp"
#include "blockset/oracle.hpp"
#include "blockset/search_context.hpp"

namespace blockset::mmbs {

enum class Engine { ImprovedFpt, AltBranch, ExtensionBranch };

/// One hyperedge per maximum independent set of g.
Hypergraph mis_hypergraph(const Graph& g, int capacity = oracle::kDefaultCapacity);

/// Minimal blocking set test through independence numbers only.
bool verify_minimal_blocking_set(const Graph& g, const VertexSet& y);

/// A minimal blocking set of size exactly beta (Exactly) or at most beta
/// (AtMost), if one exists.
std::optional<VertexSet> mmbs_search_exact(const Graph& g, int beta, mmhs::SizeMode mode,
                                           SearchContext* ctx = nullptr);

/// mmbs(g) >= beta, via the chosen engine on mis_hypergraph(g).
bool mmbs_at_least_fixed_alpha(const Graph& g, int beta, Engine engine, SearchContext* ctx = nullptr,
                               int capacity = oracle::kDefaultCapacity);

}  // namespace blockset::mmbs
