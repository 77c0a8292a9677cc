#pragma once

#include <optional>
#include <unordered_map>

#include "blockset/graph.hpp"

// Arithmetic of (X,Z)-independent sets. Every function takes a `scope`, the
// vertex set of the subgraph being queried (V(G_X) inside the DP); the
// overloads without it use the whole graph.
namespace blockset {

/// Size or minus infinity (nullopt).
using ExtSize = std::optional<int>;

enum class Criticality { VCritical, VBarCritical, VMixed };

const char* to_string(Criticality c);

/// Memoized independence numbers of induced subgraphs of one graph.
class AlphaCache {
   public:
    explicit AlphaCache(const Graph& g) : g_(g) {}
    int alpha(const VertexSet& w);
    const Graph& graph() const { return g_; }
    std::size_t size() const { return cache_.size(); }

   private:
    const Graph& g_;
    std::unordered_map<VertexSet, int, VertexSetHash> cache_;
};

/// Largest independent I ⊆ scope with I ∩ X = Z. Throws std::invalid_argument
/// unless Z ⊆ X and Z is independent.
ExtSize alpha_xz(AlphaCache& ac, const VertexSet& scope, const VertexSet& x, const VertexSet& z);
/// Same, restricted to I ∩ Y = ∅.
ExtSize alpha_xz_avoiding(AlphaCache& ac, const VertexSet& scope, const VertexSet& x, const VertexSet& z,
                          const VertexSet& y);
/// Y meets every maximum (X,Z)-independent set.
bool is_xz_blocking(AlphaCache& ac, const VertexSet& scope, const VertexSet& x, const VertexSet& z,
                    const VertexSet& y);
Criticality classify_criticality(AlphaCache& ac, const VertexSet& scope, const VertexSet& x, const VertexSet& z,
                                 Vertex v);

ExtSize alpha_xz(const Graph& g, const VertexSet& x, const VertexSet& z);
bool is_xz_blocking(const Graph& g, const VertexSet& x, const VertexSet& z, const VertexSet& y);
Criticality classify_criticality(const Graph& g, const VertexSet& x, const VertexSet& z, Vertex v);

}  // namespace blockset
