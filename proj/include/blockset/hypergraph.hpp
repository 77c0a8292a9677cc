#pragma once

#include <vector>

#include "blockset/graph.hpp"
#include "blockset/vertex_set.hpp"

namespace blockset {

/// Vertex universe plus an ordered list of hyperedges.
///
/// Vertex ids live in [0, n). The universe defaults to all of [0, n) but
/// shrinks when vertices are deleted without relabelling (H_I, alt_reduce),
/// so ids stay stable across recursive calls.
class Hypergraph {
   public:
    Hypergraph() = default;
    explicit Hypergraph(int n);
    Hypergraph(int n, std::vector<VertexSet> edges);

    int num_vertices() const { return n_; }
    int num_edges() const { return static_cast<int>(edges_.size()); }
    const VertexSet& universe() const { return universe_; }
    const std::vector<VertexSet>& edges() const { return edges_; }
    const VertexSet& edge(int i) const { return edges_[i]; }

    /// Throws std::out_of_range if the edge leaves the universe.
    void add_edge(const VertexSet& e);
    void restrict_universe(const VertexSet& keep);

    /// alpha(H): maximum edge size (0 without edges).
    int rank() const;
    /// Delta(H): maximum vertex degree.
    int max_degree() const;
    /// Vertices lying in at least one edge.
    VertexSet covered_vertices() const;
    bool has_empty_edge() const;

    /// Same universe, edges sorted numerically (duplicates kept).
    Hypergraph canonical() const;
    /// Order-insensitive comparison of edge multisets plus universes.
    bool operator==(const Hypergraph& o) const;

   private:
    int n_ = 0;
    VertexSet universe_;
    std::vector<VertexSet> edges_;
};

bool is_hitting_set(const Hypergraph& h, const VertexSet& s);
/// True iff no edge of h is contained in s.
bool is_independent_in(const Hypergraph& h, const VertexSet& s);

/// Hyperedges are the closed neighborhoods N[v], duplicates removed (first
/// occurrence kept).
Hypergraph closed_neighborhood_hypergraph(const Graph& g);
/// One size-2 hyperedge per graph edge.
Hypergraph edge_hypergraph(const Graph& g);

}  // namespace blockset
