#pragma once

#include <utility>
#include <vector>

#include "blockset/vertex_set.hpp"

namespace blockset {

/// Simple undirected graph on vertices 0..n-1.
class Graph {
   public:
    Graph() = default;
    explicit Graph(int n);

    int num_vertices() const { return n_; }
    int num_edges() const;

    /// Adds {u,v}; returns false if the edge was already present.
    /// Throws std::invalid_argument on loops, std::out_of_range on bad ids.
    bool add_edge(Vertex u, Vertex v);
    bool has_edge(Vertex u, Vertex v) const { return adj_[u].contains(v); }

    const VertexSet& neighbors(Vertex v) const { return adj_[v]; }
    VertexSet vertices() const { return VertexSet::range(n_); }
    /// Union of open neighborhoods of `s`.
    VertexSet neighbors_of(const VertexSet& s) const;

    /// Edges as (u,v) with u < v, lexicographically sorted.
    std::vector<std::pair<Vertex, Vertex>> edges() const;

    bool operator==(const Graph& o) const = default;

   private:
    void check_vertex(Vertex v) const;

    int n_ = 0;
    std::vector<VertexSet> adj_;
};

struct InducedSubgraph {
    Graph graph;
    /// new id -> old id
    std::vector<Vertex> old_of_new;
    /// old id -> new id, -1 if dropped
    std::vector<Vertex> new_of_old;
};

InducedSubgraph induced_subgraph(const Graph& g, const VertexSet& s);
Graph complement(const Graph& g);
VertexSet closed_neighborhood(const Graph& g, Vertex v);
bool is_independent_set(const Graph& g, const VertexSet& s);
bool is_clique(const Graph& g, const VertexSet& s);
bool is_triangle_free(const Graph& g);

/// Size of a maximum independent set of g[candidates].
int independence_number(const Graph& g, const VertexSet& candidates);
inline int independence_number(const Graph& g) { return independence_number(g, g.vertices()); }

/// The maximum independent set of g[candidates] whose sorted vertex list is
/// lexicographically smallest.
VertexSet lexicographic_max_independent_set(const Graph& g, const VertexSet& candidates);

}  // namespace blockset
