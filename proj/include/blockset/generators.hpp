#pragma once

#include <cstdint>
#include <vector>

#include "blockset/graph.hpp"
#include "blockset/hypergraph.hpp"

namespace blockset::gen {

/// Graph whose vertex set is partitioned into cliques (the parts).
struct PartitionedGraph {
    Graph graph;
    std::vector<VertexSet> parts;
};

/// Throws std::invalid_argument unless the parts are disjoint cliques covering V.
void validate_partition(const PartitionedGraph& pg);

/// Adds a pendant vertex v + n attached to every vertex v.
Graph gen_pendant(const Graph& g);

/// Complement of a triangle-free graph with at least one edge; mmbs of the
/// result equals the maximum minimal vertex cover of the input.
Graph gen_complement_mmvc(const Graph& g);

/// Copy of the graph (ids 0..n-1) plus k independent vertices (n..n+k-1)
/// joined to all of it. mmbs >= 2 iff a multicolored independent set exists.
Graph gen_mcis_join(const PartitionedGraph& pg);

/// Three copies A (v), B (n+v), C (2n+v); each color class is a clique minus
/// the triangles {vA,vB,vC}; a cross edge {u,v} adds {uA,vB} and {uB,vA}.
Graph gen_updom(const PartitionedGraph& pg);

/// Closed neighborhoods as hyperedges, duplicates dropped.
Hypergraph updom_to_mmhs(const Graph& g);

/// Each pair {u,v}, u < v in lexicographic order, is an edge iff uniform() < p.
Graph random_graph(int n, double edge_prob, std::uint64_t seed);

/// m edges; each has size 1 + below(max_edge_size) (capped at n), filled with
/// distinct vertices drawn by below(n).
Hypergraph random_hypergraph(int n, int m, int max_edge_size, std::uint64_t seed);

/// Parts of the given sizes (consecutive ids), cliques inside, and each
/// cross pair joined with probability cross_prob.
PartitionedGraph random_partitioned(const std::vector<int>& part_sizes, double cross_prob, std::uint64_t seed);

}  // namespace blockset::gen
