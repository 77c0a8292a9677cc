#pragma once

#include <vector>

#include "blockset/graph.hpp"
#include "blockset/hypergraph.hpp"
#include "blockset/vertex_set.hpp"

// Exhaustive reference implementations. Everything here scans all 2^n subsets
// and is meant to be obviously correct rather than fast.
namespace blockset::oracle {

inline constexpr int kDefaultCapacity = 20;

struct MisFamily {
    int alpha = 0;
    std::vector<VertexSet> sets;  // numeric order
};

struct Extremum {
    int value = 0;
    VertexSet certificate;
};

MisFamily enumerate_max_independent_sets(const Graph& g, int capacity = kDefaultCapacity);

bool is_blocking_set(const Graph& g, const VertexSet& y);
bool is_minimal_blocking_set(const Graph& g, const VertexSet& y);
bool is_minimal_hitting_set(const Hypergraph& h, const VertexSet& s);
bool is_dominating_set(const Graph& g, const VertexSet& d);
bool is_minimal_dominating_set(const Graph& g, const VertexSet& d);

/// Ties are broken by the smallest bitmask among maximum-size sets.
Extremum mmbs_bruteforce(const Graph& g, int capacity = kDefaultCapacity);
Extremum mmhs_bruteforce(const Hypergraph& h, int capacity = kDefaultCapacity);
Extremum mmds_bruteforce(const Graph& g, int capacity = kDefaultCapacity);
bool has_unique_mis(const Graph& g, int capacity = kDefaultCapacity);

/// All minimal hitting sets of h (subsets of its universe), numeric order.
std::vector<VertexSet> all_minimal_hitting_sets(const Hypergraph& h, int capacity = kDefaultCapacity);
std::vector<VertexSet> all_minimal_blocking_sets(const Graph& g, int capacity = kDefaultCapacity);
std::vector<VertexSet> all_minimal_dominating_sets(const Graph& g, int capacity = kDefaultCapacity);

/// b(A): inclusion-minimal transversals of `family` over ground set [0,n).
std::vector<VertexSet> blocker(int n, const std::vector<VertexSet>& family, int capacity = kDefaultCapacity);

/// Brute-force multicolored independent set: one vertex from each part.
bool has_multicolored_independent_set(const Graph& g, const std::vector<VertexSet>& parts);

}  // namespace blockset::oracle
