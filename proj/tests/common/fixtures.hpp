#pragma once

#include <initializer_list>
#include <utility>

#include "blockset/graph.hpp"
#include "blockset/hypergraph.hpp"

namespace blockset::testing {

inline Graph make_graph(int n, std::initializer_list<std::pair<int, int>> edges) {
    Graph g(n);
    for (auto [u, v] : edges) g.add_edge(u, v);
    return g;
}

inline Graph k2() { return make_graph(2, {{0, 1}}); }
inline Graph k3() { return make_graph(3, {{0, 1}, {1, 2}, {0, 2}}); }
inline Graph k4() { return make_graph(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}}); }
// a-b-c
inline Graph p3() { return make_graph(3, {{0, 1}, {1, 2}}); }
// a-b-c-d-a
inline Graph c4() { return make_graph(4, {{0, 1}, {1, 2}, {2, 3}, {3, 0}}); }
inline Graph c5() { return make_graph(5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0}}); }
// center 0, leaves 1..3
inline Graph star3() { return make_graph(4, {{0, 1}, {0, 2}, {0, 3}}); }

/// Hypergraph on [0, n) from 1-based edge lists, matching the on-disk labels.
inline Hypergraph hyper(int n, std::initializer_list<std::initializer_list<int>> edges) {
    Hypergraph h(n);
    for (auto e : edges) {
        VertexSet s;
        for (int v : e) s.insert(v - 1);
        h.add_edge(s);
    }
    return h;
}

/// 1-based vertex list to a 0-based set.
inline VertexSet ids(std::initializer_list<int> vs) {
    VertexSet s;
    for (int v : vs) s.insert(v - 1);
    return s;
}

// {{1,2},{2,3},{3,4}}
inline Hypergraph path3() { return hyper(4, {{1, 2}, {2, 3}, {3, 4}}); }
// {{c,1},{c,2},{c,3}} with c = 1
inline Hypergraph sunflower3() { return hyper(4, {{1, 2}, {1, 3}, {1, 4}}); }

/// Every labeled graph on n vertices, indexed by an edge bitmask over the
/// pairs (i,j), i<j, in lexicographic order.
inline Graph labeled_graph(int n, unsigned mask) {
    Graph g(n);
    int bit = 0;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j, ++bit)
            if ((mask >> bit) & 1u) g.add_edge(i, j);
    return g;
}

}  // namespace blockset::testing
