#include "blockset/generators.hpp"

#include <stdexcept>

#include "blockset/rng.hpp"

namespace blockset::gen {

void validate_partition(const PartitionedGraph& pg) {
    VertexSet seen;
    for (const auto& p : pg.parts) {
        if (p.intersects(seen)) throw std::invalid_argument("parts overlap");
        if (!is_clique(pg.graph, p)) throw std::invalid_argument("part " + p.to_string() + " is not a clique");
        seen |= p;
    }
    if (seen != pg.graph.vertices()) throw std::invalid_argument("parts do not cover the vertex set");
}

Graph gen_pendant(const Graph& g) {
    const int n = g.num_vertices();
    Graph out(2 * n);
    for (auto [u, v] : g.edges()) out.add_edge(u, v);
    for (Vertex v = 0; v < n; ++v) out.add_edge(v, v + n);
    return out;
}

Graph gen_complement_mmvc(const Graph& g) {
    if (g.num_edges() == 0) throw std::invalid_argument("gen_complement_mmvc: input has no edge");
    if (!is_triangle_free(g)) throw std::invalid_argument("gen_complement_mmvc: input has a triangle");
    return complement(g);
}

Graph gen_mcis_join(const PartitionedGraph& pg) {
    validate_partition(pg);
    const int n = pg.graph.num_vertices();
    const int k = static_cast<int>(pg.parts.size());
    Graph out(n + k);
    for (auto [u, v] : pg.graph.edges()) out.add_edge(u, v);
    for (Vertex u = 0; u < n; ++u)
        for (int j = 0; j < k; ++j) out.add_edge(u, n + j);
    return out;
}

Graph gen_updom(const PartitionedGraph& pg) {
    validate_partition(pg);
    const int n = pg.graph.num_vertices();
    Graph out(3 * n);
    for (const auto& part : pg.parts) {
        std::vector<Vertex> u;
        part.for_each([&](Vertex v) {
            for (int c = 0; c < 3; ++c) u.push_back(c * n + v);
        });
        for (std::size_t i = 0; i < u.size(); ++i)
            for (std::size_t j = i + 1; j < u.size(); ++j)
                if (u[i] % n != u[j] % n) out.add_edge(u[i], u[j]);
    }
    std::vector<int> color(n, -1);
    for (int i = 0; i < static_cast<int>(pg.parts.size()); ++i) pg.parts[i].for_each([&](Vertex v) { color[v] = i; });
    for (auto [u, v] : pg.graph.edges()) {
        if (color[u] == color[v]) continue;
        out.add_edge(u, n + v);
        out.add_edge(n + u, v);
    }
    return out;
}

Hypergraph updom_to_mmhs(const Graph& g) { return closed_neighborhood_hypergraph(g); }

Graph random_graph(int n, double edge_prob, std::uint64_t seed) {
    if (n < 0) throw std::invalid_argument("random_graph: negative n");
    if (!(edge_prob >= 0.0 && edge_prob <= 1.0)) throw std::invalid_argument("random_graph: probability outside [0,1]");
    Rng rng(seed);
    Graph g(n);
    for (Vertex u = 0; u < n; ++u)
        for (Vertex v = u + 1; v < n; ++v)
            if (rng.uniform() < edge_prob) g.add_edge(u, v);
    return g;
}

Hypergraph random_hypergraph(int n, int m, int max_edge_size, std::uint64_t seed) {
    if (n <= 0 || m < 0 || max_edge_size <= 0) throw std::invalid_argument("random_hypergraph: bad parameters");
    Rng rng(seed);
    Hypergraph h(n);
    for (int i = 0; i < m; ++i) {
        int size = 1 + static_cast<int>(rng.below(max_edge_size));
        if (size > n) size = n;
        VertexSet e;
        while (e.size() < size) e.insert(static_cast<Vertex>(rng.below(n)));
        h.add_edge(e);
    }
    return h;
}

PartitionedGraph random_partitioned(const std::vector<int>& part_sizes, double cross_prob, std::uint64_t seed) {
    if (!(cross_prob >= 0.0 && cross_prob <= 1.0)) throw std::invalid_argument("random_partitioned: bad probability");
    int n = 0;
    for (int s : part_sizes) {
        if (s <= 0) throw std::invalid_argument("random_partitioned: part sizes must be positive");
        n += s;
    }
    PartitionedGraph pg{Graph(n), {}};
    std::vector<int> color(n);
    int next = 0;
    for (int i = 0; i < static_cast<int>(part_sizes.size()); ++i) {
        VertexSet p;
        for (int j = 0; j < part_sizes[i]; ++j) {
            color[next] = i;
            p.insert(next++);
        }
        pg.parts.push_back(p);
    }
    Rng rng(seed);
    for (Vertex u = 0; u < n; ++u)
        for (Vertex v = u + 1; v < n; ++v) {
            if (color[u] == color[v]) pg.graph.add_edge(u, v);
            else if (rng.uniform() < cross_prob) pg.graph.add_edge(u, v);
        }
    return pg;
}

}  // namespace blockset::gen
