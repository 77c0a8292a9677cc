#include "blockset/graph.hpp"

#include <stdexcept>
#include <string>

namespace blockset {

Graph::Graph(int n) : n_(n) {
    if (n < 0) throw std::invalid_argument("negative vertex count");
    if (n > kMaxVertices)
        throw CapacityError("vertex count " + std::to_string(n) + " exceeds capacity 128");
    adj_.assign(n, VertexSet{});
}

void Graph::check_vertex(Vertex v) const {
    if (v < 0 || v >= n_)
        throw std::out_of_range("vertex " + std::to_string(v) + " out of range [0," +
                                std::to_string(n_) + ")");
}

int Graph::num_edges() const {
    int twice = 0;
    for (const auto& a : adj_) twice += a.size();
    return twice / 2;
}

bool Graph::add_edge(Vertex u, Vertex v) {
    check_vertex(u);
    check_vertex(v);
    if (u == v) throw std::invalid_argument("loop at vertex " + std::to_string(u));
    if (adj_[u].contains(v)) return false;
    adj_[u].insert(v);
    adj_[v].insert(u);
    return true;
}

VertexSet Graph::neighbors_of(const VertexSet& s) const {
    VertexSet out;
    s.for_each([&](Vertex v) { out |= adj_[v]; });
    return out;
}

std::vector<std::pair<Vertex, Vertex>> Graph::edges() const {
    std::vector<std::pair<Vertex, Vertex>> out;
    for (Vertex u = 0; u < n_; ++u)
        adj_[u].for_each([&](Vertex v) {
            if (u < v) out.emplace_back(u, v);
        });
    return out;
}

InducedSubgraph induced_subgraph(const Graph& g, const VertexSet& s) {
    const int n = g.num_vertices();
    if (!s.is_subset_of(g.vertices()))
        throw std::out_of_range("induced_subgraph: vertex set leaves [0,n)");
    InducedSubgraph out;
    out.new_of_old.assign(n, -1);
    s.for_each([&](Vertex v) {
        out.new_of_old[v] = static_cast<Vertex>(out.old_of_new.size());
        out.old_of_new.push_back(v);
    });
    out.graph = Graph(static_cast<int>(out.old_of_new.size()));
    for (auto [u, v] : g.edges())
        if (s.contains(u) && s.contains(v)) out.graph.add_edge(out.new_of_old[u], out.new_of_old[v]);
    return out;
}

Graph complement(const Graph& g) {
    const int n = g.num_vertices();
    Graph c(n);
    for (Vertex u = 0; u < n; ++u)
        for (Vertex v = u + 1; v < n; ++v)
            if (!g.has_edge(u, v)) c.add_edge(u, v);
    return c;
}

VertexSet closed_neighborhood(const Graph& g, Vertex v) {
    if (v < 0 || v >= g.num_vertices()) throw std::out_of_range("closed_neighborhood: bad vertex");
    return g.neighbors(v).with(v);
}

bool is_independent_set(const Graph& g, const VertexSet& s) {
    bool ok = true;
    s.for_each([&](Vertex v) {
        if (v >= g.num_vertices() || g.neighbors(v).intersects(s)) ok = false;
    });
    return ok;
}

bool is_clique(const Graph& g, const VertexSet& s) {
    bool ok = true;
    s.for_each([&](Vertex v) {
        if (v >= g.num_vertices() || !s.without(v).is_subset_of(g.neighbors(v))) ok = false;
    });
    return ok;
}

bool is_triangle_free(const Graph& g) {
    for (auto [u, v] : g.edges())
        if (g.neighbors(u).intersects(g.neighbors(v))) return false;
    return true;
}

namespace {

// Branch on the lowest candidate: either drop it or take it and drop its
// neighbours. Vertices of degree <= 1 inside P are taken greedily.
int mis_rec(const Graph& g, VertexSet p) {
    int taken = 0;
    while (true) {
        bool changed = false;
        VertexSet rest = p;
        while (!rest.empty()) {
            Vertex v = rest.first();
            rest.erase(v);
            if ((g.neighbors(v) & p).size() <= 1 && p.contains(v)) {
                ++taken;
                p -= g.neighbors(v);
                p.erase(v);
                rest &= p;
                changed = true;
            }
        }
        if (!changed) break;
    }
    if (p.empty()) return taken;
    // Pick a vertex of maximum degree in g[P].
    Vertex best = -1;
    int best_deg = -1;
    p.for_each([&](Vertex v) {
        int d = (g.neighbors(v) & p).size();
        if (d > best_deg) {
            best_deg = d;
            best = v;
        }
    });
    int without = mis_rec(g, p.without(best));
    int with = 1 + mis_rec(g, p - g.neighbors(best) - VertexSet::singleton(best));
    return taken + std::max(without, with);
}

}  // namespace

int independence_number(const Graph& g, const VertexSet& candidates) {
    return mis_rec(g, candidates & g.vertices());
}

VertexSet lexicographic_max_independent_set(const Graph& g, const VertexSet& candidates) {
    VertexSet p = candidates & g.vertices();
    int remaining = independence_number(g, p);
    VertexSet out;
    while (remaining > 0) {
        Vertex pick = -1;
        VertexSet scan = p;
        while (!scan.empty()) {
            Vertex v = scan.first();
            scan.erase(v);
            VertexSet after = p - g.neighbors(v) - VertexSet::singleton(v);
            if (1 + independence_number(g, after) == remaining) {
                pick = v;
                p = after;
                break;
            }
        }
        out.insert(pick);
        --remaining;
    }
    return out;
}

}  // namespace blockset
