#include <stdexcept>

#include "blockset/mmhs.hpp"
#include "blockset/set_kernels.hpp"

namespace blockset::mmhs {

Hypergraph clutter_reduce(const Hypergraph& h) {
    const auto& edges = h.edges();
    Hypergraph out(h.num_vertices());
    out.restrict_universe(h.universe());
    for (std::size_t i = 0; i < edges.size(); ++i) {
        bool keep = true;
        for (std::size_t j = 0; j < edges.size() && keep; ++j) {
            if (i == j) continue;
            if (edges[j] == edges[i]) keep = j > i;
            else if (edges[j].is_subset_of(edges[i])) keep = false;
        }
        if (keep) out.add_edge(edges[i]);
    }
    return out;
}

Relabelled drop_isolated(const Hypergraph& h) {
    const VertexSet covered = h.covered_vertices();
    Relabelled out;
    std::vector<Vertex> new_of_old(h.num_vertices(), -1);
    covered.for_each([&](Vertex v) {
        new_of_old[v] = static_cast<Vertex>(out.old_of_new.size());
        out.old_of_new.push_back(v);
    });
    out.h = Hypergraph(static_cast<int>(out.old_of_new.size()));
    for (const auto& e : h.edges()) {
        VertexSet mapped;
        e.for_each([&](Vertex v) { mapped.insert(new_of_old[v]); });
        out.h.add_edge(mapped);
    }
    return out;
}

Hypergraph build_h_i(const Hypergraph& h, const VertexSet& i) {
    if (kernels::any_subset_of(h.edges(), i))
        throw std::invalid_argument("build_h_i: " + i.to_string() + " contains a hyperedge");
    Hypergraph out(h.num_vertices());
    out.restrict_universe(h.universe() - i);
    for (const auto& e : h.edges()) out.add_edge(e - i);
    return out;
}

Hypergraph build_h_xbar(const Hypergraph& h, const VertexSet& x) {
    Hypergraph out(h.num_vertices());
    out.restrict_universe(h.universe());
    for (const auto& e : h.edges())
        if (!e.intersects(x)) out.add_edge(e);
    return out;
}

int measure(const Hypergraph& h, const VertexSet& x) {
    int m = 0;
    for (const auto& e : h.edges())
        if (!e.intersects(x)) m = std::max(m, e.size());
    return m;
}

VertexSet greedy_minimal_hitting_set(const Hypergraph& h) {
    VertexSet s = h.covered_vertices();
    const VertexSet start = s;
    start.for_each([&](Vertex v) {
        if (kernels::hits_all(h.edges(), s.without(v))) s.erase(v);
    });
    return s;
}

Hypergraph alt_reduce(const Hypergraph& h, Vertex v_star, int h_star) {
    if (h_star < 0 || h_star >= h.num_edges()) throw std::out_of_range("alt_reduce: edge index out of range");
    const VertexSet hs = h.edge(h_star);
    if (!hs.contains(v_star)) throw std::invalid_argument("alt_reduce: v* is not in H*");
    Hypergraph out(h.num_vertices());
    out.restrict_universe(h.universe() - hs);
    for (const auto& e : h.edges()) {
        if (e.contains(v_star)) continue;
        const VertexSet r = e - hs;
        if (r.empty()) throw std::invalid_argument("alt_reduce: input is not a clutter");
        out.add_edge(r);
    }
    return out;
}

}  // namespace blockset::mmhs
