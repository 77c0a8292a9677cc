#include "blockset/hypergraph.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "blockset/set_kernels.hpp"

namespace blockset {

Hypergraph::Hypergraph(int n) : n_(n), universe_(VertexSet::range(n)) {}

Hypergraph::Hypergraph(int n, std::vector<VertexSet> edges) : Hypergraph(n) {
    for (const auto& e : edges) add_edge(e);
}

void Hypergraph::add_edge(const VertexSet& e) {
    if (!e.is_subset_of(universe_))
        throw std::out_of_range("hyperedge " + e.to_string() + " leaves the vertex universe");
    edges_.push_back(e);
}

void Hypergraph::restrict_universe(const VertexSet& keep) {
    universe_ &= keep;
    for (auto& e : edges_) e &= universe_;
}

int Hypergraph::rank() const {
    int r = 0;
    for (const auto& e : edges_) r = std::max(r, e.size());
    return r;
}

int Hypergraph::max_degree() const {
    int best = 0;
    universe_.for_each([&](Vertex v) {
        int d = 0;
        for (const auto& e : edges_) d += e.contains(v);
        best = std::max(best, d);
    });
    return best;
}

VertexSet Hypergraph::covered_vertices() const {
    VertexSet out;
    for (const auto& e : edges_) out |= e;
    return out;
}

bool Hypergraph::has_empty_edge() const {
    return std::any_of(edges_.begin(), edges_.end(), [](const VertexSet& e) { return e.empty(); });
}

Hypergraph Hypergraph::canonical() const {
    Hypergraph h = *this;
    std::sort(h.edges_.begin(), h.edges_.end());
    return h;
}

bool Hypergraph::operator==(const Hypergraph& o) const {
    if (n_ != o.n_ || universe_ != o.universe_ || edges_.size() != o.edges_.size()) return false;
    return canonical().edges_ == o.canonical().edges_;
}

bool is_hitting_set(const Hypergraph& h, const VertexSet& s) {
    return kernels::hits_all(h.edges(), s);
}

bool is_independent_in(const Hypergraph& h, const VertexSet& s) {
    return !kernels::any_subset_of(h.edges(), s);
}

Hypergraph closed_neighborhood_hypergraph(const Graph& g) {
    Hypergraph h(g.num_vertices());
    std::vector<VertexSet> seen;
    for (Vertex v = 0; v < g.num_vertices(); ++v) {
        VertexSet nv = closed_neighborhood(g, v);
        if (std::find(seen.begin(), seen.end(), nv) != seen.end()) continue;
        seen.push_back(nv);
        h.add_edge(nv);
    }
    return h;
}

Hypergraph edge_hypergraph(const Graph& g) {
    Hypergraph h(g.num_vertices());
    for (auto [u, v] : g.edges()) h.add_edge(VertexSet{u, v});
    return h;
}

}  // namespace blockset
