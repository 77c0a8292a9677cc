#include "blockset/oracle.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "blockset/set_kernels.hpp"

namespace blockset::oracle {

namespace {

void require_capacity(int n, int capacity) {
    if (n > capacity)
        throw CapacityError("oracle enumeration over " + std::to_string(n) + " vertices exceeds capacity " +
                            std::to_string(capacity));
}

// Subsets of [0,n) as 64-bit masks; n <= capacity <= 30 in practice.
template <typename F>
void for_each_mask(int n, F&& f) {
    const std::uint64_t limit = std::uint64_t{1} << n;
    for (std::uint64_t m = 0; m < limit; ++m) f(VertexSet(m, 0));
}

template <typename Pred>
Extremum max_over_subsets(int n, Pred&& pred) {
    Extremum best{-1, {}};
    for_each_mask(n, [&](const VertexSet& s) {
        if (s.size() > best.value && pred(s)) best = {s.size(), s};
    });
    return best;
}

}  // namespace

MisFamily enumerate_max_independent_sets(const Graph& g, int capacity) {
    const int n = g.num_vertices();
    require_capacity(n, capacity);
    MisFamily fam;
    for_each_mask(n, [&](const VertexSet& s) {
        if (!is_independent_set(g, s)) return;
        if (s.size() > fam.alpha) {
            fam.alpha = s.size();
            fam.sets.clear();
        }
        if (s.size() == fam.alpha) fam.sets.push_back(s);
    });
    return fam;
}

bool is_blocking_set(const Graph& g, const VertexSet& y) {
    const auto fam = enumerate_max_independent_sets(g);
    return kernels::hits_all(fam.sets, y);
}

bool is_minimal_blocking_set(const Graph& g, const VertexSet& y) {
    if (!y.is_subset_of(g.vertices())) return false;
    const auto fam = enumerate_max_independent_sets(g);
    return is_minimal_hitting_set(Hypergraph(g.num_vertices(), fam.sets), y);
}

bool is_minimal_hitting_set(const Hypergraph& h, const VertexSet& s) {
    if (!kernels::hits_all(h.edges(), s)) return false;
    bool ok = true;
    s.for_each([&](Vertex v) {
        if (ok && !kernels::has_private_edge(h.edges(), s, v)) ok = false;
    });
    return ok;
}

bool is_dominating_set(const Graph& g, const VertexSet& d) {
    return (d | g.neighbors_of(d)) == g.vertices();
}

bool is_minimal_dominating_set(const Graph& g, const VertexSet& d) {
    if (!is_dominating_set(g, d)) return false;
    bool ok = true;
    d.for_each([&](Vertex v) {
        if (ok && is_dominating_set(g, d.without(v))) ok = false;
    });
    return ok;
}

Extremum mmbs_bruteforce(const Graph& g, int capacity) {
    const int n = g.num_vertices();
    require_capacity(n, capacity);
    if (n == 0) throw std::invalid_argument("mmbs of the empty graph is undefined");
    const auto fam = enumerate_max_independent_sets(g, capacity);
    Hypergraph h(n, fam.sets);
    return max_over_subsets(n, [&](const VertexSet& s) { return is_minimal_hitting_set(h, s); });
}

Extremum mmhs_bruteforce(const Hypergraph& h, int capacity) {
    const int n = h.num_vertices();
    require_capacity(n, capacity);
    if (h.has_empty_edge()) throw std::invalid_argument("hypergraph has an empty hyperedge");
    const VertexSet u = h.universe();
    return max_over_subsets(n, [&](const VertexSet& s) { return s.is_subset_of(u) && is_minimal_hitting_set(h, s); });
}

Extremum mmds_bruteforce(const Graph& g, int capacity) {
    const int n = g.num_vertices();
    require_capacity(n, capacity);
    return max_over_subsets(n, [&](const VertexSet& s) { return is_minimal_dominating_set(g, s); });
}

bool has_unique_mis(const Graph& g, int capacity) {
    return enumerate_max_independent_sets(g, capacity).sets.size() == 1;
}

std::vector<VertexSet> all_minimal_hitting_sets(const Hypergraph& h, int capacity) {
    require_capacity(h.num_vertices(), capacity);
    std::vector<VertexSet> out;
    const VertexSet u = h.universe();
    for_each_mask(h.num_vertices(), [&](const VertexSet& s) {
        if (s.is_subset_of(u) && is_minimal_hitting_set(h, s)) out.push_back(s);
    });
    return out;
}

std::vector<VertexSet> all_minimal_blocking_sets(const Graph& g, int capacity) {
    const auto fam = enumerate_max_independent_sets(g, capacity);
    return blocker(g.num_vertices(), fam.sets, capacity);
}

std::vector<VertexSet> all_minimal_dominating_sets(const Graph& g, int capacity) {
    require_capacity(g.num_vertices(), capacity);
    std::vector<VertexSet> out;
    for_each_mask(g.num_vertices(), [&](const VertexSet& s) {
        if (is_minimal_dominating_set(g, s)) out.push_back(s);
    });
    return out;
}

std::vector<VertexSet> blocker(int n, const std::vector<VertexSet>& family, int capacity) {
    require_capacity(n, capacity);
    // All transversals first, then keep those with no transversal proper subset.
    std::vector<VertexSet> hitting;
    for_each_mask(n, [&](const VertexSet& s) {
        if (kernels::hits_all(family, s)) hitting.push_back(s);
    });
    std::vector<VertexSet> out;
    for (const auto& s : hitting) {
        bool minimal = true;
        for (const auto& t : hitting)
            if (t != s && t.is_subset_of(s)) {
                minimal = false;
                break;
            }
        if (minimal) out.push_back(s);
    }
    return out;
}

bool has_multicolored_independent_set(const Graph& g, const std::vector<VertexSet>& parts) {
    // Depth-first choice of one vertex per part.
    auto rec = [&](auto&& self, std::size_t i, VertexSet chosen) -> bool {
        if (i == parts.size()) return true;
        bool found = false;
        (parts[i] - g.neighbors_of(chosen)).for_each([&](Vertex v) {
            if (!found && !chosen.contains(v) && self(self, i + 1, chosen.with(v))) found = true;
        });
        return found;
    };
    return rec(rec, 0, VertexSet{});
}

}  // namespace blockset::oracle
