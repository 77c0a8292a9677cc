#include <stdexcept>

#include "blockset/mmhs.hpp"
#include "blockset/set_kernels.hpp"

namespace blockset::mmhs {

namespace {

void expand(SearchContext* ctx, std::uint64_t depth) {
    if (ctx) ctx->expand(depth);
}

bool all_have_private(const Hypergraph& h, const VertexSet& x) {
    bool ok = true;
    x.for_each([&](Vertex v) {
        if (ok && !kernels::has_private_edge(h.edges(), x, v)) ok = false;
    });
    return ok;
}

bool size_rec(const Hypergraph& h, int beta, SizeMode mode, const VertexSet& x, SearchContext* ctx) {
    expand(ctx, x.size());
    // A vertex that lost every private edge never regains one in a superset.
    if (!all_have_private(h, x)) return false;
    const int j = kernels::first_disjoint(h.edges(), x);
    if (j < 0) return mode == SizeMode::AtMost ? x.size() <= beta : x.size() == beta;
    if (x.size() >= beta) return false;
    bool found = false;
    h.edge(j).for_each([&](Vertex v) {
        if (!found && size_rec(h, beta, mode, x.with(v), ctx)) found = true;
    });
    return found;
}

std::optional<VertexSet> ext_rec(const Hypergraph& h, int beta, const VertexSet& x, SearchContext* ctx) {
    expand(ctx, x.size());
    if (x.size() == beta) return simple_ext(h, x);
    const int j = kernels::first_disjoint(h.edges(), x);
    if (j < 0) return std::nullopt;
    std::optional<VertexSet> found;
    h.edge(j).for_each([&](Vertex v) {
        if (!found) found = ext_rec(h, beta, x.with(v), ctx);
    });
    return found;
}

struct ImprovedRun {
    int beta;
    SearchContext* ctx;
    MeasureAudit* audit;
};

bool improved_rec(const ImprovedRun& run, const Hypergraph& h, const VertexSet& x, std::uint64_t depth) {
    expand(run.ctx, depth);
    const Hypergraph hx = build_h_xbar(h, x);
    if (hx.num_edges() == 0) return x.size() >= run.beta && is_minimal_hitting(h, x);
    const VertexSet s = greedy_minimal_hitting_set(hx);
    if (s.size() >= run.beta) return true;
    const int parent_m = measure(h, x);
    bool found = false;
    for_each_subset(s, [&](const VertexSet& s1) {
        if (found || kernels::any_subset_of(hx.edges(), s1)) return;
        const Hypergraph child = build_h_i(h, s1);
        const VertexSet child_x = x | (s - s1);
        if (run.audit) {
            ++run.audit->checks;
            if (measure(child, child_x) >= parent_m) ++run.audit->violations;
        }
        if (improved_rec(run, child, child_x, depth + 1)) found = true;
    });
    return found;
}

bool alt_rec(const Hypergraph& h, int beta, std::uint64_t depth, SearchContext* ctx) {
    expand(ctx, depth);
    if (beta <= 0) return true;
    if (h.num_edges() == 0) return false;
    const Hypergraph c = clutter_reduce(h);
    const VertexSet h0 = c.edge(0);
    bool found = false;
    h0.for_each([&](Vertex v) {
        for (int j = 0; j < c.num_edges() && !found; ++j)
            if (c.edge(j).contains(v) && alt_rec(alt_reduce(c, v, j), beta - 1, depth + 1, ctx)) found = true;
    });
    return found;
}

}  // namespace

bool is_minimal_hitting(const Hypergraph& h, const VertexSet& s) {
    return kernels::hits_all(h.edges(), s) && all_have_private(h, s);
}

bool search_tree_size(const Hypergraph& h, int beta, SizeMode mode, SearchContext* ctx) {
    if (h.has_empty_edge()) return false;
    return size_rec(h, beta, mode, VertexSet{}, ctx);
}

std::optional<VertexSet> simple_ext(const Hypergraph& h, const VertexSet& x) {
    if (h.has_empty_edge()) return std::nullopt;
    if (!x.is_subset_of(h.universe())) throw std::invalid_argument("simple_ext: X leaves the universe");
    const auto& edges = h.edges();
    const std::vector<Vertex> xs = x.to_vector();
    std::vector<std::vector<int>> options(xs.size());
    for (std::size_t k = 0; k < xs.size(); ++k) {
        for (int j = 0; j < h.num_edges(); ++j)
            if ((edges[j] & x) == VertexSet::singleton(xs[k])) options[k].push_back(j);
        if (options[k].empty()) return std::nullopt;
    }
    // Odometer over one private-edge choice per member of X.
    std::vector<std::size_t> pick(xs.size(), 0);
    while (true) {
        VertexSet f;
        for (std::size_t k = 0; k < xs.size(); ++k) f |= edges[options[k][pick[k]]];
        f -= x;
        if (!kernels::any_subset_of(edges, f)) {
            VertexSet s = h.universe() - f;
            (s - x).for_each([&](Vertex v) {
                if (kernels::hits_all(edges, s.without(v))) s.erase(v);
            });
            return s;
        }
        std::size_t k = 0;
        while (k < xs.size() && ++pick[k] == options[k].size()) pick[k++] = 0;
        if (k == xs.size()) return std::nullopt;
    }
}

std::optional<VertexSet> extension_branch(const Hypergraph& h, int beta, SearchContext* ctx) {
    if (beta <= 0) return greedy_minimal_hitting_set(h);
    if (h.has_empty_edge()) return std::nullopt;
    return ext_rec(h, beta, VertexSet{}, ctx);
}

bool improved_fpt(const Hypergraph& h, int beta, SearchContext* ctx, MeasureAudit* audit) {
    if (h.has_empty_edge()) throw std::invalid_argument("improved_fpt: empty hyperedge");
    if (beta < 1) throw std::invalid_argument("improved_fpt: beta must be >= 1");
    return improved_rec(ImprovedRun{beta, ctx, audit}, h, VertexSet{}, 0);
}

bool alt_branch(const Hypergraph& h, int beta, SearchContext* ctx) {
    if (beta < 0) throw std::invalid_argument("alt_branch: beta must be >= 0");
    return alt_rec(h, beta, 0, ctx);
}

bool kernel_improved(const Hypergraph& h, int beta, SunflowerFn fn, SearchContext* ctx, KernelOutcome* outcome) {
    KernelOutcome k = sunflower_kernel(h, beta, fn);
    const bool yes = k.kind == KernelOutcome::Kind::Yes || improved_fpt(k.reduced.h, beta, ctx);
    if (outcome) *outcome = std::move(k);
    return yes;
}

}  // namespace blockset::mmhs
