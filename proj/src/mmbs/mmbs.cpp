#include "blockset/mmbs.hpp"

#include <stdexcept>

namespace blockset::mmbs {

Hypergraph mis_hypergraph(const Graph& g, int capacity) {
    auto fam = oracle::enumerate_max_independent_sets(g, capacity);
    return Hypergraph(g.num_vertices(), std::move(fam.sets));
}

bool verify_minimal_blocking_set(const Graph& g, const VertexSet& y) {
    const VertexSet all = g.vertices();
    if (!y.is_subset_of(all)) return false;
    const int alpha = independence_number(g);
    if (independence_number(g, all - y) >= alpha) return false;
    bool ok = true;
    y.for_each([&](Vertex v) {
        if (ok && independence_number(g, all - y.without(v)) < alpha) ok = false;
    });
    return ok;
}

namespace {

struct SearchRun {
    const Graph& g;
    int alpha;
    int beta;
    mmhs::SizeMode mode;
    SearchContext* ctx;
};

std::optional<VertexSet> search_rec(const SearchRun& run, const VertexSet& x) {
    if (run.ctx) run.ctx->expand(x.size());
    const VertexSet rest = run.g.vertices() - x;
    const bool blocking = independence_number(run.g, rest) < run.alpha;
    if (run.mode == mmhs::SizeMode::Exactly) {
        if (x.size() == run.beta) {
            if (blocking && verify_minimal_blocking_set(run.g, x)) return x;
            return std::nullopt;
        }
        if (blocking) return std::nullopt;
    } else {
        if (blocking) {
            // Shrink to a minimal blocking subset.
            VertexSet y = x;
            x.for_each([&](Vertex v) {
                if (independence_number(run.g, run.g.vertices() - y.without(v)) < run.alpha) y.erase(v);
            });
            return y;
        }
        if (x.size() >= run.beta) return std::nullopt;
    }
    const VertexSet i = lexicographic_max_independent_set(run.g, rest);
    std::optional<VertexSet> found;
    i.for_each([&](Vertex v) {
        if (!found) found = search_rec(run, x.with(v));
    });
    return found;
}

}  // namespace

std::optional<VertexSet> mmbs_search_exact(const Graph& g, int beta, mmhs::SizeMode mode, SearchContext* ctx) {
    if (beta < 1) throw std::invalid_argument("mmbs_search_exact: beta must be >= 1");
    if (g.num_vertices() == 0) return std::nullopt;
    return search_rec(SearchRun{g, independence_number(g), beta, mode, ctx}, VertexSet{});
}

bool mmbs_at_least_fixed_alpha(const Graph& g, int beta, Engine engine, SearchContext* ctx, int capacity) {
    const Hypergraph h = mis_hypergraph(g, capacity);
    switch (engine) {
        case Engine::ImprovedFpt:
            return mmhs::improved_fpt(h, beta, ctx);
        case Engine::AltBranch:
            return mmhs::alt_branch(h, beta, ctx);
        case Engine::ExtensionBranch:
            return mmhs::extension_branch(h, beta, ctx).has_value();
    }
    return false;
}

}  // namespace blockset::mmbs
