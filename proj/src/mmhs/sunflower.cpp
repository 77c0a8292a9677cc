#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "blockset/mmhs.hpp"

namespace blockset::mmhs {

bool is_sunflower(const Hypergraph& h, const Sunflower& s) {
    for (std::size_t a = 0; a < s.petals.size(); ++a) {
        const VertexSet& ea = h.edge(s.petals[a]);
        if (!s.core.is_subset_of(ea) || (ea - s.core).empty()) return false;
        for (std::size_t b = a + 1; b < s.petals.size(); ++b) {
            if (s.petals[a] == s.petals[b]) return false;
            if ((ea & h.edge(s.petals[b])) != s.core) return false;
        }
    }
    return true;
}

namespace {

// Pairwise-disjoint packing of `beta` petals among candidates (DFS).
bool pack_petals(const std::vector<int>& cand, const std::vector<VertexSet>& petal, std::size_t from,
                 int beta, VertexSet used, std::vector<int>& chosen) {
    if (static_cast<int>(chosen.size()) == beta) return true;
    if (static_cast<int>(chosen.size() + (cand.size() - from)) < beta) return false;
    for (std::size_t i = from; i < cand.size(); ++i) {
        if (petal[i].intersects(used)) continue;
        chosen.push_back(cand[i]);
        if (pack_petals(cand, petal, i + 1, beta, used | petal[i], chosen)) return true;
        chosen.pop_back();
    }
    return false;
}

std::optional<Sunflower> exhaustive(const Hypergraph& h, int beta) {
    const auto& edges = h.edges();
    const int m = static_cast<int>(edges.size());
    // The core of a sunflower with >= 2 petals is the intersection of any two of them.
    std::vector<VertexSet> cores;
    for (int i = 0; i < m; ++i)
        for (int j = i + 1; j < m; ++j) cores.push_back(edges[i] & edges[j]);
    std::sort(cores.begin(), cores.end());
    cores.erase(std::unique(cores.begin(), cores.end()), cores.end());
    for (const auto& core : cores) {
        std::vector<int> cand;
        std::vector<VertexSet> petal;
        for (int i = 0; i < m; ++i)
            if (core.is_subset_of(edges[i]) && !(edges[i] - core).empty()) {
                cand.push_back(i);
                petal.push_back(edges[i] - core);
            }
        std::vector<int> chosen;
        if (pack_petals(cand, petal, 0, beta, VertexSet{}, chosen)) return Sunflower{core, chosen};
    }
    return std::nullopt;
}

// Erdős–Rado extraction over a family given by edge indices and current sets.
std::optional<Sunflower> extract(const std::vector<int>& idx, const std::vector<VertexSet>& sets, int beta) {
    std::vector<int> disjoint;
    VertexSet used;
    for (std::size_t i = 0; i < sets.size(); ++i)
        if (!sets[i].intersects(used)) {
            disjoint.push_back(static_cast<int>(i));
            used |= sets[i];
        }
    if (static_cast<int>(disjoint.size()) >= beta) {
        Sunflower s;
        for (int k = 0; k < beta; ++k) s.petals.push_back(idx[disjoint[k]]);
        return s;
    }
    Vertex best = -1;
    int best_count = 0;
    used.for_each([&](Vertex x) {
        int c = 0;
        for (const auto& s : sets) c += s.contains(x);
        if (c > best_count) {
            best_count = c;
            best = x;
        }
    });
    if (best < 0) return std::nullopt;
    std::vector<int> sub_idx;
    std::vector<VertexSet> sub_sets;
    for (std::size_t i = 0; i < sets.size(); ++i)
        if (sets[i].contains(best) && !sets[i].without(best).empty()) {
            sub_idx.push_back(idx[i]);
            sub_sets.push_back(sets[i].without(best));
        }
    auto r = extract(sub_idx, sub_sets, beta);
    if (r) r->core.insert(best);
    return r;
}

}  // namespace

std::optional<Sunflower> find_sunflower(const Hypergraph& h, int beta, int search_cap) {
    if (beta < 1) throw std::invalid_argument("find_sunflower: beta must be >= 1");
    if (h.has_empty_edge()) return std::nullopt;
    if (beta == 1) {
        if (h.num_edges() == 0) return std::nullopt;
        return Sunflower{VertexSet{}, {0}};
    }
    if (h.num_edges() < beta) return std::nullopt;
    std::optional<Sunflower> s;
    if (h.num_edges() <= search_cap) {
        s = exhaustive(h, beta);
    } else {
        std::vector<int> idx(h.num_edges());
        for (int i = 0; i < h.num_edges(); ++i) idx[i] = i;
        s = extract(idx, h.edges(), beta);
        if (s) {
            // Recompute the exact core from the chosen petals.
            VertexSet core = h.edge(s->petals[0]) & h.edge(s->petals[1]);
            s->core = core;
        }
    }
    if (s) std::sort(s->petals.begin(), s->petals.end());
    if (s && !is_sunflower(h, *s)) throw std::logic_error("find_sunflower produced a non-sunflower");
    return s;
}

double sunflower_bound(SunflowerFn fn, int alpha, int beta, double rao_c) {
    if (alpha <= 0) return 0;
    if (fn == SunflowerFn::Classic) return std::tgamma(alpha + 1.0) * std::pow(beta - 1.0, alpha);
    const double ab = static_cast<double>(alpha) * beta;
    const double lg = ab > 1 ? std::log2(ab) : 1.0;
    return std::pow(rao_c * beta * lg, alpha);
}

KernelOutcome sunflower_kernel(const Hypergraph& h, int beta, SunflowerFn fn) {
    if (beta < 1) throw std::invalid_argument("sunflower_kernel: beta must be >= 1");
    KernelOutcome out;
    out.edges_before = h.num_edges();
    out.reduced = drop_isolated(clutter_reduce(h));
    out.edges_after = out.reduced.h.num_edges();
    out.rank = out.reduced.h.rank();
    out.bound = sunflower_bound(fn, out.rank, beta);
    // A single edge is a one-petal sunflower; beta = 1 is left to the solver.
    if (auto s = beta >= 2 ? find_sunflower(out.reduced.h, beta) : std::nullopt) {
        out.kind = KernelOutcome::Kind::Yes;
        out.sunflower = std::move(s);
        return out;
    }
    out.kind = KernelOutcome::Kind::Reduced;
    out.within_bound = out.edges_after <= out.bound;
    return out;
}

}  // namespace blockset::mmhs
