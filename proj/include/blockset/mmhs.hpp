#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "blockset/hypergraph.hpp"
#include "blockset/search_context.hpp"

namespace blockset::mmhs {

enum class SizeMode { Exactly, AtMost };

/// Removes duplicate edges and edges strictly containing another edge.
/// Keeps the first occurrence of each surviving edge, in input order.
Hypergraph clutter_reduce(const Hypergraph& h);

struct Relabelled {
    Hypergraph h;
    std::vector<Vertex> old_of_new;
};

/// Keeps only vertices lying in some edge, relabelled densely in id order.
Relabelled drop_isolated(const Hypergraph& h);

struct Sunflower {
    VertexSet core;
    std::vector<int> petals;  // edge indices, ascending
};

/// Edge-count limit for the exhaustive sunflower search.
inline constexpr int kSunflowerSearchCap = 40;

/// Returns a sunflower with exactly `beta` petals among the edges of h.
/// Exhaustive up to `search_cap` edges, otherwise the classical extraction.
std::optional<Sunflower> find_sunflower(const Hypergraph& h, int beta, int search_cap = kSunflowerSearchCap);
bool is_sunflower(const Hypergraph& h, const Sunflower& s);

enum class SunflowerFn { Classic, Rao };

inline constexpr double kRaoConstant = 64.0;

/// s(alpha, beta): any family of more sets of size <= alpha has a beta-petal
/// sunflower. Classic is alpha! (beta-1)^alpha; Rao is (c beta log2(alpha beta))^alpha.
double sunflower_bound(SunflowerFn fn, int alpha, int beta, double rao_c = kRaoConstant);

struct KernelOutcome {
    enum class Kind { Yes, Reduced } kind = Kind::Reduced;
    /// Set for Yes; indices refer to `reduced.h`.
    std::optional<Sunflower> sunflower;
    /// Clutter-reduced hypergraph without isolated vertices (both outcomes).
    Relabelled reduced;
    int edges_before = 0;
    int edges_after = 0;
    int rank = 0;
    double bound = 0;
    /// |V'| <= alpha * |E'| always holds; this flags |E'| <= s(alpha,beta).
    bool within_bound = true;
};

KernelOutcome sunflower_kernel(const Hypergraph& h, int beta, SunflowerFn fn = SunflowerFn::Classic);

/// Hitting plus a private edge for every member.
bool is_minimal_hitting(const Hypergraph& h, const VertexSet& s);

/// Greedy minimal hitting set: all covered vertices, then drop removable ones in ascending id order.
VertexSet greedy_minimal_hitting_set(const Hypergraph& h);

bool search_tree_size(const Hypergraph& h, int beta, SizeMode mode, SearchContext* ctx = nullptr);

/// A minimal hitting set containing x, if one exists.
std::optional<VertexSet> simple_ext(const Hypergraph& h, const VertexSet& x);

/// mmhs(h) >= beta, returning a witness minimal hitting set of size >= beta.
std::optional<VertexSet> extension_branch(const Hypergraph& h, int beta, SearchContext* ctx = nullptr);

/// H_I: vertices of I deleted from the universe and from every edge.
Hypergraph build_h_i(const Hypergraph& h, const VertexSet& i);
/// H^{X̄}: edges disjoint from x, universe unchanged.
Hypergraph build_h_xbar(const Hypergraph& h, const VertexSet& x);

/// Largest edge disjoint from x (0 if none).
int measure(const Hypergraph& h, const VertexSet& x);

struct MeasureAudit {
    std::uint64_t checks = 0;
    std::uint64_t violations = 0;
};

/// mmhs(h) >= beta via the subset-branching algorithm. Every recursive call
/// checks that the measure strictly decreases and records it in `audit`.
bool improved_fpt(const Hypergraph& h, int beta, SearchContext* ctx = nullptr, MeasureAudit* audit = nullptr);

/// Requires a clutter, v_star in edge h_star.
Hypergraph alt_reduce(const Hypergraph& h, Vertex v_star, int h_star);

bool alt_branch(const Hypergraph& h, int beta, SearchContext* ctx = nullptr);

/// sunflower_kernel followed by improved_fpt on the reduced instance.
bool kernel_improved(const Hypergraph& h, int beta, SunflowerFn fn = SunflowerFn::Classic,
                     SearchContext* ctx = nullptr, KernelOutcome* outcome = nullptr);

}  // namespace blockset::mmhs
