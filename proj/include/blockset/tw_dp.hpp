#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "blockset/graph.hpp"
#include "blockset/search_context.hpp"
#include "blockset/tree_decomposition.hpp"
#include "blockset/xz_sets.hpp"

namespace blockset {

/// Family of subsets of a bag, kept sorted and duplicate-free.
using Family = std::vector<VertexSet>;

/// DP state (X, Y0, L1, L2, f, S); X is the bag of `node`.
struct PiInstance {
    int node = -1;
    VertexSet y0;
    Family l1;
    Family l2;
    /// f as (vertex, image) pairs sorted by vertex.
    std::vector<std::pair<Vertex, VertexSet>> f;
    Family s;

    void canonicalize();
    std::optional<VertexSet> f_of(Vertex v) const;
    auto operator<=>(const PiInstance&) const = default;
};

/// (∅, ∅, {∅}, ∅, ∅, ∅) at the root of d.
PiInstance root_instance(const NiceTreeDecomposition& d);

class WidthTooLarge : public std::runtime_error {
   public:
    WidthTooLarge(int bag_size, int limit);
    int bag_size;
    int limit;
};

inline constexpr int kDefaultBagLimit = 6;

/// BLOCKSET_BAG_LIMIT if set to a positive integer, otherwise 6.
int default_bag_limit();

/// Child instance(s) the node lemmas reduce an instance to.
struct Transition {
    PiInstance first;
    /// Right child of a join.
    std::optional<PiInstance> second;
    /// Introduce with the introduced vertex in the solution.
    bool adds_vertex = false;
};

struct DpOptions {
    int bag_limit = default_bag_limit();
    SearchContext* ctx = nullptr;
};

/// Top-down memoized solver for one graph and nice decomposition.
class TwSolver {
   public:
    TwSolver(const Graph& g, const NiceTreeDecomposition& d, DpOptions opts = {});

    /// Y ⊢ inst.
    bool check(const PiInstance& inst, const VertexSet& y);
    /// Maximum Y with Y ⊢ inst; nullopt if infeasible.
    std::optional<VertexSet> solve(const PiInstance& inst);
    /// Children enumerated for `inst`, in the order the solver tries them.
    /// Only combinations allowed by the lemmas are produced.
    std::vector<Transition> transitions(const PiInstance& inst);
    /// Checks the E(G,D) well-formedness conditions.
    bool well_formed(const PiInstance& inst) const;

    const VertexSet& scope(int node) const { return scope_[node]; }
    const Graph& graph() const { return g_; }
    const NiceTreeDecomposition& decomposition() const { return d_; }
    std::size_t memo_size() const { return memo_.size(); }
    std::uint64_t transitions_enumerated() const { return transitions_enumerated_; }

   private:
    bool blocking(int node, const VertexSet& z, const VertexSet& y);
    bool trivially_infeasible(const PiInstance& inst) const;
    void join_transitions(const PiInstance& inst, std::vector<Transition>& out);
    void introduce_transitions(const PiInstance& inst, std::vector<Transition>& out);
    void forget_transitions(const PiInstance& inst, std::vector<Transition>& out);
    void emit(std::vector<Transition>& out, Transition t) const;

    const Graph& g_;
    const NiceTreeDecomposition& d_;
    DpOptions opts_;
    AlphaCache alpha_;
    std::vector<VertexSet> scope_;
    std::map<PiInstance, std::optional<VertexSet>> memo_;
    std::uint64_t transitions_enumerated_ = 0;
};

bool tchack_check(const Graph& g, const NiceTreeDecomposition& d, const PiInstance& inst, const VertexSet& y);
std::optional<VertexSet> solve_pi(const Graph& g, const NiceTreeDecomposition& d, const PiInstance& inst,
                                  DpOptions opts = {});

struct TwResult {
    int value = 0;
    VertexSet certificate;
    std::size_t memo_entries = 0;
    std::uint64_t transitions = 0;
};

/// mmbs(g) from the root instance. Requires n >= 1 and a valid nice decomposition.
TwResult mmbs_tw(const Graph& g, const NiceTreeDecomposition& d, DpOptions opts = {});

}  // namespace blockset
