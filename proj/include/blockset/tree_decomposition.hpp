#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "blockset/graph.hpp"

namespace blockset {

struct TreeDecomposition {
    std::vector<VertexSet> bags;
    std::vector<std::pair<int, int>> tree_edges;
    int declared_width = -1;

    /// max bag size - 1 (-1 without bags)
    int width() const;
};

enum class NodeKind { Leaf, Introduce, Forget, Join };

struct NiceNode {
    NodeKind kind = NodeKind::Leaf;
    VertexSet bag;
    /// Introduced or forgotten vertex, -1 otherwise.
    Vertex vertex = -1;
    std::vector<int> children;
};

struct NiceTreeDecomposition {
    std::vector<NiceNode> nodes;
    int root = -1;

    int width() const;
    /// Node indices with every child before its parent.
    std::vector<int> postorder() const;
};

class InvalidDecomposition : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
};

/// Tree-decomposition axioms plus "the tree is a tree". Throws
/// std::out_of_range on tree edges that reference missing bags.
bool validate_td(const Graph& g, const TreeDecomposition& d, std::string* why = nullptr);

/// Nice axioms (empty root and leaves, one-vertex introduce/forget steps,
/// joins over identical bags) and the decomposition axioms.
bool validate_nice(const Graph& g, const NiceTreeDecomposition& d, std::string* why = nullptr);

/// Throws InvalidDecomposition if d is not valid for g.
NiceTreeDecomposition make_nice(const Graph& g, const TreeDecomposition& d);

/// Plain decomposition view of a nice decomposition.
TreeDecomposition as_tree_decomposition(const NiceTreeDecomposition& d);

inline constexpr int kTdSmallCapacity = 16;

/// Exact treewidth search over elimination orderings. Returns a decomposition
/// of minimum width if that width is <= max_width.
std::optional<TreeDecomposition> compute_td_small(const Graph& g, int max_width);

/// V(G_X) for every node: the union of the bags in its subtree.
std::vector<VertexSet> subtree_vertices(const NiceTreeDecomposition& d);

}  // namespace blockset
