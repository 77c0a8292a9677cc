#include "blockset/tree_decomposition.hpp"

#include <algorithm>
#include <functional>
#include <limits>
#include <numeric>
#include <stdexcept>

namespace blockset {

int TreeDecomposition::width() const {
    int w = -1;
    for (const auto& b : bags) w = std::max(w, b.size() - 1);
    return w;
}

int NiceTreeDecomposition::width() const {
    int w = -1;
    for (const auto& n : nodes) w = std::max(w, n.bag.size() - 1);
    return w;
}

std::vector<int> NiceTreeDecomposition::postorder() const {
    std::vector<int> order;
    if (root < 0) return order;
    std::vector<std::pair<int, bool>> stack{{root, false}};
    while (!stack.empty()) {
        auto [u, done] = stack.back();
        stack.pop_back();
        if (done) {
            order.push_back(u);
            continue;
        }
        stack.push_back({u, true});
        const auto& ch = nodes[u].children;
        for (auto it = ch.rbegin(); it != ch.rend(); ++it) stack.push_back({*it, false});
    }
    return order;
}

namespace {

bool fail(std::string* why, const std::string& msg) {
    if (why) *why = msg;
    return false;
}

bool check_axioms(const Graph& g, const std::vector<VertexSet>& bags,
                  const std::vector<std::vector<int>>& adj, std::string* why) {
    const int nb = static_cast<int>(bags.size());
    const VertexSet all = g.vertices();
    VertexSet covered;
    for (const auto& b : bags) {
        if (!b.is_subset_of(all)) return fail(why, "bag " + b.to_string(1) + " has an unknown vertex");
        covered |= b;
    }
    if (covered != all) return fail(why, "vertices " + (all - covered).to_string(1) + " are in no bag");
    for (auto [u, v] : g.edges()) {
        bool inside = false;
        for (const auto& b : bags) inside = inside || (b.contains(u) && b.contains(v));
        if (!inside)
            return fail(why, "edge {" + std::to_string(u + 1) + "," + std::to_string(v + 1) + "} is in no bag");
    }
    // Tree: connected with nb-1 edges.
    int edges = 0;
    for (const auto& a : adj) edges += static_cast<int>(a.size());
    if (nb > 0 && edges / 2 != nb - 1) return fail(why, "tree has the wrong number of edges");
    std::vector<char> seen(nb, 0);
    std::vector<int> stack;
    if (nb > 0) {
        stack.push_back(0);
        seen[0] = 1;
    }
    while (!stack.empty()) {
        int u = stack.back();
        stack.pop_back();
        for (int w : adj[u])
            if (!seen[w]) {
                seen[w] = 1;
                stack.push_back(w);
            }
    }
    if (std::count(seen.begin(), seen.end(), 1) != nb) return fail(why, "tree is disconnected");
    // Connectivity of every vertex's bags: count components of the induced subforest.
    bool ok = true;
    all.for_each([&](Vertex v) {
        if (!ok) return;
        int nodes = 0, links = 0;
        for (int i = 0; i < nb; ++i) {
            if (!bags[i].contains(v)) continue;
            ++nodes;
            for (int j : adj[i])
                if (j > i && bags[j].contains(v)) ++links;
        }
        if (nodes - links != 1) {
            ok = false;
            fail(why, "bags containing vertex " + std::to_string(v + 1) + " are not connected");
        }
    });
    return ok;
}

}  // namespace

bool validate_td(const Graph& g, const TreeDecomposition& d, std::string* why) {
    const int nb = static_cast<int>(d.bags.size());
    std::vector<std::vector<int>> adj(nb);
    for (auto [a, b] : d.tree_edges) {
        if (a < 0 || a >= nb || b < 0 || b >= nb)
            throw std::out_of_range("tree edge references a missing bag");
        if (a == b) return fail(why, "tree edge is a loop");
        adj[a].push_back(b);
        adj[b].push_back(a);
    }
    if (nb == 0 && g.num_vertices() > 0) return fail(why, "no bags");
    if (d.declared_width >= 0 && d.width() > d.declared_width)
        return fail(why, "a bag exceeds the declared width");
    return check_axioms(g, d.bags, adj, why);
}

bool validate_nice(const Graph& g, const NiceTreeDecomposition& d, std::string* why) {
    const int nn = static_cast<int>(d.nodes.size());
    if (d.root < 0 || d.root >= nn) return fail(why, "bad root");
    if (!d.nodes[d.root].bag.empty()) return fail(why, "root bag is not empty");
    std::vector<int> parents(nn, 0);
    std::vector<std::vector<int>> adj(nn);
    for (int i = 0; i < nn; ++i) {
        const auto& nd = d.nodes[i];
        for (int c : nd.children) {
            if (c < 0 || c >= nn) throw std::out_of_range("child index out of range");
            ++parents[c];
            adj[i].push_back(c);
            adj[c].push_back(i);
        }
        const std::size_t k = nd.children.size();
        switch (nd.kind) {
            case NodeKind::Leaf:
                if (k != 0 || !nd.bag.empty()) return fail(why, "leaf must be childless with an empty bag");
                break;
            case NodeKind::Introduce: {
                if (k != 1) return fail(why, "introduce node needs one child");
                const VertexSet& cb = d.nodes[nd.children[0]].bag;
                if (cb.contains(nd.vertex) || cb.with(nd.vertex) != nd.bag)
                    return fail(why, "introduce node must add exactly its vertex");
                break;
            }
            case NodeKind::Forget: {
                if (k != 1) return fail(why, "forget node needs one child");
                const VertexSet& cb = d.nodes[nd.children[0]].bag;
                if (!cb.contains(nd.vertex) || cb.without(nd.vertex) != nd.bag)
                    return fail(why, "forget node must remove exactly its vertex");
                break;
            }
            case NodeKind::Join:
                if (k != 2) return fail(why, "join node needs two children");
                if (d.nodes[nd.children[0]].bag != nd.bag || d.nodes[nd.children[1]].bag != nd.bag)
                    return fail(why, "join children must share the bag");
                break;
        }
    }
    for (int i = 0; i < nn; ++i)
        if (parents[i] != (i == d.root ? 0 : 1)) return fail(why, "node structure is not a rooted tree");
    std::vector<VertexSet> bags;
    for (const auto& nd : d.nodes) bags.push_back(nd.bag);
    return check_axioms(g, bags, adj, why);
}

NiceTreeDecomposition make_nice(const Graph& g, const TreeDecomposition& d) {
    std::string why;
    if (!validate_td(g, d, &why)) throw InvalidDecomposition("invalid tree decomposition: " + why);
    NiceTreeDecomposition out;
    auto add = [&](NodeKind k, VertexSet bag, Vertex v, std::vector<int> ch) {
        out.nodes.push_back(NiceNode{k, bag, v, std::move(ch)});
        return static_cast<int>(out.nodes.size()) - 1;
    };
    auto leaf = [&] { return add(NodeKind::Leaf, {}, -1, {}); };
    // Walks from node `from` (bag `have`) to bag `want`: forgets first, then introduces.
    auto morph = [&](int from, VertexSet have, const VertexSet& want) {
        (have - want).for_each([&](Vertex v) {
            have.erase(v);
            from = add(NodeKind::Forget, have, v, {from});
        });
        (want - have).for_each([&](Vertex v) {
            have.insert(v);
            from = add(NodeKind::Introduce, have, v, {from});
        });
        return from;
    };
    const int nb = static_cast<int>(d.bags.size());
    if (nb == 0) {
        out.root = leaf();
        return out;
    }
    std::vector<std::vector<int>> adj(nb);
    for (auto [a, b] : d.tree_edges) {
        adj[a].push_back(b);
        adj[b].push_back(a);
    }
    for (auto& a : adj) std::sort(a.begin(), a.end());
    std::function<int(int, int)> build = [&](int t, int parent) -> int {
        std::vector<int> parts;
        for (int c : adj[t]) {
            if (c == parent) continue;
            parts.push_back(morph(build(c, t), d.bags[c], d.bags[t]));
        }
        if (parts.empty()) return morph(leaf(), {}, d.bags[t]);
        int acc = parts[0];
        for (std::size_t i = 1; i < parts.size(); ++i) acc = add(NodeKind::Join, d.bags[t], -1, {acc, parts[i]});
        return acc;
    };
    out.root = morph(build(0, -1), d.bags[0], {});
    return out;
}

TreeDecomposition as_tree_decomposition(const NiceTreeDecomposition& d) {
    TreeDecomposition td;
    for (const auto& nd : d.nodes) td.bags.push_back(nd.bag);
    for (int i = 0; i < static_cast<int>(d.nodes.size()); ++i)
        for (int c : d.nodes[i].children) td.tree_edges.emplace_back(i, c);
    td.declared_width = td.width();
    return td;
}

std::vector<VertexSet> subtree_vertices(const NiceTreeDecomposition& d) {
    std::vector<VertexSet> out(d.nodes.size());
    for (int u : d.postorder()) {
        out[u] = d.nodes[u].bag;
        for (int c : d.nodes[u].children) out[u] |= out[c];
    }
    return out;
}

namespace {

// Vertices outside s ∪ {v} reachable from v through paths with interior in s.
int q_value(const Graph& g, const VertexSet& s, Vertex v) {
    VertexSet reached = VertexSet::singleton(v);
    VertexSet frontier = reached;
    VertexSet outside;
    while (!frontier.empty()) {
        VertexSet next = g.neighbors_of(frontier) - reached;
        reached |= next;
        outside |= next - s;
        frontier = next & s;
    }
    outside.erase(v);
    return outside.size();
}

}  // namespace

std::optional<TreeDecomposition> compute_td_small(const Graph& g, int max_width) {
    const int n = g.num_vertices();
    if (n > kTdSmallCapacity)
        throw CapacityError("compute_td_small supports at most 16 vertices, got " + std::to_string(n));
    if (n == 0) {
        TreeDecomposition td;
        td.bags.push_back({});
        td.declared_width = 0;
        return td;
    }
    const std::uint32_t full = (1u << n) - 1;
    // tw[s]: best width for eliminating the set s first; choice[s]: last vertex eliminated.
    std::vector<int> tw(full + 1, std::numeric_limits<int>::max());
    std::vector<std::int8_t> choice(full + 1, -1);
    tw[0] = std::numeric_limits<int>::min();
    for (std::uint32_t s = 1; s <= full; ++s) {
        for (int v = 0; v < n; ++v) {
            if (!((s >> v) & 1u)) continue;
            const std::uint32_t rest = s & ~(1u << v);
            const int q = q_value(g, VertexSet(rest, 0), v);
            const int cand = std::max(tw[rest], q);
            if (cand < tw[s]) {
                tw[s] = cand;
                choice[s] = static_cast<std::int8_t>(v);
            }
        }
    }
    const int width = std::max(tw[full], 0);
    if (width > max_width) return std::nullopt;
    std::vector<Vertex> order(n);
    for (std::uint32_t s = full, k = n; s != 0; s &= ~(1u << choice[s])) order[--k] = choice[s];
    std::vector<int> pos(n);
    for (int i = 0; i < n; ++i) pos[order[i]] = i;
    // Fill-in graph of the elimination ordering.
    std::vector<VertexSet> adj(n);
    for (int v = 0; v < n; ++v) adj[v] = g.neighbors(v);
    TreeDecomposition td;
    td.bags.resize(n);
    for (int i = 0; i < n; ++i) {
        const Vertex v = order[i];
        VertexSet higher;
        adj[v].for_each([&](Vertex u) {
            if (pos[u] > i) higher.insert(u);
        });
        td.bags[i] = higher.with(v);
        higher.for_each([&](Vertex u) { adj[u] |= higher.without(u); });
    }
    std::vector<int> roots;
    for (int i = 0; i < n; ++i) {
        const VertexSet higher = td.bags[i].without(order[i]);
        if (higher.empty()) {
            roots.push_back(i);
            continue;
        }
        int parent = n;
        higher.for_each([&](Vertex u) { parent = std::min(parent, pos[u]); });
        td.tree_edges.emplace_back(i, parent);
    }
    for (std::size_t k = 1; k < roots.size(); ++k) td.tree_edges.emplace_back(roots[k - 1], roots[k]);
    td.declared_width = td.width();
    return td;
}

}  // namespace blockset
