#include <gtest/gtest.h>

#include "blockset/generators.hpp"
#include "blockset/oracle.hpp"
#include "blockset/tree_decomposition.hpp"
#include "blockset/tw_dp.hpp"
#include "blockset/xz_sets.hpp"
#include "fixtures.hpp"
#include "lemma_check.hpp"

using namespace blockset;
using namespace blockset::testing;

namespace {

TreeDecomposition p3_td() { return TreeDecomposition{{{0, 1}, {1, 2}}, {{0, 1}}, 1}; }

NiceTreeDecomposition nice_of(const Graph& g) { return make_nice(g, *compute_td_small(g, g.num_vertices())); }

}  // namespace

TEST(ValidateTd, Examples) {
    EXPECT_TRUE(validate_td(p3(), p3_td()));
    std::string why;
    EXPECT_FALSE(validate_td(k3(), TreeDecomposition{{{0, 1}, {1, 2}}, {{0, 1}}, 1}, &why));
    EXPECT_NE(why.find("edge"), std::string::npos);
    EXPECT_FALSE(validate_td(p3(), TreeDecomposition{{{0, 1}, {1, 2}}, {}, 1}));
    EXPECT_THROW(validate_td(p3(), TreeDecomposition{{{0, 1}, {1, 2}}, {{0, 5}}, 1}), std::out_of_range);
}

TEST(ValidateTd, ConnectivityAndWidth) {
    // Vertex 0 appears in bags 0 and 2 but not in bag 1 between them.
    TreeDecomposition bad{{{0, 1}, {1, 2}, {0, 2}}, {{0, 1}, {1, 2}}, 1};
    EXPECT_FALSE(validate_td(k3(), bad));
    EXPECT_FALSE(validate_td(p3(), TreeDecomposition{{{0, 1, 2}}, {}, 1}));
}

TEST(MakeNice, SingleBag) {
    Graph g(1);
    auto nice = make_nice(g, TreeDecomposition{{{0}}, {}, 0});
    ASSERT_EQ(nice.nodes.size(), 3u);
    EXPECT_EQ(nice.nodes[0].kind, NodeKind::Leaf);
    EXPECT_EQ(nice.nodes[1].kind, NodeKind::Introduce);
    EXPECT_EQ(nice.nodes[2].kind, NodeKind::Forget);
    EXPECT_EQ(nice.root, 2);
    EXPECT_TRUE(validate_nice(g, nice));
}

TEST(MakeNice, PathKeepsWidth) {
    auto nice = make_nice(p3(), p3_td());
    EXPECT_TRUE(validate_nice(p3(), nice));
    EXPECT_EQ(nice.width(), 1);
    bool seen_ab = false, seen_bc = false;
    for (const auto& nd : nice.nodes) {
        seen_ab = seen_ab || nd.bag == VertexSet{0, 1};
        seen_bc = seen_bc || nd.bag == VertexSet{1, 2};
    }
    EXPECT_TRUE(seen_ab && seen_bc);
}

TEST(MakeNice, RejectsInvalid) {
    EXPECT_THROW(make_nice(k3(), TreeDecomposition{{{0, 1}, {1, 2}}, {{0, 1}}, 1}), InvalidDecomposition);
}

TEST(ComputeTdSmall, Examples) {
    Graph tree = make_graph(6, {{0, 1}, {0, 2}, {2, 3}, {2, 4}, {4, 5}});
    auto t = compute_td_small(tree, 1);
    ASSERT_TRUE(t);
    EXPECT_LE(t->width(), 1);
    EXPECT_TRUE(validate_td(tree, *t));
    EXPECT_FALSE(compute_td_small(k4(), 2));
    auto c = compute_td_small(c4(), 2);
    ASSERT_TRUE(c);
    EXPECT_EQ(c->width(), 2);
    EXPECT_TRUE(validate_td(c4(), *c));
    EXPECT_THROW(compute_td_small(Graph(17), 3), CapacityError);
}

TEST(AlphaXz, Examples) {
    EXPECT_EQ(alpha_xz(p3(), VertexSet{0}, VertexSet{0}), 2);
    EXPECT_EQ(alpha_xz(p3(), VertexSet{0}, VertexSet{}), 1);
    EXPECT_EQ(alpha_xz(c5(), VertexSet{}, VertexSet{}), 2);
    EXPECT_THROW(alpha_xz(p3(), VertexSet{0}, VertexSet{1}), std::invalid_argument);
    EXPECT_THROW(alpha_xz(p3(), VertexSet{0, 1}, VertexSet{0, 1}), std::invalid_argument);
}

TEST(XzBlocking, Examples) {
    EXPECT_TRUE(is_xz_blocking(p3(), VertexSet{}, VertexSet{}, VertexSet{0}));
    EXPECT_TRUE(is_xz_blocking(p3(), VertexSet{0}, VertexSet{0}, VertexSet{0}));
    EXPECT_FALSE(is_xz_blocking(c4(), VertexSet{}, VertexSet{}, VertexSet{0}));
}

TEST(Criticality, Examples) {
    EXPECT_EQ(classify_criticality(p3(), VertexSet{}, VertexSet{}, 1), Criticality::VBarCritical);
    EXPECT_EQ(classify_criticality(p3(), VertexSet{}, VertexSet{}, 0), Criticality::VCritical);
    EXPECT_EQ(classify_criticality(c4(), VertexSet{}, VertexSet{}, 0), Criticality::VMixed);
}

TEST(Tchack, RootExamples) {
    Graph g = k2();
    auto nice = nice_of(g);
    PiInstance root = root_instance(nice);
    EXPECT_TRUE(tchack_check(g, nice, root, VertexSet{0, 1}));
    EXPECT_FALSE(tchack_check(g, nice, root, VertexSet{0}));
    // Property i at a node with a nonempty bag: Y0 = ∅ but Y covers the bag.
    for (int i = 0; i < static_cast<int>(nice.nodes.size()); ++i) {
        if (nice.nodes[i].bag.empty()) continue;
        PiInstance inst;
        inst.node = i;
        inst.y0 = VertexSet{};
        EXPECT_FALSE(tchack_check(g, nice, inst, nice.nodes[i].bag));
        break;
    }
}

TEST(MmbsTw, Examples) {
    EXPECT_EQ(mmbs_tw(k2(), nice_of(k2())).value, 2);
    EXPECT_EQ(mmbs_tw(p3(), nice_of(p3())).value, 1);
    EXPECT_EQ(mmbs_tw(c4(), nice_of(c4())).value, 2);
    EXPECT_EQ(mmbs_tw(Graph(1), nice_of(Graph(1))).value, 1);
}

TEST(MmbsTw, WidthGuard) {
    Graph g = complement(Graph(7));
    auto nice = nice_of(g);
    DpOptions opts;
    opts.bag_limit = 6;
    EXPECT_THROW(mmbs_tw(g, nice, opts), WidthTooLarge);
}

TEST(SolvePi, JoinEnumerationCount) {
    // Two branches glued on the bag {0,1}.
    Graph g = make_graph(4, {{0, 2}, {1, 2}, {0, 3}, {1, 3}});
    TreeDecomposition td{{{0, 1}, {0, 1, 2}, {0, 1, 3}}, {{0, 1}, {0, 2}}, 2};
    auto nice = make_nice(g, td);
    int join = -1;
    for (int i = 0; i < static_cast<int>(nice.nodes.size()); ++i)
        if (nice.nodes[i].kind == NodeKind::Join) join = i;
    ASSERT_GE(join, 0);
    TwSolver solver(g, nice, DpOptions{});
    PiInstance inst;
    inst.node = join;
    inst.l1 = {VertexSet{}, VertexSet{0}};
    inst.l2 = {VertexSet{1}};
    inst.canonicalize();
    EXPECT_EQ(solver.transitions(inst).size(), 27u);
    // A set in both L1 and L2 must land on the same side in both copies.
    inst.l2 = {VertexSet{0}};
    EXPECT_EQ(solver.transitions(inst).size(), 9u);
}

TEST(SolvePi, RejectsMalformed) {
    Graph g = k2();
    auto nice = nice_of(g);
    PiInstance inst = root_instance(nice);
    inst.y0 = VertexSet{0};
    EXPECT_THROW(solve_pi(g, nice, inst), std::invalid_argument);
}

class TwProperties : public ::testing::TestWithParam<int> {};

TEST_P(TwProperties, MatchesOracle) {
    const int seed = GetParam();
    auto dg = decomposed_random_graph(1 + seed % 7, 0.4, seed);
    auto r = mmbs_tw(dg.g, dg.nice);
    EXPECT_EQ(r.value, oracle::mmbs_bruteforce(dg.g).value);
    EXPECT_TRUE(oracle::is_minimal_blocking_set(dg.g, r.certificate));
}

TEST_P(TwProperties, AlphaXzAndCriticalityMatchEnumeration) {
    const int seed = GetParam();
    Graph g = gen::random_graph(1 + seed % 8, 0.4, seed + 77);
    Rng rng(seed);
    const VertexSet all = g.vertices();
    for (int trial = 0; trial < 6; ++trial) {
        VertexSet x;
        all.for_each([&](Vertex v) {
            if (rng.below(2)) x.insert(v);
        });
        const auto zs = independent_subsets(g, x);
        const VertexSet z = zs[rng.below(zs.size())];
        int best = -1;
        std::vector<VertexSet> maxima;
        for_each_subset(all, [&](const VertexSet& i) {
            if (!is_independent_set(g, i) || (i & x) != z) return;
            if (i.size() > best) best = i.size(), maxima.clear();
            if (i.size() == best) maxima.push_back(i);
        });
        ASSERT_EQ(alpha_xz(g, x, z), best);
        (all - x).for_each([&](Vertex v) {
            int in = 0;
            for (const auto& i : maxima) in += i.contains(v);
            const Criticality want = in == static_cast<int>(maxima.size()) ? Criticality::VCritical
                                     : in == 0                             ? Criticality::VBarCritical
                                                                           : Criticality::VMixed;
            EXPECT_EQ(classify_criticality(g, x, z, v), want) << "v=" << v;
        });
        VertexSet y;
        all.for_each([&](Vertex v) {
            if (rng.below(3) == 0) y.insert(v);
        });
        bool hits = true;
        for (const auto& i : maxima) hits = hits && i.intersects(y);
        EXPECT_EQ(is_xz_blocking(g, x, z, y), hits);
    }
}

TEST_P(TwProperties, NodeLemmasAndSolveSoundness) {
    const int seed = GetParam();
    auto dg = decomposed_random_graph(2 + seed % 5, 0.45, seed + 300);
    DpOptions opts;
    TwSolver solver(dg.g, dg.nice, opts);
    Rng rng(seed + 11);
    for (int node = 0; node < static_cast<int>(dg.nice.nodes.size()); ++node) {
        if (dg.nice.nodes[node].kind == NodeKind::Leaf) continue;
        for (int k = 0; k < 2; ++k) {
            std::optional<VertexSet> anchor;
            if (k == 0) {
                VertexSet y;
                solver.scope(node).for_each([&](Vertex v) {
                    if (rng.below(2)) y.insert(v);
                });
                anchor = y;
            }
            const PiInstance inst = random_instance(solver, node, rng, anchor);
            auto lemma = check_node_lemma(solver, inst);
            EXPECT_TRUE(lemma.agrees) << "node " << node << ": " << lemma.detail;
            EXPECT_TRUE(check_solve_sound(solver, inst)) << "node " << node;
        }
    }
}

TEST_P(TwProperties, JoinSplitOfBlockingSets) {
    // Glue two random graphs on a shared bag and check the split of (X,Z)-blocking sets.
    const int seed = GetParam();
    Rng rng(seed + 5);
    const int shared = 1 + static_cast<int>(rng.below(2));
    const int left = 1 + static_cast<int>(rng.below(3)), right = 1 + static_cast<int>(rng.below(3));
    const int n = shared + left + right;
    Graph g(n);
    const VertexSet x = VertexSet::range(shared);
    VertexSet lside = x, rside = x;
    for (int v = shared; v < shared + left; ++v) lside.insert(v);
    for (int v = shared + left; v < n; ++v) rside.insert(v);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) {
            const bool ok = (lside.contains(u) && lside.contains(v)) || (rside.contains(u) && rside.contains(v));
            if (ok && rng.below(2)) g.add_edge(u, v);
        }
    AlphaCache ac(g);
    for (const auto& z : independent_subsets(g, x)) {
        for_each_subset(g.vertices(), [&](const VertexSet& y) {
            const bool whole = is_xz_blocking(ac, g.vertices(), x, z, y);
            const bool split = is_xz_blocking(ac, lside, x, z, y & lside) ||
                               is_xz_blocking(ac, rside, x, z, y & rside);
            EXPECT_EQ(whole, split);
        });
    }
}

INSTANTIATE_TEST_SUITE_P(Seeds, TwProperties, ::testing::Range(0, 40));
