#include "criteria.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <sstream>

#include "blockset/generators.hpp"
#include "blockset/mmbs.hpp"
#include "blockset/mmhs.hpp"
#include "blockset/oracle.hpp"
#include "blockset/rng.hpp"
#include "blockset/tree_decomposition.hpp"
#include "blockset/tw_dp.hpp"
#include "fixtures.hpp"
#include "lemma_check.hpp"

namespace blockset::acceptance {
namespace {

using mmhs::SizeMode;

struct HyperCase {
    std::uint64_t seed;
    Hypergraph h;
    int truth;
};

// n in [1,8], m in [0,10], edge size <= 4.
const std::vector<HyperCase>& hyper_corpus() {
    static const std::vector<HyperCase> corpus = [] {
        std::vector<HyperCase> out;
        for (std::uint64_t i = 0; i < 1000; ++i) {
            const int n = 1 + static_cast<int>(i % 8);
            const int m = static_cast<int>((i / 8) % 11);
            const int r = 1 + static_cast<int>((i / 88) % 4);
            Hypergraph h = gen::random_hypergraph(n, m, r, i);
            const int truth = oracle::mmhs_bruteforce(h).value;
            out.push_back({i, std::move(h), truth});
        }
        return out;
    }();
    return corpus;
}

// n in [1,8], edge probability cycling through 0.2 .. 0.8.
std::vector<Graph> graph_corpus() {
    std::vector<Graph> out;
    for (std::uint64_t i = 0; i < 500; ++i) {
        const int n = 1 + static_cast<int>(i % 8);
        const double p = 0.2 + 0.15 * static_cast<double>((i / 8) % 5);
        out.push_back(gen::random_graph(n, p, 5000 + i));
    }
    return out;
}

std::string fail_at(const std::string& what, std::uint64_t seed, int beta) {
    std::ostringstream os;
    os << what << " disagrees (seed " << seed << ", beta " << beta << ")";
    return os.str();
}

Outcome c1_mmhs_oracle_agreement() {
    long checks = 0;
    for (const auto& c : hyper_corpus()) {
        for (int beta = 1; beta <= c.h.num_vertices() + 1; ++beta) {
            const bool want = c.truth >= beta;
            if (mmhs::improved_fpt(c.h, beta) != want) return {false, fail_at("improved_fpt", c.seed, beta)};
            if (mmhs::extension_branch(c.h, beta).has_value() != want)
                return {false, fail_at("extension_branch", c.seed, beta)};
            if (mmhs::alt_branch(c.h, beta) != want) return {false, fail_at("alt_branch", c.seed, beta)};
            if (mmhs::kernel_improved(c.h, beta) != want) return {false, fail_at("kernel+improved", c.seed, beta)};
            checks += 4;
        }
    }
    return {true, std::to_string(hyper_corpus().size()) + " hypergraphs, " + std::to_string(checks) +
                      " solver answers match the oracle"};
}

Outcome c2_tw_dp_oracle_agreement() {
    int count = 0, max_width = 0, guarded = 0;
    for (const Graph& g : graph_corpus()) {
        auto td = compute_td_small(g, g.num_vertices());
        if (!td) return {false, "compute_td_small returned nothing"};
        const auto nice = make_nice(g, *td);
        max_width = std::max(max_width, nice.width());
        // Dense graphs can exceed the default guard; the guard must fire, then
        // the same graph is solved with the limit raised to its largest bag.
        TwResult r;
        try {
            r = mmbs_tw(g, nice);
        } catch (const WidthTooLarge& e) {
            if (e.bag_size <= default_bag_limit()) return {false, "guard fired below the limit"};
            ++guarded;
            DpOptions opts;
            opts.bag_limit = e.bag_size;
            r = mmbs_tw(g, nice, opts);
        }
        const auto truth = oracle::mmbs_bruteforce(g);
        if (r.value != truth.value)
            return {false, "graph " + std::to_string(count) + ": dp " + std::to_string(r.value) + " vs oracle " +
                               std::to_string(truth.value)};
        if (!oracle::is_minimal_blocking_set(g, r.certificate) || r.certificate.size() != r.value)
            return {false, "graph " + std::to_string(count) + ": certificate fails verification"};
        ++count;
    }
    return {true, std::to_string(count) + " graphs agree, max width " + std::to_string(max_width) + ", " +
                      std::to_string(guarded) + " solved past the default bag limit " +
                      std::to_string(default_bag_limit())};
}

Outcome c3_exact_size_branching() {
    int checks = 0, gaps = 0;
    auto corpus = graph_corpus();
    for (std::size_t i = 0; i < corpus.size(); ++i) {
        const Graph& g = corpus[i];
        const auto all = oracle::all_minimal_blocking_sets(g);
        int best = 0;
        for (const auto& y : all) best = std::max(best, y.size());
        for (int beta = 1; beta <= g.num_vertices(); ++beta) {
            const bool exists = std::any_of(all.begin(), all.end(), [&](const VertexSet& y) { return y.size() == beta; });
            const auto got = mmbs::mmbs_search_exact(g, beta, SizeMode::Exactly);
            if (got.has_value() != exists) return {false, fail_at("mmbs_search_exact", i, beta)};
            if (got && (got->size() != beta || !oracle::is_minimal_blocking_set(g, *got)))
                return {false, fail_at("exact-size certificate", i, beta)};
            gaps += !exists && best >= beta;
            ++checks;
        }
    }
    if (gaps == 0) return {false, "corpus contains no case with mmbs >= beta but no size-beta set"};
    return {true, std::to_string(checks) + " (graph, beta) pairs, " + std::to_string(gaps) +
                      " with mmbs >= beta but no exact-size set"};
}

Outcome c4_sunflower_soundness() {
    int yes = 0, reduced = 0;
    for (const auto& c : hyper_corpus()) {
        for (int beta = 1; beta <= c.h.num_vertices() + 1; ++beta) {
            const auto k = mmhs::sunflower_kernel(c.h, beta);
            if (k.kind == mmhs::KernelOutcome::Kind::Yes) {
                if (c.truth < beta) return {false, fail_at("sunflower Yes", c.seed, beta)};
                ++yes;
                continue;
            }
            const Hypergraph& r = k.reduced.h;
            if (r.num_vertices() > r.rank() * r.num_edges()) return {false, fail_at("|V'| <= alpha|E'|", c.seed, beta)};
            if ((oracle::mmhs_bruteforce(r).value >= beta) != (c.truth >= beta))
                return {false, fail_at("reduced decision", c.seed, beta)};
            ++reduced;
        }
    }
    if (yes == 0) return {false, "no Yes outcome on the corpus"};
    return {true, std::to_string(yes) + " Yes outcomes sound, " + std::to_string(reduced) + " Reduced outcomes valid"};
}

template <typename F>
int for_all_labeled_graphs(F&& f) {
    int count = 0;
    for (int n = 1; n <= 5; ++n) {
        const unsigned pairs = static_cast<unsigned>(n * (n - 1) / 2);
        for (unsigned mask = 0; mask < (1u << pairs); ++mask, ++count)
            if (!f(testing::labeled_graph(n, mask))) return -1;
    }
    return count;
}

Outcome c5_unique_mis() {
    const int n = for_all_labeled_graphs(
        [](const Graph& g) { return oracle::has_unique_mis(g) == (oracle::mmbs_bruteforce(g).value == 1); });
    if (n < 0) return {false, "biconditional fails"};
    return {true, std::to_string(n) + " labeled graphs on 1..5 vertices"};
}

Outcome c6_duality() {
    const int n = for_all_labeled_graphs([](const Graph& g) {
        const auto a = oracle::enumerate_max_independent_sets(g).sets;
        return oracle::blocker(g.num_vertices(), oracle::blocker(g.num_vertices(), a)) == a;
    });
    if (n < 0) return {false, "b(b(A)) != A"};
    return {true, std::to_string(n) + " mis families"};
}

Outcome c7_reductions() {
    int join_yes = 0, join_no = 0;
    for (std::uint64_t seed = 0; seed < 200; ++seed) {
        Rng rng(seed);
        const int k = 1 + static_cast<int>(rng.below(3));
        std::vector<int> sizes;
        int total = 0;
        for (int i = 0; i < k; ++i) {
            const int s = 1 + static_cast<int>(rng.below(3));
            if (total + s > 7) break;
            sizes.push_back(s);
            total += s;
        }
        const auto pg = gen::random_partitioned(sizes, 0.3 + 0.1 * static_cast<double>(seed % 6), seed);
        const bool mcis = oracle::has_multicolored_independent_set(pg.graph, pg.parts);
        if ((oracle::mmbs_bruteforce(gen::gen_mcis_join(pg)).value >= 2) != mcis)
            return {false, "mcis_join fails at seed " + std::to_string(seed)};
        (mcis ? join_yes : join_no)++;
    }
    int updom_yes = 0, updom_no = 0;
    for (std::uint64_t seed = 0; seed < 60; ++seed) {
        Rng rng(seed + 1000);
        const int k = 1 + static_cast<int>(rng.below(2));
        std::vector<int> sizes;
        for (int i = 0; i < k; ++i) sizes.push_back(1 + static_cast<int>(rng.below(3)));
        const auto pg = gen::random_partitioned(sizes, 0.3 + 0.1 * static_cast<double>(seed % 6), seed);
        const bool mcis = oracle::has_multicolored_independent_set(pg.graph, pg.parts);
        if ((oracle::mmds_bruteforce(gen::gen_updom(pg)).value >= 3 * k) != mcis)
            return {false, "updom fails at seed " + std::to_string(seed)};
        (mcis ? updom_yes : updom_no)++;
    }
    int mmvc = 0;
    for (std::uint64_t seed = 0; mmvc < 150 && seed < 100000; ++seed) {
        const Graph g = gen::random_graph(2 + static_cast<int>(seed % 7), 0.35, seed);
        if (g.num_edges() == 0 || !is_triangle_free(g)) continue;
        if (oracle::mmbs_bruteforce(gen::gen_complement_mmvc(g)).value !=
            oracle::mmhs_bruteforce(edge_hypergraph(g)).value)
            return {false, "complement_mmvc fails at seed " + std::to_string(seed)};
        ++mmvc;
    }
    if (join_yes == 0 || join_no == 0 || updom_yes == 0 || updom_no == 0)
        return {false, "corpus misses a yes or no case"};
    std::ostringstream os;
    os << "mcis_join " << join_yes << " yes / " << join_no << " no; updom " << updom_yes << " yes / " << updom_no
       << " no; complement_mmvc " << mmvc << " triangle-free graphs";
    return {true, os.str()};
}

Outcome c8_measure_decrease() {
    mmhs::MeasureAudit audit;
    for (const auto& c : hyper_corpus())
        for (int beta = 1; beta <= c.h.num_vertices() + 1; ++beta) mmhs::improved_fpt(c.h, beta, nullptr, &audit);
    if (audit.checks == 0) return {false, "no recursive calls audited"};
    return {audit.violations == 0, std::to_string(audit.checks) + " recursive calls, " +
                                       std::to_string(audit.violations) + " violations"};
}

Outcome c9_node_lemmas() {
    int configs = 0, feasible = 0, joins = 0, introduces = 0, forgets = 0;
    for (std::uint64_t seed = 0; configs < 400; ++seed) {
        auto dg = testing::decomposed_random_graph(2 + static_cast<int>(seed % 5), 0.45, 9000 + seed);
        TwSolver solver(dg.g, dg.nice);
        Rng rng(seed + 17);
        for (int node = 0; node < static_cast<int>(dg.nice.nodes.size()); ++node) {
            const NodeKind kind = dg.nice.nodes[node].kind;
            if (kind == NodeKind::Leaf) continue;
            std::optional<VertexSet> anchor;
            if (rng.below(2)) {
                VertexSet y;
                solver.scope(node).for_each([&](Vertex v) {
                    if (rng.below(2)) y.insert(v);
                });
                anchor = y;
            }
            const PiInstance inst = testing::random_instance(solver, node, rng, anchor);
            const auto lemma = testing::check_node_lemma(solver, inst);
            if (!lemma.agrees) return {false, "node " + std::to_string(node) + ": " + lemma.detail};
            if (!testing::check_solve_sound(solver, inst))
                return {false, "solve disagrees with exhaustive search at node " + std::to_string(node)};
            ++configs;
            feasible += lemma.feasible_ys > 0;
            joins += kind == NodeKind::Join;
            introduces += kind == NodeKind::Introduce;
            forgets += kind == NodeKind::Forget;
        }
    }
    if (joins == 0 || introduces == 0 || forgets == 0 || feasible == 0)
        return {false, "configurations do not cover every node kind with feasible instances"};
    std::ostringstream os;
    os << configs << " configurations (" << joins << " join, " << introduces << " introduce, " << forgets
       << " forget), " << feasible << " with a feasible Y";
    return {true, os.str()};
}

// Calibrated once on this family (observed maximum 0.0093) and frozen.
constexpr double kScalingConstant = 0.02;

// Core {0} plus `petals` disjoint petals of size alpha - 1.
Hypergraph sunflower_family(int alpha, int petals) {
    const int n = 1 + petals * (alpha - 1);
    Hypergraph h(n);
    for (int p = 0; p < petals; ++p) {
        VertexSet e{0};
        for (int j = 0; j < alpha - 1; ++j) e.insert(1 + p * (alpha - 1) + j);
        h.add_edge(e);
    }
    return h;
}

Outcome c10_scaling() {
    double worst = 0;
    int runs = 0;
    for (int alpha = 2; alpha <= 4; ++alpha)
        for (int petals = 2; petals <= 8; ++petals)
            for (int beta = 1; beta <= petals + 1; ++beta) {
                const Hypergraph h = sunflower_family(alpha, petals);
                SearchContext ctx;
                const bool got = mmhs::improved_fpt(h, beta, &ctx);
                if (got != (beta <= petals)) return {false, "wrong answer on the sunflower family"};
                const double n = h.num_vertices();
                const double bound = std::pow(2.0, alpha * beta) * n * n * n;
                worst = std::max(worst, static_cast<double>(ctx.stats().nodes_expanded) / bound);
                ++runs;
            }
    std::ostringstream os;
    os << runs << " runs, max nodes/(2^(alpha*beta) n^3) = " << worst << " <= C = " << kScalingConstant;
    return {worst <= kScalingConstant, os.str()};
}

}  // namespace

const std::vector<Criterion>& criteria() {
    static const std::vector<Criterion> all{
        {1, "mmhs solvers match oracle", c1_mmhs_oracle_agreement},
        {2, "treewidth dp matches oracle", c2_tw_dp_oracle_agreement},
        {3, "exact-size branching", c3_exact_size_branching},
        {4, "sunflower kernel soundness", c4_sunflower_soundness},
        {5, "unique mis iff mmbs = 1", c5_unique_mis},
        {6, "blocker duality", c6_duality},
        {7, "reduction guarantees", c7_reductions},
        {8, "measure decrease", c8_measure_decrease},
        {9, "node lemma biconditionals", c9_node_lemmas},
        {10, "scaling sanity", c10_scaling},
    };
    return all;
}

}  // namespace blockset::acceptance
