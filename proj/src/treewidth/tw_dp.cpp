#include "blockset/tw_dp.hpp"

#include <algorithm>
#include <cstdlib>
#include <string>

namespace blockset {

namespace {

void normalize(Family& fam) {
    std::sort(fam.begin(), fam.end());
    fam.erase(std::unique(fam.begin(), fam.end()), fam.end());
}

bool member(const Family& fam, const VertexSet& z) { return std::binary_search(fam.begin(), fam.end(), z); }

Family without_vertex(const Family& fam, Vertex v) {  // r_v
    Family out;
    for (const auto& z : fam) out.push_back(z.without(v));
    normalize(out);
    return out;
}

}  // namespace

void PiInstance::canonicalize() {
    normalize(l1);
    normalize(l2);
    normalize(s);
    std::sort(f.begin(), f.end());
}

std::optional<VertexSet> PiInstance::f_of(Vertex v) const {
    for (const auto& [k, z] : f)
        if (k == v) return z;
    return std::nullopt;
}

PiInstance root_instance(const NiceTreeDecomposition& d) {
    PiInstance inst;
    inst.node = d.root;
    inst.l1 = {VertexSet{}};
    return inst;
}

WidthTooLarge::WidthTooLarge(int bag_size_, int limit_)
    : std::runtime_error("width too large: bag of " + std::to_string(bag_size_) + " vertices exceeds the limit of " +
                         std::to_string(limit_)),
      bag_size(bag_size_),
      limit(limit_) {}

int default_bag_limit() {
    if (const char* env = std::getenv("BLOCKSET_BAG_LIMIT")) {
        char* end = nullptr;
        const long v = std::strtol(env, &end, 10);
        if (end != env && *end == '\0' && v > 0 && v <= kMaxVertices) return static_cast<int>(v);
    }
    return kDefaultBagLimit;
}

TwSolver::TwSolver(const Graph& g, const NiceTreeDecomposition& d, DpOptions opts)
    : g_(g), d_(d), opts_(opts), alpha_(g), scope_(subtree_vertices(d)) {
    const int largest = d.width() + 1;
    if (largest > opts_.bag_limit) throw WidthTooLarge(largest, opts_.bag_limit);
}

bool TwSolver::blocking(int node, const VertexSet& z, const VertexSet& y) {
    return is_xz_blocking(alpha_, scope_[node], d_.nodes[node].bag, z, y);
}

bool TwSolver::well_formed(const PiInstance& inst) const {
    if (inst.node < 0 || inst.node >= static_cast<int>(d_.nodes.size())) return false;
    const VertexSet& x = d_.nodes[inst.node].bag;
    if (!inst.y0.is_subset_of(x)) return false;
    for (const Family* fam : {&inst.l1, &inst.l2, &inst.s})
        for (const auto& z : *fam)
            if (!z.is_subset_of(x) || !is_independent_set(g_, z)) return false;
    VertexSet domain;
    for (const auto& [v, z] : inst.f) {
        if (domain.contains(v) || !member(inst.l2, z)) return false;
        domain.insert(v);
    }
    return domain == inst.y0;
}

bool TwSolver::check(const PiInstance& inst, const VertexSet& y) {
    const int node = inst.node;
    const VertexSet& x = d_.nodes[node].bag;
    if (!y.is_subset_of(scope_[node])) return false;
    if ((y & x) != inst.y0) return false;
    for (const Family* fam : {&inst.l1, &inst.l2})
        for (const auto& z : *fam)
            if (!blocking(node, z, y)) return false;
    for (const auto& z : inst.s)
        if (blocking(node, z, y)) return false;
    bool ok = true;
    (y - inst.y0).for_each([&](Vertex v) {
        if (!ok) return;
        const VertexSet rest = y.without(v);
        ok = std::any_of(inst.l1.begin(), inst.l1.end(), [&](const VertexSet& z) { return !blocking(node, z, rest); });
    });
    if (!ok) return false;
    for (const auto& [v, z] : inst.f)
        if (blocking(node, z, y.without(v))) return false;
    return true;
}

bool TwSolver::trivially_infeasible(const PiInstance& inst) const {
    // Y ⊇ Y0 blocks every Z meeting Y0, so such a Z cannot be in S; and a
    // family member cannot be both blocked and unblocked.
    for (const auto& z : inst.s)
        if (z.intersects(inst.y0) || member(inst.l1, z) || member(inst.l2, z)) return true;
    return false;
}

void TwSolver::emit(std::vector<Transition>& out, Transition t) const {
    t.first.canonicalize();
    if (!well_formed(t.first)) throw std::logic_error("child instance violates the E(G,D) invariants");
    if (t.second) {
        t.second->canonicalize();
        if (!well_formed(*t.second)) throw std::logic_error("child instance violates the E(G,D) invariants");
    }
    out.push_back(std::move(t));
}

void TwSolver::join_transitions(const PiInstance& inst, std::vector<Transition>& out) {
    const auto& node = d_.nodes[inst.node];
    // Members in order L1 then L2; part 0/1/2 stands for A/B/C.
    struct Item {
        VertexSet z;
        bool in_l1;
        bool forced_b;
    };
    std::vector<Item> items;
    for (const auto& z : inst.l1) items.push_back({z, true, z.intersects(inst.y0)});
    for (const auto& z : inst.l2) {
        bool image = false;
        for (const auto& [v, fz] : inst.f) image = image || fz == z;
        items.push_back({z, false, image || z.intersects(inst.y0)});
    }
    std::vector<int> part(items.size(), 0);
    // block_L: must be blocked on the left; free_L: must not be.
    auto rec = [&](auto&& self, std::size_t i, Family& block_l, Family& free_l, Family& block_r,
                   Family& free_r) -> void {
        if (i == items.size()) {
            PiInstance left{node.children[0], inst.y0, {}, {}, inst.f, inst.s};
            PiInstance right{node.children[1], inst.y0, {}, {}, inst.f, inst.s};
            for (std::size_t k = 0; k < items.size(); ++k) {
                const auto& it = items[k];
                const int p = part[k];
                if (it.in_l1) {
                    if (p == 0) left.l1.push_back(it.z), right.s.push_back(it.z);
                    if (p == 1) left.l2.push_back(it.z), right.l2.push_back(it.z);
                    if (p == 2) right.l1.push_back(it.z), left.s.push_back(it.z);
                } else {
                    if (p == 0) left.l2.push_back(it.z), right.s.push_back(it.z);
                    if (p == 1) left.l2.push_back(it.z), right.l2.push_back(it.z);
                    if (p == 2) right.l2.push_back(it.z), left.s.push_back(it.z);
                }
            }
            emit(out, Transition{std::move(left), std::move(right), false});
            return;
        }
        const VertexSet& z = items[i].z;
        for (int p = 0; p < 3; ++p) {
            if (items[i].forced_b && p != 1) continue;
            // Left blocks Z for A,B; right blocks Z for B,C.
            const bool lb = p != 2, rb = p != 0;
            auto conflict = [&](const Family& must, const Family& mustnt, bool b) {
                return b ? std::find(mustnt.begin(), mustnt.end(), z) != mustnt.end()
                         : std::find(must.begin(), must.end(), z) != must.end();
            };
            if (conflict(block_l, free_l, lb) || conflict(block_r, free_r, rb)) continue;
            part[i] = p;
            (lb ? block_l : free_l).push_back(z);
            (rb ? block_r : free_r).push_back(z);
            self(self, i + 1, block_l, free_l, block_r, free_r);
            (lb ? block_l : free_l).pop_back();
            (rb ? block_r : free_r).pop_back();
        }
    };
    Family block_l, free_l(inst.s), block_r, free_r(inst.s);
    rec(rec, 0, block_l, free_l, block_r, free_r);
}

void TwSolver::introduce_transitions(const PiInstance& inst, std::vector<Transition>& out) {
    const auto& node = d_.nodes[inst.node];
    const Vertex v = node.vertex;
    const int child = node.children[0];
    if (!inst.y0.contains(v)) {
        PiInstance c{child, inst.y0, without_vertex(inst.l1, v), without_vertex(inst.l2, v), {},
                     without_vertex(inst.s, v)};
        for (const auto& [u, z] : inst.f) c.f.emplace_back(u, z.without(v));
        emit(out, Transition{std::move(c), std::nullopt, false});
        return;
    }
    const VertexSet fv = *inst.f_of(v);
    if (!fv.contains(v)) return;
    for (const auto& z : inst.s)
        if (z.contains(v)) return;
    PiInstance base{child, inst.y0.without(v), {}, {}, {}, inst.s};
    for (const auto& [u, z] : inst.f) {
        if (u == v) continue;
        if (z.contains(v)) return;  // Y \ {u} would still meet f(u) at v
        base.f.emplace_back(u, z);
    }
    Family l2_v;
    for (const auto& z : inst.l1)
        if (!z.contains(v)) base.l1.push_back(z);
    for (const auto& z : inst.l2) {
        if (!z.contains(v)) base.l2.push_back(z);
        else if (z != fv) l2_v.push_back(z);
    }
    // L2^A = {f(v)} plus any subset of the other members containing v.
    const std::size_t k = l2_v.size();
    if (k > 30) throw CapacityError("introduce node: too many family members to enumerate");
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << k); ++mask) {
        PiInstance c = base;
        c.s.push_back(fv.without(v));
        for (std::size_t i = 0; i < k; ++i)
            if ((mask >> i) & 1u) c.s.push_back(l2_v[i].without(v));
        emit(out, Transition{std::move(c), std::nullopt, true});
    }
}

void TwSolver::forget_transitions(const PiInstance& inst, std::vector<Transition>& out) {
    const auto& node = d_.nodes[inst.node];
    const Vertex v = node.vertex;
    const int child = node.children[0];
    const VertexSet& x = node.bag;
    const VertexSet& scope = scope_[inst.node];
    auto crit = [&](const VertexSet& z) { return classify_criticality(alpha_, scope, x, z, v); };
    auto lift = [&](const Family& fam) {  // a_v(L^(v)) ∪ L^(v̄) ∪ a_v(L^(*v)) ∪ L^(*v)
        Family o;
        for (const auto& z : fam) {
            const Criticality c = crit(z);
            if (c != Criticality::VBarCritical) o.push_back(z.with(v));
            if (c != Criticality::VCritical) o.push_back(z);
        }
        normalize(o);
        return o;
    };
    const Family l1c = lift(inst.l1);
    const Family l2c = lift(inst.l2);

    // Case 1: v in Y.
    bool case1 = std::none_of(inst.s.begin(), inst.s.end(),
                              [&](const VertexSet& z) { return crit(z) == Criticality::VCritical; });
    for (const auto& [u, z] : inst.f) case1 = case1 && crit(z) != Criticality::VCritical;
    if (case1) {
        for (const auto& zs : inst.l1) {
            if (crit(zs) == Criticality::VBarCritical) continue;
            PiInstance c{child, inst.y0.with(v), l1c, l2c, inst.f, inst.s};
            c.l2.push_back(zs.with(v));
            c.f.emplace_back(v, zs.with(v));
            emit(out, Transition{std::move(c), std::nullopt, false});
        }
    }

    // Case 2: v not in Y.
    Family s_fixed, s_mixed;
    for (const auto& z : inst.s) {
        const Criticality c = crit(z);
        if (c == Criticality::VCritical) s_fixed.push_back(z.with(v));
        else if (c == Criticality::VBarCritical) s_fixed.push_back(z);
        else s_mixed.push_back(z);
    }
    std::vector<std::pair<Vertex, VertexSet>> f_fixed;
    std::vector<std::pair<Vertex, VertexSet>> f_mixed;
    for (const auto& [u, z] : inst.f) {
        const Criticality c = crit(z);
        if (c == Criticality::VCritical) f_fixed.emplace_back(u, z.with(v));
        else if (c == Criticality::VBarCritical) f_fixed.emplace_back(u, z);
        else f_mixed.emplace_back(u, z);
    }
    const std::size_t ks = s_mixed.size(), kf = f_mixed.size();
    if (ks + kf > 30) throw CapacityError("forget node: too many family members to enumerate");
    for (std::uint64_t ms = 0; ms < (std::uint64_t{1} << ks); ++ms) {
        for (std::uint64_t mf = 0; mf < (std::uint64_t{1} << kf); ++mf) {
            // bit set in ms: member goes to S^A (lifted by v); in mf: f(u) ∪ {v}
            PiInstance c{child, inst.y0, l1c, l2c, f_fixed, s_fixed};
            for (std::size_t i = 0; i < ks; ++i)
                c.s.push_back((ms >> i) & 1u ? s_mixed[i].with(v) : s_mixed[i]);
            for (std::size_t i = 0; i < kf; ++i)
                c.f.emplace_back(f_mixed[i].first, (mf >> i) & 1u ? f_mixed[i].second.with(v) : f_mixed[i].second);
            emit(out, Transition{std::move(c), std::nullopt, false});
        }
    }
}

std::vector<Transition> TwSolver::transitions(const PiInstance& inst) {
    std::vector<Transition> out;
    if (trivially_infeasible(inst)) return out;
    switch (d_.nodes[inst.node].kind) {
        case NodeKind::Leaf:
            break;
        case NodeKind::Join:
            join_transitions(inst, out);
            break;
        case NodeKind::Introduce:
            introduce_transitions(inst, out);
            break;
        case NodeKind::Forget:
            forget_transitions(inst, out);
            break;
    }
    transitions_enumerated_ += out.size();
    return out;
}

std::optional<VertexSet> TwSolver::solve(const PiInstance& inst) {
    if (auto it = memo_.find(inst); it != memo_.end()) return it->second;
    if (opts_.ctx) opts_.ctx->expand(0);
    std::optional<VertexSet> best;
    const auto& node = d_.nodes[inst.node];
    if (node.kind == NodeKind::Leaf) {
        if (check(inst, VertexSet{})) best = VertexSet{};
    } else {
        for (const auto& t : transitions(inst)) {
            std::optional<VertexSet> cand = solve(t.first);
            if (!cand) continue;
            if (t.second) {
                auto r = solve(*t.second);
                if (!r) continue;
                *cand |= *r;
            }
            if (t.adds_vertex) cand->insert(node.vertex);
            if (!best || cand->size() > best->size()) best = cand;
        }
    }
    memo_.emplace(inst, best);
    return best;
}

bool tchack_check(const Graph& g, const NiceTreeDecomposition& d, const PiInstance& inst, const VertexSet& y) {
    DpOptions opts;
    opts.bag_limit = kMaxVertices;
    TwSolver solver(g, d, opts);
    return solver.check(inst, y);
}

std::optional<VertexSet> solve_pi(const Graph& g, const NiceTreeDecomposition& d, const PiInstance& inst,
                                  DpOptions opts) {
    TwSolver solver(g, d, opts);
    PiInstance canon = inst;
    canon.canonicalize();
    if (!solver.well_formed(canon)) throw std::invalid_argument("solve_pi: malformed instance");
    return solver.solve(canon);
}

TwResult mmbs_tw(const Graph& g, const NiceTreeDecomposition& d, DpOptions opts) {
    if (g.num_vertices() == 0) throw std::invalid_argument("mmbs_tw: empty graph");
    std::string why;
    if (!validate_nice(g, d, &why)) throw InvalidDecomposition("invalid nice decomposition: " + why);
    TwSolver solver(g, d, opts);
    const auto y = solver.solve(root_instance(d));
    if (!y) throw std::logic_error("mmbs_tw: root instance infeasible");
    return TwResult{y->size(), *y, solver.memo_size(), solver.transitions_enumerated()};
}

}  // namespace blockset
