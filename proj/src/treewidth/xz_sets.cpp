#include "blockset/xz_sets.hpp"

#include <stdexcept>

namespace blockset {

const char* to_string(Criticality c) {
    switch (c) {
        case Criticality::VCritical:
            return "v-critical";
        case Criticality::VBarCritical:
            return "vbar-critical";
        case Criticality::VMixed:
            return "v-mixed";
    }
    return "?";
}

int AlphaCache::alpha(const VertexSet& w) {
    auto it = cache_.find(w);
    if (it != cache_.end()) return it->second;
    const int a = independence_number(g_, w);
    cache_.emplace(w, a);
    return a;
}

namespace {

void check_xz(const Graph& g, const VertexSet& x, const VertexSet& z) {
    if (!z.is_subset_of(x)) throw std::invalid_argument("Z " + z.to_string() + " is not a subset of X " + x.to_string());
    if (!is_independent_set(g, z)) throw std::invalid_argument("Z " + z.to_string() + " is not independent");
}

}  // namespace

ExtSize alpha_xz(AlphaCache& ac, const VertexSet& scope, const VertexSet& x, const VertexSet& z) {
    check_xz(ac.graph(), x, z);
    if (!z.is_subset_of(scope)) return std::nullopt;
    const VertexSet rest = scope - x - ac.graph().neighbors_of(z);
    return z.size() + ac.alpha(rest);
}

ExtSize alpha_xz_avoiding(AlphaCache& ac, const VertexSet& scope, const VertexSet& x, const VertexSet& z,
                          const VertexSet& y) {
    check_xz(ac.graph(), x, z);
    if (z.intersects(y) || !z.is_subset_of(scope)) return std::nullopt;
    const VertexSet rest = scope - x - ac.graph().neighbors_of(z) - y;
    return z.size() + ac.alpha(rest);
}

bool is_xz_blocking(AlphaCache& ac, const VertexSet& scope, const VertexSet& x, const VertexSet& z,
                    const VertexSet& y) {
    const ExtSize full = alpha_xz(ac, scope, x, z);
    if (!full) return true;  // no (X,Z)-independent set at all
    const ExtSize avoid = alpha_xz_avoiding(ac, scope, x, z, y);
    return !avoid || *avoid < *full;
}

Criticality classify_criticality(AlphaCache& ac, const VertexSet& scope, const VertexSet& x, const VertexSet& z,
                                 Vertex v) {
    check_xz(ac.graph(), x, z);
    if (z.contains(v)) return Criticality::VCritical;
    if (x.contains(v) || !scope.contains(v)) return Criticality::VBarCritical;
    const ExtSize base = alpha_xz(ac, scope, x, z);
    if (!base) throw std::invalid_argument("classify_criticality: Z leaves the scope");
    const ExtSize without = alpha_xz(ac, scope, x.with(v), z);
    const VertexSet zv = z.with(v);
    const ExtSize with = is_independent_set(ac.graph(), zv) ? alpha_xz(ac, scope, x.with(v), zv) : ExtSize{};
    if (!without || *without < *base) return Criticality::VCritical;
    if (!with || *with < *base) return Criticality::VBarCritical;
    return Criticality::VMixed;
}

ExtSize alpha_xz(const Graph& g, const VertexSet& x, const VertexSet& z) {
    AlphaCache ac(g);
    return alpha_xz(ac, g.vertices(), x, z);
}

bool is_xz_blocking(const Graph& g, const VertexSet& x, const VertexSet& z, const VertexSet& y) {
    AlphaCache ac(g);
    return is_xz_blocking(ac, g.vertices(), x, z, y);
}

Criticality classify_criticality(const Graph& g, const VertexSet& x, const VertexSet& z, Vertex v) {
    AlphaCache ac(g);
    return classify_criticality(ac, g.vertices(), x, z, v);
}

}  // namespace blockset
