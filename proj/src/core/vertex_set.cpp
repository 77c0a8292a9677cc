#include "blockset/vertex_set.hpp"

namespace blockset {

VertexSet VertexSet::range(int n) {
    if (n < 0 || n > kMaxVertices)
        throw CapacityError("vertex count " + std::to_string(n) + " exceeds capacity 128");
    if (n == 0) return {};
    if (n < 64) return VertexSet((std::uint64_t{1} << n) - 1, 0);
    if (n == 64) return VertexSet(~std::uint64_t{0}, 0);
    if (n == 128) return VertexSet(~std::uint64_t{0}, ~std::uint64_t{0});
    return VertexSet(~std::uint64_t{0}, (std::uint64_t{1} << (n - 64)) - 1);
}

std::vector<Vertex> VertexSet::to_vector() const {
    std::vector<Vertex> out;
    out.reserve(size());
    for_each([&](Vertex v) { out.push_back(v); });
    return out;
}

std::string VertexSet::to_string(int offset) const {
    std::string s = "{";
    bool first_item = true;
    for_each([&](Vertex v) {
        if (!first_item) s += ',';
        first_item = false;
        s += std::to_string(v + offset);
    });
    s += '}';
    return s;
}

}  // namespace blockset
