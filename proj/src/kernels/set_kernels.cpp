#include "blockset/set_kernels.hpp"

#include <atomic>
#include <stdexcept>

namespace blockset::kernels {

namespace scalar {

bool hits_all(const VertexSet* sets, std::size_t n, const VertexSet& s) {
    for (std::size_t i = 0; i < n; ++i)
        if (!sets[i].intersects(s)) return false;
    return true;
}

bool any_subset_of(const VertexSet* sets, std::size_t n, const VertexSet& s) {
    for (std::size_t i = 0; i < n; ++i)
        if (sets[i].is_subset_of(s)) return true;
    return false;
}

bool has_private_edge(const VertexSet* sets, std::size_t n, const VertexSet& s, Vertex v) {
    const VertexSet want = VertexSet::singleton(v);
    for (std::size_t i = 0; i < n; ++i)
        if ((sets[i] & s) == want) return true;
    return false;
}

int first_disjoint(const VertexSet* sets, std::size_t n, const VertexSet& s) {
    for (std::size_t i = 0; i < n; ++i)
        if (!sets[i].intersects(s)) return static_cast<int>(i);
    return -1;
}

}  // namespace scalar

namespace {

bool detect_avx2() {
#if defined(__x86_64__) || defined(__i386__)
    return __builtin_cpu_supports("avx2");
#else
    return false;
#endif
}

std::atomic<Backend>& backend_slot() {
    static std::atomic<Backend> slot{detect_avx2() ? Backend::Avx2 : Backend::Scalar};
    return slot;
}

}  // namespace

bool avx2_available() {
    static const bool ok = detect_avx2();
    return ok;
}

Backend active_backend() { return backend_slot().load(std::memory_order_relaxed); }

void set_backend(Backend b) {
    if (b == Backend::Avx2 && !avx2_available()) throw std::runtime_error("AVX2 not supported on this CPU");
    backend_slot().store(b, std::memory_order_relaxed);
}

void reset_backend() { backend_slot().store(avx2_available() ? Backend::Avx2 : Backend::Scalar); }

bool hits_all(const std::vector<VertexSet>& sets, const VertexSet& s) {
    if (active_backend() == Backend::Avx2) return avx2::hits_all(sets.data(), sets.size(), s);
    return scalar::hits_all(sets.data(), sets.size(), s);
}

bool any_subset_of(const std::vector<VertexSet>& sets, const VertexSet& s) {
    if (active_backend() == Backend::Avx2) return avx2::any_subset_of(sets.data(), sets.size(), s);
    return scalar::any_subset_of(sets.data(), sets.size(), s);
}

bool has_private_edge(const std::vector<VertexSet>& sets, const VertexSet& s, Vertex v) {
    if (active_backend() == Backend::Avx2) return avx2::has_private_edge(sets.data(), sets.size(), s, v);
    return scalar::has_private_edge(sets.data(), sets.size(), s, v);
}

int first_disjoint(const std::vector<VertexSet>& sets, const VertexSet& s) {
    if (active_backend() == Backend::Avx2) return avx2::first_disjoint(sets.data(), sets.size(), s);
    return scalar::first_disjoint(sets.data(), sets.size(), s);
}

}  // namespace blockset::kernels
