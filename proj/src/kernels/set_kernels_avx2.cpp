#include <immintrin.h>

#include "blockset/set_kernels.hpp"

// Each 256-bit register holds two 128-bit sets. A set is empty iff both of its
// 64-bit lanes compare equal to zero, which movemask_pd exposes as a bit pair.
namespace blockset::kernels::avx2 {

namespace {

#define BLOCKSET_AVX2 __attribute__((target("avx2")))

BLOCKSET_AVX2 inline __m256i broadcast(const VertexSet& s) {
    const __m128i x = _mm_set_epi64x(static_cast<long long>(s.high_word()),
                                     static_cast<long long>(s.low_word()));
    return _mm256_broadcastsi128_si256(x);
}

BLOCKSET_AVX2 inline __m256i load_pair(const VertexSet* p) {
    return _mm256_loadu_si256(reinterpret_cast<const __m256i*>(p));
}

// Bit pattern of zero lanes: bits 0,1 for the first set and 2,3 for the second.
BLOCKSET_AVX2 inline int zero_lanes(__m256i x) {
    const __m256i eq = _mm256_cmpeq_epi64(x, _mm256_setzero_si256());
    return _mm256_movemask_pd(_mm256_castsi256_pd(eq));
}

BLOCKSET_AVX2 inline int equal_lanes(__m256i x, __m256i y) {
    return _mm256_movemask_pd(_mm256_castsi256_pd(_mm256_cmpeq_epi64(x, y)));
}

}  // namespace

BLOCKSET_AVX2 bool hits_all(const VertexSet* sets, std::size_t n, const VertexSet& s) {
    const __m256i mask = broadcast(s);
    std::size_t i = 0;
    for (; i + 2 <= n; i += 2) {
        const int z = zero_lanes(_mm256_and_si256(load_pair(sets + i), mask));
        if ((z & 0x3) == 0x3 || (z & 0xC) == 0xC) return false;
    }
    for (; i < n; ++i)
        if (!sets[i].intersects(s)) return false;
    return true;
}

BLOCKSET_AVX2 bool any_subset_of(const VertexSet* sets, std::size_t n, const VertexSet& s) {
    const __m256i mask = broadcast(s);
    std::size_t i = 0;
    for (; i + 2 <= n; i += 2) {
        // e \ s == 0
        const int z = zero_lanes(_mm256_andnot_si256(mask, load_pair(sets + i)));
        if ((z & 0x3) == 0x3 || (z & 0xC) == 0xC) return true;
    }
    for (; i < n; ++i)
        if (sets[i].is_subset_of(s)) return true;
    return false;
}

BLOCKSET_AVX2 bool has_private_edge(const VertexSet* sets, std::size_t n, const VertexSet& s,
                                    Vertex v) {
    const __m256i mask = broadcast(s);
    const VertexSet single = VertexSet::singleton(v);
    const __m256i want = broadcast(single);
    std::size_t i = 0;
    for (; i + 2 <= n; i += 2) {
        const int e = equal_lanes(_mm256_and_si256(load_pair(sets + i), mask), want);
        if ((e & 0x3) == 0x3 || (e & 0xC) == 0xC) return true;
    }
    for (; i < n; ++i)
        if ((sets[i] & s) == single) return true;
    return false;
}

BLOCKSET_AVX2 int first_disjoint(const VertexSet* sets, std::size_t n, const VertexSet& s) {
    const __m256i mask = broadcast(s);
    std::size_t i = 0;
    for (; i + 2 <= n; i += 2) {
        const int z = zero_lanes(_mm256_and_si256(load_pair(sets + i), mask));
        if ((z & 0x3) == 0x3) return static_cast<int>(i);
        if ((z & 0xC) == 0xC) return static_cast<int>(i + 1);
    }
    for (; i < n; ++i)
        if (!sets[i].intersects(s)) return static_cast<int>(i);
    return -1;
}

}  // namespace blockset::kernels::avx2
