#pragma once

#include <bit>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <stdexcept>
#include <string>
#include <vector>

namespace blockset {

using Vertex = int;

/// Largest vertex count any solver accepts.
inline constexpr int kMaxVertices = 128;

class CapacityError : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
};

/// Set of vertex ids in [0, 128), stored as a fixed-width bitmask.
///
/// The two 64-bit words are laid out contiguously (low word first) so that
/// arrays of sets can be scanned by the vectorized kernels in set_kernels.hpp.
/// Ordering compares the 128-bit numeric value of the mask.
class VertexSet {
   public:
    constexpr VertexSet() = default;
    constexpr VertexSet(std::uint64_t lo, std::uint64_t hi) : words_{lo, hi} {}
    VertexSet(std::initializer_list<Vertex> vs) {
        for (Vertex v : vs) insert(v);
    }

    static VertexSet singleton(Vertex v) {
        VertexSet s;
        s.insert(v);
        return s;
    }
    /// {0, ..., n-1}
    static VertexSet range(int n);
    static VertexSet from_vector(const std::vector<Vertex>& vs) {
        VertexSet s;
        for (Vertex v : vs) s.insert(v);
        return s;
    }

    bool contains(Vertex v) const { return (words_[word(v)] >> bit(v)) & 1u; }
    void insert(Vertex v) { words_[word(v)] |= std::uint64_t{1} << bit(v); }
    void erase(Vertex v) { words_[word(v)] &= ~(std::uint64_t{1} << bit(v)); }

    VertexSet with(Vertex v) const {
        VertexSet s = *this;
        s.insert(v);
        return s;
    }
    VertexSet without(Vertex v) const {
        VertexSet s = *this;
        s.erase(v);
        return s;
    }

    int size() const { return std::popcount(words_[0]) + std::popcount(words_[1]); }
    bool empty() const { return (words_[0] | words_[1]) == 0; }

    /// Smallest member; -1 when empty.
    Vertex first() const {
        if (words_[0] != 0) return std::countr_zero(words_[0]);
        if (words_[1] != 0) return 64 + std::countr_zero(words_[1]);
        return -1;
    }
    /// Largest member; -1 when empty.
    Vertex last() const {
        if (words_[1] != 0) return 127 - std::countl_zero(words_[1]);
        if (words_[0] != 0) return 63 - std::countl_zero(words_[0]);
        return -1;
    }

    bool intersects(const VertexSet& o) const {
        return ((words_[0] & o.words_[0]) | (words_[1] & o.words_[1])) != 0;
    }
    bool is_subset_of(const VertexSet& o) const {
        return ((words_[0] & ~o.words_[0]) | (words_[1] & ~o.words_[1])) == 0;
    }

    VertexSet operator|(const VertexSet& o) const {
        return VertexSet(words_[0] | o.words_[0], words_[1] | o.words_[1]);
    }
    VertexSet operator&(const VertexSet& o) const {
        return VertexSet(words_[0] & o.words_[0], words_[1] & o.words_[1]);
    }
    /// Set difference.
    VertexSet operator-(const VertexSet& o) const {
        return VertexSet(words_[0] & ~o.words_[0], words_[1] & ~o.words_[1]);
    }
    VertexSet& operator|=(const VertexSet& o) { return *this = *this | o; }
    VertexSet& operator&=(const VertexSet& o) { return *this = *this & o; }
    VertexSet& operator-=(const VertexSet& o) { return *this = *this - o; }

    bool operator==(const VertexSet& o) const = default;
    std::strong_ordering operator<=>(const VertexSet& o) const {
        if (auto c = words_[1] <=> o.words_[1]; c != 0) return c;
        return words_[0] <=> o.words_[0];
    }

    template <typename F>
    void for_each(F&& f) const {
        for (int w = 0; w < 2; ++w) {
            std::uint64_t bits = words_[w];
            while (bits != 0) {
                f(static_cast<Vertex>(w * 64 + std::countr_zero(bits)));
                bits &= bits - 1;
            }
        }
    }

    std::vector<Vertex> to_vector() const;
    /// "{0,3,5}"; `offset` shifts every printed id (1 for on-disk labels).
    std::string to_string(int offset = 0) const;

    std::uint64_t low_word() const { return words_[0]; }
    std::uint64_t high_word() const { return words_[1]; }

   private:
    static int word(Vertex v) { return v >> 6; }
    static int bit(Vertex v) { return v & 63; }

    std::uint64_t words_[2] = {0, 0};
};

static_assert(sizeof(VertexSet) == 16);

struct VertexSetHash {
    std::size_t operator()(const VertexSet& s) const noexcept {
        std::uint64_t h = s.low_word() * 0x9E3779B97F4A7C15ull;
        h ^= (s.high_word() + 0x632BE59BD9B4E019ull) + (h << 6) + (h >> 2);
        return static_cast<std::size_t>(h);
    }
};

/// Calls f(sub) for every subset of `set`, starting from the empty set, in
/// increasing numeric order of the compressed index.
template <typename F>
void for_each_subset(const VertexSet& set, F&& f) {
    const std::vector<Vertex> members = set.to_vector();
    const int k = static_cast<int>(members.size());
    if (k > 30) throw CapacityError("subset enumeration over more than 30 elements");
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << k); ++mask) {
        VertexSet sub;
        for (int i = 0; i < k; ++i)
            if ((mask >> i) & 1u) sub.insert(members[i]);
        f(sub);
    }
}

}  // namespace blockset
