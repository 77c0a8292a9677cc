#pragma once

#include <cstdint>

namespace blockset {

/// xorshift64* ("blockset-xs64s-v1").
///
/// Seeding: state = splitmix64(seed), replaced by 0x9E3779B97F4A7C15 if zero.
/// Step:    x ^= x >> 12; x ^= x << 25; x ^= x >> 27; state = x;
///          output = x * 0x2545F4914F6CDD1D (mod 2^64).
/// uniform() = (output >> 11) * 2^-53; below(n) = output % n.
class Rng {
   public:
    static constexpr const char* kName = "blockset-xs64s-v1";

    explicit Rng(std::uint64_t seed) : state_(splitmix64(seed)) {
        if (state_ == 0) state_ = 0x9E3779B97F4A7C15ull;
    }

    std::uint64_t next() {
        std::uint64_t x = state_;
        x ^= x >> 12;
        x ^= x << 25;
        x ^= x >> 27;
        state_ = x;
        return x * 0x2545F4914F6CDD1Dull;
    }

    double uniform() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }
    std::uint64_t below(std::uint64_t n) { return next() % n; }
    std::uint64_t state() const { return state_; }

    static std::uint64_t splitmix64(std::uint64_t z) {
        z += 0x9E3779B97F4A7C15ull;
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
        return z ^ (z >> 31);
    }

   private:
    std::uint64_t state_;
};

}  // namespace blockset
