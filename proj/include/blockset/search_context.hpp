#pragma once

#include <chrono>
#include <cstdint>
#include <optional>
#include <stdexcept>

namespace blockset {

struct BranchStats {
    std::uint64_t nodes_expanded = 0;
    std::uint64_t max_depth = 0;
    double time_ms = 0.0;
};

class Timeout : public std::runtime_error {
   public:
    Timeout() : std::runtime_error("search deadline exceeded") {}
};

/// Per-solve bookkeeping: statistics and a cooperative deadline.
class SearchContext {
   public:
    using Clock = std::chrono::steady_clock;

    SearchContext() : start_(Clock::now()) {}
    explicit SearchContext(std::optional<std::chrono::milliseconds> timeout) : SearchContext() {
        if (timeout) deadline_ = start_ + *timeout;
    }

    /// Counts one expanded node at `depth`; throws Timeout past the deadline.
    void expand(std::uint64_t depth) {
        ++stats_.nodes_expanded;
        if (depth > stats_.max_depth) stats_.max_depth = depth;
        if (deadline_ && (stats_.nodes_expanded & 0xFF) == 0 && Clock::now() > *deadline_) throw Timeout();
    }

    void check_deadline() const {
        if (deadline_ && Clock::now() > *deadline_) throw Timeout();
    }

    const BranchStats& stats() {
        stats_.time_ms = std::chrono::duration<double, std::milli>(Clock::now() - start_).count();
        return stats_;
    }

   private:
    Clock::time_point start_;
    std::optional<Clock::time_point> deadline_;
    BranchStats stats_;
};

}  // namespace blockset
