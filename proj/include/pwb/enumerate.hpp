#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "pwb/int128.hpp"
#include "pwb/partition.hpp"

namespace pwb {

// Streams every partition of n exactly once, largest-first in
// reverse-lexicographic order: (n), (n-1,1), ..., (1,1,...,1). The n = 0
// stream is the single empty partition. Memory is O(n); no partition list
// is ever materialized.
class PartitionEnumerator {
public:
    explicit PartitionEnumerator(std::int64_t n);

    // Next partition as a non-increasing span, or nullopt when exhausted.
    // The span aliases internal state and is valid until the next call.
    std::optional<std::span<const std::int64_t>> next();

private:
    std::vector<std::int64_t> x_; // 1-indexed working array
    std::int64_t n_;
    std::int64_t m_ = 0; // current number of parts
    std::int64_t h_ = 0; // last position with a part > 1
    int state_ = 0;      // 0 = before first, 1 = running, 2 = exhausted
};

template <typename Fn> void for_each_partition(std::int64_t n, Fn&& fn) {
    PartitionEnumerator en(n);
    while (auto p = en.next())
        fn(*p);
}

// p(0..n_max) by Euler's pentagonal-number recurrence; the independent
// oracle for the enumerator's totals.
std::vector<int128> partition_counts(std::int64_t n_max);
int128 count_p(std::int64_t n);

} // namespace pwb
