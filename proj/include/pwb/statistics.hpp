#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "pwb/partition.hpp"

namespace pwb {

// Row profile of the (k,m)-polygon, top row first.
//
//   k(m-1) even:  m rows of 1 + k(m-1)/2 nodes (a rectangle; a square of
//                 side m when k = 2).
//   k(m-1) odd:   m/2 rows of (k(m-1)+3)/2 atop m/2 rows of (k(m-1)+1)/2.
//
// Total node count is m + k*m*(m-1)/2 in both cases.
struct PolygonShape {
    std::int64_t k = 1;
    std::int64_t m = 0;
    std::vector<std::int64_t> rows; // non-increasing, size m

    std::int64_t node_count() const {
        std::int64_t total = 0;
        for (std::int64_t r : rows)
            total += r;
        return total;
    }
};

PolygonShape km_polygon_shape(std::int64_t k, std::int64_t m);

// k-measure: length of the longest subsequence of parts whose consecutive
// members differ by at least k. Greedy: starting from the largest part,
// repeatedly take the largest remaining part <= (last chosen - k), ties by
// smallest index. k = 0 is rejected (the statistic degenerates to the
// length). Parts spans must be non-increasing.
std::int64_t k_measure(std::span<const std::int64_t> parts, std::int64_t k);
std::int64_t k_measure(const Partition& p, std::int64_t k);

// Independent route for the same statistic: longest gap-k chain by dynamic
// programming over the parts. Validates the greedy implementation.
std::int64_t k_measure_oracle(std::span<const std::int64_t> parts,
                              std::int64_t k);
std::int64_t k_measure_oracle(const Partition& p, std::int64_t k);

// Largest m with parts[m-1] >= m (side of the Durfee square).
std::int64_t durfee_side(std::span<const std::int64_t> parts);
std::int64_t durfee_side(const Partition& p);

// True iff the Ferrers diagram of p contains the (k,m)-polygon, i.e. p has
// at least floor(m/2) parts >= 1 + ceil(k(m-1)/2) and an additional
// ceil(m/2) parts >= 1 + floor(k(m-1)/2). Always true for m = 0.
bool contains_km_polygon(std::span<const std::int64_t> parts, std::int64_t k,
                         std::int64_t m);
bool contains_km_polygon(const Partition& p, std::int64_t k, std::int64_t m);

// Equivalent geometric route: row-wise comparison against the shape's rows.
// Kept separate so the two forms can be checked against each other.
bool contains_km_polygon_rowwise(std::span<const std::int64_t> parts,
                                 std::int64_t k, std::int64_t m);

// Largest m whose (k,m)-polygon fits inside the Ferrers diagram of p.
// Scans m upward and stops at the first failure (containment is antitone
// in m; that property is itself under test). Equals durfee_side for k = 2.
std::int64_t durfee_polygon_order(std::span<const std::int64_t> parts,
                                  std::int64_t k);
std::int64_t durfee_polygon_order(const Partition& p, std::int64_t k);

// Number of distinct part values (equals the 1-measure).
std::int64_t distinct_part_values(std::span<const std::int64_t> parts);

// Largest m such that a partition of weight <= n can possibly have
// k-measure m, equivalently contain the (k,m)-polygon: both need weight
// at least m + k*m*(m-1)/2.
std::int64_t max_order(std::int64_t k, std::int64_t n);

void require_positive_k(std::int64_t k);

} // namespace pwb
