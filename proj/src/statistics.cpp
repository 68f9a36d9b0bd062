#include "pwb/statistics.hpp"

#include <algorithm>
#include <stdexcept>

namespace pwb {

void require_positive_k(std::int64_t k) {
    if (k < 1)
        throw std::invalid_argument("gap parameter k must be >= 1, got " +
                                    std::to_string(k));
}

PolygonShape km_polygon_shape(std::int64_t k, std::int64_t m) {
    require_positive_k(k);
    if (m < 0)
        throw std::invalid_argument("polygon order m must be >= 0");
    PolygonShape shape;
    shape.k = k;
    shape.m = m;
    if (m == 0)
        return shape;
    std::int64_t prod = k * (m - 1);
    if (prod % 2 == 0) {
        shape.rows.assign(static_cast<std::size_t>(m), 1 + prod / 2);
    } else {
        // k odd, m even: m/2 wide rows above m/2 narrow rows.
        shape.rows.assign(static_cast<std::size_t>(m / 2), (prod + 3) / 2);
        shape.rows.insert(shape.rows.end(), static_cast<std::size_t>(m / 2),
                          (prod + 1) / 2);
    }
    return shape;
}

std::int64_t k_measure(std::span<const std::int64_t> parts, std::int64_t k) {
    require_positive_k(k);
    if (parts.empty())
        return 0;
    std::int64_t count = 1;
    std::int64_t last = parts[0];
    for (std::size_t i = 1; i < parts.size(); ++i) {
        if (parts[i] <= last - k) {
            last = parts[i];
            ++count;
        }
    }
    return count;
}

std::int64_t k_measure(const Partition& p, std::int64_t k) {
    return k_measure(p.span(), k);
}

std::int64_t k_measure_oracle(std::span<const std::int64_t> parts,
                              std::int64_t k) {
    require_positive_k(k);
    // chain[i] = longest gap-k chain beginning at part i and moving right.
    std::vector<std::int64_t> chain(parts.size(), 1);
    std::int64_t best = 0;
    for (std::size_t ii = parts.size(); ii-- > 0;) {
        for (std::size_t j = ii + 1; j < parts.size(); ++j)
            if (parts[ii] - parts[j] >= k)
                chain[ii] = std::max(chain[ii], 1 + chain[j]);
        best = std::max(best, chain[ii]);
    }
    return best;
}

std::int64_t k_measure_oracle(const Partition& p, std::int64_t k) {
    return k_measure_oracle(p.span(), k);
}

std::int64_t durfee_side(std::span<const std::int64_t> parts) {
    std::int64_t m = 0;
    while (static_cast<std::size_t>(m) < parts.size() &&
           parts[static_cast<std::size_t>(m)] >= m + 1)
        ++m;
    return m;
}

std::int64_t durfee_side(const Partition& p) { return durfee_side(p.span()); }

bool contains_km_polygon(std::span<const std::int64_t> parts, std::int64_t k,
                         std::int64_t m) {
    require_positive_k(k);
    if (m < 0)
        throw std::invalid_argument("polygon order m must be >= 0");
    if (m == 0)
        return true;
    std::int64_t prod = k * (m - 1);
    std::int64_t hi = 1 + (prod + 1) / 2; // 1 + ceil(k(m-1)/2)
    std::int64_t lo = 1 + prod / 2;       // 1 + floor(k(m-1)/2)
    // Parts are sorted, so "x parts >= hi plus y further parts >= lo" is a
    // pair of prefix-count thresholds.
    std::int64_t ge_hi = 0, ge_lo = 0;
    for (std::int64_t v : parts) {
        if (v >= hi)
            ++ge_hi;
        if (v >= lo)
            ++ge_lo;
        else
            break;
    }
    return ge_hi >= m / 2 && ge_lo >= m;
}

bool contains_km_polygon(const Partition& p, std::int64_t k, std::int64_t m) {
    return contains_km_polygon(p.span(), k, m);
}

bool contains_km_polygon_rowwise(std::span<const std::int64_t> parts,
                                 std::int64_t k, std::int64_t m) {
    PolygonShape shape = km_polygon_shape(k, m);
    if (shape.rows.size() > parts.size())
        return false;
    for (std::size_t i = 0; i < shape.rows.size(); ++i)
        if (parts[i] < shape.rows[i])
            return false;
    return true;
}

std::int64_t durfee_polygon_order(std::span<const std::int64_t> parts,
                                  std::int64_t k) {
    require_positive_k(k);
    std::int64_t m = 0;
    while (static_cast<std::size_t>(m) < parts.size() &&
           contains_km_polygon(parts, k, m + 1))
        ++m;
    return m;
}

std::int64_t durfee_polygon_order(const Partition& p, std::int64_t k) {
    return durfee_polygon_order(p.span(), k);
}

std::int64_t distinct_part_values(std::span<const std::int64_t> parts) {
    std::int64_t count = 0;
    for (std::size_t i = 0; i < parts.size(); ++i)
        if (i == 0 || parts[i] != parts[i - 1])
            ++count;
    return count;
}

std::int64_t max_order(std::int64_t k, std::int64_t n) {
    require_positive_k(k);
    std::int64_t m = 0;
    while ((m + 1) + k * (m + 1) * m / 2 <= n)
        ++m;
    return m;
}

} // namespace pwb
