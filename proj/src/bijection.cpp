#include "pwb/bijection.hpp"

#include <algorithm>
#include <cassert>
#include <stdexcept>

#include "pwb/statistics.hpp"

namespace pwb {

OffsetVector offset_vector(std::int64_t k, std::int64_t m) {
    require_positive_k(k);
    if (m < 0)
        throw std::invalid_argument("offset vector length m must be >= 0");
    OffsetVector ov;
    ov.k = k;
    ov.m = m;
    ov.deltas.reserve(static_cast<std::size_t>(m));
    for (std::int64_t j = 1; j <= m; ++j) {
        if (j <= m / 2)
            ov.deltas.push_back(-(k * (m + 1 - 2 * j) / 2));
        else
            ov.deltas.push_back(k * (2 * j - m - 1) / 2);
    }
    return ov;
}

std::string_view strategy_name(Strategy s) {
    switch (s) {
    case Strategy::GreedyTop:
        return "greedy-top";
    case Strategy::GreedyBottom:
        return "greedy-bottom";
    case Strategy::MinIndexLex:
        return "min-index-lex";
    case Strategy::MaxIndexLex:
        return "max-index-lex";
    }
    return "?";
}

std::optional<Strategy> strategy_from_name(std::string_view name) {
    for (Strategy s : kAllStrategies)
        if (strategy_name(s) == name)
            return s;
    return std::nullopt;
}

namespace {

[[noreturn]] void throw_not_in_source(const Partition& p, std::int64_t k,
                                      std::int64_t m) {
    throw std::invalid_argument(
        "partition (" + format_partition(p) + ") has " + std::to_string(k) +
        "-measure " + std::to_string(k_measure(p, k)) + ", need at least " +
        std::to_string(m));
}

[[noreturn]] void throw_not_in_target(const Partition& p, std::int64_t k,
                                      std::int64_t m) {
    std::int64_t prod = k * (m - 1);
    std::int64_t hi = 1 + (prod + 1) / 2;
    std::int64_t lo = 1 + prod / 2;
    throw std::invalid_argument(
        "partition (" + format_partition(p) + ") does not contain the (" +
        std::to_string(k) + "," + std::to_string(m) + ")-polygon: needs " +
        std::to_string(m / 2) + " parts >= " + std::to_string(hi) +
        " and an additional " + std::to_string(m - m / 2) +
        " parts >= " + std::to_string(lo));
}

// chain[i] = longest gap-k chain starting at part i and moving right.
std::vector<std::int64_t> chain_lengths(std::span<const std::int64_t> parts,
                                        std::int64_t k) {
    std::vector<std::int64_t> chain(parts.size(), 1);
    for (std::size_t ii = parts.size(); ii-- > 0;)
        for (std::size_t j = ii + 1; j < parts.size(); ++j)
            if (parts[ii] - parts[j] >= k)
                chain[ii] = std::max(chain[ii], 1 + chain[j]);
    return chain;
}

std::vector<std::size_t> forward_greedy_top(std::span<const std::int64_t> parts,
                                            std::int64_t k, std::int64_t m) {
    std::vector<std::size_t> idx;
    std::int64_t last = 0;
    for (std::size_t i = 0; i < parts.size() && std::ssize(idx) < m; ++i) {
        if (idx.empty() || parts[i] <= last - k) {
            idx.push_back(i);
            last = parts[i];
        }
    }
    return idx;
}

std::vector<std::size_t>
forward_greedy_bottom(std::span<const std::int64_t> parts, std::int64_t k,
                      std::int64_t m) {
    std::vector<std::size_t> idx;
    std::int64_t last = 0;
    for (std::size_t i = parts.size(); i-- > 0 && std::ssize(idx) < m;) {
        if (idx.empty() || parts[i] >= last + k) {
            idx.push_back(i);
            last = parts[i];
        }
    }
    std::reverse(idx.begin(), idx.end());
    return idx;
}

// Lexicographically extreme valid index sets, via the chain-length table:
// a slot can sit at index i when the remaining slots still have a long
// enough chain below it.
std::vector<std::size_t> forward_lex(std::span<const std::int64_t> parts,
                                     std::int64_t k, std::int64_t m,
                                     bool smallest) {
    std::vector<std::int64_t> chain = chain_lengths(parts, k);
    std::vector<std::size_t> idx;
    std::size_t start = 0;
    bool have_prev = false;
    std::int64_t prev_value = 0;
    for (std::int64_t slot = 0; slot < m; ++slot) {
        std::int64_t needed = m - slot;
        bool found = false;
        std::size_t pick = 0;
        for (std::size_t i = start; i < parts.size(); ++i) {
            if ((!have_prev || prev_value - parts[i] >= k) &&
                chain[i] >= needed) {
                pick = i;
                found = true;
                if (smallest)
                    break;
            }
        }
        if (!found)
            return idx; // caller reports the membership failure
        idx.push_back(pick);
        start = pick + 1;
        have_prev = true;
        prev_value = parts[pick];
    }
    return idx;
}

// Prefix counts against the polygon rows: counts[j] = #parts >= rows[j].
std::vector<std::int64_t> row_prefix_counts(std::span<const std::int64_t> parts,
                                            const PolygonShape& shape) {
    std::vector<std::int64_t> counts;
    counts.reserve(shape.rows.size());
    for (std::int64_t row : shape.rows) {
        std::int64_t c = 0;
        while (static_cast<std::size_t>(c) < parts.size() &&
               parts[static_cast<std::size_t>(c)] >= row)
            ++c;
        counts.push_back(c);
    }
    return counts;
}

std::vector<std::size_t>
inverse_greedy_bottom(std::span<const std::int64_t> parts, std::int64_t k,
                      std::int64_t m) {
    std::int64_t prod = k * (m - 1);
    std::int64_t hi = 1 + (prod + 1) / 2;
    std::int64_t lo = 1 + prod / 2;
    std::int64_t ge_hi = 0, ge_lo = 0;
    for (std::int64_t v : parts) {
        if (v >= hi)
            ++ge_hi;
        if (v >= lo)
            ++ge_lo;
        else
            break;
    }
    std::int64_t want_lo = m - m / 2; // ceil(m/2) slots at the low threshold
    std::int64_t want_hi = m / 2;
    if (ge_hi < want_hi || ge_lo < m)
        return {};
    // Low slots take the smallest parts >= lo; high slots then take the
    // smallest unused parts >= hi (which all sit above the low block).
    std::vector<std::size_t> idx;
    std::int64_t hi_end = std::min(ge_hi, ge_lo - want_lo);
    for (std::int64_t i = hi_end - want_hi; i < hi_end; ++i)
        idx.push_back(static_cast<std::size_t>(i));
    for (std::int64_t i = ge_lo - want_lo; i < ge_lo; ++i)
        idx.push_back(static_cast<std::size_t>(i));
    return idx;
}

std::vector<std::size_t> inverse_lex(std::span<const std::int64_t> parts,
                                     std::int64_t k, std::int64_t m,
                                     bool smallest) {
    PolygonShape shape = km_polygon_shape(k, m);
    std::vector<std::int64_t> counts = row_prefix_counts(parts, shape);
    std::vector<std::size_t> idx;
    if (smallest) {
        // Slot j at index j works whenever the partition qualifies at all.
        for (std::size_t j = 0; j < counts.size(); ++j) {
            if (static_cast<std::int64_t>(j) >= counts[j])
                return {};
            idx.push_back(j);
        }
        return idx;
    }
    // Latest consistent placement, computed back to front.
    std::vector<std::int64_t> latest(counts.size());
    for (std::size_t j = counts.size(); j-- > 0;) {
        latest[j] = counts[j] - 1;
        if (j + 1 < counts.size())
            latest[j] = std::min(latest[j], latest[j + 1] - 1);
        if (latest[j] < 0)
            return {};
    }
    for (std::int64_t i : latest)
        idx.push_back(static_cast<std::size_t>(i));
    return idx;
}

} // namespace

PartIndexSet select_forward(const Partition& p, std::int64_t k, std::int64_t m,
                            Strategy strategy) {
    require_positive_k(k);
    if (m < 0)
        throw std::invalid_argument("subsequence length m must be >= 0");
    if (m == 0)
        return {};
    std::span<const std::int64_t> parts = p.span();
    std::vector<std::size_t> idx;
    switch (strategy) {
    case Strategy::GreedyTop:
        idx = forward_greedy_top(parts, k, m);
        break;
    case Strategy::GreedyBottom:
        idx = forward_greedy_bottom(parts, k, m);
        break;
    case Strategy::MinIndexLex:
        idx = forward_lex(parts, k, m, true);
        break;
    case Strategy::MaxIndexLex:
        idx = forward_lex(parts, k, m, false);
        break;
    }
    if (std::ssize(idx) < m)
        throw_not_in_source(p, k, m);
    return PartIndexSet(std::move(idx));
}

PartIndexSet select_inverse(const Partition& p, std::int64_t k, std::int64_t m,
                            Strategy strategy) {
    require_positive_k(k);
    if (m < 0)
        throw std::invalid_argument("subsequence length m must be >= 0");
    if (m == 0)
        return {};
    std::span<const std::int64_t> parts = p.span();
    std::vector<std::size_t> idx;
    switch (strategy) {
    case Strategy::GreedyTop:
    case Strategy::MinIndexLex:
        // The m largest parts, ties by smallest index.
        idx = inverse_lex(parts, k, m, true);
        break;
    case Strategy::GreedyBottom:
        idx = inverse_greedy_bottom(parts, k, m);
        break;
    case Strategy::MaxIndexLex:
        idx = inverse_lex(parts, k, m, false);
        break;
    }
    if (std::ssize(idx) < m)
        throw_not_in_target(p, k, m);
    return PartIndexSet(std::move(idx));
}

Partition phi(const Partition& p, std::int64_t k, std::int64_t m,
              Strategy strategy) {
    require_positive_k(k);
    if (m == 0)
        return p;
    PartIndexSet sel = select_forward(p, k, m, strategy);
    std::vector<std::int64_t> values = subsequence_values(p, sel);
    OffsetVector ov = offset_vector(k, m);
    for (std::size_t j = 0; j < values.size(); ++j)
        values[j] += ov.deltas[j];
    Partition result = replace_parts(p, sel, values);
    assert(contains_km_polygon(result, k, m));
    assert(result.weight() == p.weight() && result.length() == p.length());
    return result;
}

Partition psi(const Partition& p, std::int64_t k, std::int64_t m,
              Strategy strategy) {
    require_positive_k(k);
    if (m == 0)
        return p;
    PartIndexSet sel = select_inverse(p, k, m, strategy);
    std::vector<std::int64_t> values = subsequence_values(p, sel);
    OffsetVector ov = offset_vector(k, m);
    for (std::size_t j = 0; j < values.size(); ++j)
        values[j] -= ov.deltas[j];
    Partition result = replace_parts(p, sel, values);
    assert(result.weight() == p.weight() && result.length() == p.length());
    return result;
}

bool round_trip_check(const Partition& p, std::int64_t k, std::int64_t m,
                      Strategy strategy) {
    return psi(phi(p, k, m, strategy), k, m, strategy) == p;
}

} // namespace pwb
