#pragma once

#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

#include "pwb/partition.hpp"

namespace pwb {

// The m signed adjustments the maps apply to the selected parts:
//
//   deltas[j-1] = -floor(k(m+1-2j)/2)   for 1 <= j <= floor(m/2)
//   deltas[j-1] = +floor(k(2j-m-1)/2)   for floor(m/2) <  j <= m
//
// Zero-sum and antisymmetric (deltas[j-1] = -deltas[m-j]); for k = 2 this
// is (-(m-1), -(m-3), ..., m-3, m-1).
struct OffsetVector {
    std::int64_t k = 1;
    std::int64_t m = 0;
    std::vector<std::int64_t> deltas;
};

OffsetVector offset_vector(std::int64_t k, std::int64_t m);

// The deterministic rule resolving which parts the maps act on. The choice
// of subsequence is otherwise free, and different rules give genuinely
// different maps, so it is an explicit parameter everywhere.
enum class Strategy {
    GreedyTop,    // scan largest-first, take each part <= last - k
    GreedyBottom, // scan smallest-first, require >= last + k, then reverse
    MinIndexLex,  // lexicographically smallest valid index set
    MaxIndexLex,  // lexicographically largest valid index set
};

inline constexpr Strategy kAllStrategies[] = {
    Strategy::GreedyTop, Strategy::GreedyBottom, Strategy::MinIndexLex,
    Strategy::MaxIndexLex};

std::string_view strategy_name(Strategy s);
std::optional<Strategy> strategy_from_name(std::string_view name);

// Picks m part indices whose values form a gap-k chain (consecutive
// differences >= k). Throws std::invalid_argument naming the violated
// threshold when the k-measure of p is below m.
PartIndexSet select_forward(const Partition& p, std::int64_t k, std::int64_t m,
                            Strategy strategy);

// Picks m part indices meeting the two-threshold condition: at least
// floor(m/2) of the chosen values >= 1 + ceil(k(m-1)/2) and all of them
// >= 1 + floor(k(m-1)/2). Throws when p does not contain the (k,m)-polygon.
PartIndexSet select_inverse(const Partition& p, std::int64_t k, std::int64_t m,
                            Strategy strategy);

// Forward map: adds the offset vector to the selected gap-k chain and
// re-canonicalizes. Weight and length are preserved, and the result always
// contains the (k,m)-polygon (asserted in debug builds). m = 0 is the
// identity.
Partition phi(const Partition& p, std::int64_t k, std::int64_t m,
              Strategy strategy);

// Inverse map: subtracts the offset vector from the selected threshold
// parts. Weight and length are preserved. Whether the result lands back in
// the gap-k class is measured by the verify suites rather than asserted:
// for odd k and even m it can fail when the two middle selected parts are
// equal.
Partition psi(const Partition& p, std::int64_t k, std::int64_t m,
              Strategy strategy);

// True iff psi(phi(p)) == p under the given strategy.
bool round_trip_check(const Partition& p, std::int64_t k, std::int64_t m,
                      Strategy strategy);

} // namespace pwb
