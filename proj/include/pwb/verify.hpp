#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

#include "pwb/bijection.hpp"
#include "pwb/counting.hpp"

namespace pwb {

struct Counterexample {
    nlohmann::ordered_json inputs;
    std::string expected;
    std::string actual;
};

// One suite run. Failures are recorded, never thrown; status is pass
// exactly when the counterexample list is empty. Re-running with the same
// parameters reproduces the same report (elapsed_ms aside).
struct VerificationReport {
    std::string suite;
    nlohmann::ordered_json params;
    std::int64_t checks_run = 0;
    std::vector<Counterexample> counterexamples;
    std::int64_t elapsed_ms = 0;

    bool passed() const { return counterexamples.empty(); }
};

nlohmann::ordered_json report_to_json(const VerificationReport& report);
nlohmann::ordered_json reports_to_json(const std::vector<VerificationReport>&);

// Per sub-check family, at most this many counterexamples are kept:
// smallest n first, then the enumerator's partition order.
inline constexpr std::int64_t kCounterexampleCap = 10;

// #{2-measure = m} vs #{Durfee side = m} over all n <= n_max.
VerificationReport check_theorem_1(std::int64_t n_max, unsigned workers = 1);

// Length-refined version: joint (n, l, m) tables, 2-measure vs Durfee side.
VerificationReport check_theorem_2(std::int64_t n_max, unsigned workers = 1);

// For each k <= k_max: c = d, measure-vs-polygon-order equality, both
// telescoping identities, and the length-refined joint equality.
VerificationReport check_theorem_general(std::int64_t k_max, std::int64_t n_max,
                                         unsigned workers = 1);

// Signed excess (-1)^(l + mu_2) vs distinct-odd-parts counts, with the
// right side computed both by the q-series and by direct enumeration.
VerificationReport check_theorem_3(std::int64_t n_max, unsigned workers = 1);

// k = 1: #{>= m distinct part values} vs the two-threshold counts, plus
// the two worked instances (m = 7 and m = 6) as hand-written predicates.
VerificationReport check_k1_corollaries(std::int64_t n_max,
                                        unsigned workers = 1);

struct StrategySearchOptions {
    std::int64_t k_max = 5;
    std::int64_t n_max = 30;
    std::vector<Strategy> strategies{kAllStrategies,
                                     kAllStrategies + 4};
    std::int64_t counterexample_cap = kCounterexampleCap; // per (k,m) family
    unsigned workers = 1;
};

// Measures, per strategy, whether the maps behave as claimed:
//   phi-into-target   phi lands in the polygon class, weight/length kept
//   psi-into-source   psi lands in the gap-k class, weight/length kept
//   injectivity       phi restricted to the gap-k class is injective
//   left-inverse      psi(phi(p)) == p
//   right-inverse     phi(psi(p)) == p
// One report per (strategy, property). Failures here are findings about
// the maps, not implementation errors; the counting suites carry the
// ground truth.
std::vector<VerificationReport> strategy_search(const StrategySearchOptions&);

inline constexpr const char* kSearchProperties[] = {
    "phi-into-target", "psi-into-source", "injectivity", "left-inverse",
    "right-inverse"};

} // namespace pwb
