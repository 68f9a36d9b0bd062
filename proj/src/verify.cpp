#include "pwb/verify.hpp"

#include <array>
#include <chrono>
#include <map>
#include <set>
#include <tuple>

#include "pwb/enumerate.hpp"
#include "pwb/parallel.hpp"
#include "pwb/statistics.hpp"

namespace pwb {

namespace {

using Clock = std::chrono::steady_clock;

std::int64_t ms_since(Clock::time_point start) {
    return std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() -
                                                                 start)
        .count();
}

// Keeps at most `cap` counterexamples per named sub-check family. Callers
// scan keys n-ascending, so the kept entries are the minimal ones.
class FamilyCap {
public:
    explicit FamilyCap(std::int64_t cap) : cap_(cap) {}
    bool admit(const std::string& family) { return taken_[family]++ < cap_; }

private:
    std::int64_t cap_;
    std::map<std::string, std::int64_t> taken_;
};

void record_count_mismatch(VerificationReport& rep, FamilyCap& caps,
                           const std::string& check, std::int64_t k,
                           const TableKey& key, int128 lhs, int128 rhs) {
    if (lhs == rhs)
        return;
    std::string family = check + (k >= 0 ? "@k=" + std::to_string(k) : "");
    if (!caps.admit(family))
        return;
    Counterexample cex;
    cex.inputs["check"] = check;
    if (k >= 0)
        cex.inputs["k"] = k;
    cex.inputs["n"] = key.n;
    if (key.m >= 0)
        cex.inputs["m"] = key.m;
    if (key.l >= 0)
        cex.inputs["l"] = key.l;
    cex.expected = to_string(lhs);
    cex.actual = to_string(rhs);
    rep.counterexamples.push_back(std::move(cex));
}

// Entry-wise equality over the union of the two key sets (absent = 0).
void compare_tables(VerificationReport& rep, FamilyCap& caps,
                    const CountTable& lhs, const CountTable& rhs,
                    const std::string& check, std::int64_t k) {
    auto li = lhs.entries.begin();
    auto ri = rhs.entries.begin();
    while (li != lhs.entries.end() || ri != rhs.entries.end()) {
        TableKey key;
        int128 lv = 0, rv = 0;
        if (ri == rhs.entries.end() ||
            (li != lhs.entries.end() && li->first < ri->first)) {
            key = li->first;
            lv = li->second;
            ++li;
        } else if (li == lhs.entries.end() || ri->first < li->first) {
            key = ri->first;
            rv = ri->second;
            ++ri;
        } else {
            key = li->first;
            lv = li->second;
            rv = ri->second;
            ++li;
            ++ri;
        }
        ++rep.checks_run;
        record_count_mismatch(rep, caps, check, k, key, lv, rv);
    }
}

} // namespace

nlohmann::ordered_json report_to_json(const VerificationReport& report) {
    nlohmann::ordered_json j;
    j["suite"] = report.suite;
    j["params"] = report.params;
    j["status"] = report.passed() ? "pass" : "fail";
    j["checks_run"] = report.checks_run;
    nlohmann::ordered_json cexs = nlohmann::ordered_json::array();
    for (const Counterexample& cex : report.counterexamples) {
        nlohmann::ordered_json c;
        c["inputs"] = cex.inputs;
        c["expected"] = cex.expected;
        c["actual"] = cex.actual;
        cexs.push_back(std::move(c));
    }
    j["counterexamples"] = std::move(cexs);
    j["elapsed_ms"] = report.elapsed_ms;
    return j;
}

nlohmann::ordered_json
reports_to_json(const std::vector<VerificationReport>& reports) {
    nlohmann::ordered_json arr = nlohmann::ordered_json::array();
    for (const VerificationReport& r : reports)
        arr.push_back(report_to_json(r));
    return arr;
}

VerificationReport check_theorem_1(std::int64_t n_max, unsigned workers) {
    auto start = Clock::now();
    VerificationReport rep;
    rep.suite = "theorem1";
    rep.params["n_max"] = n_max;
    FamilyCap caps(kCounterexampleCap);
    CountTable a = table_a(2, n_max, workers);
    CountTable b = table_b_durfee(n_max, workers);
    compare_tables(rep, caps, a, b, "measure-vs-durfee", -1);
    rep.elapsed_ms = ms_since(start);
    return rep;
}

VerificationReport check_theorem_2(std::int64_t n_max, unsigned workers) {
    auto start = Clock::now();
    VerificationReport rep;
    rep.suite = "theorem2";
    rep.params["n_max"] = n_max;
    FamilyCap caps(kCounterexampleCap);
    CountTable lhs = table_by_length(2, n_max, LengthStat::KMeasure, workers);
    CountTable rhs = table_by_length(2, n_max, LengthStat::DurfeeSide, workers);
    compare_tables(rep, caps, lhs, rhs, "refined-measure-vs-durfee", -1);
    rep.elapsed_ms = ms_since(start);
    return rep;
}

VerificationReport check_theorem_general(std::int64_t k_max, std::int64_t n_max,
                                         unsigned workers) {
    auto start = Clock::now();
    VerificationReport rep;
    rep.suite = "general";
    rep.params["k_max"] = k_max;
    rep.params["n_max"] = n_max;
    FamilyCap caps(kCounterexampleCap);
    for (std::int64_t k = 1; k <= k_max; ++k) {
        CountTable a = table_a(k, n_max, workers);
        CountTable c = table_c(k, n_max, workers);
        CountTable d = table_d(k, n_max, workers);
        CountTable order = table_polygon_order(k, n_max, workers);
        compare_tables(rep, caps, c, d, "c-equals-d", k);
        compare_tables(rep, caps, a, order, "measure-vs-order", k);
        // Telescoping within each statistic family.
        for (const auto& [key, count] : a.entries) {
            ++rep.checks_run;
            record_count_mismatch(rep, caps, "telescoping-measure", k, key,
                                  count,
                                  c.at(key.n, key.m) - c.at(key.n, key.m + 1));
        }
        for (const auto& [key, count] : order.entries) {
            ++rep.checks_run;
            record_count_mismatch(rep, caps, "telescoping-order", k, key, count,
                                  d.at(key.n, key.m) - d.at(key.n, key.m + 1));
        }
        CountTable refined_measure =
            table_by_length(k, n_max, LengthStat::KMeasure, workers);
        CountTable refined_order =
            table_by_length(k, n_max, LengthStat::PolygonOrder, workers);
        compare_tables(rep, caps, refined_measure, refined_order,
                       "refined-measure-vs-order", k);
    }
    rep.elapsed_ms = ms_since(start);
    return rep;
}

VerificationReport check_theorem_3(std::int64_t n_max, unsigned workers) {
    auto start = Clock::now();
    VerificationReport rep;
    rep.suite = "theorem3";
    rep.params["n_max"] = n_max;
    FamilyCap caps(kCounterexampleCap);
    std::vector<int128> excess = signed_excess(n_max, workers);
    std::vector<int128> series = distinct_odd_count(n_max);
    std::vector<int128> direct = distinct_odd_direct(n_max, workers);
    for (std::int64_t n = 0; n <= n_max; ++n) {
        ++rep.checks_run;
        record_count_mismatch(rep, caps, "excess-vs-series", -1,
                              TableKey{n, -1, -1},
                              excess[static_cast<std::size_t>(n)],
                              series[static_cast<std::size_t>(n)]);
        ++rep.checks_run;
        record_count_mismatch(rep, caps, "series-vs-direct", -1,
                              TableKey{n, -1, -1},
                              series[static_cast<std::size_t>(n)],
                              direct[static_cast<std::size_t>(n)]);
    }
    rep.elapsed_ms = ms_since(start);
    return rep;
}

VerificationReport check_k1_corollaries(std::int64_t n_max, unsigned workers) {
    auto start = Clock::now();
    VerificationReport rep;
    rep.suite = "k1";
    rep.params["n_max"] = n_max;
    FamilyCap caps(kCounterexampleCap);

    struct PerN {
        std::vector<int128> distinct_ge; // [m] -> #{>= m distinct values}
        int128 pred7 = 0;                // >= 7 parts >= 4
        int128 pred6 = 0;                // >= 3 parts >= 4 and >= 6 parts >= 3
    };
    auto per_n = map_over_n(n_max, workers, [&](std::int64_t n) {
        PerN out;
        out.distinct_ge.assign(static_cast<std::size_t>(max_order(1, n)) + 1, 0);
        for_each_partition(n, [&](std::span<const std::int64_t> parts) {
            std::int64_t dv = distinct_part_values(parts);
            for (std::int64_t m = 0; m <= dv; ++m)
                ++out.distinct_ge[static_cast<std::size_t>(m)];
            std::int64_t ge4 = 0, ge3 = 0;
            for (std::int64_t v : parts) {
                if (v >= 4)
                    ++ge4;
                if (v >= 3)
                    ++ge3;
                else
                    break;
            }
            if (ge4 >= 7)
                ++out.pred7;
            if (ge4 >= 3 && ge3 >= 6)
                ++out.pred6;
        });
        return out;
    });

    CountTable d1 = table_d(1, n_max, workers);
    for (std::int64_t n = 0; n <= n_max; ++n) {
        const PerN& row = per_n[static_cast<std::size_t>(n)];
        auto distinct_ge_at = [&](std::int64_t m) -> int128 {
            return m < std::ssize(row.distinct_ge)
                       ? row.distinct_ge[static_cast<std::size_t>(m)]
                       : 0;
        };
        for (std::int64_t m = 0; m < std::ssize(row.distinct_ge); ++m) {
            ++rep.checks_run;
            record_count_mismatch(rep, caps, "distinct-vs-polygon", 1,
                                  TableKey{n, m, -1}, distinct_ge_at(m),
                                  d1.at(n, m));
        }
        ++rep.checks_run;
        record_count_mismatch(rep, caps, "m7-worked-instance", 1,
                              TableKey{n, 7, -1}, distinct_ge_at(7), row.pred7);
        ++rep.checks_run;
        record_count_mismatch(rep, caps, "m6-worked-instance", 1,
                              TableKey{n, 6, -1}, distinct_ge_at(6), row.pred6);
    }
    rep.elapsed_ms = ms_since(start);
    return rep;
}

// ---------------------------------------------------------------------------
// Strategy search
// ---------------------------------------------------------------------------

namespace {

constexpr std::size_t kPropertyCount = 5;
enum Property : std::size_t {
    PhiIntoTarget = 0,
    PsiIntoSource = 1,
    Injectivity = 2,
    LeftInverse = 3,
    RightInverse = 4,
};

struct FamilyList {
    std::int64_t checks = 0;
    // (k, m) -> counterexamples in discovery order, locally capped
    std::map<std::pair<std::int64_t, std::int64_t>, std::vector<Counterexample>>
        families;
};

using PerStrategy = std::array<FamilyList, kPropertyCount>;

nlohmann::ordered_json search_inputs(std::int64_t k, std::int64_t m,
                                     std::int64_t n) {
    nlohmann::ordered_json j;
    j["k"] = k;
    j["m"] = m;
    j["n"] = n;
    return j;
}

} // namespace

std::vector<VerificationReport>
strategy_search(const StrategySearchOptions& opts) {
    auto start = Clock::now();
    const auto& strategies = opts.strategies;
    const std::int64_t cap = opts.counterexample_cap;

    auto per_n = map_over_n(opts.n_max, opts.workers, [&](std::int64_t n) {
        std::vector<PerStrategy> res(strategies.size());
        auto add_cex = [&](std::size_t si, Property prop, std::int64_t k,
                           std::int64_t m, Counterexample cex) {
            auto& list = res[si][prop].families[{k, m}];
            if (std::ssize(list) < cap)
                list.push_back(std::move(cex));
        };
        // phi images seen so far, per (strategy, k, m), with their preimages.
        std::map<std::tuple<std::size_t, std::int64_t, std::int64_t>,
                 std::map<std::vector<std::int64_t>, Partition>>
            images;
        for_each_partition(n, [&](std::span<const std::int64_t> span) {
            Partition p = Partition::from_sorted(
                std::vector<std::int64_t>(span.begin(), span.end()));
            for (std::int64_t k = 1; k <= opts.k_max; ++k) {
                std::int64_t mu = k_measure(p, k);
                std::int64_t bound = max_order(k, n);
                for (std::int64_t m = 1; m <= bound; ++m) {
                    bool in_source = mu >= m;
                    bool in_target = contains_km_polygon(p, k, m);
                    if (!in_source && !in_target)
                        continue;
                    for (std::size_t si = 0; si < strategies.size(); ++si) {
                        Strategy s = strategies[si];
                        if (in_source) {
                            Partition q = phi(p, k, m, s);
                            ++res[si][PhiIntoTarget].checks;
                            if (!contains_km_polygon(q, k, m) ||
                                q.weight() != p.weight() ||
                                q.length() != p.length()) {
                                Counterexample cex;
                                cex.inputs = search_inputs(k, m, n);
                                cex.inputs["partition"] = format_partition(p);
                                cex.inputs["image"] = format_partition(q);
                                cex.expected = "phi image in target class, "
                                               "weight and length preserved";
                                cex.actual = "image (" + format_partition(q) +
                                             ") violates the target condition";
                                add_cex(si, PhiIntoTarget, k, m,
                                        std::move(cex));
                            }
                            ++res[si][Injectivity].checks;
                            auto [it, inserted] =
                                images[{si, k, m}].emplace(q.parts(), p);
                            if (!inserted) {
                                Counterexample cex;
                                cex.inputs = search_inputs(k, m, n);
                                cex.inputs["partition_a"] =
                                    format_partition(it->second);
                                cex.inputs["partition_b"] = format_partition(p);
                                cex.inputs["image"] = format_partition(q);
                                cex.expected = "distinct phi images";
                                cex.actual = "both map to (" +
                                             format_partition(q) + ")";
                                add_cex(si, Injectivity, k, m, std::move(cex));
                            }
                            ++res[si][LeftInverse].checks;
                            Partition back = psi(q, k, m, s);
                            if (back != p) {
                                Counterexample cex;
                                cex.inputs = search_inputs(k, m, n);
                                cex.inputs["partition"] = format_partition(p);
                                cex.inputs["via"] = format_partition(q);
                                cex.expected = "psi(phi(p)) == p";
                                cex.actual =
                                    "got (" + format_partition(back) + ")";
                                add_cex(si, LeftInverse, k, m, std::move(cex));
                            }
                        }
                        if (in_target) {
                            Partition w = psi(p, k, m, s);
                            std::int64_t w_mu = k_measure(w, k);
                            ++res[si][PsiIntoSource].checks;
                            if (w_mu < m || w.weight() != p.weight() ||
                                w.length() != p.length()) {
                                Counterexample cex;
                                cex.inputs = search_inputs(k, m, n);
                                cex.inputs["partition"] = format_partition(p);
                                cex.inputs["image"] = format_partition(w);
                                cex.expected =
                                    "psi image in source class (k-measure >= " +
                                    std::to_string(m) +
                                    "), weight and length preserved";
                                cex.actual = "image (" + format_partition(w) +
                                             ") has " + std::to_string(k) +
                                             "-measure " + std::to_string(w_mu);
                                add_cex(si, PsiIntoSource, k, m,
                                        std::move(cex));
                            }
                            ++res[si][RightInverse].checks;
                            if (w_mu < m) {
                                Counterexample cex;
                                cex.inputs = search_inputs(k, m, n);
                                cex.inputs["partition"] = format_partition(p);
                                cex.inputs["via"] = format_partition(w);
                                cex.expected = "phi(psi(p)) == p";
                                cex.actual = "psi image left the source "
                                             "class; phi undefined";
                                add_cex(si, RightInverse, k, m, std::move(cex));
                            } else {
                                Partition t = phi(w, k, m, s);
                                if (t != p) {
                                    Counterexample cex;
                                    cex.inputs = search_inputs(k, m, n);
                                    cex.inputs["partition"] =
                                        format_partition(p);
                                    cex.inputs["via"] = format_partition(w);
                                    cex.expected = "phi(psi(p)) == p";
                                    cex.actual =
                                        "got (" + format_partition(t) + ")";
                                    add_cex(si, RightInverse, k, m,
                                            std::move(cex));
                                }
                            }
                        }
                    }
                }
            }
        });
        return res;
    });

    std::int64_t elapsed = ms_since(start);
    std::vector<VerificationReport> reports;
    for (std::size_t si = 0; si < strategies.size(); ++si) {
        for (std::size_t prop = 0; prop < kPropertyCount; ++prop) {
            VerificationReport rep;
            rep.suite = "strategy-search";
            rep.params["strategy"] =
                std::string(strategy_name(strategies[si]));
            rep.params["property"] = kSearchProperties[prop];
            rep.params["k_max"] = opts.k_max;
            rep.params["n_max"] = opts.n_max;
            std::set<std::pair<std::int64_t, std::int64_t>> family_keys;
            for (const auto& pn : per_n) {
                rep.checks_run += pn[si][prop].checks;
                for (const auto& [km, list] : pn[si][prop].families)
                    if (!list.empty())
                        family_keys.insert(km);
            }
            for (const auto& km : family_keys) {
                std::int64_t taken = 0;
                for (const auto& pn : per_n) {
                    auto it = pn[si][prop].families.find(km);
                    if (it == pn[si][prop].families.end())
                        continue;
                    for (const Counterexample& cex : it->second) {
                        if (taken >= cap)
                            break;
                        rep.counterexamples.push_back(cex);
                        ++taken;
                    }
                }
            }
            rep.elapsed_ms = elapsed;
            reports.push_back(std::move(rep));
        }
    }
    return reports;
}

} // namespace pwb
