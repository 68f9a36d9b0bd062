#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "pwb/int128.hpp"

namespace pwb {

// The counting families:
//   a             #partitions of n with k-measure exactly m
//   b             #partitions of n with Durfee square of side m
//   c             #partitions of n with k-measure >= m           (|C_{k,m}(n)|)
//   d             #partitions of n containing the (k,m)-polygon  (|D_{k,m}(n)|)
//   polygon-order #partitions of n with (k,m)-Durfee polygon order exactly m
enum class TableKind { A, BDurfee, C, D, PolygonOrder };

std::string_view table_kind_name(TableKind kind);
std::optional<TableKind> table_kind_from_name(std::string_view name);

// Which statistic the length-refined tables pair with the part count.
enum class LengthStat { KMeasure, DurfeeSide, PolygonOrder };

struct TableKey {
    std::int64_t n = 0;
    std::int64_t m = 0;
    std::int64_t l = -1; // -1 when the table is not length-refined
    auto operator<=>(const TableKey&) const = default;
};

// Exact counts keyed by (n, m) or (n, m, l). Plain (n, m) tables carry
// explicit zero rows for every m up to the largest order attainable at
// that n; length-refined tables store nonzero entries only.
struct CountTable {
    TableKind kind = TableKind::A;
    std::int64_t k = 0; // 0 when k does not apply (kind b)
    bool by_length = false;
    std::map<TableKey, int128> entries;

    int128 at(std::int64_t n, std::int64_t m, std::int64_t l = -1) const {
        auto it = entries.find(TableKey{n, m, l});
        return it == entries.end() ? int128{0} : it->second;
    }
};

CountTable table_a(std::int64_t k, std::int64_t n_max, unsigned workers = 1);
CountTable table_b_durfee(std::int64_t n_max, unsigned workers = 1);
CountTable table_c(std::int64_t k, std::int64_t n_max, unsigned workers = 1);
CountTable table_d(std::int64_t k, std::int64_t n_max, unsigned workers = 1);
CountTable table_polygon_order(std::int64_t k, std::int64_t n_max,
                               unsigned workers = 1);
CountTable table_by_length(std::int64_t k, std::int64_t n_max, LengthStat stat,
                           unsigned workers = 1);

// E(n) = sum over partitions of n of (-1)^(length + 2-measure).
std::vector<int128> signed_excess(std::int64_t n_max, unsigned workers = 1);

// Partitions into distinct odd parts, two independent routes: coefficients
// of prod (1 + q^(2i-1)) and a direct filter over the enumeration.
std::vector<int128> distinct_odd_count(std::int64_t n_max);
std::vector<int128> distinct_odd_direct(std::int64_t n_max,
                                        unsigned workers = 1);

// Classical generating function for Durfee side m: coefficients of
// q^(m^2) / ((1-q)...(1-q^m))^2, the independent oracle for table b.
std::vector<int128> durfee_gf_oracle(std::int64_t m, std::int64_t n_max);

// Serialization. CSV header is n,m,count or n,m,l,count; rows follow key
// order, so output is byte-stable for identical inputs.
std::string table_to_csv(const CountTable& table);
nlohmann::ordered_json table_to_json(const CountTable& table);

// Counts as JSON: int64-sized values as numbers, larger exactly as strings.
nlohmann::ordered_json count_to_json(int128 v);

std::int64_t isqrt(std::int64_t n);

} // namespace pwb
