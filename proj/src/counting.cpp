#include "pwb/counting.hpp"

#include <cassert>
#include <stdexcept>
#include <utility>

#include "pwb/enumerate.hpp"
#include "pwb/parallel.hpp"
#include "pwb/series.hpp"
#include "pwb/statistics.hpp"

namespace pwb {

std::string_view table_kind_name(TableKind kind) {
    switch (kind) {
    case TableKind::A:
        return "a";
    case TableKind::BDurfee:
        return "b";
    case TableKind::C:
        return "c";
    case TableKind::D:
        return "d";
    case TableKind::PolygonOrder:
        return "polygon-order";
    }
    return "?";
}

std::optional<TableKind> table_kind_from_name(std::string_view name) {
    for (TableKind kind : {TableKind::A, TableKind::BDurfee, TableKind::C,
                           TableKind::D, TableKind::PolygonOrder})
        if (table_kind_name(kind) == name)
            return kind;
    return std::nullopt;
}

std::int64_t isqrt(std::int64_t n) {
    std::int64_t r = 0;
    while ((r + 1) * (r + 1) <= n)
        ++r;
    return r;
}

namespace {

// Histogram of one statistic over the partitions of n; slot per m in
// [0, bound]. Values must not exceed the bound.
template <typename Stat>
std::vector<int128> histogram_for_n(std::int64_t n, std::int64_t bound,
                                    Stat&& stat) {
    std::vector<int128> counts(static_cast<std::size_t>(bound) + 1, 0);
    for_each_partition(n, [&](std::span<const std::int64_t> parts) {
        std::int64_t m = stat(parts);
        assert(m >= 0 && m <= bound);
        ++counts[static_cast<std::size_t>(m)];
    });
    return counts;
}

CountTable merge_histograms(TableKind kind, std::int64_t k,
                            std::vector<std::vector<int128>> per_n) {
    CountTable table;
    table.kind = kind;
    table.k = k;
    for (std::int64_t n = 0; n < std::ssize(per_n); ++n)
        for (std::int64_t m = 0; m < std::ssize(per_n[static_cast<std::size_t>(n)]); ++m)
            table.entries[TableKey{n, m, -1}] =
                per_n[static_cast<std::size_t>(n)][static_cast<std::size_t>(m)];
    return table;
}

} // namespace

CountTable table_a(std::int64_t k, std::int64_t n_max, unsigned workers) {
    require_positive_k(k);
    auto per_n = map_over_n(n_max, workers, [&](std::int64_t n) {
        return histogram_for_n(n, max_order(k, n),
                               [&](auto parts) { return k_measure(parts, k); });
    });
    return merge_histograms(TableKind::A, k, std::move(per_n));
}

CountTable table_b_durfee(std::int64_t n_max, unsigned workers) {
    auto per_n = map_over_n(n_max, workers, [&](std::int64_t n) {
        return histogram_for_n(n, isqrt(n),
                               [](auto parts) { return durfee_side(parts); });
    });
    return merge_histograms(TableKind::BDurfee, 0, std::move(per_n));
}

CountTable table_polygon_order(std::int64_t k, std::int64_t n_max,
                               unsigned workers) {
    require_positive_k(k);
    auto per_n = map_over_n(n_max, workers, [&](std::int64_t n) {
        return histogram_for_n(n, max_order(k, n), [&](auto parts) {
            return durfee_polygon_order(parts, k);
        });
    });
    return merge_histograms(TableKind::PolygonOrder, k, std::move(per_n));
}

CountTable table_c(std::int64_t k, std::int64_t n_max, unsigned workers) {
    require_positive_k(k);
    auto per_n = map_over_n(n_max, workers, [&](std::int64_t n) {
        std::int64_t bound = max_order(k, n);
        std::vector<int128> counts(static_cast<std::size_t>(bound) + 1, 0);
        for_each_partition(n, [&](std::span<const std::int64_t> parts) {
            std::int64_t mu = k_measure(parts, k);
            // A gap-k subsequence of every length m <= mu exists.
            for (std::int64_t m = 0; m <= mu; ++m)
                ++counts[static_cast<std::size_t>(m)];
        });
        return counts;
    });
    return merge_histograms(TableKind::C, k, std::move(per_n));
}

CountTable table_d(std::int64_t k, std::int64_t n_max, unsigned workers) {
    require_positive_k(k);
    auto per_n = map_over_n(n_max, workers, [&](std::int64_t n) {
        std::int64_t bound = max_order(k, n);
        std::vector<int128> counts(static_cast<std::size_t>(bound) + 1, 0);
        for_each_partition(n, [&](std::span<const std::int64_t> parts) {
            // Checked independently for every m; the scan does not lean on
            // containment being antitone in m.
            for (std::int64_t m = 0; m <= bound; ++m)
                if (contains_km_polygon(parts, k, m))
                    ++counts[static_cast<std::size_t>(m)];
        });
        return counts;
    });
    return merge_histograms(TableKind::D, k, std::move(per_n));
}

CountTable table_by_length(std::int64_t k, std::int64_t n_max, LengthStat stat,
                           unsigned workers) {
    if (stat != LengthStat::DurfeeSide)
        require_positive_k(k);
    using Cell = std::map<std::pair<std::int64_t, std::int64_t>, int128>;
    auto per_n = map_over_n(n_max, workers, [&](std::int64_t n) {
        Cell cell;
        for_each_partition(n, [&](std::span<const std::int64_t> parts) {
            std::int64_t m = 0;
            switch (stat) {
            case LengthStat::KMeasure:
                m = k_measure(parts, k);
                break;
            case LengthStat::DurfeeSide:
                m = durfee_side(parts);
                break;
            case LengthStat::PolygonOrder:
                m = durfee_polygon_order(parts, k);
                break;
            }
            ++cell[{m, static_cast<std::int64_t>(parts.size())}];
        });
        return cell;
    });
    CountTable table;
    table.kind = stat == LengthStat::KMeasure      ? TableKind::A
                 : stat == LengthStat::DurfeeSide  ? TableKind::BDurfee
                                                   : TableKind::PolygonOrder;
    table.k = stat == LengthStat::DurfeeSide ? 0 : k;
    table.by_length = true;
    for (std::int64_t n = 0; n < std::ssize(per_n); ++n)
        for (const auto& [ml, count] : per_n[static_cast<std::size_t>(n)])
            table.entries[TableKey{n, ml.first, ml.second}] = count;
    return table;
}

std::vector<int128> signed_excess(std::int64_t n_max, unsigned workers) {
    auto per_n = map_over_n(n_max, workers, [](std::int64_t n) {
        int128 e = 0;
        for_each_partition(n, [&](std::span<const std::int64_t> parts) {
            std::int64_t sign =
                (static_cast<std::int64_t>(parts.size()) + k_measure(parts, 2)) %
                2;
            e += sign == 0 ? 1 : -1;
        });
        return e;
    });
    return per_n;
}

std::vector<int128> distinct_odd_count(std::int64_t n_max) {
    SeriesPoly series = SeriesPoly::one(n_max);
    for (std::int64_t i = 1; i <= n_max; i += 2)
        series.mul_one_plus_q(i);
    return series.coeffs();
}

std::vector<int128> distinct_odd_direct(std::int64_t n_max, unsigned workers) {
    return map_over_n(n_max, workers, [](std::int64_t n) {
        int128 count = 0;
        for_each_partition(n, [&](std::span<const std::int64_t> parts) {
            for (std::size_t i = 0; i < parts.size(); ++i) {
                if (parts[i] % 2 == 0)
                    return;
                if (i > 0 && parts[i] == parts[i - 1])
                    return;
            }
            ++count;
        });
        return count;
    });
}

std::vector<int128> durfee_gf_oracle(std::int64_t m, std::int64_t n_max) {
    if (m < 0)
        throw std::invalid_argument("Durfee side m must be >= 0");
    SeriesPoly series = SeriesPoly::one(n_max);
    if (m * m > n_max)
        return SeriesPoly(n_max).coeffs(); // q^(m^2) already past the bound
    for (std::int64_t i = 1; i <= m; ++i) {
        series.div_one_minus_q(i);
        series.div_one_minus_q(i);
    }
    return series.shifted(m * m).coeffs();
}

std::string table_to_csv(const CountTable& table) {
    std::string out = table.by_length ? "n,m,l,count\n" : "n,m,count\n";
    for (const auto& [key, count] : table.entries) {
        out += std::to_string(key.n);
        out += ',';
        out += std::to_string(key.m);
        if (table.by_length) {
            out += ',';
            out += std::to_string(key.l);
        }
        out += ',';
        out += to_string(count);
        out += '\n';
    }
    return out;
}

nlohmann::ordered_json count_to_json(int128 v) {
    if (fits_int64(v))
        return static_cast<std::int64_t>(v);
    return to_string(v);
}

nlohmann::ordered_json table_to_json(const CountTable& table) {
    nlohmann::ordered_json j;
    j["kind"] = std::string(table_kind_name(table.kind));
    if (table.k > 0)
        j["k"] = table.k;
    j["by_length"] = table.by_length;
    nlohmann::ordered_json entries = nlohmann::ordered_json::object();
    // Map order is (n, m, l) ascending, so insertion builds numerically
    // sorted nested objects.
    for (const auto& [key, count] : table.entries) {
        auto& per_n = entries[std::to_string(key.n)];
        if (table.by_length)
            per_n[std::to_string(key.m)][std::to_string(key.l)] =
                count_to_json(count);
        else
            per_n[std::to_string(key.m)] = count_to_json(count);
    }
    j["entries"] = std::move(entries);
    return j;
}

} // namespace pwb
