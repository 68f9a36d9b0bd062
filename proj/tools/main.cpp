// Command-line front end: partition statistics, the forward/inverse maps,
// polygon rendering, counting tables, and the verification suites.
//
// Exit codes: 0 success (all requested checks pass), 1 verification
// failure, 2 usage error (bad flags, unparsable input, precondition not
// met).

#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "pwb/bijection.hpp"
#include "pwb/counting.hpp"
#include "pwb/enumerate.hpp"
#include "pwb/ferrers.hpp"
#include "pwb/parallel.hpp"
#include "pwb/partition.hpp"
#include "pwb/statistics.hpp"
#include "pwb/verify.hpp"

namespace {

using nlohmann::ordered_json;

void write_output(const std::string& text, const std::string& path) {
    if (path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out)
        throw std::runtime_error("cannot open output file: " + path);
    out << text;
}

pwb::Strategy parse_strategy(const std::string& name) {
    auto s = pwb::strategy_from_name(name);
    if (!s)
        throw CLI::ValidationError("--strategy",
                                   "unknown strategy '" + name + "'");
    return *s;
}

std::vector<std::int64_t> offsets_of(const pwb::OffsetVector& ov,
                                     bool inverse) {
    std::vector<std::int64_t> out = ov.deltas;
    if (inverse)
        for (auto& d : out)
            d = -d;
    return out;
}

std::string join_int64(const std::vector<std::int64_t>& values) {
    std::string out;
    for (std::size_t i = 0; i < values.size(); ++i) {
        if (i)
            out += ',';
        out += std::to_string(values[i]);
    }
    return out;
}

int run_stats(const std::string& partition_text, std::int64_t k,
              const std::string& format, bool ferrers,
              const std::string& out_path) {
    pwb::Partition p = pwb::parse_partition(partition_text);
    std::int64_t mu = pwb::k_measure(p, k);
    std::int64_t side = pwb::durfee_side(p);
    std::int64_t order = pwb::durfee_polygon_order(p, k);
    std::string text;
    if (format == "json") {
        ordered_json j;
        j["partition"] = pwb::format_partition(p);
        j["k"] = k;
        j["k_measure"] = mu;
        j["durfee_side"] = side;
        j["durfee_polygon_order"] = order;
        if (ferrers)
            j["ferrers"] = pwb::render_ferrers_with_polygon(p, k, order);
        text = j.dump(2) + "\n";
    } else {
        text = "k_measure: " + std::to_string(mu) + "\n" +
               "durfee_side: " + std::to_string(side) + "\n" +
               "durfee_polygon_order: " + std::to_string(order) + "\n";
        if (ferrers)
            text += pwb::render_ferrers_with_polygon(p, k, order);
    }
    write_output(text, out_path);
    return 0;
}

int run_map(const std::string& partition_text, std::int64_t k, std::int64_t m,
            const std::string& strategy_name, bool inverse,
            const std::string& format, const std::string& out_path) {
    pwb::Partition p = pwb::parse_partition(partition_text);
    pwb::Strategy strategy = parse_strategy(strategy_name);
    pwb::PartIndexSet sel = inverse ? pwb::select_inverse(p, k, m, strategy)
                                    : pwb::select_forward(p, k, m, strategy);
    std::vector<std::int64_t> values = pwb::subsequence_values(p, sel);
    std::vector<std::int64_t> offsets =
        offsets_of(pwb::offset_vector(k, m), inverse);
    pwb::Partition image = inverse ? pwb::psi(p, k, m, strategy)
                                   : pwb::phi(p, k, m, strategy);
    std::string text;
    if (format == "json") {
        ordered_json j;
        j["partition"] = pwb::format_partition(p);
        j["k"] = k;
        j["m"] = m;
        j["strategy"] = strategy_name;
        j["direction"] = inverse ? "inverse" : "forward";
        j["selected_indices"] = sel.indices();
        j["selected_values"] = values;
        j["offsets"] = offsets;
        j["image"] = pwb::format_partition(image);
        text = j.dump(2) + "\n";
    } else {
        std::vector<std::int64_t> idx;
        idx.reserve(sel.size());
        for (std::size_t i : sel.indices())
            idx.push_back(static_cast<std::int64_t>(i));
        text = pwb::format_partition(image) + "\n" +
               "indices: " + join_int64(idx) + "\n" +
               "values: " + join_int64(values) + "\n" +
               "offsets: " + join_int64(offsets) + "\n";
    }
    write_output(text, out_path);
    return 0;
}

int run_polygon(std::int64_t k, std::int64_t m,
                const std::optional<std::string>& partition_text,
                const std::string& format, const std::string& out_path) {
    pwb::PolygonShape shape = pwb::km_polygon_shape(k, m);
    std::optional<pwb::Partition> p;
    if (partition_text)
        p = pwb::parse_partition(*partition_text);
    std::string text;
    if (format == "json") {
        ordered_json j;
        j["k"] = k;
        j["m"] = m;
        j["rows"] = shape.rows;
        j["node_count"] = shape.node_count();
        if (p) {
            j["partition"] = pwb::format_partition(*p);
            j["contains"] = pwb::contains_km_polygon(*p, k, m);
        }
        text = j.dump(2) + "\n";
    } else if (p) {
        text = pwb::render_ferrers_with_polygon(*p, k, m);
        text += std::string("contains: ") +
                (pwb::contains_km_polygon(*p, k, m) ? "true" : "false") + "\n";
    } else {
        text = pwb::render_polygon(shape);
    }
    write_output(text, out_path);
    return 0;
}

int run_count(const std::string& kind_name, std::int64_t k, std::int64_t n_max,
              bool by_length, const std::string& format,
              const std::string& out_path, unsigned workers) {
    auto kind = pwb::table_kind_from_name(kind_name);
    if (!kind)
        throw CLI::ValidationError("--kind", "unknown kind '" + kind_name + "'");
    workers = pwb::resolve_workers(workers);
    pwb::CountTable table;
    if (by_length) {
        switch (*kind) {
        case pwb::TableKind::A:
            table = pwb::table_by_length(k, n_max, pwb::LengthStat::KMeasure,
                                         workers);
            break;
        case pwb::TableKind::BDurfee:
            table = pwb::table_by_length(0, n_max, pwb::LengthStat::DurfeeSide,
                                         workers);
            break;
        case pwb::TableKind::PolygonOrder:
            table = pwb::table_by_length(k, n_max,
                                         pwb::LengthStat::PolygonOrder, workers);
            break;
        default:
            throw CLI::ValidationError(
                "--by-length",
                "length refinement applies to kinds a, b and polygon-order");
        }
    } else {
        switch (*kind) {
        case pwb::TableKind::A:
            table = pwb::table_a(k, n_max, workers);
            break;
        case pwb::TableKind::BDurfee:
            table = pwb::table_b_durfee(n_max, workers);
            break;
        case pwb::TableKind::C:
            table = pwb::table_c(k, n_max, workers);
            break;
        case pwb::TableKind::D:
            table = pwb::table_d(k, n_max, workers);
            break;
        case pwb::TableKind::PolygonOrder:
            table = pwb::table_polygon_order(k, n_max, workers);
            break;
        }
    }
    std::string text = format == "json" ? pwb::table_to_json(table).dump(2) + "\n"
                                        : pwb::table_to_csv(table);
    write_output(text, out_path);
    return 0;
}

int run_excess(std::int64_t n_max, const std::string& format,
               const std::string& out_path, unsigned workers) {
    workers = pwb::resolve_workers(workers);
    std::vector<pwb::int128> excess = pwb::signed_excess(n_max, workers);
    std::vector<pwb::int128> odd = pwb::distinct_odd_count(n_max);
    std::string text;
    if (format == "json") {
        ordered_json rows = ordered_json::array();
        for (std::int64_t n = 0; n <= n_max; ++n) {
            ordered_json row;
            row["n"] = n;
            row["excess"] =
                pwb::count_to_json(excess[static_cast<std::size_t>(n)]);
            row["distinct_odd"] =
                pwb::count_to_json(odd[static_cast<std::size_t>(n)]);
            rows.push_back(std::move(row));
        }
        text = rows.dump(2) + "\n";
    } else {
        text = "n,excess,distinct_odd\n";
        for (std::int64_t n = 0; n <= n_max; ++n) {
            text += std::to_string(n) + ',' +
                    pwb::to_string(excess[static_cast<std::size_t>(n)]) + ',' +
                    pwb::to_string(odd[static_cast<std::size_t>(n)]) + '\n';
        }
    }
    write_output(text, out_path);
    return 0;
}

int run_verify(std::vector<std::string> suites, std::int64_t k_max,
               std::int64_t n_max, std::vector<std::string> strategy_names,
               bool findings_ok, const std::string& out_path,
               unsigned workers) {
    workers = pwb::resolve_workers(workers);
    bool all = suites.empty();
    for (const std::string& s : suites)
        if (s == "all")
            all = true;
    auto wants = [&](const std::string& name) {
        if (all)
            return true;
        for (const std::string& s : suites)
            if (s == name)
                return true;
        return false;
    };
    for (const std::string& s : suites)
        if (s != "all" && s != "theorem1" && s != "theorem2" && s != "theorem3" &&
            s != "general" && s != "k1" && s != "strategy-search")
            throw CLI::ValidationError("--suite", "unknown suite '" + s + "'");

    std::vector<pwb::VerificationReport> reports;
    if (wants("theorem1"))
        reports.push_back(pwb::check_theorem_1(n_max, workers));
    if (wants("theorem2"))
        reports.push_back(pwb::check_theorem_2(n_max, workers));
    if (wants("theorem3"))
        reports.push_back(pwb::check_theorem_3(n_max, workers));
    if (wants("general"))
        reports.push_back(pwb::check_theorem_general(k_max, n_max, workers));
    if (wants("k1"))
        reports.push_back(pwb::check_k1_corollaries(n_max, workers));
    bool ran_search = false;
    std::size_t search_begin = reports.size();
    if (wants("strategy-search")) {
        pwb::StrategySearchOptions opts;
        opts.k_max = k_max;
        opts.n_max = n_max;
        opts.workers = workers;
        if (!strategy_names.empty()) {
            opts.strategies.clear();
            for (const std::string& name : strategy_names)
                opts.strategies.push_back(parse_strategy(name));
        }
        auto search = pwb::strategy_search(opts);
        reports.insert(reports.end(), search.begin(), search.end());
        ran_search = true;
    }

    write_output(pwb::reports_to_json(reports).dump(2) + "\n", out_path);

    bool failed = false;
    for (std::size_t i = 0; i < reports.size(); ++i) {
        const auto& rep = reports[i];
        bool is_search = ran_search && i >= search_begin;
        std::string label = rep.suite;
        if (is_search)
            label += "/" + rep.params["strategy"].get<std::string>() + "/" +
                     rep.params["property"].get<std::string>();
        std::cerr << label << ": " << (rep.passed() ? "pass" : "fail") << " ("
                  << rep.checks_run << " checks";
        if (!rep.passed())
            std::cerr << ", " << rep.counterexamples.size()
                      << " counterexamples recorded";
        std::cerr << ")\n";
        if (!rep.passed() && !(is_search && findings_ok))
            failed = true;
    }
    return failed ? 1 : 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"partition workbench: k-measure and Durfee statistics, the "
                 "forward/inverse maps, counting tables and theorem checks"};
    app.require_subcommand(1);
    int result = 0;

    // stats
    auto* stats = app.add_subcommand("stats", "statistics of one partition");
    std::string stats_partition;
    std::int64_t stats_k = 2;
    std::string stats_format = "text";
    bool stats_ferrers = false;
    std::string stats_out;
    stats->add_option("--partition,-p", stats_partition,
                      "partition, comma or '+' separated (may be empty)");
    stats->add_option("-k", stats_k, "gap parameter (>= 1)")->required();
    stats->add_option("--format", stats_format, "text|json")
        ->check(CLI::IsMember({"text", "json"}));
    stats->add_flag("--ferrers", stats_ferrers,
                    "include the Ferrers diagram with the polygon marked");
    stats->add_option("--output,-o", stats_out, "output file (default stdout)");
    stats->callback([&] {
        result = run_stats(stats_partition, stats_k, stats_format,
                           stats_ferrers, stats_out);
    });

    // map
    auto* map_cmd = app.add_subcommand("map", "apply the forward or inverse map");
    std::string map_partition, map_strategy = "greedy-top", map_format = "text",
                map_out;
    std::int64_t map_k = 2, map_m = 0;
    bool map_inverse = false;
    map_cmd->add_option("--partition,-p", map_partition, "partition")
        ->required();
    map_cmd->add_option("-k", map_k, "gap parameter (>= 1)")->required();
    map_cmd->add_option("-m", map_m, "subsequence length")->required();
    map_cmd->add_option("--strategy", map_strategy,
                        "greedy-top|greedy-bottom|min-index-lex|max-index-lex");
    map_cmd->add_flag("--inverse", map_inverse, "apply the inverse map");
    map_cmd->add_option("--format", map_format, "text|json")
        ->check(CLI::IsMember({"text", "json"}));
    map_cmd->add_option("--output,-o", map_out, "output file");
    map_cmd->callback([&] {
        result = run_map(map_partition, map_k, map_m, map_strategy, map_inverse,
                         map_format, map_out);
    });

    // polygon
    auto* polygon = app.add_subcommand("polygon", "the (k,m)-polygon shape");
    std::int64_t poly_k = 2, poly_m = 0;
    std::string poly_format = "text", poly_out;
    std::optional<std::string> poly_partition;
    polygon->add_option("-k", poly_k, "gap parameter (>= 1)")->required();
    polygon->add_option("-m", poly_m, "polygon order (>= 0)")->required();
    polygon->add_option("--partition,-p", poly_partition,
                        "overlay on this partition's Ferrers diagram");
    polygon->add_option("--format", poly_format, "text|json")
        ->check(CLI::IsMember({"text", "json"}));
    polygon->add_option("--output,-o", poly_out, "output file");
    polygon->callback([&] {
        result = run_polygon(poly_k, poly_m, poly_partition, poly_format,
                             poly_out);
    });

    // count
    auto* count = app.add_subcommand("count", "build a counting table");
    std::string count_kind, count_format = "csv", count_out;
    std::int64_t count_k = 2, count_n_max = 30;
    bool count_by_length = false;
    unsigned count_workers = 0;
    count->add_option("--kind", count_kind, "a|b|c|d|polygon-order")
        ->required();
    count->add_option("-k", count_k, "gap parameter (ignored for kind b)");
    count->add_option("--n-max", count_n_max, "largest n to tabulate")
        ->required();
    count->add_flag("--by-length", count_by_length,
                    "refine by the number of parts");
    count->add_option("--format", count_format, "csv|json")
        ->check(CLI::IsMember({"csv", "json"}));
    count->add_option("--output,-o", count_out, "output file");
    count->add_option("--workers", count_workers,
                      "worker threads (0 = available parallelism; "
                      "WORKBENCH_WORKERS overrides)");
    count->callback([&] {
        result = run_count(count_kind, count_k, count_n_max, count_by_length,
                           count_format, count_out, count_workers);
    });

    // verify
    auto* verify = app.add_subcommand("verify", "run verification suites");
    std::vector<std::string> verify_suites, verify_strategies;
    std::int64_t verify_k_max = 5, verify_n_max = 30;
    bool findings_ok = false;
    std::string verify_out;
    unsigned verify_workers = 0;
    verify->add_option("--suite", verify_suites,
                       "theorem1|theorem2|theorem3|general|k1|strategy-search|"
                       "all (repeatable; default all)");
    verify->add_option("--k-max", verify_k_max, "largest gap parameter");
    verify->add_option("--n-max", verify_n_max, "largest partition weight");
    verify->add_option("--strategy", verify_strategies,
                       "restrict strategy-search to these strategies");
    verify->add_flag("--findings-ok", findings_ok,
                     "strategy-search findings do not fail the run");
    verify->add_option("--output,-o", verify_out,
                       "write the merged JSON report here (default stdout)");
    verify->add_option("--workers", verify_workers,
                       "worker threads (0 = available parallelism; "
                       "WORKBENCH_WORKERS overrides)");
    verify->callback([&] {
        result = run_verify(verify_suites, verify_k_max, verify_n_max,
                            verify_strategies, findings_ok, verify_out,
                            verify_workers);
    });

    // excess
    auto* excess = app.add_subcommand(
        "excess", "signed excess vs distinct-odd-part counts");
    std::int64_t excess_n_max = 30;
    std::string excess_format = "csv", excess_out;
    unsigned excess_workers = 0;
    excess->add_option("--n-max", excess_n_max, "largest n")->required();
    excess->add_option("--format", excess_format, "csv|json")
        ->check(CLI::IsMember({"csv", "json"}));
    excess->add_option("--output,-o", excess_out, "output file");
    excess->add_option("--workers", excess_workers,
                       "worker threads (0 = available parallelism; "
                       "WORKBENCH_WORKERS overrides)");
    excess->callback([&] {
        result = run_excess(excess_n_max, excess_format, excess_out,
                            excess_workers);
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return result;
}
