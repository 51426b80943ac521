#pragma once

// Command-line front end for the gcomp library. `run` is kept free of
// process-global state so tests can drive it in-process.

#include "gcomp/gcomp.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <optional>
#include <ostream>
#include <string>
#include <vector>

namespace gcomp::cli {

using Json = nlohmann::ordered_json;

enum class Exit : int { ok = 0, failure = 1, usage = 2 };

/// Raised for bad option values or combinations; maps to exit status 2.
class usage_error : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

namespace detail {

struct Methods {
    bool formula = false;
    bool oracle = false;
    std::string name;
};

inline Methods parse_method(const std::string& name)
{
    if (name == "formula") {
        return {true, false, name};
    }
    if (name == "oracle") {
        return {false, true, name};
    }
    if (name == "both") {
        return {true, true, name};
    }
    throw usage_error("unknown --method '" + name + "'");
}

inline Json keyed_by_k(const CompositionVector& c, const std::vector<int>& ks)
{
    Json out = Json::object();
    for (int k : ks) {
        out[std::to_string(k)] = to_decimal(c[k]);
    }
    return out;
}

inline std::string csv_line(const CompositionVector& c, const std::vector<int>& ks)
{
    std::string line;
    for (std::size_t i = 0; i < ks.size(); ++i) {
        line += (i == 0 ? "" : ",") + to_decimal(c[ks[i]]);
    }
    return line;
}

inline std::vector<int> all_k(int n)
{
    std::vector<int> ks(n);
    for (int k = 1; k <= n; ++k) {
        ks[k - 1] = k;
    }
    return ks;
}

// Emits the formula/oracle result pair and returns the exit status.
inline Exit emit_results(std::ostream& out, std::ostream& err, Json record, const std::string& format,
                         const std::optional<CompositionVector>& formula,
                         const std::optional<CompositionVector>& oracle, const std::vector<int>& ks)
{
    const bool both = formula && oracle;
    bool agree = true;
    if (both) {
        for (int k : ks) {
            agree = agree && (*formula)[k] == (*oracle)[k];
        }
    }
    if (format == "csv") {
        if (formula) {
            out << csv_line(*formula, ks) << '\n';
        }
        if (oracle && (!formula || !agree)) {
            out << csv_line(*oracle, ks) << '\n';
        }
    } else {
        Json results = Json::object();
        if (formula) {
            results["formula"] = keyed_by_k(*formula, ks);
        }
        if (oracle) {
            results["oracle"] = keyed_by_k(*oracle, ks);
        }
        record["results"] = std::move(results);
        if (both) {
            record["agreement"] = agree;
        }
        out << record.dump(2) << '\n';
    }
    if (!agree) {
        err << "gcomp-error:verify: formula and oracle disagree\n";
        return Exit::failure;
    }
    return Exit::ok;
}

inline OracleConfig oracle_config(unsigned threads)
{
    OracleConfig config = OracleConfig::from_environment();
    config.threads = threads;
    return config;
}

inline int parse_k(const std::string& text, int big_n)
{
    std::size_t used = 0;
    int k = 0;
    try {
        k = std::stoi(text, &used);
    } catch (const std::exception&) {
        used = 0;
    }
    if (used != text.size() || k < 1 || k > big_n) {
        throw usage_error("--k must be 'all' or an integer in 1..N");
    }
    return k;
}

struct SpectrumArgs {
    std::string family;
    std::optional<int> n;
    std::string edges;
    std::string method;
    std::string format = "json";
};

inline Exit run_spectrum(const SpectrumArgs& a, unsigned threads, std::ostream& out, std::ostream& err)
{
    if (a.family.empty() && a.edges.empty()) {
        throw usage_error("spectrum needs --family or --edges");
    }
    Graph graph;
    std::optional<CompositionVector> formula_value;
    Json request = Json::object();
    const std::string family = a.family.empty() ? "edge_list" : a.family;
    request["family"] = family;
    const std::string default_method = family == "edge_list" ? "oracle" : "formula";
    const Methods methods = parse_method(a.method.empty() ? default_method : a.method);

    if (family == "edge_list") {
        if (methods.formula) {
            throw usage_error("an arbitrary edge list has no closed form; use --method oracle");
        }
        graph = read_edge_list_file(a.edges);
        request["edges"] = a.edges;
        request["n"] = graph.vertex_count();
    } else {
        const auto kind = parse_family_kind(family);
        if (!kind || *kind == FamilyKind::edge_list) {
            throw usage_error("unknown --family '" + family + "'");
        }
        if (*kind == FamilyKind::tree) {
            if (a.edges.empty()) {
                throw usage_error("--family tree requires --edges <file>");
            }
            const Graph parsed = read_edge_list_file(a.edges);
            if (a.n && *a.n != parsed.vertex_count()) {
                throw usage_error("--n does not match the vertex count of the edge list");
            }
            FamilySpec spec{FamilyKind::tree, parsed.vertex_count(),
                            std::vector<Edge>(parsed.edges().begin(), parsed.edges().end())};
            graph = build_family(spec);
            request["edges"] = a.edges;
        } else {
            if (!a.n) {
                throw usage_error("--family " + family + " requires --n");
            }
            if (!a.edges.empty()) {
                throw usage_error("--edges is only accepted with --family tree or on its own");
            }
            graph = build_family({*kind, *a.n, {}});
        }
        request["n"] = *kind == FamilyKind::matching ? *a.n : graph.vertex_count();
        if (graph.vertex_count() < 1) {
            throw usage_error("graph has no vertices");
        }
        if (methods.formula) {
            const int n = graph.vertex_count();
            switch (*kind) {
            case FamilyKind::path:
            case FamilyKind::star:
            case FamilyKind::tree: formula_value = tree_spectrum(n); break;
            case FamilyKind::cycle: formula_value = cycle_spectrum(n); break;
            case FamilyKind::complete: formula_value = complete_spectrum(n); break;
            case FamilyKind::matching: {
                CompositionVector c = tree_spectrum(2);
                for (int i = 1; i < *a.n; ++i) {
                    c = disjoint_union_spectrum(c, tree_spectrum(2));
                }
                formula_value = c;
                break;
            }
            case FamilyKind::edge_list: break;
            }
        }
    }
    std::optional<CompositionVector> oracle_value;
    if (methods.oracle) {
        oracle_value = composition_spectrum(graph, oracle_config(threads));
    }
    Json record = Json::object();
    record["command"] = "spectrum";
    record["request"] = request;
    record["method"] = methods.name;
    return emit_results(out, err, record, a.format, formula_value, oracle_value, all_k(graph.vertex_count()));
}

struct DeletionArgs {
    std::string family;
    std::optional<int> n;
    std::optional<int> big_n;
    std::string k = "all";
    std::string edges;
    std::string method = "formula";
    std::string format = "json";
};

inline Exit run_deletion(const DeletionArgs& a, unsigned threads, std::ostream& out, std::ostream& err)
{
    const Methods methods = parse_method(a.method);
    if (!a.big_n) {
        throw usage_error("deletion requires --N");
    }
    const int big_n = *a.big_n;
    if (big_n < 1) {
        throw usage_error("--N must be >= 1");
    }
    Json request = Json::object();
    request["family"] = a.family;
    Graph deleted;
    if (a.family == "edges") {
        if (a.edges.empty()) {
            throw usage_error("--family edges requires --edges <file>");
        }
        deleted = read_edge_list_file(a.edges);
        request["edges"] = a.edges;
    } else {
        if (!a.n) {
            throw usage_error("--family " + a.family + " requires --n");
        }
        const auto kind = parse_family_kind(a.family);
        if (!kind || (*kind != FamilyKind::path && *kind != FamilyKind::cycle && *kind != FamilyKind::star &&
                      *kind != FamilyKind::matching)) {
            throw usage_error("deletion --family must be path, cycle, star, matching or edges");
        }
        deleted = build_family({*kind, *a.n, {}});
        request["n"] = *a.n;
    }
    request["N"] = big_n;
    request["k"] = a.k;
    if (deleted.vertex_count() > big_n) {
        throw usage_error("deleted graph has " + std::to_string(deleted.vertex_count()) + " vertices but N = " +
                          std::to_string(big_n));
    }
    const std::vector<int> ks = a.k == "all" ? all_k(big_n) : std::vector<int>{parse_k(a.k, big_n)};

    std::optional<CompositionVector> formula_value;
    if (methods.formula) {
        auto c = CompositionVector::zeros(big_n);
        std::optional<CoefficientTable> table;
        if (a.family == "path") {
            table = path_b_table(*a.n);
        } else if (a.family == "cycle") {
            table = cycle_b_table(*a.n);
        } else if (a.family == "edges") {
            table = bad_coefficient_table(deleted, oracle_config(threads));
        }
        for (int k : ks) {
            if (table) {
                c.at(k) = deletion_spectrum(big_n, *table, k);
            } else if (a.family == "star") {
                c.at(k) = star_deletion_spectrum(big_n, *a.n - 1, k);
            } else {
                c.at(k) = matching_deletion_spectrum(big_n, *a.n, k);
            }
        }
        formula_value = std::move(c);
    }
    std::optional<CompositionVector> oracle_value;
    if (methods.oracle) {
        oracle_value = composition_spectrum(delete_from_complete(big_n, deleted), oracle_config(threads));
    }
    Json record = Json::object();
    record["command"] = "deletion";
    record["request"] = request;
    record["method"] = methods.name;
    return emit_results(out, err, record, a.format, formula_value, oracle_value, ks);
}

struct TableArgs {
    std::string kind;
    std::string family;
    std::optional<int> n;
    std::optional<int> n_max;
    std::string edges;
};

inline Exit run_table(const TableArgs& a, unsigned threads, std::ostream& out)
{
    if (a.kind != "b" && a.kind != "p" && a.kind != "c") {
        throw usage_error("--kind must be b, p or c");
    }
    std::vector<CoefficientTable> tables;
    if (a.kind == "b" && !a.edges.empty()) {
        if (a.n_max) {
            throw usage_error("--n-max cannot be combined with --edges");
        }
        tables.push_back(bad_coefficient_table(read_edge_list_file(a.edges), oracle_config(threads)));
    } else {
        if (!a.n) {
            throw usage_error("table requires --n (or --edges with --kind b)");
        }
        const int last = a.n_max.value_or(*a.n);
        if (last < *a.n) {
            throw usage_error("--n-max must be >= --n");
        }
        std::string family = a.family;
        if (a.kind == "p" && family.empty()) {
            family = "path";
        }
        if (a.kind == "c" && family.empty()) {
            family = "cycle";
        }
        if ((a.kind == "p" && family != "path") || (a.kind == "c" && family != "cycle")) {
            throw usage_error("--kind " + a.kind + " is defined only for --family " +
                              (a.kind == "p" ? "path" : "cycle"));
        }
        const auto kind = parse_family_kind(family);
        if (!kind || *kind == FamilyKind::tree || *kind == FamilyKind::edge_list) {
            throw usage_error("--kind b needs --family path|cycle|star|complete|matching, or --edges");
        }
        for (int n = *a.n; n <= last; ++n) {
            if (a.kind == "p") {
                tables.push_back(path_b_table(n));
            } else if (a.kind == "c") {
                tables.push_back(cycle_b_table(n));
            } else {
                tables.push_back(bad_coefficient_table(build_family({*kind, n, {}}), oracle_config(threads)));
            }
        }
    }
    out << "n,m,j,value\n";
    for (const auto& t : tables) {
        for (int m = 0; m <= t.size(); ++m) {
            for (int j = m; j <= t.size(); ++j) {
                if (t.entry(j, m) != 0) {
                    out << t.size() << ',' << m << ',' << j << ',' << to_decimal(t.entry(j, m)) << '\n';
                }
            }
        }
    }
    return Exit::ok;
}

inline Exit run_series(const std::string& which, int order, std::ostream& out)
{
    if (order < 0) {
        throw usage_error("--order must be >= 0");
    }
    if (which == "F") {
        write_series_csv(out, path_series(order));
    } else if (which == "G") {
        write_series_csv(out, cycle_series(order));
    } else {
        throw usage_error("--which must be F or G");
    }
    return Exit::ok;
}

inline Exit run_verify(int n_max, int big_n_max, unsigned threads, std::ostream& out, std::ostream& err)
{
    if (n_max < 1 || big_n_max < 1) {
        throw usage_error("--n-max and --N-max must be >= 1");
    }
    VerifyOptions options;
    options.n_max = n_max;
    options.big_n_max = big_n_max;
    options.oracle = oracle_config(threads);
    const int limit = std::min(options.oracle.limit, OracleConfig::hard_limit);
    if (n_max > limit || big_n_max > limit) {
        throw usage_error("--n-max and --N-max must not exceed the oracle limit " + std::to_string(limit));
    }
    const auto results = run_verification(options);
    int failed = 0;
    for (const auto& r : results) {
        out << (r.passed ? "PASS " : "FAIL ") << r.name << ": " << r.detail << '\n';
        failed += !r.passed;
    }
    out << "verify: " << results.size() - failed << "/" << results.size() << " checks passed\n";
    if (failed != 0) {
        err << "gcomp-error:verify: " << failed << " check(s) failed\n";
        return Exit::failure;
    }
    return Exit::ok;
}

}  // namespace detail

inline int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Exact counts of graph compositions with a fixed number of components"};
    app.require_subcommand(1);
    unsigned threads = 1;
    app.add_option("--threads", threads, "Worker threads for the partition oracle")->check(CLI::Range(1U, 256U));

    detail::SpectrumArgs spectrum_args;
    auto* spectrum = app.add_subcommand("spectrum", "C^k(G) for k = 1..n");
    spectrum->add_option("--family", spectrum_args.family, "path|cycle|star|complete|matching|tree");
    spectrum->add_option("--n", spectrum_args.n, "Size parameter");
    spectrum->add_option("--edges", spectrum_args.edges, "Edge-list file");
    spectrum->add_option("--method", spectrum_args.method, "oracle|formula|both");
    spectrum->add_option("--format", spectrum_args.format, "json|csv")->check(CLI::IsMember({"json", "csv"}));
    spectrum->add_option("--threads", threads, "Worker threads for the partition oracle");

    detail::DeletionArgs deletion_args;
    auto* deletion = app.add_subcommand("deletion", "C^k(K_N minus G)");
    deletion->add_option("--family", deletion_args.family, "path|cycle|star|matching|edges")->required();
    deletion->add_option("--n", deletion_args.n, "Size parameter of the deleted graph");
    deletion->add_option("--N", deletion_args.big_n, "Size of the ambient complete graph");
    deletion->add_option("--k", deletion_args.k, "Component count or 'all'");
    deletion->add_option("--edges", deletion_args.edges, "Edge-list file for --family edges");
    deletion->add_option("--method", deletion_args.method, "formula|oracle|both");
    deletion->add_option("--format", deletion_args.format, "json|csv")->check(CLI::IsMember({"json", "csv"}));
    deletion->add_option("--threads", threads, "Worker threads for the partition oracle");

    detail::TableArgs table_args;
    auto* table = app.add_subcommand("table", "Bad-component coefficient tables as n,m,j,value rows");
    table->add_option("--kind", table_args.kind, "b (oracle), p (path recurrence) or c (cycle recurrence)")->required();
    table->add_option("--family", table_args.family, "Graph family for --kind b");
    table->add_option("--n", table_args.n, "Size parameter");
    table->add_option("--n-max", table_args.n_max, "Emit every size from --n to --n-max");
    table->add_option("--edges", table_args.edges, "Edge-list file for --kind b");

    std::string which;
    int order = 0;
    auto* series = app.add_subcommand("series", "Generating-function coefficients as n,m,j,coefficient rows");
    series->add_option("--which", which, "F (paths) or G (cycles)")->required();
    series->add_option("--order", order, "Truncation order in x")->required();

    int n_max = 8;
    int big_n_max = 9;
    auto* verify = app.add_subcommand("verify", "Cross-check every formula against the oracle");
    verify->add_option("--n-max", n_max, "Largest family / composed graph");
    verify->add_option("--N-max", big_n_max, "Largest ambient complete graph and table size");
    verify->add_option("--threads", threads, "Worker threads for the partition oracle");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "gcomp-error:usage: " << e.what() << '\n';
        return static_cast<int>(Exit::usage);
    }

    try {
        Exit status = Exit::ok;
        if (spectrum->parsed()) {
            status = detail::run_spectrum(spectrum_args, threads, out, err);
        } else if (deletion->parsed()) {
            status = detail::run_deletion(deletion_args, threads, out, err);
        } else if (table->parsed()) {
            status = detail::run_table(table_args, threads, out);
        } else if (series->parsed()) {
            status = detail::run_series(which, order, out);
        } else if (verify->parsed()) {
            status = detail::run_verify(n_max, big_n_max, threads, out, err);
        }
        return static_cast<int>(status);
    } catch (const oracle_limit_error& e) {
        err << "gcomp-error:oracle-limit: " << e.what() << '\n';
        return static_cast<int>(Exit::usage);
    } catch (const std::invalid_argument& e) {
        err << "gcomp-error:usage: " << e.what() << '\n';
        return static_cast<int>(Exit::usage);
    } catch (const std::exception& e) {
        err << "gcomp-error:internal: " << e.what() << '\n';
        return static_cast<int>(Exit::failure);
    }
}

inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    std::vector<const char*> argv{"gcomp"};
    for (const auto& a : args) {
        argv.push_back(a.c_str());
    }
    return run(static_cast<int>(argv.size()), argv.data(), out, err);
}

}  // namespace gcomp::cli
