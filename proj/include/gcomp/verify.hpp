#pragma once

// Cross-validation suite: every closed form and recurrence checked against
// the exhaustive oracle. Shared by `gcomp verify` and the acceptance tests.

#include "gcomp/closed_forms.hpp"
#include "gcomp/combinatorics.hpp"
#include "gcomp/graph.hpp"
#include "gcomp/partition_oracle.hpp"
#include "gcomp/power_series.hpp"

#include <algorithm>
#include <cstdint>
#include <functional>
#include <numeric>
#include <random>
#include <sstream>
#include <string>
#include <vector>

namespace gcomp {

struct CheckResult {
    std::string name;
    bool passed = true;
    std::string detail;
};

struct VerifyOptions {
    int n_max = 8;             // largest composed / family graph
    int big_n_max = 9;         // largest ambient K_N, table size and series order
    int corpus_max_vertices = 5;
    int bounds_samples = 200;
    int bounds_max_n = 7;
    std::uint64_t seed = 20240917;
    OracleConfig oracle;
};

namespace detail {

inline std::string describe(const Graph& g)
{
    std::ostringstream out;
    out << "n=" << g.vertex_count() << " E={";
    bool first = true;
    for (const Edge& e : g.edges()) {
        out << (first ? "" : ",") << e.u << '-' << e.v;
        first = false;
    }
    out << '}';
    return out.str();
}

// Records the first mismatch and counts comparisons.
class Tally {
public:
    explicit Tally(std::string name) { result_.name = std::move(name); }

    void expect(bool ok, const std::function<std::string()>& what)
    {
        ++checked_;
        if (!ok) {
            ++failed_;
            if (result_.passed) {
                result_.detail = what();
            }
            result_.passed = false;
        }
    }

    CheckResult finish(const std::string& summary = {})
    {
        if (result_.passed) {
            result_.detail = std::to_string(checked_) + " comparisons" + (summary.empty() ? "" : "; " + summary);
        } else {
            result_.detail = std::to_string(failed_) + " of " + std::to_string(checked_) +
                             " comparisons failed; first: " + result_.detail;
        }
        return result_;
    }

private:
    CheckResult result_;
    std::size_t checked_ = 0;
    std::size_t failed_ = 0;
};

}  // namespace detail

/// Small named graphs used for the gluing checks: paths, stars, cycles,
/// complete graphs, matchings and edgeless graphs with up to max_n vertices.
inline std::vector<Graph> family_corpus(int max_n)
{
    std::vector<Graph> corpus;
    for (int n = 1; n <= max_n; ++n) {
        corpus.push_back(build_family({FamilyKind::path, n, {}}));
        corpus.push_back(build_family({FamilyKind::complete, n, {}}).complement());
        if (n >= 3) {
            corpus.push_back(build_family({FamilyKind::cycle, n, {}}));
            corpus.push_back(build_family({FamilyKind::complete, n, {}}));
        }
        if (n >= 4) {
            corpus.push_back(build_family({FamilyKind::star, n, {}}));
        }
        if (n >= 4 && n % 2 == 0) {
            corpus.push_back(build_family({FamilyKind::matching, n / 2, {}}));
        }
    }
    return corpus;
}

/// Every labeled simple graph on 1..max_vertices vertices.
inline std::vector<Graph> labeled_graph_corpus(int max_vertices)
{
    std::vector<Graph> corpus;
    for (int n = 1; n <= max_vertices; ++n) {
        std::vector<Edge> pairs;
        for (Vertex a = 0; a < n; ++a) {
            for (Vertex b = a + 1; b < n; ++b) {
                pairs.emplace_back(a, b);
            }
        }
        for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << pairs.size()); ++mask) {
            std::vector<Edge> edges;
            for (std::size_t i = 0; i < pairs.size(); ++i) {
                if (mask >> i & 1U) {
                    edges.push_back(pairs[i]);
                }
            }
            corpus.emplace_back(n, std::move(edges));
        }
    }
    return corpus;
}

/// Random connected graph: a random recursive tree plus each remaining pair
/// with probability `density`, then randomly relabeled.
template <typename Rng>
Graph random_connected_graph(int n, double density, Rng& rng)
{
    std::vector<Vertex> label(n);
    std::iota(label.begin(), label.end(), 0);
    std::shuffle(label.begin(), label.end(), rng);
    std::vector<std::vector<bool>> has(n, std::vector<bool>(n, false));
    std::vector<Edge> edges;
    for (Vertex v = 1; v < n; ++v) {
        const Vertex parent = std::uniform_int_distribution<Vertex>(0, v - 1)(rng);
        has[parent][v] = has[v][parent] = true;
        edges.emplace_back(label[parent], label[v]);
    }
    std::bernoulli_distribution extra(density);
    for (Vertex a = 0; a < n; ++a) {
        for (Vertex b = a + 1; b < n; ++b) {
            if (!has[a][b] && extra(rng)) {
                edges.emplace_back(label[a], label[b]);
            }
        }
    }
    return Graph(n, std::move(edges));
}

inline CheckResult check_stirling_fixture()
{
    const std::vector<std::vector<int>> printed = {{1}, {1, 1}, {1, 3, 1}, {1, 7, 6, 1}, {1, 15, 25, 10, 1}};
    const StirlingTable fresh(5);
    detail::Tally tally("stirling-fixture");
    for (int n = 1; n <= 5; ++n) {
        for (int k = 1; k <= n; ++k) {
            tally.expect(fresh(n, k) == printed[n - 1][k - 1] && stirling2(n, k) == printed[n - 1][k - 1],
                         [&] { return "S(" + std::to_string(n) + "," + std::to_string(k) + ")"; });
        }
    }
    return tally.finish("rows 1..5 match the printed triangle");
}

inline CheckResult check_stirling_identities(int max_n)
{
    detail::Tally tally("stirling-recurrence-and-bell");
    for (int n = 1; n <= max_n; ++n) {
        BigNat row_sum = 0;
        for (int k = 0; k <= n; ++k) {
            row_sum += stirling2(n, k);
            if (k >= 1) {
                tally.expect(stirling2(n, k) == k * stirling2(n - 1, k) + stirling2(n - 1, k - 1), [&] {
                    return "recurrence at (" + std::to_string(n) + "," + std::to_string(k) + ")";
                });
            }
            tally.expect(binomial(n, k) == binomial(n, n - k), [&] { return "binomial symmetry n=" + std::to_string(n); });
        }
        tally.expect(row_sum == bell(n), [&] { return "bell(" + std::to_string(n) + ")"; });
    }
    return tally.finish();
}

inline CheckResult check_family_spectra(int n_max, const OracleConfig& oracle)
{
    detail::Tally tally("family-spectra-vs-oracle");
    const auto compare = [&](const CompositionVector& formula, const Graph& g, const std::string& label) {
        tally.expect(formula == composition_spectrum(g, oracle),
                     [&] { return label + " " + detail::describe(g); });
    };
    for (int n = 1; n <= n_max; ++n) {
        compare(tree_spectrum(n), build_family({FamilyKind::path, n, {}}), "tree_spectrum on path");
        if (n >= 2) {
            compare(tree_spectrum(n), build_family({FamilyKind::star, n, {}}), "tree_spectrum on star");
        }
        if (n >= 3) {
            compare(cycle_spectrum(n), build_family({FamilyKind::cycle, n, {}}), "cycle_spectrum");
        }
        compare(complete_spectrum(n), build_family({FamilyKind::complete, n, {}}), "complete_spectrum");
        if (n % 2 == 0) {
            CompositionVector matching = tree_spectrum(2);
            for (int i = 1; i < n / 2; ++i) {
                matching = disjoint_union_spectrum(matching, tree_spectrum(2));
            }
            compare(matching, build_family({FamilyKind::matching, n / 2, {}}), "matching convolution");
        }
    }
    return tally.finish();
}

/// Disjoint, wedge and bridge convolutions against the oracle for every
/// corpus pair with n1 + n2 <= n_max and every anchor choice, plus the
/// argument-order symmetry of the bridge formula.
inline CheckResult check_convolutions(int n_max, const OracleConfig& oracle)
{
    detail::Tally tally("gluing-convolutions-vs-oracle");
    const auto corpus = family_corpus(std::max(1, n_max - 1));
    std::vector<CompositionVector> spectra;
    for (const Graph& g : corpus) {
        spectra.push_back(composition_spectrum(g, oracle));
    }
    for (std::size_t a = 0; a < corpus.size(); ++a) {
        for (std::size_t b = 0; b < corpus.size(); ++b) {
            const Graph& g1 = corpus[a];
            const Graph& g2 = corpus[b];
            if (g1.vertex_count() + g2.vertex_count() > n_max) {
                continue;
            }
            const auto& c1 = spectra[a];
            const auto& c2 = spectra[b];
            const Graph disjoint = compose_graphs(ComposeKind::disjoint, g1, g2);
            tally.expect(disjoint_union_spectrum(c1, c2) == composition_spectrum(disjoint, oracle),
                         [&] { return "disjoint " + detail::describe(disjoint); });
            const auto bridge_formula = bridge_spectrum(c1, c2);
            tally.expect(bridge_formula == bridge_spectrum(c2, c1),
                         [&] { return "bridge symmetry " + detail::describe(g1) + " | " + detail::describe(g2); });
            const auto wedge_formula = shared_vertex_spectrum(c1, c2);
            for (Vertex a1 = 0; a1 < g1.vertex_count(); ++a1) {
                for (Vertex a2 = 0; a2 < g2.vertex_count(); ++a2) {
                    const Graph wedge = compose_graphs(ComposeKind::wedge, g1, g2, a1, a2);
                    tally.expect(wedge_formula == composition_spectrum(wedge, oracle),
                                 [&] { return "wedge " + detail::describe(wedge); });
                    const Graph bridge = compose_graphs(ComposeKind::bridge, g1, g2, a1, a2);
                    tally.expect(bridge_formula == composition_spectrum(bridge, oracle),
                                 [&] { return "bridge " + detail::describe(bridge); });
                }
            }
        }
    }
    return tally.finish(std::to_string(corpus.size()) + " corpus graphs");
}

/// Inclusion-exclusion over bad components against the oracle on K_N^{-G},
/// for every labeled graph G with at most corpus_max_vertices vertices.
inline CheckResult check_deletion_theorem(int corpus_max_vertices, int big_n_max, const OracleConfig& oracle)
{
    detail::Tally tally("deletion-inclusion-exclusion-vs-oracle");
    const auto corpus = labeled_graph_corpus(corpus_max_vertices);
    for (const Graph& g : corpus) {
        const CoefficientTable table = bad_coefficient_table(g, oracle);
        for (int big_n = std::max(1, g.vertex_count()); big_n <= big_n_max; ++big_n) {
            const auto truth = composition_spectrum(delete_from_complete(big_n, g), oracle);
            for (int k = 1; k <= big_n; ++k) {
                tally.expect(deletion_spectrum(big_n, table, k) == truth[k], [&] {
                    return "G " + detail::describe(g) + " N=" + std::to_string(big_n) + " k=" + std::to_string(k);
                });
            }
        }
    }
    return tally.finish(std::to_string(corpus.size()) + " labeled graphs");
}

inline CheckResult check_path_tables(int n_max, const OracleConfig& oracle)
{
    detail::Tally tally("path-table-recurrence-vs-oracle");
    for (int n = 1; n <= n_max; ++n) {
        tally.expect(path_b_table(n) == bad_coefficient_table(build_family({FamilyKind::path, n, {}}), oracle),
                     [&] { return "P_" + std::to_string(n); });
    }
    return tally.finish();
}

inline CheckResult check_cycle_tables(int n_max, const OracleConfig& oracle)
{
    detail::Tally tally("cycle-table-recurrence-vs-oracle");
    for (int n = 3; n <= n_max; ++n) {
        tally.expect(cycle_b_table(n) == bad_coefficient_table(build_family({FamilyKind::cycle, n, {}}), oracle),
                     [&] { return "C_" + std::to_string(n); });
    }
    return tally.finish();
}

/// Series coefficients against the recurrence tables. Path cells are
/// compared for every n <= order, cycle cells for 5 <= n <= order, and the
/// denominator times the path series must be exactly 1.
inline CheckResult check_generating_functions(int order)
{
    detail::Tally tally("generating-functions-vs-tables");
    const auto path = path_series(order);
    const auto cycle = cycle_series(order);
    const auto sign = [](int m, const BigNat& v) -> BigInt { return m % 2 == 0 ? BigInt(v) : BigInt(-v); };
    for (int n = 0; n <= order; ++n) {
        const auto p = path_b_table(n);
        for (int m = 0; m <= n; ++m) {
            for (int j = 0; j <= n; ++j) {
                tally.expect(coefficient(path, n, m, j) == sign(m, p.entry(j, m)), [&] {
                    return "F at (n,m,j)=(" + std::to_string(n) + "," + std::to_string(m) + "," + std::to_string(j) + ")";
                });
            }
        }
    }
    for (int n = 5; n <= order; ++n) {
        const auto c = cycle_b_table(n);
        for (int m = 0; m <= n; ++m) {
            for (int j = 0; j <= n; ++j) {
                tally.expect(coefficient(cycle, n, m, j) == sign(m, c.entry(j, m)), [&] {
                    return "G at (n,m,j)=(" + std::to_string(n) + "," + std::to_string(m) + "," + std::to_string(j) + ")";
                });
            }
        }
    }
    tally.expect(series_mul(path_denominator(order), path) == TruncatedSeries::constant(order, 1),
                 [] { return std::string("denominator * F != 1"); });
    return tally.finish("order " + std::to_string(order));
}

/// Star and matching formulas against the generic evaluator (fed oracle
/// tables) and against the oracle spectrum of K_N^{-G}.
inline CheckResult check_specialised_deletions(int big_n_max, const OracleConfig& oracle)
{
    detail::Tally tally("star-and-matching-deletions");
    for (int big_n = 2; big_n <= big_n_max; ++big_n) {
        for (int leaves = 1; leaves + 1 <= big_n; ++leaves) {
            const Graph star = build_family({FamilyKind::star, leaves + 1, {}});
            const auto table = bad_coefficient_table(star, oracle);
            const auto truth = composition_spectrum(delete_from_complete(big_n, star), oracle);
            for (int k = 1; k <= big_n; ++k) {
                const BigNat value = star_deletion_spectrum(big_n, leaves, k);
                tally.expect(value == deletion_spectrum(big_n, table, k) && value == truth[k], [&] {
                    return "star leaves=" + std::to_string(leaves) + " N=" + std::to_string(big_n) + " k=" + std::to_string(k);
                });
            }
        }
    }
    for (int big_n = 1; big_n <= big_n_max; ++big_n) {
        for (int n = 0; 2 * n <= big_n; ++n) {
            const Graph matching = build_family({FamilyKind::matching, n, {}});
            const auto table = bad_coefficient_table(matching, oracle);
            const auto truth = composition_spectrum(delete_from_complete(big_n, matching), oracle);
            for (int k = 1; k <= big_n; ++k) {
                const BigNat value = matching_deletion_spectrum(big_n, n, k);
                tally.expect(value == deletion_spectrum(big_n, table, k) && value == truth[k], [&] {
                    return "matching n=" + std::to_string(n) + " N=" + std::to_string(big_n) + " k=" + std::to_string(k);
                });
            }
        }
    }
    return tally.finish();
}

/// The alternating-sum form of the matching deletion must match the oracle
/// everywhere; the variant with a leading S(N,k) and an extra minus sign
/// must be refuted by at least one instance (when N >= 2 is in range).
inline CheckResult check_matching_sign_reading(int big_n_max, const OracleConfig& oracle)
{
    detail::Tally tally("matching-deletion-sign-reading");
    std::size_t refuted = 0;
    std::size_t instances = 0;
    std::string first_refutation;
    for (int big_n = 1; big_n <= big_n_max; ++big_n) {
        for (int n = 0; 2 * n <= big_n; ++n) {
            const auto truth = composition_spectrum(
                delete_from_complete(big_n, build_family({FamilyKind::matching, n, {}})), oracle);
            for (int k = 1; k <= big_n; ++k) {
                ++instances;
                tally.expect(matching_deletion_spectrum(big_n, n, k) == truth[k], [&] {
                    return "adopted form at n=" + std::to_string(n) + " N=" + std::to_string(big_n) + " k=" + std::to_string(k);
                });
                if (matching_deletion_alternative(big_n, n, k) != BigInt(truth[k])) {
                    if (refuted++ == 0) {
                        first_refutation = "n=" + std::to_string(n) + " N=" + std::to_string(big_n) +
                                           " k=" + std::to_string(k) + ": alternative gives " +
                                           to_decimal(matching_deletion_alternative(big_n, n, k)) +
                                           ", oracle gives " + to_decimal(truth[k]);
                    }
                }
            }
        }
    }
    if (big_n_max >= 2) {
        tally.expect(refuted > 0, [] { return std::string("alternative reading was never refuted"); });
    }
    return tally.finish("adopted sum_{j>=0} (-1)^j C(n,j) S(N-2j,k-j); alternative reading refuted on " +
                        std::to_string(refuted) + "/" + std::to_string(instances) + " instances" +
                        (first_refutation.empty() ? "" : " (e.g. " + first_refutation + ")"));
}

/// binomial(n-1,k-1) <= C^k <= S(n,k) on random connected graphs; the lower
/// bound is attained for every k exactly by trees and the upper exactly by
/// complete graphs.
inline CheckResult check_bounds(int samples, int max_n, std::uint64_t seed, const OracleConfig& oracle)
{
    detail::Tally tally("connected-spectrum-bounds");
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> size(1, max_n);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    int trees = 0;
    int completes = 0;
    for (int s = 0; s < samples; ++s) {
        const int n = size(rng);
        // a quarter of the samples are trees and a quarter complete graphs
        const double density = s % 4 == 0 ? 0.0 : s % 4 == 1 ? 1.0 : unit(rng);
        const Graph g = random_connected_graph(n, density, rng);
        const auto spectrum = composition_spectrum(g, oracle);
        const bool is_tree = static_cast<int>(g.edge_count()) == n - 1;
        const bool is_complete = static_cast<int>(g.edge_count()) == n * (n - 1) / 2;
        trees += is_tree;
        completes += is_complete;
        tally.expect(spectrum_bounds_check(spectrum, g.is_connected()), [&] { return "bounds " + detail::describe(g); });
        tally.expect((spectrum == tree_spectrum(n)) == is_tree, [&] { return "lower equality " + detail::describe(g); });
        tally.expect((spectrum == complete_spectrum(n)) == is_complete,
                     [&] { return "upper equality " + detail::describe(g); });
    }
    return tally.finish(std::to_string(samples) + " graphs, " + std::to_string(trees) + " trees, " +
                        std::to_string(completes) + " complete");
}

/// sum_k C^k(K_n) = bell(n); oracle up to its limit, closed form beyond.
inline CheckResult check_lemma1_bell(int max_n, const OracleConfig& oracle)
{
    detail::Tally tally("lemma1-bell-consistency");
    int oracle_runs = 0;
    for (int n = 1; n <= max_n; ++n) {
        if (n <= std::min(oracle.limit, OracleConfig::hard_limit)) {
            const auto run = run_composition_oracle(build_family({FamilyKind::complete, n, {}}), oracle);
            ++oracle_runs;
            tally.expect(run.spectrum.total() == bell(n), [&] { return "oracle C(K_" + std::to_string(n) + ")"; });
            tally.expect(run.partitions_visited == bell(n), [&] { return "partitions visited n=" + std::to_string(n); });
            tally.expect(run.spectrum == complete_spectrum(n), [&] { return "oracle row n=" + std::to_string(n); });
        }
        tally.expect(complete_spectrum(n).total() == bell(n), [&] { return "formula C(K_" + std::to_string(n) + ")"; });
    }
    return tally.finish(std::to_string(oracle_runs) + " oracle runs");
}

inline std::vector<CheckResult> run_verification(const VerifyOptions& options)
{
    const auto& o = options.oracle;
    std::vector<CheckResult> results;
    results.push_back(check_stirling_fixture());
    results.push_back(check_stirling_identities(std::max(options.n_max, options.big_n_max)));
    results.push_back(check_family_spectra(options.n_max, o));
    results.push_back(check_convolutions(options.n_max, o));
    results.push_back(
        check_deletion_theorem(std::min(options.corpus_max_vertices, options.big_n_max), options.big_n_max, o));
    results.push_back(check_path_tables(options.big_n_max, o));
    results.push_back(check_cycle_tables(options.big_n_max, o));
    results.push_back(check_generating_functions(options.big_n_max));
    results.push_back(check_specialised_deletions(options.big_n_max, o));
    results.push_back(check_matching_sign_reading(options.big_n_max, o));
    results.push_back(
        check_bounds(options.bounds_samples, std::min(options.bounds_max_n, options.n_max), options.seed, o));
    results.push_back(check_lemma1_bell(std::max(options.n_max, options.big_n_max), o));
    return results;
}

}  // namespace gcomp
