#pragma once

// Brute-force ground truth. Set partitions are walked as restricted growth
// strings; a partition counts towards C^k(G) when every block is connected.
// Bad-component tables are counted from an explicit list of bad subsets.

#include "gcomp/graph.hpp"
#include "gcomp/spectrum.hpp"
#include "gcomp/union_find.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <cstdint>
#include <cstdlib>
#include <span>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

namespace gcomp {

using VertexMask = std::uint32_t;

/// Raised when a graph exceeds the configured oracle size.
class oracle_limit_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct OracleConfig {
    static constexpr int default_limit = 12;
    // 2^n connectivity tables and 64-bit family counters stay sound up to here.
    static constexpr int hard_limit = 20;

    int limit = default_limit;
    unsigned threads = 1;

    /// Default config with `limit` taken from GC_ORACLE_LIMIT when set.
    static OracleConfig from_environment()
    {
        OracleConfig config;
        if (const char* raw = std::getenv("GC_ORACLE_LIMIT"); raw != nullptr && *raw != '\0') {
            std::size_t used = 0;
            int value = -1;
            try {
                value = std::stoi(raw, &used);
            } catch (const std::exception&) {
                used = 0;
            }
            if (used != std::string(raw).size() || value < 1 || value > hard_limit) {
                throw std::invalid_argument("GC_ORACLE_LIMIT must be an integer in 1.." +
                                            std::to_string(hard_limit));
            }
            config.limit = value;
        }
        return config;
    }
};

/// Calls `visit(rgs, blocks)` once for every set partition of {0..n-1} whose
/// restricted growth string starts with `prefix`, in lexicographic order.
/// The prefix must itself be a restricted growth string.
template <typename Visitor>
void for_each_set_partition(int n, std::span<const int> prefix, Visitor&& visit)
{
    if (n < 0 || static_cast<int>(prefix.size()) > n) {
        throw std::invalid_argument("for_each_set_partition: bad size or prefix");
    }
    if (n == 0) {
        visit(std::span<const int>{}, 0);
        return;
    }
    std::vector<int> rgs(n, 0);
    std::vector<int> top(n, 0);  // top[i] = max(rgs[0..i])
    for (std::size_t i = 0; i < prefix.size(); ++i) {
        const int limit = i == 0 ? 0 : top[i - 1] + 1;
        if (prefix[i] < 0 || prefix[i] > limit) {
            throw std::invalid_argument("for_each_set_partition: prefix is not a restricted growth string");
        }
        rgs[i] = prefix[i];
        top[i] = i == 0 ? rgs[0] : std::max(top[i - 1], rgs[i]);
    }
    const int frozen = std::max<int>(1, static_cast<int>(prefix.size()));
    for (int i = frozen; i < n; ++i) {
        top[i] = top[i - 1];
    }
    while (true) {
        visit(std::span<const int>(rgs), top[n - 1] + 1);
        int i = n - 1;
        while (i >= frozen && rgs[i] > top[i - 1]) {
            --i;
        }
        if (i < frozen) {
            return;
        }
        ++rgs[i];
        top[i] = std::max(top[i - 1], rgs[i]);
        for (int l = i + 1; l < n; ++l) {
            rgs[l] = 0;
            top[l] = top[i];
        }
    }
}

template <typename Visitor>
void for_each_set_partition(int n, Visitor&& visit)
{
    for_each_set_partition(n, std::span<const int>{}, std::forward<Visitor>(visit));
}

namespace detail {

inline void check_oracle_size(const Graph& g, const OracleConfig& config, const char* who)
{
    const int limit = std::min(config.limit, OracleConfig::hard_limit);
    if (g.vertex_count() > limit) {
        throw oracle_limit_error(std::string(who) + ": |V| = " + std::to_string(g.vertex_count()) +
                                 " exceeds the oracle limit of " + std::to_string(limit));
    }
}

/// connected[mask] for every vertex subset, via a scratch union-find per subset.
inline std::vector<std::uint8_t> connected_subsets(const Graph& g)
{
    const int n = g.vertex_count();
    const VertexMask full = n == 0 ? 0 : (VertexMask{1} << n) - 1;
    std::vector<std::uint8_t> connected(std::size_t{full} + 1, 0);
    UnionFind scratch;
    for (VertexMask mask = 1; mask != 0 && mask <= full; ++mask) {
        scratch.reset(n);
        for (const Edge& e : g.edges()) {
            if ((mask >> e.u & 1U) && (mask >> e.v & 1U)) {
                scratch.unite(e.u, e.v);
            }
        }
        const int outside = n - std::popcount(mask);
        connected[mask] = scratch.components() - outside == 1;
    }
    return connected;
}

}  // namespace detail

struct OracleRun {
    CompositionVector spectrum;
    std::uint64_t partitions_visited = 0;
};

/// Exhaustive composition count of g bucketed by number of blocks. With
/// config.threads > 1 the walk is split by restricted-growth prefix; the
/// result does not depend on the thread count.
inline OracleRun run_composition_oracle(const Graph& g, const OracleConfig& config = {})
{
    const int n = g.vertex_count();
    if (n < 1) {
        throw std::invalid_argument("composition_spectrum: graph has no vertices");
    }
    detail::check_oracle_size(g, config, "composition_spectrum");
    const auto connected = detail::connected_subsets(g);

    struct Tally {
        std::vector<std::uint64_t> by_blocks;
        std::uint64_t visited = 0;
    };
    const auto walk = [&](std::span<const int> prefix, Tally& tally) {
        std::vector<VertexMask> blocks(n);
        for_each_set_partition(n, prefix, [&](std::span<const int> rgs, int block_count) {
            ++tally.visited;
            std::fill_n(blocks.begin(), block_count, VertexMask{0});
            for (int v = 0; v < n; ++v) {
                blocks[rgs[v]] |= VertexMask{1} << v;
            }
            for (int b = 0; b < block_count; ++b) {
                if (!connected[blocks[b]]) {
                    return;
                }
            }
            ++tally.by_blocks[block_count];
        });
    };

    Tally total{std::vector<std::uint64_t>(n + 1, 0), 0};
    const unsigned threads = std::max(1U, config.threads);
    if (threads == 1 || n < 6) {
        walk({}, total);
    } else {
        std::vector<std::vector<int>> prefixes;
        for_each_set_partition(std::min(n, 6), [&](std::span<const int> rgs, int) {
            prefixes.emplace_back(rgs.begin(), rgs.end());
        });
        std::vector<Tally> tallies(threads, Tally{std::vector<std::uint64_t>(n + 1, 0), 0});
        std::atomic<std::size_t> next{0};
        std::vector<std::jthread> workers;
        for (unsigned t = 0; t < threads; ++t) {
            workers.emplace_back([&, t] {
                for (std::size_t i = next++; i < prefixes.size(); i = next++) {
                    walk(prefixes[i], tallies[t]);
                }
            });
        }
        workers.clear();
        for (const Tally& tally : tallies) {
            total.visited += tally.visited;
            for (int k = 0; k <= n; ++k) {
                total.by_blocks[k] += tally.by_blocks[k];
            }
        }
    }

    auto spectrum = CompositionVector::zeros(n);
    for (int k = 1; k <= n; ++k) {
        spectrum.at(k) = BigNat(total.by_blocks[k]);
    }
    return {std::move(spectrum), total.visited};
}

inline CompositionVector composition_spectrum(const Graph& g, const OracleConfig& config = {})
{
    return run_composition_oracle(g, config).spectrum;
}

inline BigNat composition_count(const Graph& g, const OracleConfig& config = {})
{
    return composition_spectrum(g, config).total();
}

/// Every bad subset of V(g) as a bit mask, ascending.
inline std::vector<VertexMask> bad_subsets(const Graph& g, const OracleConfig& config = {})
{
    detail::check_oracle_size(g, config, "bad_subsets");
    const auto complement_connected = detail::connected_subsets(g.complement());
    std::vector<VertexMask> bad;
    for (VertexMask mask = 1; mask < complement_connected.size(); ++mask) {
        if (std::popcount(mask) >= 2 && !complement_connected[mask]) {
            bad.push_back(mask);
        }
    }
    return bad;
}

/// Counts unordered families of disjoint bad subsets by (covered vertices,
/// family size). Each family is built by repeatedly deciding the fate of the
/// lowest undecided vertex, so every family is produced exactly once.
inline CoefficientTable bad_coefficient_table(const Graph& g, const OracleConfig& config = {})
{
    const int n = g.vertex_count();
    detail::check_oracle_size(g, config, "bad_coefficient_table");
    const auto bad = bad_subsets(g, config);

    std::vector<std::vector<VertexMask>> by_lowest(n);
    for (VertexMask mask : bad) {
        by_lowest[std::countr_zero(mask)].push_back(mask);
    }

    const std::size_t stride = static_cast<std::size_t>(n) + 1;
    std::vector<std::vector<std::uint64_t>> memo(std::size_t{1} << n);

    const auto solve = [&](auto&& self, VertexMask avail) -> const std::vector<std::uint64_t>& {
        auto& slot = memo[avail];
        if (!slot.empty()) {
            return slot;
        }
        std::vector<std::uint64_t> counts(stride * stride, 0);
        if (avail == 0) {
            counts[0] = 1;
        } else {
            const int low = std::countr_zero(avail);
            const auto& skip = self(self, avail & ~(VertexMask{1} << low));
            std::copy(skip.begin(), skip.end(), counts.begin());
            for (VertexMask block : by_lowest[low]) {
                if ((block & ~avail) != 0) {
                    continue;
                }
                const auto& rest = self(self, avail & ~block);
                const int size = std::popcount(block);
                for (std::size_t j = 0; j + size < stride; ++j) {
                    for (std::size_t m = 0; m + 1 < stride; ++m) {
                        counts[(j + size) * stride + m + 1] += rest[j * stride + m];
                    }
                }
            }
        }
        slot = std::move(counts);
        return memo[avail];
    };

    const VertexMask full = n == 0 ? 0 : static_cast<VertexMask>((std::uint64_t{1} << n) - 1);
    const auto& counts = solve(solve, full);
    CoefficientTable table(n);
    for (int j = 0; j <= n; ++j) {
        for (int m = 0; m <= j; ++m) {
            table.set(j, m, BigNat(counts[j * stride + m]));
        }
    }
    return table;
}

}  // namespace gcomp
