#pragma once

// Exact binomial coefficients, Stirling numbers of the second kind and Bell
// numbers. Everything is arbitrary precision; tables grow lazily and are
// shared process-wide behind a reader/writer lock.

#include <boost/multiprecision/cpp_int.hpp>

#include <cstddef>
#include <mutex>
#include <shared_mutex>
#include <stdexcept>
#include <string>
#include <vector>

namespace gcomp {

/// Non-negative arbitrary-precision integer. Shares the representation of
/// BigInt; non-negativity is a contract of the functions returning it.
using BigNat = boost::multiprecision::cpp_int;

/// Signed arbitrary-precision integer used for alternating sums.
using BigInt = boost::multiprecision::cpp_int;

inline std::string to_decimal(const BigInt& v) { return v.str(); }

/// Lower-triangular table of exact integers, grown one row at a time by
/// `Rule::next_row`. Entries outside 0 <= k <= n read as zero.
///
/// Concurrent readers share a lock; growth takes the exclusive lock.
template <typename Rule>
class MemoTriangle {
public:
    MemoTriangle() { rows_.push_back(Rule::first_row()); }

    explicit MemoTriangle(int max_n) : MemoTriangle() { reserve(max_n); }

    MemoTriangle(const MemoTriangle&) = delete;
    MemoTriangle& operator=(const MemoTriangle&) = delete;

    BigNat operator()(int n, int k) const
    {
        if (n < 0 || k < 0 || k > n) {
            return 0;
        }
        {
            std::shared_lock lock(mutex_);
            if (static_cast<std::size_t>(n) < rows_.size()) {
                return rows_[n][k];
            }
        }
        reserve(n);
        std::shared_lock lock(mutex_);
        return rows_[n][k];
    }

    std::vector<BigNat> row(int n) const
    {
        if (n < 0) {
            throw std::invalid_argument("MemoTriangle::row: negative row index");
        }
        reserve(n);
        std::shared_lock lock(mutex_);
        return rows_[n];
    }

    /// Largest row currently materialized.
    int max_n() const
    {
        std::shared_lock lock(mutex_);
        return static_cast<int>(rows_.size()) - 1;
    }

    void reserve(int n) const
    {
        std::unique_lock lock(mutex_);
        while (static_cast<int>(rows_.size()) <= n) {
            const int next = static_cast<int>(rows_.size());
            rows_.push_back(Rule::next_row(rows_.back(), next));
        }
    }

private:
    mutable std::shared_mutex mutex_;
    mutable std::vector<std::vector<BigNat>> rows_;
};

namespace detail {

struct PascalRule {
    static std::vector<BigNat> first_row() { return {BigNat(1)}; }

    static std::vector<BigNat> next_row(const std::vector<BigNat>& prev, int n)
    {
        std::vector<BigNat> row(n + 1);
        row[0] = 1;
        row[n] = 1;
        for (int k = 1; k < n; ++k) {
            row[k] = prev[k - 1] + prev[k];
        }
        return row;
    }
};

// S(n,k) = k S(n-1,k) + S(n-1,k-1), with S(0,0) = 1 and S(n,0) = 0 for n >= 1.
struct StirlingRule {
    static std::vector<BigNat> first_row() { return {BigNat(1)}; }

    static std::vector<BigNat> next_row(const std::vector<BigNat>& prev, int n)
    {
        std::vector<BigNat> row(n + 1);
        row[0] = 0;
        for (int k = 1; k <= n; ++k) {
            BigNat carried = k < n ? BigNat(k * prev[k]) : BigNat(0);
            row[k] = carried + prev[k - 1];
        }
        return row;
    }
};

}  // namespace detail

using PascalTable = MemoTriangle<detail::PascalRule>;
using StirlingTable = MemoTriangle<detail::StirlingRule>;

inline const PascalTable& pascal_table()
{
    static const PascalTable table;
    return table;
}

inline const StirlingTable& stirling_table()
{
    static const StirlingTable table;
    return table;
}

/// n choose k; zero when k < 0 or k > n.
inline BigNat binomial(int n, int k)
{
    if (n < 0) {
        throw std::invalid_argument("binomial: n must be non-negative");
    }
    return pascal_table()(n, k);
}

/// Stirling number of the second kind; zero when k < 0 or k > n.
inline BigNat stirling2(int n, int k)
{
    if (n < 0) {
        throw std::invalid_argument("stirling2: n must be non-negative");
    }
    return stirling_table()(n, k);
}

inline BigNat bell(int n)
{
    if (n < 0) {
        throw std::invalid_argument("bell: n must be non-negative");
    }
    BigNat total = 0;
    for (const auto& s : stirling_table().row(n)) {
        total += s;
    }
    return total;
}

}  // namespace gcomp
