#pragma once

#include "gcomp/combinatorics.hpp"

#include <initializer_list>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace gcomp {

/// C^k(G) for k = 1..n, indexed by k. Reads past either end are zero.
class CompositionVector {
public:
    CompositionVector() = default;

    CompositionVector(std::initializer_list<BigNat> counts) : counts_(counts) {}

    explicit CompositionVector(std::vector<BigNat> counts) : counts_(std::move(counts)) {}

    static CompositionVector zeros(int n)
    {
        if (n < 0) {
            throw std::invalid_argument("CompositionVector: negative vertex count");
        }
        return CompositionVector(std::vector<BigNat>(n, BigNat(0)));
    }

    int vertex_count() const { return static_cast<int>(counts_.size()); }

    const BigNat& operator[](int k) const
    {
        static const BigNat zero = 0;
        if (k < 1 || k > vertex_count()) {
            return zero;
        }
        return counts_[k - 1];
    }

    BigNat& at(int k)
    {
        if (k < 1 || k > vertex_count()) {
            throw std::out_of_range("CompositionVector: k = " + std::to_string(k) + " outside 1.." +
                                    std::to_string(vertex_count()));
        }
        return counts_[k - 1];
    }

    /// Lemma-1 total: the composition number C(G).
    BigNat total() const
    {
        BigNat sum = 0;
        for (const auto& c : counts_) {
            sum += c;
        }
        return sum;
    }

    std::span<const BigNat> values() const { return counts_; }

    std::string to_csv() const
    {
        std::string out;
        for (std::size_t i = 0; i < counts_.size(); ++i) {
            if (i != 0) {
                out += ',';
            }
            out += to_decimal(counts_[i]);
        }
        return out;
    }

    bool operator==(const CompositionVector&) const = default;

private:
    std::vector<BigNat> counts_;
};

/// Counts of unordered families of m pairwise-disjoint bad subsets covering
/// j vertices in total, for 0 <= m <= j <= n. Other cells read as zero.
class CoefficientTable {
public:
    CoefficientTable() : CoefficientTable(0) {}

    explicit CoefficientTable(int n) : n_(n)
    {
        if (n < 0) {
            throw std::invalid_argument("CoefficientTable: negative size");
        }
        cells_.assign(static_cast<std::size_t>(n + 1) * (n + 1), BigNat(0));
        cells_[0] = 1;
    }

    /// Size of the deleted graph.
    int size() const { return n_; }

    const BigNat& entry(int j, int m) const
    {
        static const BigNat zero = 0;
        if (j < 0 || m < 0 || m > j || j > n_) {
            return zero;
        }
        return cells_[cell(j, m)];
    }

    void set(int j, int m, BigNat value)
    {
        if (j < 0 || m < 0 || m > j || j > n_) {
            throw std::out_of_range("CoefficientTable: cell (" + std::to_string(j) + "," + std::to_string(m) +
                                    ") outside 0 <= m <= j <= " + std::to_string(n_));
        }
        cells_[cell(j, m)] = std::move(value);
    }

    bool operator==(const CoefficientTable&) const = default;

private:
    std::size_t cell(int j, int m) const { return static_cast<std::size_t>(j) * (n_ + 1) + m; }

    int n_ = 0;
    std::vector<BigNat> cells_;
};

}  // namespace gcomp
