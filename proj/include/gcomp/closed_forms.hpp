#pragma once

// Closed formulas for composition spectra: trees, cycles, complete graphs,
// the three gluing convolutions, the inclusion-exclusion evaluator for
// K_N^{-G}, and the path/cycle/star/matching specialisations.

#include "gcomp/combinatorics.hpp"
#include "gcomp/spectrum.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>
#include <vector>

namespace gcomp {

inline CompositionVector tree_spectrum(int n)
{
    if (n < 1) {
        throw std::invalid_argument("tree_spectrum: n must be >= 1");
    }
    auto c = CompositionVector::zeros(n);
    for (int k = 1; k <= n; ++k) {
        c.at(k) = binomial(n - 1, k - 1);
    }
    return c;
}

inline CompositionVector cycle_spectrum(int n)
{
    if (n < 3) {
        throw std::invalid_argument("cycle_spectrum: n must be >= 3");
    }
    auto c = CompositionVector::zeros(n);
    c.at(1) = 1;
    for (int k = 2; k <= n; ++k) {
        c.at(k) = binomial(n, k);
    }
    return c;
}

inline CompositionVector complete_spectrum(int n)
{
    if (n < 1) {
        throw std::invalid_argument("complete_spectrum: n must be >= 1");
    }
    auto c = CompositionVector::zeros(n);
    for (int k = 1; k <= n; ++k) {
        c.at(k) = stirling2(n, k);
    }
    return c;
}

/// Spectrum of the disjoint union: C^k = sum_{j=1}^{k-1} C^j(G1) C^{k-j}(G2).
inline CompositionVector disjoint_union_spectrum(const CompositionVector& c1, const CompositionVector& c2)
{
    const int n = c1.vertex_count() + c2.vertex_count();
    auto c = CompositionVector::zeros(n);
    for (int k = 1; k <= n; ++k) {
        for (int j = 1; j <= k - 1; ++j) {
            c.at(k) += c1[j] * c2[k - j];
        }
    }
    return c;
}

/// Spectrum of two graphs glued at one vertex:
/// C^k = sum_{j=1}^{k} C^j(G1) C^{k+1-j}(G2).
inline CompositionVector shared_vertex_spectrum(const CompositionVector& c1, const CompositionVector& c2)
{
    const int n = c1.vertex_count() + c2.vertex_count() - 1;
    if (n < 1) {
        throw std::invalid_argument("shared_vertex_spectrum: both graphs need a vertex");
    }
    auto c = CompositionVector::zeros(n);
    for (int k = 1; k <= n; ++k) {
        for (int j = 1; j <= k; ++j) {
            c.at(k) += c1[j] * c2[k + 1 - j];
        }
    }
    return c;
}

/// Spectrum of two disjoint graphs joined by a single edge:
/// C^k = sum_{j=1}^{k-1} C^j(G1) [C^{k+1-j}(G2) + C^{k-j}(G2)] + C^k(G1) C^1(G2).
/// The last factor is 1 whenever G2 is connected.
inline CompositionVector bridge_spectrum(const CompositionVector& c1, const CompositionVector& c2)
{
    const int n = c1.vertex_count() + c2.vertex_count();
    auto c = CompositionVector::zeros(n);
    for (int k = 1; k <= n; ++k) {
        BigNat sum = c1[k] * c2[1];
        for (int j = 1; j <= k - 1; ++j) {
            sum += c1[j] * (c2[k + 1 - j] + c2[k - j]);
        }
        c.at(k) = std::move(sum);
    }
    return c;
}

/// C^k(K_N^{-G}) = sum_{j,m} (-1)^m b(j,m) S(N-j, k-m) for the bad-component
/// table b of G. Throws std::logic_error if the sum comes out negative.
inline BigNat deletion_spectrum(int big_n, const CoefficientTable& table, int k)
{
    if (table.size() > big_n) {
        throw std::invalid_argument("deletion_spectrum: deleted graph has " + std::to_string(table.size()) +
                                    " vertices but N = " + std::to_string(big_n));
    }
    if (k < 1 || k > big_n) {
        throw std::invalid_argument("deletion_spectrum: k must lie in 1..N");
    }
    BigInt sum = 0;
    for (int j = 0; j <= table.size(); ++j) {
        for (int m = 0; m <= j; ++m) {
            const BigNat& b = table.entry(j, m);
            if (b == 0) {
                continue;
            }
            const BigInt term = b * stirling2(big_n - j, k - m);
            if (m % 2 == 0) {
                sum += term;
            } else {
                sum -= term;
            }
        }
    }
    if (sum < 0) {
        throw std::logic_error("deletion_spectrum: negative inclusion-exclusion total " + to_decimal(sum));
    }
    return sum;
}

inline CompositionVector deletion_spectrum_all(int big_n, const CoefficientTable& table)
{
    auto c = CompositionVector::zeros(big_n);
    for (int k = 1; k <= big_n; ++k) {
        c.at(k) = deletion_spectrum(big_n, table, k);
    }
    return c;
}

namespace detail {

// p[n] for n = 0..n_max, each a CoefficientTable of P_n.
inline std::vector<CoefficientTable> path_tables(int n_max)
{
    std::vector<CoefficientTable> p;
    p.reserve(n_max + 1);
    const auto at = [&p](int j, int m, int n) -> BigNat {
        if (n < 0) {
            return 0;
        }
        return p[n].entry(j, m);
    };
    for (int n = 0; n <= n_max; ++n) {
        CoefficientTable t(n);
        if (n >= 2) {
            t.set(2, 1, n - 1);
        }
        for (int j = 3; j <= n; ++j) {
            for (int m = 1; m <= j; ++m) {
                t.set(j, m, at(j, m, n - 1) + at(j - 2, m - 1, n - 2) + at(j - 3, m - 1, n - 3));
            }
        }
        p.push_back(std::move(t));
    }
    return p;
}

}  // namespace detail

/// Bad-component table of P_n from the terminal-vertex recurrence
/// p(j,m,n) = p(j,m,n-1) + p(j-2,m-1,n-2) + p(j-3,m-1,n-3) for j, n >= 3,
/// m >= 1; p(0,0,n) = 1, p(2,1,n) = n-1, and every other j < 3 cell is zero.
inline CoefficientTable path_b_table(int n)
{
    if (n < 0) {
        throw std::invalid_argument("path_b_table: n must be >= 0");
    }
    return detail::path_tables(n).back();
}

/// Bad-component table of C_n. Splitting on whether a fixed vertex lies in a
/// bad edge (2 ways) or a bad 3-path (3 ways) gives
/// c(j,m,n) = p(j,m,n-1) + 2 p(j-2,m-1,n-2) + 3 p(j-3,m-1,n-3).
/// The whole triangle and the whole 4-cycle are themselves bad, so the
/// n = j in {3,4} cells are filled directly.
inline CoefficientTable cycle_b_table(int n)
{
    if (n < 3) {
        throw std::invalid_argument("cycle_b_table: n must be >= 3");
    }
    const auto p = detail::path_tables(n - 1);
    const auto at = [&p](int j, int m, int len) -> BigNat { return len < 0 ? BigNat(0) : p[len].entry(j, m); };
    CoefficientTable c(n);
    c.set(2, 1, n);
    for (int j = 3; j <= n; ++j) {
        for (int m = 1; m <= j; ++m) {
            c.set(j, m, at(j, m, n - 1) + 2 * at(j - 2, m - 1, n - 2) + 3 * at(j - 3, m - 1, n - 3));
        }
    }
    if (n == 3) {
        c.set(3, 1, 1);
    } else if (n == 4) {
        // Whole 4-cycle as one block; the two perfect matchings come from the recurrence.
        c.set(4, 1, 1);
    }
    return c;
}

/// C^k(K_N minus a star with `leaves` leaves):
/// S(N,k) - sum_{j=1}^{leaves} C(leaves,j) S(N-j-1, k-1).
inline BigNat star_deletion_spectrum(int big_n, int leaves, int k)
{
    if (leaves < 1) {
        throw std::invalid_argument("star_deletion_spectrum: need at least one leaf");
    }
    if (leaves + 1 > big_n) {
        throw std::invalid_argument("star_deletion_spectrum: star with " + std::to_string(leaves) +
                                    " leaves does not fit in K_" + std::to_string(big_n));
    }
    BigInt sum = stirling2(big_n, k);
    for (int j = 1; j <= leaves; ++j) {
        sum -= binomial(leaves, j) * stirling2(big_n - j - 1, k - 1);
    }
    if (sum < 0) {
        throw std::logic_error("star_deletion_spectrum: negative total " + to_decimal(sum));
    }
    return sum;
}

/// C^k(K_N minus n disjoint edges): sum_{j=0}^{n} (-1)^j C(n,j) S(N-2j, k-j).
inline BigNat matching_deletion_spectrum(int big_n, int n, int k)
{
    if (n < 0) {
        throw std::invalid_argument("matching_deletion_spectrum: n must be >= 0");
    }
    if (2 * n > big_n) {
        throw std::invalid_argument("matching_deletion_spectrum: 2n = " + std::to_string(2 * n) +
                                    " exceeds N = " + std::to_string(big_n));
    }
    BigInt sum = 0;
    for (int j = 0; j <= n; ++j) {
        const BigInt term = binomial(n, j) * stirling2(big_n - 2 * j, k - j);
        if (j % 2 == 0) {
            sum += term;
        } else {
            sum -= term;
        }
    }
    if (sum < 0) {
        throw std::logic_error("matching_deletion_spectrum: negative total " + to_decimal(sum));
    }
    return sum;
}

/// The alternative reading S(N,k) - sum_{j=1}^{n} (-1)^j C(n,j) S(N-2j, k-j).
/// Kept only so the verification suite can show it disagrees with the oracle.
inline BigInt matching_deletion_alternative(int big_n, int n, int k)
{
    BigInt sum = stirling2(big_n, k);
    for (int j = 1; j <= n; ++j) {
        const BigInt term = binomial(n, j) * stirling2(big_n - 2 * j, k - j);
        if (j % 2 == 0) {
            sum -= term;
        } else {
            sum += term;
        }
    }
    return sum;
}

/// binomial(n-1,k-1) <= C^k <= S(n,k) for every k. Only meaningful for
/// connected graphs; passing connected = false is a precondition violation.
inline bool spectrum_bounds_check(const CompositionVector& c, bool connected)
{
    if (!connected) {
        throw std::invalid_argument("spectrum_bounds_check: bounds hold only for connected graphs");
    }
    const int n = c.vertex_count();
    for (int k = 1; k <= n; ++k) {
        if (c[k] < binomial(n - 1, k - 1) || c[k] > stirling2(n, k)) {
            return false;
        }
    }
    return true;
}

}  // namespace gcomp
