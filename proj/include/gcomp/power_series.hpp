#pragma once

// Truncated formal power series in x, y, z with exact integer coefficients.
// Exponents are (n, m, j) for (x, y, z); truncation is by the x-degree n, and
// every stored monomial satisfies m <= n and j <= n.

#include "gcomp/combinatorics.hpp"

#include <compare>
#include <map>
#include <ostream>
#include <stdexcept>
#include <string>

namespace gcomp {

struct Monomial {
    int n = 0;  // x
    int m = 0;  // y
    int j = 0;  // z

    auto operator<=>(const Monomial&) const = default;
};

class TruncatedSeries {
public:
    explicit TruncatedSeries(int order) : order_(order)
    {
        if (order < 0) {
            throw std::invalid_argument("TruncatedSeries: negative order");
        }
    }

    static TruncatedSeries constant(int order, BigInt value)
    {
        TruncatedSeries s(order);
        s.add(Monomial{}, std::move(value));
        return s;
    }

    /// `value * x^n y^m z^j`; terms above the order are dropped.
    static TruncatedSeries term(int order, BigInt value, int n, int m, int j)
    {
        TruncatedSeries s(order);
        s.add(Monomial{n, m, j}, std::move(value));
        return s;
    }

    int order() const { return order_; }

    const std::map<Monomial, BigInt>& terms() const { return coeffs_; }

    /// Adds `value` at the monomial, dropping it if n exceeds the order.
    void add(const Monomial& mono, const BigInt& value)
    {
        if (mono.n < 0 || mono.m < 0 || mono.j < 0 || mono.m > mono.n || mono.j > mono.n) {
            throw std::invalid_argument("TruncatedSeries: monomial (" + std::to_string(mono.n) + "," +
                                        std::to_string(mono.m) + "," + std::to_string(mono.j) +
                                        ") violates m <= n, j <= n");
        }
        if (mono.n > order_ || value == 0) {
            return;
        }
        auto [it, inserted] = coeffs_.try_emplace(mono, value);
        if (!inserted) {
            it->second += value;
            if (it->second == 0) {
                coeffs_.erase(it);
            }
        }
    }

    BigInt coefficient(int n, int m, int j) const
    {
        if (n > order_) {
            throw std::out_of_range("coefficient: x-degree " + std::to_string(n) + " is beyond order " +
                                    std::to_string(order_));
        }
        auto it = coeffs_.find(Monomial{n, m, j});
        return it == coeffs_.end() ? BigInt(0) : it->second;
    }

    TruncatedSeries& operator+=(const TruncatedSeries& other)
    {
        require_same_order(other);
        for (const auto& [mono, value] : other.coeffs_) {
            add(mono, value);
        }
        return *this;
    }

    TruncatedSeries& operator-=(const TruncatedSeries& other)
    {
        require_same_order(other);
        for (const auto& [mono, value] : other.coeffs_) {
            add(mono, -value);
        }
        return *this;
    }

    friend TruncatedSeries operator+(TruncatedSeries a, const TruncatedSeries& b) { return a += b; }
    friend TruncatedSeries operator-(TruncatedSeries a, const TruncatedSeries& b) { return a -= b; }

    bool operator==(const TruncatedSeries&) const = default;

    void require_same_order(const TruncatedSeries& other) const
    {
        if (order_ != other.order_) {
            throw std::invalid_argument("TruncatedSeries: order mismatch (" + std::to_string(order_) + " vs " +
                                        std::to_string(other.order_) + ")");
        }
    }

private:
    int order_;
    std::map<Monomial, BigInt> coeffs_;
};

/// Cauchy product, discarding x-degree above the common order.
inline TruncatedSeries series_mul(const TruncatedSeries& a, const TruncatedSeries& b)
{
    a.require_same_order(b);
    TruncatedSeries out(a.order());
    for (const auto& [ma, va] : a.terms()) {
        for (const auto& [mb, vb] : b.terms()) {
            if (ma.n + mb.n > a.order()) {
                continue;
            }
            out.add(Monomial{ma.n + mb.n, ma.m + mb.m, ma.j + mb.j}, va * vb);
        }
    }
    return out;
}

inline TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b) { return series_mul(a, b); }

/// 1 / (1 - u) as the geometric sum of powers of u, where a = 1 - u.
/// Requires a constant term of exactly 1.
inline TruncatedSeries series_reciprocal(const TruncatedSeries& a)
{
    if (a.coefficient(0, 0, 0) != 1) {
        throw std::invalid_argument("series_reciprocal: constant term must be 1");
    }
    const TruncatedSeries u = TruncatedSeries::constant(a.order(), 1) - a;
    TruncatedSeries result = TruncatedSeries::constant(a.order(), 1);
    TruncatedSeries power = result;
    // u has no x-free terms, so u^t vanishes beyond t = order.
    for (int t = 1; t <= a.order(); ++t) {
        power = series_mul(power, u);
        if (power.terms().empty()) {
            break;
        }
        result += power;
    }
    return result;
}

/// 1 - x + x^2 y z^2 + x^3 y z^3, the common denominator.
inline TruncatedSeries path_denominator(int order)
{
    TruncatedSeries d = TruncatedSeries::constant(order, 1);
    d.add({1, 0, 0}, -1);
    d.add({2, 1, 2}, 1);
    d.add({3, 1, 3}, 1);
    return d;
}

/// Generating function of (-1)^m p(j,m,n): 1 / (1 - x + x^2yz^2 + x^3yz^3).
inline TruncatedSeries path_series(int order)
{
    return series_reciprocal(path_denominator(order));
}

/// Generating function of (-1)^m c(j,m,n):
/// 1 + x^2yz^2 + 2x^3yz^3 - x^4yz^4 + (x - 2x^2yz^2 - 3x^3yz^3) / (1 - x + x^2yz^2 + x^3yz^3).
inline TruncatedSeries cycle_series(int order)
{
    TruncatedSeries numerator(order);
    numerator.add({1, 0, 0}, 1);
    numerator.add({2, 1, 2}, -2);
    numerator.add({3, 1, 3}, -3);

    TruncatedSeries result = TruncatedSeries::constant(order, 1);
    result.add({2, 1, 2}, 1);
    result.add({3, 1, 3}, 2);
    result.add({4, 1, 4}, -1);
    result += series_mul(numerator, path_series(order));
    return result;
}

inline BigInt coefficient(const TruncatedSeries& s, int n, int m, int j) { return s.coefficient(n, m, j); }

/// CSV dump: header then `n,m,j,coefficient` rows in lexicographic order.
inline void write_series_csv(std::ostream& out, const TruncatedSeries& s)
{
    out << "n,m,j,coefficient\n";
    for (const auto& [mono, value] : s.terms()) {
        out << mono.n << ',' << mono.m << ',' << mono.j << ',' << to_decimal(value) << '\n';
    }
}

}  // namespace gcomp
