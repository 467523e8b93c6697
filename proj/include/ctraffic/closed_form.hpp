#pragma once

// Closed-form and recursive evaluators for K(m, n) = kappa_{2m, n-m}:
// Catalan numbers, the row recursion K(m, n) = K(m+1, n) - K(m, n-1) seeded by
// the Catalan diagonal, the alternating Catalan sum, and the double sum.

#include <cstddef>
#include <mutex>
#include <shared_mutex>
#include <stdexcept>
#include <string>
#include <vector>

#include "ctraffic/bigint.hpp"
#include "ctraffic/errors.hpp"
#include "ctraffic/ktable.hpp"

namespace ctraffic {

/// Binomial coefficient, zero when k < 0 or k > n.
inline BigInt binomial(int n, int k) {
    if (n < 0 || k < 0 || k > n) return 0;
    if (k > n - k) k = n - k;
    BigInt result = 1;
    for (int i = 1; i <= k; ++i) {
        result *= n - k + i;
        result /= i;
    }
    return result;
}

inline BigInt factorial(int n) {
    if (n < 0) throw DomainError("factorial of negative integer");
    BigInt result = 1;
    for (int i = 2; i <= n; ++i) result *= i;
    return result;
}

/// Append-only cache of Catalan numbers, safe for concurrent use.
class CatalanCache {
 public:
    BigInt get(int n) {
        if (n < 0) throw DomainError("catalan index must be nonnegative");
        const auto index = static_cast<std::size_t>(n);
        {
            std::shared_lock lock(mutex_);
            if (index < values_.size()) return values_[index];
        }
        std::unique_lock lock(mutex_);
        while (values_.size() <= index) {
            const int k = static_cast<int>(values_.size());
            BigInt quotient;
            BigInt remainder;
            boost::multiprecision::divide_qr(binomial(2 * k, k), BigInt(k + 1), quotient, remainder);
            if (remainder != 0) {
                throw std::logic_error("binomial(2n, n) not divisible by n + 1 at n = " +
                                       std::to_string(k));
            }
            values_.push_back(std::move(quotient));
        }
        return values_[index];
    }

 private:
    std::shared_mutex mutex_;
    std::vector<BigInt> values_;
};

/// C_n = binomial(2n, n) / (n + 1).
inline BigInt catalan(int n) {
    static CatalanCache cache;
    return cache.get(n);
}

namespace detail {

inline void check_cell(int m, int n) {
    if (m < 0 || m > n) {
        throw DomainError("K(m, n) needs 0 <= m <= n, got m=" + std::to_string(m) +
                          ", n=" + std::to_string(n));
    }
}

}  // namespace detail

/// K-triangle from the recursion alone: K(n, n) = C_n, then m descending.
inline KTable k_table_recursive(int n_max) {
    KTable table(n_max);
    for (int n = 0; n <= n_max; ++n) {
        table.at(n, n) = catalan(n);
        for (int m = n - 1; m >= 0; --m) {
            table.at(m, n) = table.at(m + 1, n) - table.at(m, n - 1);
        }
    }
    return table;
}

inline BigInt k_recursive(int m, int n) {
    detail::check_cell(m, n);
    return k_table_recursive(n).at(m, n);
}

/// sum_{i=0}^{n-m} (-1)^i binomial(n-m, i) C_{n-i}
inline BigInt kappa_simplified(int m, int n) {
    detail::check_cell(m, n);
    BigInt sum = 0;
    for (int i = 0; i <= n - m; ++i) {
        const BigInt term = binomial(n - m, i) * catalan(n - i);
        if (i % 2 == 0) {
            sum += term;
        } else {
            sum -= term;
        }
    }
    return sum;
}

/// Double sum over i in [0, n-m], j in [0, 2m] of
///   binomial(2m, j) (n-m)! (m+n-2j-3i+1) / (i! (n-j-2i+1)! (i+j-m)!),
/// where a summand with a negative factorial argument contributes zero.
/// Summands are accumulated as exact rationals; a non-integer total throws.
inline BigInt kappa_double_sum(int m, int n) {
    detail::check_cell(m, n);
    const BigInt outer = factorial(n - m);
    Rational sum = 0;
    for (int i = 0; i <= n - m; ++i) {
        for (int j = 0; j <= 2 * m; ++j) {
            const int upper = n - j - 2 * i + 1;
            const int lower = i + j - m;
            if (upper < 0 || lower < 0) continue;
            const BigInt numerator = binomial(2 * m, j) * outer * (m + n - 2 * j - 3 * i + 1);
            const BigInt denominator = factorial(i) * factorial(upper) * factorial(lower);
            sum += Rational(numerator, denominator);
        }
    }
    if (denominator(sum) != 1) {
        throw std::logic_error("double sum is not an integer at m=" + std::to_string(m) +
                               ", n=" + std::to_string(n));
    }
    return numerator(sum);
}

inline KTable k_table_simplified(int n_max) {
    KTable table(n_max);
    for (int n = 0; n <= n_max; ++n)
        for (int m = 0; m <= n; ++m) table.at(m, n) = kappa_simplified(m, n);
    return table;
}

inline KTable k_table_double_sum(int n_max) {
    KTable table(n_max);
    for (int n = 0; n <= n_max; ++n)
        for (int m = 0; m <= n; ++m) table.at(m, n) = kappa_double_sum(m, n);
    return table;
}

}  // namespace ctraffic
