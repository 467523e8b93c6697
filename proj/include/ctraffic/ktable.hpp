#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "ctraffic/bigint.hpp"
#include "ctraffic/errors.hpp"

namespace ctraffic {

/// Triangular table of K(m, n) = kappa_{2m, n-m} for 0 <= m <= n <= n_max.
class KTable {
 public:
    explicit KTable(int n_max) : n_max_(n_max) {
        if (n_max < 0) throw DomainError("n_max must be nonnegative");
        rows_.reserve(static_cast<std::size_t>(n_max) + 1);
        for (int n = 0; n <= n_max; ++n) rows_.emplace_back(static_cast<std::size_t>(n) + 1);
    }

    int n_max() const noexcept { return n_max_; }

    const BigInt& at(int m, int n) const { return rows_[index(m, n)][static_cast<std::size_t>(m)]; }
    BigInt& at(int m, int n) { return rows_[index(m, n)][static_cast<std::size_t>(m)]; }

    const std::vector<BigInt>& row(int n) const { return rows_[index(0, n)]; }

    friend bool operator==(const KTable&, const KTable&) = default;

 private:
    std::size_t index(int m, int n) const {
        if (n < 0 || n > n_max_ || m < 0 || m > n) {
            throw DomainError("K-table cell (" + std::to_string(m) + ", " + std::to_string(n) +
                              ") outside 0 <= m <= n <= " + std::to_string(n_max_));
        }
        return static_cast<std::size_t>(n);
    }

    int n_max_;
    std::vector<std::vector<BigInt>> rows_;
};

}  // namespace ctraffic
