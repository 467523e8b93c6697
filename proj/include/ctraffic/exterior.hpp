#pragma once

// Second exterior power of the free module M = <e^{r}, ..., e^1, e^0> and the
// derivations D1, D2 and Delta11 acting on it.
//
// A basis vector e^i ^ e^j is stored canonically with i < j. Vectors are
// sparse maps from canonical basis elements to exact integer coefficients;
// zero coefficients are never stored.

#include <compare>
#include <cstddef>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>

#include "ctraffic/bigint.hpp"

namespace ctraffic {

/// Canonical basis element e^lo ^ e^hi of the second exterior power, lo < hi.
struct BasisElement {
    int lo = 0;
    int hi = 1;

    friend auto operator<=>(const BasisElement&, const BasisElement&) = default;
};

/// Result of bringing an ordered pair e^i ^ e^j to canonical form.
struct NormalizedTerm {
    int sign = 0;  // +1, -1, or 0 when i == j
    std::optional<BasisElement> basis;

    friend bool operator==(const NormalizedTerm&, const NormalizedTerm&) = default;
};

/// Reorders e^i ^ e^j into canonical form, tracking the antisymmetry sign.
/// Throws std::out_of_range when an index lies outside [0, rank_bound].
inline NormalizedTerm normalize(int i, int j, int rank_bound) {
    if (i < 0 || j < 0 || i > rank_bound || j > rank_bound) {
        throw std::out_of_range("exterior index outside [0, " + std::to_string(rank_bound) +
                                "]: (" + std::to_string(i) + ", " + std::to_string(j) + ")");
    }
    if (i == j) return {0, std::nullopt};
    if (i < j) return {+1, BasisElement{i, j}};
    return {-1, BasisElement{j, i}};
}

/// Element of the second exterior power of a free module with basis
/// e^0, ..., e^{rank_bound}.
class ExtVector {
 public:
    using Terms = std::map<BasisElement, BigInt>;

    explicit ExtVector(int rank_bound) : rank_bound_(rank_bound) {
        if (rank_bound < 1) throw std::out_of_range("rank bound must be at least 1");
    }

    /// The vector e^i ^ e^j, with i and j in either order.
    static ExtVector wedge(int i, int j, int rank_bound) {
        ExtVector v(rank_bound);
        v.add_wedge(i, j, BigInt(1));
        return v;
    }

    int rank_bound() const noexcept { return rank_bound_; }
    const Terms& terms() const noexcept { return terms_; }
    bool is_zero() const noexcept { return terms_.empty(); }
    std::size_t size() const noexcept { return terms_.size(); }

    /// Adds coefficient * (e^i ^ e^j); the pair may be unordered or degenerate.
    void add_wedge(int i, int j, const BigInt& coefficient) {
        const auto term = normalize(i, j, rank_bound_);
        if (term.sign == 0 || coefficient == 0) return;
        add(*term.basis, term.sign > 0 ? coefficient : BigInt(-coefficient));
    }

    void add(const BasisElement& b, const BigInt& coefficient) {
        check_canonical(b);
        if (coefficient == 0) return;
        auto [it, inserted] = terms_.try_emplace(b, coefficient);
        if (!inserted) {
            it->second += coefficient;
            if (it->second == 0) terms_.erase(it);
        }
    }

    BigInt coefficient(const BasisElement& b) const {
        const auto it = terms_.find(b);
        return it == terms_.end() ? BigInt(0) : it->second;
    }

    ExtVector& operator+=(const ExtVector& other) {
        check_same_rank(other);
        for (const auto& [b, c] : other.terms_) add(b, c);
        return *this;
    }

    ExtVector& operator-=(const ExtVector& other) {
        check_same_rank(other);
        for (const auto& [b, c] : other.terms_) add(b, -c);
        return *this;
    }

    ExtVector& operator*=(const BigInt& scalar) {
        if (scalar == 0) {
            terms_.clear();
            return *this;
        }
        for (auto& [b, c] : terms_) c *= scalar;
        return *this;
    }

    friend ExtVector operator+(ExtVector lhs, const ExtVector& rhs) { return lhs += rhs; }
    friend ExtVector operator-(ExtVector lhs, const ExtVector& rhs) { return lhs -= rhs; }
    friend ExtVector operator*(const BigInt& scalar, ExtVector v) { return v *= scalar; }

    friend bool operator==(const ExtVector& lhs, const ExtVector& rhs) {
        return lhs.rank_bound_ == rhs.rank_bound_ && lhs.terms_ == rhs.terms_;
    }

 private:
    void check_canonical(const BasisElement& b) const {
        if (b.lo < 0 || b.lo >= b.hi || b.hi > rank_bound_) {
            throw std::out_of_range("basis element (" + std::to_string(b.lo) + ", " +
                                    std::to_string(b.hi) + ") is not canonical for rank bound " +
                                    std::to_string(rank_bound_));
        }
    }

    void check_same_rank(const ExtVector& other) const {
        if (other.rank_bound_ != rank_bound_) {
            throw std::invalid_argument("exterior vectors over different rank bounds");
        }
    }

    int rank_bound_;
    Terms terms_;
};

namespace detail {

// D1^k e^i = e^{i-k}, or nothing once the index would drop below zero.
inline std::optional<int> shift_down(int index, int k) {
    if (index < k) return std::nullopt;
    return index - k;
}

// Accumulates coefficient * (e^i ^ e^j) when both factors survived.
inline void add_if(ExtVector& out, std::optional<int> i, std::optional<int> j,
                   const BigInt& coefficient) {
    if (i && j) out.add_wedge(*i, *j, coefficient);
}

// Applies a rule given on single basis elements linearly to a whole vector.
template <class BasisRule>
ExtVector apply_linear(const ExtVector& v, BasisRule&& rule) {
    ExtVector out(v.rank_bound());
    for (const auto& [b, c] : v.terms()) rule(out, b.lo, b.hi, c);
    return out;
}

}  // namespace detail

/// First derivative: D1(e^i ^ e^j) = D1 e^i ^ e^j + e^i ^ D1 e^j, with D1 e^0 = 0.
inline ExtVector apply_d1(const ExtVector& v) {
    return detail::apply_linear(v, [](ExtVector& out, int i, int j, const BigInt& c) {
        detail::add_if(out, detail::shift_down(i, 1), j, c);
        detail::add_if(out, i, detail::shift_down(j, 1), c);
    });
}

/// Second derivative: D2(e^i ^ e^j) = D1^2 e^i ^ e^j + D1 e^i ^ D1 e^j + e^i ^ D1^2 e^j.
inline ExtVector apply_d2(const ExtVector& v) {
    return detail::apply_linear(v, [](ExtVector& out, int i, int j, const BigInt& c) {
        detail::add_if(out, detail::shift_down(i, 2), j, c);
        detail::add_if(out, detail::shift_down(i, 1), detail::shift_down(j, 1), c);
        detail::add_if(out, i, detail::shift_down(j, 2), c);
    });
}

/// Delta11(e^i ^ e^j) = D1 e^i ^ D1 e^j; equal to D1^2 - D2 as operators.
inline ExtVector apply_delta11(const ExtVector& v) {
    return detail::apply_linear(v, [](ExtVector& out, int i, int j, const BigInt& c) {
        detail::add_if(out, detail::shift_down(i, 1), detail::shift_down(j, 1), c);
    });
}

inline BigInt coefficient_of(const ExtVector& v, const BasisElement& b) { return v.coefficient(b); }

}  // namespace ctraffic
