#pragma once

// Top intersection numbers kappa_{a,b} = deg(sigma_1^a sigma_2^b) on the
// Grassmannian of lines in P^{n+1}, read off as the coefficient of e^1 ^ e^0 in
// D1^a D2^b (e^{n+1} ^ e^n).
//
// Generator and target are both written in descending order, so the sign
// picked up by canonical storage cancels and kappa comes out nonnegative.

#include <algorithm>
#include <span>
#include <string>
#include <vector>

#include "ctraffic/bigint.hpp"
#include "ctraffic/errors.hpp"
#include "ctraffic/exterior.hpp"
#include "ctraffic/ktable.hpp"

namespace ctraffic {

/// Exponents of sigma_1 (a) and sigma_2 (b) on G_1(P^{n+1}).
struct KappaQuery {
    int a = 0;
    int b = 0;
    int n = 0;

    bool is_top_degree() const noexcept { return a + 2 * b == 2 * n; }
};

enum class OperatorStep { D1, D2 };

namespace detail {

inline void check_query(const KappaQuery& q) {
    if (q.a < 0 || q.b < 0 || q.n < 0) {
        throw InvalidQuery("kappa exponents and n must be nonnegative");
    }
    if (!q.is_top_degree()) {
        throw InvalidQuery("kappa requires a + 2b = 2n, got a=" + std::to_string(q.a) +
                           ", b=" + std::to_string(q.b) + ", n=" + std::to_string(q.n));
    }
}

// e^{n+1} ^ e^n
inline ExtVector top_generator(int n) { return ExtVector::wedge(n + 1, n, n + 1); }

// Coefficient of e^1 ^ e^0, written descending like the generator.
inline BigInt bottom_coefficient(const ExtVector& v) {
    const auto term = normalize(1, 0, v.rank_bound());
    return term.sign * coefficient_of(v, *term.basis);
}

}  // namespace detail

/// kappa_{a,b}, applying the derivations in the given order. The order must
/// contain exactly a D1 steps and b D2 steps.
inline BigInt kappa_in_order(const KappaQuery& q, std::span<const OperatorStep> order) {
    detail::check_query(q);
    const auto d1_steps = std::count(order.begin(), order.end(), OperatorStep::D1);
    const auto d2_steps = std::count(order.begin(), order.end(), OperatorStep::D2);
    if (d1_steps != q.a || d2_steps != q.b) {
        throw InvalidQuery("operator order does not match the exponents of the query");
    }
    ExtVector v = detail::top_generator(q.n);
    for (const auto step : order) {
        v = step == OperatorStep::D1 ? apply_d1(v) : apply_d2(v);
    }
    return detail::bottom_coefficient(v);
}

/// kappa_{a,b}: D2 applied b times, then D1 applied a times.
inline BigInt kappa(const KappaQuery& q) {
    detail::check_query(q);
    std::vector<OperatorStep> order(static_cast<std::size_t>(q.b), OperatorStep::D2);
    order.insert(order.end(), static_cast<std::size_t>(q.a), OperatorStep::D1);
    return kappa_in_order(q, order);
}

/// K(m, n) = kappa_{2m, n-m}.
inline BigInt k_of(int m, int n) {
    if (m < 0 || m > n) {
        throw DomainError("K(m, n) needs 0 <= m <= n, got m=" + std::to_string(m) +
                          ", n=" + std::to_string(n));
    }
    return kappa(KappaQuery{2 * m, n - m, n});
}

/// Whole K-triangle by the operator route. Each row reuses the chain of D2
/// powers of its generator.
inline KTable k_table_operator(int n_max) {
    KTable table(n_max);
    for (int n = 0; n <= n_max; ++n) {
        ExtVector d2_power = detail::top_generator(n);
        for (int b = 0; b <= n; ++b) {
            const int m = n - b;
            ExtVector v = d2_power;
            for (int step = 0; step < 2 * m; ++step) v = apply_d1(v);
            table.at(m, n) = detail::bottom_coefficient(v);
            d2_power = apply_d2(d2_power);
        }
    }
    return table;
}

}  // namespace ctraffic
