#pragma once

#include <utility>
#include <vector>

#include "hypermoment/common.hpp"

namespace hypermoment {

/// A product prod_i eta(delta_i tau)^{r_i}.  The handful used here span
/// one-dimensional cusp-form spaces, so their q-expansion coefficients are
/// Hecke eigenvalues and serve as an oracle for the trace formulas.
struct EtaProduct {
    std::vector<std::pair<i64, i64>> factors;  // (scale delta, exponent r)

    i64 weight_times_two() const {
        i64 w = 0;
        for (auto [d, r] : factors) w += r;
        return w;
    }
    /// Order of vanishing at infinity, sum delta*r/24; must be a positive integer.
    i64 leading_exponent() const {
        i64 s = 0;
        for (auto [d, r] : factors) s += d * r;
        if (s % 24 != 0) throw Error("eta product with fractional leading exponent");
        return s / 24;
    }
};

namespace detail {

/// Euler product prod_{n>=1} (1 - q^{delta n}) truncated past q^terms,
/// via the pentagonal-number theorem.
inline std::vector<i64> euler_series(i64 delta, i64 terms) {
    std::vector<i64> e(static_cast<size_t>(terms) + 1, 0);
    e[0] = 1;
    for (i64 k = 1;; ++k) {
        i64 g1 = delta * k * (3 * k - 1) / 2;
        i64 g2 = delta * k * (3 * k + 1) / 2;
        if (g1 > terms && g2 > terms) break;
        i64 sign = (k % 2 == 0) ? 1 : -1;
        if (g1 <= terms) e[static_cast<size_t>(g1)] += sign;
        if (g2 <= terms) e[static_cast<size_t>(g2)] += sign;
    }
    return e;
}

inline std::vector<i64> series_mul(const std::vector<i64>& a, const std::vector<i64>& b,
                                   i64 terms) {
    std::vector<i64> c(static_cast<size_t>(terms) + 1, 0);
    for (size_t i = 0; i < a.size() && static_cast<i64>(i) <= terms; ++i) {
        if (a[i] == 0) continue;
        size_t jmax = std::min(b.size(), static_cast<size_t>(terms) + 1 - i);
        for (size_t j = 0; j < jmax; ++j) c[i + j] += a[i] * b[j];
    }
    return c;
}

}  // namespace detail

/// Integer q-expansion of the product, as coefficients of q^0..q^terms
/// (including the leading q-power shift).
inline std::vector<i64> eta_expansion(const EtaProduct& prod, i64 terms) {
    const i64 lead = prod.leading_exponent();
    std::vector<i64> s(static_cast<size_t>(terms) + 1, 0);
    s[0] = 1;
    for (auto [delta, r] : prod.factors) {
        std::vector<i64> e = detail::euler_series(delta, terms);
        for (i64 i = 0; i < r; ++i) s = detail::series_mul(s, e, terms);
    }
    std::vector<i64> out(static_cast<size_t>(terms) + 1, 0);
    for (i64 n = lead; n <= terms; ++n) out[static_cast<size_t>(n)] = s[static_cast<size_t>(n - lead)];
    return out;
}

/// Coefficient of q^p; the Hecke eigenvalue a_p when the product spans a
/// one-dimensional space.  Requires the expansion to reach past p.
inline i64 eta_ap(const EtaProduct& prod, i64 p, i64 terms) {
    if (terms <= p) throw InsufficientTerms();
    return eta_expansion(prod, terms)[static_cast<size_t>(p)];
}

// The eigenforms used as trace oracles.
inline EtaProduct eta_level3_weight6() { return {{{1, 6}, {3, 6}}}; }    // S_6(Gamma_0(3))
inline EtaProduct eta_level2_weight8() { return {{{1, 8}, {2, 8}}}; }    // S_8(Gamma_0(2))
inline EtaProduct eta_level4_weight6() { return {{{2, 12}}}; }           // S_6(Gamma_0(4))
inline EtaProduct eta_level8_weight4() { return {{{2, 4}, {4, 4}}}; }    // S_4(Gamma_0(8))
inline EtaProduct eta_level4_weight5() { return {{{1, 4}, {2, 2}, {4, 4}}}; }  // S_5(Gamma_1(4)), CM
inline EtaProduct eta_discriminant() { return {{{1, 24}}}; }             // S_12(SL_2(Z))

}  // namespace hypermoment
