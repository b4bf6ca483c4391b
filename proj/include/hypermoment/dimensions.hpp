#pragma once

#include <numeric>

#include "hypermoment/common.hpp"
#include "hypermoment/prime_field.hpp"

namespace hypermoment {

namespace detail {

inline i64 euler_phi(i64 n) {
    i64 r = n;
    for (i64 q : prime_factors(n)) r = r / q * (q - 1);
    return r;
}

struct Gamma0Data {
    i64 index;     // [SL2(Z) : Gamma_0(N)]
    i64 nu2, nu3;  // elliptic point counts
    i64 cusps;
    i64 genus;
};

inline Gamma0Data gamma0_data(i64 n) {
    Gamma0Data d{};
    d.index = n;
    for (i64 q : prime_factors(n)) d.index = d.index / q * (q + 1);
    // elliptic point counts, by direct solution counting mod N
    d.nu2 = d.nu3 = 0;
    for (i64 x = 0; x < n; ++x) {
        if ((x * x + 1) % n == 0) ++d.nu2;
        if ((x * x + x + 1) % n == 0) ++d.nu3;
    }
    d.cusps = 0;
    for (i64 e = 1; e <= n; ++e)
        if (n % e == 0) d.cusps += euler_phi(std::gcd(e, n / e));
    i64 twelve_g = 12 + d.index - 3 * d.nu2 - 4 * d.nu3 - 6 * d.cusps;
    if (twelve_g % 12 != 0) throw Error("non-integral genus (bad modular data)");
    d.genus = twelve_g / 12;
    return d;
}

}  // namespace detail

/// dim S_k(Gamma_0(N)) for even k >= 2 (0 for odd k, since -I is in the group).
inline i64 dim_cusp_forms_gamma0(i64 n, i64 k) {
    if (k < 2 || k % 2 != 0) return 0;
    detail::Gamma0Data d = detail::gamma0_data(n);
    if (k == 2) return d.genus;
    return (k - 1) * (d.genus - 1) + (k / 4) * d.nu2 + (k / 3) * d.nu3 + (k / 2 - 1) * d.cusps;
}

/// dim S_k(Gamma_1(N)) for N in {3, 4} and k >= 2.  These groups do not
/// contain -I; period-2 elliptic points cannot occur, X_1(3) has one
/// period-3 point and two regular cusps, X_1(4) has three cusps of which the
/// one at 1/2 is irregular.  Both curves have genus 0.
inline i64 dim_cusp_forms_gamma1(i64 n, i64 k) {
    if (n != 3 && n != 4) throw Error("dim_cusp_forms_gamma1 supports N = 3, 4 only");
    if (k < 2) return 0;
    if (k == 2) return 0;  // genus of X_1(3), X_1(4)
    const i64 genus = 0;
    const i64 nu3 = (n == 3) ? 1 : 0;
    const i64 cusps_regular = 2;
    const i64 cusps_irregular = (n == 4) ? 1 : 0;
    i64 dim = (k - 1) * (genus - 1) + nu3 * (k / 3);
    if (k % 2 == 0)
        dim += (k / 2 - 1) * (cusps_regular + cusps_irregular);
    else
        dim += (k - 2) * cusps_regular / 2 + (k - 1) * cusps_irregular / 2;
    return dim;
}

}  // namespace hypermoment
