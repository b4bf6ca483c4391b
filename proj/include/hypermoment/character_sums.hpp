#pragma once

#include <cmath>
#include <complex>
#include <numeric>
#include <string>
#include <vector>

#include "hypermoment/common.hpp"
#include "hypermoment/cyclotomic.hpp"
#include "hypermoment/fft.hpp"
#include "hypermoment/prime_field.hpp"

namespace hypermoment {

/// Index k of the character omega^k, where omega sends the least primitive
/// root to e^{2 pi i/(p-1)}.  k = 0 is the trivial character, k = (p-1)/2 the
/// quadratic one.
struct CharacterIndex {
    i64 k = 0;
};

inline i64 character_order(const PrimeContext& ctx, i64 k) {
    return (ctx.p - 1) / std::gcd(mod_reduce(k, ctx.p - 1), ctx.p - 1);
}

/// chi(-1) for chi = omega^k; dlog(-1) = (p-1)/2, so this is (-1)^k.
inline int character_at_minus_one(i64 k) { return (k % 2 == 0) ? 1 : -1; }

/// All p-1 Gauss sums g(omega^k), k = 0..p-2, as one arbitrary-length DFT of
/// the sequence t -> zeta_p^{g^t}.
struct GaussTable {
    i64 p = 0;
    std::vector<cplx> values;

    const cplx& at(i64 k) const { return values[static_cast<size_t>(mod_reduce(k, p - 1))]; }
};

inline GaussTable gauss_table(const PrimeContext& ctx) {
    const i64 p = ctx.p;
    std::vector<cplx> h(static_cast<size_t>(p - 1));
    i64 x = 1;
    for (i64 t = 0; t < p - 1; ++t) {
        double ang = 2.0 * std::numbers::pi * static_cast<double>(x) / static_cast<double>(p);
        h[static_cast<size_t>(t)] = cplx(std::cos(ang), std::sin(ang));
        x = mul_mod(x, ctx.g, p);
    }
    return GaussTable{p, czt_dft(h, +1)};
}

/// Direct O(p^2) evaluation, kept as the cross-validation oracle for small p.
inline GaussTable gauss_table_direct(const PrimeContext& ctx) {
    const i64 p = ctx.p;
    std::vector<cplx> vals(static_cast<size_t>(p - 1), cplx(0.0));
    for (i64 k = 0; k < p - 1; ++k) {
        cplx s(0.0);
        i64 x = 1;
        for (i64 t = 0; t < p - 1; ++t) {
            double ang = 2.0 * std::numbers::pi *
                         (static_cast<double>(x) / p + static_cast<double>(mod_reduce(k * t, p - 1)) / (p - 1));
            s += cplx(std::cos(ang), std::sin(ang));
            x = mul_mod(x, ctx.g, p);
        }
        vals[static_cast<size_t>(k)] = s;
    }
    return GaussTable{p, vals};
}

/// Exact Jacobi sum J(omega^k1, omega^k2) in Z[zeta_N], N = lcm of the two
/// character orders.  Direct summation; character values are exact roots of
/// unity, so no floating point is involved.
inline CyclotomicInt jacobi_sum(const PrimeContext& ctx, i64 k1, i64 k2) {
    const i64 p = ctx.p;
    const i64 q1 = ctx.p - 1;
    k1 = mod_reduce(k1, q1);
    k2 = mod_reduce(k2, q1);
    const i64 ord1 = character_order(ctx, k1);
    const i64 ord2 = character_order(ctx, k2);
    const int n = static_cast<int>(std::lcm(ord1, ord2));
    // omega^k(x) = zeta_N^{A d(x)} with A = (k / gcd(k, p-1)) * (N / ord)
    const i64 a1 = (k1 / (q1 / ord1)) * (n / ord1) % n;
    const i64 a2 = (k2 / (q1 / ord2)) * (n / ord2) % n;
    CyclotomicInt j(n);
    for (i64 x = 2; x < p; ++x) {
        i64 e = (a1 * ctx.dlog_of(x) + a2 * ctx.dlog_of(p + 1 - x)) % n;
        j.coeff(e) += 1;
    }
    return j;
}

// ---------------------------------------------------------------------------
// Identity suites for Gauss and Jacobi sums.
// ---------------------------------------------------------------------------

struct GaussIdentityReport {
    double max_dev_trivial = 0.0;       // g(eps) = -1
    double max_dev_reflection = 0.0;    // g(chi) g(chi-bar) = chi(-1) p - (p-1) delta(chi)
    double max_dev_hasse_davenport = 0.0;
    double max_deviation() const {
        return std::max({max_dev_trivial, max_dev_reflection, max_dev_hasse_davenport});
    }
};

/// Verifies g(eps) = -1, the g(chi)g(chi-bar) relation for every k, and the
/// Hasse-Davenport product relation for every m | p-1 with m <= 6 and every
/// psi.  Throws IdentityViolation on the first failure.
inline GaussIdentityReport check_gauss_identities(const PrimeContext& ctx,
                                                  const GaussTable& gauss) {
    const i64 p = ctx.p;
    const double sp = std::sqrt(static_cast<double>(p));
    GaussIdentityReport rep;

    rep.max_dev_trivial = std::abs(gauss.at(0) - cplx(-1.0));
    if (rep.max_dev_trivial > 1e-6)
        throw IdentityViolation("g(eps) != -1 at p = " + std::to_string(p));

    for (i64 k = 0; k < p - 1; ++k) {
        cplx lhs = gauss.at(k) * gauss.at(p - 1 - k);
        double rhs = static_cast<double>(character_at_minus_one(k)) * p - (k == 0 ? p - 1 : 0);
        double dev = std::abs(lhs - cplx(rhs));
        rep.max_dev_reflection = std::max(rep.max_dev_reflection, dev);
        if (dev > 1e-6 * p)
            throw IdentityViolation("g(chi)g(chi-bar) at p = " + std::to_string(p) +
                                    ", k = " + std::to_string(k));
    }

    for (i64 m = 2; m <= 6; ++m) {
        if ((p - 1) % m != 0) continue;
        const i64 step = (p - 1) / m;
        const i64 m_pow = pow_mod(inv_mod(m, p), m, p);  // m^{-m} mod p
        cplx prod_g(1.0);
        for (i64 t = 0; t < m; ++t) prod_g *= gauss.at(t * step);
        for (i64 j = 0; j < p - 1; ++j) {
            cplx lhs(1.0);
            for (i64 t = 0; t < m; ++t) lhs *= gauss.at(j + t * step);
            double ang = 2.0 * std::numbers::pi * static_cast<double>(mod_reduce(j * ctx.dlog_of(m_pow), p - 1)) /
                         static_cast<double>(p - 1);
            cplx rhs = -gauss.at(j * m) * cplx(std::cos(ang), std::sin(ang)) * prod_g;
            double dev = std::abs(lhs - rhs);
            rep.max_dev_hasse_davenport = std::max(rep.max_dev_hasse_davenport, dev);
            if (dev > 1e-6 * std::pow(sp, static_cast<double>(m + 1)))
                throw IdentityViolation("Hasse-Davenport at p = " + std::to_string(p) + ", m = " +
                                        std::to_string(m) + ", k = " + std::to_string(j));
        }
    }
    return rep;
}

struct JacobiIdentityReport {
    i64 pairs_checked = 0;
    double max_dev_gauss_quotient = 0.0;  // the one numeric identity
};

/// Verifies the six classical Jacobi-sum identities over all character pairs
/// of order <= max_order: exactly in the cyclotomic ring where both sides are
/// cyclotomic, numerically where Gauss sums enter.
inline JacobiIdentityReport check_jacobi_identities(const PrimeContext& ctx,
                                                    const GaussTable& gauss,
                                                    i64 max_order = 12) {
    const i64 p = ctx.p;
    const i64 q1 = p - 1;
    const i64 phi_k = q1 / 2;  // index of the quadratic character
    JacobiIdentityReport rep;

    std::vector<i64> ks;
    for (i64 k = 0; k < q1; ++k)
        if (character_order(ctx, k) <= max_order) ks.push_back(k);

    auto fail = [&](const char* which, i64 k1, i64 k2) {
        throw IdentityViolation(std::string(which) + " at p = " + std::to_string(p) + ", (k1, k2) = (" +
                                std::to_string(k1) + ", " + std::to_string(k2) + ")");
    };

    for (i64 k1 : ks) {
        // (2) J(chi, eps) = -1 + (q-1) delta(chi)
        CyclotomicInt j_eps = jacobi_sum(ctx, k1, 0);
        i64 expected2 = -1 + (k1 == 0 ? q1 : 0);
        if (!(j_eps == CyclotomicInt(j_eps.conductor(), expected2))) fail("J(chi,eps)", k1, 0);

        // (3) J(chi, chi-bar) = -chi(-1) + (q-1) delta(chi)
        CyclotomicInt j_inv = jacobi_sum(ctx, k1, q1 - k1);
        i64 expected3 = -character_at_minus_one(k1) + (k1 == 0 ? q1 : 0);
        if (!(j_inv == CyclotomicInt(j_inv.conductor(), expected3))) fail("J(chi,chi-bar)", k1, q1 - k1);

        // (4) J(chi, chi) = chi-bar(4) J(chi, phi), for nontrivial chi
        if (k1 != 0) {
            CyclotomicInt lhs = jacobi_sum(ctx, k1, k1);
            CyclotomicInt j_phi = jacobi_sum(ctx, k1, phi_k);
            i64 ord = character_order(ctx, k1);
            int n = static_cast<int>(std::lcm(std::lcm(ord, character_order(ctx, phi_k)), ord));
            i64 a = (k1 / (q1 / ord)) * (n / ord) % n;
            CyclotomicInt mono = CyclotomicInt::zeta_power(n, -a * ctx.dlog_of(4));
            if (!(lhs == j_phi.lifted(n) * mono)) fail("J(chi,chi) = chi-bar(4) J(chi,phi)", k1, k1);
        }

        for (i64 k2 : ks) {
            CyclotomicInt j = jacobi_sum(ctx, k1, k2);
            ++rep.pairs_checked;

            // (1) J(chi, psi) = g(chi) g(psi) / g(chi psi) + (q-1) psi(-1) delta(chi psi)
            {
                cplx rhs = gauss.at(k1) * gauss.at(k2) / gauss.at(k1 + k2);
                if (mod_reduce(k1 + k2, q1) == 0)
                    rhs += static_cast<double>(q1 * character_at_minus_one(k2));
                double dev = std::abs(j.embed() - rhs);
                rep.max_dev_gauss_quotient = std::max(rep.max_dev_gauss_quotient, dev);
                if (dev > 1e-6 * (1.0 + std::abs(rhs))) fail("J = gg/g", k1, k2);
            }

            // (5) J(chi, psi-bar) = chi(-1) J(chi, psi chi-bar)
            {
                CyclotomicInt lhs = jacobi_sum(ctx, k1, q1 - k2);
                CyclotomicInt rhs = jacobi_sum(ctx, k1, k2 - k1) * static_cast<i64>(character_at_minus_one(k1));
                if (!(lhs == rhs)) fail("J(chi,psi-bar) = chi(-1) J(chi, psi chi-bar)", k1, k2);
            }

            // (6) |J(chi, psi)| = sqrt(q) when chi, psi, chi psi are nontrivial;
            // checked exactly as J(chi, psi) J(chi-bar, psi-bar) = q.
            if (k1 != 0 && k2 != 0 && mod_reduce(k1 + k2, q1) != 0) {
                CyclotomicInt jbar = jacobi_sum(ctx, q1 - k1, q1 - k2);
                if (!(j * jbar == CyclotomicInt(j.conductor(), p))) fail("|J|^2 = q", k1, k2);
            }
        }
    }
    return rep;
}

}  // namespace hypermoment
