#pragma once

#include <cstdint>
#include <vector>

#include "hypermoment/common.hpp"

namespace hypermoment {

/// Deterministic Miller-Rabin, valid for all n < 2^63 with the fixed
/// witness set below.
inline bool is_prime(i64 n) {
    if (n < 2) return false;
    for (i64 q : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
        if (n == q) return true;
        if (n % q == 0) return false;
    }
    i64 d = n - 1;
    int r = 0;
    while ((d & 1) == 0) { d >>= 1; ++r; }
    for (i64 a : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
        i64 x = pow_mod(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool composite = true;
        for (int i = 1; i < r; ++i) {
            x = mul_mod(x, x, n);
            if (x == n - 1) { composite = false; break; }
        }
        if (composite) return false;
    }
    return true;
}

inline std::vector<i64> prime_factors(i64 n) {
    std::vector<i64> fs;
    for (i64 q = 2; q * q <= n; ++q) {
        if (n % q == 0) {
            fs.push_back(q);
            while (n % q == 0) n /= q;
        }
    }
    if (n > 1) fs.push_back(n);
    return fs;
}

inline std::vector<i64> primes_in(i64 lo, i64 hi) {
    std::vector<i64> ps;
    for (i64 n = lo; n <= hi; ++n)
        if (is_prime(n)) ps.push_back(n);
    return ps;
}

/// Least generator of (Z/p)^*, found by ascending trial with order checks
/// against the factorization of p-1.  Deterministic, so contexts are
/// reproducible across runs.
inline i64 least_primitive_root(i64 p) {
    std::vector<i64> fs = prime_factors(p - 1);
    for (i64 g = 2; g < p; ++g) {
        bool ok = true;
        for (i64 q : fs) {
            if (pow_mod(g, (p - 1) / q, p) == 1) { ok = false; break; }
        }
        if (ok) return g;
    }
    throw Error("no primitive root found (unreachable for prime p)");
}

/// Shared arithmetic context for one odd prime p: least primitive root,
/// full discrete-log table, and the quadratic character as a lookup table.
/// Immutable after construction; safe to share across threads.
struct PrimeContext {
    i64 p = 0;
    i64 g = 0;
    std::vector<std::int32_t> dlog;   // dlog[x] = t with g^t = x, for 1 <= x < p
    std::vector<std::int8_t> legendre;  // legendre[x] in {-1, 0, +1}

    i64 dlog_of(i64 x) const { return dlog[static_cast<size_t>(mod_reduce(x, p))]; }
    int legendre_of(i64 x) const { return legendre[static_cast<size_t>(mod_reduce(x, p))]; }
};

inline PrimeContext build_context(i64 p) {
    if (p == 2) throw EvenPrime();
    if (!is_prime(p)) throw NotPrime(p);
    PrimeContext ctx;
    ctx.p = p;
    ctx.g = least_primitive_root(p);
    ctx.dlog.assign(static_cast<size_t>(p), -1);
    ctx.legendre.assign(static_cast<size_t>(p), 0);
    i64 x = 1;
    for (i64 t = 0; t < p - 1; ++t) {
        ctx.dlog[static_cast<size_t>(x)] = static_cast<std::int32_t>(t);
        ctx.legendre[static_cast<size_t>(x)] = (t % 2 == 0) ? 1 : -1;
        x = mul_mod(x, ctx.g, p);
    }
    return ctx;
}

/// Quadratic character phi(x), with phi(0) = 0.
inline int legendre_symbol(const PrimeContext& ctx, i64 x) { return ctx.legendre_of(x); }

/// Square root mod p when it exists: exhaustive scan below 10^3,
/// Tonelli-Shanks above.  Returns -1 for non-residues.
inline i64 sqrt_mod(const PrimeContext& ctx, i64 a) {
    i64 p = ctx.p;
    a = mod_reduce(a, p);
    if (a == 0) return 0;
    if (ctx.legendre_of(a) != 1) return -1;
    if (p < 1000) {
        for (i64 r = 1; r < p; ++r)
            if (mul_mod(r, r, p) == a) return r;
        return -1;
    }
    // Tonelli-Shanks
    i64 q = p - 1;
    int s = 0;
    while ((q & 1) == 0) { q >>= 1; ++s; }
    i64 z = 2;
    while (ctx.legendre_of(z) != -1) ++z;
    i64 m = s;
    i64 c = pow_mod(z, q, p);
    i64 t = pow_mod(a, q, p);
    i64 r = pow_mod(a, (q + 1) / 2, p);
    while (t != 1) {
        i64 i = 0, tt = t;
        while (tt != 1) { tt = mul_mod(tt, tt, p); ++i; }
        i64 b = pow_mod(c, i64(1) << (m - i - 1), p);
        m = i;
        c = mul_mod(b, b, p);
        t = mul_mod(t, c, p);
        r = mul_mod(r, b, p);
    }
    return r;
}

}  // namespace hypermoment
