#pragma once

#include <array>
#include <string>
#include <vector>

#include "hypermoment/common.hpp"
#include "hypermoment/prime_field.hpp"

namespace hypermoment {

/// The elliptic-curve families used as exact evaluation oracles:
///   Legendre (d=2)  y^2 = x (x - 1) (x - lambda)
///   d = 3           y^2 + x y + (lambda/27) y = x^3
///   d = 4           y^2 = x (x^2 + x + lambda/4)
///   d = 6           y^2 + x y = x^3 - lambda/432
///   Clausen         y^2 = (x - 1) (x^2 + lambda)
enum class CurveFamily { Legendre, D3, D4, D6, Clausen };

inline const char* curve_family_name(CurveFamily f) {
    switch (f) {
        case CurveFamily::Legendre: return "Legendre";
        case CurveFamily::D3: return "d3";
        case CurveFamily::D4: return "d4";
        case CurveFamily::D6: return "d6";
        case CurveFamily::Clausen: return "Clausen";
    }
    return "?";
}

inline bool is_singular_lambda(CurveFamily f, i64 lambda, i64 p) {
    lambda = mod_reduce(lambda, p);
    if (f == CurveFamily::Clausen) return lambda == 0 || lambda == p - 1;
    return lambda == 0 || lambda == 1;
}

/// |E(F_p)| including the point at infinity, via p + 1 + sum_x phi(f(x)).
/// The forms with an xy (or y) term are first rewritten via Y = 2y + a1 x + a3,
/// a bijection on points for odd p.
inline i64 count_points(CurveFamily f, i64 lambda, const PrimeContext& ctx) {
    const i64 p = ctx.p;
    if (p < 5) throw SmallPrime(p);
    lambda = mod_reduce(lambda, p);
    if (is_singular_lambda(f, lambda, p)) throw SingularLambda(lambda);

    i64 sum = 0;
    switch (f) {
        case CurveFamily::Legendre: {
            for (i64 x = 0; x < p; ++x) {
                i64 v = mul_mod(mul_mod(x, x - 1 + p, p), mod_reduce(x - lambda, p), p);
                sum += ctx.legendre[static_cast<size_t>(v)];
            }
            break;
        }
        case CurveFamily::D3: {
            // Y^2 = 4 x^3 + (x + c)^2, c = lambda / 27
            const i64 c = mul_mod(lambda, inv_mod(27, p), p);
            for (i64 x = 0; x < p; ++x) {
                i64 t = mod_reduce(x + c, p);
                i64 v = mod_reduce(4 * mul_mod(mul_mod(x, x, p), x, p) + mul_mod(t, t, p), p);
                sum += ctx.legendre[static_cast<size_t>(v)];
            }
            break;
        }
        case CurveFamily::D4: {
            const i64 c = mul_mod(lambda, inv_mod(4, p), p);
            for (i64 x = 0; x < p; ++x) {
                i64 v = mul_mod(x, mod_reduce(mul_mod(x, x, p) + x + c, p), p);
                sum += ctx.legendre[static_cast<size_t>(v)];
            }
            break;
        }
        case CurveFamily::D6: {
            // Y^2 = 4 x^3 + x^2 - 4c, c = lambda / 432
            const i64 c = mul_mod(lambda, inv_mod(432 % p, p), p);
            for (i64 x = 0; x < p; ++x) {
                i64 v = mod_reduce(4 * mul_mod(mul_mod(x, x, p), x, p) + mul_mod(x, x, p) - 4 * c + 8 * p, p);
                sum += ctx.legendre[static_cast<size_t>(v)];
            }
            break;
        }
        case CurveFamily::Clausen: {
            for (i64 x = 0; x < p; ++x) {
                i64 v = mul_mod(mod_reduce(x - 1 + p, p), mod_reduce(mul_mod(x, x, p) + lambda, p), p);
                sum += ctx.legendre[static_cast<size_t>(v)];
            }
            break;
        }
    }
    return p + 1 + sum;
}

/// Trace of Frobenius a = p + 1 - |E(F_p)|; satisfies |a| <= 2 sqrt(p).
inline i64 frobenius_trace(CurveFamily f, i64 lambda, const PrimeContext& ctx) {
    return ctx.p + 1 - count_points(f, lambda, ctx);
}

/// All Frobenius traces of one family at once (index = lambda; singular
/// lambdas are left at the sentinel INT64_MIN).  One pass over (lambda, x)
/// with f(x) expanded as a polynomial in lambda, which keeps the sweep at
/// two multiplications per cell.
inline std::vector<i64> frobenius_trace_table(CurveFamily f, const PrimeContext& ctx) {
    const i64 p = ctx.p;
    if (p < 5) throw SmallPrime(p);
    std::vector<i64> px(static_cast<size_t>(p)), qx(static_cast<size_t>(p)), rx(static_cast<size_t>(p), 0);
    switch (f) {
        case CurveFamily::Legendre:
            for (i64 x = 0; x < p; ++x) {
                i64 x2x = mul_mod(x, x - 1 + p, p);  // x^2 - x
                px[static_cast<size_t>(x)] = mul_mod(x2x, x, p);
                qx[static_cast<size_t>(x)] = mod_reduce(-x2x, p);
            }
            break;
        case CurveFamily::D3: {
            const i64 u = inv_mod(27, p);
            for (i64 x = 0; x < p; ++x) {
                i64 x2 = mul_mod(x, x, p);
                px[static_cast<size_t>(x)] = mod_reduce(4 * mul_mod(x2, x, p) + x2, p);
                qx[static_cast<size_t>(x)] = mod_reduce(2 * mul_mod(x, u, p), p);
                rx[static_cast<size_t>(x)] = mul_mod(u, u, p);
            }
            break;
        }
        case CurveFamily::D4: {
            const i64 u = inv_mod(4, p);
            for (i64 x = 0; x < p; ++x) {
                i64 x2 = mul_mod(x, x, p);
                px[static_cast<size_t>(x)] = mod_reduce(mul_mod(x2, x, p) + x2, p);
                qx[static_cast<size_t>(x)] = mul_mod(x, u, p);
            }
            break;
        }
        case CurveFamily::D6: {
            const i64 u = inv_mod(432 % p, p);
            for (i64 x = 0; x < p; ++x) {
                i64 x2 = mul_mod(x, x, p);
                px[static_cast<size_t>(x)] = mod_reduce(4 * mul_mod(x2, x, p) + x2, p);
                qx[static_cast<size_t>(x)] = mod_reduce(-4 * u + 4 * p, p);
            }
            break;
        }
        case CurveFamily::Clausen:
            for (i64 x = 0; x < p; ++x) {
                i64 xm1 = mod_reduce(x - 1 + p, p);
                px[static_cast<size_t>(x)] = mul_mod(xm1, mul_mod(x, x, p), p);
                qx[static_cast<size_t>(x)] = xm1;
            }
            break;
    }
    std::vector<i64> traces(static_cast<size_t>(p), INT64_MIN);
    for (i64 lam = 0; lam < p; ++lam) {
        if (is_singular_lambda(f, lam, p)) continue;
        const u64 l1 = static_cast<u64>(lam);
        const u64 l2 = static_cast<u64>(mul_mod(lam, lam, p));
        i64 sum = 0;
        for (i64 x = 0; x < p; ++x) {
            u64 v = static_cast<u64>(px[static_cast<size_t>(x)]) +
                    l1 * static_cast<u64>(qx[static_cast<size_t>(x)]) +
                    l2 * static_cast<u64>(rx[static_cast<size_t>(x)]);
            sum += ctx.legendre[static_cast<size_t>(v % static_cast<u64>(p))];
        }
        traces[static_cast<size_t>(lam)] = -sum;
    }
    return traces;
}

}  // namespace hypermoment
