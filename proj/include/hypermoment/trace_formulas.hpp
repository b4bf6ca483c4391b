#pragma once

#include <span>
#include <string>
#include <vector>

#include "hypermoment/character_sums.hpp"
#include "hypermoment/common.hpp"
#include "hypermoment/cyclotomic.hpp"
#include "hypermoment/dimensions.hpp"
#include "hypermoment/hypergeometric.hpp"
#include "hypermoment/prime_field.hpp"

namespace hypermoment {

/// G_k(s, p) = sum_{j=0}^{k/2-1} (-1)^j C(k-2-j, j) p^j s^{k-2j-2}, k even >= 2.
/// For s = beta + p/beta this telescopes to sum beta^{k-2-2i} p^i, which is
/// what makes it the right kernel for Hecke traces.
inline i64 g_poly(i64 k, i64 s, i64 p) {
    if (k < 2 || k % 2 != 0) throw OddWeight(k);
    i128 acc = 0;
    for (i64 j = 0; j <= k / 2 - 1; ++j) {
        i128 term = binom(k - 2 - j, j);
        for (i64 t = 0; t < j; ++t) term *= p;
        for (i64 t = 0; t < k - 2 * j - 2; ++t) term *= s;
        acc += (j % 2 == 0) ? term : -term;
    }
    return static_cast<i64>(acc);
}

namespace detail {

/// sum_{j=0}^{floor(k/2)} (-1)^j C(k-j, j) p^j s^{k-2j}; equals g_poly(k+2, s, p).
inline i128 trace_kernel(i64 k, i64 s, i64 p) {
    i128 acc = 0;
    for (i64 j = 0; j <= k / 2; ++j) {
        i128 term = binom(k - j, j);
        for (i64 t = 0; t < j; ++t) term *= p;
        for (i64 t = 0; t < k - 2 * j; ++t) term *= s;
        acc += (j % 2 == 0) ? term : -term;
    }
    return acc;
}

/// p^a * J^e with negative e rewritten through J conj(J) = p, so the result
/// stays in the integer ring: p^a J^e = p^{a+e'} conj(J)^{-e} for e < 0.
inline CyclotomicInt power_term(const CyclotomicInt& j_sum, i64 p, i64 a, i64 e) {
    CyclotomicInt base = (e >= 0) ? j_sum : j_sum.conj();
    i64 exp = (e >= 0) ? e : -e;
    i64 p_pow = (e >= 0) ? a : a + e;
    if (p_pow < 0) throw Error("negative p-power in delta term");
    CyclotomicInt out = base.pow(exp);
    for (i64 t = 0; t < p_pow; ++t) out = out * p;
    return out;
}

}  // namespace detail

/// Correction term delta_{3,k}(p) for the Gamma_1(3) trace formula.
///
/// For p = 1 mod 3 this is the sum of p^i J(eta3,eta3)^{k-2i} over 0 <= i <= k
/// with 3 | k - 2i, except that the exponent-zero term (i = k/2, even k only)
/// enters NEGATED; for p = 2 mod 3 it is 0 for odd k and -(-p)^{k/2} for even
/// k.  The sign of the central term was fixed empirically against the
/// weight-3/4/5 dimension-zero traces and the weight-6 eta eigenform; see
/// resolve_delta3_central_sign.
inline i64 delta3(i64 k, const PrimeContext& ctx, int central_sign = -1) {
    const i64 p = ctx.p;
    if (k < 1) throw Error("delta3 needs k >= 1");
    if (p % 3 == 2) {
        if (k % 2 == 1) return 0;
        i64 v = 1;
        for (i64 t = 0; t < k / 2; ++t) v *= -p;
        return central_sign * v;
    }
    if (p % 3 != 1) throw Error("delta3 needs p != 3");
    const i64 eta3 = (p - 1) / 3;
    CyclotomicInt j = jacobi_sum(ctx, eta3, eta3);
    CyclotomicInt acc(j.conductor(), 0);
    for (i64 i = 0; i <= k; ++i) {
        i64 e = k - 2 * i;
        if (mod_reduce(e, 3) != 0) continue;
        CyclotomicInt term = detail::power_term(j, p, i, e);
        acc += (e == 0) ? term * central_sign : term;
    }
    return acc.to_integer();
}

enum class Delta4IndexSet { Integers, HalfIntegers };

/// Correction term delta_{4,2r}(p) for the Gamma_0(2) trace formula:
/// (-p)^r for p = 3 mod 4, and p^r sum (J(eta4,eta4)^2/p)^{2i} over the index
/// set i in [-r/2, r/2] for p = 1 mod 4.  The index set ranges over the
/// INTEGERS in that window; resolved empirically against the weight-4/6
/// dimension-zero traces (see resolve_delta4_index_set) and frozen here.
inline i64 delta4(i64 r, const PrimeContext& ctx,
                  Delta4IndexSet idx = Delta4IndexSet::Integers) {
    const i64 p = ctx.p;
    if (r < 1) throw Error("delta4 needs r >= 1");
    if (p % 4 == 3) {
        i64 v = 1;
        for (i64 t = 0; t < r; ++t) v *= -p;
        return v;
    }
    if (p % 4 != 1) throw Error("delta4 needs p odd");
    const i64 eta4 = (p - 1) / 4;
    CyclotomicInt j = jacobi_sum(ctx, eta4, eta4);
    CyclotomicInt acc(j.conductor(), 0);
    // write 2i = t; integers  <-> t even, half-integers <-> t odd
    for (i64 t = -r; t <= r; ++t) {
        bool even = (mod_reduce(t, 2) == 0);
        if ((idx == Delta4IndexSet::Integers) != even) continue;
        // p^r (J^2/p)^t = p^{r-t} J^{2t}
        acc += detail::power_term(j, p, r - t, 2 * t);
    }
    return acc.to_integer();
}

// ---------------------------------------------------------------------------
// The trace formulas.  Each returns Tr_k(Gamma, p), the trace of the Hecke
// operator T_p on S_k(Gamma), as an exact integer.
// ---------------------------------------------------------------------------

struct TraceReport {
    std::string group;
    i64 weight = 0;
    i64 p = 0;
    i64 trace = 0;
    std::string method;
};

/// Tr_{k+2}(Gamma_1(3), p) from the H(HD(3,1)) table (index = lambda).
inline TraceReport trace_gamma1_3(i64 k, const PrimeContext& ctx, std::span<const i64> hp,
                                  int delta_central_sign = -1) {
    const i64 p = ctx.p;
    i128 s = 0;
    for (i64 lam = 2; lam < p; ++lam) s += detail::trace_kernel(k, hp[static_cast<size_t>(lam)], p);
    i64 phi_m3 = legendre_symbol(ctx, mod_reduce(-3, p));
    i64 c = 1 + (k % 2 == 0 ? 1 : phi_m3) - delta3(k, ctx, delta_central_sign);
    return {"Gamma_1(3)", k + 2, p, static_cast<i64>(-(c + s)), "formula"};
}

/// Tr_{2r+2}(Gamma_0(2), p) from the H(HD(4,1)) table.
inline TraceReport trace_gamma0_2(i64 r, const PrimeContext& ctx, std::span<const i64> hp,
                                  Delta4IndexSet idx = Delta4IndexSet::Integers) {
    const i64 p = ctx.p;
    i128 s = 0;
    for (i64 lam = 2; lam < p; ++lam) s += detail::trace_kernel(2 * r, hp[static_cast<size_t>(lam)], p);
    return {"Gamma_0(2)", 2 * r + 2, p, static_cast<i64>(-2 - delta4(r, ctx, idx) - s), "formula"};
}

/// Tr_{k+2}(Gamma_0(4), p) from the Legendre Frobenius traces (index = lambda).
inline TraceReport trace_gamma0_4(i64 k, const PrimeContext& ctx, std::span<const i64> legendre_traces) {
    if (k % 2 != 0) throw OddWeight(k);
    const i64 p = ctx.p;
    i128 s = 0;
    for (i64 lam = 2; lam < p; ++lam)
        s += g_poly(k + 2, legendre_traces[static_cast<size_t>(lam)], p);
    return {"Gamma_0(4)", k + 2, p, static_cast<i64>(-(3 + s)), "formula"};
}

/// Tr_{k+2}(Gamma_0(8), p); the argument is the Legendre trace at lambda^2.
inline TraceReport trace_gamma0_8(i64 k, const PrimeContext& ctx, std::span<const i64> legendre_traces) {
    if (k % 2 != 0) throw OddWeight(k);
    const i64 p = ctx.p;
    i128 s = 0;
    for (i64 lam = 2; lam <= p - 2; ++lam) {
        i64 lsq = mul_mod(lam, lam, p);
        s += g_poly(k + 2, legendre_traces[static_cast<size_t>(lsq)], p);
    }
    return {"Gamma_0(8)", k + 2, p, static_cast<i64>(-(4 + s)), "formula"};
}

/// Tr_{k+2}(Gamma_1(4), p) from the H(HD(2,1)) table (Koike normalization).
inline TraceReport trace_gamma1_4(i64 k, const PrimeContext& ctx, std::span<const i64> hp) {
    const i64 p = ctx.p;
    i128 s = 0;
    for (i64 lam = 2; lam < p; ++lam) s += detail::trace_kernel(k, hp[static_cast<size_t>(lam)], p);
    i64 phi_m1 = legendre_symbol(ctx, p - 1);
    i64 c = (k % 2 == 0 ? 1 : 0) + 1 + (k % 2 == 0 ? 1 : phi_m1);
    return {"Gamma_1(4)", k + 2, p, static_cast<i64>(-(c + s)), "formula"};
}

// ---------------------------------------------------------------------------
// Empirical resolution of the delta conventions, and the dimension-zero
// null-test suite.
// ---------------------------------------------------------------------------

/// Decides the sign of the exponent-zero term in delta3 by requiring the
/// weight-3 and weight-4 traces on Gamma_1(3) (zero-dimensional spaces) to
/// vanish across the given primes.  Returns the working sign.
inline int resolve_delta3_central_sign(const std::vector<i64>& primes) {
    for (int sign : {-1, +1}) {
        bool ok = true;
        for (i64 p : primes) {
            PrimeContext ctx = build_context(p);
            HGTable hp = hp_table(hd(3, 1), ctx, Method::curve);
            for (i64 k : {1, 2}) {
                if (trace_gamma1_3(k, ctx, hp.ints(), sign).trace != 0) { ok = false; break; }
            }
            if (!ok) break;
        }
        if (ok) return sign;
    }
    throw UnresolvedIndexSet();
}

/// Decides integers vs half-integers in the delta4 index window by requiring
/// the weight-4 and weight-6 traces on Gamma_0(2) (zero-dimensional spaces)
/// to vanish across the given primes.
inline Delta4IndexSet resolve_delta4_index_set(const std::vector<i64>& primes) {
    for (Delta4IndexSet idx : {Delta4IndexSet::Integers, Delta4IndexSet::HalfIntegers}) {
        bool ok = true;
        for (i64 p : primes) {
            PrimeContext ctx = build_context(p);
            HGTable hp = hp_table(hd(4, 1), ctx, Method::curve);
            for (i64 r : {1, 2}) {
                if (trace_gamma0_2(r, ctx, hp.ints(), idx).trace != 0) { ok = false; break; }
            }
            if (!ok) break;
        }
        if (ok) return idx;
    }
    throw UnresolvedIndexSet();
}

struct DimensionZeroCase {
    std::string group;
    i64 weight;
};

/// All (group, weight) pairs reachable by the trace formulas at small weight
/// whose cusp-form space is zero-dimensional, per the genus/dimension
/// formulas.  (Notably weight 5 on Gamma_1(4) is NOT in this list: that space
/// is one-dimensional, spanned by a CM eta product.)
inline std::vector<DimensionZeroCase> dimension_zero_cases() {
    std::vector<DimensionZeroCase> zs;
    for (i64 w = 3; w <= 6; ++w)
        if (dim_cusp_forms_gamma1(3, w) == 0) zs.push_back({"Gamma_1(3)", w});
    for (i64 w = 4; w <= 8; w += 2)
        if (dim_cusp_forms_gamma0(2, w) == 0) zs.push_back({"Gamma_0(2)", w});
    for (i64 w = 4; w <= 8; w += 2)
        if (dim_cusp_forms_gamma0(4, w) == 0) zs.push_back({"Gamma_0(4)", w});
    for (i64 w = 4; w <= 8; w += 2)
        if (dim_cusp_forms_gamma0(8, w) == 0) zs.push_back({"Gamma_0(8)", w});
    for (i64 w = 3; w <= 6; ++w)
        if (dim_cusp_forms_gamma1(4, w) == 0) zs.push_back({"Gamma_1(4)", w});
    return zs;
}

/// Evaluates every zero-dimensional trace instance over the given primes and
/// asserts an exact zero; throws TraceNotZero with the offending instance.
inline std::vector<DimensionZeroCase> check_dimension_zero(const std::vector<i64>& primes) {
    std::vector<DimensionZeroCase> cases = dimension_zero_cases();
    for (i64 p : primes) {
        PrimeContext ctx = build_context(p);
        HGTable hp3 = hp_table(hd(3, 1), ctx, Method::curve);
        HGTable hp4 = hp_table(hd(4, 1), ctx, Method::curve);
        HGTable hp2 = hp_table(hd(2, 1), ctx, Method::curve);
        std::vector<i64> leg = frobenius_trace_table(CurveFamily::Legendre, ctx);
        for (const DimensionZeroCase& c : cases) {
            i64 tr;
            if (c.group == "Gamma_1(3)") tr = trace_gamma1_3(c.weight - 2, ctx, hp3.ints()).trace;
            else if (c.group == "Gamma_0(2)") tr = trace_gamma0_2((c.weight - 2) / 2, ctx, hp4.ints()).trace;
            else if (c.group == "Gamma_0(4)") tr = trace_gamma0_4(c.weight - 2, ctx, leg).trace;
            else if (c.group == "Gamma_0(8)") tr = trace_gamma0_8(c.weight - 2, ctx, leg).trace;
            else tr = trace_gamma1_4(c.weight - 2, ctx, hp2.ints()).trace;
            if (tr != 0)
                throw TraceNotZero(c.group + " weight " + std::to_string(c.weight) + " at p = " +
                                   std::to_string(p) + ": trace = " + std::to_string(tr));
        }
    }
    return cases;
}

}  // namespace hypermoment
