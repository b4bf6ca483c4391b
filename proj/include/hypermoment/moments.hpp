#pragma once

#include <cmath>
#include <numeric>
#include <span>
#include <string>
#include <vector>

#include "hypermoment/common.hpp"
#include "hypermoment/hypergeometric.hpp"

namespace hypermoment {

/// n-th Catalan number (2n)! / (n! (n+1)!), exact.
inline i64 catalan(i64 n) {
    if (n < 0) return 0;
    return static_cast<i64>(binom(2 * n, n) / (n + 1));
}

/// Left side of the binomial-Catalan convolution identity:
/// sum_{j=0}^{floor(m/2)} (-1)^j C(m-j, j) Cat(n-j), with Cat at negative
/// index taken to be 0.
inline i64 chu_lhs(i64 m, i64 n) {
    i128 acc = 0;
    for (i64 j = 0; j <= m / 2; ++j) {
        i128 term = binom(m - j, j) * catalan(n - j);
        acc += (j % 2 == 0) ? term : -term;
    }
    return static_cast<i64>(acc);
}

/// Closed form of the same sum: binom(2n-m, n) for m > 2n (generalized
/// binomial), else binom(2n-m, n) (m+1)/(n+1).
inline i64 chu_rhs(i64 m, i64 n) {
    if (m > 2 * n) return static_cast<i64>(binom(2 * n - m, n));
    i128 num = binom(2 * n - m, n) * (m + 1);
    if (num % (n + 1) != 0) throw Error("chu_rhs is not integral (bad identity input)");
    return static_cast<i64>(num / (n + 1));
}

/// Even trace moments of the real orthogonal group O_3:
/// sum_{i=0}^m (-1)^i C(m, i) Cat(i).
inline i64 o3_even_moment(i64 m) {
    if (m % 2 != 0 || m < 0) throw Error("o3_even_moment needs even m >= 0");
    i128 acc = 0;
    for (i64 i = 0; i <= m; ++i) {
        i128 term = binom(m, i) * catalan(i);
        acc += (i % 2 == 0) ? term : -term;
    }
    return static_cast<i64>(acc);
}

// ---------------------------------------------------------------------------
// Moment sums.
// ---------------------------------------------------------------------------

/// Which limit law a datum's moments follow, fixing the normalization
/// exponent and the even-moment target.
enum class MomentLaw {
    SemicircleLength2,  // exponent m/2 + 1, even target Cat(m/2)
    O3Weight3,          // exponent m + 1, even target o3(m)   (length 3, t = 1)
    O3Normalized1,      // exponent 1, even target o3(m)       (length 3, t >= 3)
    NoTarget            // algebraic length-2 cases: odd moments 0, no even target
};

inline MomentLaw moment_law(const HGDatum& d) {
    if (d.n() == 2) return algebraic_case(d) ? MomentLaw::NoTarget : MomentLaw::SemicircleLength2;
    bool t_is_one = true;
    for (const Rational& b : d.beta)
        if (!(b == Rational(0, 1))) t_is_one = false;
    return t_is_one ? MomentLaw::O3Weight3 : MomentLaw::O3Normalized1;
}

/// One per-prime moment row.  The exact raw sum is the rational
/// raw_num / raw_den (raw_den = den^m; 1 for integer-valued data).
struct MomentReport {
    std::string datum;
    i64 p = 0;
    i64 m = 0;
    i128 raw_num = 0;
    i128 raw_den = 1;
    double normalization_exponent = 0.0;  // m/2+1, m+1 or 1 depending on the law
    double normalized = 0.0;
    double target = 0.0;  // NaN when no limit value is asserted
    double abs_error = 0.0;

    /// The exact raw sum in lowest terms, e.g. "-42" or "5/7".
    std::string raw_sum_string() const {
        i128 n = raw_num, d = raw_den;
        if (n == 0) return "0";
        i128 a = n < 0 ? -n : n, b = d;
        while (b != 0) { i128 t = a % b; a = b; b = t; }
        n /= a;
        d /= a;
        return d == 1 ? to_string_i128(n) : to_string_i128(n) + "/" + to_string_i128(d);
    }
};

namespace detail {

inline i128 ipow(i64 base, i64 e) {
    i128 r = 1;
    for (i64 t = 0; t < e; ++t) r *= base;
    return r;
}

inline double normalized_value(i128 raw_num, i128 raw_den, i64 p, double exponent) {
    long double v = static_cast<long double>(raw_num) / static_cast<long double>(raw_den);
    return static_cast<double>(v / std::pow(static_cast<long double>(p),
                                            static_cast<long double>(exponent)));
}

}  // namespace detail

/// Numerator of the exact sum of H(lambda)^m over all lambda in F_p (H(0) = 1
/// included), from a value table; the full sum is the return value / den^m.
/// square_argument replaces lambda by lambda^2 before evaluation.
inline i128 raw_moment_num(const HGTable& hp, i64 p, i64 m, bool square_argument = false) {
    i64 max_abs = 1;
    for (i64 v : hp.num) max_abs = std::max(max_abs, std::abs(v));
    long double bound = std::pow(static_cast<long double>(max_abs), static_cast<long double>(m)) *
                        static_cast<long double>(p);
    if (bound > 1e37L) throw Error("moment sum would overflow 128-bit accumulation");
    i128 acc = 0;
    for (i64 lam = 0; lam < p; ++lam) {
        i64 arg = square_argument ? mul_mod(lam, lam, p) : lam;
        acc += detail::ipow(hp.num[static_cast<size_t>(arg)], m);
    }
    return acc;
}

/// Assemble a report from an existing value table.
inline MomentReport moment_report(const HGDatum& d, i64 m, i64 p, const HGTable& hp,
                                  bool square_argument = false) {
    MomentReport rep;
    rep.datum = d.name + (square_argument ? " (lambda^2)" : "");
    rep.p = p;
    rep.m = m;
    rep.raw_num = raw_moment_num(hp, p, m, square_argument);
    rep.raw_den = detail::ipow(hp.den, m);
    MomentLaw law = moment_law(d);
    switch (law) {
        case MomentLaw::SemicircleLength2:
        case MomentLaw::NoTarget:
            rep.normalization_exponent = static_cast<double>(m) / 2.0 + 1.0;
            break;
        case MomentLaw::O3Weight3: rep.normalization_exponent = static_cast<double>(m + 1); break;
        case MomentLaw::O3Normalized1: rep.normalization_exponent = 1.0; break;
    }
    rep.normalized = detail::normalized_value(rep.raw_num, rep.raw_den, p, rep.normalization_exponent);
    if (m % 2 == 1) {
        rep.target = 0.0;
    } else if (law == MomentLaw::SemicircleLength2) {
        rep.target = static_cast<double>(catalan(m / 2));
    } else if (law == MomentLaw::O3Weight3 || law == MomentLaw::O3Normalized1) {
        rep.target = static_cast<double>(o3_even_moment(m));
    } else {
        rep.target = std::nan("");
    }
    rep.abs_error = std::isnan(rep.target) ? std::nan("") : std::abs(rep.normalized - rep.target);
    return rep;
}

inline MomentReport moment_sum(const HGDatum& d, i64 m, const PrimeContext& ctx, Method method,
                               const GaussTable* gauss = nullptr, bool square_argument = false) {
    HGTable hp = hp_table(d, ctx, method, gauss);
    return moment_report(d, m, ctx.p, hp, square_argument);
}

// ---------------------------------------------------------------------------
// Exact second moments.
// ---------------------------------------------------------------------------

struct SecondMomentCheck {
    i64 p = 0;
    i128 computed = 0;  // brute-force sum over F_p^* of H^2
    i128 claimed = 0;   // the closed polynomial in p for this residue class
    bool agree = false;
    std::string note;
};

/// Exact second moment over F_p^* for HD(6,1) (all p > 3, via the curve) or
/// HD(2,d,1), d in {3,4,6} (split primes, via the batch DFT), compared with
/// the closed polynomial.  For HD(6,1) with p = 2 mod 3 both published
/// candidate polynomials are tested and the matching one is reported.
inline SecondMomentCheck second_moment_exact(const HGDatum& d, const PrimeContext& ctx,
                                             const GaussTable* gauss = nullptr) {
    const i64 p = ctx.p;
    if (p <= 3) throw SmallPrime(p);
    SecondMomentCheck chk;
    chk.p = p;

    HGDatum hd61 = hd(6, 1);
    if (d.alpha == hd61.alpha && d.beta == hd61.beta) {
        HGTable hp = hp_table(d, ctx, Method::curve);
        i128 s = 0;
        for (i64 lam = 1; lam < p; ++lam) s += detail::ipow(hp.num[static_cast<size_t>(lam)], 2);
        chk.computed = s;
        if (p % 3 == 1) {
            chk.claimed = static_cast<i128>(p) * p - 3 * p - 1;
            chk.note = "p = 1 mod 3: p^2 - 3p - 1";
        } else {
            i128 statement = static_cast<i128>(p) * p - p - 1;
            i128 alternative = static_cast<i128>(p) * p - 3 * p - 1;
            chk.claimed = statement;
            chk.note = (s == statement)     ? "p = 2 mod 3: matches p^2 - p - 1"
                       : (s == alternative) ? "p = 2 mod 3: matches p^2 - 3p - 1"
                                            : "p = 2 mod 3: matches neither candidate";
        }
        chk.agree = (chk.computed == chk.claimed);
        return chk;
    }

    for (i64 dd : {3, 4, 6}) {
        HGDatum h = hd3(dd, 1);
        if (d.alpha == h.alpha && d.beta == h.beta) {
            if ((p - 1) % d.m != 0) throw NonSplitPrime(p, d.m);
            if (p % dd != 1)
                throw MethodInapplicable("second moment of " + d.name +
                                         " is only evaluable for p = 1 mod " + std::to_string(dd));
            HGTable hp = hp_table(d, ctx, Method::dft, gauss);
            i128 s = 0;
            for (i64 lam = 1; lam < p; ++lam) s += detail::ipow(hp.num[static_cast<size_t>(lam)], 2);
            chk.computed = s;
            chk.claimed = detail::ipow(p, 3) - 4 * static_cast<i128>(p) * p - p - 1;
            chk.note = "p = 1 mod " + std::to_string(dd) + ": p^3 - 4p^2 - p - 1";
            chk.agree = (chk.computed == chk.claimed);
            return chk;
        }
    }
    throw MethodInapplicable("second_moment_exact supports HD(6,1) and HD(2,d,1)");
}

// ---------------------------------------------------------------------------
// Convergence sweeps.
// ---------------------------------------------------------------------------

/// Per-prime normalized moments for m = 1..m_max over the given primes.
/// Primes where no exact method applies are skipped (for data without a
/// curve or algebraic route this restricts the sweep to p = 1 mod M).
inline std::vector<MomentReport> convergence_sweep(const HGDatum& d, i64 m_max,
                                                   const std::vector<i64>& primes,
                                                   bool square_argument = false,
                                                   Method* forced_method = nullptr) {
    std::vector<MomentReport> out;
    for (i64 p : primes) {
        if (p < 5 || d.m % p == 0) continue;
        PrimeContext ctx = build_context(p);
        Method method;
        if (forced_method != nullptr) {
            method = *forced_method;
        } else if (curve_degree(d)) {
            method = Method::curve;
        } else if ((p - 1) % d.m == 0) {
            method = Method::dft;
        } else if (algebraic_case(d)) {
            method = Method::algebraic;
        } else {
            continue;  // no exact route at this prime
        }
        if (method == Method::curve && !curve_degree(d)) continue;
        if ((method == Method::dft || method == Method::charsum) && (p - 1) % d.m != 0) continue;

        GaussTable gauss;
        const GaussTable* gp = nullptr;
        if (method == Method::dft || method == Method::charsum) {
            gauss = gauss_table(ctx);
            gp = &gauss;
        }
        HGTable hp = hp_table(d, ctx, method, gp);
        for (i64 m = 1; m <= m_max; ++m)
            out.push_back(moment_report(d, m, ctx.p, hp, square_argument));
    }
    return out;
}

}  // namespace hypermoment
