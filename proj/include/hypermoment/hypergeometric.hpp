#pragma once

#include <algorithm>
#include <cmath>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "hypermoment/character_sums.hpp"
#include "hypermoment/common.hpp"
#include "hypermoment/curves.hpp"
#include "hypermoment/prime_field.hpp"

namespace hypermoment {

// ---------------------------------------------------------------------------
// Hypergeometric data.
// ---------------------------------------------------------------------------

/// A hypergeometric datum {alpha, beta}: two equal-length multisets of
/// rationals taken mod Z (the class of 1 in beta is stored as 0).  M is the
/// least common denominator; the flags are informational, but the evaluators
/// require defined_over_q && primitive.
struct HGDatum {
    std::vector<Rational> alpha;
    std::vector<Rational> beta;
    i64 m = 1;
    bool defined_over_q = false;
    bool primitive = false;
    bool algebraic = false;
    std::string name;  // "HD(s,t)" / "HD(2,s,t)" when constructed from the catalog

    size_t n() const { return alpha.size(); }
};

namespace detail {

inline bool multiset_defined_over_q(const std::vector<Rational>& v) {
    // For each reduced denominator s, all phi(s) primitive classes a/s must
    // occur with equal multiplicity.
    for (const Rational& r : v) {
        i64 s = r.den;
        i64 ref = 0;
        for (i64 a = 0; a < s; ++a) {
            if (std::gcd(a, s) != 1 && !(s == 1 && a == 0)) continue;
            i64 count = static_cast<i64>(std::count(v.begin(), v.end(), Rational(a, s)));
            if (ref == 0) ref = count;
            if (count != ref) return false;
        }
    }
    return true;
}

inline bool multisets_interlace(std::vector<Rational> a, std::vector<Rational> b) {
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    auto strictly_alternates = [](const std::vector<Rational>& x, const std::vector<Rational>& y) {
        for (size_t i = 0; i < x.size(); ++i) {
            if (!(x[i] < y[i])) return false;
            if (i + 1 < x.size() && !(y[i] < x[i + 1])) return false;
        }
        return true;
    };
    return strictly_alternates(a, b) || strictly_alternates(b, a);
}

}  // namespace detail

inline HGDatum validate_datum(std::vector<Rational> alpha, std::vector<Rational> beta,
                              std::string name = "") {
    if (alpha.size() != beta.size()) throw Error("alpha and beta must have equal length");
    HGDatum d;
    d.alpha = std::move(alpha);
    d.beta = std::move(beta);
    d.name = std::move(name);
    d.m = 1;
    for (const auto& v : {d.alpha, d.beta})
        for (const Rational& r : v) {
            if (r.den > 24) throw DenominatorTooLarge(r.den);
            d.m = std::lcm(d.m, r.den);
        }
    d.defined_over_q =
        detail::multiset_defined_over_q(d.alpha) && detail::multiset_defined_over_q(d.beta);
    d.primitive = true;
    for (const Rational& a : d.alpha)
        for (const Rational& b : d.beta)
            if (a == b) d.primitive = false;
    d.algebraic = detail::multisets_interlace(d.alpha, d.beta);
    return d;
}

/// HD(s,t) = {{1/s, 1-1/s}, {1, 1/t}}.
inline HGDatum hd(i64 s, i64 t) {
    return validate_datum({Rational(1, s), Rational(s - 1, s)}, {Rational(0, 1), Rational(1, t)},
                          "HD(" + std::to_string(s) + "," + std::to_string(t) + ")");
}

/// HD(2,s,t) = {{1/2, 1/s, 1-1/s}, {1, 1/t, 1-1/t}}.
inline HGDatum hd3(i64 s, i64 t) {
    return validate_datum(
        {Rational(1, 2), Rational(1, s), Rational(s - 1, s)},
        {Rational(0, 1), Rational(1, t), Rational(t - 1, t)},
        "HD(2," + std::to_string(s) + "," + std::to_string(t) + ")");
}

/// The twenty named data: seven of length two, thirteen of length three.
inline std::vector<HGDatum> named_data_catalog() {
    std::vector<HGDatum> all;
    for (i64 s : {2, 3, 4, 6})
        for (i64 t : {1, 2})
            if (!(s == 2 && t == 2)) all.push_back(hd(s, t));
    for (i64 s : {2, 3, 4, 6})
        for (i64 t : {1, 3, 4, 6})
            if (t == 1 || t != s) all.push_back(hd3(s, t));
    return all;
}

/// d with datum == HD(d,1), if any; these are the curve-backed cases.
inline std::optional<int> curve_degree(const HGDatum& d) {
    for (int deg : {2, 3, 4, 6}) {
        HGDatum h = hd(deg, 1);
        if (d.alpha == h.alpha && d.beta == h.beta) return deg;
    }
    return std::nullopt;
}

enum class AlgebraicCase { HD42, HD32, HD62, HD243, HD264, HD263 };

inline std::optional<AlgebraicCase> algebraic_case(const HGDatum& d) {
    auto matches = [&](const HGDatum& h) { return d.alpha == h.alpha && d.beta == h.beta; };
    if (matches(hd(4, 2))) return AlgebraicCase::HD42;
    if (matches(hd(3, 2))) return AlgebraicCase::HD32;
    if (matches(hd(6, 2))) return AlgebraicCase::HD62;
    if (matches(hd3(4, 3))) return AlgebraicCase::HD243;
    if (matches(hd3(6, 4))) return AlgebraicCase::HD264;
    if (matches(hd3(6, 3))) return AlgebraicCase::HD263;
    return std::nullopt;
}

inline i64 kappa_d(int d) {
    switch (d) {
        case 2: case 6: return -1;
        case 3: return -3;
        case 4: return -2;
    }
    throw Error("kappa is defined for d in {2,3,4,6}");
}

// ---------------------------------------------------------------------------
// Evaluation.
// ---------------------------------------------------------------------------

enum class Method { charsum, dft, curve, algebraic };

inline const char* method_name(Method m) {
    switch (m) {
        case Method::charsum: return "charsum";
        case Method::dft: return "dft";
        case Method::curve: return "curve";
        case Method::algebraic: return "algebraic";
    }
    return "?";
}

/// One evaluated H value.  `value` is the numerator of the exact rational
/// value/den; den is 1 except for the six non-algebraic length-three data
/// with a nontrivial beta, whose values live in (1/p) Z.
struct HGValue {
    i64 value = 0;
    i64 den = 1;
    Method method = Method::charsum;
    i64 lambda = 0;
};

/// A full table of H values over F_p: H(lambda) = num[lambda] / den.
struct HGTable {
    std::vector<i64> num;
    i64 den = 1;

    /// The values as plain integers; only valid when den == 1.
    std::span<const i64> ints() const {
        if (den != 1) throw Error("table has non-integral values (denominator p)");
        return num;
    }
};

namespace detail {

/// Round a complex accumulator to the integer it must represent.  Accepts
/// when the distance to the nearest integer is < max(1e-4, 1e-10 * |z|),
/// otherwise fails loudly rather than corrupting exact downstream checks.
inline i64 round_exact(cplx z, const std::string& where) {
    double mag = std::abs(z);
    double tol = std::max(1e-4, 1e-10 * mag);
    double re = std::round(z.real());
    if (std::abs(z.real() - re) > tol || std::abs(z.imag()) > tol)
        throw PrecisionLoss(where + ": " + std::to_string(z.real()) + " + " +
                            std::to_string(z.imag()) + "i");
    return static_cast<i64>(re);
}

inline bool rounds_cleanly(cplx z) {
    double tol = std::max(1e-4, 1e-10 * std::abs(z));
    return std::abs(z.real() - std::round(z.real())) <= tol && std::abs(z.imag()) <= tol;
}

inline void require_split(const HGDatum& d, const PrimeContext& ctx) {
    if (!d.defined_over_q || !d.primitive)
        throw Error("datum must be defined over Q and primitive");
    if (ctx.p % d.m == 0) throw MethodInapplicable("p divides the datum's denominator");
    if ((ctx.p - 1) % d.m != 0) throw NonSplitPrime(ctx.p, d.m);
}

/// The k-indexed coefficients of the character sum:
///   c_k = prod_i g(w^{k + (p-1)a_i}) g(w^{-k - (p-1)b_i})
///         / (g(w^{(p-1)a_i}) g(w^{-(p-1)b_i})).
inline std::vector<cplx> charsum_coefficients(const HGDatum& d, const PrimeContext& ctx,
                                              const GaussTable& gauss) {
    const i64 q1 = ctx.p - 1;
    std::vector<i64> shift_a, shift_b;
    cplx denom(1.0);
    for (const Rational& a : d.alpha) {
        i64 s = q1 / a.den * a.num;
        shift_a.push_back(s);
        denom *= gauss.at(s);
    }
    for (const Rational& b : d.beta) {
        i64 s = q1 / b.den * b.num;
        shift_b.push_back(s);
        denom *= gauss.at(-s);
    }
    std::vector<cplx> c(static_cast<size_t>(q1));
    for (i64 k = 0; k < q1; ++k) {
        cplx prod(1.0);
        for (size_t i = 0; i < shift_a.size(); ++i)
            prod *= gauss.at(k + shift_a[i]) * gauss.at(-k - shift_b[i]);
        c[static_cast<size_t>(k)] = prod / denom;
    }
    return c;
}

}  // namespace detail

/// Single-lambda evaluation straight from the character-sum definition.
/// Requires a split prime (M | p-1).  O(n p) per lambda.
inline HGValue hp_charsum(const HGDatum& d, i64 lambda, const PrimeContext& ctx,
                          const GaussTable& gauss) {
    detail::require_split(d, ctx);
    const i64 p = ctx.p;
    lambda = mod_reduce(lambda, p);
    if (lambda == 0) return {1, 1, Method::charsum, 0};

    const i64 q1 = p - 1;
    i64 u = (d.n() % 2 == 0) ? lambda : mod_reduce(-lambda, p);
    const i64 s = ctx.dlog_of(u);

    std::vector<i64> shift_a, shift_b;
    cplx denom(1.0);
    for (const Rational& a : d.alpha) {
        i64 sh = q1 / a.den * a.num;
        shift_a.push_back(sh);
        denom *= gauss.at(sh);
    }
    for (const Rational& b : d.beta) {
        i64 sh = q1 / b.den * b.num;
        shift_b.push_back(sh);
        denom *= gauss.at(-sh);
    }
    std::vector<cplx> roots(static_cast<size_t>(q1));
    for (i64 j = 0; j < q1; ++j) {
        double ang = 2.0 * std::numbers::pi * static_cast<double>(j) / static_cast<double>(q1);
        roots[static_cast<size_t>(j)] = cplx(std::cos(ang), std::sin(ang));
    }
    cplx acc(0.0);
    i64 idx = 0;
    for (i64 k = 0; k < q1; ++k) {
        cplx prod(1.0);
        for (size_t i = 0; i < shift_a.size(); ++i)
            prod *= gauss.at(k + shift_a[i]) * gauss.at(-k - shift_b[i]);
        acc += prod * roots[static_cast<size_t>(idx)];
        idx += s;
        if (idx >= q1) idx -= q1;
    }
    acc /= denom * cplx(static_cast<double>(1 - p));
    if (detail::rounds_cleanly(acc)) return {detail::round_exact(acc, "charsum"), 1, Method::charsum, lambda};
    return {detail::round_exact(acc * static_cast<double>(p), "charsum (scaled by p)"), p,
            Method::charsum, lambda};
}

/// All p-1 values H(lambda), lambda in F_p^*, in O(p log p): as a function of
/// dlog(lambda) the character sum is one arbitrary-length inverse DFT of the
/// coefficient sequence c_k.  Entry [lambda] of the result; [0] is the
/// conventional H(0) = 1.  The denominator is detected from the values: if
/// any entry fails to round to an integer, the whole table is scaled by p
/// and rounded again (values in (1/p) Z).
inline HGTable hp_batch_dft(const HGDatum& d, const PrimeContext& ctx, const GaussTable& gauss) {
    detail::require_split(d, ctx);
    const i64 p = ctx.p;
    std::vector<cplx> c = detail::charsum_coefficients(d, ctx, gauss);
    std::vector<cplx> t = czt_dft(c, +1);

    const bool n_even = d.n() % 2 == 0;
    const double scale = 1.0 / static_cast<double>(1 - p);
    std::vector<cplx> values(static_cast<size_t>(p), cplx(1.0));
    bool integral = true;
    for (i64 lam = 1; lam < p; ++lam) {
        i64 u = n_even ? lam : mod_reduce(-lam, p);
        values[static_cast<size_t>(lam)] = t[static_cast<size_t>(ctx.dlog_of(u))] * scale;
        integral = integral && detail::rounds_cleanly(values[static_cast<size_t>(lam)]);
    }
    HGTable out;
    out.den = integral ? 1 : p;
    out.num.resize(static_cast<size_t>(p));
    const double den = static_cast<double>(out.den);
    for (i64 lam = 0; lam < p; ++lam)
        out.num[static_cast<size_t>(lam)] =
            detail::round_exact(values[static_cast<size_t>(lam)] * den, "batch dft");
    return out;
}

/// Curve-backed evaluation of H(HD(d,1); lambda) for d in {2,3,4,6}; valid at
/// every odd prime p >= 5 (split or not).  lambda = 0 and 1 use the standing
/// conventions H(0) = 1 and H(1) = (kappa_d / p).  For d = 2 the value is
/// phi(-1) times the Legendre-curve trace; for d = 3, 4, 6 it is the trace of
/// the associated family itself.
inline HGValue hp_curve(int d, i64 lambda, const PrimeContext& ctx) {
    const i64 p = ctx.p;
    if (p < 5) throw SmallPrime(p);
    lambda = mod_reduce(lambda, p);
    if (lambda == 0) return {1, 1, Method::curve, 0};
    if (lambda == 1) return {legendre_symbol(ctx, kappa_d(d)), 1, Method::curve, 1};
    CurveFamily fam;
    switch (d) {
        case 2: fam = CurveFamily::Legendre; break;
        case 3: fam = CurveFamily::D3; break;
        case 4: fam = CurveFamily::D4; break;
        case 6: fam = CurveFamily::D6; break;
        default: throw Error("curve evaluation needs d in {2,3,4,6}");
    }
    i64 a = frobenius_trace(fam, lambda, ctx);
    if (d == 2) a *= legendre_symbol(ctx, p - 1);
    return {a, 1, Method::curve, lambda};
}

namespace detail {

/// Root count of x^3 + 3x^2 - 4 lambda over F_p^*, with multiplicity.
inline i64 cubic_root_count(i64 lambda, const PrimeContext& ctx) {
    const i64 p = ctx.p;
    i64 count = 0;
    for (i64 x = 1; x < p; ++x) {
        i64 v = mod_reduce(mul_mod(mul_mod(x, x, p), x + 3, p) - 4 * lambda % p + 4 * p, p);
        if (v != 0) continue;
        // multiplicity via derivatives (p > 3, so 3 and 6 are units)
        i64 d1 = mod_reduce(3 * mul_mod(x, x, p) + 6 * x, p);
        if (d1 != 0) { count += 1; continue; }
        i64 d2 = mod_reduce(6 * x + 6, p);
        count += (d2 != 0) ? 2 : 3;
    }
    return count;
}

}  // namespace detail

/// Closed algebraic formulas for the six interlacing data.  Exhaustive root
/// scans over F_p; p > 3 required.  lambda = 1 values for HD(3,2) and HD(6,2)
/// come from direct substitution in the character sum (the cubic acquires a
/// double root there, which the root-count formula must not see twice).
inline HGValue hp_algebraic(const HGDatum& d, i64 lambda, const PrimeContext& ctx) {
    const i64 p = ctx.p;
    if (p <= 3) throw SmallPrime(p);
    auto which = algebraic_case(d);
    if (!which) throw NotAlgebraicDatum();
    lambda = mod_reduce(lambda, p);
    if (lambda == 0) return {1, 1, Method::algebraic, 0};

    auto phi = [&](i64 x) -> i64 { return legendre_symbol(ctx, x); };
    const i64 inv3 = inv_mod(3, p);
    i64 value = 0;
    switch (*which) {
        case AlgebraicCase::HD42: {
            if (phi(lambda) != 1) { value = 0; break; }
            i64 r = sqrt_mod(ctx, lambda);
            value = phi(1 + r) + phi(mod_reduce(1 - r, p));
            break;
        }
        case AlgebraicCase::HD32: {
            value = (lambda == 1) ? 1 : detail::cubic_root_count(lambda, ctx) - 1;
            break;
        }
        case AlgebraicCase::HD62: {
            value = (lambda == 1)
                        ? phi(3)
                        : phi(mul_mod(lambda, inv3, p)) * (detail::cubic_root_count(lambda, ctx) - 1);
            break;
        }
        case AlgebraicCase::HD243: {
            // 27 lambda (a^3 - a^2) + 4 = 0, a outside {0, 1}
            i64 sum = 0;
            for (i64 a = 2; a < p; ++a) {
                i64 a2 = mul_mod(a, a, p);
                i64 v = mod_reduce(27 * mul_mod(lambda, mod_reduce(mul_mod(a2, a, p) - a2 + p, p), p) % p + 4, p);
                if (v == 0) sum += phi(a);
            }
            value = phi(mod_reduce(-3 * lambda % p + p, p)) * sum;
            break;
        }
        case AlgebraicCase::HD264: {
            // 256 lambda (a^4 - a^3) + 27 = 0
            i64 sum = 0;
            for (i64 a = 2; a < p; ++a) {
                i64 a3 = mul_mod(mul_mod(a, a, p), a, p);
                i64 v = mod_reduce(256 % p * mul_mod(lambda, mul_mod(a3, a - 1 + p, p), p) % p + 27 % p, p);
                if (v == 0) sum += phi(mul_mod(a, a - 1 + p, p));
            }
            value = sum - phi(mod_reduce(-mul_mod(lambda, inv3, p) + p, p));
            break;
        }
        case AlgebraicCase::HD263: {
            // (lambda - 1) a^3 + 3a^2 - 3a + 1 = 0
            i64 sum = 0;
            for (i64 a = 2; a < p; ++a) {
                i64 a2 = mul_mod(a, a, p);
                i64 v = mod_reduce(mul_mod(mod_reduce(lambda - 1 + p, p), mul_mod(a2, a, p), p) +
                                       3 * a2 - 3 * a + 1 + 3 * p, p);
                if (v == 0) sum += phi(a);
            }
            value = sum;
            break;
        }
    }
    return {value, 1, Method::algebraic, lambda};
}

// ---------------------------------------------------------------------------
// Whole-table evaluation and method dispatch.
// ---------------------------------------------------------------------------

/// Cheapest applicable exact method for this datum and prime:
/// curve > algebraic > dft > charsum.
inline Method resolve_method(const HGDatum& d, const PrimeContext& ctx, bool batch = true) {
    if (curve_degree(d) && ctx.p >= 5) return Method::curve;
    if (algebraic_case(d) && ctx.p > 3 && ctx.p % d.m != 0) return Method::algebraic;
    if (d.defined_over_q && d.primitive && ctx.p % d.m != 0 && (ctx.p - 1) % d.m == 0)
        return batch ? Method::dft : Method::charsum;
    throw MethodInapplicable(d.name.empty() ? "datum" : d.name);
}

/// H(lambda) for all lambda in F_p (index = lambda, H(0) = 1) by the given
/// method; Method::charsum falls back to the batch path value-for-value.
inline HGTable hp_table(const HGDatum& d, const PrimeContext& ctx, Method method,
                        const GaussTable* gauss = nullptr) {
    const i64 p = ctx.p;
    HGTable out;
    switch (method) {
        case Method::curve: {
            auto deg = curve_degree(d);
            if (!deg) throw MethodInapplicable("curve method needs HD(d,1), d in {2,3,4,6}");
            out.num.assign(static_cast<size_t>(p), 0);
            CurveFamily fam = *deg == 2   ? CurveFamily::Legendre
                              : *deg == 3 ? CurveFamily::D3
                              : *deg == 4 ? CurveFamily::D4
                                          : CurveFamily::D6;
            std::vector<i64> tr = frobenius_trace_table(fam, ctx);
            const i64 sign = (*deg == 2) ? legendre_symbol(ctx, p - 1) : 1;
            for (i64 lam = 2; lam < p; ++lam)
                out.num[static_cast<size_t>(lam)] = sign * tr[static_cast<size_t>(lam)];
            out.num[0] = 1;
            out.num[1] = legendre_symbol(ctx, kappa_d(*deg));
            break;
        }
        case Method::algebraic: {
            out.num.assign(static_cast<size_t>(p), 0);
            out.num[0] = 1;
            for (i64 lam = 1; lam < p; ++lam)
                out.num[static_cast<size_t>(lam)] = hp_algebraic(d, lam, ctx).value;
            break;
        }
        case Method::dft:
        case Method::charsum: {
            if (gauss == nullptr) throw Error("dft/charsum table needs a Gauss table");
            out = hp_batch_dft(d, ctx, *gauss);
            break;
        }
    }
    return out;
}

}  // namespace hypermoment
