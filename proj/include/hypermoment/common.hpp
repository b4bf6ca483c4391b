#pragma once

#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>

namespace hypermoment {

using i64 = std::int64_t;
using u64 = std::uint64_t;
using i128 = __int128;

// ---------------------------------------------------------------------------
// Error types.  Every failure mode has its own type so callers (and the CLI
// exit-code mapping) can distinguish them without string matching.
// ---------------------------------------------------------------------------

struct Error : std::runtime_error {
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

struct NotPrime : Error {
    explicit NotPrime(i64 n) : Error("not prime: " + std::to_string(n)) {}
};
struct EvenPrime : Error {
    EvenPrime() : Error("p = 2 is unsupported; an odd prime is required") {}
};
struct NonSplitPrime : Error {
    NonSplitPrime(i64 p, i64 m)
        : Error("prime " + std::to_string(p) + " is not 1 mod " + std::to_string(m)) {}
};
struct PrecisionLoss : Error {
    explicit PrecisionLoss(const std::string& what) : Error("precision loss: " + what) {}
};
struct SingularLambda : Error {
    explicit SingularLambda(i64 lambda)
        : Error("lambda = " + std::to_string(lambda) + " is in the singular set") {}
};
struct SmallPrime : Error {
    explicit SmallPrime(i64 p) : Error("prime " + std::to_string(p) + " is too small here") {}
};
struct NotAlgebraicDatum : Error {
    NotAlgebraicDatum() : Error("datum has no closed algebraic formula") {}
};
struct DenominatorTooLarge : Error {
    explicit DenominatorTooLarge(i64 d)
        : Error("denominator " + std::to_string(d) + " exceeds the supported bound") {}
};
struct IdentityViolation : Error {
    explicit IdentityViolation(const std::string& what) : Error("identity violation: " + what) {}
};
struct NonRealDelta : Error {
    explicit NonRealDelta(const std::string& what) : Error("delta term is not real: " + what) {}
};
struct UnresolvedIndexSet : Error {
    UnresolvedIndexSet() : Error("no index-set interpretation satisfies the null traces") {}
};
struct OddWeight : Error {
    explicit OddWeight(i64 k) : Error("k = " + std::to_string(k) + " must be even") {}
};
struct TraceNotZero : Error {
    explicit TraceNotZero(const std::string& what) : Error("trace not zero: " + what) {}
};
struct InsufficientTerms : Error {
    InsufficientTerms() : Error("series expansion has too few terms") {}
};
struct MethodInapplicable : Error {
    explicit MethodInapplicable(const std::string& what) : Error("no applicable method: " + what) {}
};

// ---------------------------------------------------------------------------
// Small integer helpers.
// ---------------------------------------------------------------------------

inline i64 mod_reduce(i64 a, i64 p) {
    i64 r = a % p;
    return r < 0 ? r + p : r;
}

inline i64 mul_mod(i64 a, i64 b, i64 p) {
    return static_cast<i64>(static_cast<i128>(a) * b % p);
}

inline i64 pow_mod(i64 base, i64 exp, i64 p) {
    i64 r = 1;
    base = mod_reduce(base, p);
    while (exp > 0) {
        if (exp & 1) r = mul_mod(r, base, p);
        base = mul_mod(base, base, p);
        exp >>= 1;
    }
    return r;
}

/// Inverse of a mod p (p prime, a not divisible by p).
inline i64 inv_mod(i64 a, i64 p) { return pow_mod(mod_reduce(a, p), p - 2, p); }

/// Exact binomial coefficient; allows a negative upper argument in the
/// generalized sense binom(a, b) = a(a-1)...(a-b+1)/b!.
inline i128 binom(i64 a, i64 b) {
    if (b < 0) return 0;
    if (a < 0) {
        // binom(a, b) = (-1)^b binom(b - a - 1, b)
        i128 r = binom(b - a - 1, b);
        return (b % 2 == 0) ? r : -r;
    }
    if (b > a) return 0;
    if (b > a - b) b = a - b;
    i128 r = 1;
    for (i64 i = 1; i <= b; ++i) {
        r = r * (a - b + i) / i;  // exact at each step: r is binom(a-b+i, i)
    }
    return r;
}

inline std::string to_string_i128(i128 v) {
    if (v == 0) return "0";
    bool neg = v < 0;
    unsigned __int128 u = neg ? -static_cast<unsigned __int128>(v) : v;
    std::string s;
    while (u > 0) {
        s.push_back(static_cast<char>('0' + static_cast<int>(u % 10)));
        u /= 10;
    }
    if (neg) s.push_back('-');
    return {s.rbegin(), s.rend()};
}

// ---------------------------------------------------------------------------
// Reduced rational in [0,1), used for hypergeometric parameters.
// ---------------------------------------------------------------------------

struct Rational {
    i64 num = 0;
    i64 den = 1;

    Rational() = default;
    Rational(i64 n, i64 d) {
        if (d == 0) throw Error("rational with zero denominator");
        if (d < 0) { n = -n; d = -d; }
        n = ((n % d) + d) % d;  // reduce into [0,1)
        i64 g = std::gcd(n, d);
        num = n / g;
        den = d / g;
    }

    bool operator==(const Rational& o) const = default;
    auto operator<=>(const Rational& o) const {
        return static_cast<i128>(num) * o.den <=> static_cast<i128>(o.num) * den;
    }
};

}  // namespace hypermoment
