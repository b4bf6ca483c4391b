#include <catch2/catch_amalgamated.hpp>

#include "hypermoment/curves.hpp"

using namespace hypermoment;

namespace {

// Point enumeration on the original (untransformed) equations, including the
// point at infinity.  This is the independent oracle for count_points.
i64 brute_force_count(CurveFamily f, i64 lambda, i64 p) {
    auto on_curve = [&](i64 x, i64 y) -> bool {
        switch (f) {
            case CurveFamily::Legendre:
                return mod_reduce(y * y - x * (x - 1) * (x - lambda), p) == 0;
            case CurveFamily::D3: {
                i64 c = mul_mod(lambda, inv_mod(27, p), p);
                return mod_reduce(y * y + x * y + c * y - x * x * x, p) == 0;
            }
            case CurveFamily::D4: {
                i64 c = mul_mod(lambda, inv_mod(4, p), p);
                return mod_reduce(y * y - x * (x * x + x + c), p) == 0;
            }
            case CurveFamily::D6: {
                i64 c = mul_mod(lambda, inv_mod(432 % p, p), p);
                return mod_reduce(y * y + x * y - (x * x * x - c), p) == 0;
            }
            case CurveFamily::Clausen:
                return mod_reduce(y * y - (x - 1) * (x * x + lambda), p) == 0;
        }
        return false;
    };
    i64 count = 1;  // infinity
    for (i64 x = 0; x < p; ++x)
        for (i64 y = 0; y < p; ++y)
            if (on_curve(x, y)) ++count;
    return count;
}

}  // namespace

TEST_CASE("character-sum counts equal naive enumeration for every family") {
    for (i64 p : {5, 7, 11, 13}) {
        PrimeContext ctx = build_context(p);
        for (CurveFamily f : {CurveFamily::Legendre, CurveFamily::D3, CurveFamily::D4,
                              CurveFamily::D6, CurveFamily::Clausen}) {
            for (i64 lam = 0; lam < p; ++lam) {
                if (is_singular_lambda(f, lam, p)) continue;
                INFO(curve_family_name(f) << " lambda=" << lam << " p=" << p);
                CHECK(count_points(f, lam, ctx) == brute_force_count(f, lam, p));
            }
        }
    }
}

TEST_CASE("frozen example: Legendre curve at lambda = 2 over F_5 has 8 points") {
    PrimeContext ctx = build_context(5);
    CHECK(count_points(CurveFamily::Legendre, 2, ctx) == 8);
    CHECK(frobenius_trace(CurveFamily::Legendre, 2, ctx) == -2);
}

TEST_CASE("Hasse bound holds across a larger prime") {
    PrimeContext ctx = build_context(103);
    double bound = 2.0 * std::sqrt(103.0);
    for (CurveFamily f : {CurveFamily::Legendre, CurveFamily::D3, CurveFamily::D4,
                          CurveFamily::D6, CurveFamily::Clausen}) {
        for (i64 lam = 0; lam < 103; ++lam) {
            if (is_singular_lambda(f, lam, 103)) continue;
            CHECK(std::abs(static_cast<double>(frobenius_trace(f, lam, ctx))) <= bound);
        }
    }
}

TEST_CASE("quadratic twist counts sum to 2p + 2") {
    for (i64 p : {5, 7, 11, 13}) {
        PrimeContext ctx = build_context(p);
        i64 ns = 2;
        while (legendre_symbol(ctx, ns) != -1) ++ns;
        for (i64 lam = 2; lam < p; ++lam) {
            // brute-force count of the twist y^2 = ns * x (x-1) (x-lambda)
            i64 twist = 1;
            for (i64 x = 0; x < p; ++x)
                for (i64 y = 0; y < p; ++y)
                    if (mod_reduce(y * y - ns * x * (x - 1) * (x - lam), p) == 0) ++twist;
            CHECK(count_points(CurveFamily::Legendre, lam, ctx) + twist == 2 * p + 2);
        }
    }
}

TEST_CASE("singular lambdas and small primes are rejected") {
    PrimeContext ctx7 = build_context(7);
    CHECK_THROWS_AS(count_points(CurveFamily::Clausen, 0, ctx7), SingularLambda);
    CHECK_THROWS_AS(count_points(CurveFamily::Clausen, 6, ctx7), SingularLambda);  // -1 mod 7
    CHECK_THROWS_AS(count_points(CurveFamily::Legendre, 1, ctx7), SingularLambda);
    CHECK_THROWS_AS(count_points(CurveFamily::D6, 0, ctx7), SingularLambda);
    PrimeContext ctx3 = build_context(3);
    CHECK_THROWS_AS(count_points(CurveFamily::Legendre, 2, ctx3), SmallPrime);
    // Clausen at lambda = 1 over F_5 agrees with brute force (regression of
    // the p >= 5 boundary)
    PrimeContext ctx5 = build_context(5);
    CHECK(frobenius_trace(CurveFamily::Clausen, 1, ctx5) ==
          5 + 1 - brute_force_count(CurveFamily::Clausen, 1, 5));
}

TEST_CASE("completed-square cubics are squarefree off the singular set") {
    // no x is simultaneously a root of f and f' (checked by scan)
    for (i64 p : {7, 13, 31}) {
        PrimeContext ctx = build_context(p);
        auto f_d4 = [&](i64 lam, i64 x) {
            i64 c = mul_mod(lam, inv_mod(4, p), p);
            return mod_reduce(x * x * x + x * x + c * x, p);
        };
        auto fp_d4 = [&](i64 lam, i64 x) {
            i64 c = mul_mod(lam, inv_mod(4, p), p);
            return mod_reduce(3 * x * x + 2 * x + c, p);
        };
        for (i64 lam = 2; lam < p; ++lam)
            for (i64 x = 0; x < p; ++x)
                CHECK((f_d4(lam, x) != 0 || fp_d4(lam, x) != 0));
    }
}

TEST_CASE("trace table matches per-lambda traces") {
    PrimeContext ctx = build_context(13);
    for (CurveFamily f : {CurveFamily::Legendre, CurveFamily::D3, CurveFamily::D4,
                          CurveFamily::D6, CurveFamily::Clausen}) {
        std::vector<i64> table = frobenius_trace_table(f, ctx);
        for (i64 lam = 0; lam < 13; ++lam) {
            if (is_singular_lambda(f, lam, 13)) continue;
            CHECK(table[static_cast<size_t>(lam)] == frobenius_trace(f, lam, ctx));
        }
    }
}
