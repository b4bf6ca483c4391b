#include <catch2/catch_amalgamated.hpp>

#include "hypermoment/hypergeometric.hpp"

using namespace hypermoment;

TEST_CASE("validate_datum computes M and the three flags") {
    HGDatum legendre = validate_datum({Rational(1, 2), Rational(1, 2)}, {Rational(0, 1), Rational(0, 1)});
    CHECK(legendre.defined_over_q);
    CHECK(legendre.primitive);
    CHECK_FALSE(legendre.algebraic);
    CHECK(legendre.m == 2);

    HGDatum alg = validate_datum({Rational(1, 3), Rational(2, 3)}, {Rational(0, 1), Rational(1, 2)});
    CHECK(alg.algebraic);  // 0 < 1/3 < 1/2 < 2/3 interlaces
    CHECK(alg.defined_over_q);
    CHECK(alg.primitive);
    CHECK(alg.m == 6);

    HGDatum bad = validate_datum({Rational(1, 2), Rational(1, 3)}, {Rational(0, 1), Rational(1, 4)});
    CHECK_FALSE(bad.defined_over_q);  // 1/3 without its conjugate 2/3

    CHECK_THROWS_AS(validate_datum({Rational(1, 25), Rational(24, 25)}, {Rational(0, 1), Rational(0, 1)}),
                    DenominatorTooLarge);
}

TEST_CASE("the named catalog has the seven + thirteen cases") {
    std::vector<HGDatum> all = named_data_catalog();
    REQUIRE(all.size() == 20);
    for (const HGDatum& d : all) {
        INFO(d.name);
        CHECK(d.defined_over_q);
        CHECK(d.primitive);
    }
    int algebraic_count = 0;
    for (const HGDatum& d : all)
        if (d.algebraic) ++algebraic_count;
    CHECK(algebraic_count == 6);  // HD(3,2), HD(4,2), HD(6,2), HD(2,4,3), HD(2,6,3), HD(2,6,4)
}

TEST_CASE("datum classification") {
    CHECK(curve_degree(hd(2, 1)) == 2);
    CHECK(curve_degree(hd(6, 1)) == 6);
    CHECK_FALSE(curve_degree(hd(3, 2)).has_value());
    CHECK(algebraic_case(hd(4, 2)) == AlgebraicCase::HD42);
    CHECK(algebraic_case(hd3(6, 4)) == AlgebraicCase::HD264);
    CHECK_FALSE(algebraic_case(hd3(2, 3)).has_value());
}

TEST_CASE("H(0) = 1 and H(1) = (kappa_d / p) in every method") {
    for (i64 p : {13, 17}) {
        PrimeContext ctx = build_context(p);
        GaussTable g = gauss_table(ctx);
        for (int d : {2, 3, 4, 6}) {
            if ((p - 1) % std::lcm<i64>(d, 2) != 0 && (p - 1) % d != 0) continue;
            HGDatum datum = hd(d, 1);
            if ((p - 1) % datum.m != 0) continue;
            i64 kappa = legendre_symbol(ctx, kappa_d(d));
            CHECK(hp_charsum(datum, 0, ctx, g).value == 1);
            CHECK(hp_charsum(datum, 1, ctx, g).value == kappa);
            CHECK(hp_curve(d, 0, ctx).value == 1);
            CHECK(hp_curve(d, 1, ctx).value == kappa);
        }
    }
}

TEST_CASE("Koike: the Legendre datum matches phi(-1) times the curve trace") {
    // p = 11 = 3 mod 4 pins the phi(-1) factor; p = 13 covers the split case
    for (i64 p : {11, 13}) {
        PrimeContext ctx = build_context(p);
        GaussTable g = gauss_table(ctx);
        HGDatum datum = hd(2, 1);
        i64 phi_m1 = legendre_symbol(ctx, p - 1);
        for (i64 lam = 2; lam < p; ++lam) {
            i64 a = frobenius_trace(CurveFamily::Legendre, lam, ctx);
            CHECK(hp_charsum(datum, lam, ctx, g).value == phi_m1 * a);
            CHECK(hp_curve(2, lam, ctx).value == phi_m1 * a);
        }
    }
}

TEST_CASE("frozen d = 3 curve values at p = 7") {
    // verified by direct affine point enumeration on y^2 + xy + (lambda/27) y = x^3
    PrimeContext ctx = build_context(7);
    std::vector<i64> expected = {-1, 2, -4, 2, -1};  // lambda = 2..6
    for (i64 lam = 2; lam <= 6; ++lam)
        CHECK(hp_curve(3, lam, ctx).value == expected[static_cast<size_t>(lam - 2)]);
}

TEST_CASE("batch DFT equals the per-lambda character sum (HD(3,1), p = 13)") {
    PrimeContext ctx = build_context(13);
    GaussTable g = gauss_table(ctx);
    HGDatum datum = hd(3, 1);
    HGTable batch = hp_batch_dft(datum, ctx, g);
    REQUIRE(batch.num.size() == 13);
    REQUIRE(batch.den == 1);
    CHECK(batch.num[0] == 1);
    i128 total = batch.num[0];
    for (i64 lam = 1; lam < 13; ++lam) {
        CHECK(batch.num[static_cast<size_t>(lam)] == hp_charsum(datum, lam, ctx, g).value);
        total += batch.num[static_cast<size_t>(lam)];
    }
    CHECK(total == 0);  // first-moment orthogonality
}

TEST_CASE("curve, charsum and dft agree for every family at a split prime") {
    PrimeContext ctx = build_context(13);  // 13 = 1 mod 12: split for M in {2,3,4,6,12}
    GaussTable g = gauss_table(ctx);
    for (int d : {2, 3, 4, 6}) {
        HGDatum datum = hd(d, 1);
        HGTable batch = hp_batch_dft(datum, ctx, g);
        for (i64 lam = 0; lam < 13; ++lam) {
            INFO("d=" << d << " lambda=" << lam);
            CHECK(hp_curve(d, lam, ctx).value == batch.num[static_cast<size_t>(lam)]);
        }
    }
}

TEST_CASE("non-split primes are rejected by the character sum") {
    PrimeContext ctx = build_context(5);
    GaussTable g = gauss_table(ctx);
    CHECK_THROWS_AS(hp_charsum(hd(3, 1), 2, ctx, g), NonSplitPrime);
    CHECK_THROWS_AS(hp_batch_dft(hd3(3, 1), ctx, g), NonSplitPrime);
}

TEST_CASE("algebraic formulas: lambda = 1 specials") {
    for (i64 p : primes_in(5, 200)) {
        PrimeContext ctx = build_context(p);
        CHECK(hp_algebraic(hd(4, 2), 1, ctx).value == legendre_symbol(ctx, 2));
        CHECK(hp_algebraic(hd(3, 2), 1, ctx).value == 1);
        CHECK(hp_algebraic(hd(6, 2), 1, ctx).value == legendre_symbol(ctx, 3));
    }
}

TEST_CASE("algebraic formulas agree with the character sum at a split prime") {
    PrimeContext ctx = build_context(13);
    GaussTable g = gauss_table(ctx);
    for (const HGDatum& d :
         {hd(4, 2), hd(3, 2), hd(6, 2), hd3(4, 3), hd3(6, 4), hd3(6, 3)}) {
        HGTable batch = hp_batch_dft(d, ctx, g);
        for (i64 lam = 1; lam < 13; ++lam) {
            INFO(d.name << " lambda=" << lam);
            CHECK(hp_algebraic(d, lam, ctx).value == batch.num[static_cast<size_t>(lam)]);
        }
    }
}

TEST_CASE("the cubic root count sees the double root at lambda = 1") {
    for (i64 p : {7, 11, 101}) {
        PrimeContext ctx = build_context(p);
        CHECK(detail::cubic_root_count(1, ctx) == 3);  // (x-1)(x+2)^2
    }
}

TEST_CASE("method resolution follows curve > algebraic > dft order") {
    PrimeContext ctx7 = build_context(7);
    CHECK(resolve_method(hd(2, 1), ctx7) == Method::curve);
    CHECK(resolve_method(hd(4, 2), ctx7) == Method::algebraic);  // 4 does not divide 6
    CHECK(resolve_method(hd3(2, 3), ctx7) == Method::dft);       // M = 6 | 6
    CHECK_THROWS_AS(resolve_method(hd3(3, 4), ctx7), MethodInapplicable);  // M = 12, no route
    CHECK_THROWS_AS(hp_algebraic(hd(3, 2), 2, build_context(3)), SmallPrime);
}

TEST_CASE("the rounding rule accepts only near-integers") {
    CHECK(detail::round_exact(cplx(3.0 + 5e-5, -4e-5), "t") == 3);
    CHECK(detail::round_exact(cplx(1e9 + 0.05, 0.0), "t") == 1000000000);  // 1e-10 * |z| regime
    CHECK_THROWS_AS(detail::round_exact(cplx(2.5, 0.0), "t"), PrecisionLoss);
    CHECK_THROWS_AS(detail::round_exact(cplx(3.0, 0.01), "t"), PrecisionLoss);
}

TEST_CASE("denominator-p data: charsum and dft agree on exact rationals") {
    PrimeContext ctx = build_context(13);
    GaussTable g = gauss_table(ctx);
    HGDatum d = hd3(2, 3);  // values in (1/13) Z
    HGTable batch = hp_batch_dft(d, ctx, g);
    CHECK(batch.den == 13);
    for (i64 lam = 1; lam < 13; ++lam) {
        HGValue v = hp_charsum(d, lam, ctx, g);
        CHECK(v.value * batch.den == batch.num[static_cast<size_t>(lam)] * v.den);
    }
    CHECK(batch.num[0] == 13);  // H(0) = 1 stored as 13/13
    i64 num_sum = 0;
    for (i64 v : batch.num) num_sum += v;
    CHECK(num_sum == 0);  // first moment vanishes as an exact rational
}

TEST_CASE("half-lambda vanishing and the weight bound via the curve") {
    for (i64 p : primes_in(5, 60)) {
        PrimeContext ctx = build_context(p);
        for (int d : {2, 3, 4, 6}) {
            if (legendre_symbol(ctx, kappa_d(d)) == -1)
                CHECK(hp_curve(d, inv_mod(2, p), ctx).value == 0);
            double bound = 2.0 * std::sqrt(static_cast<double>(p));
            for (i64 lam = 2; lam < p; ++lam)
                CHECK(std::abs(static_cast<double>(hp_curve(d, lam, ctx).value)) <= bound);
        }
    }
}
