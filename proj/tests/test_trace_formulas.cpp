#include <catch2/catch_amalgamated.hpp>
#include <algorithm>

#include "hypermoment/eta.hpp"
#include "hypermoment/trace_formulas.hpp"

using namespace hypermoment;

TEST_CASE("G polynomial") {
    PrimeContext ctx = build_context(11);
    for (i64 s = -5; s <= 5; ++s) {
        CHECK(g_poly(2, s, 11) == 1);
        CHECK(g_poly(4, s, 11) == s * s - 11);
    }
    CHECK(g_poly(6, 2, 5) == -19);  // 16 - 60 + 25
    CHECK_THROWS_AS(g_poly(5, 2, 11), OddWeight);
    // kernel relation: sum_j (-1)^j C(k-j,j) p^j s^{k-2j} = G_{k+2}(s, p)
    for (i64 k : {2, 4, 6, 8})
        for (i64 s = -6; s <= 6; ++s)
            CHECK(detail::trace_kernel(k, s, 11) == g_poly(k + 2, s, 11));
}

TEST_CASE("delta3: resolved convention at pinned primes") {
    PrimeContext ctx7 = build_context(7);   // 1 mod 3
    PrimeContext ctx5 = build_context(5);   // 2 mod 3
    CHECK(delta3(1, ctx7) == 0);   // empty index set
    CHECK(delta3(2, ctx7) == -7);  // exponent-zero term, negated
    CHECK(delta3(3, ctx7) == -20); // J^3 + conj(J)^3 with J = 2 + 3 zeta_3
    CHECK(delta3(4, ctx7) == -49);
    CHECK(delta3(1, ctx5) == 0);
    CHECK(delta3(3, ctx5) == 0);
    CHECK(delta3(2, ctx5) == 5);    // -(-p)
    CHECK(delta3(4, ctx5) == -25);  // -(-p)^2
}

TEST_CASE("delta4: frozen integer index set") {
    PrimeContext ctx13 = build_context(13);
    PrimeContext ctx7 = build_context(7);
    PrimeContext ctx5 = build_context(5);
    CHECK(delta4(1, ctx13) == 13);  // only i = 0 in [-1/2, 1/2]
    CHECK(delta4(1, ctx7) == -7);   // (-p)^r branch
    CHECK(delta4(2, ctx7) == 49);
    CHECK(delta4(2, ctx5) == 11);   // J^4 + conj(J)^4 + p^2 = -14 + 25
    // the half-integer reading changes the value
    CHECK(delta4(1, ctx5, Delta4IndexSet::HalfIntegers) == -6);  // J^2 + conj(J)^2
}

TEST_CASE("empirical resolution reproduces the frozen conventions") {
    std::vector<i64> primes = primes_in(5, 79);  // 20 odd primes
    REQUIRE(primes.size() == 20);
    CHECK(resolve_delta3_central_sign(primes) == -1);
    CHECK(resolve_delta4_index_set(primes) == Delta4IndexSet::Integers);
}

TEST_CASE("the paper-facing sign/index alternatives fail the null tests") {
    PrimeContext ctx7 = build_context(7);
    HGTable hp3 = hp_table(hd(3, 1), ctx7, Method::curve);
    CHECK(trace_gamma1_3(2, ctx7, hp3.ints(), +1).trace != 0);  // positive central term
    PrimeContext ctx13 = build_context(13);
    HGTable hp4 = hp_table(hd(4, 1), ctx13, Method::curve);
    CHECK(trace_gamma0_2(1, ctx13, hp4.ints(), Delta4IndexSet::HalfIntegers).trace != 0);
}

TEST_CASE("dimension-zero list derived from the genus formulas") {
    std::vector<DimensionZeroCase> cases = dimension_zero_cases();
    auto has = [&](const std::string& g, i64 w) {
        return std::any_of(cases.begin(), cases.end(), [&](const DimensionZeroCase& c) {
            return c.group == g && c.weight == w;
        });
    };
    CHECK(has("Gamma_1(3)", 3));
    CHECK(has("Gamma_1(3)", 4));
    CHECK(has("Gamma_1(3)", 5));
    CHECK(has("Gamma_0(2)", 4));
    CHECK(has("Gamma_0(2)", 6));
    CHECK(has("Gamma_0(4)", 4));
    CHECK(has("Gamma_1(4)", 3));
    CHECK(has("Gamma_1(4)", 4));
    CHECK_FALSE(has("Gamma_1(4)", 5));  // S_5(Gamma_1(4)) is one-dimensional
    CHECK_FALSE(has("Gamma_0(8)", 4));  // S_4(Gamma_0(8)) is one-dimensional
}

TEST_CASE("null traces vanish across twenty primes") {
    std::vector<i64> primes = primes_in(5, 79);
    CHECK_NOTHROW(check_dimension_zero(primes));
}

TEST_CASE("frozen trace values at p = 5") {
    PrimeContext ctx = build_context(5);
    HGTable hp3 = hp_table(hd(3, 1), ctx, Method::curve);
    HGTable hp4 = hp_table(hd(4, 1), ctx, Method::curve);
    HGTable hp2 = hp_table(hd(2, 1), ctx, Method::curve);
    std::vector<i64> leg = frobenius_trace_table(CurveFamily::Legendre, ctx);
    CHECK(trace_gamma1_3(4, ctx, hp3.ints()).trace == 6);     // a_5 of eta(t)^6 eta(3t)^6
    CHECK(trace_gamma0_2(3, ctx, hp4.ints()).trace == -210);  // a_5 of eta(t)^8 eta(2t)^8
    CHECK(trace_gamma0_4(4, ctx, leg).trace == 54);    // a_5 of eta(2t)^12
    CHECK(trace_gamma0_8(2, ctx, leg).trace == -2);    // a_5 of eta(2t)^4 eta(4t)^4
    CHECK(trace_gamma1_4(3, ctx, hp2.ints()).trace == -14);   // a_5 of eta(t)^4 eta(2t)^2 eta(4t)^4
}

TEST_CASE("one-dimensional traces match the eta eigenforms for p <= 100") {
    std::vector<i64> c3 = eta_expansion(eta_level3_weight6(), 110);
    std::vector<i64> c2 = eta_expansion(eta_level2_weight8(), 110);
    std::vector<i64> c4 = eta_expansion(eta_level4_weight6(), 110);
    std::vector<i64> c8 = eta_expansion(eta_level8_weight4(), 110);
    std::vector<i64> c5 = eta_expansion(eta_level4_weight5(), 110);
    for (i64 p : primes_in(5, 100)) {
        PrimeContext ctx = build_context(p);
        HGTable hp3 = hp_table(hd(3, 1), ctx, Method::curve);
        HGTable hp4 = hp_table(hd(4, 1), ctx, Method::curve);
        HGTable hp2 = hp_table(hd(2, 1), ctx, Method::curve);
        std::vector<i64> leg = frobenius_trace_table(CurveFamily::Legendre, ctx);
        INFO("p = " << p);
        CHECK(trace_gamma1_3(4, ctx, hp3.ints()).trace == c3[static_cast<size_t>(p)]);
        CHECK(trace_gamma0_2(3, ctx, hp4.ints()).trace == c2[static_cast<size_t>(p)]);
        CHECK(trace_gamma0_4(4, ctx, leg).trace == c4[static_cast<size_t>(p)]);
        CHECK(trace_gamma0_8(2, ctx, leg).trace == c8[static_cast<size_t>(p)]);
        CHECK(trace_gamma1_4(3, ctx, hp2.ints()).trace == c5[static_cast<size_t>(p)]);
    }
}

TEST_CASE("even weights: Gamma_1(4) and Gamma_0(4) formulas coincide") {
    for (i64 p : primes_in(5, 79)) {
        PrimeContext ctx = build_context(p);
        HGTable hp2 = hp_table(hd(2, 1), ctx, Method::curve);
        std::vector<i64> leg = frobenius_trace_table(CurveFamily::Legendre, ctx);
        for (i64 k : {2, 4, 6, 8})
            CHECK(trace_gamma1_4(k, ctx, hp2.ints()).trace == trace_gamma0_4(k, ctx, leg).trace);
    }
}

TEST_CASE("the Gamma_0(4) formula is insensitive to the Koike rewriting") {
    for (i64 p : primes_in(5, 40)) {
        PrimeContext ctx = build_context(p);
        std::vector<i64> leg = frobenius_trace_table(CurveFamily::Legendre, ctx);
        HGTable hp2 = hp_table(hd(2, 1), ctx, Method::curve);
        std::vector<i64> rewritten(static_cast<size_t>(p), 0);
        i64 phi_m1 = legendre_symbol(ctx, p - 1);
        for (i64 lam = 2; lam < p; ++lam)
            rewritten[static_cast<size_t>(lam)] = phi_m1 * hp2.num[static_cast<size_t>(lam)];
        for (i64 k : {2, 4})
            CHECK(trace_gamma0_4(k, ctx, leg).trace == trace_gamma0_4(k, ctx, rewritten).trace);
    }
}

TEST_CASE("Deligne bound on one-dimensional traces") {
    for (i64 p : primes_in(5, 150)) {
        PrimeContext ctx = build_context(p);
        HGTable hp4 = hp_table(hd(4, 1), ctx, Method::curve);
        double bound = 2.0 * std::pow(static_cast<double>(p), 3.5);
        CHECK(std::abs(static_cast<double>(trace_gamma0_2(3, ctx, hp4.ints()).trace)) <= bound);
    }
}

TEST_CASE("delta terms are exact integers (realness assertion)") {
    for (i64 p : primes_in(5, 60)) {
        PrimeContext ctx = build_context(p);
        for (i64 k = 1; k <= 6; ++k) CHECK_NOTHROW(delta3(k, ctx));
        for (i64 r = 1; r <= 4; ++r) CHECK_NOTHROW(delta4(r, ctx));
    }
}
