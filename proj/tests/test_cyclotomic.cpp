#include <catch2/catch_amalgamated.hpp>
#include <random>

#include "hypermoment/cyclotomic.hpp"

using namespace hypermoment;

namespace {

CyclotomicInt random_element(int n, std::mt19937& rng) {
    std::uniform_int_distribution<i64> dist(-9, 9);
    CyclotomicInt z(n);
    for (int j = 0; j < n; ++j) z.coeff(j) = dist(rng);
    return z;
}

}  // namespace

TEST_CASE("ring laws hold for random elements (N <= 12)") {
    std::mt19937 rng(7);
    for (int n : {1, 2, 3, 4, 6, 8, 12}) {
        for (int trial = 0; trial < 25; ++trial) {
            CyclotomicInt a = random_element(n, rng);
            CyclotomicInt b = random_element(n, rng);
            CyclotomicInt c = random_element(n, rng);
            CHECK(a + b == b + a);
            CHECK(a * b == b * a);
            CHECK((a + b) + c == a + (b + c));
            CHECK((a * b) * c == a * (b * c));
            CHECK(a * (b + c) == a * b + a * c);
        }
    }
}

TEST_CASE("embedding is a ring homomorphism") {
    std::mt19937 rng(11);
    for (int n : {3, 4, 5, 6, 12}) {
        for (int trial = 0; trial < 10; ++trial) {
            CyclotomicInt a = random_element(n, rng);
            CyclotomicInt b = random_element(n, rng);
            CHECK(std::abs((a + b).embed() - (a.embed() + b.embed())) < 1e-9);
            CHECK(std::abs((a * b).embed() - a.embed() * b.embed()) < 1e-7);
        }
    }
}

TEST_CASE("equality is decided modulo the cyclotomic polynomial") {
    // 1 + zeta_3 + zeta_3^2 = 0
    CyclotomicInt z(3);
    z.coeff(0) = z.coeff(1) = z.coeff(2) = 1;
    CHECK(z.is_zero());
    CHECK(z == CyclotomicInt(3, 0));

    // zeta_4^2 = -1
    CHECK(CyclotomicInt::zeta_power(4, 2) == CyclotomicInt(4, -1));

    // zeta_6 = 1 + zeta_6^{-2} is false, but zeta_6^2 - zeta_6 + 1 = 0
    CyclotomicInt w = CyclotomicInt::zeta_power(6, 2) - CyclotomicInt::zeta_power(6, 1) +
                      CyclotomicInt(6, 1);
    CHECK(w.is_zero());
}

TEST_CASE("embedding agrees with reduction to within 1e-9") {
    std::mt19937 rng(3);
    for (int n : {8, 12, 24}) {
        CyclotomicInt a = random_element(n, rng);
        std::vector<i64> red = a.reduced();
        CyclotomicInt canon(n);
        for (size_t j = 0; j < red.size(); ++j) canon.coeff(static_cast<i64>(j)) = red[j];
        CHECK(std::abs(a.embed() - canon.embed()) < 1e-9 * (1.0 + std::abs(a.embed())));
    }
}

TEST_CASE("integer extraction") {
    CyclotomicInt z(12, 42);
    CHECK(z.is_integer());
    CHECK(z.to_integer() == 42);
    CyclotomicInt w = CyclotomicInt::zeta_power(12, 1);
    CHECK_FALSE(w.is_integer());
    CHECK_THROWS_AS(w.to_integer(), NonRealDelta);

    // conjugation-symmetric combinations are rational integers:
    // zeta + zeta^{-1} for N = 6 equals 1
    CyclotomicInt s = CyclotomicInt::zeta_power(6, 1) + CyclotomicInt::zeta_power(6, -1);
    CHECK(s.to_integer() == 1);
}

TEST_CASE("conductor lift preserves values") {
    CyclotomicInt z3 = CyclotomicInt::zeta_power(3, 1);
    CyclotomicInt z12 = z3.lifted(12);
    CHECK(std::abs(z3.embed() - z12.embed()) < 1e-12);
    CHECK(z3 == z12);  // mixed-conductor equality via lcm alignment
}
