#include <catch2/catch_amalgamated.hpp>

#include "hypermoment/eta.hpp"
#include "hypermoment/prime_field.hpp"

using namespace hypermoment;

TEST_CASE("weights and leading exponents") {
    CHECK(eta_level3_weight6().weight_times_two() == 12);
    CHECK(eta_level2_weight8().weight_times_two() == 16);
    CHECK(eta_level4_weight6().weight_times_two() == 12);
    CHECK(eta_level8_weight4().weight_times_two() == 8);
    CHECK(eta_level4_weight5().weight_times_two() == 10);
    for (const EtaProduct& e : {eta_level3_weight6(), eta_level2_weight8(), eta_level4_weight6(),
                                eta_level8_weight4(), eta_level4_weight5(), eta_discriminant()})
        CHECK(e.leading_exponent() == 1);
    CHECK_THROWS_AS((EtaProduct{{{1, 3}, {3, 3}}}.leading_exponent()), Error);  // 12/24
}

TEST_CASE("normalized leading coefficient is 1") {
    for (const EtaProduct& e : {eta_level3_weight6(), eta_level2_weight8(), eta_level4_weight6(),
                                eta_level8_weight4(), eta_level4_weight5()})
        CHECK(eta_ap(e, 1, 16) == 1);
}

TEST_CASE("tau(2) = -24 as an internal consistency pin") {
    CHECK(eta_ap(eta_discriminant(), 2, 16) == -24);
}

TEST_CASE("hand-expanded small coefficients") {
    // eta(tau)^6 eta(3tau)^6 = q - 6q^2 + 9q^3 + 4q^4 + 6q^5 - ...
    std::vector<i64> e3 = eta_expansion(eta_level3_weight6(), 8);
    CHECK(e3[1] == 1);
    CHECK(e3[2] == -6);
    CHECK(e3[3] == 9);
    CHECK(e3[4] == 4);
    CHECK(e3[5] == 6);
    // eta(tau)^8 eta(2tau)^8 = q - 8q^2 + 12q^3 + 64q^4 - 210q^5 - ...
    std::vector<i64> e2 = eta_expansion(eta_level2_weight8(), 8);
    CHECK(e2[2] == -8);
    CHECK(e2[3] == 12);
    CHECK(e2[4] == 64);
    CHECK(e2[5] == -210);
    // eta(2tau)^12 = q - 12q^3 + 54q^5 - 88q^7 - ... (odd exponents only)
    std::vector<i64> e4 = eta_expansion(eta_level4_weight6(), 8);
    CHECK(e4[2] == 0);
    CHECK(e4[3] == -12);
    CHECK(e4[5] == 54);
    CHECK(e4[7] == -88);
    // eta(2tau)^4 eta(4tau)^4 = q - 4q^3 - 2q^5 + 24q^7 - ...
    std::vector<i64> e8 = eta_expansion(eta_level8_weight4(), 8);
    CHECK(e8[3] == -4);
    CHECK(e8[5] == -2);
    CHECK(e8[7] == 24);
    // eta(tau)^4 eta(2tau)^2 eta(4tau)^4 = q - 4q^2 - 14q^5 + ...
    std::vector<i64> e5 = eta_expansion(eta_level4_weight5(), 8);
    CHECK(e5[2] == -4);
    CHECK(e5[5] == -14);
}

TEST_CASE("the weight-5 form has CM: a_p = 0 for p = 3 mod 4") {
    std::vector<i64> coeffs = eta_expansion(eta_level4_weight5(), 210);
    for (i64 p : primes_in(3, 200))
        if (p % 4 == 3) CHECK(coeffs[static_cast<size_t>(p)] == 0);
}

TEST_CASE("Deligne bound |a_p| <= 2 p^{(k-1)/2} for the eigenform products") {
    struct Case { EtaProduct e; i64 weight; };
    for (const Case& c : {Case{eta_level3_weight6(), 6}, Case{eta_level2_weight8(), 8},
                          Case{eta_level4_weight6(), 6}, Case{eta_level8_weight4(), 4},
                          Case{eta_level4_weight5(), 5}}) {
        std::vector<i64> coeffs = eta_expansion(c.e, 210);
        for (i64 p : primes_in(2, 200)) {
            double bound = 2.0 * std::pow(static_cast<double>(p), (c.weight - 1) / 2.0);
            CHECK(std::abs(static_cast<double>(coeffs[static_cast<size_t>(p)])) <= bound + 1e-9);
        }
    }
}

TEST_CASE("too-short expansions are rejected") {
    CHECK_THROWS_AS(eta_ap(eta_discriminant(), 50, 50), InsufficientTerms);
}
