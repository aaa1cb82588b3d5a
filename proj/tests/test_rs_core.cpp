#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sstream>

#include "shapiro/autocorrelation.hpp"
#include "shapiro/io.hpp"
#include "shapiro/rs_pair.hpp"
#include "shapiro/sturm.hpp"

using namespace shapiro;

TEST_CASE("generate base cases") {
    const auto p0 = generate(0);
    CHECK(p0.p_coeffs == std::vector<std::int8_t>{1});
    CHECK(p0.q_coeffs == std::vector<std::int8_t>{1});

    const auto p1 = generate(1);
    CHECK(p1.p_coeffs == std::vector<std::int8_t>{1, 1});
    CHECK(p1.q_coeffs == std::vector<std::int8_t>{1, -1});

    const auto p2 = generate(2);
    CHECK(p2.p_coeffs == std::vector<std::int8_t>{1, 1, 1, -1});
    CHECK(p2.q_coeffs == std::vector<std::int8_t>{1, 1, -1, 1});
}

TEST_CASE("generate rejects out-of-range levels") {
    CHECK_THROWS_AS(generate(-1), std::invalid_argument);
    CHECK_THROWS_AS(generate(27), level_too_large_error);
    CHECK_THROWS_AS(generate(5, 4), level_too_large_error);
}

TEST_CASE("structural invariants and prefix property up to k=20") {
    RudinShapiroPair prev = generate(0);
    for (int k = 1; k <= 20; ++k) {
        const auto pair = generate(k);
        validate(pair);
        // first half of P_{k} is P_{k-1}, second half is Q_{k-1}
        const auto half = static_cast<std::size_t>(prev.n);
        for (std::size_t j = 0; j < half; ++j) {
            CHECK(pair.p_coeffs[j] == prev.p_coeffs[j]);
            CHECK(pair.p_coeffs[half + j] == prev.q_coeffs[j]);
            CHECK(pair.q_coeffs[j] == prev.p_coeffs[j]);
            CHECK(pair.q_coeffs[half + j] == -prev.q_coeffs[j]);
        }
        prev = pair;
    }
}

TEST_CASE("reversal identity sign per level") {
    // signs from hand expansion of (-1)^j q_j against reversed p
    CHECK(reversal_identity_check(generate(1)) == 1);
    CHECK(reversal_identity_check(generate(2)) == -1);
    CHECK(reversal_identity_check(generate(3)) == 1);
    for (int k = 0; k <= 20; ++k)
        CHECK_NOTHROW(reversal_identity_check(generate(k)));
}

TEST_CASE("reversal identity rejects a corrupted pair") {
    auto pair = generate(4);
    pair.q_coeffs[5] = -pair.q_coeffs[5];
    CHECK_THROWS_AS(reversal_identity_check(pair), identity_violation_error);
}

TEST_CASE("autocorrelation of P_2 by hand convolution") {
    const auto c = autocorrelation(generate(2), Which::P);
    CHECK(c == std::vector<std::int64_t>{4, 1, 0, -1});
}

TEST_CASE("autocorrelation endpoints for all k <= 20") {
    for (int k = 0; k <= 20; ++k) {
        const auto pair = generate(k);
        for (auto which : {Which::P, Which::Q}) {
            const auto c = autocorrelation(pair, which);
            CHECK(c[0] == pair.n);
            if (k >= 1) CHECK(std::abs(c[static_cast<std::size_t>(pair.n - 1)]) == 1);
        }
    }
}

TEST_CASE("direct and transform autocorrelation agree") {
    for (int k : {6, 9, 11}) {
        const auto pair = generate(k);
        CHECK(autocorrelation_direct(pair.p_coeffs) == autocorrelation_fft(pair.p_coeffs));
        CHECK(autocorrelation_direct(pair.q_coeffs) == autocorrelation_fft(pair.q_coeffs));
    }
}

TEST_CASE("sturm real zero counts") {
    CHECK(real_zero_count(generate(0), Which::P) == 0);
    for (int k = 1; k <= 8; ++k) {
        const auto pair = generate(k);
        CHECK(real_zero_count(pair, Which::P) == 1);
        CHECK(real_zero_count(pair, Which::Q) == 1);
    }
    CHECK_THROWS_AS(real_zero_count(generate(9), Which::P), level_too_large_error);
}

TEST_CASE("sturm handles simple polynomials") {
    // z^2 - 1: two real roots; z^2 + 1: none; (z-1)^2: one distinct
    CHECK(sturm_distinct_real_roots({-1, 0, 1}) == 2);
    CHECK(sturm_distinct_real_roots({1, 0, 1}) == 0);
    CHECK(sturm_distinct_real_roots({1, -2, 1}) == 1);
}

TEST_CASE("text round-trip is bit-exact") {
    for (int k : {0, 1, 5}) {
        const auto pair = generate(k);
        std::istringstream in(to_text(pair));
        const auto back = from_text(in);
        CHECK(back.k == pair.k);
        CHECK(back.p_coeffs == pair.p_coeffs);
        CHECK(back.q_coeffs == pair.q_coeffs);
        CHECK(to_text(back) == to_text(pair));
    }
}
