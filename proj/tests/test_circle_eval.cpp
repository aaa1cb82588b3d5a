#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <cstdint>
#include <numbers>

#include "shapiro/circle_eval.hpp"
#include "shapiro/rs_pair.hpp"

using namespace shapiro;
using doctest::Approx;

TEST_CASE("eval_point base cases") {
    const auto [p0, q0] = eval_point(generate(0), 1.234);
    CHECK(std::abs(p0 - cplx(1.0)) < 1e-15);
    CHECK(std::abs(q0 - cplx(1.0)) < 1e-15);

    const auto [p1, q1] = eval_point(generate(1), std::numbers::pi);
    CHECK(std::abs(p1) < 1e-15);  // 1 + e^{i pi} = 0

    const auto [p2, q2] = eval_point(generate(2), 0.0);
    CHECK(p2.real() == Approx(2.0));
    CHECK(q2.real() == Approx(2.0));
}

TEST_CASE("eval_grid level-0 and small grids") {
    const auto g = eval_grid(generate(0), 4);
    for (std::size_t j = 0; j < 4; ++j) {
        CHECK(std::abs(g.p_vals[j] - cplx(1.0)) == 0.0);
        CHECK(std::abs(g.q_vals[j] - cplx(1.0)) == 0.0);
    }
    const auto g2 = eval_grid(generate(2), 4);
    CHECK(g2.p_vals[0].real() == Approx(2.0));
}

TEST_CASE("eval_grid argument checks") {
    CHECK_THROWS_AS(eval_grid(generate(3), 4), grid_error);   // N < n
    CHECK_THROWS_AS(eval_grid(generate(2), 12), grid_error);  // not a power of two
    CHECK_THROWS_AS(eval_grid(generate(2), 64, 32), grid_error);
}

TEST_CASE("eval_grid matches the Horner reference at random indices") {
    std::uint64_t s = 12345;
    auto next = [&s] { s = s * 6364136223846793005ULL + 1442695040888963407ULL; return s; };
    for (int k = 0; k <= 12; ++k) {
        const auto pair = generate(k);
        const std::int64_t N = 4 * pair.n;
        const auto g = eval_grid(pair, N);
        const double tol = 1e-9 * std::sqrt(2.0 * static_cast<double>(pair.n));
        for (int trial = 0; trial < 64; ++trial) {
            const auto j = static_cast<std::int64_t>(next() % static_cast<std::uint64_t>(N));
            const double t = two_pi * static_cast<double>(j) / static_cast<double>(N);
            const auto [p, q] = eval_point(pair, t);
            CHECK(std::abs(g.p_vals[static_cast<std::size_t>(j)] - p) <= tol);
            CHECK(std::abs(g.q_vals[static_cast<std::size_t>(j)] - q) <= tol);
        }
    }
}

TEST_CASE("parallelogram identity on full grids") {
    CHECK(verify_parallelogram(eval_grid(generate(0), 8)) == 0.0);
    // |P_1(1)|^2 + |Q_1(1)|^2 = 4 + 0 = 2n
    const auto g1 = eval_grid(generate(1), 8);
    CHECK(std::norm(g1.p_vals[0]) + std::norm(g1.q_vals[0]) == Approx(4.0));
    for (int k = 2; k <= 14; ++k) {
        const auto pair = generate(k);
        CHECK(verify_parallelogram(eval_grid(pair, 8 * pair.n)) <= tol_grid(k));
    }
}

TEST_CASE("modulus reversal |Q(-z)| = |P(z)| on grids") {
    for (int k = 1; k <= 12; ++k) {
        const auto pair = generate(k);
        CHECK(verify_modulus_reversal(eval_grid(pair, 8 * pair.n)) <= tol_grid(k));
    }
}

TEST_CASE("lemma 3.1 identity deviations") {
    // k=2, j=0: P_2(1) = 2 P_0(1) = 2; k=2, j=1: P_2(i) = 2i
    const auto pair2 = generate(2);
    const auto [p_at_0, q_at_0] = eval_point(pair2, 0.0);
    CHECK(p_at_0.real() == Approx(2.0));
    const auto [p_at_i, q_at_i] = eval_point(pair2, two_pi / 4.0);
    CHECK(p_at_i.real() == Approx(0.0).epsilon(1e-12));
    CHECK(p_at_i.imag() == Approx(2.0));

    for (int k = 2; k <= 12; ++k)
        CHECK(verify_lemma31_identity(k) <= tol_grid(k));
}

TEST_CASE("sup norms") {
    const auto pair1 = generate(1);
    CHECK(sup_norm(pair1, SupTarget::P, 64) == Approx(2.0));
    for (int k = 1; k <= 12; ++k) {
        const auto pair = generate(k);
        const double n = static_cast<double>(pair.n);
        const std::int64_t N = 8 * pair.n;
        CHECK(sup_norm(pair, SupTarget::RMinusN, N) <= n + tol_grid(k));
        CHECK(sup_norm(pair, SupTarget::P, N) <= std::sqrt(2.0 * n) + tol_grid(k));
        CHECK(sup_norm(pair, SupTarget::Q, N) <= std::sqrt(2.0 * n) + tol_grid(k));
    }
    for (int k : {16, 20}) {
        const auto pair = generate(k);
        CHECK(sup_norm(pair, SupTarget::RMinusN, 8 * pair.n) <=
              static_cast<double>(pair.n) + tol_grid(k));
    }
}
