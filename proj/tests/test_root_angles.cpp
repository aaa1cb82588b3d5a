#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <cmath>

#include "shapiro/rng.hpp"
#include "shapiro/root_angles.hpp"
#include "shapiro/sturm.hpp"

using namespace shapiro;
using doctest::Approx;

namespace {

std::vector<cplx> to_complex(const std::vector<std::int8_t>& a) {
    std::vector<cplx> out;
    for (auto c : a) out.emplace_back(static_cast<double>(c), 0.0);
    return out;
}

}  // namespace

TEST_CASE("linear and quadratic roots") {
    const auto lin = find_roots({1.0, 1.0}, 1e-10);
    REQUIRE(lin.roots.size() == 1);
    CHECK(std::abs(lin.roots[0] - cplx(-1.0)) < 1e-12);
    CHECK(root_angle(lin.roots[0]) == Approx(std::numbers::pi));

    const auto quad = find_roots({-1.0, 0.0, 1.0}, 1e-10);
    std::vector<double> re{quad.roots[0].real(), quad.roots[1].real()};
    std::sort(re.begin(), re.end());
    CHECK(re[0] == Approx(-1.0));
    CHECK(re[1] == Approx(1.0));
}

TEST_CASE("P_3 roots: count and real-axis agreement with Sturm") {
    const auto pair = generate(3);
    const auto rs = find_roots(to_complex(pair.p_coeffs), default_tau_root(7));
    CHECK(rs.degree == 7);
    CHECK(rs.roots.size() == 7);
    int near_real = 0;
    for (const auto& r : rs.roots)
        if (std::abs(r.imag()) < 1e-6) ++near_real;
    CHECK(near_real == real_zero_count(pair, Which::P));
}

TEST_CASE("real-axis root counts match Sturm for 1 <= k <= 8") {
    for (int k = 1; k <= 8; ++k) {
        const auto pair = generate(k);
        for (auto which : {Which::P, Which::Q}) {
            const auto rs = find_roots(to_complex(coeffs_of(pair, which)),
                                       default_tau_root(pair.n - 1));
            int near_real = 0;
            for (const auto& r : rs.roots)
                if (std::abs(r.imag()) < 1e-6) ++near_real;
            CHECK(near_real == 1);
        }
    }
}

TEST_CASE("angular_count basics and golden for P_2") {
    const auto full = Arc::full_circle();
    const auto pair = generate(2);
    const auto rs = find_roots(to_complex(pair.p_coeffs), default_tau_root(3));
    CHECK(angular_count(rs, full) == 3);
    CHECK(angular_count(rs, Arc(1.0, 1.0)) == 0);
    // roots of 1 + z + z^2 - z^3: one positive real (angle 0), one conjugate
    // pair at angles ~2.176 and ~4.107
    CHECK(angular_count(rs, Arc(std::numbers::pi / 2.0, 3.0 * std::numbers::pi / 2.0)) == 2);
}

TEST_CASE("partition of the circle accounts for every root") {
    const auto pair = generate(5);
    const auto rs = find_roots(to_complex(pair.p_coeffs), default_tau_root(31));
    const double cuts[5] = {0.0, 1.1, 2.9, 4.0, two_pi};
    std::int64_t sum = 0;
    for (int i = 0; i < 4; ++i) {
        // half-open [a, b) handling, final arc closed
        std::int64_t c = 0;
        for (const auto& r : rs.roots) {
            const double theta = root_angle(r);
            const bool in = (i < 3) ? (theta >= cuts[i] && theta < cuts[i + 1])
                                    : (theta >= cuts[i] && theta <= cuts[i + 1]);
            if (in) ++c;
        }
        sum += c;
    }
    CHECK(sum == rs.degree);
}

TEST_CASE("residual scaling invariant") {
    for (int k : {4, 6, 8}) {
        const auto pair = generate(k);
        const auto rs = find_roots(to_complex(pair.p_coeffs), default_tau_root(pair.n - 1));
        CHECK(rs.residual <= default_tau_root(pair.n - 1));
    }
}

TEST_CASE("theorem 1.1 on equidistributed roots of z^n - 1") {
    std::vector<cplx> coeffs(17, 0.0);
    coeffs[0] = -1.0;
    coeffs[16] = 1.0;
    Lcg64 rng(5);
    std::vector<Arc> arcs;
    for (int i = 0; i < 12; ++i) arcs.push_back(random_arc(rng, 0.05));
    const auto rep = verify_theorem11(coeffs, arcs, EtConstant::sound8pi);
    CHECK_FALSE(rep.any_violation);
    for (const auto& d : rep.arcs) CHECK(d.discrepancy <= 1.0 + 1e-9);
}

TEST_CASE("theorem 1.1 on Rudin-Shapiro polynomials") {
    Lcg64 rng(11);
    std::vector<Arc> arcs;
    for (int i = 0; i < 20; ++i) arcs.push_back(random_arc(rng, 0.01));
    for (int k = 2; k <= 7; ++k) {
        const auto pair = generate(k);
        for (auto constant : {EtConstant::classic16, EtConstant::sound8pi}) {
            const auto rep = verify_theorem11(to_complex(pair.p_coeffs), arcs, constant);
            CHECK_FALSE(rep.any_violation);
            CHECK(rep.residual <= default_tau_root(pair.n - 1));
        }
    }
}

TEST_CASE("reciprocal pairs give reflection-symmetric angle counts") {
    // (z - 2)(z - 1/2)(z - 2i)(z + i/2) ... conjugate-reciprocal products
    // have angles symmetric under theta -> 2*pi - theta
    std::vector<cplx> coeffs{1.0};
    auto mul_root = [&](cplx r) {
        std::vector<cplx> next(coeffs.size() + 1, 0.0);
        for (std::size_t j = 0; j < coeffs.size(); ++j) {
            next[j + 1] += coeffs[j];
            next[j] -= coeffs[j] * r;
        }
        coeffs = next;
    };
    for (cplx r : {cplx(2.0, 1.0), cplx(0.4, 0.2), cplx(2.0, -1.0), cplx(0.4, -0.2)})
        mul_root(r);
    const auto rs = find_roots(coeffs, 1e-8);
    const Arc arc(0.1, 1.2);
    const Arc mirrored(two_pi - 1.2, two_pi - 0.1);
    CHECK(angular_count(rs, arc) == angular_count(rs, mirrored));
}

TEST_CASE("input validation") {
    CHECK_THROWS_AS(find_roots({1.0}, 1e-8), std::invalid_argument);
    CHECK_THROWS_AS(verify_theorem11({0.0, 1.0, 1.0}, {Arc::full_circle()},
                                     EtConstant::sound8pi),
                    std::invalid_argument);
}
