#pragma once

#include <cmath>
#include <complex>
#include <cstdint>
#include <limits>
#include <numbers>
#include <stdexcept>
#include <utility>
#include <vector>

#include "shapiro/arc.hpp"
#include "shapiro/detail/parallel.hpp"
#include "shapiro/rs_pair.hpp"

namespace shapiro {

struct grid_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// k butterfly stages each add O(eps) relative error; squared magnitudes
// scale with n.  Pinned by regression tests.
inline double tol_grid(int k) {
    const double n = std::ldexp(1.0, k);
    return 64.0 * k * std::numeric_limits<double>::epsilon() * n;
}

using cplx = std::complex<double>;

// Horner on the exact integer coefficients; the reference evaluator.
inline std::pair<cplx, cplx> eval_point(const RudinShapiroPair& pair, double t) {
    const cplx z = std::polar(1.0, t);
    cplx p = 0.0, q = 0.0;
    for (std::size_t j = pair.p_coeffs.size(); j-- > 0;) {
        p = p * z + static_cast<double>(pair.p_coeffs[j]);
        q = q * z + static_cast<double>(pair.q_coeffs[j]);
    }
    return {p, q};
}

inline double eval_r_minus_n(const RudinShapiroPair& pair, double t) {
    const cplx z = std::polar(1.0, t);
    cplx p = 0.0;
    for (std::size_t j = pair.p_coeffs.size(); j-- > 0;)
        p = p * z + static_cast<double>(pair.p_coeffs[j]);
    return std::norm(p) - static_cast<double>(pair.n);
}

// Values of P_k, Q_k, R_k = |P_k|^2 at t_j = 2*pi*j/N.
struct EvalGrid {
    int k = 0;
    std::int64_t n = 1;
    std::int64_t N = 0;
    std::vector<cplx> p_vals;
    std::vector<cplx> q_vals;
    std::vector<double> r_vals;
};

inline constexpr std::int64_t default_grid_cap = std::int64_t{1} << 24;

inline double two_pi_times(std::uint64_t m, double inv_N) {
    return two_pi * (static_cast<double>(m) * inv_N);
}

// Pointwise level recursion: at stage s the twiddle is omega_N^{j*2^s}, with
// the exponent reduced mod N before the one sincos call.  O(k*N) total.
inline EvalGrid eval_grid(const RudinShapiroPair& pair, std::int64_t N,
                          std::int64_t cap = default_grid_cap) {
    if (N < pair.n || (N & (N - 1)) != 0)
        throw grid_error("eval_grid: N must be a power of two >= n");
    if (N > cap) throw grid_error("eval_grid: grid too large");
    EvalGrid g;
    g.k = pair.k;
    g.n = pair.n;
    g.N = N;
    g.p_vals.resize(static_cast<std::size_t>(N));
    g.q_vals.resize(static_cast<std::size_t>(N));
    g.r_vals.resize(static_cast<std::size_t>(N));
    const int k = pair.k;
    const double inv_N = 1.0 / static_cast<double>(N);
    const std::uint64_t mask = static_cast<std::uint64_t>(N) - 1;
    detail::parallel_for(static_cast<std::size_t>(N), [&](std::size_t lo, std::size_t hi) {
        for (std::size_t j = lo; j < hi; ++j) {
            cplx p = 1.0, q = 1.0;
            for (int s = 0; s < k; ++s) {
                const std::uint64_t m = (static_cast<std::uint64_t>(j) << s) & mask;
                const cplx w = std::polar(1.0, two_pi_times(m, inv_N));
                const cplx wq = w * q;
                q = p - wq;
                p = p + wq;
            }
            g.p_vals[j] = p;
            g.q_vals[j] = q;
            g.r_vals[j] = std::norm(p);
        }
    });
    return g;
}

// max_j | |P|^2 + |Q|^2 - 2n |
inline double verify_parallelogram(const EvalGrid& g) {
    const double target = 2.0 * static_cast<double>(g.n);
    double dev = 0.0;
    for (std::size_t j = 0; j < g.p_vals.size(); ++j)
        dev = std::max(dev, std::abs(std::norm(g.p_vals[j]) + std::norm(g.q_vals[j]) - target));
    return dev;
}

// max_j | |Q(-z_j)| - |P(z_j)| | via the half-grid index shift.
inline double verify_modulus_reversal(const EvalGrid& g) {
    const std::size_t N = g.p_vals.size();
    double dev = 0.0;
    for (std::size_t j = 0; j < N; ++j) {
        const std::size_t shifted = (j + N / 2) & (N - 1);
        dev = std::max(dev, std::abs(std::abs(g.q_vals[shifted]) - std::abs(g.p_vals[j])));
    }
    return dev;
}

// Deviation of P_k(z_j) from 2 P_{k-2}(z_j) (even j) and from
// (-1)^((j-1)/2) 2i Q_{k-2}(z_j) (odd j), over z_j = e^{2*pi*i*j/n}.
inline double verify_lemma31_identity(int k, int cap = level_cap()) {
    if (k < 2) throw std::invalid_argument("verify_lemma31_identity: k >= 2 required");
    const auto pair_k = generate(k, cap);
    const auto pair_low = generate(k - 2, cap);
    const std::int64_t n = pair_k.n;
    const auto gk = eval_grid(pair_k, n);
    const auto gl = eval_grid(pair_low, n);
    double dev = 0.0;
    for (std::int64_t j = 0; j < n; ++j) {
        const auto idx = static_cast<std::size_t>(j);
        cplx expected;
        if (j % 2 == 0) {
            expected = 2.0 * gl.p_vals[idx];
        } else {
            const double sgn = (((j - 1) / 2) % 2 == 0) ? 1.0 : -1.0;
            expected = sgn * cplx(0.0, 2.0) * gl.q_vals[idx];
        }
        dev = std::max(dev, std::abs(gk.p_vals[idx] - expected));
    }
    return dev;
}

enum class SupTarget { P, Q, RMinusN };

namespace detail {

inline double sup_objective(const RudinShapiroPair& pair, SupTarget w, double t) {
    const auto [p, q] = eval_point(pair, t);
    switch (w) {
        case SupTarget::P: return std::abs(p);
        case SupTarget::Q: return std::abs(q);
        default: return std::abs(std::norm(p) - static_cast<double>(pair.n));
    }
}

// Golden-section maximization on [a, b].
template <typename F>
double golden_max(F f, double a, double b) {
    constexpr double inv_phi = 0.6180339887498949;
    double c = b - inv_phi * (b - a);
    double d = a + inv_phi * (b - a);
    double fc = f(c), fd = f(d);
    for (int it = 0; it < 80 && (b - a) > 1e-13; ++it) {
        if (fc > fd) {
            b = d; d = c; fd = fc;
            c = b - inv_phi * (b - a);
            fc = f(c);
        } else {
            a = c; c = d; fc = fd;
            d = a + inv_phi * (b - a);
            fd = f(d);
        }
    }
    return std::max(fc, fd);
}

}  // namespace detail

// Grid maximum of the selected modulus, polished around the best grid point.
inline double sup_norm(const RudinShapiroPair& pair, SupTarget which, std::int64_t N) {
    if (N < 8 * pair.n) throw grid_error("sup_norm: N >= 8n required");
    const auto g = eval_grid(pair, N);
    std::size_t best = 0;
    double best_val = -1.0;
    for (std::size_t j = 0; j < g.p_vals.size(); ++j) {
        double v;
        switch (which) {
            case SupTarget::P: v = std::abs(g.p_vals[j]); break;
            case SupTarget::Q: v = std::abs(g.q_vals[j]); break;
            default: v = std::abs(g.r_vals[j] - static_cast<double>(g.n)); break;
        }
        if (v > best_val) { best_val = v; best = j; }
    }
    const double step = two_pi / static_cast<double>(N);
    const double t0 = static_cast<double>(best) * step;
    const double polished = detail::golden_max(
        [&](double t) { return detail::sup_objective(pair, which, t); },
        t0 - step, t0 + step);
    return std::max(best_val, polished);
}

}  // namespace shapiro
