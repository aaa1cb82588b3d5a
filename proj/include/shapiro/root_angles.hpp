#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdint>
#include <numbers>
#include <stdexcept>
#include <vector>

#include "shapiro/arc.hpp"
#include "shapiro/bounds.hpp"
#include "shapiro/circle_eval.hpp"

namespace shapiro {

struct convergence_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Roots alpha_j = rho_j e^{i theta_j} of a dense polynomial; residual is
// the worst backward error max_j |P(alpha_j)| / sum_i |a_i| |alpha_j|^i,
// which stays meaningful for roots far outside the unit circle.
struct RootSet {
    std::int64_t degree = 0;
    std::vector<cplx> roots;
    double residual = 0.0;
};

namespace detail {

inline cplx horner(const std::vector<cplx>& coeffs, cplx z) {
    cplx v = 0.0;
    for (std::size_t j = coeffs.size(); j-- > 0;) v = v * z + coeffs[j];
    return v;
}

inline void horner_with_derivative(const std::vector<cplx>& coeffs, cplx z,
                                   cplx& value, cplx& deriv) {
    value = 0.0;
    deriv = 0.0;
    for (std::size_t j = coeffs.size(); j-- > 0;) {
        deriv = deriv * z + value;
        value = value * z + coeffs[j];
    }
}

}  // namespace detail

inline constexpr int aberth_sweep_budget = 500;

// Aberth-Ehrlich simultaneous iteration with Newton polish; coefficients in
// ascending order, leading coefficient nonzero, degree <= 1024.
inline RootSet find_roots(const std::vector<cplx>& coeffs_in, double tau_root,
                          int sweep_budget = aberth_sweep_budget) {
    std::vector<cplx> coeffs = coeffs_in;
    while (coeffs.size() > 1 && std::abs(coeffs.back()) == 0.0) coeffs.pop_back();
    const auto degree = static_cast<std::int64_t>(coeffs.size()) - 1;
    if (degree < 1) throw std::invalid_argument("find_roots: degree >= 1 required");
    if (degree > 1024) throw std::invalid_argument("find_roots: degree cap 1024");

    double scale = 0.0;
    for (const auto& c : coeffs_in) scale = std::max(scale, std::abs(c));

    // deterministic start: circle of radius (|a_0|/|a_n|)^(1/n) with
    // golden-angle offsets
    const double radius =
        std::pow(std::max(std::abs(coeffs[0]), 1e-300) / std::abs(coeffs.back()),
                 1.0 / static_cast<double>(degree));
    std::vector<cplx> z(static_cast<std::size_t>(degree));
    const double slot = two_pi / static_cast<double>(degree);
    const double inv_phi = 1.0 / std::numbers::phi;
    for (std::size_t i = 0; i < z.size(); ++i) {
        // equally spaced slots; the golden-ratio jitter breaks conjugate
        // symmetry without letting start points coincide
        const double frac = std::fmod(static_cast<double>(i) * inv_phi, 1.0);
        const double angle = slot * (static_cast<double>(i) + 0.25 + 0.5 * frac);
        z[i] = std::polar(radius * 1.05, angle);
    }

    bool converged = false;
    for (int sweep = 0; sweep < sweep_budget && !converged; ++sweep) {
        double max_step = 0.0;
        for (std::size_t i = 0; i < z.size(); ++i) {
            cplx p, dp;
            detail::horner_with_derivative(coeffs, z[i], p, dp);
            if (p == cplx(0.0)) continue;
            const cplx newton = (dp == cplx(0.0)) ? cplx(1e-3) : p / dp;
            cplx sum = 0.0;
            for (std::size_t j = 0; j < z.size(); ++j)
                if (j != i) sum += 1.0 / (z[i] - z[j]);
            const cplx denom = 1.0 - newton * sum;
            const cplx step = (denom == cplx(0.0)) ? newton : newton / denom;
            z[i] -= step;
            max_step = std::max(max_step, std::abs(step) / (1.0 + std::abs(z[i])));
        }
        converged = max_step < 1e-14;
    }

    // Newton polish
    for (auto& zi : z) {
        for (int it = 0; it < 4; ++it) {
            cplx p, dp;
            detail::horner_with_derivative(coeffs, zi, p, dp);
            if (dp == cplx(0.0)) break;
            zi -= p / dp;
        }
    }

    RootSet rs;
    rs.degree = degree;
    rs.roots = std::move(z);
    double worst = 0.0;
    for (const auto& r : rs.roots) {
        const double rho = std::abs(r);
        double denom = 0.0;
        for (std::size_t j = coeffs.size(); j-- > 0;)
            denom = denom * rho + std::abs(coeffs[j]);
        worst = std::max(worst, std::abs(detail::horner(coeffs, r)) / std::max(denom, scale));
    }
    rs.residual = worst;
    if (rs.residual > tau_root)
        throw convergence_error("find_roots: residual above tolerance after budget");
    return rs;
}

inline double default_tau_root(std::int64_t degree) {
    return 1e-8 * static_cast<double>(degree);
}

// theta in [0, 2*pi); angles within 1e-12 of a full turn snap to 0.
inline double root_angle(cplx root) {
    double theta = std::atan2(root.imag(), root.real());
    if (theta < 0.0) theta += two_pi;
    if (theta < 1e-12 || theta > two_pi - 1e-12) theta = 0.0;
    return theta;
}

// Roots with angle in the closed arc.
inline std::int64_t angular_count(const RootSet& rs, const Arc& arc) {
    std::int64_t count = 0;
    for (const auto& r : rs.roots) {
        const double theta = root_angle(r);
        if (theta >= arc.alpha && theta <= arc.beta) ++count;
    }
    return count;
}

struct ArcDiscrepancy {
    Arc arc;
    std::int64_t count = 0;
    double discrepancy = 0.0;
    double bound = 0.0;
    bool violation = false;
};

struct Theorem11Report {
    std::int64_t degree = 0;
    double H = 0.0;
    double residual = 0.0;
    std::vector<ArcDiscrepancy> arcs;
    bool any_violation = false;
};

namespace detail {

// sup-norm on the unit circle by dense sampling plus golden polish
inline double circle_sup(const std::vector<cplx>& coeffs) {
    const auto degree = static_cast<std::int64_t>(coeffs.size()) - 1;
    const std::int64_t N = std::max<std::int64_t>(4096, 16 * degree);
    double best = -1.0;
    std::int64_t best_j = 0;
    for (std::int64_t j = 0; j < N; ++j) {
        const double t = two_pi * static_cast<double>(j) / static_cast<double>(N);
        const double v = std::abs(horner(coeffs, std::polar(1.0, t)));
        if (v > best) { best = v; best_j = j; }
    }
    const double step = two_pi / static_cast<double>(N);
    const double t0 = static_cast<double>(best_j) * step;
    const double polished = golden_max(
        [&](double t) { return std::abs(horner(coeffs, std::polar(1.0, t))); },
        t0 - step, t0 + step);
    return std::max(best, polished);
}

}  // namespace detail

// Equidistribution check: for each arc, |N(I,P) - n|I|/(2 pi)| against
// C sqrt(n log H) with H measured from the monic normalization.
inline Theorem11Report verify_theorem11(const std::vector<cplx>& coeffs,
                                        const std::vector<Arc>& arcs,
                                        EtConstant constant,
                                        double log_base = default_log_base) {
    if (coeffs.size() < 2 || std::abs(coeffs.back()) == 0.0)
        throw std::invalid_argument("verify_theorem11: need degree >= 1, leading nonzero");
    if (std::abs(coeffs.front()) == 0.0)
        throw std::invalid_argument("verify_theorem11: a_0 must be nonzero");

    std::vector<cplx> monic(coeffs.size());
    for (std::size_t j = 0; j < coeffs.size(); ++j) monic[j] = coeffs[j] / coeffs.back();

    Theorem11Report rep;
    rep.degree = static_cast<std::int64_t>(coeffs.size()) - 1;
    rep.H = detail::circle_sup(monic) / std::sqrt(std::abs(monic.front()));
    const auto rs = find_roots(monic, default_tau_root(rep.degree));
    rep.residual = rs.residual;

    const double n = static_cast<double>(rep.degree);
    for (const auto& arc : arcs) {
        ArcDiscrepancy d;
        d.arc = arc;
        d.count = angular_count(rs, arc);
        d.discrepancy = std::abs(static_cast<double>(d.count) - n * arc.length() / two_pi);
        d.bound = theorem11(rep.degree, std::max(rep.H, 1.0), constant, log_base);
        d.violation = d.discrepancy > d.bound;
        rep.any_violation = rep.any_violation || d.violation;
        rep.arcs.push_back(d);
    }
    return rep;
}

}  // namespace shapiro
