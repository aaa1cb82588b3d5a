#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <numbers>
#include <stdexcept>
#include <utility>
#include <vector>

#include "shapiro/arc.hpp"
#include "shapiro/circle_eval.hpp"
#include "shapiro/detail/parallel.hpp"
#include "shapiro/rs_pair.hpp"

namespace shapiro {

// Values closer to zero than numerical error cannot certify a sign.
inline double tau_zero(int k) { return 8.0 * tol_grid(k); }

inline double tau_tangency(int k) { return std::ldexp(1.0, k) * 1e-6; }

inline constexpr double tol_bisect = 1e-12;
inline constexpr int bisect_budget = 60;

struct Bracket {
    double lo = 0.0;
    double hi = 0.0;
};

// Certified crossings of R_k - n on an arc.  Suspect tangencies are local
// near-zero minima without a sign change; they never enter the certified
// count.
struct ZeroCountReport {
    int k = 0;
    std::int64_t n = 1;
    Arc arc;
    std::int64_t grid_N = 0;
    std::int64_t certified_crossings = 0;
    std::vector<Bracket> brackets;
    std::vector<double> suspect_tangencies;
    std::vector<double> refined_zeros;
    std::int64_t uncertain_points = 0;
};

namespace detail {

inline double bisect_zero(const RudinShapiroPair& pair, double lo, double hi,
                          double v_lo) {
    for (int it = 0; it < bisect_budget && (hi - lo) > tol_bisect; ++it) {
        const double mid = 0.5 * (lo + hi);
        const double v_mid = eval_r_minus_n(pair, mid);
        if (v_mid == 0.0) return mid;
        if ((v_lo < 0.0) == (v_mid < 0.0)) {
            lo = mid;
            v_lo = v_mid;
        } else {
            hi = mid;
        }
    }
    return 0.5 * (lo + hi);
}

}  // namespace detail

// Samples R_k - n at grid points inside the arc (plus the arc endpoints via
// Horner); strict sign changes between certain samples yield brackets, each
// containing at least one zero by the intermediate value theorem.
inline ZeroCountReport count_zeros(const RudinShapiroPair& pair, const Arc& arc,
                                   std::int64_t N, bool refine = false,
                                   std::int64_t grid_cap = default_grid_cap) {
    if (N < 8 * pair.n) throw grid_error("count_zeros: N >= 8n required");
    ZeroCountReport rep;
    rep.k = pair.k;
    rep.n = pair.n;
    rep.arc = arc;
    rep.grid_N = N;
    if (arc.length() == 0.0) return rep;

    const auto grid = eval_grid(pair, N, grid_cap);
    const double step = two_pi / static_cast<double>(N);
    const double nn = static_cast<double>(pair.n);

    std::vector<double> ts, vs;
    ts.push_back(arc.alpha);
    vs.push_back(eval_r_minus_n(pair, arc.alpha));
    const auto j_first = static_cast<std::int64_t>(std::floor(arc.alpha / step)) + 1;
    for (std::int64_t j = j_first; ; ++j) {
        const double t = static_cast<double>(j) * step;
        if (!(t > arc.alpha)) continue;
        if (!(t < arc.beta)) break;
        ts.push_back(t);
        vs.push_back(grid.r_vals[static_cast<std::size_t>(j % N)] - nn);
    }
    ts.push_back(arc.beta);
    vs.push_back(eval_r_minus_n(pair, arc.beta));

    const double tz = tau_zero(pair.k);
    const double tt = tau_tangency(pair.k);
    const std::size_t count = ts.size();

    std::ptrdiff_t last_certain = -1;
    for (std::size_t i = 0; i < count; ++i) {
        const double v = vs[i];
        if (std::abs(v) < tz) {
            ++rep.uncertain_points;
            continue;
        }
        if (last_certain >= 0 &&
            (vs[static_cast<std::size_t>(last_certain)] < 0.0) != (v < 0.0)) {
            rep.brackets.push_back({ts[static_cast<std::size_t>(last_certain)], ts[i]});
        }
        last_certain = static_cast<std::ptrdiff_t>(i);
    }
    rep.certified_crossings = static_cast<std::int64_t>(rep.brackets.size());

    // local |v| minima below the tangency threshold without a sign change
    for (std::size_t i = 1; i + 1 < count; ++i) {
        const double m = std::abs(vs[i]);
        if (m >= tt) continue;
        if (m > std::abs(vs[i - 1]) || m > std::abs(vs[i + 1])) continue;
        if ((vs[i - 1] < 0.0) != (vs[i + 1] < 0.0)) continue;
        rep.suspect_tangencies.push_back(ts[i]);
    }

    if (refine) {
        for (const auto& b : rep.brackets)
            rep.refined_zeros.push_back(
                detail::bisect_zero(pair, b.lo, b.hi, eval_r_minus_n(pair, b.lo)));
    }
    return rep;
}

// Brute-force ground truth for small k: dense scan with exact-zero runs,
// strict sign changes, and tangency probing by local rescans.
inline std::int64_t oracle_count(const RudinShapiroPair& pair, const Arc& arc,
                                 std::int64_t M) {
    if (pair.k > 8) throw level_too_large_error("oracle_count: k <= 8 required");
    if (M < 100000) throw std::invalid_argument("oracle_count: M >= 1e5 required");
    if (arc.length() == 0.0) return 0;

    const double len = arc.length();
    const double nn = static_cast<double>(pair.n);
    const auto total = static_cast<std::size_t>(M) + 1;
    std::vector<double> vs(total);
    detail::parallel_for(total, [&](std::size_t lo, std::size_t hi) {
        for (std::size_t i = lo; i < hi; ++i) {
            const double t = arc.alpha + len * (static_cast<double>(i) / static_cast<double>(M));
            vs[i] = eval_r_minus_n(pair, t);
        }
    });
    const auto t_at = [&](std::size_t i) {
        return arc.alpha + len * (static_cast<double>(i) / static_cast<double>(M));
    };

    const double z_eps = tau_zero(pair.k);
    const double tt = tau_tangency(pair.k);
    const double tau_confirm = nn * 1e-9;

    std::int64_t zeros = 0;

    // runs of samples indistinguishable from zero: one zero each, except a
    // run at the left endpoint (attributed to the neighboring arc)
    std::vector<bool> is_zero(total);
    for (std::size_t i = 0; i < total; ++i) is_zero[i] = std::abs(vs[i]) <= z_eps;
    for (std::size_t i = 0; i < total;) {
        if (!is_zero[i]) { ++i; continue; }
        std::size_t j = i;
        while (j + 1 < total && is_zero[j + 1]) ++j;
        if (i != 0) ++zeros;
        i = j + 1;
    }

    // strict sign changes between adjacent nonzero samples
    for (std::size_t i = 0; i + 1 < total; ++i)
        if (!is_zero[i] && !is_zero[i + 1] && (vs[i] < 0.0) != (vs[i + 1] < 0.0))
            ++zeros;

    // tangency probing: same-sign local minima of |v| below the threshold
    for (std::size_t i = 1; i + 1 < total; ++i) {
        if (is_zero[i] || is_zero[i - 1] || is_zero[i + 1]) continue;
        const double m = std::abs(vs[i]);
        if (m >= tt || m > std::abs(vs[i - 1]) || m > std::abs(vs[i + 1])) continue;
        if ((vs[i - 1] < 0.0) != (vs[i + 1] < 0.0)) continue;
        // rescan x100 between the neighbors
        const double a = t_at(i - 1), b = t_at(i + 1);
        const int fine = 200;
        double prev = eval_r_minus_n(pair, a);
        double best = std::abs(prev);
        double best_t = a;
        std::int64_t fine_crossings = 0;
        for (int f = 1; f <= fine; ++f) {
            const double t = a + (b - a) * (static_cast<double>(f) / fine);
            const double v = eval_r_minus_n(pair, t);
            if (std::abs(v) > z_eps && std::abs(prev) > z_eps &&
                (v < 0.0) != (prev < 0.0))
                ++fine_crossings;
            if (std::abs(v) < best) { best = std::abs(v); best_t = t; }
            prev = v;
        }
        if (fine_crossings > 0) {
            zeros += fine_crossings;
            continue;
        }
        // quadratic fit around the refined minimum estimates the true
        // extremal value; a genuine tangency fits to ~0
        const double h = (b - a) / fine;
        const double vm = eval_r_minus_n(pair, best_t - h);
        const double v0 = eval_r_minus_n(pair, best_t);
        const double vp = eval_r_minus_n(pair, best_t + h);
        const double curv = vm - 2.0 * v0 + vp;
        // parabola through the three points; extremal value of the fit
        double fitted = v0;
        if (curv != 0.0) fitted = v0 - (vp - vm) * (vp - vm) / (8.0 * curv);
        if (std::abs(fitted) <= tau_confirm || best <= z_eps) ++zeros;
    }
    return zeros;
}

// The product construction behind the lower bound: consecutive same-sign
// A_j = R_{k-2}(t_j) - n/4 certify a sign change of R_k - n in [t_j, t_{j+1}].
struct ProofConstruction {
    int k = 0;
    std::int64_t n = 1;
    Arc arc;
    std::int64_t h = 0;
    std::int64_t M = 0;
    std::int64_t n_pairs = 0;
    std::int64_t certified_distinct_lower = 0;
    std::int64_t uncertain_a_count = 0;
    std::vector<Bracket> intervals;
};

struct arc_too_short_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

namespace detail {

// Index i with t_i matching x within one ulp, else the requested rounding.
inline std::int64_t grid_index_floor(double x_over_step, double x, double step) {
    const auto r = static_cast<std::int64_t>(std::llround(x_over_step));
    const double tr = static_cast<double>(r) * step;
    if (std::abs(x - tr) <= std::abs(tr) * std::numeric_limits<double>::epsilon())
        return r;
    return static_cast<std::int64_t>(std::floor(x_over_step));
}

inline std::int64_t grid_index_ceil(double x_over_step, double x, double step) {
    const auto r = static_cast<std::int64_t>(std::llround(x_over_step));
    const double tr = static_cast<double>(r) * step;
    if (std::abs(x - tr) <= std::abs(tr) * std::numeric_limits<double>::epsilon())
        return r;
    return static_cast<std::int64_t>(std::ceil(x_over_step));
}

}  // namespace detail

inline ProofConstruction proof_construction(int k, const Arc& arc,
                                            int cap = level_cap()) {
    if (k < 2) throw std::invalid_argument("proof_construction: k >= 2 required");
    const std::int64_t n = std::int64_t{1} << k;
    const double min_len = 4.0 * std::numbers::pi / static_cast<double>(n);
    if (arc.length() < min_len)
        throw arc_too_short_error("proof_construction: |arc| >= 4*pi/n required");

    ProofConstruction pc;
    pc.k = k;
    pc.n = n;
    pc.arc = arc;
    const double step = two_pi / static_cast<double>(n);

    // t_h < alpha <= t_{h+1}  and  t_{h+M+1} <= beta < t_{h+M+2}
    const std::int64_t h_plus_1 =
        detail::grid_index_ceil(arc.alpha / step, arc.alpha, step);
    const std::int64_t top =
        detail::grid_index_floor(arc.beta / step, arc.beta, step);
    pc.h = h_plus_1 - 1;
    pc.M = top - pc.h - 1;
    if (pc.M < 2) return pc;

    const auto low = generate(k - 2, cap);
    const double tz = tau_zero(k >= 2 ? k - 2 : 0);

    std::vector<double> a_vals(static_cast<std::size_t>(pc.M));
    detail::parallel_for(a_vals.size(), [&](std::size_t lo, std::size_t hi) {
        for (std::size_t u = lo; u < hi; ++u) {
            const double t = static_cast<double>(pc.h + 1 + static_cast<std::int64_t>(u)) * step;
            // R_{k-2}(t) - n/4 with n/4 = 2^{k-2}
            a_vals[u] = eval_r_minus_n(low, t);
        }
    });

    for (const double a : a_vals)
        if (std::abs(a) < tz) ++pc.uncertain_a_count;

    for (std::size_t u = 0; u + 1 < a_vals.size(); ++u) {
        if (a_vals[u] * a_vals[u + 1] >= 0.0) {
            const std::int64_t j = pc.h + 1 + static_cast<std::int64_t>(u);
            pc.intervals.push_back({static_cast<double>(j) * step,
                                    static_cast<double>(j + 1) * step});
            ++pc.n_pairs;
        }
    }
    // adjacent certified intervals may share an endpoint zero
    pc.certified_distinct_lower = (pc.n_pairs + 1) / 2;
    return pc;
}

}  // namespace shapiro
