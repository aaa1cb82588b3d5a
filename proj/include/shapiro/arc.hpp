#pragma once

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace shapiro {

inline constexpr double two_pi = 2.0 * std::numbers::pi;

// Closed sub-arc [alpha, beta] of [0, 2*pi].
struct Arc {
    double alpha = 0.0;
    double beta = 0.0;

    Arc() = default;
    Arc(double a, double b) : alpha(a), beta(b) {
        if (!(a >= 0.0 && a <= b && b <= two_pi + 1e-12))
            throw std::invalid_argument("arc: require 0 <= alpha <= beta <= 2*pi");
        if (beta > two_pi) beta = two_pi;
    }

    double length() const { return beta - alpha; }

    static Arc full_circle() { return Arc(0.0, two_pi); }
};

}  // namespace shapiro
