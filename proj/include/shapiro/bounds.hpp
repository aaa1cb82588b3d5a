#pragma once

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

#include "shapiro/arc.hpp"

namespace shapiro {

enum class BoundKind {
    theorem21,
    lemma32,
    lemma33,
    lemma34,
    theorem11_classic,
    theorem11_sound
};

inline const char* to_string(BoundKind kind) {
    switch (kind) {
        case BoundKind::theorem21: return "theorem21";
        case BoundKind::lemma32: return "lemma32";
        case BoundKind::lemma33: return "lemma33";
        case BoundKind::lemma34: return "lemma34";
        case BoundKind::theorem11_classic: return "theorem11_classic";
        default: return "theorem11_sound";
    }
}

// Raw bound values, never clamped; clamping to [0, inf) is presentation only.
struct BoundReport {
    BoundKind kind;
    std::int64_t k_or_m;
    Arc arc;
    double lower;   // meaningful for theorem21 only; 0 otherwise
    double upper;
    double log_base;
};

namespace detail {

inline double log_in_base(double x, double base) {
    return std::log(x) / std::log(base);
}

}  // namespace detail

inline constexpr double default_log_base = std::numbers::e;

// n|I|/(8 pi) - (2/pi) sqrt(2 n log n) - 1  <=  zero count  <=
// n|I|/pi + (8/pi) sqrt(2 n log n),  n = 2^k
inline BoundReport theorem21(int k, const Arc& arc, double log_base = default_log_base) {
    if (k < 2) throw std::invalid_argument("theorem21: stated for k >= 2");
    const double n = std::ldexp(1.0, k);
    const double len = arc.length();
    const double radical = std::sqrt(2.0 * n * detail::log_in_base(n, log_base));
    const double pi = std::numbers::pi;
    return {BoundKind::theorem21, k, arc,
            n * len / (8.0 * pi) - (2.0 / pi) * radical - 1.0,
            n * len / pi + (8.0 / pi) * radical, log_base};
}

// m|I|/pi + (8/pi) sqrt(2 m log H), for trigonometric polynomials
// T = +-2cos(m t) + lower-order terms with sup norm H.
inline double lemma32(std::int64_t m, double H, const Arc& arc,
                      double log_base = default_log_base) {
    if (m < 1) throw std::invalid_argument("lemma32: m >= 1 required");
    if (H < 1.0) throw std::invalid_argument("lemma32: H >= 1 required");
    const double pi = std::numbers::pi;
    return static_cast<double>(m) * arc.length() / pi +
           (8.0 / pi) * std::sqrt(2.0 * static_cast<double>(m) * detail::log_in_base(H, log_base));
}

inline double lemma33(int k, const Arc& arc, double log_base = default_log_base) {
    if (k < 0) throw std::invalid_argument("lemma33: k >= 0 required");
    const double n = std::ldexp(1.0, k);
    const double pi = std::numbers::pi;
    return n * arc.length() / pi +
           (8.0 / pi) * std::sqrt(2.0 * n * detail::log_in_base(n, log_base));
}

// Printed form: the radical keeps the full n even though the polynomial
// level drops to k-2.
inline double lemma34(int k, const Arc& arc, double log_base = default_log_base) {
    if (k < 2) throw std::invalid_argument("lemma34: k >= 2 required");
    const double n = std::ldexp(1.0, k);
    const double pi = std::numbers::pi;
    return n * arc.length() / (4.0 * pi) +
           (4.0 / pi) * std::sqrt(2.0 * n * detail::log_in_base(n, log_base));
}

enum class EtConstant { classic16, sound8pi };

// C sqrt(n log H) with C = 16 (classic) or 8/pi (Soundararajan); the caller
// compares |N(I,P) - n|I|/(2 pi)| against the returned value.
inline double theorem11(std::int64_t n, double H, EtConstant constant,
                        double log_base = default_log_base) {
    if (H < 1.0) throw std::invalid_argument("theorem11: H >= 1 required");
    const double C = (constant == EtConstant::classic16) ? 16.0 : 8.0 / std::numbers::pi;
    return C * std::sqrt(static_cast<double>(n) * detail::log_in_base(H, log_base));
}

}  // namespace shapiro
