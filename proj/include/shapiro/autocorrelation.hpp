#pragma once

#include <cmath>
#include <complex>
#include <cstdint>
#include <vector>

#include "shapiro/detail/fft.hpp"
#include "shapiro/rs_pair.hpp"

namespace shapiro {

// c_m = sum_j a_j a_{j+m}; these are the cosine-series coefficients of the
// squared modulus on the circle: |A(e^{it})|^2 = c_0 + 2 sum_{m>=1} c_m cos(mt).
inline std::vector<std::int64_t> autocorrelation_direct(const std::vector<std::int8_t>& a) {
    const std::size_t n = a.size();
    std::vector<std::int64_t> c(n, 0);
    for (std::size_t m = 0; m < n; ++m) {
        std::int64_t s = 0;
        for (std::size_t j = 0; j + m < n; ++j) s += std::int64_t{a[j]} * a[j + m];
        c[m] = s;
    }
    return c;
}

inline std::vector<std::int64_t> autocorrelation_fft(const std::vector<std::int8_t>& a) {
    const std::size_t n = a.size();
    std::size_t m = 1;
    while (m < 2 * n) m <<= 1;
    std::vector<std::complex<double>> buf(m);
    for (std::size_t j = 0; j < n; ++j) buf[j] = static_cast<double>(a[j]);
    detail::fft(buf, false);
    for (auto& x : buf) x = x * std::conj(x);
    detail::fft(buf, true);
    std::vector<std::int64_t> c(n);
    for (std::size_t i = 0; i < n; ++i) c[i] = std::llround(buf[i].real());
    return c;
}

// Direct O(n^2) sum up to n = 4096, transform-based product above.
inline std::vector<std::int64_t> autocorrelation(const RudinShapiroPair& pair, Which which) {
    const auto& a = coeffs_of(pair, which);
    return a.size() <= 4096 ? autocorrelation_direct(a) : autocorrelation_fft(a);
}

}  // namespace shapiro
