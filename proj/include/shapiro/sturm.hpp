#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <stdexcept>
#include <vector>

#include "shapiro/rs_pair.hpp"

namespace shapiro {

namespace detail {

using bigint = boost::multiprecision::cpp_int;
using ipoly = std::vector<bigint>;  // ascending, no trailing zeros

inline void trim(ipoly& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

inline bigint content(const ipoly& p) {
    bigint g = 0;
    for (const auto& c : p) g = boost::multiprecision::gcd(g, c);
    return g == 0 ? bigint(1) : g;
}

// divide by the positive content only; scaling by a negative factor would
// corrupt the Sturm sign sequence
inline void make_primitive(ipoly& p) {
    const bigint g = content(p);
    if (g > 1)
        for (auto& c : p) c /= g;
}

inline ipoly derivative(const ipoly& p) {
    ipoly d;
    for (std::size_t j = 1; j < p.size(); ++j) d.push_back(p[j] * static_cast<std::int64_t>(j));
    trim(d);
    return d;
}

// Negated pseudo-remainder, made primitive; content removal at every step
// keeps the chain coefficients from blowing up.
inline ipoly neg_prem_primitive(ipoly u, const ipoly& v) {
    const std::size_t dv = v.size() - 1;
    const bigint lv_abs = boost::multiprecision::abs(v.back());
    while (u.size() >= v.size() && !u.empty()) {
        const std::size_t du = u.size() - 1;
        for (auto& c : u) c *= lv_abs;
        const bigint factor = u.back() / v.back();
        for (std::size_t j = 0; j <= dv; ++j)
            u[du - dv + j] -= factor * v[j];
        trim(u);
        // intermediate content removal keeps the coefficients small
        const bigint g = content(u);
        if (g > 1)
            for (auto& c : u) c /= g;
    }
    for (auto& c : u) c = -c;
    return u;
}

inline int sign_of(const bigint& x) { return x == 0 ? 0 : (x > 0 ? 1 : -1); }

// Sign variations of the chain at -inf / +inf.
inline int variations_at_infinity(const std::vector<ipoly>& chain, bool negative) {
    int prev = 0, var = 0;
    for (const auto& f : chain) {
        if (f.empty()) continue;
        int s = sign_of(f.back());
        if (negative && ((f.size() - 1) & 1)) s = -s;
        if (prev != 0 && s != 0 && s != prev) ++var;
        if (s != 0) prev = s;
    }
    return var;
}

}  // namespace detail

// Number of distinct real roots of the integer polynomial with the given
// ascending coefficients, by a Sturm chain over exact arithmetic.
inline int sturm_distinct_real_roots(const std::vector<std::int8_t>& coeffs) {
    detail::ipoly f0;
    for (auto c : coeffs) f0.push_back(c);
    detail::trim(f0);
    if (f0.size() <= 1) return 0;
    std::vector<detail::ipoly> chain;
    chain.push_back(f0);
    chain.push_back(detail::derivative(f0));
    while (chain.back().size() > 1) {
        auto r = detail::neg_prem_primitive(chain[chain.size() - 2], chain.back());
        if (r.empty()) break;
        chain.push_back(std::move(r));
    }
    return detail::variations_at_infinity(chain, true) -
           detail::variations_at_infinity(chain, false);
}

// Distinct real roots of P_k or Q_k.  Capped at k = 8: chain coefficients
// grow quickly past degree 255.
inline int real_zero_count(const RudinShapiroPair& pair, Which which, int cap = 8) {
    if (pair.k > cap)
        throw level_too_large_error("real_zero_count: k exceeds Sturm cap " +
                                    std::to_string(cap));
    return sturm_distinct_real_roots(coeffs_of(pair, which));
}

}  // namespace shapiro
