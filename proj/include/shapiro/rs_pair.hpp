#pragma once

#include <cstdint>
#include <cstdlib>
#include <stdexcept>
#include <string>
#include <vector>

namespace shapiro {

struct level_too_large_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct identity_violation_error : std::runtime_error {
    int index;
    identity_violation_error(const std::string& msg, int j)
        : std::runtime_error(msg), index(j) {}
};

// Memory-bounded default cap on the recursion level; SHAPIRO_KMAX overrides.
inline int level_cap() {
    if (const char* s = std::getenv("SHAPIRO_KMAX")) {
        int v = std::atoi(s);
        if (v > 0) return v;
    }
    return 26;
}

// Exact coefficient vectors of the Rudin-Shapiro pair P_k, Q_k.
// All entries are +1 or -1; both vectors have length n = 2^k.
struct RudinShapiroPair {
    int k = 0;
    std::int64_t n = 1;
    std::vector<std::int8_t> p_coeffs;  // coefficient of z^j in P_k
    std::vector<std::int8_t> q_coeffs;  // coefficient of z^j in Q_k
};

enum class Which { P, Q };

inline const std::vector<std::int8_t>& coeffs_of(const RudinShapiroPair& pair, Which w) {
    return w == Which::P ? pair.p_coeffs : pair.q_coeffs;
}

// Builds P_k, Q_k by k steps of
//   P_{s+1} = P_s + z^{2^s} Q_s,   Q_{s+1} = P_s - z^{2^s} Q_s
// starting from P_0 = Q_0 = 1.
inline RudinShapiroPair generate(int k, int cap = level_cap()) {
    if (k < 0) throw std::invalid_argument("generate: k must be non-negative");
    if (k > cap)
        throw level_too_large_error("generate: level " + std::to_string(k) +
                                    " exceeds cap " + std::to_string(cap));
    RudinShapiroPair pair;
    pair.k = k;
    pair.n = std::int64_t{1} << k;
    pair.p_coeffs.assign(1, 1);
    pair.q_coeffs.assign(1, 1);
    pair.p_coeffs.reserve(static_cast<std::size_t>(pair.n));
    pair.q_coeffs.reserve(static_cast<std::size_t>(pair.n));
    for (int s = 0; s < k; ++s) {
        const std::size_t half = pair.p_coeffs.size();
        std::vector<std::int8_t> p_next(2 * half), q_next(2 * half);
        for (std::size_t j = 0; j < half; ++j) {
            p_next[j] = pair.p_coeffs[j];
            q_next[j] = pair.p_coeffs[j];
            p_next[half + j] = pair.q_coeffs[j];
            q_next[half + j] = static_cast<std::int8_t>(-pair.q_coeffs[j]);
        }
        pair.p_coeffs = std::move(p_next);
        pair.q_coeffs = std::move(q_next);
    }
    return pair;
}

// Finds the global sign eps with (-1)^j q[j] = eps * p[n-1-j] for all j.
// The sign depends on k under the plain reversal convention; either sign
// gives |Q_k(-z)| = |P_k(z)| on the circle.
inline int reversal_identity_check(const RudinShapiroPair& pair) {
    const std::int64_t n = pair.n;
    const int eps = ((pair.q_coeffs[0] == pair.p_coeffs[static_cast<std::size_t>(n - 1)]) ? 1 : -1);
    for (std::int64_t j = 0; j < n; ++j) {
        const int lhs = ((j & 1) ? -1 : 1) * pair.q_coeffs[static_cast<std::size_t>(j)];
        const int rhs = eps * pair.p_coeffs[static_cast<std::size_t>(n - 1 - j)];
        if (lhs != rhs)
            throw identity_violation_error(
                "reversal identity fails at index " + std::to_string(j),
                static_cast<int>(j));
    }
    return eps;
}

// Structural invariant check; throws identity_violation_error on the first
// offending index.
inline void validate(const RudinShapiroPair& pair) {
    const std::int64_t n = pair.n;
    if (n != (std::int64_t{1} << pair.k) ||
        pair.p_coeffs.size() != static_cast<std::size_t>(n) ||
        pair.q_coeffs.size() != static_cast<std::size_t>(n))
        throw identity_violation_error("pair: size does not match level", -1);
    if (pair.p_coeffs[0] != 1 || pair.q_coeffs[0] != 1)
        throw identity_violation_error("pair: leading entries must be +1", 0);
    for (std::int64_t j = 0; j < n; ++j) {
        const auto p = pair.p_coeffs[static_cast<std::size_t>(j)];
        const auto q = pair.q_coeffs[static_cast<std::size_t>(j)];
        if ((p != 1 && p != -1) || (q != 1 && q != -1))
            throw identity_violation_error("pair: entry not a signed unit", static_cast<int>(j));
        if (pair.k >= 1) {
            if (j < n / 2 && p != q)
                throw identity_violation_error("pair: first halves must match", static_cast<int>(j));
            if (j >= n / 2 && p != -q)
                throw identity_violation_error("pair: second halves must negate", static_cast<int>(j));
        }
    }
}

}  // namespace shapiro
