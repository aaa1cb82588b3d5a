#pragma once

#include <cstdint>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "shapiro/circle_eval.hpp"
#include "shapiro/rs_pair.hpp"
#include "shapiro/zero_count.hpp"

namespace shapiro {

struct io_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// 17 significant digits round-trips binary64.
inline std::string fmt17(double x) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", x);
    return buf;
}

// Text format: `RS k=<k> n=<n>`, then P and Q as space-separated +1/-1 lines.
inline std::string to_text(const RudinShapiroPair& pair) {
    std::ostringstream out;
    out << "RS k=" << pair.k << " n=" << pair.n << "\n";
    for (const auto* v : {&pair.p_coeffs, &pair.q_coeffs}) {
        for (std::size_t j = 0; j < v->size(); ++j) {
            if (j) out << ' ';
            out << ((*v)[j] > 0 ? "+1" : "-1");
        }
        out << "\n";
    }
    return out.str();
}

inline RudinShapiroPair from_text(std::istream& in) {
    std::string header;
    if (!std::getline(in, header)) throw io_error("pair text: missing header");
    RudinShapiroPair pair;
    if (std::sscanf(header.c_str(), "RS k=%d n=%lld", &pair.k,
                    reinterpret_cast<long long*>(&pair.n)) != 2)
        throw io_error("pair text: bad header line");
    auto read_line = [&](std::vector<std::int8_t>& dst) {
        std::string line;
        if (!std::getline(in, line)) throw io_error("pair text: missing coefficient line");
        std::istringstream ls(line);
        std::string tok;
        while (ls >> tok) {
            if (tok == "+1") dst.push_back(1);
            else if (tok == "-1") dst.push_back(-1);
            else throw io_error("pair text: bad token '" + tok + "'");
        }
        if (dst.size() != static_cast<std::size_t>(pair.n))
            throw io_error("pair text: coefficient count does not match n");
    };
    read_line(pair.p_coeffs);
    read_line(pair.q_coeffs);
    return pair;
}

inline RudinShapiroPair load_pair(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw io_error("cannot open " + path);
    return from_text(in);
}

// Binary grid dump: 8-byte little-endian N, then N (re, im) binary64 pairs
// for P, then for Q.
inline void dump_grid(const EvalGrid& g, std::ostream& out) {
    const auto N = static_cast<std::uint64_t>(g.N);
    unsigned char header[8];
    for (int b = 0; b < 8; ++b) header[b] = static_cast<unsigned char>((N >> (8 * b)) & 0xff);
    out.write(reinterpret_cast<const char*>(header), 8);
    auto write_vals = [&](const std::vector<cplx>& vals) {
        for (const auto& z : vals) {
            const double re = z.real(), im = z.imag();
            out.write(reinterpret_cast<const char*>(&re), 8);
            out.write(reinterpret_cast<const char*>(&im), 8);
        }
    };
    write_vals(g.p_vals);
    write_vals(g.q_vals);
}

inline std::string to_json(const ZeroCountReport& rep) {
    std::ostringstream out;
    out << "{\"k\":" << rep.k << ",\"n\":" << rep.n
        << ",\"alpha\":" << fmt17(rep.arc.alpha)
        << ",\"beta\":" << fmt17(rep.arc.beta)
        << ",\"grid_N\":" << rep.grid_N
        << ",\"certified_crossings\":" << rep.certified_crossings
        << ",\"uncertain_points\":" << rep.uncertain_points
        << ",\"suspect_tangencies\":[";
    for (std::size_t i = 0; i < rep.suspect_tangencies.size(); ++i) {
        if (i) out << ',';
        out << fmt17(rep.suspect_tangencies[i]);
    }
    out << "],\"brackets\":[";
    for (std::size_t i = 0; i < rep.brackets.size(); ++i) {
        if (i) out << ',';
        out << '[' << fmt17(rep.brackets[i].lo) << ',' << fmt17(rep.brackets[i].hi) << ']';
    }
    out << "],\"refined_zeros\":[";
    for (std::size_t i = 0; i < rep.refined_zeros.size(); ++i) {
        if (i) out << ',';
        out << fmt17(rep.refined_zeros[i]);
    }
    out << "]}";
    return out.str();
}

}  // namespace shapiro
