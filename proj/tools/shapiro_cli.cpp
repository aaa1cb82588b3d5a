// Command-line front end: generate coefficients, evaluate on the circle,
// count zeros with certified brackets, and run bound-verification campaigns.

#include <CLI11.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "shapiro/shapiro.hpp"

namespace {

using namespace shapiro;

constexpr int exit_ok = 0;
constexpr int exit_verification_failure = 1;
constexpr int exit_usage = 2;

struct ArcFlag {
    double alpha = 0.0;
    double beta = two_pi;
};

Arc parse_arc(const std::string& s) {
    const auto colon = s.find(':');
    if (colon == std::string::npos)
        throw CLI::ValidationError("--arc", "expected <alpha>:<beta>");
    return Arc(std::stod(s.substr(0, colon)), std::stod(s.substr(colon + 1)));
}

std::pair<int, int> parse_k_range(const std::string& s) {
    const auto dots = s.find("..");
    if (dots == std::string::npos) {
        const int k = std::stoi(s);
        return {k, k};
    }
    return {std::stoi(s.substr(0, dots)), std::stoi(s.substr(dots + 2))};
}

void write_output(const std::string& content, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << content;
        return;
    }
    std::ofstream out(out_path, std::ios::binary);
    if (!out) throw io_error("cannot open " + out_path + " for writing");
    out << content;
}

// Per-level arc list: full circle first, then seeded random arcs with
// length at least 4*pi/n.  The per-level stream is Lcg64 seeded with
// seed + k * 0x9e3779b97f4a7c15 so campaigns are reproducible per row.
std::vector<Arc> campaign_arcs(int k, std::uint64_t seed, int random_count) {
    std::vector<Arc> arcs{Arc::full_circle()};
    const double min_len = 4.0 * std::numbers::pi / std::ldexp(1.0, k);
    Lcg64 rng(seed + static_cast<std::uint64_t>(k) * 0x9e3779b97f4a7c15ULL);
    for (int i = 0; i < random_count; ++i) arcs.push_back(random_arc(rng, min_len));
    return arcs;
}

struct CampaignRow {
    int k;
    std::int64_t n;
    Arc arc;
    double lower;
    double upper;
    std::int64_t cert_count;
    std::optional<std::int64_t> oracle;
    std::int64_t uncertain;
    std::string status;
};

CampaignRow campaign_row(int k, const Arc& arc, int grid_factor, double log_base) {
    CampaignRow row;
    row.k = k;
    row.n = std::int64_t{1} << k;
    row.arc = arc;
    const auto bound = theorem21(k, arc, log_base);
    row.lower = bound.lower;
    row.upper = bound.upper;
    const auto pair = generate(k);
    const auto rep = count_zeros(pair, arc, grid_factor * pair.n);
    row.cert_count = rep.certified_crossings;
    row.uncertain = rep.uncertain_points;
    const double min_len = 4.0 * std::numbers::pi / static_cast<double>(row.n);
    const bool vacuous = arc.length() < min_len;
    if (k <= 8) {
        row.oracle = oracle_count(pair, arc, 1000000);
        const auto observed = *row.oracle;
        const bool ok = static_cast<double>(observed) >= row.lower &&
                        static_cast<double>(observed) <= row.upper;
        row.status = vacuous ? (ok ? "vacuous-lower" : "fail") : (ok ? "pass" : "fail");
    } else {
        const bool ok =
            static_cast<double>(row.cert_count) >=
                row.lower - static_cast<double>(row.uncertain) &&
            static_cast<double>(row.cert_count) <= row.upper;
        row.status = vacuous ? (ok ? "vacuous-lower" : "fail") : (ok ? "pass" : "fail");
    }
    return row;
}

std::string campaign_csv(const std::vector<CampaignRow>& rows) {
    std::ostringstream out;
    out << "# theorem21 campaign; observed counts for k > 8 are certified-only\n";
    out << "# (crossings <= with-multiplicity count, so both directions stay valid)\n";
    out << "k,n,alpha,beta,lower,cert_count,oracle_count,upper,pass\n";
    for (const auto& r : rows) {
        out << r.k << ',' << r.n << ',' << fmt17(r.arc.alpha) << ',' << fmt17(r.arc.beta)
            << ',' << fmt17(r.lower) << ',' << r.cert_count << ',';
        if (r.oracle) out << *r.oracle;
        out << ',' << fmt17(r.upper) << ',' << r.status << '\n';
    }
    return out.str();
}

std::string campaign_json(const std::vector<CampaignRow>& rows) {
    std::ostringstream out;
    out << "{\"note\":\"observed counts for k > 8 are certified-only\",\"rows\":[";
    for (std::size_t i = 0; i < rows.size(); ++i) {
        const auto& r = rows[i];
        if (i) out << ',';
        out << "{\"k\":" << r.k << ",\"n\":" << r.n
            << ",\"alpha\":" << fmt17(r.arc.alpha) << ",\"beta\":" << fmt17(r.arc.beta)
            << ",\"lower\":" << fmt17(r.lower)
            << ",\"cert_count\":" << r.cert_count << ",\"oracle_count\":";
        if (r.oracle) out << *r.oracle; else out << "null";
        out << ",\"upper\":" << fmt17(r.upper) << ",\"pass\":\"" << r.status << "\"}";
    }
    out << "]}\n";
    return out.str();
}

struct VerifyCheck {
    std::string name;
    double deviation;
    double tolerance;
    bool ok;
};

std::vector<VerifyCheck> verify_level(const RudinShapiroPair& pair, int grid_factor) {
    std::vector<VerifyCheck> checks;
    const double tol = tol_grid(pair.k);
    auto add = [&](const std::string& name, double dev, double tolerance) {
        checks.push_back({name, dev, tolerance, dev <= tolerance});
    };
    try {
        validate(pair);
        add("structural", 0.0, 0.0);
    } catch (const identity_violation_error& e) {
        checks.push_back({std::string("structural: ") + e.what(), 1.0, 0.0, false});
        return checks;
    }
    try {
        reversal_identity_check(pair);
        add("reversal-identity", 0.0, 0.0);
    } catch (const identity_violation_error& e) {
        checks.push_back({std::string("reversal-identity: ") + e.what(), 1.0, 0.0, false});
    }
    const std::int64_t N = std::max<std::int64_t>(8, grid_factor * pair.n);
    const auto grid = eval_grid(pair, N);
    add("parallelogram", verify_parallelogram(grid), tol);
    add("modulus-reversal", verify_modulus_reversal(grid), tol);
    if (pair.k >= 2) add("lemma31", verify_lemma31_identity(pair.k), tol);
    add("supnorm-r-minus-n",
        sup_norm(pair, SupTarget::RMinusN, N) - static_cast<double>(pair.n), tol);
    return checks;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Rudin-Shapiro polynomial toolkit"};
    app.require_subcommand(1);

    int k = 0;
    std::string k_range_str;
    std::string arc_str;
    std::string out_path;
    std::string format = "csv";
    std::string dump_grid_path;
    int grid_factor = 8;
    double log_base = std::numbers::e;
    std::uint64_t seed = 42;

    auto* gen_cmd = app.add_subcommand("gen", "write exact coefficient vectors");
    gen_cmd->add_option("--k", k)->required();
    gen_cmd->add_option("--out", out_path);

    auto* eval_cmd = app.add_subcommand("eval", "evaluate on the unit circle");
    eval_cmd->add_option("--k", k)->required();
    double eval_t = 0.0;
    auto* t_opt = eval_cmd->add_option("--t", eval_t);
    eval_cmd->add_option("--grid-factor", grid_factor);
    eval_cmd->add_option("--dump-grid", dump_grid_path);

    auto* verify_cmd = app.add_subcommand("verify", "run circle identities");
    verify_cmd->add_option("--k-range", k_range_str);
    std::string in_path;
    verify_cmd->add_option("--in", in_path, "verify a coefficient file instead");
    verify_cmd->add_option("--grid-factor", grid_factor);
    verify_cmd->add_option("--format", format);
    verify_cmd->add_option("--out", out_path);

    auto* count_cmd = app.add_subcommand("count", "certified zero count on an arc");
    count_cmd->add_option("--k", k)->required();
    count_cmd->add_option("--arc", arc_str);
    count_cmd->add_option("--grid-factor", grid_factor);
    bool refine = false;
    count_cmd->add_flag("--refine", refine);
    count_cmd->add_option("--out", out_path);

    auto* proof_cmd = app.add_subcommand("proof-count", "lower-bound construction");
    proof_cmd->add_option("--k", k)->required();
    proof_cmd->add_option("--arc", arc_str);
    proof_cmd->add_option("--out", out_path);

    auto* bounds_cmd = app.add_subcommand("bounds", "closed-form bound values");
    std::string kind = "theorem21";
    std::int64_t m_param = 1;
    double h_param = 1.0;
    bounds_cmd->add_option("--kind", kind);
    bounds_cmd->add_option("--k", k);
    bounds_cmd->add_option("--m", m_param);
    bounds_cmd->add_option("--H", h_param);
    bounds_cmd->add_option("--arc", arc_str);
    bounds_cmd->add_option("--log-base", log_base);
    bounds_cmd->add_option("--out", out_path);

    auto* roots_cmd = app.add_subcommand("roots", "root angles of P_k or Q_k");
    roots_cmd->add_option("--k", k)->required();
    std::string which_str = "P";
    roots_cmd->add_option("--which", which_str);
    roots_cmd->add_option("--out", out_path);

    auto* campaign_cmd = app.add_subcommand("campaign", "theorem21 sweep");
    campaign_cmd->add_option("--k-range", k_range_str)->required();
    std::string arcs_spec;
    campaign_cmd->add_option("--arcs", arcs_spec, "random:<count>:<seed> or explicit --arc");
    std::vector<std::string> explicit_arcs;
    campaign_cmd->add_option("--arc", explicit_arcs);
    campaign_cmd->add_option("--grid-factor", grid_factor);
    campaign_cmd->add_option("--log-base", log_base);
    campaign_cmd->add_option("--seed", seed);
    campaign_cmd->add_option("--format", format);
    campaign_cmd->add_option("--out", out_path);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? exit_ok : exit_usage;
    }

    try {
        if (gen_cmd->parsed()) {
            write_output(to_text(generate(k)), out_path);
            return exit_ok;
        }

        if (eval_cmd->parsed()) {
            const auto pair = generate(k);
            std::ostringstream out;
            if (t_opt->count() > 0) {
                const auto [p, q] = eval_point(pair, eval_t);
                out << "P " << fmt17(p.real()) << ' ' << fmt17(p.imag()) << '\n'
                    << "Q " << fmt17(q.real()) << ' ' << fmt17(q.imag()) << '\n';
            } else {
                const auto grid = eval_grid(pair, grid_factor * pair.n);
                out << "k " << k << " N " << grid.N << " parallelogram_dev "
                    << fmt17(verify_parallelogram(grid)) << '\n';
                if (!dump_grid_path.empty()) {
                    std::ofstream bin(dump_grid_path, std::ios::binary);
                    if (!bin) throw io_error("cannot open " + dump_grid_path);
                    dump_grid(grid, bin);
                }
            }
            write_output(out.str(), out_path);
            return exit_ok;
        }

        if (verify_cmd->parsed()) {
            std::vector<std::pair<int, RudinShapiroPair>> pairs;
            if (!in_path.empty()) {
                auto pair = load_pair(in_path);
                pairs.emplace_back(pair.k, std::move(pair));
            } else {
                auto [lo, hi] = parse_k_range(k_range_str.empty() ? "0..8" : k_range_str);
                for (int kk = lo; kk <= hi; ++kk) pairs.emplace_back(kk, generate(kk));
            }
            bool all_ok = true;
            std::ostringstream out;
            out << "{\"levels\":[";
            bool first_level = true;
            std::string first_failure;
            for (const auto& [kk, pair] : pairs) {
                const auto checks = verify_level(pair, grid_factor);
                if (!first_level) out << ',';
                first_level = false;
                out << "{\"k\":" << kk << ",\"checks\":[";
                for (std::size_t i = 0; i < checks.size(); ++i) {
                    if (i) out << ',';
                    out << "{\"name\":\"" << checks[i].name << "\",\"deviation\":"
                        << fmt17(checks[i].deviation) << ",\"tolerance\":"
                        << fmt17(checks[i].tolerance) << ",\"ok\":"
                        << (checks[i].ok ? "true" : "false") << '}';
                    if (!checks[i].ok) {
                        all_ok = false;
                        if (first_failure.empty())
                            first_failure = "k=" + std::to_string(kk) + " " + checks[i].name;
                    }
                }
                out << "]}";
            }
            out << "],\"ok\":" << (all_ok ? "true" : "false") << "}\n";
            write_output(out.str(), out_path);
            if (!all_ok) {
                std::cerr << "verification failed: " << first_failure << '\n';
                return exit_verification_failure;
            }
            return exit_ok;
        }

        if (count_cmd->parsed()) {
            const auto pair = generate(k);
            const Arc arc = arc_str.empty() ? Arc::full_circle() : parse_arc(arc_str);
            const auto rep = count_zeros(pair, arc, grid_factor * pair.n, refine);
            write_output(to_json(rep) + "\n", out_path);
            return exit_ok;
        }

        if (proof_cmd->parsed()) {
            const Arc arc = arc_str.empty() ? Arc::full_circle() : parse_arc(arc_str);
            const auto pc = proof_construction(k, arc);
            std::ostringstream out;
            out << "{\"k\":" << pc.k << ",\"n\":" << pc.n
                << ",\"alpha\":" << fmt17(pc.arc.alpha) << ",\"beta\":" << fmt17(pc.arc.beta)
                << ",\"h\":" << pc.h << ",\"M\":" << pc.M
                << ",\"n_pairs\":" << pc.n_pairs
                << ",\"certified_distinct_lower\":" << pc.certified_distinct_lower
                << ",\"uncertain_a_count\":" << pc.uncertain_a_count
                << ",\"intervals\":[";
            for (std::size_t i = 0; i < pc.intervals.size(); ++i) {
                if (i) out << ',';
                out << '[' << fmt17(pc.intervals[i].lo) << ',' << fmt17(pc.intervals[i].hi) << ']';
            }
            out << "]}\n";
            write_output(out.str(), out_path);
            return exit_ok;
        }

        if (bounds_cmd->parsed()) {
            const Arc arc = arc_str.empty() ? Arc::full_circle() : parse_arc(arc_str);
            std::ostringstream out;
            out << "kind,k_or_m,alpha,beta,lower,upper,log_base\n";
            auto emit = [&](const char* name, std::int64_t km, double lower, double upper) {
                out << name << ',' << km << ',' << fmt17(arc.alpha) << ',' << fmt17(arc.beta)
                    << ',' << fmt17(lower) << ',' << fmt17(upper) << ',' << fmt17(log_base)
                    << '\n';
            };
            if (kind == "theorem21") {
                const auto rep = theorem21(k, arc, log_base);
                emit("theorem21", k, rep.lower, rep.upper);
            } else if (kind == "lemma32") {
                emit("lemma32", m_param, 0.0, lemma32(m_param, h_param, arc, log_base));
            } else if (kind == "lemma33") {
                emit("lemma33", k, 0.0, lemma33(k, arc, log_base));
            } else if (kind == "lemma34") {
                emit("lemma34", k, 0.0, lemma34(k, arc, log_base));
            } else if (kind == "theorem11_classic" || kind == "theorem11_sound") {
                const auto constant = (kind == "theorem11_classic") ? EtConstant::classic16
                                                                    : EtConstant::sound8pi;
                emit(kind.c_str(), m_param, 0.0,
                     theorem11(m_param, h_param, constant, log_base));
            } else {
                std::cerr << "unknown bound kind: " << kind << '\n';
                return exit_usage;
            }
            write_output(out.str(), out_path);
            return exit_ok;
        }

        if (roots_cmd->parsed()) {
            const auto pair = generate(k);
            const auto& ic = coeffs_of(pair, which_str == "Q" ? Which::Q : Which::P);
            std::vector<cplx> coeffs;
            for (auto c : ic) coeffs.emplace_back(static_cast<double>(c), 0.0);
            const auto rs = find_roots(coeffs, default_tau_root(pair.n - 1));
            std::ostringstream out;
            out << "re,im,rho,theta\n";
            for (const auto& r : rs.roots)
                out << fmt17(r.real()) << ',' << fmt17(r.imag()) << ','
                    << fmt17(std::abs(r)) << ',' << fmt17(root_angle(r)) << '\n';
            write_output(out.str(), out_path);
            return exit_ok;
        }

        if (campaign_cmd->parsed()) {
            auto [lo, hi] = parse_k_range(k_range_str);
            if (lo < 2) {
                std::cerr << "campaign: k-range must start at 2\n";
                return exit_usage;
            }
            int random_count = 20;
            std::uint64_t arc_seed = seed;
            if (!arcs_spec.empty()) {
                unsigned long long parsed_seed = 0;
                int parsed_count = 0;
                if (std::sscanf(arcs_spec.c_str(), "random:%d:%llu", &parsed_count,
                                &parsed_seed) == 2) {
                    random_count = parsed_count;
                    arc_seed = parsed_seed;
                } else {
                    std::cerr << "campaign: bad --arcs spec\n";
                    return exit_usage;
                }
            }
            struct RowTask { int k; Arc arc; };
            std::vector<RowTask> tasks;
            for (int kk = lo; kk <= hi; ++kk) {
                std::vector<Arc> arcs;
                if (!explicit_arcs.empty()) {
                    for (const auto& s : explicit_arcs) arcs.push_back(parse_arc(s));
                } else {
                    arcs = campaign_arcs(kk, arc_seed, random_count);
                }
                for (const auto& a : arcs) tasks.push_back({kk, a});
            }
            std::vector<CampaignRow> rows(tasks.size());
            for (std::size_t i = 0; i < tasks.size(); ++i)
                rows[i] = campaign_row(tasks[i].k, tasks[i].arc, grid_factor, log_base);
            const auto body = (format == "json") ? campaign_json(rows) : campaign_csv(rows);
            write_output(body, out_path);
            for (const auto& r : rows)
                if (r.status == "fail") return exit_verification_failure;
            return exit_ok;
        }
    } catch (const level_too_large_error& e) {
        std::cerr << e.what() << '\n';
        return exit_usage;
    } catch (const arc_too_short_error& e) {
        std::cerr << e.what() << '\n';
        return exit_usage;
    } catch (const grid_error& e) {
        std::cerr << e.what() << '\n';
        return exit_usage;
    } catch (const identity_violation_error& e) {
        std::cerr << e.what() << '\n';
        return exit_verification_failure;
    } catch (const std::exception& e) {
        std::cerr << e.what() << '\n';
        return exit_usage;
    }
    return exit_ok;
}
