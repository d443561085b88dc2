// kovrank command-line front end: analytic tables, Monte-Carlo sweeps,
// bound verification, and check-matrix fixture generation.

#include <CLI11.hpp>

#include <algorithm>
#include <cmath>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>

#include "kovrank/degree.hpp"
#include "kovrank/ldpc.hpp"
#include "kovrank/mc.hpp"
#include "kovrank/report_io.hpp"

using namespace kovrank;

namespace {

struct Output {
    std::ofstream file;
    std::ostream& stream(const std::string& path) {
        if (path.empty() || path == "-") return std::cout;
        file.open(path);
        if (!file) throw CLI::RuntimeError("cannot open output file: " + path, 2);
        return file;
    }
};

// "a..b" or "a..b:step"; a single value means a one-point range.
template <typename T>
std::vector<T> parse_range(const std::string& text, T default_step) {
    auto dots = text.find("..");
    T lo, hi, step = default_step;
    std::string hi_part;
    if (dots == std::string::npos) {
        std::istringstream(text) >> lo;
        hi = lo;
    } else {
        std::istringstream(text.substr(0, dots)) >> lo;
        hi_part = text.substr(dots + 2);
        auto colon = hi_part.find(':');
        if (colon != std::string::npos) {
            std::istringstream(hi_part.substr(colon + 1)) >> step;
            hi_part.resize(colon);
        }
        std::istringstream(hi_part) >> hi;
    }
    if (step <= 0 || hi < lo)
        throw CLI::RuntimeError("bad range: " + text, 2);
    std::vector<T> out;
    for (std::size_t i = 0;; ++i) {
        double v = double(lo) + double(i) * double(step);
        if (v > double(hi) + double(step) * 1e-9) break;
        out.push_back(T(v));
    }
    return out;
}

Metadata base_meta(std::uint64_t seed, std::uint64_t trials, unsigned workers) {
    return {{"seed", std::to_string(seed)},
            {"trials", std::to_string(trials)},
            {"workers_used", std::to_string(workers)},
            {"note", "output is worker-count independent"}};
}

void emit_sweep(std::ostream& out, const std::string& format,
                const std::vector<SweepReport>& reports, const Metadata& meta,
                const std::string& svg_path, const std::string& x_label) {
    if (format == "json")
        write_json(out, reports, meta);
    else
        write_csv(out, reports, meta);

    if (!svg_path.empty()) {
        std::ofstream svg(svg_path);
        if (!svg) throw CLI::RuntimeError("cannot open svg file: " + svg_path, 2);
        SvgSeries dep{"empirical DEP", "#1f6feb", {}};
        SvgSeries bound{"full-rank limit (lower bound)", "#d73a49", {}};
        for (const auto& r : reports) {
            double x = (r.family == Family::Ldpc) ? r.k_or_p : r.gamma;
            dep.points.emplace_back(x, r.dep_hat);
            bound.points.emplace_back(x, r.kfrl_value);
        }
        write_svg(svg, {dep, bound}, x_label, "decoding error probability",
                  family_name(reports.front().family) + " sweep");
    }
}

// Erasure rate at which the rank bound crosses delta for an N-column
// rate-R code: fixed point of p = (1 - R) / (1 + gamma_K(delta, round(pN))).
double ldpc_crossing_erasure(std::size_t N, double rate, double delta) {
    double p = 1.0 - rate;
    for (int it = 0; it < 64; ++it) {
        auto n = static_cast<int>(std::llround(p * double(N)));
        if (n <= 0) break;
        double next = (1.0 - rate) / (1.0 + kfro(n, delta).gamma_K);
        if (std::abs(next - p) < 1e-12) return next;
        p = next;
    }
    return p;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"GF(2) rank-distribution workbench: analytic full-rank "
                 "limits and Monte-Carlo erasure-decoding sweeps"};
    app.require_subcommand(1);

    std::string out_path, format = "csv", svg_path;
    std::uint64_t seed = 1, trials = 100000;
    unsigned workers = default_workers();

    auto add_io = [&](CLI::App* cmd, bool with_format = true) {
        cmd->add_option("-o,--out", out_path, "output file ('-' = stdout)");
        if (with_format)
            cmd->add_option("--format", format, "csv or json")
                ->check(CLI::IsMember({"csv", "json"}));
    };
    auto add_mc = [&](CLI::App* cmd) {
        cmd->add_option("--seed", seed, "master RNG seed");
        cmd->add_option("--trials", trials, "Monte-Carlo trials per grid point");
        cmd->add_option("--workers", workers,
                        "worker threads (default: KOVRANK_THREADS or cores)");
        cmd->add_option("--svg", svg_path, "also write an SVG chart here");
    };

    // --- kfrl ---------------------------------------------------------
    auto* c_kfrl = app.add_subcommand(
        "kfrl", "full-rank limit curve K(1 + k/n, n) over k = 0..k_max");
    std::size_t kf_n = 100, kf_kmax = 30;
    std::vector<double> deltas;
    c_kfrl->add_option("--n", kf_n, "number of unknowns")->required();
    c_kfrl->add_option("--k-max", kf_kmax, "largest overhead k");
    c_kfrl->add_option("--delta", deltas, "error bounds to mark crossings for");
    add_io(c_kfrl, false);

    // --- rankdist -----------------------------------------------------
    auto* c_rd = app.add_subcommand(
        "rankdist", "exact rank-deficiency distribution of an (n+k) x n "
                    "uniform binary matrix");
    int rd_n = 100, rd_k = 0;
    c_rd->add_option("--n", rd_n, "columns")->required();
    c_rd->add_option("--k", rd_k, "extra rows (m = n + k)");
    add_io(c_rd, false);

    // --- sweep-lt -----------------------------------------------------
    auto* c_lt = app.add_subcommand(
        "sweep-lt", "empirical DEP of an LT code over a range of overheads");
    std::string lt_dist = "mu_bar", lt_krange = "0..30";
    std::size_t lt_n = 100, s_bits = 64;
    c_lt->add_option("--dist", lt_dist,
                     "row-degree distribution: mu, mu_bar, rho, or a file");
    c_lt->add_option("--n", lt_n, "block length (symbols)");
    c_lt->add_option("--k", lt_krange, "overhead range, e.g. 0..30 or 5..25:5");
    c_lt->add_option("--s-bits", s_bits, "payload symbol size in bits");
    add_io(c_lt);
    add_mc(c_lt);

    // --- sweep-ldpc ---------------------------------------------------
    auto* c_ldpc = app.add_subcommand(
        "sweep-ldpc", "empirical DEP of an LDPC code over a range of "
                      "erasure rates");
    std::string ldpc_matrix, ldpc_prange = "0.30..0.50:0.01";
    c_ldpc->add_option("--matrix", ldpc_matrix, "check-matrix fixture file")
        ->required();
    c_ldpc->add_option("--p", ldpc_prange,
                       "erasure-rate range, e.g. 0.30..0.50:0.01");
    c_ldpc->add_option("--s-bits", s_bits, "payload symbol size in bits");
    add_io(c_ldpc);
    add_mc(c_ldpc);

    // --- verify -------------------------------------------------------
    auto* c_ver = app.add_subcommand(
        "verify", "sweep a family and check the analytic lower bounds; "
                  "exit 0 iff no significant violation");
    std::string v_family = "dense", v_dist = "mu_bar", v_matrix,
                v_krange = "0..6", v_prange = "0.30..0.50:0.02";
    std::size_t v_n = 100;
    std::vector<double> v_deltas{0.5};
    c_ver->add_option("--family", v_family, "dense, lt, or ldpc")
        ->check(CLI::IsMember({"dense", "lt", "ldpc"}));
    c_ver->add_option("--n", v_n, "unknowns (dense/lt)");
    c_ver->add_option("--dist", v_dist, "LT row-degree distribution");
    c_ver->add_option("--matrix", v_matrix, "LDPC check-matrix fixture");
    c_ver->add_option("--k", v_krange, "overhead range (dense/lt)");
    c_ver->add_option("--p", v_prange, "erasure-rate range (ldpc)");
    c_ver->add_option("--delta", v_deltas, "error bounds for overhead checks");
    c_ver->add_option("--s-bits", s_bits, "payload symbol size in bits");
    add_io(c_ver, false);
    add_mc(c_ver);

    // --- peg ----------------------------------------------------------
    auto* c_peg = app.add_subcommand(
        "peg", "build a check matrix by progressive edge growth and save "
               "it as a fixture");
    std::size_t peg_N = 200, peg_m = 100, peg_dense_rows = 0,
                peg_dense_degree = 100;
    std::string peg_dist = "rho", peg_out;
    std::uint64_t peg_seed = 1;
    c_peg->add_option("--N", peg_N, "codeword length (columns)");
    c_peg->add_option("--m", peg_m, "check count (rows)");
    c_peg->add_option("--dist", peg_dist, "column-degree distribution");
    c_peg->add_option("--dense-rows", peg_dense_rows,
                      "rows drawn as uniform dense supports instead of PEG");
    c_peg->add_option("--dense-degree", peg_dense_degree,
                      "support size of each dense row");
    c_peg->add_option("--seed", peg_seed, "construction RNG seed");
    c_peg->add_option("-o,--out", peg_out, "fixture path")->required();

    CLI11_PARSE(app, argc, argv);
    Output output;

    try {
        if (*c_kfrl) {
            auto& out = output.stream(out_path);
            out << "# command=kfrl n=" << kf_n << " k_max=" << kf_kmax << "\n";
            out << "k,gamma,K,pow2_neg_k\n";
            auto curve = kfrl_curve(int(kf_n), int(kf_kmax));
            for (const auto& pt : curve.points)
                out << pt.k << ',' << format_double(pt.gamma) << ','
                    << format_double(pt.K) << ','
                    << format_double(std::exp2(-double(pt.k))) << "\n";
            for (double d : deltas) {
                auto r = kfro(int(kf_n), d);
                out << "# delta=" << format_double(d) << " k_K=" << r.k_K
                    << " gamma_K=" << format_double(r.gamma_K)
                    << " k_delta=" << r.k_delta
                    << " gamma_upper=" << format_double(r.gamma_upper) << "\n";
            }
            return 0;
        }

        if (*c_rd) {
            auto& out = output.stream(out_path);
            out << "# command=rankdist n=" << rd_n << " k=" << rd_k << "\n";
            out << "s,xi,cumulative,limit_deviation\n";
            auto dist = rank_distribution(rd_n, rd_k);
            double cum = 0.0;
            for (const auto& [s, xi] : dist.probs) {
                cum += xi;
                out << s << ',' << format_double(xi) << ','
                    << format_double(cum) << ','
                    << format_double(xi - xi_limit(rd_k, s)) << "\n";
            }
            return 0;
        }

        if (*c_lt) {
            LtConfig cfg;
            cfg.n = lt_n;
            cfg.s_bits = s_bits;
            cfg.dist = resolve_distribution(lt_dist, int(lt_n));
            auto ks = parse_range<std::size_t>(lt_krange, 1);
            std::vector<GridPoint> grid;
            for (std::size_t k : ks) grid.push_back({lt_n, k, 0.0});
            auto reports = sweep(cfg, grid, trials, seed, workers);
            auto meta = base_meta(seed, trials, workers);
            meta["command"] = "sweep-lt";
            meta["dist"] = lt_dist;
            meta["n"] = std::to_string(lt_n);
            meta["k"] = lt_krange;
            meta["s_bits"] = std::to_string(s_bits);
            emit_sweep(output.stream(out_path), format, reports, meta,
                       svg_path, "overhead gamma");
            return 0;
        }

        if (*c_ldpc) {
            LdpcFamilyConfig cfg;
            cfg.matrix = load_check_matrix(ldpc_matrix);
            cfg.kernel = kernel_basis(cfg.matrix.M);
            cfg.s_bits = s_bits;
            auto ps = parse_range<double>(ldpc_prange, 0.01);
            std::vector<GridPoint> grid;
            for (double p : ps) grid.push_back({0, 0, p});
            auto reports = sweep(cfg, grid, trials, seed, workers);
            auto meta = base_meta(seed, trials, workers);
            meta["command"] = "sweep-ldpc";
            meta["matrix"] = ldpc_matrix;
            meta["p"] = ldpc_prange;
            meta["s_bits"] = std::to_string(s_bits);
            emit_sweep(output.stream(out_path), format, reports, meta,
                       svg_path, "erasure rate p");
            return 0;
        }

        if (*c_ver) {
            FamilyConfig cfg = DenseFamilyConfig{v_n, s_bits};
            std::vector<GridPoint> grid;
            double rate = 0.0;
            std::size_t N = 0;
            if (v_family == "ldpc") {
                LdpcFamilyConfig lc;
                lc.matrix = load_check_matrix(v_matrix);
                lc.kernel = kernel_basis(lc.matrix.M);
                lc.s_bits = s_bits;
                N = lc.matrix.M.cols();
                rate = 1.0 - double(lc.matrix.M.rows()) / double(N);
                cfg = std::move(lc);
                for (double p : parse_range<double>(v_prange, 0.02))
                    grid.push_back({0, 0, p});
            } else {
                if (v_family == "lt") {
                    LtConfig lt;
                    lt.n = v_n;
                    lt.s_bits = s_bits;
                    lt.dist = resolve_distribution(v_dist, int(v_n));
                    cfg = std::move(lt);
                }
                for (std::size_t k : parse_range<std::size_t>(v_krange, 1))
                    grid.push_back({v_n, k, 0.0});
            }

            auto reports = sweep(cfg, grid, trials, seed, workers);
            auto verdict = verify_lower_bound(reports);

            auto& out = output.stream(out_path);
            out << "# command=verify family=" << v_family << " seed=" << seed
                << " trials=" << trials << "\n";
            for (std::size_t i = 0; i < reports.size(); ++i) {
                const auto& r = reports[i];
                out << "point " << family_name(r.family)
                    << " n_or_N=" << r.n_or_N
                    << " k_or_p=" << format_double(r.k_or_p)
                    << " dep_hat=" << format_double(r.dep_hat)
                    << " ci_high=" << format_double(r.ci_high)
                    << " bound=" << format_double(r.kfrl_value) << " : "
                    << (std::count(verdict.violations.begin(),
                                   verdict.violations.end(), i)
                            ? "VIOLATED"
                            : "ok")
                    << "\n";
            }
            for (double d : v_deltas) {
                auto mso = empirical_mso(reports, d);
                out << "delta=" << format_double(d);
                if (mso.resolvable)
                    out << " gamma_K=" << format_double(mso.gamma_K)
                        << " empirical_mso=" << format_double(mso.gamma_hat_star)
                        << (mso.gamma_hat_star >= mso.gamma_K ? " (>= gamma_K)"
                                                              : " (BELOW gamma_K)");
                else
                    out << " empirical_mso=unresolved at these trial counts";
                out << "\n";
                if (v_family == "ldpc") {
                    double pk = ldpc_crossing_erasure(N, rate, d);
                    auto n_star = static_cast<int>(std::llround(pk * double(N)));
                    double gk = kfro(n_star, d).gamma_K;
                    out << "  min acquisitions: (R+gamma_K)/(1+gamma_K)*N = "
                        << format_double((rate + gk) / (1.0 + gk) * double(N))
                        << " symbols (tolerable erasure rate "
                        << format_double(pk) << ")\n";
                } else {
                    double gk = kfro(int(v_n), d).gamma_K;
                    out << "  min acquisitions: (1+gamma_K)*n = "
                        << format_double((1.0 + gk) * double(v_n))
                        << " symbols\n";
                }
            }
            out << (verdict.ok() ? "PASS: no statistically significant "
                                   "lower-bound violations\n"
                                 : "FAIL: lower bound violated\n");
            return verdict.ok() ? 0 : 1;
        }

        if (*c_peg) {
            LdpcConfig cfg;
            cfg.N = peg_N;
            cfg.m_rows = peg_m;
            cfg.col_dist = resolve_distribution(peg_dist, int(peg_m));
            cfg.dense_rows = peg_dense_rows;
            cfg.dense_degree = peg_dense_degree;
            cfg.seed = peg_seed;
            Rng rng(derive_seed(peg_seed, 0));
            CheckMatrix M = build_check_matrix(cfg, rng);
            save_check_matrix(M, peg_out);
            std::cout << "wrote " << M.M.rows() << "x" << M.M.cols()
                      << " check matrix to " << peg_out;
            if (M.girth_hint) std::cout << " (girth " << *M.girth_hint << ")";
            std::cout << "\n";
            return 0;
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
