// Acceptance suite: one pass/fail line per criterion. Exit code is the
// number of failed hard criteria; criterion 10 is a soft report that can
// warn but never fail.

#include <bit>
#include <cmath>
#include <cstdio>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "kovrank/mc.hpp"
#include "kovrank/report_io.hpp"

using namespace kovrank;

namespace {

int failures_total = 0;

void report(int criterion, bool pass, const std::string& what) {
    std::printf("criterion %2d: %s - %s\n", criterion, pass ? "PASS" : "FAIL",
                what.c_str());
    std::fflush(stdout);
    if (!pass) ++failures_total;
}

void progress(const std::string& msg) {
    std::fprintf(stderr, "[acceptance] %s\n", msg.c_str());
}

// Rank of an m x n binary matrix given as n-bit row masks: greedy basis
// reduction (xor-minimization keeps each new vector independent).
int mask_rank(const std::vector<std::uint32_t>& rows) {
    std::vector<std::uint32_t> basis;
    for (std::uint32_t v : rows) {
        for (std::uint32_t b : basis) v = std::min(v, v ^ b);
        if (v) basis.push_back(v);
    }
    return static_cast<int>(basis.size());
}

// --- 1: exact rank distribution vs exhaustive enumeration ---------------
void criterion1() {
    bool ok = true;
    std::ostringstream detail;
    std::vector<std::pair<int, int>> cases;
    for (int n = 1; n <= 3; ++n)
        for (int k = 0; k <= 3; ++k) cases.emplace_back(n, k);
    cases.emplace_back(4, 0);

    for (auto [n, k] : cases) {
        const int m = n + k;
        const std::uint64_t total = 1ull << (std::uint64_t(m) * n);
        std::map<int, std::uint64_t> count; // deficiency s -> matrices
        std::vector<std::uint32_t> rows(m);
        const std::uint32_t colmask = (1u << n) - 1;
        for (std::uint64_t code = 0; code < total; ++code) {
            for (int i = 0; i < m; ++i)
                rows[i] = std::uint32_t(code >> (std::uint64_t(i) * n)) & colmask;
            ++count[n - mask_rank(rows)];
        }
        for (int s = 0; s <= n; ++s) {
            double expect = xi_exact(n, k, s);
            double got = double(count.count(s) ? count[s] : 0) / double(total);
            if (std::abs(expect - got) > 1e-12) {
                ok = false;
                detail << " mismatch at n=" << n << " k=" << k << " s=" << s;
            }
        }
    }
    report(1, ok,
           "exact rank distribution matches exhaustive enumeration for all "
           "small shapes" + detail.str());
}

// --- 2: the n >= 50 full-rank constant ----------------------------------
void criterion2() {
    double g = kfrl_complement(50, 0);
    report(2, std::abs(g - 0.288788095066) < 1e-10,
           "square-matrix full-rank probability at n=50 equals "
           "0.288788095066 within 1e-10 (got " + format_double(g) + ")");
}

// --- 3: minimal overhead at delta = 1e-4, n = 100 -----------------------
void criterion3() {
    auto r = kfro(100, 1e-4);
    bool ok = r.k_K == 14 && std::abs(r.gamma_K - 0.14) < 1e-15 &&
              r.gamma_K <= (1.0 + std::log2(1e4)) / 100.0;
    report(3, ok,
           "minimal overhead at delta=1e-4, n=100 is k=14, gamma=0.14, "
           "within the analytic upper bound (got k=" +
               std::to_string(r.k_K) + ")");
}

// --- 4: dense-family pipeline calibration -------------------------------
void criterion4(std::uint64_t trials, std::uint64_t seed) {
    progress("criterion 4: dense calibration, 4 points x " +
             std::to_string(trials) + " trials");
    DenseFamilyConfig dense{100, 64};
    bool ok = true;
    std::ostringstream detail;
    for (std::size_t k : {0, 2, 5, 10}) {
        auto rep = estimate_dep(dense, {100, k, 0.0}, trials, seed, 1);
        double analytic = 1.0 - xi_exact(100, int(k), 0);
        if (analytic < rep.ci_low || analytic > rep.ci_high) {
            ok = false;
            detail << " k=" << k << " dep_hat=" << format_double(rep.dep_hat)
                   << " vs analytic " << format_double(analytic);
        }
    }
    report(4, ok,
           "dense-family DEP estimates bracket the analytic rank "
           "probabilities at every point" + detail.str());
}

struct SweepSet {
    std::vector<SweepReport> lt_mu, lt_mu_bar, ldpc_m, ldpc_mbar;
    std::string mbar_csv; // as produced with workers = 1
    Metadata mbar_meta;
};

// --- 5: the analytic curve lower-bounds the empirical DEP ---------------
SweepSet criterion5(std::uint64_t trials, std::uint64_t seed) {
    SweepSet out;

    std::vector<GridPoint> kgrid;
    for (std::size_t k = 0; k <= 30; ++k) kgrid.push_back({100, k, 0.0});

    LtConfig mu_cfg;
    mu_cfg.n = 100;
    mu_cfg.s_bits = 64;
    mu_cfg.dist = table_mu();
    progress("criterion 5: LT sweep under the sparse row distribution");
    out.lt_mu = sweep(mu_cfg, kgrid, trials, seed, 1);

    LtConfig mu_bar_cfg = mu_cfg;
    mu_bar_cfg.dist = table_mu_bar();
    progress("criterion 5: LT sweep under the dense-supplemented row "
             "distribution");
    out.lt_mu_bar = sweep(mu_bar_cfg, kgrid, trials, seed, 1);

    std::vector<GridPoint> pgrid;
    for (int i = 30; i <= 50; ++i) pgrid.push_back({0, 0, i / 100.0});

    LdpcConfig mcfg;
    mcfg.N = 200;
    mcfg.m_rows = 100;
    mcfg.col_dist = table_rho();
    mcfg.seed = 2024;
    Rng mrng(derive_seed(mcfg.seed, 0));
    CheckMatrix M = build_check_matrix(mcfg, mrng);
    LdpcFamilyConfig mfam{M, kernel_basis(M.M), 64};
    progress("criterion 5: LDPC sweep over the pure progressive-edge-growth "
             "matrix");
    out.ldpc_m = sweep(mfam, pgrid, trials, seed, 1);

    LdpcConfig bcfg = mcfg;
    bcfg.dense_rows = 15;
    bcfg.dense_degree = 100;
    Rng brng(derive_seed(mcfg.seed, 1));
    CheckMatrix Mbar = build_check_matrix(bcfg, brng);
    LdpcFamilyConfig bfam{Mbar, kernel_basis(Mbar.M), 64};
    progress("criterion 5: LDPC sweep over the dense-supplemented matrix");
    out.ldpc_mbar = sweep(bfam, pgrid, trials, seed, 1);

    bool ok = true;
    std::ostringstream detail;
    auto check = [&](const std::vector<SweepReport>& reps, const char* name) {
        auto v = verify_lower_bound(reps);
        if (!v.ok()) {
            ok = false;
            detail << " " << name << ": " << v.violations.size()
                   << " violation(s)";
        }
    };
    check(out.lt_mu, "LT/sparse");
    check(out.lt_mu_bar, "LT/dense-supplemented");
    check(out.ldpc_m, "LDPC/plain");
    check(out.ldpc_mbar, "LDPC/dense-supplemented");
    report(5, ok,
           "no statistically significant violation of the analytic DEP "
           "lower bound across all four sweeps" + detail.str());

    out.mbar_meta = {{"sweep", "ldpc-dense-supplemented"},
                     {"seed", std::to_string(seed)},
                     {"trials", std::to_string(trials)}};
    std::ostringstream csv;
    write_csv(csv, out.ldpc_mbar, out.mbar_meta);
    out.mbar_csv = csv.str();
    return out;
}

// --- 6: error-floor ordering (qualitative) -------------------------------
void criterion6(const SweepSet& s) {
    const auto& mu30 = s.lt_mu.at(30);
    const auto& mubar30 = s.lt_mu_bar.at(30);
    const auto& m35 = s.ldpc_m.at(5);     // p = 0.35
    const auto& mbar35 = s.ldpc_mbar.at(5);

    bool ok = true;
    std::ostringstream detail;
    if (!(mu30.dep_hat > 1e-2)) {
        ok = false;
        detail << " sparse-LT DEP at k=30 not above 1e-2 ("
               << format_double(mu30.dep_hat) << ")";
    }
    if (!(mubar30.dep_hat < 1e-2)) {
        ok = false;
        detail << " dense-supplemented-LT DEP at k=30 not below 1e-2 ("
               << format_double(mubar30.dep_hat) << ")";
    }
    if (!(mubar30.dep_hat <= 10.0 * kfrl(100, 30))) {
        ok = false;
        detail << " dense-supplemented-LT DEP at k=30 not within 10x of the "
                  "analytic floor ("
               << format_double(mubar30.dep_hat) << " vs "
               << format_double(kfrl(100, 30)) << ")";
    }
    if (!(m35.dep_hat > 1e-2 && mbar35.dep_hat < 1e-2 &&
          m35.dep_hat > mbar35.dep_hat)) {
        ok = false;
        detail << " LDPC ordering at p=0.35 broken ("
               << format_double(m35.dep_hat) << " vs "
               << format_double(mbar35.dep_hat) << ")";
    }
    report(6, ok,
           "dense supplementation pushes the error floor below the sparse "
           "construction at k=30 (LT) and p=0.35 (LDPC)" + detail.str());
}

// --- 7: parity-zero probability, empirical and exact ---------------------
void criterion7(std::uint64_t seed) {
    progress("criterion 7: parity-probability grid");
    const std::uint64_t draws = 100000;
    bool ok = true;
    std::ostringstream detail;

    std::size_t ns[3] = {10, 50, 100};
    std::pair<double, std::size_t> dk[3] = {{2.0, 1}, {5.0, 4}, {10.0, 9}};
    std::uint64_t stream = 0;
    for (std::size_t n : ns) {
        for (auto [d, k] : dk) {
            double expect = prop1_probability(int(n), d, int(k));
            double got = prop1_empirical(n, d, k, draws,
                                          derive_seed(seed, 7000 + stream++));
            double sigma = std::sqrt(expect * (1 - expect) / double(draws));
            if (std::abs(got - expect) > 3 * std::max(sigma, 1e-9)) {
                ok = false;
                detail << " (n=" << n << ",d=" << d << ",k=" << k << ")";
            }
        }
    }

    // exact equality by full enumeration for n <= 6
    for (int n = 4; n <= 6; ++n) {
        for (double d : {1.0, 2.0, double(n) / 2}) {
            for (int k = 1; k <= n; k += 2) {
                double p1 = d / n;
                double sum = 0.0;
                for (std::uint32_t w = 0; w < (1u << n); ++w) {
                    // V = first k coordinates; parity of the overlap
                    int par = std::popcount(w & ((1u << k) - 1)) & 1;
                    if (par) continue;
                    int wt = std::popcount(w);
                    sum += std::pow(p1, wt) * std::pow(1 - p1, n - wt);
                }
                if (std::abs(sum - prop1_probability(n, d, k)) > 1e-12) {
                    ok = false;
                    detail << " enum(n=" << n << ",d=" << d << ",k=" << k
                           << ")";
                }
            }
        }
    }
    report(7, ok,
           "parity-zero frequency matches the closed form on a 3x3 grid and "
           "exactly under full enumeration" + detail.str());
}

// --- 8: overhead <-> erasure-rate conversions round-trip -----------------
void criterion8() {
    Rng rng(80808);
    bool ok = true;
    for (int t = 0; t < 1000; ++t) {
        double rate = std::uniform_real_distribution<double>(0.01, 0.99)(rng);
        double p = std::uniform_real_distribution<double>(1e-6, 1 - rate)(rng);
        double gamma = erasure_to_overhead(rate, p);
        if (std::abs(overhead_to_erasure(rate, gamma) - p) > 1e-12) ok = false;
        double g2 = std::uniform_real_distribution<double>(0.0, 2.0)(rng);
        double p2 = overhead_to_erasure(rate, g2);
        if (std::abs(erasure_to_overhead(rate, p2) - g2) > 1e-12) ok = false;
    }
    report(8, ok, "overhead/erasure-rate conversions round-trip to 1e-12 on "
                  "1000 random pairs");
}

// --- 9: worker-count independence of sweep output -------------------------
void criterion9(const SweepSet& s, std::uint64_t trials, std::uint64_t seed) {
    progress("criterion 9: re-running one sweep with a different worker "
             "count");
    LdpcConfig bcfg;
    bcfg.N = 200;
    bcfg.m_rows = 100;
    bcfg.col_dist = table_rho();
    bcfg.seed = 2024;
    bcfg.dense_rows = 15;
    bcfg.dense_degree = 100;
    Rng brng(derive_seed(bcfg.seed, 1));
    CheckMatrix Mbar = build_check_matrix(bcfg, brng);
    LdpcFamilyConfig bfam{Mbar, kernel_basis(Mbar.M), 64};
    std::vector<GridPoint> pgrid;
    for (int i = 30; i <= 50; ++i) pgrid.push_back({0, 0, i / 100.0});

    auto rerun = sweep(bfam, pgrid, trials, seed, 3);
    std::ostringstream csv;
    write_csv(csv, rerun, s.mbar_meta);
    report(9, csv.str() == s.mbar_csv,
           "rerunning a sweep with 3 workers instead of 1 yields "
           "byte-identical CSV");
}

// --- 10: soft symbol-operation report ------------------------------------
void criterion10(const SweepSet& s) {
    double at_threshold = s.lt_mu_bar.at(14).mean_symbol_xors;
    double lo = at_threshold, hi = at_threshold;
    for (const auto& r : s.lt_mu_bar) {
        if (r.mean_symbol_xors > 0) {
            lo = std::min(lo, r.mean_symbol_xors);
            hi = std::max(hi, r.mean_symbol_xors);
        }
    }
    std::ostringstream msg;
    msg << "mean symbol XORs per successful dense-supplemented-LT decode: "
        << format_double(at_threshold) << " at k=14 (sweep range "
        << format_double(lo) << ".." << format_double(hi) << ")";
    if (at_threshold > 1100.0)
        msg << " -- WARNING: exceeds the 11n = 1100 reference budget; this "
               "decoder does not claim to match specialized elimination "
               "orderings";
    report(10, true, msg.str());
}

} // namespace

int main() {
    const std::uint64_t trials = 100000;
    const std::uint64_t seed = 20240901;

    criterion1();
    criterion2();
    criterion3();
    criterion4(trials, seed);
    SweepSet sweeps = criterion5(trials, seed);
    criterion6(sweeps);
    criterion7(seed);
    criterion8();
    criterion9(sweeps, trials, seed);
    criterion10(sweeps);

    if (failures_total == 0)
        std::printf("acceptance: all criteria passed\n");
    else
        std::printf("acceptance: %d criteria FAILED\n", failures_total);
    return failures_total;
}
