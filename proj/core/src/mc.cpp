#include "kovrank/mc.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <cstring>
#include <thread>

namespace kovrank {

namespace {

constexpr double kZ99 = 2.5758293035489004; // two-sided 99% normal quantile

// Folds grid-point parameters into the master seed so different points use
// disjoint trial streams.
std::uint64_t point_seed(std::uint64_t master, const GridPoint& pt) {
    std::uint64_t h = mix64(master);
    h = mix64(h ^ pt.n);
    h = mix64(h ^ pt.k);
    std::uint64_t pbits;
    static_assert(sizeof(pbits) == sizeof(pt.p));
    std::memcpy(&pbits, &pt.p, sizeof(pbits));
    return mix64(h ^ pbits);
}

struct Tally {
    std::uint64_t failures = 0;
    std::uint64_t successes = 0;
    std::uint64_t success_xors = 0;

    void add(const TrialOutcome& t) {
        if (t.full_rank) {
            ++successes;
            success_xors += t.symbol_xors;
        } else {
            ++failures;
        }
    }
    void merge(const Tally& o) {
        failures += o.failures;
        successes += o.successes;
        success_xors += o.success_xors;
    }
};

TrialOutcome run_one(const FamilyConfig& cfg, const GridPoint& pt, Rng& rng) {
    if (const auto* lt = std::get_if<LtConfig>(&cfg)) {
        return lt_trial(*lt, pt.k, rng);
    }
    if (const auto* ld = std::get_if<LdpcFamilyConfig>(&cfg)) {
        return ldpc_trial(ld->matrix, ld->kernel, pt.p, ld->s_bits, rng);
    }
    const auto& dense = std::get<DenseFamilyConfig>(cfg);
    // Uniform (n+k) x n matrix with a consistent random right-hand side.
    const std::size_t n = pt.n, m = pt.n + pt.k;
    LinearSystem sys;
    sys.provenance = SystemProvenance::Dense;
    sys.H = BitMatrix::random(m, n, rng);
    std::vector<SymbolBlock> alpha;
    alpha.reserve(n);
    for (std::size_t j = 0; j < n; ++j)
        alpha.push_back(SymbolBlock::random(dense.s_bits, rng));
    sys.beta = SymbolBuffer(m, dense.s_bits);
    for (std::size_t i = 0; i < m; ++i) {
        const word_t* row = sys.H.row(i);
        for (std::size_t kw = 0; kw < sys.H.row_words(); ++kw) {
            word_t w = row[kw];
            while (w) {
                sys.beta.xor_from(i, alpha[kw * kWordBits + std::countr_zero(w)].w.data());
                w &= w - 1;
            }
        }
    }
    EliminationResult res = solve(sys);
    return {res.full_rank(), res.kernel_dim, res.symbol_xor_count};
}

} // namespace

WilsonInterval wilson99(std::uint64_t failures, std::uint64_t trials) {
    if (trials == 0) return {0.0, 1.0};
    const double n = static_cast<double>(trials);
    const double phat = static_cast<double>(failures) / n;
    const double z2 = kZ99 * kZ99;
    const double denom = 1.0 + z2 / n;
    const double center = (phat + z2 / (2.0 * n)) / denom;
    const double half = kZ99 *
        std::sqrt(phat * (1.0 - phat) / n + z2 / (4.0 * n * n)) / denom;
    return {std::max(0.0, center - half), std::min(1.0, center + half)};
}

std::string family_name(Family f) {
    switch (f) {
        case Family::Lt: return "LT";
        case Family::Ldpc: return "LDPC";
        case Family::DenseRandom: return "DenseRandom";
    }
    return "?";
}

SweepReport estimate_dep(const FamilyConfig& cfg, const GridPoint& point,
                         std::uint64_t trials, std::uint64_t master_seed,
                         unsigned workers) {
    if (trials < 1) throw std::invalid_argument("estimate_dep: trials < 1");
    if (workers < 1) workers = 1;
    const std::uint64_t base = point_seed(master_seed, point);

    auto run_range = [&](std::uint64_t lo, std::uint64_t hi, Tally& out) {
        Tally t;
        for (std::uint64_t i = lo; i < hi; ++i) {
            Rng rng = make_rng(base, i);
            t.add(run_one(cfg, point, rng));
        }
        out = t;
    };

    Tally total;
    if (workers == 1 || trials < 2 * workers) {
        run_range(0, trials, total);
    } else {
        std::vector<Tally> parts(workers);
        std::vector<std::thread> threads;
        const std::uint64_t chunk = trials / workers;
        for (unsigned w = 0; w < workers; ++w) {
            std::uint64_t lo = w * chunk;
            std::uint64_t hi = (w + 1 == workers) ? trials : lo + chunk;
            threads.emplace_back(run_range, lo, hi, std::ref(parts[w]));
        }
        for (auto& th : threads) th.join();
        for (const auto& p : parts) total.merge(p);
    }

    SweepReport rep;
    rep.trials = trials;
    rep.failures = total.failures;
    rep.dep_hat = static_cast<double>(total.failures) / static_cast<double>(trials);
    auto ci = wilson99(total.failures, trials);
    rep.ci_low = ci.low;
    rep.ci_high = ci.high;
    rep.mean_symbol_xors = total.successes
        ? static_cast<double>(total.success_xors) / static_cast<double>(total.successes)
        : 0.0;
    rep.seed = master_seed;

    if (std::holds_alternative<LdpcFamilyConfig>(cfg)) {
        const auto& ld = std::get<LdpcFamilyConfig>(cfg);
        const std::size_t N = ld.matrix.M.cols();
        const std::size_t m = ld.matrix.M.rows();
        const auto n = static_cast<std::size_t>(
            std::llround(point.p * static_cast<double>(N)));
        rep.family = Family::Ldpc;
        rep.n_or_N = N;
        rep.k_or_p = point.p;
        if (n == 0) {
            rep.gamma = 0.0;
            rep.kfrl_value = 0.0;
        } else if (m >= n) {
            rep.gamma = (static_cast<double>(m) - static_cast<double>(n)) / n;
            rep.kfrl_value = kfrl(static_cast<int>(n), static_cast<int>(m - n));
        } else {
            rep.gamma = (static_cast<double>(m) - static_cast<double>(n)) / n;
            rep.kfrl_value = 1.0; // fewer equations than unknowns
        }
    } else {
        rep.family = std::holds_alternative<LtConfig>(cfg) ? Family::Lt
                                                           : Family::DenseRandom;
        rep.n_or_N = point.n;
        rep.k_or_p = static_cast<double>(point.k);
        rep.gamma = point.n ? static_cast<double>(point.k) / point.n : 0.0;
        rep.kfrl_value = kfrl(static_cast<int>(point.n), static_cast<int>(point.k));
    }
    return rep;
}

std::vector<SweepReport> sweep(const FamilyConfig& cfg,
                               const std::vector<GridPoint>& grid,
                               std::uint64_t trials, std::uint64_t master_seed,
                               unsigned workers) {
    if (grid.empty()) throw std::invalid_argument("sweep: empty grid");
    std::vector<SweepReport> out;
    out.reserve(grid.size());
    for (const auto& pt : grid)
        out.push_back(estimate_dep(cfg, pt, trials, master_seed, workers));
    return out;
}

BoundVerdict verify_lower_bound(const std::vector<SweepReport>& reports) {
    BoundVerdict verdict;
    for (std::size_t i = 0; i < reports.size(); ++i) {
        if (reports[i].kfrl_value > reports[i].ci_high * (1.0 + 1e-12))
            verdict.violations.push_back(i);
    }
    return verdict;
}

MsoResult empirical_mso(const std::vector<SweepReport>& reports, double delta) {
    MsoResult res;
    res.delta = delta;

    std::vector<const SweepReport*> sorted;
    for (const auto& r : reports) sorted.push_back(&r);
    std::sort(sorted.begin(), sorted.end(),
              [](const SweepReport* a, const SweepReport* b) {
                  return a->gamma < b->gamma;
              });
    for (const SweepReport* r : sorted) {
        if (r->ci_high < delta) {
            if (static_cast<double>(r->trials) < 10.0 / delta) break;
            res.resolvable = true;
            res.gamma_hat_star = r->gamma;
            std::size_t n = (r->family == Family::Ldpc)
                ? static_cast<std::size_t>(
                      std::llround(r->k_or_p * static_cast<double>(r->n_or_N)))
                : r->n_or_N;
            res.gamma_K = kfro(static_cast<int>(n), delta).gamma_K;
            return res;
        }
    }
    return res;
}

double prop1_empirical(std::size_t n, double d, std::size_t k,
                       std::uint64_t trials, std::uint64_t seed) {
    if (k < 1 || k > n)
        throw std::invalid_argument("prop1_empirical: k outside [1, n]");
    BitVector v(n);
    for (std::size_t i = 0; i < k; ++i) v.set(i);
    std::uint64_t zeros = 0;
    for (std::uint64_t t = 0; t < trials; ++t) {
        Rng rng = make_rng(seed, t);
        BitVector w = BitVector::bernoulli(n, d / static_cast<double>(n), rng);
        if (!dot_parity(w, v)) ++zeros;
    }
    return static_cast<double>(zeros) / static_cast<double>(trials);
}

unsigned default_workers() {
    if (const char* env = std::getenv("KOVRANK_THREADS")) {
        int v = std::atoi(env);
        if (v >= 1) return static_cast<unsigned>(v);
    }
    unsigned hc = std::thread::hardware_concurrency();
    return hc ? hc : 1;
}

} // namespace kovrank
