#include <benchmark/benchmark.h>

#include "kovrank/lt.hpp"
#include "kovrank/ldpc.hpp"
#include "kovrank/rank_theory.hpp"
#include "kovrank/solve.hpp"

using namespace kovrank;

namespace {

LinearSystem make_lt_system(std::size_t n, std::size_t k, std::uint64_t seed) {
    LtConfig cfg;
    cfg.n = n;
    cfg.s_bits = 64;
    cfg.dist = table_mu_bar();
    Rng rng(seed);
    std::vector<SymbolBlock> alpha;
    alpha.reserve(n);
    for (std::size_t j = 0; j < n; ++j)
        alpha.push_back(SymbolBlock::random(64, rng));
    return lt_encode(cfg, alpha, n + k, rng);
}

void bm_dense_rank(benchmark::State& state) {
    auto n = static_cast<std::size_t>(state.range(0));
    Rng rng(1);
    BitMatrix A = BitMatrix::random(n, n, rng);
    for (auto _ : state) benchmark::DoNotOptimize(rank(A));
}

void bm_plain_solve_lt(benchmark::State& state) {
    auto n = static_cast<std::size_t>(state.range(0));
    LinearSystem sys = make_lt_system(n, n / 10, 2);
    for (auto _ : state) benchmark::DoNotOptimize(solve(sys));
}

void bm_structured_solve_lt(benchmark::State& state) {
    auto n = static_cast<std::size_t>(state.range(0));
    LinearSystem sys = make_lt_system(n, n / 10, 2);
    for (auto _ : state) benchmark::DoNotOptimize(structured_solve(sys));
}

void bm_lt_trial(benchmark::State& state) {
    LtConfig cfg;
    cfg.n = 100;
    cfg.s_bits = 64;
    cfg.dist = table_mu_bar();
    Rng rng(3);
    for (auto _ : state)
        benchmark::DoNotOptimize(lt_trial(cfg, 15, rng));
}

void bm_ldpc_trial(benchmark::State& state) {
    LdpcConfig cfg;
    cfg.N = 200;
    cfg.m_rows = 100;
    cfg.col_dist = table_rho();
    Rng rng(4);
    CheckMatrix M = peg_construct(cfg, rng);
    auto kernel = kernel_basis(M.M);
    for (auto _ : state)
        benchmark::DoNotOptimize(ldpc_trial(M, kernel, 0.4, 64, rng));
}

void bm_peg_construct(benchmark::State& state) {
    LdpcConfig cfg;
    cfg.N = static_cast<std::size_t>(state.range(0));
    cfg.m_rows = cfg.N / 2;
    cfg.col_dist = table_rho();
    std::uint64_t s = 5;
    for (auto _ : state) {
        Rng rng(s++);
        benchmark::DoNotOptimize(peg_construct(cfg, rng));
    }
}

void bm_rank_distribution(benchmark::State& state) {
    auto n = static_cast<int>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(rank_distribution(n, 5));
}

BENCHMARK(bm_dense_rank)->Arg(100)->Arg(400)->Arg(1000);
BENCHMARK(bm_plain_solve_lt)->Arg(100)->Arg(400);
BENCHMARK(bm_structured_solve_lt)->Arg(100)->Arg(400);
BENCHMARK(bm_lt_trial);
BENCHMARK(bm_ldpc_trial);
BENCHMARK(bm_peg_construct)->Arg(200)->Arg(1000);
BENCHMARK(bm_rank_distribution)->Arg(100)->Arg(400);

} // namespace

BENCHMARK_MAIN();
