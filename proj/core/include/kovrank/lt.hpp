#pragma once

#include <cstdint>

#include "kovrank/degree.hpp"
#include "kovrank/solve.hpp"

namespace kovrank {

struct LtConfig {
    std::size_t n = 100;       // block length (information symbols)
    std::size_t s_bits = 64;   // payload symbol width
    DegreeDistribution dist;   // row-degree distribution
    std::uint64_t seed = 0;
};

struct TrialOutcome {
    bool full_rank = false;
    std::size_t kernel_dim = 0;
    std::uint64_t symbol_xors = 0;
};

/// One syndrome row: sample d from cfg.dist, then a uniform d-subset of
/// {0..n-1} as support (partial Fisher-Yates, no rejection).
BitVector lt_generate_row(const LtConfig& cfg, Rng& rng);

/// m generated rows with beta_i = XOR of alpha over the row support.
LinearSystem lt_encode(const LtConfig& cfg,
                       const std::vector<SymbolBlock>& alpha,
                       std::size_t m, Rng& rng);

/// One Monte-Carlo trial at overhead k extra rows (m = n + k): draws a
/// random alpha, encodes, and runs structured_solve.
TrialOutcome lt_trial(const LtConfig& cfg, std::size_t k_extra, Rng& rng);

} // namespace kovrank
