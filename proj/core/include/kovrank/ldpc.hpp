#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "kovrank/degree.hpp"
#include "kovrank/lt.hpp"
#include "kovrank/solve.hpp"

namespace kovrank {

struct LdpcConfig {
    std::size_t N = 200;        // codeword length
    std::size_t m_rows = 100;   // check count
    DegreeDistribution col_dist; // column-degree distribution
    std::size_t dense_rows = 0;
    std::size_t dense_degree = 0;
    std::size_t s_bits = 64;
    std::uint64_t seed = 0;

    double rate() const {
        return 1.0 - static_cast<double>(m_rows) / static_cast<double>(N);
    }
};

struct CheckMatrix {
    BitMatrix M; // m_rows x N
    std::optional<std::size_t> girth_hint;
};

/// Progressive edge growth: per variable node, first edge to a minimum-
/// degree check; later edges via BFS over the current Tanner graph to a
/// check unreachable from the variable if one exists, else one at maximum
/// depth; ties broken by minimum current check degree, then lowest index.
CheckMatrix peg_construct(const LdpcConfig& cfg, Rng& rng);

/// Appends `count` rows, each a uniformly random `degree`-subset support.
CheckMatrix supplement_dense_rows(const CheckMatrix& base, std::size_t count,
                                  std::size_t degree, Rng& rng);

/// Builds cfg.m_rows x cfg.N via PEG over (m_rows - dense_rows) base rows,
/// then appends the dense rows.
CheckMatrix build_check_matrix(const LdpcConfig& cfg, Rng& rng);

/// Draws a random codeword (kernel element of M) on one bit plane,
/// replicated across s_bits payload planes.
std::vector<SymbolBlock> random_codeword(const CheckMatrix& M,
                                         const std::vector<BitVector>& kernel,
                                         std::size_t s_bits, Rng& rng);

/// Erases a fixed-size uniform set of round(p*N) coordinates and assembles
/// the residual system H X^T = beta^T over the erased unknowns. Throws
/// std::invalid_argument when alpha is not in Ker(M).
LinearSystem erase_and_build(const CheckMatrix& M,
                             const std::vector<SymbolBlock>& alpha, double p,
                             Rng& rng);

/// One Monte-Carlo trial at erasure rate p; the kernel basis of M is
/// passed in so it is computed once per matrix.
TrialOutcome ldpc_trial(const CheckMatrix& M,
                        const std::vector<BitVector>& kernel, double p,
                        std::size_t s_bits, Rng& rng);

/// Text fixture format: header "m n", then one support-index list per row.
void save_check_matrix(const CheckMatrix& M, const std::string& path);
CheckMatrix load_check_matrix(const std::string& path);

/// Shortest cycle length in the Tanner graph, or nullopt when acyclic.
std::optional<std::size_t> tanner_girth(const BitMatrix& M);

} // namespace kovrank
