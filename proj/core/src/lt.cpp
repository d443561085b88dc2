#include "kovrank/lt.hpp"

#include <bit>
#include <numeric>

namespace kovrank {

BitVector lt_generate_row(const LtConfig& cfg, Rng& rng) {
    const std::size_t n = cfg.n;
    std::size_t d = static_cast<std::size_t>(cfg.dist.sample(rng));
    BitVector row(n);
    // Partial Fisher-Yates over an index array: exact uniform d-subset.
    thread_local std::vector<std::uint32_t> idx;
    idx.resize(n);
    std::iota(idx.begin(), idx.end(), 0u);
    for (std::size_t t = 0; t < d; ++t) {
        std::size_t j = t + uniform_below(rng, n - t);
        std::swap(idx[t], idx[j]);
        row.set(idx[t]);
    }
    return row;
}

LinearSystem lt_encode(const LtConfig& cfg,
                       const std::vector<SymbolBlock>& alpha,
                       std::size_t m, Rng& rng) {
    const std::size_t n = cfg.n;
    if (alpha.size() != n)
        throw std::invalid_argument("lt_encode: alpha size != n");

    LinearSystem sys;
    sys.provenance = SystemProvenance::Lt;
    sys.gamma = n ? (static_cast<double>(m) - static_cast<double>(n)) / n : 0.0;
    sys.H = BitMatrix(m, n);
    sys.beta = SymbolBuffer(m, cfg.s_bits);
    for (std::size_t i = 0; i < m; ++i) {
        BitVector row = lt_generate_row(cfg, rng);
        sys.H.set_row(i, row);
        const word_t* words = row.words().data();
        for (std::size_t k = 0; k < row.words().size(); ++k) {
            word_t w = words[k];
            while (w) {
                sys.beta.xor_from(i, alpha[k * kWordBits + std::countr_zero(w)].w.data());
                w &= w - 1;
            }
        }
    }
    return sys;
}

TrialOutcome lt_trial(const LtConfig& cfg, std::size_t k_extra, Rng& rng) {
    std::vector<SymbolBlock> alpha;
    alpha.reserve(cfg.n);
    for (std::size_t j = 0; j < cfg.n; ++j)
        alpha.push_back(SymbolBlock::random(cfg.s_bits, rng));
    LinearSystem sys = lt_encode(cfg, alpha, cfg.n + k_extra, rng);
    EliminationResult res = structured_solve(sys);
    return {res.full_rank(), res.kernel_dim, res.symbol_xor_count};
}

} // namespace kovrank
