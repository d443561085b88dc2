#include "kovrank/ldpc.hpp"

#include <algorithm>
#include <deque>
#include <fstream>
#include <numeric>
#include <sstream>

namespace kovrank {

namespace {

// Uniform `degree`-subset support over `n` columns.
BitVector random_support(std::size_t n, std::size_t degree, Rng& rng,
                         std::vector<std::uint32_t>& scratch) {
    BitVector row(n);
    scratch.resize(n);
    std::iota(scratch.begin(), scratch.end(), 0u);
    for (std::size_t t = 0; t < degree; ++t) {
        std::size_t j = t + uniform_below(rng, n - t);
        std::swap(scratch[t], scratch[j]);
        row.set(scratch[t]);
    }
    return row;
}

} // namespace

CheckMatrix peg_construct(const LdpcConfig& cfg, Rng& rng) {
    const std::size_t N = cfg.N;
    const std::size_t m = cfg.m_rows;

    std::vector<std::vector<std::uint32_t>> var_adj(N), check_adj(m);
    std::vector<std::size_t> check_deg(m, 0);

    // Scratch for BFS over the Tanner graph.
    std::vector<int> var_depth(N), check_depth(m);

    auto pick_check = [&](const std::vector<char>& adjacent,
                          const std::vector<char>& candidate) -> std::size_t {
        std::size_t best = m;
        for (std::size_t c = 0; c < m; ++c) {
            if (adjacent[c] || !candidate[c]) continue;
            if (best == m || check_deg[c] < check_deg[best]) best = c;
        }
        return best;
    };

    std::vector<char> adjacent(m), candidate(m);
    for (std::size_t v = 0; v < N; ++v) {
        auto d = static_cast<std::size_t>(cfg.col_dist.sample(rng));
        if (d > m)
            throw std::invalid_argument("peg_construct: column degree exceeds m_rows");
        std::fill(adjacent.begin(), adjacent.end(), char{0});

        for (std::size_t e = 0; e < d; ++e) {
            std::size_t chosen;
            if (e == 0) {
                std::fill(candidate.begin(), candidate.end(), char{1});
                chosen = pick_check(adjacent, candidate);
            } else {
                // BFS from v; depth of each reachable check node.
                std::fill(var_depth.begin(), var_depth.end(), -1);
                std::fill(check_depth.begin(), check_depth.end(), -1);
                var_depth[v] = 0;
                std::deque<std::uint32_t> vq{static_cast<std::uint32_t>(v)};
                int max_depth = 0;
                while (!vq.empty()) {
                    std::uint32_t u = vq.front();
                    vq.pop_front();
                    for (std::uint32_t c : var_adj[u]) {
                        if (check_depth[c] >= 0) continue;
                        check_depth[c] = var_depth[u] + 1;
                        max_depth = std::max(max_depth, check_depth[c]);
                        for (std::uint32_t w : check_adj[c]) {
                            if (var_depth[w] < 0) {
                                var_depth[w] = check_depth[c] + 1;
                                vq.push_back(w);
                            }
                        }
                    }
                }
                bool any_unreachable = false;
                for (std::size_t c = 0; c < m; ++c) {
                    candidate[c] = (check_depth[c] < 0);
                    if (candidate[c] && !adjacent[c]) any_unreachable = true;
                }
                if (!any_unreachable) {
                    for (std::size_t c = 0; c < m; ++c)
                        candidate[c] = (check_depth[c] == max_depth);
                }
                chosen = pick_check(adjacent, candidate);
                if (chosen == m) {
                    // All max-depth checks already adjacent; fall back to
                    // any non-adjacent check of minimum degree.
                    std::fill(candidate.begin(), candidate.end(), char{1});
                    chosen = pick_check(adjacent, candidate);
                }
            }
            if (chosen == m)
                throw std::invalid_argument("peg_construct: no check node available");
            adjacent[chosen] = 1;
            var_adj[v].push_back(static_cast<std::uint32_t>(chosen));
            check_adj[chosen].push_back(static_cast<std::uint32_t>(v));
            ++check_deg[chosen];
        }
    }

    CheckMatrix out;
    out.M = BitMatrix(m, N);
    for (std::size_t v = 0; v < N; ++v)
        for (std::uint32_t c : var_adj[v]) out.M.set(c, v);
    out.girth_hint = tanner_girth(out.M);
    return out;
}

CheckMatrix supplement_dense_rows(const CheckMatrix& base, std::size_t count,
                                  std::size_t degree, Rng& rng) {
    const std::size_t N = base.M.cols();
    if (degree > N)
        throw std::invalid_argument("supplement_dense_rows: degree > N");
    CheckMatrix out;
    out.M = BitMatrix(base.M.rows() + count, N);
    for (std::size_t i = 0; i < base.M.rows(); ++i)
        out.M.set_row(i, base.M.row_vector(i));
    std::vector<std::uint32_t> scratch;
    for (std::size_t t = 0; t < count; ++t)
        out.M.set_row(base.M.rows() + t, random_support(N, degree, rng, scratch));
    return out;
}

CheckMatrix build_check_matrix(const LdpcConfig& cfg, Rng& rng) {
    LdpcConfig peg_cfg = cfg;
    if (cfg.dense_rows > cfg.m_rows)
        throw std::invalid_argument("build_check_matrix: dense_rows > m_rows");
    peg_cfg.m_rows = cfg.m_rows - cfg.dense_rows;
    CheckMatrix base = peg_construct(peg_cfg, rng);
    if (cfg.dense_rows == 0) return base;
    return supplement_dense_rows(base, cfg.dense_rows, cfg.dense_degree, rng);
}

std::vector<SymbolBlock> random_codeword(const CheckMatrix& M,
                                         const std::vector<BitVector>& kernel,
                                         std::size_t s_bits, Rng& rng) {
    const std::size_t N = M.M.cols();
    BitVector word(N);
    for (const BitVector& b : kernel)
        if (rng() & 1u) word ^= b;

    SymbolBlock ones(s_bits);
    for (auto& w : ones.w) w = ~word_t{0};
    std::size_t r = s_bits % kWordBits;
    if (r && !ones.w.empty()) ones.w.back() &= (word_t{1} << r) - 1;

    std::vector<SymbolBlock> alpha(N, SymbolBlock(s_bits));
    for (std::size_t j = 0; j < N; ++j)
        if (word.get(j)) alpha[j] = ones;
    return alpha;
}

LinearSystem erase_and_build(const CheckMatrix& M,
                             const std::vector<SymbolBlock>& alpha, double p,
                             Rng& rng) {
    const std::size_t N = M.M.cols();
    const std::size_t m = M.M.rows();
    if (alpha.size() != N)
        throw std::invalid_argument("erase_and_build: alpha size != N");
    if (p < 0.0 || p > 1.0)
        throw std::invalid_argument("erase_and_build: p outside [0, 1]");
    const std::size_t s_bits = alpha.empty() ? 0 : alpha[0].bits;

    // Kernel membership check, per payload plane.
    SymbolBlock acc(s_bits);
    for (std::size_t i = 0; i < m; ++i) {
        std::fill(acc.w.begin(), acc.w.end(), word_t{0});
        const word_t* row = M.M.row(i);
        for (std::size_t k = 0; k < M.M.row_words(); ++k) {
            word_t w = row[k];
            while (w) {
                acc ^= alpha[k * kWordBits + std::countr_zero(w)];
                w &= w - 1;
            }
        }
        if (!acc.is_zero())
            throw std::invalid_argument("erase_and_build: alpha not in Ker(M)");
    }

    const auto n_erased = static_cast<std::size_t>(
        std::llround(p * static_cast<double>(N)));
    std::vector<std::uint32_t> idx(N);
    std::iota(idx.begin(), idx.end(), 0u);
    for (std::size_t t = 0; t < n_erased; ++t) {
        std::size_t j = t + uniform_below(rng, N - t);
        std::swap(idx[t], idx[j]);
    }
    std::vector<std::uint32_t> erased(idx.begin(), idx.begin() + n_erased);
    std::sort(erased.begin(), erased.end());
    std::vector<std::int32_t> local(N, -1);
    for (std::size_t t = 0; t < n_erased; ++t) local[erased[t]] = static_cast<std::int32_t>(t);

    LinearSystem sys;
    sys.provenance = SystemProvenance::Ldpc;
    sys.H = BitMatrix(m, n_erased);
    sys.beta = SymbolBuffer(m, s_bits);
    sys.gamma = n_erased
        ? (static_cast<double>(m) - static_cast<double>(n_erased)) / n_erased
        : 0.0;
    for (std::size_t i = 0; i < m; ++i) {
        const word_t* row = M.M.row(i);
        for (std::size_t k = 0; k < M.M.row_words(); ++k) {
            word_t w = row[k];
            while (w) {
                std::size_t j = k * kWordBits + std::countr_zero(w);
                if (local[j] >= 0)
                    sys.H.set(i, static_cast<std::size_t>(local[j]));
                else
                    sys.beta.xor_from(i, alpha[j].w.data());
                w &= w - 1;
            }
        }
    }
    return sys;
}

TrialOutcome ldpc_trial(const CheckMatrix& M,
                        const std::vector<BitVector>& kernel, double p,
                        std::size_t s_bits, Rng& rng) {
    std::vector<SymbolBlock> alpha = random_codeword(M, kernel, s_bits, rng);
    LinearSystem sys = erase_and_build(M, alpha, p, rng);
    EliminationResult res = structured_solve(sys);
    return {res.full_rank(), res.kernel_dim, res.symbol_xor_count};
}

void save_check_matrix(const CheckMatrix& M, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write check matrix: " + path);
    out << M.M.rows() << ' ' << M.M.cols() << '\n';
    for (std::size_t i = 0; i < M.M.rows(); ++i) {
        bool first = true;
        for (std::size_t j : M.M.row_vector(i).support()) {
            if (!first) out << ' ';
            out << j;
            first = false;
        }
        out << '\n';
    }
}

CheckMatrix load_check_matrix(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open check matrix: " + path);
    std::size_t m = 0, n = 0;
    std::string line;
    if (!std::getline(in, line))
        throw std::runtime_error("check matrix: missing header");
    {
        std::istringstream hs(line);
        if (!(hs >> m >> n))
            throw std::runtime_error("check matrix: bad header");
    }
    CheckMatrix out;
    out.M = BitMatrix(m, n);
    for (std::size_t i = 0; i < m; ++i) {
        if (!std::getline(in, line))
            throw std::runtime_error("check matrix: truncated file");
        std::istringstream ls(line);
        std::size_t j;
        while (ls >> j) {
            if (j >= n) throw std::runtime_error("check matrix: column out of range");
            out.M.set(i, j);
        }
    }
    return out;
}

std::optional<std::size_t> tanner_girth(const BitMatrix& M) {
    const std::size_t m = M.rows(), N = M.cols();
    // Unified vertex ids: variables 0..N-1, checks N..N+m-1.
    std::vector<std::vector<std::uint32_t>> adj(N + m);
    for (std::size_t i = 0; i < m; ++i) {
        const word_t* row = M.row(i);
        for (std::size_t k = 0; k < M.row_words(); ++k) {
            word_t w = row[k];
            while (w) {
                std::size_t j = k * kWordBits + std::countr_zero(w);
                adj[j].push_back(static_cast<std::uint32_t>(N + i));
                adj[N + i].push_back(static_cast<std::uint32_t>(j));
                w &= w - 1;
            }
        }
    }
    std::size_t best = 0;
    std::vector<int> dist(N + m);
    std::vector<std::int64_t> parent(N + m);
    for (std::size_t s = 0; s < N; ++s) {
        std::fill(dist.begin(), dist.end(), -1);
        std::fill(parent.begin(), parent.end(), -1);
        std::deque<std::uint32_t> q{static_cast<std::uint32_t>(s)};
        dist[s] = 0;
        while (!q.empty()) {
            std::uint32_t u = q.front();
            q.pop_front();
            for (std::uint32_t w : adj[u]) {
                if (w == parent[u]) continue;
                if (dist[w] < 0) {
                    dist[w] = dist[u] + 1;
                    parent[w] = u;
                    q.push_back(w);
                } else {
                    std::size_t cycle = static_cast<std::size_t>(dist[u]) +
                                        static_cast<std::size_t>(dist[w]) + 1;
                    if (best == 0 || cycle < best) best = cycle;
                }
            }
        }
    }
    if (best == 0) return std::nullopt;
    return best;
}

} // namespace kovrank
