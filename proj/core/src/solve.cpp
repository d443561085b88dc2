#include "kovrank/solve.hpp"

#include <algorithm>
#include <cassert>
#include <span>

namespace kovrank {

namespace {

void swap_blocks(SymbolBuffer& B, std::size_t a, std::size_t b) {
    if (a == b) return;
    word_t* pa = B.block(a);
    word_t* pb = B.block(b);
    for (std::size_t k = 0; k < B.stride(); ++k) std::swap(pa[k], pb[k]);
}

// In-place Gaussian elimination of [A | B]. Returns rank. When `solution`
// is non-null, B has payload, and rank == cols, fills the unique solution.
std::size_t gauss_eliminate(BitMatrix& A, SymbolBuffer& B, bool has_payload,
                            std::uint64_t& sym_xors, std::uint64_t& row_ops,
                            std::vector<SymbolBlock>* solution) {
    const std::size_t m = A.rows(), n = A.cols();
    std::size_t r = 0;
    for (std::size_t col = 0; col < n && r < m; ++col) {
        std::size_t piv = m;
        for (std::size_t i = r; i < m; ++i)
            if (A.get(i, col)) { piv = i; break; }
        if (piv == m) continue;
        A.swap_rows(r, piv);
        if (has_payload) swap_blocks(B, r, piv);
        for (std::size_t i = r + 1; i < m; ++i) {
            if (A.get(i, col)) {
                A.xor_row(i, r);
                ++row_ops;
                if (has_payload) { B.xor_block(i, r); ++sym_xors; }
            }
        }
        ++r;
    }

    if (has_payload) {
        for (std::size_t i = r; i < m; ++i)
            if (!B.block_is_zero(i))
                throw InconsistentSystem(
                    "right-hand side outside the column space of H");
    }

    if (solution && has_payload && r == n) {
        // rank == n: pivot for column c sits in row c.
        for (std::size_t c = n; c-- > 1;) {
            for (std::size_t i = 0; i < c; ++i) {
                if (A.get(i, c)) {
                    A.xor_row(i, c);
                    ++row_ops;
                    B.xor_block(i, c);
                    ++sym_xors;
                }
            }
        }
        solution->clear();
        solution->reserve(n);
        for (std::size_t c = 0; c < n; ++c) solution->push_back(B.get(c));
    }
    return r;
}

} // namespace

EliminationResult solve(const LinearSystem& sys) {
    const std::size_t m = sys.H.rows(), n = sys.H.cols();
    const bool has_payload = !sys.beta.empty();
    if (has_payload && sys.beta.count() != m)
        throw std::invalid_argument("solve: beta count != rows(H)");

    BitMatrix A = sys.H;
    SymbolBuffer B = sys.beta;
    EliminationResult res;
    std::vector<SymbolBlock> sol;
    res.rank = gauss_eliminate(A, B, has_payload, res.symbol_xor_count,
                               res.row_op_count,
                               has_payload ? &sol : nullptr);
    res.kernel_dim = n - res.rank;
    if (has_payload && res.rank == n) res.solution = std::move(sol);
    return res;
}

EliminationResult structured_solve(const LinearSystem& sys) {
    const std::size_t m = sys.H.rows(), n = sys.H.cols();
    const bool has_payload = !sys.beta.empty();
    if (has_payload && sys.beta.count() != m)
        throw std::invalid_argument("structured_solve: beta count != rows(H)");

    EliminationResult res;

    // Sparse CSR views of H and H^T; thread-local scratch avoids per-call
    // allocation in Monte-Carlo loops.
    thread_local std::vector<std::uint32_t> supp, supp_off, byc, byc_off;
    supp.clear();
    supp_off.assign(m + 1, 0);
    byc_off.assign(n + 2, 0);
    for (std::size_t i = 0; i < m; ++i) {
        const word_t* r = sys.H.row(i);
        for (std::size_t k = 0; k < sys.H.row_words(); ++k) {
            word_t w = r[k];
            while (w) {
                auto j = static_cast<std::uint32_t>(k * kWordBits +
                                                    std::countr_zero(w));
                supp.push_back(j);
                ++byc_off[j + 2];
                w &= w - 1;
            }
        }
        supp_off[i + 1] = static_cast<std::uint32_t>(supp.size());
    }
    for (std::size_t j = 2; j < byc_off.size(); ++j) byc_off[j] += byc_off[j - 1];
    byc.resize(supp.size());
    for (std::size_t i = 0; i < m; ++i)
        for (std::uint32_t t = supp_off[i]; t < supp_off[i + 1]; ++t)
            byc[byc_off[supp[t] + 1]++] = static_cast<std::uint32_t>(i);

    auto row_supp = [&](std::size_t i) {
        return std::span<const std::uint32_t>(supp.data() + supp_off[i],
                                              supp_off[i + 1] - supp_off[i]);
    };
    auto col_rows = [&](std::size_t j) {
        return std::span<const std::uint32_t>(byc.data() + byc_off[j],
                                              byc_off[j + 1] - byc_off[j]);
    };

    enum class Col : std::uint8_t { Active, Peeled, Inactivated };
    std::vector<Col> state(n, Col::Active);
    std::vector<std::uint32_t> col_pos(n, 0); // peel order or inactivation slot
    std::vector<std::uint32_t> row_deg(m), col_deg(n);
    std::vector<bool> row_used(m, false);
    for (std::size_t i = 0; i < m; ++i)
        row_deg[i] = supp_off[i + 1] - supp_off[i];
    for (std::size_t j = 0; j < n; ++j)
        col_deg[j] = byc_off[j + 1] - byc_off[j];

    std::vector<std::uint32_t> deg1;
    for (std::size_t i = 0; i < m; ++i)
        if (row_deg[i] == 1) deg1.push_back(static_cast<std::uint32_t>(i));

    std::vector<std::pair<std::uint32_t, std::uint32_t>> peel; // (row, col)
    std::vector<std::uint32_t> inactivated;
    std::size_t active_left = n;

    auto retire_column = [&](std::uint32_t c) {
        for (std::uint32_t r2 : col_rows(c)) {
            if (!row_used[r2] && --row_deg[r2] == 1) deg1.push_back(r2);
        }
    };

    while (active_left > 0) {
        std::uint32_t r = 0;
        bool found = false;
        while (!deg1.empty()) {
            r = deg1.back();
            deg1.pop_back();
            if (!row_used[r] && row_deg[r] == 1) { found = true; break; }
        }
        if (found) {
            std::uint32_t c = 0;
            for (std::uint32_t j : row_supp(r))
                if (state[j] == Col::Active) { c = j; break; }
            row_used[r] = true;
            state[c] = Col::Peeled;
            col_pos[c] = static_cast<std::uint32_t>(peel.size());
            peel.emplace_back(r, c);
            --active_left;
            retire_column(c);
            for (std::uint32_t j : row_supp(r))
                if (state[j] == Col::Active) --col_deg[j];
        } else {
            // Peeling stalled: inactivate the active column of maximum
            // residual degree, ties broken by lowest index.
            std::uint32_t best = 0, best_deg = 0;
            bool have = false;
            for (std::size_t j = 0; j < n; ++j) {
                if (state[j] == Col::Active &&
                    (!have || col_deg[j] > best_deg)) {
                    best = static_cast<std::uint32_t>(j);
                    best_deg = col_deg[j];
                    have = true;
                }
            }
            state[best] = Col::Inactivated;
            col_pos[best] = static_cast<std::uint32_t>(inactivated.size());
            inactivated.push_back(best);
            --active_left;
            retire_column(best);
        }
    }

    const std::size_t q = inactivated.size();
    const std::size_t np = peel.size();
    const std::size_t s_bits = has_payload ? sys.beta.bits() : 0;

    // Forward substitution through the peel order: each peeled column c is
    // expressed as x_c = u_c + coeff_c . x_I over the inactivated unknowns.
    BitMatrix coeff(np, q);
    SymbolBuffer u(has_payload ? np : 0, s_bits);
    for (std::size_t t = 0; t < np; ++t) {
        auto [r, c] = peel[t];
        if (has_payload) {
            u.xor_from(t, sys.beta.block(r));
        }
        for (std::uint32_t j : row_supp(r)) {
            if (j == c) continue;
            if (state[j] == Col::Peeled) {
                coeff.xor_row(t, col_pos[j]);
                ++res.row_op_count;
                if (has_payload) { u.xor_block(t, col_pos[j]); ++res.symbol_xor_count; }
            } else {
                coeff.flip(t, col_pos[j]);
            }
        }
    }

    // Unused rows become equations purely over the inactivated core.
    std::vector<std::uint32_t> spare;
    for (std::size_t i = 0; i < m; ++i)
        if (!row_used[i]) spare.push_back(static_cast<std::uint32_t>(i));

    BitMatrix dense(spare.size(), q);
    SymbolBuffer rhs(has_payload ? spare.size() : 0, s_bits);
    for (std::size_t t = 0; t < spare.size(); ++t) {
        std::uint32_t r = spare[t];
        if (has_payload) rhs.xor_from(t, sys.beta.block(r));
        for (std::uint32_t j : row_supp(r)) {
            if (state[j] == Col::Peeled) {
                const word_t* src = coeff.row(col_pos[j]);
                word_t* dst = dense.row(t);
                for (std::size_t k = 0; k < dense.row_words(); ++k)
                    dst[k] ^= src[k];
                ++res.row_op_count;
                if (has_payload) { rhs.xor_from(t, u.block(col_pos[j])); ++res.symbol_xor_count; }
            } else {
                dense.flip(t, col_pos[j]);
            }
        }
    }

    std::vector<SymbolBlock> core_sol;
    std::size_t dense_rank =
        gauss_eliminate(dense, rhs, has_payload, res.symbol_xor_count,
                        res.row_op_count, has_payload ? &core_sol : nullptr);

    res.rank = np + dense_rank;
    res.kernel_dim = n - res.rank;

    if (has_payload && res.rank == n) {
        // Back-substitute the inactivated values into the peeled columns.
        std::vector<SymbolBlock> x(n, SymbolBlock(s_bits));
        for (std::size_t t = 0; t < q; ++t) x[inactivated[t]] = core_sol[t];
        for (std::size_t t = 0; t < np; ++t) {
            std::uint32_t c = peel[t].second;
            SymbolBlock val = u.get(t);
            const word_t* row = coeff.row(t);
            for (std::size_t k = 0; k < coeff.row_words(); ++k) {
                word_t w = row[k];
                while (w) {
                    std::size_t b = k * kWordBits + std::countr_zero(w);
                    val ^= x[inactivated[b]];
                    ++res.symbol_xor_count;
                    w &= w - 1;
                }
            }
            x[c] = std::move(val);
        }
        res.solution = std::move(x);
    }
    return res;
}

bool resubstitutes(const LinearSystem& sys, const std::vector<SymbolBlock>& x) {
    const std::size_t m = sys.H.rows(), n = sys.H.cols();
    if (x.size() != n || sys.beta.empty()) return false;
    SymbolBlock acc(sys.beta.bits());
    for (std::size_t i = 0; i < m; ++i) {
        std::fill(acc.w.begin(), acc.w.end(), word_t{0});
        const word_t* r = sys.H.row(i);
        for (std::size_t k = 0; k < sys.H.row_words(); ++k) {
            word_t w = r[k];
            while (w) {
                acc ^= x[k * kWordBits + std::countr_zero(w)];
                w &= w - 1;
            }
        }
        if (!(acc == sys.beta.get(i))) return false;
    }
    return true;
}

} // namespace kovrank
