#include "kovrank/bits.hpp"

namespace kovrank {

bool dot_parity(const BitVector& w, const BitVector& v) {
    if (w.size() != v.size())
        throw std::invalid_argument("dot_parity: length mismatch");
    word_t acc = 0;
    for (std::size_t k = 0; k < w.words().size(); ++k)
        acc ^= w.words()[k] & v.words()[k];
    return std::popcount(acc) & 1u;
}

BitMatrix BitMatrix::transpose() const {
    BitMatrix T(n_, m_);
    for (std::size_t i = 0; i < m_; ++i) {
        const word_t* r = row(i);
        for (std::size_t k = 0; k < row_words_; ++k) {
            word_t w = r[k];
            while (w) {
                std::size_t j = k * kWordBits + std::countr_zero(w);
                T.set(j, i);
                w &= w - 1;
            }
        }
    }
    return T;
}

std::size_t rank(const BitMatrix& M) {
    BitMatrix A = M;
    std::size_t m = A.rows(), n = A.cols();
    std::size_t r = 0;
    for (std::size_t col = 0; col < n && r < m; ++col) {
        std::size_t piv = m;
        for (std::size_t i = r; i < m; ++i) {
            if (A.get(i, col)) { piv = i; break; }
        }
        if (piv == m) continue;
        A.swap_rows(r, piv);
        for (std::size_t i = piv + 1; i < m; ++i)
            if (A.get(i, col)) A.xor_row(i, r);
        ++r;
    }
    return r;
}

std::size_t kernel_dimension(const BitMatrix& M) {
    return M.cols() - rank(M);
}

std::vector<BitVector> kernel_basis(const BitMatrix& M) {
    std::size_t m = M.rows(), n = M.cols();
    BitMatrix A = M;
    std::vector<std::size_t> pivot_col;
    std::size_t r = 0;
    for (std::size_t col = 0; col < n && r < m; ++col) {
        std::size_t piv = m;
        for (std::size_t i = r; i < m; ++i)
            if (A.get(i, col)) { piv = i; break; }
        if (piv == m) continue;
        A.swap_rows(r, piv);
        for (std::size_t i = 0; i < m; ++i)
            if (i != r && A.get(i, col)) A.xor_row(i, r);
        pivot_col.push_back(col);
        ++r;
    }
    std::vector<bool> is_pivot(n, false);
    for (std::size_t c : pivot_col) is_pivot[c] = true;

    std::vector<BitVector> basis;
    for (std::size_t free_col = 0; free_col < n; ++free_col) {
        if (is_pivot[free_col]) continue;
        BitVector v(n);
        v.set(free_col);
        for (std::size_t i = 0; i < pivot_col.size(); ++i)
            if (A.get(i, free_col)) v.set(pivot_col[i]);
        basis.push_back(std::move(v));
    }
    return basis;
}

BitVector mat_vec(const BitMatrix& M, const BitVector& x) {
    if (x.size() != M.cols())
        throw std::invalid_argument("mat_vec: length mismatch");
    BitVector y(M.rows());
    for (std::size_t i = 0; i < M.rows(); ++i) {
        word_t acc = 0;
        const word_t* r = M.row(i);
        for (std::size_t k = 0; k < M.row_words(); ++k)
            acc ^= r[k] & x.words()[k];
        if (std::popcount(acc) & 1u) y.set(i);
    }
    return y;
}

} // namespace kovrank
