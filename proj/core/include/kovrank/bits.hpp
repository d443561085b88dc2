#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <vector>

#include "kovrank/rng.hpp"

namespace kovrank {

using word_t = std::uint64_t;
inline constexpr std::size_t kWordBits = 64;

inline std::size_t words_for_bits(std::size_t n) {
    return (n + kWordBits - 1) / kWordBits;
}

/// Packed vector over GF(2). Bits past index n-1 in the last word stay zero.
class BitVector {
public:
    BitVector() = default;
    explicit BitVector(std::size_t n) : n_(n), w_(words_for_bits(n), 0) {}

    std::size_t size() const { return n_; }

    bool get(std::size_t i) const {
        return (w_[i / kWordBits] >> (i % kWordBits)) & 1u;
    }
    void set(std::size_t i, bool v = true) {
        word_t mask = word_t{1} << (i % kWordBits);
        if (v) w_[i / kWordBits] |= mask;
        else   w_[i / kWordBits] &= ~mask;
    }
    void flip(std::size_t i) { w_[i / kWordBits] ^= word_t{1} << (i % kWordBits); }

    void operator^=(const BitVector& o) {
        if (o.n_ != n_) throw std::invalid_argument("BitVector xor: length mismatch");
        for (std::size_t k = 0; k < w_.size(); ++k) w_[k] ^= o.w_[k];
    }

    std::size_t weight() const {
        std::size_t c = 0;
        for (word_t w : w_) c += std::popcount(w);
        return c;
    }

    bool is_zero() const {
        for (word_t w : w_) if (w) return false;
        return true;
    }

    /// Index of the lowest set bit, or size() when zero.
    std::size_t first_set() const {
        for (std::size_t k = 0; k < w_.size(); ++k)
            if (w_[k]) return k * kWordBits + std::countr_zero(w_[k]);
        return n_;
    }

    std::vector<std::size_t> support() const {
        std::vector<std::size_t> s;
        for (std::size_t k = 0; k < w_.size(); ++k) {
            word_t w = w_[k];
            while (w) {
                s.push_back(k * kWordBits + std::countr_zero(w));
                w &= w - 1;
            }
        }
        return s;
    }

    const std::vector<word_t>& words() const { return w_; }
    std::vector<word_t>& words() { return w_; }

    bool operator==(const BitVector& o) const = default;

    static BitVector random(std::size_t n, Rng& rng) {
        BitVector v(n);
        for (auto& w : v.w_) w = rng();
        v.mask_tail();
        return v;
    }

    /// Bernoulli(p) per coordinate.
    static BitVector bernoulli(std::size_t n, double p, Rng& rng) {
        BitVector v(n);
        std::bernoulli_distribution coin(p);
        for (std::size_t i = 0; i < n; ++i)
            if (coin(rng)) v.set(i);
        return v;
    }

    void mask_tail() {
        std::size_t r = n_ % kWordBits;
        if (r && !w_.empty()) w_.back() &= (word_t{1} << r) - 1;
    }

private:
    std::size_t n_ = 0;
    std::vector<word_t> w_;
};

/// Parity of <w, v> over GF(2).
bool dot_parity(const BitVector& w, const BitVector& v);

/// Row-major packed matrix over GF(2).
class BitMatrix {
public:
    BitMatrix() = default;
    BitMatrix(std::size_t rows, std::size_t cols)
        : m_(rows), n_(cols), row_words_(words_for_bits(cols)),
          data_(rows * row_words_, 0) {}

    std::size_t rows() const { return m_; }
    std::size_t cols() const { return n_; }
    std::size_t row_words() const { return row_words_; }

    bool get(std::size_t i, std::size_t j) const {
        return (data_[i * row_words_ + j / kWordBits] >> (j % kWordBits)) & 1u;
    }
    void set(std::size_t i, std::size_t j, bool v = true) {
        word_t mask = word_t{1} << (j % kWordBits);
        word_t& w = data_[i * row_words_ + j / kWordBits];
        if (v) w |= mask; else w &= ~mask;
    }
    void flip(std::size_t i, std::size_t j) {
        data_[i * row_words_ + j / kWordBits] ^= word_t{1} << (j % kWordBits);
    }

    const word_t* row(std::size_t i) const { return data_.data() + i * row_words_; }
    word_t* row(std::size_t i) { return data_.data() + i * row_words_; }

    void xor_row(std::size_t dst, std::size_t src) {
        word_t* d = row(dst);
        const word_t* s = row(src);
        for (std::size_t k = 0; k < row_words_; ++k) d[k] ^= s[k];
    }
    void swap_rows(std::size_t a, std::size_t b) {
        if (a == b) return;
        word_t* ra = row(a);
        word_t* rb = row(b);
        for (std::size_t k = 0; k < row_words_; ++k) std::swap(ra[k], rb[k]);
    }

    BitVector row_vector(std::size_t i) const {
        BitVector v(n_);
        const word_t* r = row(i);
        for (std::size_t k = 0; k < row_words_; ++k) v.words()[k] = r[k];
        return v;
    }
    void set_row(std::size_t i, const BitVector& v) {
        if (v.size() != n_) throw std::invalid_argument("set_row: length mismatch");
        word_t* r = row(i);
        for (std::size_t k = 0; k < row_words_; ++k) r[k] = v.words()[k];
    }

    std::size_t row_weight(std::size_t i) const {
        std::size_t c = 0;
        const word_t* r = row(i);
        for (std::size_t k = 0; k < row_words_; ++k) c += std::popcount(r[k]);
        return c;
    }

    BitMatrix transpose() const;

    static BitMatrix random(std::size_t rows, std::size_t cols, Rng& rng) {
        BitMatrix M(rows, cols);
        for (std::size_t i = 0; i < rows; ++i)
            M.set_row(i, BitVector::random(cols, rng));
        return M;
    }

    static BitMatrix identity(std::size_t n) {
        BitMatrix M(n, n);
        for (std::size_t i = 0; i < n; ++i) M.set(i, i);
        return M;
    }

    bool operator==(const BitMatrix& o) const = default;

private:
    std::size_t m_ = 0, n_ = 0, row_words_ = 0;
    std::vector<word_t> data_;
};

/// Dimension of the row space over GF(2); the input is left unmodified.
std::size_t rank(const BitMatrix& M);

/// n - rank(M): dimension of the (column) kernel {v : M v^T = 0}.
std::size_t kernel_dimension(const BitMatrix& M);

/// Basis of {v in F_2^n : M v^T = 0}, one BitVector per basis element.
std::vector<BitVector> kernel_basis(const BitMatrix& M);

/// y = M x^T over GF(2), x of length cols, result of length rows.
BitVector mat_vec(const BitMatrix& M, const BitVector& x);

} // namespace kovrank
