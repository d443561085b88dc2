#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "kovrank/bits.hpp"

namespace kovrank {

/// Payload symbol in F_2^s, stored as packed words. All blocks within one
/// system share the same bit width. XOR of a block with itself is zero.
struct SymbolBlock {
    std::size_t bits = 0;
    std::vector<word_t> w;

    SymbolBlock() = default;
    explicit SymbolBlock(std::size_t s) : bits(s), w(words_for_bits(s), 0) {}

    void operator^=(const SymbolBlock& o) {
        for (std::size_t k = 0; k < w.size(); ++k) w[k] ^= o.w[k];
    }
    bool is_zero() const {
        for (word_t x : w) if (x) return false;
        return true;
    }
    bool operator==(const SymbolBlock& o) const = default;

    static SymbolBlock random(std::size_t s, Rng& rng) {
        SymbolBlock b(s);
        for (auto& x : b.w) x = rng();
        std::size_t r = s % kWordBits;
        if (r && !b.w.empty()) b.w.back() &= (word_t{1} << r) - 1;
        return b;
    }
};

/// Flat storage for a column of SymbolBlocks; avoids one allocation per block.
class SymbolBuffer {
public:
    SymbolBuffer() = default;
    SymbolBuffer(std::size_t count, std::size_t bits)
        : count_(count), bits_(bits), stride_(words_for_bits(bits)),
          data_(count * stride_, 0) {}

    std::size_t count() const { return count_; }
    std::size_t bits() const { return bits_; }
    std::size_t stride() const { return stride_; }
    bool empty() const { return count_ == 0 || bits_ == 0; }

    word_t* block(std::size_t i) { return data_.data() + i * stride_; }
    const word_t* block(std::size_t i) const { return data_.data() + i * stride_; }

    void xor_block(std::size_t dst, std::size_t src) {
        word_t* d = block(dst);
        const word_t* s = block(src);
        for (std::size_t k = 0; k < stride_; ++k) d[k] ^= s[k];
    }
    void xor_from(std::size_t dst, const word_t* src) {
        word_t* d = block(dst);
        for (std::size_t k = 0; k < stride_; ++k) d[k] ^= src[k];
    }
    bool block_is_zero(std::size_t i) const {
        const word_t* b = block(i);
        for (std::size_t k = 0; k < stride_; ++k) if (b[k]) return false;
        return true;
    }

    SymbolBlock get(std::size_t i) const {
        SymbolBlock b(bits_);
        const word_t* s = block(i);
        for (std::size_t k = 0; k < stride_; ++k) b.w[k] = s[k];
        return b;
    }
    void put(std::size_t i, const SymbolBlock& b) {
        word_t* d = block(i);
        for (std::size_t k = 0; k < stride_; ++k) d[k] = b.w[k];
    }

    bool operator==(const SymbolBuffer& o) const = default;

private:
    std::size_t count_ = 0, bits_ = 0, stride_ = 0;
    std::vector<word_t> data_;
};

enum class SystemProvenance { Lt, Ldpc, Dense, Other };

/// A consistent-by-construction GF(2) system H X^T = beta^T with symbol
/// payload beta in (F_2^s)^m. beta may be empty (rank-only use).
struct LinearSystem {
    BitMatrix H;              // m x n
    SymbolBuffer beta;        // m blocks of s bits, or empty
    SystemProvenance provenance = SystemProvenance::Other;
    double gamma = 0.0;       // (m - n) / n where meaningful

    std::size_t equations() const { return H.rows(); }
    std::size_t unknowns() const { return H.cols(); }
};

/// Raised when beta lies outside the column space of H (bitwise, per
/// GF(2) right-hand-side plane). Honestly generated systems never do.
class InconsistentSystem : public std::runtime_error {
public:
    explicit InconsistentSystem(const std::string& what)
        : std::runtime_error(what) {}
};

struct EliminationResult {
    std::size_t rank = 0;
    std::size_t kernel_dim = 0;                 // n - rank
    std::optional<std::vector<SymbolBlock>> solution;
    std::uint64_t symbol_xor_count = 0;         // XORs on beta and derived blocks
    std::uint64_t row_op_count = 0;             // row XORs on the bit matrix side

    bool full_rank() const { return kernel_dim == 0; }
};

/// Plain Gaussian elimination, pivoting on the first set bit per column.
/// Solution present iff rank(H) = n; throws InconsistentSystem when beta
/// is present and falls outside the column space.
EliminationResult solve(const LinearSystem& sys);

/// Same contract as solve(). Peels degree-1 rows, inactivates the column
/// of maximum residual degree when peeling stalls (ties: lowest index),
/// and runs dense elimination only on the inactivated core. Fewer symbol
/// XORs than solve() on sparse systems.
EliminationResult structured_solve(const LinearSystem& sys);

/// True iff H x^T = beta^T for every payload plane.
bool resubstitutes(const LinearSystem& sys, const std::vector<SymbolBlock>& x);

} // namespace kovrank
