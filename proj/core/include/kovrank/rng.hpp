#pragma once

#include <cstdint>
#include <random>

namespace kovrank {

using Rng = std::mt19937_64;

// splitmix64 finalizer; used to derive well-separated per-trial seeds
// from a (master seed, stream index) pair so that results do not depend
// on how trials are distributed over workers.
inline std::uint64_t mix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

inline std::uint64_t derive_seed(std::uint64_t master, std::uint64_t stream) {
    return mix64(master ^ mix64(stream + 0x51afd7ed558ccd6dULL));
}

inline Rng make_rng(std::uint64_t master, std::uint64_t stream) {
    return Rng(derive_seed(master, stream));
}

// Uniform integer in [0, bound), bound >= 1.
inline std::uint64_t uniform_below(Rng& rng, std::uint64_t bound) {
    return std::uniform_int_distribution<std::uint64_t>(0, bound - 1)(rng);
}

} // namespace kovrank
