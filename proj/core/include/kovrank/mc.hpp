#pragma once

#include <cstdint>
#include <string>
#include <variant>
#include <vector>

#include "kovrank/ldpc.hpp"
#include "kovrank/lt.hpp"
#include "kovrank/rank_theory.hpp"

namespace kovrank {

struct WilsonInterval {
    double low = 0.0;
    double high = 1.0;
};

/// 99% Wilson score interval for a binomial proportion. Sane at zero
/// observed failures, unlike the normal approximation.
WilsonInterval wilson99(std::uint64_t failures, std::uint64_t trials);

enum class Family { Lt, Ldpc, DenseRandom };

std::string family_name(Family f);

/// One grid point of a sweep.
struct GridPoint {
    // LT / DenseRandom: n unknowns, k extra rows. LDPC: erasure rate p
    // over an N-column matrix; n and k are derived per trial.
    std::size_t n = 0;
    std::size_t k = 0;
    double p = 0.0;
};

struct DenseFamilyConfig {
    std::size_t n = 100;
    std::size_t s_bits = 64;
};

struct LdpcFamilyConfig {
    CheckMatrix matrix;
    std::vector<BitVector> kernel; // kernel basis of matrix.M
    std::size_t s_bits = 64;
};

using FamilyConfig = std::variant<LtConfig, LdpcFamilyConfig, DenseFamilyConfig>;

struct SweepReport {
    Family family = Family::DenseRandom;
    std::size_t n_or_N = 0;
    double k_or_p = 0.0;   // LT/dense: k; LDPC: p
    double gamma = 0.0;
    std::uint64_t trials = 0;
    std::uint64_t failures = 0;
    double dep_hat = 0.0;
    double ci_low = 0.0;
    double ci_high = 1.0;
    double kfrl_value = 0.0;
    double mean_symbol_xors = 0.0; // over successful decodes
    std::uint64_t seed = 0;
};

struct BoundVerdict {
    std::vector<std::size_t> violations; // indices of violated reports
    bool ok() const { return violations.empty(); }
};

struct MsoResult {
    double delta = 0.0;
    bool resolvable = false;
    double gamma_hat_star = 0.0; // empirical MSO on the sweep grid
    double gamma_K = 0.0;        // analytic KFRO
};

/// Runs `trials` independent trials at one grid point. Per-trial RNG
/// streams derive from (master_seed, trial index), so the report is a
/// pure function of its arguments regardless of `workers`.
SweepReport estimate_dep(const FamilyConfig& cfg, const GridPoint& point,
                         std::uint64_t trials, std::uint64_t master_seed,
                         unsigned workers = 1);

std::vector<SweepReport> sweep(const FamilyConfig& cfg,
                               const std::vector<GridPoint>& grid,
                               std::uint64_t trials, std::uint64_t master_seed,
                               unsigned workers = 1);

/// Checks kfrl <= ci_high at every point (one-sided statistical test of
/// the bound); reports indices where the bound is significantly violated.
BoundVerdict verify_lower_bound(const std::vector<SweepReport>& reports);

/// Smallest grid overhead whose Wilson upper bound is below delta,
/// compared against the analytic KFRO. Requires trials >= 10/delta at the
/// crossing point to claim resolvability.
MsoResult empirical_mso(const std::vector<SweepReport>& reports, double delta);

/// Empirical check of the closed-form parity probability: draws W with
/// iid Pr(w_i = 1) = d/n against a fixed V of weight k.
double prop1_empirical(std::size_t n, double d, std::size_t k,
                       std::uint64_t trials, std::uint64_t seed);

/// Default worker count: KOVRANK_THREADS env var, else hardware_concurrency.
unsigned default_workers();

} // namespace kovrank
