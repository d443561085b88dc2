#pragma once

#include <cstddef>
#include <map>
#include <stdexcept>
#include <vector>

namespace kovrank {

/// Rank distribution of a uniform (n+k) x n binary matrix: probs[s] is the
/// probability that the rank equals n - s.
struct RankDistribution {
    int n = 0;
    int k = 0;
    std::map<int, double> probs; // deficiency s -> xi_k(n - s)
};

struct KfrlPoint {
    int k;
    double gamma;
    double K;
};

struct KfrlCurve {
    int n = 0;
    std::vector<KfrlPoint> points;
};

struct OverheadResult {
    double delta = 0.0;
    int n = 0;
    int k_K = 0;          // minimal k with K(1 + k/n, n) <= delta
    double gamma_K = 0.0; // k_K / n
    int k_delta = 0;      // min{k : 2^-k <= delta}
    double gamma_upper = 0.0; // (1 + log2(1/delta)) / n
};

/// l-fold nested sum over non-decreasing index tuples in {0..n_minus_s}:
/// S(n-s, l) = sum_{i1=0}^{n-s} 2^{-i1} sum_{i2=i1}^{n-s} 2^{-i2} ...
/// l = 0 returns 1.
double s_sum(int n_minus_s, int l);

/// Exact probability that a uniform (n+k) x n binary matrix has rank n - s.
/// Requires l = k + s >= 0 and 0 <= s <= n.
double xi_exact(int n, int k, int s);

/// n -> infinity limit of xi_exact(n, k, s).
double xi_limit(int k, int s);

/// Full exact deficiency distribution for an (n+k) x n uniform matrix.
RankDistribution rank_distribution(int n, int k);

/// K(1 + k/n, n) = 1 - prod_{i=k+1}^{n} (1 - 2^-i). Zero for k >= n.
double kfrl(int n, int k);

/// g(k, n) = prod_{i=k+1}^{n} (1 - 2^-i); the full-rank probability floor.
double kfrl_complement(int n, int k);

/// Curve of K over k = 0..k_max.
KfrlCurve kfrl_curve(int n, int k_max);

/// Minimal overhead at which the full-rank limit meets the error bound.
OverheadResult kfro(int n, double delta);

/// min{k in Z : 2^-k <= delta}, 0 < delta < 1.
int k_delta(double delta);

/// Pr(W . V^T = 0) for |V| = k and iid Pr(w_i = 1) = d/n:
/// (1 + (1 - 2d/n)^k) / 2.
double prop1_probability(int n, double d, int k);

/// p = (1 - R) / (1 + gamma).
double overhead_to_erasure(double rate, double gamma);

/// gamma = (1 - (R + p)) / p; throws std::domain_error when p > 1 - R.
double erasure_to_overhead(double rate, double p);

} // namespace kovrank
