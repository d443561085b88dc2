#include "kovrank/rank_theory.hpp"

#include <cmath>

namespace kovrank {

namespace {

// Sum of log1p(-2^-i) for i = lo..hi; terms below double resolution
// contribute nothing and the loop exits early.
double log_product_tail(int lo, int hi) {
    double acc = 0.0;
    for (int i = lo; i <= hi; ++i) {
        double t = std::exp2(-static_cast<double>(i));
        if (t == 0.0 || 1.0 - t == 1.0) break;
        acc += std::log1p(-t);
    }
    return acc;
}

} // namespace

double s_sum(int n_minus_s, int l) {
    if (n_minus_s < 0) throw std::invalid_argument("s_sum: n-s < 0");
    if (l < 0) throw std::invalid_argument("s_sum: l < 0");
    if (l == 0) return 1.0;
    const int N = n_minus_s;
    // g[t][i] = sum_{j=i}^{N} 2^-j g[t-1][j], by suffix accumulation.
    std::vector<double> prev(N + 1, 1.0), cur(N + 1, 0.0);
    for (int t = 1; t <= l; ++t) {
        double suffix = 0.0;
        for (int i = N; i >= 0; --i) {
            suffix += std::exp2(-static_cast<double>(i)) * prev[i];
            cur[i] = suffix;
        }
        std::swap(prev, cur);
    }
    return prev[0];
}

double xi_exact(int n, int k, int s) {
    if (n < 0) throw std::invalid_argument("xi_exact: n < 0");
    if (s < 0 || s > n) throw std::invalid_argument("xi_exact: s out of [0, n]");
    const int l = k + s;
    if (l < 0) throw std::invalid_argument("xi_exact: k + s < 0");
    double value = s_sum(n - s, l);
    value *= std::exp2(-static_cast<double>(l) * s);
    value *= std::exp(log_product_tail(s + 1, n));
    return value;
}

double xi_limit(int k, int s) {
    if (s < 0) throw std::invalid_argument("xi_limit: s < 0");
    if (k + s < 0) throw std::invalid_argument("xi_limit: k + s < 0");
    double log_num = log_product_tail(s + 1, s + 1 + 64);
    double log_den = log_product_tail(1, k + s);
    double log_val = -static_cast<double>(s) * (k + s) * std::log(2.0) +
                     log_num - log_den;
    return std::exp(log_val);
}

RankDistribution rank_distribution(int n, int k) {
    RankDistribution dist;
    dist.n = n;
    dist.k = k;
    for (int s = 0; s <= n; ++s) {
        if (k + s < 0) continue; // rank n-s impossible when m < n-s
        dist.probs[s] = xi_exact(n, k, s);
    }
    return dist;
}

double kfrl_complement(int n, int k) {
    if (k < 0) throw std::invalid_argument("kfrl: k < 0");
    if (k >= n) return 1.0; // empty product
    return std::exp(log_product_tail(k + 1, n));
}

double kfrl(int n, int k) {
    if (k < 0) throw std::invalid_argument("kfrl: k < 0");
    if (k >= n) return 0.0;
    // -expm1 keeps relative accuracy when the product is close to 1,
    // i.e. when K ~ 2^-k is tiny.
    return -std::expm1(log_product_tail(k + 1, n));
}

KfrlCurve kfrl_curve(int n, int k_max) {
    if (k_max > n) throw std::invalid_argument("kfrl_curve: k_max > n");
    KfrlCurve curve;
    curve.n = n;
    curve.points.reserve(k_max + 1);
    for (int k = 0; k <= k_max; ++k) {
        curve.points.push_back(
            {k, static_cast<double>(k) / n, kfrl(n, k)});
    }
    return curve;
}

int k_delta(double delta) {
    if (!(delta > 0.0 && delta < 1.0))
        throw std::invalid_argument("k_delta: delta outside (0, 1)");
    int k = static_cast<int>(std::ceil(std::log2(1.0 / delta)));
    while (std::exp2(-static_cast<double>(k)) > delta) ++k;
    while (k > 0 && std::exp2(-static_cast<double>(k - 1)) <= delta) --k;
    return k;
}

OverheadResult kfro(int n, double delta) {
    if (!(delta > 0.0 && delta < 1.0))
        throw std::invalid_argument("kfro: delta outside (0, 1)");
    OverheadResult res;
    res.delta = delta;
    res.n = n;
    int k = 0;
    while (k <= n && kfrl(n, k) > delta) ++k;
    if (k > n) throw std::logic_error("kfro: K never met delta (unreachable)");
    res.k_K = k;
    res.gamma_K = static_cast<double>(k) / n;
    res.k_delta = k_delta(delta);
    res.gamma_upper = (1.0 + std::log2(1.0 / delta)) / n;
    if (res.gamma_K > res.gamma_upper + 1e-15)
        throw std::logic_error("kfro: upper bound on gamma_K violated");
    return res;
}

double prop1_probability(int n, double d, int k) {
    if (n <= 0 || d < 0.0 || d > n || k < 1)
        throw std::invalid_argument("prop1_probability: bad arguments");
    return (1.0 + std::pow(1.0 - 2.0 * d / n, k)) / 2.0;
}

double overhead_to_erasure(double rate, double gamma) {
    if (rate < 0.0 || rate >= 1.0 || gamma < 0.0)
        throw std::domain_error("overhead_to_erasure: bad (R, gamma)");
    return (1.0 - rate) / (1.0 + gamma);
}

double erasure_to_overhead(double rate, double p) {
    if (rate < 0.0 || rate >= 1.0 || p <= 0.0)
        throw std::domain_error("erasure_to_overhead: bad (R, p)");
    if (p > 1.0 - rate)
        throw std::domain_error("erasure_to_overhead: p > 1 - R");
    return (1.0 - (rate + p)) / p;
}

} // namespace kovrank
