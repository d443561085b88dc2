#pragma once

#include <cstddef>
#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

#include "kovrank/rng.hpp"

namespace kovrank {

/// Normalized probability table over row/column degrees. Degrees are kept
/// strictly increasing; masses sum to 1 after construction.
class DegreeDistribution {
public:
    struct Entry {
        int degree;
        double mass;
    };

    /// Normalizes the given (degree, mass) pairs. Throws on an empty table,
    /// non-positive mass, or a degree above domain_max.
    static DegreeDistribution from_table(
        const std::vector<std::pair<int, double>>& pairs, int domain_max);

    /// Adds (dense_degree, dense_mass) and renormalizes. A degree already
    /// present collides by mass addition.
    DegreeDistribution supplement_dense(int dense_degree,
                                        double dense_mass) const;

    int sample(Rng& rng) const;

    const std::vector<Entry>& entries() const { return entries_; }
    int domain_max() const { return domain_max_; }
    int max_degree() const { return entries_.back().degree; }
    double mass_at(int degree) const;
    double mean_degree() const;

private:
    std::vector<Entry> entries_;
    std::vector<double> cdf_;
    int domain_max_ = 0;

    void build_cdf();
};

/// Luby's robust soliton distribution over {1..n} with parameters (c, delta).
DegreeDistribution robust_soliton(int n, double c, double delta);

/// Ideal soliton: rho(1) = 1/n, rho(d) = 1/(d(d-1)) for 2 <= d <= n.
DegreeDistribution ideal_soliton(int n);

/// Table-driven distributions used by the shipped experiments.
DegreeDistribution table_mu();      // LT row degrees, max degree 35
DegreeDistribution table_mu_bar();  // mu supplemented with 0.17 x^50
DegreeDistribution table_rho();     // LDPC column degrees

/// Text config: lines "degree mass", optional "dense <degree> <mass>" line,
/// '#' comments. Throws std::runtime_error on parse failure.
DegreeDistribution load_distribution(std::istream& in, int domain_max);
DegreeDistribution load_distribution_file(const std::string& path,
                                          int domain_max);

/// Resolves a builtin name (mu, mu_bar, rho) or a file path.
DegreeDistribution resolve_distribution(const std::string& name_or_path,
                                        int domain_max);

} // namespace kovrank
