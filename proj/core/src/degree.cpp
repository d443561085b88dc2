#include "kovrank/degree.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <map>
#include <sstream>
#include <stdexcept>

namespace kovrank {

void DegreeDistribution::build_cdf() {
    cdf_.clear();
    cdf_.reserve(entries_.size());
    double acc = 0.0;
    for (const auto& e : entries_) {
        acc += e.mass;
        cdf_.push_back(acc);
    }
    cdf_.back() = 1.0;
}

DegreeDistribution DegreeDistribution::from_table(
    const std::vector<std::pair<int, double>>& pairs, int domain_max) {
    if (pairs.empty())
        throw std::invalid_argument("degree table is empty");
    std::map<int, double> merged;
    double total = 0.0;
    for (auto [d, mass] : pairs) {
        if (mass <= 0.0)
            throw std::invalid_argument("degree table: non-positive mass");
        if (d < 1 || d > domain_max)
            throw std::invalid_argument("degree table: degree outside [1, domain_max]");
        merged[d] += mass;
        total += mass;
    }
    DegreeDistribution dist;
    dist.domain_max_ = domain_max;
    for (auto [d, mass] : merged)
        dist.entries_.push_back({d, mass / total});
    dist.build_cdf();
    return dist;
}

DegreeDistribution DegreeDistribution::supplement_dense(int dense_degree,
                                                        double dense_mass) const {
    if (dense_mass <= 0.0)
        throw std::invalid_argument("supplement_dense: mass must be positive");
    std::vector<std::pair<int, double>> pairs;
    for (const auto& e : entries_) pairs.emplace_back(e.degree, e.mass);
    pairs.emplace_back(dense_degree, dense_mass);
    return from_table(pairs, std::max(domain_max_, dense_degree));
}

int DegreeDistribution::sample(Rng& rng) const {
    double u = std::uniform_real_distribution<double>(0.0, 1.0)(rng);
    auto it = std::lower_bound(cdf_.begin(), cdf_.end(), u);
    if (it == cdf_.end()) --it;
    return entries_[static_cast<std::size_t>(it - cdf_.begin())].degree;
}

double DegreeDistribution::mass_at(int degree) const {
    for (const auto& e : entries_)
        if (e.degree == degree) return e.mass;
    return 0.0;
}

double DegreeDistribution::mean_degree() const {
    double mean = 0.0;
    for (const auto& e : entries_) mean += e.degree * e.mass;
    return mean;
}

DegreeDistribution ideal_soliton(int n) {
    if (n < 2) throw std::invalid_argument("ideal_soliton: n < 2");
    std::vector<std::pair<int, double>> pairs;
    pairs.emplace_back(1, 1.0 / n);
    for (int d = 2; d <= n; ++d)
        pairs.emplace_back(d, 1.0 / (static_cast<double>(d) * (d - 1)));
    return DegreeDistribution::from_table(pairs, n);
}

DegreeDistribution robust_soliton(int n, double c, double delta) {
    if (n < 2) throw std::invalid_argument("robust_soliton: n < 2");
    if (c <= 0.0 || delta <= 0.0 || delta >= 1.0)
        throw std::invalid_argument("robust_soliton: bad (c, delta)");
    const double R = c * std::log(n / delta) * std::sqrt(static_cast<double>(n));
    const int spike = static_cast<int>(std::round(n / R));
    if (spike < 1 || spike > n)
        throw std::invalid_argument("robust_soliton: spike index outside [1, n]");

    std::vector<std::pair<int, double>> pairs;
    pairs.emplace_back(1, 1.0 / n + R / n); // tau(d) = R/(dn) for d < spike
    for (int d = 2; d <= n; ++d) {
        double mass = 1.0 / (static_cast<double>(d) * (d - 1));
        if (d < spike) mass += R / (static_cast<double>(d) * n);
        else if (d == spike) mass += R * std::log(R / delta) / n;
        if (mass > 0.0) pairs.emplace_back(d, mass);
    }
    return DegreeDistribution::from_table(pairs, n);
}

DegreeDistribution table_mu() {
    return DegreeDistribution::from_table(
        {{1, 0.012}, {2, 0.482}, {3, 0.153}, {4, 0.082}, {5, 0.047},
         {6, 0.035}, {7, 0.024}, {8, 0.023}, {9, 0.012}, {10, 0.012},
         {25, 0.059}, {35, 0.059}},
        100);
}

DegreeDistribution table_mu_bar() {
    return table_mu().supplement_dense(50, 0.17);
}

DegreeDistribution table_rho() {
    return DegreeDistribution::from_table(
        {{2, 0.46}, {3, 0.32}, {4, 0.021}, {5, 0.06}, {6, 0.04}, {7, 0.025},
         {9, 0.01}, {19, 0.02}, {20, 0.05}},
        100);
}

DegreeDistribution load_distribution(std::istream& in, int domain_max) {
    std::vector<std::pair<int, double>> pairs;
    bool have_dense = false;
    int dense_degree = 0;
    double dense_mass = 0.0;

    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        std::istringstream ls(line);
        std::string first;
        if (!(ls >> first)) continue;
        if (first == "dense") {
            if (!(ls >> dense_degree >> dense_mass))
                throw std::runtime_error("distribution config: bad dense stanza at line " +
                                         std::to_string(lineno));
            have_dense = true;
        } else {
            int degree = 0;
            double mass = 0.0;
            try {
                degree = std::stoi(first);
            } catch (const std::exception&) {
                throw std::runtime_error("distribution config: bad degree at line " +
                                         std::to_string(lineno));
            }
            if (!(ls >> mass))
                throw std::runtime_error("distribution config: missing mass at line " +
                                         std::to_string(lineno));
            pairs.emplace_back(degree, mass);
        }
    }
    auto dist = DegreeDistribution::from_table(pairs, domain_max);
    if (have_dense) dist = dist.supplement_dense(dense_degree, dense_mass);
    return dist;
}

DegreeDistribution load_distribution_file(const std::string& path,
                                          int domain_max) {
    std::ifstream in(path);
    if (!in)
        throw std::runtime_error("cannot open distribution file: " + path);
    return load_distribution(in, domain_max);
}

DegreeDistribution resolve_distribution(const std::string& name_or_path,
                                        int domain_max) {
    if (name_or_path == "mu") return table_mu();
    if (name_or_path == "mu_bar") return table_mu_bar();
    if (name_or_path == "rho") return table_rho();
    return load_distribution_file(name_or_path, domain_max);
}

} // namespace kovrank
