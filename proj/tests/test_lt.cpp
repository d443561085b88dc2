#include <doctest.h>

#include <cmath>
#include <map>

#include "kovrank/lt.hpp"

using namespace kovrank;

namespace {

LtConfig make_cfg(DegreeDistribution dist, std::size_t n, std::size_t s = 64) {
    LtConfig cfg;
    cfg.n = n;
    cfg.s_bits = s;
    cfg.dist = std::move(dist);
    return cfg;
}

} // namespace

TEST_CASE("generate_row: degree point masses") {
    Rng rng(1);
    auto all = make_cfg(DegreeDistribution::from_table({{10, 1.0}}, 10), 10);
    for (int t = 0; t < 20; ++t)
        CHECK(lt_generate_row(all, rng).weight() == 10);

    auto one = make_cfg(DegreeDistribution::from_table({{1, 1.0}}, 10), 10);
    std::map<std::size_t, std::uint64_t> pos;
    const std::uint64_t draws = 100000;
    for (std::uint64_t t = 0; t < draws; ++t) {
        BitVector row = lt_generate_row(one, rng);
        CHECK(row.weight() == 1);
        ++pos[row.first_set()];
    }
    double expected = draws / 10.0;
    double sigma = std::sqrt(draws * 0.1 * 0.9);
    for (std::size_t j = 0; j < 10; ++j)
        CHECK(std::abs(double(pos[j]) - expected) < 5 * sigma);
}

TEST_CASE("generate_row: degree-3 supports over n=10 are uniform") {
    Rng rng(2);
    auto cfg = make_cfg(DegreeDistribution::from_table({{3, 1.0}}, 10), 10);
    std::map<std::uint64_t, std::uint64_t> freq;
    const std::uint64_t draws = 120000;
    for (std::uint64_t t = 0; t < draws; ++t) {
        BitVector row = lt_generate_row(cfg, rng);
        REQUIRE(row.weight() == 3);
        freq[row.words()[0]] += 1;
    }
    CHECK(freq.size() == 120); // C(10,3)
    double expected = draws / 120.0;
    double sigma = std::sqrt(draws * (1.0 / 120) * (119.0 / 120));
    for (auto [support, count] : freq)
        CHECK(std::abs(double(count) - expected) < 4.5 * sigma);
}

TEST_CASE("encode: unit rows copy symbols; systems re-substitute") {
    Rng rng(3);
    auto cfg = make_cfg(DegreeDistribution::from_table({{1, 1.0}}, 8), 8);
    std::vector<SymbolBlock> alpha;
    for (int j = 0; j < 8; ++j) alpha.push_back(SymbolBlock::random(64, rng));
    LinearSystem sys = lt_encode(cfg, alpha, 20, rng);
    CHECK(sys.provenance == SystemProvenance::Lt);
    for (std::size_t i = 0; i < 20; ++i) {
        std::size_t j = sys.H.row_vector(i).first_set();
        CHECK(sys.beta.get(i) == alpha[j]);
    }
    CHECK(resubstitutes(sys, alpha));
}

TEST_CASE("encode/decode round trip under mu_bar") {
    Rng rng(4);
    auto cfg = make_cfg(table_mu_bar(), 100);
    std::vector<SymbolBlock> alpha;
    for (int j = 0; j < 100; ++j) alpha.push_back(SymbolBlock::random(64, rng));
    for (int attempt = 0; attempt < 10; ++attempt) {
        LinearSystem sys = lt_encode(cfg, alpha, 130, rng);
        CHECK(resubstitutes(sys, alpha));
        auto res = structured_solve(sys);
        CHECK(res.kernel_dim == kernel_dimension(sys.H));
        if (res.solution) {
            for (int j = 0; j < 100; ++j) CHECK((*res.solution)[j] == alpha[j]);
            return;
        }
    }
    FAIL("no full-rank LT system in 10 attempts at gamma = 0.3");
}

TEST_CASE("all-ones rows give rank 1") {
    Rng rng(5);
    auto cfg = make_cfg(DegreeDistribution::from_table({{6, 1.0}}, 6), 6);
    std::vector<SymbolBlock> alpha;
    for (int j = 0; j < 6; ++j) alpha.push_back(SymbolBlock::random(16, rng));
    LinearSystem sys = lt_encode(cfg, alpha, 6, rng);
    CHECK(rank(sys.H) == 1);
    auto res = structured_solve(sys);
    CHECK(!res.full_rank());
    CHECK(res.kernel_dim == 5);
}

TEST_CASE("lt_trial contracts") {
    Rng rng(6);
    auto deg5 = make_cfg(DegreeDistribution::from_table({{5, 1.0}}, 5), 5);
    for (int t = 0; t < 10; ++t) {
        auto out = lt_trial(deg5, 2, rng);
        CHECK(!out.full_rank);
        CHECK(out.kernel_dim == 4);
    }

    // huge overhead: deficiency probability is negligible
    auto cfg = make_cfg(table_mu_bar(), 100);
    for (int t = 0; t < 20; ++t) {
        auto out = lt_trial(cfg, 100, rng);
        CHECK(out.full_rank);
    }
}
