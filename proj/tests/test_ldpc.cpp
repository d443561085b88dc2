#include <doctest.h>

#include <cstdio>
#include <numeric>

#include "kovrank/ldpc.hpp"

using namespace kovrank;

TEST_CASE("peg: degree-1 columns balance check degrees") {
    LdpcConfig cfg;
    cfg.N = 4;
    cfg.m_rows = 2;
    cfg.col_dist = DegreeDistribution::from_table({{1, 1.0}}, 2);
    Rng rng(1);
    CheckMatrix M = peg_construct(cfg, rng);
    CHECK(M.M.rows() == 2);
    CHECK(M.M.cols() == 4);
    for (std::size_t j = 0; j < 4; ++j) {
        std::size_t colw = std::size_t(M.M.get(0, j)) + std::size_t(M.M.get(1, j));
        CHECK(colw == 1);
    }
    CHECK(M.M.row_weight(0) == 2);
    CHECK(M.M.row_weight(1) == 2);
}

TEST_CASE("peg: 100x200 with rho matches sampled column degrees, no zero columns") {
    LdpcConfig cfg;
    cfg.N = 200;
    cfg.m_rows = 100;
    cfg.col_dist = table_rho();
    cfg.seed = 11;

    // the construction samples one column degree per variable, in order
    Rng probe(derive_seed(cfg.seed, 0));
    std::vector<std::size_t> target;
    for (std::size_t v = 0; v < cfg.N; ++v)
        target.push_back(std::size_t(cfg.col_dist.sample(probe)));

    Rng rng(derive_seed(cfg.seed, 0));
    CheckMatrix M = peg_construct(cfg, rng);
    BitMatrix T = M.M.transpose();
    for (std::size_t j = 0; j < cfg.N; ++j) {
        CHECK(T.row_weight(j) == target[j]);
        CHECK(T.row_weight(j) > 0);
    }

    REQUIRE(M.girth_hint.has_value());
    CHECK(*M.girth_hint >= 4);
}

TEST_CASE("peg: infeasible column degree is rejected") {
    LdpcConfig cfg;
    cfg.N = 4;
    cfg.m_rows = 2;
    cfg.col_dist = DegreeDistribution::from_table({{3, 1.0}}, 3);
    Rng rng(2);
    CHECK_THROWS_AS(peg_construct(cfg, rng), std::invalid_argument);
}

TEST_CASE("supplement_dense_rows") {
    LdpcConfig cfg;
    cfg.N = 200;
    cfg.m_rows = 85;
    cfg.col_dist = table_rho();
    Rng rng(3);
    CheckMatrix base = peg_construct(cfg, rng);

    CheckMatrix same = supplement_dense_rows(base, 0, 100, rng);
    CHECK(same.M == base.M);

    CheckMatrix mbar = supplement_dense_rows(base, 15, 100, rng);
    CHECK(mbar.M.rows() == 100);
    CHECK(mbar.M.cols() == 200);
    for (std::size_t i = 85; i < 100; ++i)
        CHECK(mbar.M.row_weight(i) == 100);
    for (std::size_t i = 0; i < 85; ++i)
        CHECK(mbar.M.row_vector(i) == base.M.row_vector(i));
}

TEST_CASE("kernel basis spans Ker(M)") {
    LdpcConfig cfg;
    cfg.N = 60;
    cfg.m_rows = 30;
    cfg.col_dist = table_rho();
    Rng rng(4);
    CheckMatrix M = peg_construct(cfg, rng);
    auto basis = kernel_basis(M.M);
    CHECK(basis.size() == kernel_dimension(M.M));
    for (const auto& v : basis)
        CHECK(mat_vec(M.M, v).is_zero());
}

TEST_CASE("erase_and_build: edge cases and round trip") {
    LdpcConfig cfg;
    cfg.N = 200;
    cfg.m_rows = 85;
    cfg.col_dist = table_rho();
    Rng rng(5);
    CheckMatrix base = peg_construct(cfg, rng);
    CheckMatrix mbar = supplement_dense_rows(base, 15, 100, rng);
    auto kernel = kernel_basis(mbar.M);

    // p = 0: empty system, trivially full rank
    auto alpha0 = std::vector<SymbolBlock>(200, SymbolBlock(64));
    LinearSystem empty = erase_and_build(mbar, alpha0, 0.0, rng);
    CHECK(empty.H.cols() == 0);
    CHECK(structured_solve(empty).full_rank());

    // all-zero codeword: beta is all zero
    LinearSystem zsys = erase_and_build(mbar, alpha0, 0.4, rng);
    for (std::size_t i = 0; i < zsys.H.rows(); ++i)
        CHECK(zsys.beta.block_is_zero(i));

    // non-codeword input is rejected
    auto bad = alpha0;
    bad[0].w[0] = 1;
    CHECK_THROWS_AS(erase_and_build(mbar, bad, 0.4, rng), std::invalid_argument);

    // random codeword, |E| = 80: recover whenever rank is full
    int recovered = 0;
    for (int t = 0; t < 20; ++t) {
        auto alpha = random_codeword(mbar, kernel, 64, rng);
        LinearSystem sys = erase_and_build(mbar, alpha, 0.4, rng);
        CHECK(sys.H.cols() == 80);
        auto res = structured_solve(sys);
        if (res.solution) {
            CHECK(resubstitutes(sys, *res.solution));
            ++recovered;
        }
    }
    CHECK(recovered > 0);
}

TEST_CASE("ldpc_trial limit regimes") {
    LdpcConfig cfg;
    cfg.N = 200;
    cfg.m_rows = 100;
    cfg.col_dist = table_rho();
    Rng rng(6);
    CheckMatrix M = peg_construct(cfg, rng);
    auto kernel = kernel_basis(M.M);

    // more unknowns than equations: always deficient
    for (int t = 0; t < 5; ++t)
        CHECK(!ldpc_trial(M, kernel, 0.6, 64, rng).full_rank);

    // single erased coordinate: its column is nonzero, always recoverable
    for (int t = 0; t < 20; ++t)
        CHECK(ldpc_trial(M, kernel, 1.0 / 200, 64, rng).full_rank);
}

TEST_CASE("check matrix fixture round trip") {
    LdpcConfig cfg;
    cfg.N = 50;
    cfg.m_rows = 25;
    cfg.col_dist = table_rho();
    Rng rng(7);
    CheckMatrix M = peg_construct(cfg, rng);

    std::string path = "fixture_roundtrip.pchk";
    save_check_matrix(M, path);
    CheckMatrix loaded = load_check_matrix(path);
    CHECK(loaded.M == M.M);
    std::remove(path.c_str());
}
