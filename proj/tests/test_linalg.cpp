#include <doctest.h>

#include <random>

#include "oscdirac/linalg.hpp"

using namespace oscdirac;

TEST_SUITE_BEGIN("linalg");

TEST_CASE("sqrt_signed follows the i*sqrt(|x|) convention") {
    CHECK(sqrt_signed(4.0) == complexd(2.0, 0.0));
    CHECK(sqrt_signed(0.0) == complexd(0.0, 0.0));
    CHECK(sqrt_signed(-4.0) == complexd(0.0, 2.0));
    CHECK(sqrt_signed(-2.0).imag() == doctest::Approx(std::sqrt(2.0)));
}

TEST_CASE("kron matches the index convention (rep slow, factor fast)") {
    CMat a(2, 2), b(2, 2);
    a << 1, 2, 3, 4;
    b << 0, 1, 1, 0;
    CMat k = kron(a, b);
    REQUIRE(k.rows() == 4);
    CHECK(k(0, 1) == complexd(1, 0));   // a(0,0) * b(0,1)
    CHECK(k(0, 3) == complexd(2, 0));   // a(0,1) * b(0,1)
    CHECK(k(2, 0) == complexd(0, 0));
    CHECK(k(3, 0) == complexd(3, 0));   // a(1,0) * b(1,0)
}

TEST_CASE("sparse_block_eig agrees with dense_eig on a permuted block matrix") {
    std::mt19937_64 rng(11);
    std::normal_distribution<double> g;
    const int blocks = 12, bs = 4, n = blocks * bs;
    CMat a = CMat::Zero(n, n);
    // random 4x4 blocks scattered by an interleaving permutation
    std::vector<int> perm(n);
    for (int i = 0; i < n; ++i) perm[i] = (i % blocks) * bs + i / blocks;
    for (int b = 0; b < blocks; ++b)
        for (int i = 0; i < bs; ++i)
            for (int j = 0; j < bs; ++j)
                a(perm[b * bs + i], perm[b * bs + j]) = complexd(g(rng), g(rng));

    auto comps = sparsity_components(a);
    CHECK(comps.size() == blocks);

    Eigensystem sparse = sparse_block_eig(a);
    Eigensystem dense = dense_eig(a);
    // eigenvalue multisets agree
    std::vector<complexd> sv(sparse.values.data(), sparse.values.data() + n);
    for (int i = 0; i < n; ++i) {
        double best = 1e300;
        for (const auto& z : sv) best = std::min(best, std::abs(z - dense.values(i)));
        CHECK(best < 1e-10);
    }
    // and the returned vectors are genuine eigenvectors
    for (int i = 0; i < n; ++i) {
        CVec v = sparse.vectors.col(i);
        CHECK((a * v - sparse.values(i) * v).norm() < 1e-10 * std::max(1.0, v.norm()));
    }
}

TEST_CASE("op_norm matches a known singular value") {
    CMat a(2, 2);
    a << 3, 0, 0, complexd(0, 4);
    CHECK(op_norm(a) == doctest::Approx(4.0));
}

TEST_CASE("ls_slope recovers an exact line") {
    std::vector<double> x = {1, 2, 3, 4}, y = {2.5, 4.5, 6.5, 8.5};
    CHECK(ls_slope(x, y) == doctest::Approx(2.0));
    CHECK_THROWS_AS(ls_slope({1.0}, {2.0}), std::invalid_argument);
}

TEST_CASE("numerical_rank sees near-dependence") {
    CMat a(3, 3);
    a << 1, 0, 1, 0, 1, 1, 1, 1, 2;  // third column = first + second
    CHECK(numerical_rank(a) == 2);
    CHECK(numerical_rank(CMat::Identity(3, 3)) == 3);
}

TEST_SUITE_END();
