#include <doctest.h>

#include "oscdirac/dirac.hpp"
#include "oscdirac/verify.hpp"

using namespace oscdirac;

TEST_SUITE_BEGIN("dirac");

TEST_CASE("character summands are nilpotent") {
    RepTruncation rep = build_truncation(IrrepLabel::C(0.7), 4);
    for (double t : {0.0, 1.0 / 3.0, 0.5, 1.0}) {
        DiracMatrix d = build_dirac(rep, t);
        CHECK((d.matrix * d.matrix).cwiseAbs().maxCoeff() < 1e-14);
        auto es = dense_eig(d.matrix);
        for (int i = 0; i < es.values.size(); ++i) CHECK(std::abs(es.values(i)) < 1e-7);
    }
}

TEST_CASE("square identity on an F summand") {
    RepTruncation rep = build_truncation(IrrepLabel::F(1.0, 0.4), 16);
    DiracMatrix d = build_dirac(rep, 1.0 / 3.0);
    CMat resid = d.matrix * d.matrix + casimir_tensor(rep);
    int lo = 4 * rep.interior_lo(), len = 4 * (rep.interior_hi() - rep.interior_lo() + 1);
    CHECK(resid.block(lo, lo, len, len).cwiseAbs().maxCoeff() < 1e-12);
}

TEST_CASE("Levi-Civita member differs from the cubic one by (i/4) Id x diag(A,-A)") {
    RepTruncation rep = build_truncation(IrrepLabel::S(1.0, 0.25), 6);
    CMat diff = build_dirac(rep, 0.5).matrix - build_dirac(rep, 1.0 / 3.0).matrix;
    CMat shift = CMat::Zero(4, 4);
    shift(1, 0) = complexd(0, std::sqrt(2.0) / 4);
    shift(3, 2) = complexd(0, -std::sqrt(2.0) / 4);
    CMat want = kron(CMat::Identity(rep.dim, rep.dim), shift);
    CHECK((diff - want).cwiseAbs().maxCoeff() < 1e-14);
}

TEST_CASE("closed-form eigenvectors: F with c > 0") {
    const double c = 1.0, d = 0.25 / kPi;  // 4 pi d + 1 = 2
    RepTruncation rep = build_truncation(IrrepLabel::F(c, d), 16);
    double lambda = 2 * kPi * c * (4 * kPi * d + 1);
    auto family = closed_form_eigenvectors(rep);

    // eta_0^+ has eigenvalue +sqrt(lambda)
    bool seen = false;
    for (const auto& v : family)
        if (v.family == ClosedFormVector::Family::FPlus && v.branch == 0 && v.n == 0 && v.sign > 0) {
            seen = true;
            CHECK(std::abs(v.eigenvalue - std::sqrt(lambda)) < 1e-12);
            // components: sqrt(2 pi c) psi_0 u1 + i sqrt(2 pi d + 1/2) psi_0 u2
            CHECK(std::abs(v.vector(tensor_index(0, 1)) - std::sqrt(2 * kPi * c)) < 1e-12);
            CHECK(std::abs(v.vector(tensor_index(0, 2)) - complexd(0, std::sqrt(2 * kPi * d + 0.5))) < 1e-12);
        }
    CHECK(seen);

    DiracMatrix dm = build_dirac(rep, 1.0 / 3.0);
    for (const auto& v : family) {
        if (v.n > rep.dim - 4) continue;
        CHECK((dm.matrix * v.vector - v.eigenvalue * v.vector).norm() < 1e-10 * v.vector.norm());
    }
}

TEST_CASE("kernel families at lambda = 0") {
    // c > 0 with 4 pi d + 1 = 0
    RepTruncation rep = build_truncation(IrrepLabel::F(1.0, -0.25 / kPi), 12);
    auto family = closed_form_eigenvectors(rep);
    DiracMatrix dm = build_dirac(rep, 1.0 / 3.0);
    bool eta0 = false;
    for (const auto& v : family) {
        CHECK(v.family == ClosedFormVector::Family::FKernelCPos);
        if (v.branch == 0 && v.n == 0) {
            eta0 = true;
            CHECK(std::abs(v.vector(tensor_index(0, 1)) - std::sqrt(2 * kPi)) < 1e-12);
        }
        if (v.n > rep.dim - 4) continue;
        CHECK((dm.matrix * v.vector).norm() < 1e-10 * v.vector.norm());
    }
    CHECK(eta0);

    // c < 0 with 4 pi d - 1 = 0: first kernel vector is +sqrt(2 pi |c|) psi_0 u3
    RepTruncation rneg = build_truncation(IrrepLabel::F(-2.0, 0.25 / kPi), 12);
    auto fneg = closed_form_eigenvectors(rneg);
    DiracMatrix dneg = build_dirac(rneg, 1.0 / 3.0);
    bool u3seen = false;
    for (const auto& v : fneg) {
        CHECK(v.family == ClosedFormVector::Family::FKernelCNeg);
        if (v.branch == 0) {
            u3seen = true;
            CHECK(std::abs(v.vector(tensor_index(0, 3)) - std::sqrt(4 * kPi)) < 1e-12);
        }
        if (v.n > rneg.dim - 4) continue;
        CHECK((dneg.matrix * v.vector).norm() < 1e-10 * v.vector.norm());
    }
    CHECK(u3seen);
}

TEST_CASE("circle-model eigenvectors (neu1), (neu2)") {
    const double a = 1.3, tau = 0.2;
    RepTruncation rep = build_truncation(IrrepLabel::S(a, tau), 10);
    DiracMatrix dm = build_dirac(rep, 1.0 / 3.0);
    auto family = closed_form_eigenvectors(rep);
    int checked = 0;
    for (const auto& v : family) {
        int idx = v.n - rep.basis_offset;
        if (idx < 2 || idx > rep.dim - 4) continue;
        CHECK((dm.matrix * v.vector - v.eigenvalue * v.vector).norm() < 1e-10 * v.vector.norm());
        ++checked;
        if (v.branch == 0 && v.n == 0) {
            // phi_0 u2 -+ phi_1 u4 with eigenvalue +-2 pi a
            CHECK(std::abs(v.eigenvalue - complexd(2 * kPi * a * v.sign, 0)) < 1e-12);
            CHECK(v.vector(tensor_index(idx, 2)) == complexd(1, 0));
            CHECK(v.vector(tensor_index(idx + 1, 4)) == complexd(-v.sign, 0));
        }
    }
    CHECK(checked > 20);

    RepTruncation c = build_truncation(IrrepLabel::C(0.4), 4);
    CHECK_THROWS_AS(closed_form_eigenvectors(c), std::invalid_argument);
}

TEST_CASE("block eigenvalues of D^t") {
    // t = 1/3 reduces to +-sqrt(lambda) and +-2 pi a
    IrrepLabel f = IrrepLabel::F(1.0, 0.25 / kPi);
    double lambda = 4 * kPi;
    auto vals = dt_block_eigenvalues(f, 1.0 / 3.0);
    REQUIRE(vals.size() == 4);
    for (const auto& z : vals) CHECK(std::abs(std::abs(z) - std::sqrt(lambda)) < 1e-12);

    auto svals = dt_block_eigenvalues(IrrepLabel::S(0.7, 0.1), 0.9);
    REQUIRE(svals.size() == 2);
    CHECK(std::abs(svals[0] - complexd(2 * kPi * 0.7, 0)) < 1e-14);
    CHECK(std::abs(svals[1] + complexd(2 * kPi * 0.7, 0)) < 1e-14);

    // generic t: +-(lambda +- 2 pi c (3t-1))^{1/2}
    double t = 0.8, shift = 2 * kPi * (3 * t - 1);
    auto gvals = dt_block_eigenvalues(f, t);
    CHECK(std::abs(gvals[0] - sqrt_signed(lambda + shift)) < 1e-12);
    CHECK(std::abs(gvals[2] - sqrt_signed(lambda - shift)) < 1e-12);

    // lambda = 0 block: values +-i sqrt(pi c) sqrt(-+2(3t-1))
    IrrepLabel fk = IrrepLabel::F(1.0, -0.25 / kPi);
    auto kvals = dt_block_eigenvalues(fk, 0.0);
    // shift = -2 pi c at t = 0, so lambda + shift = -2 pi and lambda - shift = 2 pi:
    // one imaginary pair, one real pair
    CHECK(std::abs(kvals[0] - sqrt_signed(-2 * kPi)) < 1e-12);
    CHECK(std::abs(kvals[2] - sqrt_signed(2 * kPi)) < 1e-12);
}

TEST_CASE("boundary filter and spectrum symmetry") {
    RepTruncation rep = build_truncation(IrrepLabel::F(1.0, 0.3), 20);
    DiracMatrix dm = build_dirac(rep, 1.0 / 3.0);
    auto es = sparse_block_eig(dm.matrix);
    auto accepted = filter_spurious(rep, es);
    CHECK(accepted.size() >= 4u * (rep.dim - 6));
    CHECK(accepted.size() < 4u * rep.dim);

    auto predicted = dt_block_eigenvalues(rep.label, 1.0 / 3.0);
    for (const auto& z : accepted) {
        double best = 1e300;
        for (const auto& p : predicted) best = std::min(best, std::abs(z - p));
        CHECK(best < 1e-8);
    }
}

TEST_CASE("projection growth on F(1, 1/(4pi))") {
    RepTruncation rep = build_truncation(IrrepLabel::F(1.0, 0.25 / kPi), 64);
    auto ratios = projection_norm_growth(rep, 60);
    REQUIRE(ratios.size() == 61);
    // |P zeta_n|^2 / |zeta_n|^2 = (2 pi c + 2 pi d + 1/2 + n) / (4 (2 pi d + 1/2))
    for (int n : {0, 1, 10, 40}) {
        double want = std::sqrt((2 * kPi + 1.0 + n) / 4.0);
        CHECK(ratios[n] == doctest::Approx(want).epsilon(1e-10));
    }
    for (std::size_t i = 1; i < ratios.size(); ++i) CHECK(ratios[i] > ratios[i - 1]);
    double expo = projection_growth_exponent(ratios, 4, 60);
    CHECK(expo > 0.4);
    CHECK(expo < 0.6);
}

TEST_CASE("dirac invariant suite") {
    for (const auto& c : verify_dirac(16)) {
        INFO(c.name);
        CHECK(c.pass);
    }
}

TEST_SUITE_END();
