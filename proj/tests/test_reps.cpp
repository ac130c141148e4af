#include <doctest.h>

#include "oscdirac/reps.hpp"
#include "oscdirac/verify.hpp"

using namespace oscdirac;

TEST_SUITE_BEGIN("reps");

TEST_CASE("labels validate and render") {
    CHECK_THROWS_AS(IrrepLabel::S(0.0, 0.1), std::invalid_argument);
    CHECK_THROWS_AS(IrrepLabel::S(-1.0, 0.1), std::invalid_argument);
    CHECK_THROWS_AS(IrrepLabel::F(0.0, 0.1), std::invalid_argument);
    CHECK(IrrepLabel::S(1.0, 1.25).tau == doctest::Approx(0.25));  // tau reduced mod 1
    CHECK(IrrepLabel::S(1.0, -0.25).tau == doctest::Approx(0.75));

    IrrepLabel f = IrrepLabel::F(-1.5, 0.25);
    CHECK(IrrepLabel::parse(f.str()) == f);
    CHECK(IrrepLabel::parse("S(2,0.5)") == IrrepLabel::S(2, 0.5));
    CHECK_THROWS_AS(IrrepLabel::parse("G(1)"), std::invalid_argument);
}

TEST_CASE("Fock ladder actions") {
    const double c = 0.8;
    RepTruncation rep = build_truncation(IrrepLabel::F(c, 0.3), 8);
    CHECK(rep.dim == 9);

    // A- psi_0 = 0 and A+ psi_0 = 2 sqrt(pi c) psi_1
    CVec psi0 = CVec::Zero(rep.dim);
    psi0(0) = 1.0;
    CHECK((rep.op_Nminus * psi0).norm() == 0);
    CVec up = rep.op_Nplus * psi0;
    CHECK(std::abs(up(1) - 2 * std::sqrt(kPi * c)) < 1e-15);

    // diagonal parts
    CHECK(rep.op_Z(4, 4) == complexd(0, 2 * kPi * c));
    CHECK(rep.op_T(4, 4) == complexd(0, 2 * kPi * 0.3 - 4));

    // c < 0 swaps the ladder roles: X - iY raises
    RepTruncation neg = build_truncation(IrrepLabel::F(-c, 0.3), 8);
    CHECK((neg.op_Nplus * psi0).norm() == 0);
    CHECK(std::abs((neg.op_Nminus * psi0)(1) - 2 * std::sqrt(kPi * c)) < 1e-15);
    CHECK(neg.op_T(4, 4) == complexd(0, 2 * kPi * 0.3 + 4));
}

TEST_CASE("circle-model actions") {
    RepTruncation rep = build_truncation(IrrepLabel::S(1.0, 0.4), 6);
    CHECK(rep.dim == 13);
    CHECK(rep.basis_offset == -6);

    int idx0 = 6;  // mode 0
    CHECK(rep.op_T(idx0, idx0) == complexd(0, 0.4));
    CVec phi0 = CVec::Zero(rep.dim);
    phi0(idx0) = 1.0;
    CHECK(std::abs((rep.op_Nplus * phi0)(idx0 - 1) - complexd(0, 2 * kPi)) < 1e-15);
    CHECK(std::abs((rep.op_Nminus * phi0)(idx0 + 1) - complexd(0, 2 * kPi)) < 1e-15);
    CHECK(rep.op_Z.cwiseAbs().maxCoeff() == 0);
}

TEST_CASE("character model") {
    RepTruncation rep = build_truncation(IrrepLabel::C(0.7), 4);
    CHECK(rep.dim == 1);
    CHECK(rep.op_T(0, 0) == complexd(0, 2 * kPi * 0.7));
    CHECK(rep.op_Z(0, 0) == complexd(0, 0));
    CHECK(rep.op_Nplus(0, 0) == complexd(0, 0));
}

TEST_CASE("rejects N < 2") {
    CHECK_THROWS_AS(build_truncation(IrrepLabel::F(1, 0), 1), std::invalid_argument);
}

TEST_CASE("matrix shape: Z,T diagonal, ladders single-off-diagonal") {
    for (const IrrepLabel& label : {IrrepLabel::F(1.2, 0.3), IrrepLabel::F(-0.7, 0.1), IrrepLabel::S(0.9, 0.6)}) {
        RepTruncation rep = build_truncation(label, 9);
        for (int i = 0; i < rep.dim; ++i)
            for (int j = 0; j < rep.dim; ++j) {
                if (i != j) {
                    CHECK(rep.op_Z(i, j) == complexd(0, 0));
                    CHECK(rep.op_T(i, j) == complexd(0, 0));
                }
                if (i != j - 1 && i != j + 1) {
                    CHECK(rep.op_Nplus(i, j) == complexd(0, 0));
                    CHECK(rep.op_Nminus(i, j) == complexd(0, 0));
                }
            }
        // each ladder shifts by exactly one basis index, in one direction
        bool up_ok = true, down_ok = true;
        CMat up = (label.kind == IrrepLabel::Kind::S) ? rep.op_Nminus : ((label.c > 0) ? rep.op_Nplus : rep.op_Nminus);
        CMat down = (label.kind == IrrepLabel::Kind::S) ? rep.op_Nplus : ((label.c > 0) ? rep.op_Nminus : rep.op_Nplus);
        for (int i = 0; i < rep.dim; ++i)
            for (int j = 0; j < rep.dim; ++j) {
                if (up(i, j) != complexd(0, 0) && i != j + 1) up_ok = false;
                if (down(i, j) != complexd(0, 0) && i != j - 1) down_ok = false;
            }
        CHECK(up_ok);
        CHECK(down_ok);
    }
}

TEST_CASE("Casimir scalars") {
    CHECK(casimir_value(IrrepLabel::C(3.2)) == 0.0);
    CHECK(casimir_value(IrrepLabel::S(1.0, 0.2)) == doctest::Approx(-4 * kPi * kPi));
    CHECK(casimir_value(IrrepLabel::F(2.0, 0.5)) == doctest::Approx(-4 * kPi * (2 * kPi + 1)));
    CHECK(casimir_value(IrrepLabel::F(-2.0, 0.5)) == doctest::Approx(4 * kPi * (2 * kPi - 1)));

    // F(r m/2, n/(4 pi kappa)) gives -beta m (n + kappa) for m > 0
    int r = 3, kappa = 2, m = 4, n = -5;
    double beta = kPi * r / kappa;
    double val = casimir_value(IrrepLabel::F(0.5 * r * m, n / (4 * kPi * kappa)));
    CHECK(val == doctest::Approx(-beta * m * (n + kappa)));
    // and -beta m (n - kappa) for m < 0
    m = -4;
    val = casimir_value(IrrepLabel::F(0.5 * r * m, n / (4 * kPi * kappa)));
    CHECK(val == doctest::Approx(-beta * m * (n - kappa)));

    // kernel threshold: 4 pi d + 1 = 0
    CHECK(casimir_value(IrrepLabel::F(1.0, -0.25 / kPi)) == doctest::Approx(0.0));
}

TEST_CASE("Casimir matrix is the right scalar away from the cut") {
    RepTruncation rep = build_truncation(IrrepLabel::F(1.3, 0.4), 12);
    CMat cas = casimir_matrix(rep);
    for (int n = 0; n < rep.dim - 1; ++n)  // exact on levels 0..N-1
        for (int m = 0; m < rep.dim - 1; ++m) {
            complexd want = (n == m) ? casimir_value(rep.label) : 0.0;
            CHECK(std::abs(cas(n, m) - want) < 1e-12);
        }

    RepTruncation s = build_truncation(IrrepLabel::S(0.7, 0.1), 10);
    CMat cass = casimir_matrix(s);
    for (int n = s.interior_lo(); n <= s.interior_hi(); ++n)
        CHECK(std::abs(cass(n, n) - casimir_value(s.label)) < 1e-12);

    RepTruncation c = build_truncation(IrrepLabel::C(1.1), 4);
    CHECK(casimir_matrix(c)(0, 0) == complexd(0, 0));
}

TEST_CASE("pullback table") {
    // T_u: F_{c,d} -> F_{c, d+uc}
    Automorphism tu = Automorphism::shear(0.4);
    IrrepLabel f = IrrepLabel::F(2.0, 0.3);
    IrrepLabel fu = pullback_label(tu, f);
    CHECK(fu.c == doctest::Approx(2.0));
    CHECK(fu.d == doctest::Approx(0.3 + 0.4 * 2.0));
    CHECK(pullback_label(tu, IrrepLabel::C(0.5)) == IrrepLabel::C(0.5));
    CHECK(pullback_label(tu, IrrepLabel::S(1, 0.25)) == IrrepLabel::S(1, 0.25));

    // F_S with S = I/2: F_{c,d} -> F_{c/4, d}
    Automorphism half = Automorphism::scaling(0.5);
    IrrepLabel fh = pullback_label(half, f);
    CHECK(fh.c == doctest::Approx(0.5));
    CHECK(fh.d == doctest::Approx(0.3));
    // and S_a^tau -> S_{a/2}^tau
    IrrepLabel sh = pullback_label(half, IrrepLabel::S(1.0, 0.25));
    CHECK(sh.a == doctest::Approx(0.5));
    CHECK(sh.tau == doctest::Approx(0.25));

    // reflection: eps = -1 negates d and tau
    Eigen::Matrix2d refl;
    refl << 1, 0, 0, -1;
    Automorphism fr = Automorphism::linear(refl);
    IrrepLabel frf = pullback_label(fr, f);
    CHECK(frf.c == doctest::Approx(-2.0));
    CHECK(frf.d == doctest::Approx(-0.3));
    IrrepLabel frs = pullback_label(fr, IrrepLabel::S(2.0, 0.25));
    CHECK(frs.a == doctest::Approx(2.0));
    CHECK(frs.tau == doctest::Approx(0.75));  // -0.25 mod 1

    // C_eta is trivial on labels
    Automorphism ce = Automorphism::conjugation(complexd(0.3, 0.7));
    CHECK(pullback_label(ce, f) == f);
}

TEST_CASE("reps invariant suite") {
    for (const auto& c : verify_reps(16)) {
        INFO(c.name);
        CHECK(c.pass);
    }
}

TEST_SUITE_END();
