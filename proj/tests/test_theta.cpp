#include <doctest.h>

#include "oscdirac/theta.hpp"
#include "oscdirac/verify.hpp"

using namespace oscdirac;

TEST_SUITE_BEGIN("theta");

TEST_CASE("series value at the origin is a positive theta sum for mu = 0") {
    ThetaParams p{2, 2, 0.0, 1.0};
    complexd v = eval_theta({1, 0, 0, 0}, OscMElement{}, p);
    CHECK(v.imag() == doctest::Approx(0.0).epsilon(1e-15));
    CHECK(v.real() > 0);
    // direct sum: sum_j e^{-pi r' |m| j^2 nu}
    double direct = 0;
    for (int j = -9; j <= 9; ++j) direct += std::exp(-kPi * 2 * j * j);
    CHECK(v.real() == doctest::Approx(direct).epsilon(1e-12));
}

TEST_CASE("prefactor periodicity in z") {
    ThetaParams p{2, 2, 0.5, 1.0};
    ThetaSection s{2, 1, 1, 0};
    OscMElement g{0.3, -0.7, 0.2, 0.9};
    OscMElement shifted = g;
    shifted.z += 1.0 / (p.r_prime * s.m);
    CHECK(std::abs(eval_theta(s, shifted, p) - eval_theta(s, g, p)) < 1e-12);

    // gamma_3 shift z -> z + 1/(2 r') multiplies by (-1)^m
    OscMElement half = g;
    half.z += 1.0 / (2.0 * p.r_prime);
    CHECK(std::abs(eval_theta(s, half, p) - eval_theta(s, g, p)) < 1e-12);  // m even
    ThetaSection odd{1, 1, 0, 0};
    CHECK(std::abs(eval_theta(odd, half, p) + eval_theta(odd, g, p)) < 1e-12);  // m odd
}

TEST_CASE("deck identities on the worked examples") {
    ThetaParams p{2, 2, 0.0, 1.0};
    auto pts = theta_sample_points(20, 5);

    // gamma_4 pullback of phi_n is (-1)^n phi_n
    for (const auto& g : pts) {
        OscMElement t4 = oscm_multiply(deck_generator(p, 4), g);
        CHECK(std::abs(eval_phi(3, t4, p) + eval_phi(3, g, p)) < 1e-12);
        CHECK(std::abs(eval_phi(2, t4, p) - eval_phi(2, g, p)) < 1e-12);
    }
    // gamma_1 pullback of phi^k_{l,n} is (-1)^k phi^k_{l,n}
    for (const auto& g : pts) {
        OscMElement t1 = oscm_multiply(deck_generator(p, 1), g);
        CHECK(std::abs(eval_phi_lattice(1, 0, 0, t1, p) + eval_phi_lattice(1, 0, 0, g, p)) < 1e-12);
        CHECK(std::abs(eval_phi_lattice(2, 1, 0, t1, p) - eval_phi_lattice(2, 1, 0, g, p)) < 1e-12);
    }
    // gamma_1 pullback of theta_{m,n,k} is (-1)^k theta_{m,n,k}
    for (const auto& g : pts) {
        OscMElement t1 = oscm_multiply(deck_generator(p, 1), g);
        CHECK(std::abs(eval_theta({1, 0, 1, 0}, t1, p) + eval_theta({1, 0, 1, 0}, g, p)) < 1e-10);
        CHECK(std::abs(eval_theta({1, 0, 0, 0}, t1, p) - eval_theta({1, 0, 0, 0}, g, p)) < 1e-10);
    }
    // gamma_2 sends theta_{m,n,k} to theta_{m,n,k + r'|m|/2}
    for (const auto& g : pts) {
        OscMElement t2 = oscm_multiply(deck_generator(p, 2), g);
        CHECK(std::abs(eval_theta({1, 0, 0, 0}, t2, p) - eval_theta({1, 0, 1, 0}, g, p)) < 1e-10);
    }
}

TEST_CASE("full deck report over one parameter set") {
    ThetaParams p{4, 2, 0.5, 1.0};
    auto pts = theta_sample_points(50, 11);
    DeckReport rep = verify_deck_actions(p, pts, {1, -2}, {0, 1}, 1e-8);
    CHECK(rep.pass);
    CHECK(rep.worst() < 1e-8);

    ThetaParams bad{2, 3, 0.0, 1.0};  // odd kappa' is outside the construction
    CHECK_THROWS_AS(verify_deck_actions(bad, pts, {1}, {0}, 1e-8), std::invalid_argument);
}

TEST_CASE("m = 0 is rejected") {
    ThetaParams p{2, 2, 0.0, 1.0};
    CHECK_THROWS_AS(eval_theta({0, 0, 0, 0}, OscMElement{}, p), std::invalid_argument);
}

TEST_CASE("theta invariant suite") {
    for (const auto& c : verify_theta(7)) {
        INFO(c.name);
        CHECK(c.pass);
    }
}

TEST_SUITE_END();
