#include "oscdirac/theta.hpp"

#include <Eigen/SVD>
#include <cmath>
#include <limits>
#include <random>
#include <stdexcept>

namespace oscdirac {

namespace {
const complexd I(0, 1);
}

int theta_truncation(const ThetaParams& p, int m) {
    if (m == 0) throw std::invalid_argument("theta: m must be nonzero");
    double base = 2.0 + 4.0 / std::sqrt(static_cast<double>(p.r_prime) * std::abs(m) * p.nu);
    return static_cast<int>(std::ceil(base)) + 4;
}

complexd eval_theta(const ThetaSection& s, const OscMElement& g, const ThetaParams& p) {
    if (s.m == 0) throw std::invalid_argument("eval_theta: m must be nonzero");
    const int J = (s.J > 0) ? s.J : theta_truncation(p, s.m);
    const double rp = p.r_prime;
    const double mabs = std::abs(s.m);
    const double sqnu = std::sqrt(p.nu);
    const double offset = static_cast<double>(s.k) / (rp * s.m);

    complexd sum(0, 0);
    for (int i = -J; i <= J; ++i) {
        double jj = offset + i;
        double gauss = -kPi * rp * mabs * (g.x + jj * sqnu) * (g.x + jj * sqnu);
        complexd phase = I * (kPi * rp * jj * s.m * (jj * p.mu + 2.0 * sqnu * g.y));
        sum += std::exp(complexd(gauss, 0) + phase);
    }
    complexd prefactor = std::exp(I * (2 * kPi * rp * s.m * g.z)) *
                         std::exp(I * (static_cast<double>(s.n) * g.t / p.kappa_prime));
    return prefactor * sum;
}

complexd eval_phi(int n, const OscMElement& g, const ThetaParams& p) {
    return std::exp(I * (static_cast<double>(n) * g.t / p.kappa_prime));
}

complexd eval_phi_lattice(int k, int l, int n, const OscMElement& g, const ThetaParams& p) {
    const double sqnu = std::sqrt(p.nu);
    double arg = 2 * kPi * (g.x * (l - p.mu * k) / sqnu + g.y * sqnu * k);
    return std::exp(I * arg) * eval_phi(n, g, p);
}

OscMElement deck_generator(const ThetaParams& p, int j) {
    const double sqnu = std::sqrt(p.nu);
    switch (j) {
        case 1: return {0.0, 1.0 / (2.0 * sqnu), 0.0, 0.0};
        case 2: return {-sqnu / 2.0, -p.mu / (2.0 * sqnu), p.mu / 8.0, 0.0};
        case 3: return {0.0, 0.0, 1.0 / (2.0 * p.r_prime), 0.0};
        case 4: return {0.0, 0.0, 0.0, kPi * p.kappa_prime};
    }
    throw std::out_of_range("deck_generator: j in 1..4");
}

double DeckReport::worst() const {
    double w = 0;
    for (const auto& c : checks) w = std::max(w, c.max_residual);
    return w;
}

DeckReport verify_deck_actions(const ThetaParams& p, const std::vector<OscMElement>& sample_points,
                               const std::vector<int>& ms, const std::vector<int>& ns, double tol) {
    if (p.kappa_prime % 2 != 0)
        throw std::invalid_argument("verify_deck_actions: kappa' must be even");
    DeckReport rep;
    rep.tol = tol;

    std::vector<OscMElement> gammas;
    for (int j = 1; j <= 4; ++j) gammas.push_back(deck_generator(p, j));
    auto translated = [&](int j, const OscMElement& g) { return oscm_multiply(gammas[j - 1], g); };
    auto sign = [](int e) { return (e % 2 == 0) ? 1.0 : -1.0; };

    auto record = [&](const std::string& name, double res) {
        for (auto& c : rep.checks)
            if (c.identity == name) {
                c.max_residual = std::max(c.max_residual, res);
                return;
            }
        rep.checks.push_back({name, res});
    };

    for (int n : ns) {
        // (gph)
        for (int j = 1; j <= 4; ++j) {
            double expect = (j == 4) ? sign(n) : 1.0;
            double worst = 0;
            for (const auto& g : sample_points)
                worst = std::max(worst, std::abs(eval_phi(n, translated(j, g), p) - expect * eval_phi(n, g, p)));
            record("gph: gamma_" + std::to_string(j) + " on phi_n", worst);
        }
        // (gPh) on a small (k,l) grid
        for (int k = 0; k <= 2; ++k)
            for (int l = 0; l <= 2; ++l)
                for (int j = 1; j <= 4; ++j) {
                    double expect = 1.0;
                    if (j == 1) expect = sign(k);
                    if (j == 2) expect = sign(l);
                    if (j == 4) expect = sign(n);
                    double worst = 0;
                    for (const auto& g : sample_points)
                        worst = std::max(worst, std::abs(eval_phi_lattice(k, l, n, translated(j, g), p) -
                                                         expect * eval_phi_lattice(k, l, n, g, p)));
                    record("gPh: gamma_" + std::to_string(j), worst);
                }
        // (gth) for all residues k
        for (int m : ms) {
            const int modulus = p.r_prime * std::abs(m);
            for (int k = 0; k < modulus; ++k) {
                ThetaSection s{m, n, k, 0};
                for (int j = 1; j <= 4; ++j) {
                    double worst = 0;
                    for (const auto& g : sample_points) {
                        complexd lhs = eval_theta(s, translated(j, g), p);
                        complexd rhs;
                        if (j == 1) rhs = sign(k) * eval_theta(s, g, p);
                        else if (j == 2) {
                            ThetaSection st = s;
                            st.k = (k + modulus / 2) % modulus;
                            rhs = eval_theta(st, g, p);
                        } else if (j == 3) rhs = sign(m) * eval_theta(s, g, p);
                        else rhs = sign(n) * eval_theta(s, g, p);
                        worst = std::max(worst, std::abs(lhs - rhs));
                    }
                    record("gth: gamma_" + std::to_string(j) + " m=" + std::to_string(m), worst);
                }
            }
        }
    }
    rep.pass = rep.worst() < tol;
    return rep;
}

std::vector<OscMElement> theta_sample_points(int count, unsigned seed) {
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> u2(-2.0, 2.0), u1(-1.0, 1.0), upi(-kPi, kPi);
    std::vector<OscMElement> pts;
    pts.reserve(count);
    for (int i = 0; i < count; ++i) pts.push_back({u2(rng), u2(rng), u1(rng), upi(rng)});
    return pts;
}

double theta_independence_condition(const ThetaParams& p, int m, int n, unsigned seed) {
    const int dim = p.r_prime * std::abs(m);
    auto pts = theta_sample_points(dim, seed);
    CMat mat(dim, dim);
    for (int i = 0; i < dim; ++i)
        for (int k = 0; k < dim; ++k) mat(i, k) = eval_theta({m, n, k, 0}, pts[i], p);
    Eigen::JacobiSVD<CMat> svd(mat);
    double smin = svd.singularValues()(dim - 1);
    if (smin == 0) return std::numeric_limits<double>::infinity();
    return svd.singularValues()(0) / smin;
}

}  // namespace oscdirac
