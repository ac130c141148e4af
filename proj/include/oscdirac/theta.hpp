#pragma once

#include <string>
#include <vector>

#include "oscdirac/group.hpp"
#include "oscdirac/linalg.hpp"

namespace oscdirac {

/// Parameters of the covering quotient the sections live on. kappa_prime must
/// be even for the gamma_4 identity (the setting in which the sections arise).
struct ThetaParams {
    int r_prime = 2;
    int kappa_prime = 2;
    double mu = 0.0;
    double nu = 1.0;
};

/// Theta section theta_{m,n,k}: Gaussian series over j in k/(r'm) + Z,
/// truncated to |integer part| <= J.
struct ThetaSection {
    int m = 1;  // nonzero
    int n = 0;
    int k = 0;  // residue mod r'|m|
    int J = 0;  // 0: choose from the tail bound
};

/// Truncation level making the Gaussian tail < 1e-12 on |x| <= 2.
int theta_truncation(const ThetaParams& p, int m);

complexd eval_theta(const ThetaSection& s, const OscMElement& g, const ThetaParams& p);

/// phi_n(t) = e^{i n t / kappa'}.
complexd eval_phi(int n, const OscMElement& g, const ThetaParams& p);

/// phi^k_{l,n}(x,y,z,t) = exp(2 pi i (x,y) T_{mu,nu}^{-1} (l,k)^T) phi_n(t).
complexd eval_phi_lattice(int k, int l, int n, const OscMElement& g, const ThetaParams& p);

/// Deck transformation generators gamma_1..gamma_4 (index 1-based).
OscMElement deck_generator(const ThetaParams& p, int j);

/// Residual report for the deck-transformation identities on phi_n,
/// phi^k_{l,n} and theta_{m,n,k} over the given sample points.
struct DeckCheck {
    std::string identity;
    double max_residual = 0.0;
};
struct DeckReport {
    std::vector<DeckCheck> checks;
    double tol = 0.0;
    bool pass = false;
    double worst() const;
};
DeckReport verify_deck_actions(const ThetaParams& p, const std::vector<OscMElement>& sample_points,
                               const std::vector<int>& ms, const std::vector<int>& ns, double tol);

/// Random sample points with |x|,|y| <= 2 (seeded).
std::vector<OscMElement> theta_sample_points(int count, unsigned seed);

/// Condition number of the r'|m| x r'|m| matrix of theta values at generic
/// points (numerical independence of the k-family).
double theta_independence_condition(const ThetaParams& p, int m, int n, unsigned seed);

}  // namespace oscdirac
