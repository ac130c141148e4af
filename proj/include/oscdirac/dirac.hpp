#pragma once

#include <vector>

#include "oscdirac/clifford.hpp"
#include "oscdirac/reps.hpp"

namespace oscdirac {

/// The operator D^t on (truncated rep) tensor Delta, assembled as
///   sum_a sigma(e_a) (x) gamma(e^a)  +  (3t/2) Id (x) X.Y.Z
/// with basis ordering index = 4*level + spinor component.
struct DiracMatrix {
    double t = 1.0 / 3.0;
    RepTruncation rep;
    CMat matrix;
};

DiracMatrix build_dirac(const RepTruncation& rep, double t);

/// Same operator assembled as D^{1/3} + (i/2)(3t-1) Id (x) diag(A,-A);
/// agrees with build_dirac (exactly at t = 1/3).
DiracMatrix build_dirac_via_cubic_shift(const RepTruncation& rep, double t);

/// Casimir of the truncation tensored with the identity on Delta, i.e. the
/// matrix that -(D^{1/3})^2 must equal on interior indices.
CMat casimir_tensor(const RepTruncation& rep);

/// Tensor-basis index of psi_level (x) u_i.
inline int tensor_index(int level_idx, int spinor_i) { return 4 * level_idx + (spinor_i - 1); }

/// Closed-form eigenvectors of D^{1/3} on a truncation.
struct ClosedFormVector {
    enum class Family { FPlus, FMinusDPos, FMinusDNeg, FKernelCPos, FKernelCNeg, SFamily, CFamily };
    Family family;
    int branch = 0;  // 0: eta / first display, 1: eta-hat / second, 2: third display
    int n = 0;       // index as in the closed forms
    int sign = 0;    // +1 / -1; 0 for kernel vectors
    complexd eigenvalue{0, 0};
    CVec vector;     // materialized in the truncation (length 4*dim)
};

/// All closed-form eigenvector families materializable inside the truncation.
/// Throws for C-type labels (D^{1/3} vanishes there; the whole space is kernel).
std::vector<ClosedFormVector> closed_form_eigenvectors(const RepTruncation& rep);

/// Eigenvalues of D^t per irreducible summand from the invariant 2x2 blocks:
/// F-type: +- (lambda +- 2 pi c (3t-1))^{1/2} with lambda the -Omega scalar;
/// S-type: +-2 pi a; C-type: 0.
std::vector<complexd> dt_block_eigenvalues(const IrrepLabel& label, double t);

/// Fraction of |v|^2 carried by the two outermost truncated levels.
double boundary_mass(const RepTruncation& rep, const CVec& v);

/// Eigenvalues of an eigensystem whose eigenvectors have boundary mass below
/// the spurious-filter threshold (truncation hygiene for dense eigensolves).
std::vector<complexd> filter_spurious(const RepTruncation& rep, const Eigensystem& es,
                                      double mass_tol = 1e-6);

/// Filtered eigenvalues with nearby values merged into cluster means (paired
/// with the cluster sizes). Defective invariant blocks (the upper-triangular
/// S-type 2x2s for t != 1/3 and the nilpotent kernel blocks) split their
/// multiple eigenvalues by O(sqrt(machine eps)) under any dense eigensolve;
/// block traces are exact, so cluster means recover O(eps) accuracy.
std::vector<std::pair<complexd, int>> filtered_cluster_means(const RepTruncation& rep, const Eigensystem& es,
                                                             double mass_tol = 1e-6,
                                                             double cluster_radius = 0.0);

/// Norm ratios |P^+_lambda zeta_n| / |zeta_n| for zeta_n proportional to
/// psi_n (x) u_2 on an F-truncation with c > 0 and lambda != 0, n = 0..upto_n.
std::vector<double> projection_norm_growth(const RepTruncation& rep, int upto_n);

/// Growth exponent of a ratio sequence: least-squares slope of
/// log(r_n^2 - r_0^2) against log n over n in [n_lo, n_hi], halved.
/// The subtraction removes the constant offset so the exponent of the
/// growing part is measured.
double projection_growth_exponent(const std::vector<double>& ratios, int n_lo, int n_hi);

}  // namespace oscdirac
