#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <vector>

#include "oscdirac/rational.hpp"
#include "oscdirac/reps.hpp"

namespace oscdirac {

/// Parameters (r, kappa, mu, nu) of a basic lattice L_r(kappa, mu, nu).
/// mu and nu keep their exact token form when one was given; rational
/// (mu, nu) enables the exact lattice-enumeration path.
struct LatticeParams {
    int r = 1;
    int kappa = 1;
    ScalarInput mu = ScalarInput::from_rational(Rational(0));
    ScalarInput nu = ScalarInput::from_rational(Rational(1));

    double beta() const { return kPi * r / kappa; }
    bool exact_rational_form() const { return mu.exact_rational() && nu.exact_rational(); }

    static LatticeParams make(int r, int kappa, double mu, double nu);
    static LatticeParams make_exact(int r, int kappa, const ScalarInput& mu, const ScalarInput& nu);
};

/// Spin structure values (eps_1,...,eps_4) on the lattice generators; a
/// homomorphism to Z_2 requires r * eps_3 = 0 mod 2.
struct SpinStructure {
    int e1 = 0, e2 = 0, e3 = 0, e4 = 0;

    bool valid_for(const LatticeParams& l) const { return (l.r * e3) % 2 == 0; }
    static SpinStructure parse(const std::string& bits);  // e.g. "0101"
    std::string str() const;
};

struct InvalidSpinStructure : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct RouteConsistencyError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// One eigenvalue with its summand bookkeeping. multiplicity counts the
/// contributing irreducible summands times 4 (= dim Delta). Lines supported
/// by infinitely many summands (only the 0 line of -Omega, via the C-types or
/// the m-family with n = -+kappa) carry infinite_family = true, a finite
/// multiplicity of 0 and a capped list of representative sources.
struct SpectralLine {
    complexd eigenvalue{0, 0};
    long multiplicity = 0;
    bool infinite_family = false;
    std::vector<IrrepLabel> sources;
};

/// Norm form |(k,l)|_{mu,nu} = sqrt(nu k^2 + (1/nu)(-mu k + l)^2).
double norm_form(const LatticeParams& l, std::int64_t k, std::int64_t ell);

/// The matrix T_{mu,nu}; |(k,l)|_{mu,nu} = |T^{-1} (l,k)^T|.
Eigen::Matrix2d tmunu(const LatticeParams& l);

struct AlphaCounts {
    int alpha = 0;   // all (k,l)
    int alpha0 = 0;  // k even, l even
    int alpha1 = 0;  // k even, l odd
    int alpha2 = 0;  // k odd, l odd
};

/// Lattice points at norm a, partitioned by parity class. tol = 0 selects the
/// exact-rational path when (mu, nu) are rational; otherwise points with
/// | |(k,l)| - a | <= tol are counted.
AlphaCounts alpha_counts(const LatticeParams& l, double a, double tol);

/// Exact-path variant keyed by a^2 (requires rational mu, nu).
AlphaCounts alpha_counts_exact(const LatticeParams& l, const Rational& a_squared);

/// All norm values up to max |(k,l)|^2, grouped (exactly for rational mu, nu;
/// by relative tolerance 1e-9 otherwise, flagged by exact = false).
struct NormGroup {
    double a_squared = 0;
    std::optional<Rational> a_squared_exact;
    AlphaCounts counts;
};
struct NormGroups {
    std::vector<NormGroup> groups;  // ascending in a_squared; (0,0) excluded
    bool exact = true;
};
NormGroups norm_groups(const LatticeParams& l, double max_a_squared);

/// The sets A_j(mu,nu) = { pi^2 a^2 : alpha_j(mu,nu,a) != 0 } up to cutoff,
/// sorted ascending, each value carrying its count.
struct SpectralSets {
    struct Entry {
        double value = 0;  // pi^2 a^2
        int count = 0;
        std::optional<Rational> a_squared_exact;
    };
    std::vector<Entry> A, A0, A1, A2;
    bool exact = true;
};
SpectralSets spectral_sets(const LatticeParams& l, double cutoff);

/// Summand multiplicities of the decomposition of L^2 spinor sections into
/// irreducibles (without the global factor 4): m_C(n), m_S(a, K) for K in
/// [0, 2 kappa), m_F(m, n).
long mult_C(const LatticeParams& l, const SpinStructure& eps, std::int64_t n);
long mult_S(const LatticeParams& l, const SpinStructure& eps, double a, int bigK);
long mult_F(const LatticeParams& l, const SpinStructure& eps, std::int64_t m, std::int64_t n);

/// (mu', nu') with mu' + i nu' = -(mu + i nu)^{-1} and eps' = (0,1,e3,e4),
/// applied only when (e1,e2) = (1,0); otherwise returns the input unchanged.
std::pair<LatticeParams, SpinStructure> normalize_spin(const LatticeParams& l, const SpinStructure& eps);

/// Point spectrum of -Omega = (D^{1/3})^2 on the quotient, all |lambda| <=
/// cutoff. Computed bottom-up from the multiplicity formulas and checked
/// against the spectrum table; a disagreement throws RouteConsistencyError.
/// Requires a valid spin structure with (e1,e2) != (1,0).
std::vector<SpectralLine> casimir_spectrum(const LatticeParams& l, const SpinStructure& eps, double cutoff);

/// Route (a) alone: the support of spec(-Omega) read off the table keyed by
/// (eps_1,eps_2) and (eps_3, eps_4 + kappa).
std::vector<double> casimir_support_table(const LatticeParams& l, const SpinStructure& eps, double cutoff);

/// Point spectrum of D^t, all |z| <= cutoff. At t = 1/3 this is the set of
/// signed square roots of spec_p(-Omega) (i sqrt|lambda| for lambda < 0).
std::vector<SpectralLine> dirac_point_spectrum(const LatticeParams& l, const SpinStructure& eps, double t,
                                               double cutoff);

enum class SymmetryClass { SymmetricWithZero, SymmetricWithoutZero, Asymmetric };

/// Symmetry of spec(-Omega) about zero: symmetric iff eps_3 = 1, with or
/// without 0 per the parity of eps_4 + kappa.
SymmetryClass symmetry_check(const LatticeParams& l, const SpinStructure& eps);
const char* symmetry_class_name(SymmetryClass s);

/// Eigenvalues -4 beta m' (n' - utilde m') of the shifted-lattice example
/// (requires eps_3 = 0 and eps_4 = kappa mod 2). Returns the `count` values
/// smallest in absolute value plus the continued-fraction convergents used.
struct ConvergentValue {
    std::int64_t m = 0;  // denominator of the convergent
    std::int64_t n = 0;  // numerator
    double value = 0;    // -4 beta m (n - utilde m)
};
struct ShiftedResult {
    std::vector<double> eigenvalues;
    std::vector<ConvergentValue> convergents;
    bool rational_warning = false;
    double beta = 0;
};
ShiftedResult shifted_spectrum(const LatticeParams& l, const SpinStructure& eps, const ScalarInput& utilde,
                               int count);

/// All distinct shifted-lattice eigenvalues inside [lo, hi] for m' <= max_m.
std::vector<double> shifted_values_in_window(const LatticeParams& l, const SpinStructure& eps,
                                             const ScalarInput& utilde, double lo, double hi,
                                             std::int64_t max_m);

}  // namespace oscdirac
