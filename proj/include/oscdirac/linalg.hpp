#pragma once

#include <Eigen/Dense>
#include <complex>
#include <vector>

namespace oscdirac {

using complexd = std::complex<double>;
using CMat = Eigen::MatrixXcd;
using CVec = Eigen::VectorXcd;

inline constexpr double kPi = 3.141592653589793238462643383279502884;

/// Square root of a real number with the sign convention used throughout:
/// sqrt(x) for x >= 0 and i*sqrt(|x|) for x < 0 (never the general complex branch).
inline complexd sqrt_signed(double x) {
    if (x >= 0.0) return complexd(std::sqrt(x), 0.0);
    return complexd(0.0, std::sqrt(-x));
}

CMat kron(const CMat& a, const CMat& b);

/// Operator 2-norm, computed as the square root of the largest eigenvalue of
/// A^H A (dense, fine at the matrix sizes used here).
double op_norm(const CMat& a);

struct Eigensystem {
    CVec values;
    CMat vectors;  // column j is the eigenvector of values(j)
};

/// Dense eigensolve (Eigen's complex Schur based solver).
Eigensystem dense_eig(const CMat& a);

/// Eigensolve that first splits the matrix into the connected components of
/// its sparsity graph and diagonalizes each component densely. Entries with
/// modulus <= drop_tol * max|A| are treated as structural zeros. Equivalent
/// to dense_eig up to eigenvalue ordering; much faster for matrices that are
/// permutations of block diagonals.
Eigensystem sparse_block_eig(const CMat& a, double drop_rel_tol = 1e-13);

/// Connected components of the symmetrized sparsity graph (testing hook).
std::vector<std::vector<int>> sparsity_components(const CMat& a, double drop_rel_tol = 1e-13);

/// Least-squares slope of y against x.
double ls_slope(const std::vector<double>& x, const std::vector<double>& y);

/// Numerical rank of the column span (SVD with a relative threshold).
int numerical_rank(const CMat& a, double rel_tol = 1e-9);

}  // namespace oscdirac
