#pragma once

#include "oscdirac/group.hpp"
#include "oscdirac/linalg.hpp"

namespace oscdirac {

/// The spinor module Delta = C^4 in the basis u_1..u_4 and Clifford
/// multiplication by oscillator algebra elements. The realization satisfies
/// gamma(v)gamma(w) + gamma(w)gamma(v) = -2<v,w> Id.
using Spinor = Eigen::Vector4cd;
using CliffordElement = Eigen::Matrix4cd;

/// Matrix of Clifford multiplication by v (linear in v).
CliffordElement gamma(const LieVec& v);

/// The cubic Clifford element X.Y.Z = i diag(A, -A).
CliffordElement cubic_element();

/// Basis vector u_i, i in 1..4.
Spinor spinor_basis(int i);

/// Indefinite inner product with <u1,u2> = <u3,u4> = 1, conjugate linear in
/// the first slot. Satisfies <gamma(v)u, w> = <u, gamma(v)w>.
complexd indefinite_ip(const Spinor& u, const Spinor& v);

/// Positive definite product (u,v) = <u, xi . v> for xi = (Z-T)/sqrt(2);
/// u_1..u_4 are orthonormal for it.
complexd definite_ip(const Spinor& u, const Spinor& v);

/// The fundamental symmetry J_xi = gamma((Z-T)/sqrt(2)); J^2 = Id.
CliffordElement fundamental_symmetry();

/// Gram matrix of the indefinite product (so that <u,v> = u^H G v).
CliffordElement indefinite_gram();

}  // namespace oscdirac
