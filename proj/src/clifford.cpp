#include "oscdirac/clifford.hpp"

#include <cmath>
#include <stdexcept>

namespace oscdirac {

namespace {

const double kSqrt2 = std::sqrt(2.0);
const complexd I(0.0, 1.0);

CliffordElement gamma_Z() {
    CliffordElement m = CliffordElement::Zero();
    m(1, 0) = kSqrt2;  // A block on u1,u2
    m(3, 2) = kSqrt2;  // A block on u3,u4
    return m;
}

CliffordElement gamma_T() {
    CliffordElement m = CliffordElement::Zero();
    m(0, 1) = -kSqrt2;  // B block
    m(2, 3) = -kSqrt2;
    return m;
}

CliffordElement gamma_X() {
    // off-diagonal blocks C = diag(-i, i)
    CliffordElement m = CliffordElement::Zero();
    m(2, 0) = -I;
    m(3, 1) = I;
    m(0, 2) = -I;
    m(1, 3) = I;
    return m;
}

CliffordElement gamma_Y() {
    // blocks (0, iC; -iC, 0)
    CliffordElement m = CliffordElement::Zero();
    m(0, 2) = complexd(1, 0);   // iC = diag(1,-1)
    m(1, 3) = complexd(-1, 0);
    m(2, 0) = complexd(-1, 0);  // -iC = diag(-1,1)
    m(3, 1) = complexd(1, 0);
    return m;
}

}  // namespace

CliffordElement gamma(const LieVec& v) {
    return v.z * gamma_Z() + v.x * gamma_X() + v.y * gamma_Y() + v.t * gamma_T();
}

CliffordElement cubic_element() {
    CliffordElement m = CliffordElement::Zero();
    m(1, 0) = I * kSqrt2;   // i A
    m(3, 2) = -I * kSqrt2;  // -i A
    return m;
}

Spinor spinor_basis(int i) {
    if (i < 1 || i > 4) throw std::out_of_range("spinor_basis: index in 1..4");
    Spinor u = Spinor::Zero();
    u(i - 1) = 1.0;
    return u;
}

CliffordElement indefinite_gram() {
    CliffordElement g = CliffordElement::Zero();
    g(0, 1) = g(1, 0) = 1.0;
    g(2, 3) = g(3, 2) = 1.0;
    return g;
}

complexd indefinite_ip(const Spinor& u, const Spinor& v) { return (u.adjoint() * indefinite_gram() * v)(0); }

complexd definite_ip(const Spinor& u, const Spinor& v) { return u.dot(v); }

CliffordElement fundamental_symmetry() {
    LieVec xi = (1.0 / kSqrt2) * (LieVec::Z() - LieVec::T());
    return gamma(xi);
}

}  // namespace oscdirac
