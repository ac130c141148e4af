#pragma once

#include <Eigen/Dense>
#include <complex>

#include "oscdirac/linalg.hpp"

namespace oscdirac {

/// Element (xi, z, t) of the oscillator group H x R with the rotation action
/// of t on the Heisenberg part.
struct OscElement {
    complexd xi{0.0, 0.0};
    double z = 0.0;
    double t = 0.0;

    static OscElement identity() { return {}; }
};

/// Element M(x,y,z)(t) of the polarized model H(1) x| R.
struct OscMElement {
    double x = 0.0;
    double y = 0.0;
    double z = 0.0;
    double t = 0.0;

    static OscMElement identity() { return {}; }
};

/// Lie algebra element  z*Z + x*X + y*Y + t*T.
struct LieVec {
    double z = 0.0;
    double x = 0.0;
    double y = 0.0;
    double t = 0.0;

    static LieVec Z() { return {1, 0, 0, 0}; }
    static LieVec X() { return {0, 1, 0, 0}; }
    static LieVec Y() { return {0, 0, 1, 0}; }
    static LieVec T() { return {0, 0, 0, 1}; }

    friend LieVec operator+(const LieVec& a, const LieVec& b) {
        return {a.z + b.z, a.x + b.x, a.y + b.y, a.t + b.t};
    }
    friend LieVec operator-(const LieVec& a, const LieVec& b) {
        return {a.z - b.z, a.x - b.x, a.y - b.y, a.t - b.t};
    }
    friend LieVec operator*(double s, const LieVec& v) { return {s * v.z, s * v.x, s * v.y, s * v.t}; }
};

/// Symplectic pairing omega(xi1, xi2) = Im(conj(xi1) * xi2) on C.
inline double omega(complexd a, complexd b) { return std::imag(std::conj(a) * b); }

OscElement osc_multiply(const OscElement& a, const OscElement& b);
OscElement osc_inverse(const OscElement& a);

OscMElement oscm_multiply(const OscMElement& a, const OscMElement& b);
OscMElement oscm_inverse(const OscMElement& a);

/// The isomorphism (x+iy, z, t) -> M(-y, x, z - xy/2)(t) and its inverse.
OscMElement phi_iso(const OscElement& a);
OscElement phi_iso_inverse(const OscMElement& a);

/// Automorphism of the oscillator group in the normal form T_u . C_eta . F_S.
/// S must satisfy S(i xi) = eps * i * S(xi) with eps = sgn(det S); the
/// constructor rejects matrices violating this.
class Automorphism {
  public:
    Automorphism(double u, complexd eta, const Eigen::Matrix2d& S);

    static Automorphism shear(double u);            // T_u
    static Automorphism conjugation(complexd eta);  // C_eta
    static Automorphism linear(const Eigen::Matrix2d& S);
    static Automorphism scaling(double a);  // F_{aI}

    double u() const { return u_; }
    complexd eta() const { return eta_; }
    const Eigen::Matrix2d& S() const { return S_; }
    int eps() const { return eps_; }
    double detS() const { return S_.determinant(); }

    OscElement apply(const OscElement& a) const;

  private:
    double u_;
    complexd eta_;
    Eigen::Matrix2d S_;
    int eps_;
};

inline OscElement apply_automorphism(const Automorphism& f, const OscElement& a) { return f.apply(a); }

LieVec bracket(const LieVec& v, const LieVec& w);

/// Ad-invariant scalar product with <X,X> = <Y,Y> = <Z,T> = 1 (r=1, s=0).
double metric(const LieVec& v, const LieVec& w);

}  // namespace oscdirac
