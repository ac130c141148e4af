#include "oscdirac/group.hpp"

#include <cmath>
#include <stdexcept>

namespace oscdirac {

OscElement osc_multiply(const OscElement& a, const OscElement& b) {
    complexd rot = std::polar(1.0, a.t) * b.xi;
    OscElement out;
    out.xi = a.xi + rot;
    out.z = a.z + b.z + 0.5 * omega(a.xi, rot);
    out.t = a.t + b.t;
    return out;
}

OscElement osc_inverse(const OscElement& a) {
    OscElement out;
    out.xi = -std::polar(1.0, -a.t) * a.xi;
    out.z = -a.z;
    out.t = -a.t;
    return out;
}

namespace {

// The action l(t) of the R-factor on H(1).
OscMElement rotate_h1(double t, const OscMElement& h) {
    double c = std::cos(t), s = std::sin(t);
    OscMElement out;
    out.x = h.x * c - h.y * s;
    out.y = h.x * s + h.y * c;
    out.z = h.z + 0.5 * h.x * h.y * (std::cos(2 * t) - 1.0) + 0.25 * (h.x * h.x - h.y * h.y) * std::sin(2 * t);
    out.t = 0.0;
    return out;
}

}  // namespace

OscMElement oscm_multiply(const OscMElement& a, const OscMElement& b) {
    OscMElement rb = rotate_h1(a.t, b);
    OscMElement out;
    out.x = a.x + rb.x;
    out.y = a.y + rb.y;
    out.z = a.z + rb.z + a.x * rb.y;
    out.t = a.t + b.t;
    return out;
}

OscMElement oscm_inverse(const OscMElement& a) {
    OscMElement h{a.x, a.y, a.z, 0.0};
    OscMElement r = rotate_h1(-a.t, h);
    OscMElement out;
    out.x = -r.x;
    out.y = -r.y;
    out.z = -r.z + r.x * r.y;
    out.t = -a.t;
    return out;
}

OscMElement phi_iso(const OscElement& a) {
    double x = a.xi.real(), y = a.xi.imag();
    return {-y, x, a.z - 0.5 * x * y, a.t};
}

OscElement phi_iso_inverse(const OscMElement& a) {
    // M(a,b,c)(t) came from x = b, y = -a, z = c - ab/2.
    OscElement out;
    out.xi = complexd(a.y, -a.x);
    out.z = a.z - 0.5 * a.x * a.y;
    out.t = a.t;
    return out;
}

Automorphism::Automorphism(double u, complexd eta, const Eigen::Matrix2d& S) : u_(u), eta_(eta), S_(S) {
    double det = S.determinant();
    if (det == 0.0) throw std::invalid_argument("automorphism: singular S");
    eps_ = det > 0 ? 1 : -1;
    // S J = eps J S with J the multiplication by i on R^2.
    Eigen::Matrix2d J;
    J << 0, -1, 1, 0;
    double defect = (S * J - eps_ * J * S).cwiseAbs().maxCoeff();
    if (defect > 1e-12 * std::max(1.0, S.cwiseAbs().maxCoeff()))
        throw std::invalid_argument("automorphism: S does not satisfy S(i xi) = eps i S(xi)");
}

Automorphism Automorphism::shear(double u) { return Automorphism(u, complexd(0, 0), Eigen::Matrix2d::Identity()); }

Automorphism Automorphism::conjugation(complexd eta) {
    return Automorphism(0.0, eta, Eigen::Matrix2d::Identity());
}

Automorphism Automorphism::linear(const Eigen::Matrix2d& S) { return Automorphism(0.0, complexd(0, 0), S); }

Automorphism Automorphism::scaling(double a) {
    if (a == 0.0) throw std::invalid_argument("automorphism: zero scaling");
    return linear(a * Eigen::Matrix2d::Identity());
}

OscElement Automorphism::apply(const OscElement& a) const {
    // F_S
    Eigen::Vector2d v(a.xi.real(), a.xi.imag());
    Eigen::Vector2d sv = S_ * v;
    OscElement b;
    b.xi = complexd(sv(0), sv(1));
    b.z = detS() * a.z;
    b.t = eps_ * a.t;
    // C_eta
    complexd rot = std::polar(1.0, b.t) * eta_;
    OscElement c;
    c.xi = b.xi + eta_ - rot;
    c.z = b.z + 0.5 * omega(eta_ + b.xi, b.xi - rot);
    c.t = b.t;
    // T_u
    c.z += u_ * c.t;
    return c;
}

LieVec bracket(const LieVec& v, const LieVec& w) {
    // [T,X] = Y, [T,Y] = -X, [X,Y] = Z, Z central.
    LieVec out;
    out.z = v.x * w.y - v.y * w.x;
    out.x = v.y * w.t - v.t * w.y;
    out.y = v.t * w.x - v.x * w.t;
    out.t = 0.0;
    return out;
}

double metric(const LieVec& v, const LieVec& w) { return v.x * w.x + v.y * w.y + v.z * w.t + v.t * w.z; }

}  // namespace oscdirac
