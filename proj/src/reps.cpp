#include "oscdirac/reps.hpp"

#include <cmath>
#include <cstdio>
#include <stdexcept>

namespace oscdirac {

namespace {

double reduce_mod1(double x) {
    double r = x - std::floor(x);
    if (r >= 1.0) r -= 1.0;
    return r;
}

std::string fmt(double x) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.15g", x);
    return buf;
}

}  // namespace

IrrepLabel IrrepLabel::C(double d) {
    IrrepLabel l;
    l.kind = Kind::C;
    l.d = d;
    return l;
}

IrrepLabel IrrepLabel::S(double a, double tau) {
    if (!(a > 0)) throw std::invalid_argument("IrrepLabel::S: a must be positive");
    IrrepLabel l;
    l.kind = Kind::S;
    l.a = a;
    l.tau = reduce_mod1(tau);
    return l;
}

IrrepLabel IrrepLabel::F(double c, double d) {
    if (c == 0.0) throw std::invalid_argument("IrrepLabel::F: c must be nonzero");
    IrrepLabel l;
    l.kind = Kind::F;
    l.c = c;
    l.d = d;
    return l;
}

std::string IrrepLabel::str() const {
    switch (kind) {
        case Kind::C: return "C(" + fmt(d) + ")";
        case Kind::S: return "S(" + fmt(a) + "," + fmt(tau) + ")";
        case Kind::F: return "F(" + fmt(c) + "," + fmt(d) + ")";
    }
    return {};
}

IrrepLabel IrrepLabel::parse(const std::string& s) {
    auto open = s.find('(');
    if (open == std::string::npos || s.empty() || s.back() != ')')
        throw std::invalid_argument("IrrepLabel::parse: " + s);
    std::string head = s.substr(0, open);
    std::string body = s.substr(open + 1, s.size() - open - 2);
    auto comma = body.find(',');
    if (head == "C") {
        if (comma != std::string::npos) throw std::invalid_argument("IrrepLabel::parse: " + s);
        return C(std::stod(body));
    }
    if (comma == std::string::npos) throw std::invalid_argument("IrrepLabel::parse: " + s);
    double first = std::stod(body.substr(0, comma));
    double second = std::stod(body.substr(comma + 1));
    if (head == "S") return S(first, second);
    if (head == "F") return F(first, second);
    throw std::invalid_argument("IrrepLabel::parse: " + s);
}

bool operator==(const IrrepLabel& x, const IrrepLabel& y) {
    if (x.kind != y.kind) return false;
    switch (x.kind) {
        case IrrepLabel::Kind::C: return x.d == y.d;
        case IrrepLabel::Kind::S: return x.a == y.a && x.tau == y.tau;
        case IrrepLabel::Kind::F: return x.c == y.c && x.d == y.d;
    }
    return false;
}

int RepTruncation::interior_lo() const {
    switch (label.kind) {
        case IrrepLabel::Kind::C: return 0;
        case IrrepLabel::Kind::S: return 2;      // modes -N..-N+1 are boundary
        case IrrepLabel::Kind::F: return 0;      // the Fock vacuum end is exact
    }
    return 0;
}

int RepTruncation::interior_hi() const {
    switch (label.kind) {
        case IrrepLabel::Kind::C: return 0;
        case IrrepLabel::Kind::S: return dim - 3;
        case IrrepLabel::Kind::F: return dim - 3;
    }
    return 0;
}

RepTruncation build_truncation(const IrrepLabel& label, int N) {
    if (N < 2) throw std::invalid_argument("build_truncation: N must be >= 2");
    RepTruncation rep;
    rep.label = label;
    rep.N = N;

    const complexd I(0, 1);
    switch (label.kind) {
        case IrrepLabel::Kind::C: {
            rep.dim = 1;
            rep.basis_offset = 0;
            rep.op_Z = CMat::Zero(1, 1);
            rep.op_T = CMat::Zero(1, 1);
            rep.op_T(0, 0) = complexd(0, 2 * kPi * label.d);
            rep.op_Nplus = CMat::Zero(1, 1);
            rep.op_Nminus = CMat::Zero(1, 1);
            break;
        }
        case IrrepLabel::Kind::S: {
            // basis phi_n = e^{int}, modes n = -N..N
            rep.dim = 2 * N + 1;
            rep.basis_offset = -N;
            rep.op_Z = CMat::Zero(rep.dim, rep.dim);
            rep.op_T = CMat::Zero(rep.dim, rep.dim);
            rep.op_Nplus = CMat::Zero(rep.dim, rep.dim);
            rep.op_Nminus = CMat::Zero(rep.dim, rep.dim);
            for (int idx = 0; idx < rep.dim; ++idx) {
                int n = idx + rep.basis_offset;
                rep.op_T(idx, idx) = I * (n + label.tau);
                // (X+iY) phi_n = 2 pi i a phi_{n-1}, (X-iY) phi_n = 2 pi i a phi_{n+1}
                if (idx - 1 >= 0) rep.op_Nplus(idx - 1, idx) = I * (2 * kPi * label.a);
                if (idx + 1 < rep.dim) rep.op_Nminus(idx + 1, idx) = I * (2 * kPi * label.a);
            }
            break;
        }
        case IrrepLabel::Kind::F: {
            // basis psi_n, levels n = 0..N; for c < 0 the ladder roles of
            // X+iY and X-iY swap.
            rep.dim = N + 1;
            rep.basis_offset = 0;
            const double c = label.c;
            const double s = std::abs(c);
            rep.op_Z = CMat::Zero(rep.dim, rep.dim);
            rep.op_T = CMat::Zero(rep.dim, rep.dim);
            CMat up = CMat::Zero(rep.dim, rep.dim);
            CMat down = CMat::Zero(rep.dim, rep.dim);
            for (int n = 0; n < rep.dim; ++n) {
                rep.op_Z(n, n) = I * (2 * kPi * c);
                double tdiag = (c > 0) ? (2 * kPi * label.d - n) : (2 * kPi * label.d + n);
                rep.op_T(n, n) = I * tdiag;
                if (n + 1 < rep.dim) up(n + 1, n) = 2 * std::sqrt(kPi * s * (n + 1));
                if (n >= 1) down(n - 1, n) = -2 * std::sqrt(kPi * s * n);
            }
            if (c > 0) {
                rep.op_Nplus = up;
                rep.op_Nminus = down;
            } else {
                rep.op_Nplus = down;
                rep.op_Nminus = up;
            }
            break;
        }
    }
    return rep;
}

CMat casimir_matrix(const RepTruncation& rep) {
    CMat x = rep.op_X();
    CMat y = rep.op_Y();
    return x * x + y * y + 2.0 * rep.op_Z * rep.op_T;
}

double casimir_value(const IrrepLabel& label) {
    switch (label.kind) {
        case IrrepLabel::Kind::C: return 0.0;
        case IrrepLabel::Kind::S: return -4 * kPi * kPi * label.a * label.a;
        case IrrepLabel::Kind::F:
            if (label.c > 0) return -2 * kPi * label.c * (4 * kPi * label.d + 1);
            return -2 * kPi * label.c * (4 * kPi * label.d - 1);
    }
    return 0.0;
}

IrrepLabel pullback_label(const Automorphism& f, const IrrepLabel& label) {
    // (T_u . C_eta . F_S)^* = F_S^* . C_eta^* . T_u^*; C_eta^* is trivial.
    IrrepLabel l = label;
    if (f.u() != 0.0 && l.kind == IrrepLabel::Kind::F) l = IrrepLabel::F(l.c, l.d + f.u() * l.c);
    const double det = f.detS();
    const int eps = f.eps();
    if (!f.S().isApprox(Eigen::Matrix2d::Identity(), 0.0)) {
        switch (l.kind) {
            case IrrepLabel::Kind::C: l = IrrepLabel::C(eps * l.d); break;
            case IrrepLabel::Kind::S: l = IrrepLabel::S(std::sqrt(std::abs(det)) * l.a, eps * l.tau); break;
            case IrrepLabel::Kind::F: l = IrrepLabel::F(det * l.c, eps * l.d); break;
        }
    }
    return l;
}

}  // namespace oscdirac
