#include "oscdirac/dirac.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace oscdirac {

namespace {

const complexd I(0, 1);

CMat cubic_shift_block() {
    // Id (x) diag(A, -A): the matrix S with X.Y.Z = i S.
    CMat s = CMat::Zero(4, 4);
    s(1, 0) = std::sqrt(2.0);
    s(3, 2) = -std::sqrt(2.0);
    return s;
}

}  // namespace

DiracMatrix build_dirac(const RepTruncation& rep, double t) {
    if (rep.N < 4) throw std::invalid_argument("build_dirac: truncation N >= 4 required");
    CMat gz = gamma(LieVec::Z());
    CMat gx = gamma(LieVec::X());
    CMat gy = gamma(LieVec::Y());
    CMat gt = gamma(LieVec::T());
    CMat id4 = CMat::Identity(4, 4);
    CMat repid = CMat::Identity(rep.dim, rep.dim);

    DiracMatrix d;
    d.t = t;
    d.rep = rep;
    d.matrix = kron(rep.op_Z, gt) + kron(rep.op_X(), gx) + kron(rep.op_Y(), gy) + kron(rep.op_T, gz) +
               (1.5 * t) * kron(repid, cubic_element());
    return d;
}

DiracMatrix build_dirac_via_cubic_shift(const RepTruncation& rep, double t) {
    DiracMatrix d = build_dirac(rep, 1.0 / 3.0);
    d.t = t;
    if (t != 1.0 / 3.0) {
        CMat repid = CMat::Identity(rep.dim, rep.dim);
        d.matrix += (0.5 * I * (3.0 * t - 1.0)) * kron(repid, cubic_shift_block());
    }
    return d;
}

CMat casimir_tensor(const RepTruncation& rep) { return kron(casimir_matrix(rep), CMat::Identity(4, 4)); }

namespace {

struct VecBuilder {
    const RepTruncation& rep;
    CVec v;
    explicit VecBuilder(const RepTruncation& r) : rep(r), v(CVec::Zero(4 * r.dim)) {}
    // psi-level given by basis index (0-based), spinor component 1..4
    VecBuilder& add(int level_idx, int spinor_i, complexd coef) {
        v(tensor_index(level_idx, spinor_i)) += coef;
        return *this;
    }
};

void push(std::vector<ClosedFormVector>& out, ClosedFormVector::Family fam, int branch, int n, int sign,
          complexd ev, CVec vec) {
    ClosedFormVector c;
    c.family = fam;
    c.branch = branch;
    c.n = n;
    c.sign = sign;
    c.eigenvalue = ev;
    c.vector = std::move(vec);
    out.push_back(std::move(c));
}

}  // namespace

std::vector<ClosedFormVector> closed_form_eigenvectors(const RepTruncation& rep) {
    std::vector<ClosedFormVector> out;
    const IrrepLabel& l = rep.label;

    if (l.kind == IrrepLabel::Kind::C)
        throw std::invalid_argument("closed_form_eigenvectors: C-type summands are entirely kernel");

    if (l.kind == IrrepLabel::Kind::S) {
        // (neu1): phi_n (x) u2 -+ phi_{n+1} (x) u4,  eigenvalue +-2 pi a
        // (neu2): +-phi_n (x) u1 + i(n+tau+1/2)/(sqrt2 pi a) phi_n (x) u2 + phi_{n+1} (x) u3
        const double a = l.a;
        for (int idx = 0; idx + 1 < rep.dim; ++idx) {
            int n = idx + rep.basis_offset;
            for (int sign : {+1, -1}) {
                complexd ev(2 * kPi * a * sign, 0);
                VecBuilder b1(rep);
                b1.add(idx, 2, 1.0).add(idx + 1, 4, -sign * 1.0);
                push(out, ClosedFormVector::Family::SFamily, 0, n, sign, ev, b1.v);
                VecBuilder b2(rep);
                b2.add(idx, 1, sign * 1.0)
                    .add(idx, 2, I * (n + l.tau + 0.5) / (std::sqrt(2.0) * kPi * a))
                    .add(idx + 1, 3, 1.0);
                push(out, ClosedFormVector::Family::SFamily, 1, n, sign, ev, b2.v);
            }
        }
        return out;
    }

    // F-type
    const double c = l.c;
    const double lambda = -casimir_value(l);
    const bool kernel = (c > 0) ? std::abs(4 * kPi * l.d + 1) < 1e-14 : std::abs(4 * kPi * l.d - 1) < 1e-14;
    const double sc = std::sqrt(2 * kPi * std::abs(c));
    const complexd sl = sqrt_signed(lambda);
    const int hi = rep.dim - 1;  // top stored level

    if (c > 0) {
        const complexd sm = sqrt_signed(2 * kPi * l.d + 0.5);
        if (!kernel) {
            for (int n = 0; n <= hi; ++n)
                for (int sign : {+1, -1}) {
                    VecBuilder b(rep);
                    b.add(n, 1, sc).add(n, 2, double(sign) * I * sm);
                    if (n >= 1) b.add(n - 1, 4, std::sqrt(double(n)));
                    push(out, ClosedFormVector::Family::FPlus, 0, n, sign, double(sign) * sl, b.v);
                }
            for (int n = 0; n + 1 <= hi; ++n)
                for (int sign : {+1, -1}) {
                    VecBuilder b(rep);
                    b.add(n + 1, 2, std::sqrt(double(n + 1))).add(n, 3, -sc).add(n, 4, -double(sign) * I * sm);
                    push(out, ClosedFormVector::Family::FPlus, 1, n, sign, double(sign) * sl, b.v);
                }
        } else {
            for (int n = 0; n <= hi; ++n) {
                VecBuilder b(rep);
                b.add(n, 1, sc);
                if (n >= 1) b.add(n - 1, 4, std::sqrt(double(n)));
                push(out, ClosedFormVector::Family::FKernelCPos, 0, n, 0, 0.0, b.v);
            }
            for (int n = 0; n + 1 <= hi; ++n) {
                VecBuilder b(rep);
                b.add(n + 1, 2, std::sqrt(double(n + 1))).add(n, 3, -sc);
                push(out, ClosedFormVector::Family::FKernelCPos, 1, n, 0, 0.0, b.v);
            }
        }
        return out;
    }

    // c < 0
    const double w = 2 * kPi * l.d - 0.5;
    if (!kernel) {
        if (w > 0) {
            // (ev4)-(ev6)
            const double sw = std::sqrt(w);
            for (int sign : {+1, -1}) {
                VecBuilder b(rep);
                b.add(0, 3, -sc).add(0, 4, -double(sign) * sw);
                push(out, ClosedFormVector::Family::FMinusDPos, 0, 0, sign, double(sign) * sl, b.v);
            }
            for (int n = 0; n + 1 <= hi; ++n)
                for (int sign : {+1, -1}) {
                    VecBuilder b(rep);
                    b.add(n, 1, sc).add(n, 2, double(sign) * sw).add(n + 1, 4, std::sqrt(double(n + 1)));
                    push(out, ClosedFormVector::Family::FMinusDPos, 1, n, sign, double(sign) * sl, b.v);
                }
            for (int n = 1; n <= hi; ++n)
                for (int sign : {+1, -1}) {
                    VecBuilder b(rep);
                    b.add(n - 1, 2, std::sqrt(double(n))).add(n, 3, -sc).add(n, 4, -double(sign) * sw);
                    push(out, ClosedFormVector::Family::FMinusDPos, 2, n, sign, double(sign) * sl, b.v);
                }
        } else {
            // (ev7)-(ev9)
            const double sw = std::sqrt(-w);
            for (int sign : {+1, -1}) {
                VecBuilder b(rep);
                b.add(0, 3, -sc).add(0, 4, double(sign) * I * sw);
                push(out, ClosedFormVector::Family::FMinusDNeg, 0, 0, sign, double(sign) * sl, b.v);
            }
            for (int n = 0; n + 1 <= hi; ++n)
                for (int sign : {+1, -1}) {
                    VecBuilder b(rep);
                    b.add(n, 1, sc).add(n, 2, -double(sign) * I * sw).add(n + 1, 4, std::sqrt(double(n + 1)));
                    push(out, ClosedFormVector::Family::FMinusDNeg, 1, n, sign, double(sign) * sl, b.v);
                }
            for (int n = 1; n <= hi; ++n)
                for (int sign : {+1, -1}) {
                    VecBuilder b(rep);
                    b.add(n - 1, 2, std::sqrt(double(n))).add(n, 3, -sc).add(n, 4, double(sign) * I * sw);
                    push(out, ClosedFormVector::Family::FMinusDNeg, 2, n, sign, double(sign) * sl, b.v);
                }
        }
    } else {
        VecBuilder b0(rep);
        b0.add(0, 3, sc);
        push(out, ClosedFormVector::Family::FKernelCNeg, 0, 0, 0, 0.0, b0.v);
        for (int n = 0; n + 1 <= hi; ++n) {
            VecBuilder b(rep);
            b.add(n, 1, sc).add(n + 1, 4, std::sqrt(double(n + 1)));
            push(out, ClosedFormVector::Family::FKernelCNeg, 1, n, 0, 0.0, b.v);
        }
        for (int n = 1; n <= hi; ++n) {
            VecBuilder b(rep);
            b.add(n - 1, 2, std::sqrt(double(n))).add(n, 3, -sc);
            push(out, ClosedFormVector::Family::FKernelCNeg, 2, n, 0, 0.0, b.v);
        }
    }
    return out;
}

std::vector<complexd> dt_block_eigenvalues(const IrrepLabel& label, double t) {
    switch (label.kind) {
        case IrrepLabel::Kind::C: return {complexd(0, 0)};
        case IrrepLabel::Kind::S: {
            complexd ev(2 * kPi * label.a, 0);
            return {ev, -ev};
        }
        case IrrepLabel::Kind::F: {
            const double lambda = -casimir_value(label);
            const double shift = 2 * kPi * label.c * (3 * t - 1);
            complexd s1 = sqrt_signed(lambda + shift);
            complexd s2 = sqrt_signed(lambda - shift);
            return {s1, -s1, s2, -s2};
        }
    }
    return {};
}

double boundary_mass(const RepTruncation& rep, const CVec& v) {
    double total = v.squaredNorm();
    if (total == 0) return 0.0;
    double boundary = 0.0;
    auto level_mass = [&](int level_idx) {
        for (int i = 1; i <= 4; ++i) boundary += std::norm(v(tensor_index(level_idx, i)));
    };
    switch (rep.label.kind) {
        case IrrepLabel::Kind::C: return 0.0;
        case IrrepLabel::Kind::F:
            level_mass(rep.dim - 1);
            level_mass(rep.dim - 2);
            break;
        case IrrepLabel::Kind::S:
            level_mass(0);
            level_mass(1);
            level_mass(rep.dim - 2);
            level_mass(rep.dim - 1);
            break;
    }
    return boundary / total;
}

std::vector<complexd> filter_spurious(const RepTruncation& rep, const Eigensystem& es, double mass_tol) {
    std::vector<complexd> kept;
    for (Eigen::Index j = 0; j < es.values.size(); ++j)
        if (boundary_mass(rep, es.vectors.col(j)) < mass_tol) kept.push_back(es.values(j));
    return kept;
}

std::vector<std::pair<complexd, int>> filtered_cluster_means(const RepTruncation& rep, const Eigensystem& es,
                                                             double mass_tol, double cluster_radius) {
    std::vector<complexd> kept = filter_spurious(rep, es, mass_tol);
    // radius from the operator scale (full spectral radius), not from the kept
    // values: the defective splitting is sqrt(eps)*|A| even for eigenvalue 0
    double scale = 0;
    for (Eigen::Index i = 0; i < es.values.size(); ++i) scale = std::max(scale, std::abs(es.values(i)));
    if (cluster_radius <= 0) cluster_radius = 64 * std::sqrt(2.2e-16) * (1.0 + scale);

    std::sort(kept.begin(), kept.end(), [](complexd a, complexd b) {
        if (a.real() != b.real()) return a.real() < b.real();
        return a.imag() < b.imag();
    });
    struct Cluster {
        complexd sum{0, 0};
        int count = 0;
        complexd seed{0, 0};
    };
    std::vector<Cluster> clusters;
    for (const auto& z : kept) {
        Cluster* home = nullptr;
        for (auto& c : clusters)
            if (std::abs(z - c.seed) <= cluster_radius) home = &c;
        if (!home) {
            clusters.push_back({z, 1, z});
        } else {
            home->sum += z;
            home->count += 1;
        }
    }
    std::vector<std::pair<complexd, int>> out;
    out.reserve(clusters.size());
    for (const auto& c : clusters) out.push_back({c.sum / static_cast<double>(c.count), c.count});
    return out;
}

std::vector<double> projection_norm_growth(const RepTruncation& rep, int upto_n) {
    if (rep.label.kind != IrrepLabel::Kind::F || rep.label.c <= 0)
        throw std::invalid_argument("projection_norm_growth: needs an F-truncation with c > 0");
    const double lambda = -casimir_value(rep.label);
    if (lambda == 0.0) throw std::invalid_argument("projection_norm_growth: lambda must be nonzero");
    if (upto_n >= rep.dim) throw std::invalid_argument("projection_norm_growth: upto_n beyond truncation");

    DiracMatrix d = build_dirac(rep, 1.0 / 3.0);
    const complexd sl = sqrt_signed(lambda);
    const int n4 = 4 * rep.dim;
    CMat id = CMat::Identity(n4, n4);
    CMat p_plus = (d.matrix + sl * id) / (2.0 * sl);
    CMat p_minus = (-d.matrix + sl * id) / (2.0 * sl);

    const complexd zcoef = 2.0 * I * sqrt_signed(2 * kPi * rep.label.d + 0.5);
    std::vector<double> ratios;
    ratios.reserve(upto_n + 1);
    for (int n = 0; n <= upto_n; ++n) {
        CVec zeta = CVec::Zero(n4);
        zeta(tensor_index(n, 2)) = zcoef;
        double rp = (p_plus * zeta).norm() / zeta.norm();
        double rm = (p_minus * zeta).norm() / zeta.norm();
        ratios.push_back(0.5 * (rp + rm));  // the two agree; averaged for symmetry
    }
    return ratios;
}

double projection_growth_exponent(const std::vector<double>& ratios, int n_lo, int n_hi) {
    if (n_lo < 1 || n_hi >= static_cast<int>(ratios.size()) || n_lo >= n_hi)
        throw std::invalid_argument("projection_growth_exponent: bad window");
    const double base = ratios[0] * ratios[0];
    std::vector<double> x, y;
    for (int n = n_lo; n <= n_hi; ++n) {
        double g = ratios[n] * ratios[n] - base;
        if (g <= 0) throw std::runtime_error("projection_growth_exponent: non-increasing sequence");
        x.push_back(std::log(static_cast<double>(n)));
        y.push_back(std::log(g));
    }
    return 0.5 * ls_slope(x, y);
}

}  // namespace oscdirac
