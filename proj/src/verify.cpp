#include "oscdirac/verify.hpp"

#include <cmath>
#include <map>
#include <random>
#include <set>

#include "oscdirac/clifford.hpp"
#include "oscdirac/dirac.hpp"
#include "oscdirac/group.hpp"
#include "oscdirac/lattice.hpp"
#include "oscdirac/parallel.hpp"
#include "oscdirac/theta.hpp"

namespace oscdirac {

Check make_check(const std::string& name, double measured, double threshold) {
    return {name, measured, threshold, measured <= threshold};
}

bool all_pass(const std::vector<Check>& checks) {
    for (const auto& c : checks)
        if (!c.pass) return false;
    return true;
}

namespace {

double dist(const OscElement& a, const OscElement& b) {
    return std::abs(a.xi - b.xi) + std::abs(a.z - b.z) + std::abs(a.t - b.t);
}

double dist(const OscMElement& a, const OscMElement& b) {
    return std::abs(a.x - b.x) + std::abs(a.y - b.y) + std::abs(a.z - b.z) + std::abs(a.t - b.t);
}

OscElement random_osc(std::mt19937_64& rng) {
    std::uniform_real_distribution<double> u(-2.0, 2.0), ut(-kPi, kPi);
    return {complexd(u(rng), u(rng)), u(rng), ut(rng)};
}

OscMElement random_oscm(std::mt19937_64& rng) {
    std::uniform_real_distribution<double> u(-2.0, 2.0), ut(-kPi, kPi);
    return {u(rng), u(rng), u(rng), ut(rng)};
}

const LieVec kBasis[4] = {LieVec::Z(), LieVec::X(), LieVec::Y(), LieVec::T()};
const LieVec kDual[4] = {LieVec::T(), LieVec::X(), LieVec::Y(), LieVec::Z()};

}  // namespace

std::vector<Check> verify_group(unsigned seed) {
    std::vector<Check> out;
    std::mt19937_64 rng(seed);

    double worst = 0, worst_inv = 0;
    for (int i = 0; i < 1000; ++i) {
        OscElement a = random_osc(rng), b = random_osc(rng), c = random_osc(rng);
        worst = std::max(worst, dist(osc_multiply(osc_multiply(a, b), c), osc_multiply(a, osc_multiply(b, c))));
        worst_inv = std::max(worst_inv, dist(osc_multiply(a, osc_inverse(a)), OscElement::identity()));
        worst_inv = std::max(worst_inv, dist(osc_multiply(osc_inverse(a), a), OscElement::identity()));
    }
    out.push_back(make_check("osc associativity (1000 random triples)", worst, 1e-12));
    out.push_back(make_check("osc two-sided inverses", worst_inv, 1e-12));

    worst = 0;
    worst_inv = 0;
    for (int i = 0; i < 1000; ++i) {
        OscMElement a = random_oscm(rng), b = random_oscm(rng), c = random_oscm(rng);
        worst = std::max(worst,
                         dist(oscm_multiply(oscm_multiply(a, b), c), oscm_multiply(a, oscm_multiply(b, c))));
        worst_inv = std::max(worst_inv, dist(oscm_multiply(a, oscm_inverse(a)), OscMElement::identity()));
        worst_inv = std::max(worst_inv, dist(oscm_multiply(oscm_inverse(a), a), OscMElement::identity()));
    }
    out.push_back(make_check("oscM associativity (1000 random triples)", worst, 1e-12));
    out.push_back(make_check("oscM two-sided inverses", worst_inv, 1e-12));

    worst = 0;
    worst_inv = 0;
    for (int i = 0; i < 1000; ++i) {
        OscElement a = random_osc(rng), b = random_osc(rng);
        worst = std::max(worst, dist(phi_iso(osc_multiply(a, b)), oscm_multiply(phi_iso(a), phi_iso(b))));
        worst_inv = std::max(worst_inv, dist(phi_iso_inverse(phi_iso(a)), a));
    }
    out.push_back(make_check("phi is a homomorphism", worst, 1e-12));
    out.push_back(make_check("phi round-trips with its inverse", worst_inv, 1e-12));

    Eigen::Matrix2d rot, refl;
    rot << 0.6, -0.8, 0.8, 0.6;
    refl << 0.6, 0.8, 0.8, -0.6;
    std::vector<Automorphism> autos = {Automorphism::shear(0.7), Automorphism::conjugation(complexd(1.2, -0.4)),
                                       Automorphism::linear(1.5 * rot), Automorphism::linear(0.5 * refl),
                                       Automorphism(0.3, complexd(-0.2, 0.9), 2.0 * rot)};
    worst = 0;
    for (const auto& f : autos)
        for (int i = 0; i < 200; ++i) {
            OscElement a = random_osc(rng), b = random_osc(rng);
            worst = std::max(worst, dist(f.apply(osc_multiply(a, b)), osc_multiply(f.apply(a), f.apply(b))));
        }
    out.push_back(make_check("automorphisms are homomorphisms", worst, 1e-12));

    bool rejected = false;
    try {
        Eigen::Matrix2d bad;
        bad << 1, 0.3, 0, 1;
        Automorphism::linear(bad);
    } catch (const std::invalid_argument&) {
        rejected = true;
    }
    out.push_back(make_check("malformed S is rejected", rejected ? 0.0 : 1.0, 0.0));

    worst = 0;
    for (const auto& u : kBasis)
        for (const auto& v : kBasis)
            for (const auto& w : kBasis) {
                LieVec jac = bracket(u, bracket(v, w)) + bracket(v, bracket(w, u)) + bracket(w, bracket(u, v));
                worst = std::max({worst, std::abs(jac.z), std::abs(jac.x), std::abs(jac.y), std::abs(jac.t)});
            }
    out.push_back(make_check("Jacobi identity on all 64 basis triples (exact)", worst, 0.0));

    worst = 0;
    for (const auto& u : kBasis)
        for (const auto& v : kBasis)
            for (const auto& w : kBasis)
                worst = std::max(worst, std::abs(metric(bracket(u, v), w) + metric(v, bracket(u, w))));
    out.push_back(make_check("metric ad-invariance on basis triples (exact)", worst, 0.0));

    worst = 0;
    for (int a = 0; a < 4; ++a)
        for (int b = 0; b < 4; ++b)
            worst = std::max(worst, std::abs(metric(kDual[a], kBasis[b]) - (a == b ? 1.0 : 0.0)));
    out.push_back(make_check("dual basis is T,X,Y,Z (exact)", worst, 0.0));

    // sum_{a,b} <[e_a,e_b],[e^a,e^b]>
    double scal = 0;
    for (int a = 0; a < 4; ++a)
        for (int b = 0; b < 4; ++b) scal += metric(bracket(kBasis[a], kBasis[b]), bracket(kDual[a], kDual[b]));
    out.push_back(make_check("scalar curvature sum vanishes (exact)", std::abs(scal), 0.0));

    return out;
}

std::vector<Check> verify_clifford() {
    std::vector<Check> out;

    double worst = 0;
    for (int a = 0; a < 4; ++a)
        for (int b = 0; b < 4; ++b) {
            CliffordElement lhs = gamma(kBasis[a]) * gamma(kBasis[b]) + gamma(kBasis[b]) * gamma(kBasis[a]) +
                                  2.0 * metric(kBasis[a], kBasis[b]) * CliffordElement::Identity();
            worst = std::max(worst, lhs.cwiseAbs().maxCoeff());
        }
    out.push_back(make_check("Clifford relations on all 16 basis pairs", worst, 1e-14));

    worst = 0;
    for (const auto& v : kBasis)
        for (int i = 1; i <= 4; ++i)
            for (int j = 1; j <= 4; ++j) {
                Spinor u = spinor_basis(i), w = spinor_basis(j);
                worst = std::max(worst,
                                 std::abs(indefinite_ip(gamma(v) * u, w) - indefinite_ip(u, gamma(v) * w)));
            }
    out.push_back(make_check("<v.u, w> = <u, v.w> for the indefinite product", worst, 1e-14));

    CliffordElement j = fundamental_symmetry();
    out.push_back(make_check("J_xi^2 = Id", (j * j - CliffordElement::Identity()).cwiseAbs().maxCoeff(), 1e-14));

    worst = 0;
    for (int a = 1; a <= 4; ++a)
        for (int b = 1; b <= 4; ++b) {
            complexd want = (a == b) ? 1.0 : 0.0;
            worst = std::max(worst, std::abs(definite_ip(spinor_basis(a), spinor_basis(b)) - want));
            complexd via_j = indefinite_ip(spinor_basis(a), j * spinor_basis(b));
            worst = std::max(worst, std::abs(via_j - want));
        }
    out.push_back(make_check("u_1..u_4 orthonormal for (.,.) = <., J.>", worst, 1e-14));

    CliffordElement xyz = gamma(LieVec::X()) * gamma(LieVec::Y()) * gamma(LieVec::Z());
    out.push_back(make_check("X.Y.Z matrix product equals the closed form",
                             (xyz - cubic_element()).cwiseAbs().maxCoeff(), 1e-14));
    out.push_back(make_check("cubic element squares to zero",
                             (cubic_element() * cubic_element()).cwiseAbs().maxCoeff(), 0.0));

    // (xi.u, v) = (u, xi.v) and (X.u, v) = -(u, X.v) for X orthogonal to xi
    worst = 0;
    std::vector<LieVec> perp = {LieVec::X(), LieVec::Y(), LieVec::Z() + LieVec::T()};
    for (int a = 1; a <= 4; ++a)
        for (int b = 1; b <= 4; ++b) {
            Spinor u = spinor_basis(a), v = spinor_basis(b);
            worst = std::max(worst, std::abs(definite_ip(j * u, v) - definite_ip(u, j * v)));
            for (const auto& x : perp)
                worst = std::max(worst, std::abs(definite_ip(gamma(x) * u, v) + definite_ip(u, gamma(x) * v)));
        }
    out.push_back(make_check("xi is (.,.)-symmetric, xi-perp directions are skew", worst, 1e-14));

    return out;
}

namespace {

std::vector<IrrepLabel> rep_grid() {
    return {IrrepLabel::C(0.7),
            IrrepLabel::C(-0.25 / kPi),
            IrrepLabel::S(1.0, 0.0),
            IrrepLabel::S(0.5, 1.0 / 3.0),
            IrrepLabel::S(std::sqrt(2.0), 0.9),
            IrrepLabel::F(1.0, 0.25 / kPi),
            IrrepLabel::F(-1.0, 0.3),
            IrrepLabel::F(3.0, -0.25 / kPi),
            IrrepLabel::F(-0.5 / kPi, 0.0),
            IrrepLabel::F(2.5, -0.7)};
}

CMat interior_block(const CMat& m, const RepTruncation& rep) {
    int lo = rep.interior_lo(), hi = rep.interior_hi();
    if (hi < lo) return CMat::Zero(0, 0);
    return m.block(lo, lo, hi - lo + 1, hi - lo + 1);
}

}  // namespace

std::vector<Check> verify_reps(int trunc) {
    std::vector<Check> out;
    const int N = std::max(8, trunc);

    double skew = 0, pair = 0, commT = 0, commN = 0, cas_scalar = 0, cas_comm = 0, ladder = 0;
    for (const auto& label : rep_grid()) {
        RepTruncation rep = build_truncation(label, N);
        skew = std::max(skew, (rep.op_Z + rep.op_Z.adjoint()).cwiseAbs().maxCoeff());
        skew = std::max(skew, (rep.op_T + rep.op_T.adjoint()).cwiseAbs().maxCoeff());
        pair = std::max(pair, (rep.op_Nplus.adjoint() + rep.op_Nminus).cwiseAbs().maxCoeff());

        // [sigma(T), sigma(N+-)] = -+ i sigma(N+-) on interior indices
        const complexd I(0, 1);
        CMat cp = rep.op_T * rep.op_Nplus - rep.op_Nplus * rep.op_T + I * rep.op_Nplus;
        CMat cm = rep.op_T * rep.op_Nminus - rep.op_Nminus * rep.op_T - I * rep.op_Nminus;
        commT = std::max({commT, interior_block(cp, rep).cwiseAbs().maxCoeff(),
                          interior_block(cm, rep).cwiseAbs().maxCoeff()});

        CMat cz = rep.op_Nplus * rep.op_Nminus - rep.op_Nminus * rep.op_Nplus + 2.0 * I * rep.op_Z;
        commN = std::max(commN, interior_block(cz, rep).cwiseAbs().maxCoeff());

        CMat cas = casimir_matrix(rep);
        CMat dev = cas - casimir_value(label) * CMat::Identity(rep.dim, rep.dim);
        cas_scalar = std::max(cas_scalar, interior_block(dev, rep).cwiseAbs().maxCoeff());

        for (const CMat& v : {rep.op_Z, rep.op_T, rep.op_X(), rep.op_Y()})
            cas_comm = std::max(cas_comm, interior_block(cas * v - v * cas, rep).cwiseAbs().maxCoeff());

        // ladder normalization the explicit matrices produce: [A+, A-] = 4 pi |c| Id
        if (label.kind == IrrepLabel::Kind::F) {
            CMat aplus = (label.c > 0) ? rep.op_Nplus : rep.op_Nminus;
            CMat aminus = (label.c > 0) ? rep.op_Nminus : rep.op_Nplus;
            CMat lad = aplus * aminus - aminus * aplus -
                       4 * kPi * std::abs(label.c) * CMat::Identity(rep.dim, rep.dim);
            ladder = std::max(ladder, interior_block(lad, rep).cwiseAbs().maxCoeff());
        }
    }
    out.push_back(make_check("sigma(Z), sigma(T) skew-Hermitian (exact)", skew, 0.0));
    out.push_back(make_check("sigma(X+iY)^H = -sigma(X-iY)", pair, 1e-12));
    out.push_back(make_check("[sigma(T), sigma(X+-iY)] = -+i sigma(X+-iY) interior", commT, 1e-10));
    out.push_back(make_check("[sigma(N+), sigma(N-)] = -2i sigma(Z) interior", commN, 1e-10));
    out.push_back(make_check("Casimir acts by casimir_value on interior", cas_scalar, 1e-10));
    out.push_back(make_check("Casimir commutes with represented generators interior", cas_comm, 1e-10));
    out.push_back(make_check("[A+, A-] = 4 pi |c| Id interior (F-type)", ladder, 1e-10));

    // enlarging N leaves shared-mode entries bit-identical
    double drift = 0;
    for (const auto& label : rep_grid()) {
        if (label.kind == IrrepLabel::Kind::C) continue;
        RepTruncation small = build_truncation(label, N);
        RepTruncation big = build_truncation(label, N + 8);
        int shift = small.basis_offset - big.basis_offset;  // S: 8, F: 0
        int lo = small.interior_lo(), hi = small.interior_hi();
        std::vector<std::pair<const CMat*, const CMat*>> mats = {{&small.op_Nplus, &big.op_Nplus},
                                                                 {&small.op_Nminus, &big.op_Nminus},
                                                                 {&small.op_T, &big.op_T},
                                                                 {&small.op_Z, &big.op_Z}};
        for (auto [sm, bg] : mats)
            for (int i = lo; i <= hi; ++i)
                for (int jj = lo; jj <= hi; ++jj)
                    drift = std::max(drift, std::abs((*sm)(i, jj) - (*bg)(i + shift, jj + shift)));
    }
    out.push_back(make_check("interior entries bit-identical across truncations", drift, 0.0));

    return out;
}

namespace {

std::vector<IrrepLabel> dirac_grid() {
    return {IrrepLabel::F(1.0, 0.25 / kPi),  IrrepLabel::F(-1.0, 0.25 / kPi), IrrepLabel::F(0.5 / kPi, 0.8),
            IrrepLabel::F(-3.0, -0.25 / kPi), IrrepLabel::F(2.0, -0.6),       IrrepLabel::S(1.0, 0.0),
            IrrepLabel::S(std::sqrt(2.0), 1.0 / 3.0)};
}

// interior families: supported away from truncated ends, so D acts exactly
bool family_interior(const RepTruncation& rep, const ClosedFormVector& v) {
    int lo = rep.dim, hi = -1;
    for (int level = 0; level < rep.dim; ++level)
        for (int i = 1; i <= 4; ++i)
            if (std::abs(v.vector(tensor_index(level, i))) > 0) {
                lo = std::min(lo, level);
                hi = std::max(hi, level);
            }
    bool lower_ok = (rep.label.kind == IrrepLabel::Kind::S) ? lo >= 2 : true;
    return lower_ok && hi <= rep.dim - 3;
}

}  // namespace

std::vector<Check> verify_dirac(int trunc) {
    std::vector<Check> out;
    const int N = std::max(8, trunc);
    const std::vector<double> ts = {0.0, 1.0 / 3.0, 0.5, 1.0};

    double square = 0, routes = 0, exact13 = 0, evres = 0;
    int rank_fail = 0;
    for (const auto& label : dirac_grid()) {
        RepTruncation rep = build_truncation(label, N);
        DiracMatrix d13 = build_dirac(rep, 1.0 / 3.0);

        CMat resid = d13.matrix * d13.matrix + casimir_tensor(rep);
        int lo = 4 * rep.interior_lo(), len = 4 * (rep.interior_hi() - rep.interior_lo() + 1);
        square = std::max(square, op_norm(resid.block(lo, lo, len, len)));

        for (double t : ts) {
            CMat a = build_dirac(rep, t).matrix;
            CMat b = build_dirac_via_cubic_shift(rep, t).matrix;
            double diff = (a - b).cwiseAbs().maxCoeff();
            if (t == 1.0 / 3.0) exact13 = std::max(exact13, diff);
            else routes = std::max(routes, diff / std::max(1.0, a.cwiseAbs().maxCoeff()));
        }

        auto family = closed_form_eigenvectors(rep);
        std::map<int, std::vector<CVec>> per_level_proj;
        for (const auto& v : family) {
            if (!family_interior(rep, v)) continue;
            evres = std::max(evres, (d13.matrix * v.vector - v.eigenvalue * v.vector).norm() / v.vector.norm());
            for (int level = rep.interior_lo(); level <= rep.interior_hi(); ++level) {
                CVec proj(4);
                for (int i = 1; i <= 4; ++i) proj(i - 1) = v.vector(tensor_index(level, i));
                if (proj.norm() > 0) per_level_proj[level].push_back(proj);
            }
        }
        for (auto& [level, projs] : per_level_proj) {
            if (level < rep.interior_lo() + 2 || level > rep.interior_hi() - 2) continue;
            CMat m(4, static_cast<int>(projs.size()));
            for (int c = 0; c < static_cast<int>(projs.size()); ++c) m.col(c) = projs[c];
            if (numerical_rank(m) != 4) ++rank_fail;
        }
    }
    out.push_back(make_check("square identity |(D^{1/3})^2 + Omega| interior", square, 1e-10));
    out.push_back(make_check("assembly routes agree exactly at t = 1/3", exact13, 0.0));
    out.push_back(make_check("assembly routes agree for general t", routes, 1e-14));
    out.push_back(make_check("closed-form eigenvector residuals (interior)", evres, 1e-10));
    out.push_back(make_check("per-level rank-4 spanning", rank_fail, 0.0));

    // dense eigensolve oracle vs block eigenvalues, with boundary filtering
    // and cluster averaging (defective blocks split at sqrt(eps))
    double ev_match = 0, ev_complete = 0;
    int count_fail = 0;
    for (const auto& label : dirac_grid()) {
        RepTruncation rep = build_truncation(label, N);
        for (double t : ts) {
            DiracMatrix dt = build_dirac(rep, t);
            Eigensystem es = sparse_block_eig(dt.matrix);
            auto clusters = filtered_cluster_means(rep, es);
            auto predicted = dt_block_eigenvalues(label, t);
            std::size_t accepted_total = 0;
            for (const auto& [z, count] : clusters) {
                accepted_total += count;
                double best = std::numeric_limits<double>::infinity();
                for (const auto& p : predicted) best = std::min(best, std::abs(z - p));
                ev_match = std::max(ev_match, best);
            }
            for (const auto& p : predicted) {
                double best = std::numeric_limits<double>::infinity();
                for (const auto& [z, count] : clusters) best = std::min(best, std::abs(z - p));
                ev_complete = std::max(ev_complete, best);
            }
            std::size_t floor_expected = 4 * (rep.dim - 6);
            if (label.kind == IrrepLabel::Kind::S) floor_expected = 4 * (rep.dim - 10);
            if (accepted_total < floor_expected) ++count_fail;
        }
    }
    out.push_back(make_check("filtered dense eigenvalues match block formulas", ev_match, 1e-8));
    out.push_back(make_check("every block eigenvalue appears in the eigensolve", ev_complete, 1e-8));
    out.push_back(make_check("filtered eigenvalue count covers the interior", count_fail, 0.0));

    // point-spectrum symmetry at t = 1/3
    double sym = 0;
    for (const auto& label : dirac_grid()) {
        RepTruncation rep = build_truncation(label, N);
        DiracMatrix d13 = build_dirac(rep, 1.0 / 3.0);
        auto accepted = filter_spurious(rep, sparse_block_eig(d13.matrix));
        for (const auto& z : accepted) {
            double best = std::numeric_limits<double>::infinity();
            for (const auto& w : accepted) best = std::min(best, std::abs(z + w));
            sym = std::max(sym, best);
        }
    }
    out.push_back(make_check("filtered spectrum symmetric under negation at t = 1/3", sym, 1e-8));

    // 2x2 invariant blocks for c > 0 reproduce the D^t matrices
    double block_res = 0;
    {
        for (double c : {1.0, 2.5})
            for (double d : {0.25 / kPi, 0.5}) {
                IrrepLabel label = IrrepLabel::F(c, d);
                RepTruncation rep = build_truncation(label, N);
                double lambda = -casimir_value(label);
                complexd sl = sqrt_signed(lambda);
                auto family = closed_form_eigenvectors(rep);
                for (double t : ts) {
                    DiracMatrix dt = build_dirac(rep, t);
                    for (int n : {0, 2, N / 2}) {
                        for (int branch : {0, 1}) {
                            const CVec *vp = nullptr, *vm = nullptr;
                            for (const auto& v : family)
                                if (v.n == n && v.branch == branch) {
                                    if (v.sign > 0) vp = &v.vector;
                                    if (v.sign < 0) vm = &v.vector;
                                }
                            if (!vp || !vm) continue;
                            CMat basis(vp->size(), 2);
                            basis.col(0) = *vp;
                            basis.col(1) = *vm;
                            CMat img = dt.matrix * basis;
                            CMat coeff = (basis.adjoint() * basis).ldlt().solve(basis.adjoint() * img);
                            double leak = (img - basis * coeff).norm() / img.norm();
                            complexd b = (branch == 0 ? 1.0 : -1.0) * (3 * t - 1) *
                                         sqrt_signed(kPi * c / (8 * kPi * d + 2));
                            CMat expect(2, 2);
                            expect << sl + b, b, -b, -(sl + b);
                            block_res = std::max({block_res, leak, (coeff - expect).cwiseAbs().maxCoeff()});
                        }
                    }
                }
            }
    }
    out.push_back(make_check("2x2 invariant blocks match the D^t matrices (c>0)", block_res, 1e-10));

    // projections: completeness and norm growth
    {
        RepTruncation rep = build_truncation(IrrepLabel::F(1.0, 0.25 / kPi), std::max(N, 64));
        DiracMatrix d13 = build_dirac(rep, 1.0 / 3.0);
        double lambda = -casimir_value(rep.label);
        complexd sl = sqrt_signed(lambda);
        CMat id = CMat::Identity(d13.matrix.rows(), d13.matrix.cols());
        CMat sum = (d13.matrix + sl * id) / (2.0 * sl) + (-d13.matrix + sl * id) / (2.0 * sl);
        out.push_back(make_check("P+ + P- = Id", (sum - id).cwiseAbs().maxCoeff(), 1e-10));

        auto ratios = projection_norm_growth(rep, 60);
        bool increasing = true;
        for (std::size_t i = 1; i + 1 < ratios.size(); ++i)
            if (ratios[i + 1] <= ratios[i]) increasing = false;
        out.push_back(make_check("projection norm ratios strictly increasing", increasing ? 0.0 : 1.0, 0.0));
        double expo = projection_growth_exponent(ratios, 4, 60);
        out.push_back(make_check("projection growth exponent in [0.4, 0.6] (|dev from 0.5|)",
                                 std::abs(expo - 0.5), 0.1));
    }

    return out;
}

namespace {

// independent integer-arithmetic oracle for the exact norm groups
std::map<std::int64_t, AlphaCounts> integer_norm_buckets(std::int64_t p1, std::int64_t q1, std::int64_t p2,
                                                         std::int64_t q2, double max_a2, std::int64_t box) {
    // norm^2 * (p2 q2 q1^2) = p2^2 q1^2 k^2 + q2^2 (q1 l - p1 k)^2
    std::map<std::int64_t, AlphaCounts> buckets;
    const double denom = static_cast<double>(p2) * q2 * q1 * q1;
    for (std::int64_t k = -box; k <= box; ++k)
        for (std::int64_t l = -box; l <= box; ++l) {
            if (k == 0 && l == 0) continue;
            std::int64_t n2 = p2 * p2 * q1 * q1 * k * k + q2 * q2 * (q1 * l - p1 * k) * (q1 * l - p1 * k);
            if (static_cast<double>(n2) > max_a2 * denom * (1 + 1e-12)) continue;
            auto& c = buckets[n2];
            ++c.alpha;
            bool ke = (k % 2) == 0, le = (l % 2) == 0;
            if (ke && le) ++c.alpha0;
            else if (ke && !le) ++c.alpha1;
            else if (!ke && !le) ++c.alpha2;
        }
    return buckets;
}

std::vector<SpinStructure> valid_spins(const LatticeParams& l, bool skip_unnormalized = true) {
    std::vector<SpinStructure> out;
    for (int e1 = 0; e1 < 2; ++e1)
        for (int e2 = 0; e2 < 2; ++e2)
            for (int e3 = 0; e3 < 2; ++e3)
                for (int e4 = 0; e4 < 2; ++e4) {
                    SpinStructure s{e1, e2, e3, e4};
                    if (!s.valid_for(l)) continue;
                    if (skip_unnormalized && e1 == 1 && e2 == 0) continue;
                    out.push_back(s);
                }
    return out;
}

}  // namespace

std::vector<Check> verify_lattice() {
    std::vector<Check> out;

    // alpha counts against the integer-arithmetic oracle, a^2 <= 1e4 at (0,1)
    // and smaller windows at other rational (mu, nu)
    struct RationalCase {
        std::int64_t p1, q1, p2, q2;
        double max_a2;
    };
    std::vector<RationalCase> cases = {{0, 1, 1, 1, 1e4}, {1, 2, 1, 1, 400}, {0, 1, 2, 1, 400}, {1, 3, 2, 3, 200}};
    int mismatches = 0;
    for (const auto& rc : cases) {
        LatticeParams l = LatticeParams::make_exact(
            1, 1, ScalarInput::from_rational(Rational(rc.p1, rc.q1)),
            ScalarInput::from_rational(Rational(rc.p2, rc.q2)));
        NormGroups groups = norm_groups(l, rc.max_a2);
        auto box = static_cast<std::int64_t>(std::sqrt(rc.max_a2 / l.nu.value) * (1 + std::abs(l.mu.value)) + 2 +
                                             std::sqrt(rc.max_a2 * l.nu.value));
        auto oracle = integer_norm_buckets(rc.p1, rc.q1, rc.p2, rc.q2, rc.max_a2, box);
        const double denom = static_cast<double>(rc.p2) * rc.q2 * rc.q1 * rc.q1;
        if (groups.groups.size() != oracle.size()) ++mismatches;
        auto it = oracle.begin();
        for (std::size_t i = 0; i < groups.groups.size() && it != oracle.end(); ++i, ++it) {
            const auto& g = groups.groups[i];
            if (std::abs(g.a_squared - static_cast<double>(it->first) / denom) > 1e-9) ++mismatches;
            if (g.counts.alpha != it->second.alpha || g.counts.alpha0 != it->second.alpha0 ||
                g.counts.alpha1 != it->second.alpha1 || g.counts.alpha2 != it->second.alpha2)
                ++mismatches;
        }
    }
    out.push_back(make_check("alpha counts match the integer-arithmetic oracle", mismatches, 0.0));

    // two-square law at (mu,nu) = (0,1), all a^2 <= 1e4
    {
        LatticeParams l = LatticeParams::make_exact(1, 1, ScalarInput::from_rational(Rational(0)),
                                                    ScalarInput::from_rational(Rational(1)));
        NormGroups groups = norm_groups(l, 1e4);
        std::set<std::int64_t> present;
        for (const auto& g : groups.groups)
            present.insert(static_cast<std::int64_t>(std::llround(g.a_squared)));
        int bad = 0;
        for (std::int64_t s = 1; s <= 10000; ++s) {
            std::int64_t m = s;
            bool representable = true;
            for (std::int64_t p = 2; p * p <= m; ++p) {
                if (m % p) continue;
                int e = 0;
                while (m % p == 0) {
                    m /= p;
                    ++e;
                }
                if (p % 4 == 3 && e % 2 == 1) representable = false;
            }
            if (m > 1 && m % 4 == 3) representable = false;
            if (representable != (present.count(s) > 0)) ++bad;
        }
        out.push_back(make_check("two-square criterion matches A(0,1) for a^2 <= 1e4", bad, 0.0));

        // parity identity alpha_0(a) = alpha(a/2)
        int parity_bad = 0;
        for (const auto& g : groups.groups) {
            if (g.a_squared > 400) break;
            Rational quarter = *g.a_squared_exact / Rational(4);
            AlphaCounts half = alpha_counts_exact(l, quarter);
            if (g.counts.alpha0 != half.alpha) ++parity_bad;
        }
        out.push_back(make_check("alpha_0(mu,nu,a) = alpha(mu,nu,a/2)", parity_bad, 0.0));
    }

    // route (a) = route (b) over the verification grid
    {
        int failures = 0;
        std::vector<std::pair<double, double>> munu = {{0, 1}, {0.5, 1}, {0, 2}};
        for (int r = 1; r <= 3; ++r)
            for (int kappa = 1; kappa <= 3; ++kappa)
                for (auto [mu, nu] : munu) {
                    LatticeParams l = LatticeParams::make_exact(
                        r, kappa, ScalarInput::from_rational(Rational(std::llround(mu * 2), 2)),
                        ScalarInput::from_rational(Rational(std::llround(nu), 1)));
                    for (const auto& eps : valid_spins(l)) {
                        try {
                            casimir_spectrum(l, eps, 100 * l.beta());
                        } catch (const RouteConsistencyError&) {
                            ++failures;
                        }
                    }
                }
        out.push_back(make_check("table route equals multiplicity route on the grid", failures, 0.0));
    }

    // isometry invariance of the S-part under (mu,nu) -> -(mu+i nu)^{-1}:
    // the unused parity class (k odd, l even) of the original form carries the
    // alpha_1 counts of the normalized form.
    {
        int bad = 0;
        std::vector<std::pair<double, double>> munu = {{0, 1}, {0.5, 1}, {0, 2}};
        for (auto [mu, nu] : munu) {
            LatticeParams l = LatticeParams::make_exact(
                1, 1, ScalarInput::from_rational(Rational(std::llround(mu * 2), 2)),
                ScalarInput::from_rational(Rational(std::llround(nu), 1)));
            auto [lp, eps2] = normalize_spin(l, SpinStructure{1, 0, 0, 0});
            NormGroups orig = norm_groups(l, 60.0);
            NormGroups primed = norm_groups(lp, 60.0);
            std::map<std::int64_t, int> oe, a1;
            for (const auto& g : orig.groups) {
                int odd_even = g.counts.alpha - g.counts.alpha0 - g.counts.alpha1 - g.counts.alpha2;
                if (odd_even) oe[std::llround(g.a_squared * 720720)] += odd_even;
            }
            for (const auto& g : primed.groups)
                if (g.counts.alpha1) a1[std::llround(g.a_squared * 720720)] += g.counts.alpha1;
            if (oe != a1) ++bad;
        }
        out.push_back(make_check("normalize_spin preserves the spectrum (S-part correspondence)", bad, 0.0));
    }

    // symmetry classification vs direct negation-closure of the support
    {
        int bad = 0;
        std::vector<std::pair<double, double>> munu = {{0, 1}, {0.5, 1}};
        for (int r = 1; r <= 3; ++r)
            for (int kappa = 1; kappa <= 3; ++kappa)
                for (auto [mu, nu] : munu) {
                    LatticeParams l = LatticeParams::make_exact(
                        r, kappa, ScalarInput::from_rational(Rational(std::llround(mu * 2), 2)),
                        ScalarInput::from_rational(Rational(std::llround(nu), 1)));
                    double cutoff = 100 * l.beta();
                    for (const auto& eps : valid_spins(l)) {
                        auto support = casimir_support_table(l, eps, cutoff);
                        bool has_zero = false, symmetric = true;
                        for (double v : support) {
                            if (std::abs(v) < 1e-9) has_zero = true;
                            bool mirrored = false;
                            for (double w : support)
                                if (std::abs(v + w) <= 1e-9 * std::max(1.0, std::abs(v))) mirrored = true;
                            if (!mirrored) symmetric = false;
                        }
                        SymmetryClass want = symmetric
                                                 ? (has_zero ? SymmetryClass::SymmetricWithZero
                                                             : SymmetryClass::SymmetricWithoutZero)
                                                 : SymmetryClass::Asymmetric;
                        if (symmetry_check(l, eps) != want) ++bad;
                    }
                }
        out.push_back(make_check("symmetry_check matches negation-closure of the support", bad, 0.0));
    }

    // squaring: {z^2 : z in spec_p(D^{1/3})} = spec_p(-Omega), compared on a
    // window whose edge avoids all support points
    {
        int bad = 0;
        LatticeParams l = LatticeParams::make_exact(2, 1, ScalarInput::from_rational(Rational(0)),
                                                    ScalarInput::from_rational(Rational(1)));
        for (const auto& eps : valid_spins(l)) {
            double cutoff = 40 * l.beta();
            double window = 35.5 * l.beta();
            auto casimir = casimir_spectrum(l, eps, cutoff);
            auto dirac = dirac_point_spectrum(l, eps, 1.0 / 3.0, std::sqrt(cutoff));
            std::set<std::int64_t> sq, cs;
            for (const auto& line : dirac) {
                complexd z2 = line.eigenvalue * line.eigenvalue;
                if (std::abs(z2.real()) <= window) sq.insert(std::llround(z2.real() * 1e6));
            }
            for (const auto& line : casimir)
                if (std::abs(line.eigenvalue.real()) <= window)
                    cs.insert(std::llround(line.eigenvalue.real() * 1e6));
            for (auto v : sq)
                if (!cs.count(v)) ++bad;
            for (auto v : cs)
                if (!sq.count(v)) ++bad;
        }
        out.push_back(make_check("dirac point spectrum squares onto spec(-Omega)", bad, 0.0));
    }

    // shifted lattices: convergent eigenvalues for utilde = sqrt(2)
    {
        LatticeParams l = LatticeParams::make_exact(1, 1, ScalarInput::from_rational(Rational(0)),
                                                    ScalarInput::from_rational(Rational(1)));
        SpinStructure eps{0, 0, 0, 1};  // eps4 = kappa mod 2
        auto res = shifted_spectrum(l, eps, parse_scalar("sqrt2"), 10);
        const double beta = l.beta();
        const double sqrt2 = std::sqrt(2.0);
        double conv_err = 0;
        auto expect = [&](std::int64_t m, std::int64_t n) {
            return -4.0 * beta * static_cast<double>(m) * (static_cast<double>(n) - sqrt2 * m);
        };
        bool found23 = false, found1217 = false;
        for (const auto& cvg : res.convergents) {
            if (cvg.m == 2 && cvg.n == 3) {
                found23 = true;
                conv_err = std::max(conv_err, std::abs(cvg.value - expect(2, 3)));
            }
            if (cvg.m == 12 && cvg.n == 17) {
                found1217 = true;
                conv_err = std::max(conv_err, std::abs(cvg.value - expect(12, 17)));
            }
        }
        out.push_back(make_check("sqrt2 convergents (2,3), (12,17) present", (found23 && found1217) ? 0 : 1, 0.0));
        out.push_back(make_check("convergent eigenvalues match the closed form", conv_err, 1e-9));
        auto window = shifted_values_in_window(l, eps, parse_scalar("sqrt2"), -8 * beta, 0.0, 3000);
        out.push_back(make_check("at least 10 distinct eigenvalues in [-8 beta, 0)",
                                 window.size() >= 10 ? 0.0 : 1.0, 0.0));
        auto rat = shifted_spectrum(l, eps, parse_scalar("1/2"), 4);
        out.push_back(make_check("rational utilde raises the warning", rat.rational_warning ? 0.0 : 1.0, 0.0));
    }

    return out;
}

std::vector<Check> verify_theta(unsigned seed) {
    std::vector<Check> out;
    auto points = theta_sample_points(50, seed);

    double stability = 0, deck = 0, gamma_gen = 0;
    double cond_worst = 0;
    for (int rp : {2, 4})
        for (int kp : {2, 4})
            for (auto [mu, nu] : std::vector<std::pair<double, double>>{{0, 1}, {0.5, 1}}) {
                ThetaParams p{rp, kp, mu, nu};
                for (int m : {1, -1, 2, -2}) {
                    int J = theta_truncation(p, m);
                    for (int k = 0; k < p.r_prime * std::abs(m); ++k)
                        for (const auto& g : {points[0], points[1], points[2]}) {
                            complexd v1 = eval_theta({m, 1, k, J}, g, p);
                            complexd v2 = eval_theta({m, 1, k, 2 * J}, g, p);
                            stability = std::max(stability, std::abs(v1 - v2));
                        }
                    cond_worst = std::max(cond_worst, theta_independence_condition(p, m, 0, seed + m + 17));
                }
                DeckReport rep = verify_deck_actions(p, points, {1, -1, 2, -2}, {0, 1, 3}, 1e-8);
                deck = std::max(deck, rep.worst());

                // gamma generators agree with phi(F_S(l_i)) for the lattice generators
                LatticeParams lat = LatticeParams::make(2, kp / 2, mu, nu);
                double sqnu = std::sqrt(nu);
                OscElement l1{complexd(1.0 / sqnu, 0), 0, 0}, l2{complexd(-mu / sqnu, sqnu), 0, 0};
                Automorphism half = Automorphism::scaling(0.5);
                OscMElement g1 = phi_iso(half.apply(l1)), g2 = phi_iso(half.apply(l2));
                gamma_gen = std::max(gamma_gen, dist(g1, deck_generator(p, 1)));
                gamma_gen = std::max(gamma_gen, dist(g2, deck_generator(p, 2)));
            }
    out.push_back(make_check("series stable under doubling the truncation", stability, 1e-10));
    out.push_back(make_check("deck identities (gph),(gPh),(gth) residuals", deck, 1e-8));
    out.push_back(make_check("theta family numerically independent (condition)", cond_worst, 1e8));
    out.push_back(make_check("deck generators equal phi(F_S(lattice generators))", gamma_gen, 1e-12));

    return out;
}

std::vector<Check> verify_suite(const std::string& suite, int trunc, unsigned seed) {
    if (suite == "group") return verify_group(seed);
    if (suite == "clifford") return verify_clifford();
    if (suite == "reps") return verify_reps(trunc);
    if (suite == "dirac") return verify_dirac(trunc);
    if (suite == "lattice") return verify_lattice();
    if (suite == "theta") return verify_theta(seed);
    if (suite == "all") {
        std::vector<Check> out;
        for (const char* s : {"group", "clifford", "reps", "dirac", "lattice", "theta"}) {
            auto part = verify_suite(s, trunc, seed);
            for (auto& c : part) c.name = std::string(s) + ": " + c.name;
            out.insert(out.end(), part.begin(), part.end());
        }
        return out;
    }
    throw std::invalid_argument("unknown suite: " + suite);
}

}  // namespace oscdirac
