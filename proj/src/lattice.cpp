#include "oscdirac/lattice.hpp"

#include <algorithm>
#include <cmath>
#include <set>

#include "oscdirac/parallel.hpp"

namespace oscdirac {

LatticeParams LatticeParams::make(int r, int kappa, double mu, double nu) {
    return make_exact(r, kappa, ScalarInput::from_double(mu), ScalarInput::from_double(nu));
}

LatticeParams LatticeParams::make_exact(int r, int kappa, const ScalarInput& mu, const ScalarInput& nu) {
    if (r < 1 || kappa < 1) throw std::invalid_argument("lattice: r and kappa must be positive integers");
    if (!(nu.value > 0)) throw std::invalid_argument("lattice: nu must be positive");
    LatticeParams l;
    l.r = r;
    l.kappa = kappa;
    l.mu = mu;
    l.nu = nu;
    return l;
}

SpinStructure SpinStructure::parse(const std::string& bits) {
    if (bits.size() != 4 || bits.find_first_not_of("01") != std::string::npos)
        throw std::invalid_argument("spin structure: expected four bits, e.g. 0101");
    return {bits[0] - '0', bits[1] - '0', bits[2] - '0', bits[3] - '0'};
}

std::string SpinStructure::str() const {
    std::string s;
    for (int b : {e1, e2, e3, e4}) s += static_cast<char>('0' + b);
    return s;
}

double norm_form(const LatticeParams& l, std::int64_t k, std::int64_t ell) {
    double mu = l.mu.value, nu = l.nu.value;
    double w = -mu * static_cast<double>(k) + static_cast<double>(ell);
    return std::sqrt(nu * static_cast<double>(k) * static_cast<double>(k) + w * w / nu);
}

Eigen::Matrix2d tmunu(const LatticeParams& l) {
    double mu = l.mu.value, nu = l.nu.value;
    double s = std::sqrt(nu);
    Eigen::Matrix2d t;
    t << s, mu / s, 0.0, 1.0 / s;
    return t;
}

namespace {

struct Box {
    std::int64_t kmax;
    std::int64_t lmax;  // at k = 0; actual l bound grows with |k|
    double mu_abs;
};

// Enumeration bound: points with |(k,l)| <= a satisfy |k| <= a/sqrt(nu)(1+|mu|)+1
// and |l| <= a sqrt(nu) + |mu||k| + 1.
Box enum_box(const LatticeParams& l, double a) {
    double nu = l.nu.value, mu = std::abs(l.mu.value);
    Box b;
    b.kmax = static_cast<std::int64_t>(std::floor(a / std::sqrt(nu) * (1.0 + mu) + 1.0));
    b.lmax = static_cast<std::int64_t>(std::floor(a * std::sqrt(nu) + 1.0));
    b.mu_abs = mu;
    double total = (2.0 * b.kmax + 1) * (2.0 * (b.lmax + mu * b.kmax + 1) + 1);
    if (total > 5e8) throw std::overflow_error("lattice enumeration: radius bound overflows");
    return b;
}

void tally(AlphaCounts& c, std::int64_t k, std::int64_t ell) {
    ++c.alpha;
    bool ke = (k % 2) == 0, le = (ell % 2) == 0;
    if (ke && le) ++c.alpha0;
    else if (ke && !le) ++c.alpha1;
    else if (!ke && !le) ++c.alpha2;
    // k odd, l even belongs to no alpha_j class
}

// Exact squared norm: nu k^2 + (l - mu k)^2 / nu for rational mu, nu.
Rational norm_squared_exact(const Rational& mu, const Rational& nu, std::int64_t k, std::int64_t ell) {
    Rational rk(k), rl(ell);
    Rational w = rl - mu * rk;
    return nu * rk * rk + (w * w) / nu;
}

}  // namespace

NormGroups norm_groups(const LatticeParams& l, double max_a_squared) {
    NormGroups out;
    if (max_a_squared <= 0) return out;
    const double a = std::sqrt(max_a_squared);
    const Box box = enum_box(l, a);

    if (l.exact_rational_form()) {
        const Rational mu = *l.mu.coef, nu = *l.nu.coef;
        const Rational bound = [&] {
            // smallest rational >= max_a_squared with modest denominator
            return Rational(static_cast<std::int64_t>(std::ceil(max_a_squared * 1024)), 1024);
        }();
        std::map<Rational, AlphaCounts> acc;
        for (std::int64_t k = -box.kmax; k <= box.kmax; ++k) {
            std::int64_t lbound = box.lmax + static_cast<std::int64_t>(std::ceil(box.mu_abs * std::abs(k))) + 1;
            for (std::int64_t ell = -lbound; ell <= lbound; ++ell) {
                if (k == 0 && ell == 0) continue;
                Rational q = norm_squared_exact(mu, nu, k, ell);
                if (bound < q) continue;
                if (q.value() > max_a_squared) continue;  // exact values still filtered by the caller's cutoff
                tally(acc[q], k, ell);
            }
        }
        out.exact = true;
        for (auto& [q, counts] : acc) {
            NormGroup g;
            g.a_squared = q.value();
            g.a_squared_exact = q;
            g.counts = counts;
            out.groups.push_back(std::move(g));
        }
        return out;
    }

    // float path: sort and group with relative tolerance 1e-9; the k-columns
    // are independent, so the box enumeration parallelizes over them
    std::vector<std::vector<std::pair<double, std::pair<std::int64_t, std::int64_t>>>> columns(2 * box.kmax + 1);
    parallel_for(columns.size(), [&](std::size_t idx) {
        std::int64_t k = static_cast<std::int64_t>(idx) - box.kmax;
        std::int64_t lbound = box.lmax + static_cast<std::int64_t>(std::ceil(box.mu_abs * std::abs(k))) + 1;
        for (std::int64_t ell = -lbound; ell <= lbound; ++ell) {
            if (k == 0 && ell == 0) continue;
            double n = norm_form(l, k, ell);
            double q = n * n;
            if (q <= max_a_squared * (1 + 1e-12)) columns[idx].push_back({q, {k, ell}});
        }
    });
    std::vector<std::pair<double, std::pair<std::int64_t, std::int64_t>>> pts;
    for (auto& col : columns) pts.insert(pts.end(), col.begin(), col.end());
    std::sort(pts.begin(), pts.end(), [](auto& x, auto& y) { return x.first < y.first; });
    out.exact = false;
    for (std::size_t i = 0; i < pts.size();) {
        NormGroup g;
        g.a_squared = pts[i].first;
        std::size_t j = i;
        while (j < pts.size() && pts[j].first - g.a_squared <= 1e-9 * std::max(1.0, g.a_squared)) {
            tally(g.counts, pts[j].second.first, pts[j].second.second);
            ++j;
        }
        out.groups.push_back(std::move(g));
        i = j;
    }
    return out;
}

AlphaCounts alpha_counts_exact(const LatticeParams& l, const Rational& a_squared) {
    if (!l.exact_rational_form())
        throw std::invalid_argument("alpha_counts_exact: rational mu, nu required");
    if (!(a_squared.value() > 0)) throw std::invalid_argument("alpha_counts_exact: a^2 must be positive");
    const Rational mu = *l.mu.coef, nu = *l.nu.coef;
    const Box box = enum_box(l, std::sqrt(a_squared.value()));
    AlphaCounts counts;
    for (std::int64_t k = -box.kmax; k <= box.kmax; ++k) {
        std::int64_t lbound = box.lmax + static_cast<std::int64_t>(std::ceil(box.mu_abs * std::abs(k))) + 1;
        for (std::int64_t ell = -lbound; ell <= lbound; ++ell) {
            if (k == 0 && ell == 0) continue;
            if (norm_squared_exact(mu, nu, k, ell) == a_squared) tally(counts, k, ell);
        }
    }
    return counts;
}

AlphaCounts alpha_counts(const LatticeParams& l, double a, double tol) {
    if (!(a > 0)) throw std::invalid_argument("alpha_counts: a must be positive");
    if (tol < 0) throw std::invalid_argument("alpha_counts: tol must be nonnegative");

    if (tol == 0.0 && l.exact_rational_form()) {
        // rational fast path: match a^2 to an exact norm group
        NormGroups groups = norm_groups(l, a * a * (1 + 1e-9) + 1e-12);
        for (const auto& g : groups.groups)
            if (std::abs(g.a_squared - a * a) <= 1e-9 * std::max(1.0, a * a)) return g.counts;
        return {};
    }

    const Box box = enum_box(l, a + tol);
    AlphaCounts counts;
    for (std::int64_t k = -box.kmax; k <= box.kmax; ++k) {
        std::int64_t lbound = box.lmax + static_cast<std::int64_t>(std::ceil(box.mu_abs * std::abs(k))) + 1;
        for (std::int64_t ell = -lbound; ell <= lbound; ++ell) {
            if (k == 0 && ell == 0) continue;
            if (std::abs(norm_form(l, k, ell) - a) <= tol) tally(counts, k, ell);
        }
    }
    return counts;
}

SpectralSets spectral_sets(const LatticeParams& l, double cutoff) {
    if (!(cutoff > 0)) throw std::invalid_argument("spectral_sets: cutoff must be positive");
    NormGroups groups = norm_groups(l, cutoff / (kPi * kPi));
    SpectralSets out;
    out.exact = groups.exact;
    for (const auto& g : groups.groups) {
        double value = kPi * kPi * g.a_squared;
        if (value > cutoff * (1 + 1e-12)) continue;
        auto add = [&](std::vector<SpectralSets::Entry>& dst, int count) {
            if (count > 0) dst.push_back({value, count, g.a_squared_exact});
        };
        add(out.A, g.counts.alpha);
        add(out.A0, g.counts.alpha0);
        add(out.A1, g.counts.alpha1);
        add(out.A2, g.counts.alpha2);
    }
    return out;
}

namespace {

void require_valid(const LatticeParams& l, const SpinStructure& eps) {
    if (!eps.valid_for(l))
        throw InvalidSpinStructure("spin structure: r*eps3 must vanish mod 2 (eps is not a homomorphism)");
}

int alpha_index(const SpinStructure& eps) {
    if (eps.e1 == 0 && eps.e2 == 0) return 0;
    if (eps.e1 == 0 && eps.e2 == 1) return 1;
    if (eps.e1 == 1 && eps.e2 == 1) return 2;
    return -1;  // (1,0): caller must normalize first
}

int alpha_of(const AlphaCounts& c, int j) {
    switch (j) {
        case 0: return c.alpha0;
        case 1: return c.alpha1;
        case 2: return c.alpha2;
        default: return 0;
    }
}

}  // namespace

long mult_C(const LatticeParams& l, const SpinStructure& eps, std::int64_t n) {
    require_valid(l, eps);
    bool match = eps.e1 == 0 && eps.e2 == 0 && eps.e3 == 0 && ((n % 2 + 2) % 2) == eps.e4;
    return match ? 1 : 0;
}

long mult_S(const LatticeParams& l, const SpinStructure& eps, double a, int bigK) {
    require_valid(l, eps);
    if (bigK < 0 || bigK >= 2 * l.kappa) throw std::invalid_argument("mult_S: K out of range [0, 2 kappa)");
    if (eps.e3 != 0 || (bigK % 2) != eps.e4) return 0;
    int j = alpha_index(eps);
    if (j < 0) throw std::invalid_argument("mult_S: normalize the spin structure first ((1,0) row)");
    AlphaCounts c = alpha_counts(l, a, l.exact_rational_form() ? 0.0 : 1e-9);
    return alpha_of(c, j);
}

long mult_F(const LatticeParams& l, const SpinStructure& eps, std::int64_t m, std::int64_t n) {
    require_valid(l, eps);
    if (m == 0) return 0;
    auto par = [](std::int64_t x) { return static_cast<int>((x % 2 + 2) % 2); };
    if (par(m) != eps.e3 || par(n) != eps.e4) return 0;
    return static_cast<long>(l.r) * std::abs(m) / 2;
}

std::pair<LatticeParams, SpinStructure> normalize_spin(const LatticeParams& l, const SpinStructure& eps) {
    require_valid(l, eps);
    if (!(eps.e1 == 1 && eps.e2 == 0)) return {l, eps};

    SpinStructure eps2{0, 1, eps.e3, eps.e4};
    // mu' + i nu' = -(mu + i nu)^{-1}
    const ScalarInput& mu = l.mu;
    const ScalarInput& nu = l.nu;
    LatticeParams out = l;
    bool exact_done = false;
    if (mu.exact() && nu.exact()) {
        // denominators stay in the same quadratic field when the radicands agree
        auto sq = [](const ScalarInput& s) {
            return *s.coef * *s.coef * Rational(s.radicand);
        };
        if (mu.radicand == nu.radicand || mu.coef->is_zero() || nu.coef->is_zero()) {
            Rational denom = sq(mu) + sq(nu);
            out.mu = ScalarInput::from_surd(-(*mu.coef) / denom, mu.radicand);
            out.nu = ScalarInput::from_surd(*nu.coef / denom, nu.radicand);
            exact_done = true;
        } else if (mu.exact_rational()) {
            Rational denom = sq(mu) + sq(nu);
            out.mu = ScalarInput::from_rational(-(*mu.coef) / denom);
            out.nu = ScalarInput::from_surd(*nu.coef / denom, nu.radicand);
            exact_done = true;
        } else if (nu.exact_rational()) {
            Rational denom = sq(mu) + sq(nu);
            out.mu = ScalarInput::from_surd(-(*mu.coef) / denom, mu.radicand);
            out.nu = ScalarInput::from_rational(*nu.coef / denom);
            exact_done = true;
        }
    }
    if (!exact_done) {
        double denom = mu.value * mu.value + nu.value * nu.value;
        out.mu = ScalarInput::from_double(-mu.value / denom);
        out.nu = ScalarInput::from_double(nu.value / denom);
    }
    return {out, eps2};
}

namespace {

struct LineAcc {
    long mult = 0;
    bool infinite = false;
    std::vector<IrrepLabel> sources;

    void add_source(const IrrepLabel& l, std::size_t cap = 24) {
        if (sources.size() < cap) sources.push_back(l);
    }
};

constexpr std::size_t kInfiniteSourceCap = 6;

}  // namespace

std::vector<SpectralLine> casimir_spectrum(const LatticeParams& l, const SpinStructure& eps, double cutoff) {
    require_valid(l, eps);
    if (eps.e1 == 1 && eps.e2 == 0)
        throw std::invalid_argument("casimir_spectrum: apply normalize_spin first ((1,0) row)");
    if (!(cutoff > 0)) throw std::invalid_argument("casimir_spectrum: cutoff must be positive");

    const double beta = l.beta();
    const double fourpik = 4 * kPi * l.kappa;

    // route (b): aggregate eigenvalues bottom-up from the summand multiplicities
    std::map<std::int64_t, LineAcc> flines;  // key q: eigenvalue beta*q (F- and C-type)
    const int key2 = (eps.e4 + l.kappa) % 2;

    if (eps.e1 == 0 && eps.e2 == 0 && eps.e3 == 0) {
        auto& acc = flines[0];
        acc.infinite = true;
        for (std::int64_t n = eps.e4, cnt = 0; cnt < 3; n += 2, ++cnt)
            acc.add_source(IrrepLabel::C(static_cast<double>(n) / fourpik), kInfiniteSourceCap);
    }

    const auto qmax = static_cast<std::int64_t>(std::floor(cutoff / beta * (1 + 1e-12)));
    for (std::int64_t mabs = 1; mabs <= std::max<std::int64_t>(qmax, 2); ++mabs) {
        if (mabs % 2 != eps.e3) continue;
        for (int sgn : {+1, -1}) {
            std::int64_t m = sgn * mabs;
            // q = 0 family: infinitely many m share the eigenvalue 0
            if (key2 == 0) {
                auto& acc = flines[0];
                acc.infinite = true;
                if (mabs <= 4) {
                    std::int64_t n = (m > 0) ? -l.kappa : l.kappa;
                    acc.add_source(IrrepLabel::F(0.5 * l.r * m, static_cast<double>(n) / fourpik),
                                   kInfiniteSourceCap);
                }
            }
            if (mabs > qmax) continue;
            std::int64_t qbound = qmax / mabs;
            for (std::int64_t q = -qbound; q <= qbound; ++q) {
                if (q == 0 || (((q % 2) + 2) % 2) != key2) continue;
                std::int64_t n = (m > 0) ? q - l.kappa : q + l.kappa;
                auto& acc = flines[m * q];
                acc.mult += static_cast<long>(l.r) * mabs / 2;
                acc.add_source(IrrepLabel::F(0.5 * l.r * m, static_cast<double>(n) / fourpik));
            }
        }
    }

    // S-type contributions at pi^2 a^2
    struct SLine {
        double value;
        LineAcc acc;
        std::optional<Rational> exact;
    };
    std::vector<SLine> slines;
    int j = alpha_index(eps);
    if (eps.e3 == 0 && j >= 0) {
        NormGroups groups = norm_groups(l, cutoff / (kPi * kPi));
        for (const auto& g : groups.groups) {
            int aj = alpha_of(g.counts, j);
            double value = kPi * kPi * g.a_squared;
            if (aj == 0 || value > cutoff * (1 + 1e-12)) continue;
            SLine s;
            s.value = value;
            s.exact = g.a_squared_exact;
            const double a = std::sqrt(g.a_squared);
            for (int bigK = eps.e4; bigK < 2 * l.kappa; bigK += 2) {
                s.acc.mult += aj;
                s.acc.add_source(IrrepLabel::S(0.5 * a, static_cast<double>(bigK) / (2.0 * l.kappa)));
            }
            slines.push_back(std::move(s));
        }
    }

    // emit
    std::vector<SpectralLine> lines;
    for (auto& [q, acc] : flines) {
        double value = beta * static_cast<double>(q);
        if (std::abs(value) > cutoff * (1 + 1e-12)) continue;
        if (acc.mult == 0 && !acc.infinite) continue;
        SpectralLine line;
        line.eigenvalue = complexd(value, 0);
        line.multiplicity = 4 * acc.mult;
        line.infinite_family = acc.infinite;
        line.sources = std::move(acc.sources);
        lines.push_back(std::move(line));
    }
    for (auto& s : slines) {
        SpectralLine line;
        line.eigenvalue = complexd(s.value, 0);
        line.multiplicity = 4 * s.acc.mult;
        line.sources = std::move(s.acc.sources);
        lines.push_back(std::move(line));
    }
    std::sort(lines.begin(), lines.end(),
              [](const SpectralLine& x, const SpectralLine& y) { return x.eigenvalue.real() < y.eigenvalue.real(); });

    // route (a) cross-check: supports must agree
    std::vector<double> table = casimir_support_table(l, eps, cutoff);
    if (table.size() != lines.size())
        throw RouteConsistencyError("casimir_spectrum: table support size " + std::to_string(table.size()) +
                                    " != multiplicity route size " + std::to_string(lines.size()));
    for (std::size_t i = 0; i < table.size(); ++i)
        if (std::abs(table[i] - lines[i].eigenvalue.real()) > 1e-9 * std::max(1.0, std::abs(table[i])))
            throw RouteConsistencyError("casimir_spectrum: route mismatch near eigenvalue " +
                                        std::to_string(table[i]));
    return lines;
}

std::vector<double> casimir_support_table(const LatticeParams& l, const SpinStructure& eps, double cutoff) {
    require_valid(l, eps);
    if (eps.e1 == 1 && eps.e2 == 0)
        throw std::invalid_argument("casimir_support_table: apply normalize_spin first");
    const double beta = l.beta();
    const int key2 = (eps.e4 + l.kappa) % 2;
    std::set<std::int64_t> qs;
    const auto qmax = static_cast<std::int64_t>(std::floor(cutoff / beta * (1 + 1e-12)));

    if (eps.e3 == 1) {
        // columns (1,0): 2 beta Z; (1,1): beta (2Z+1)
        for (std::int64_t q = -qmax; q <= qmax; ++q)
            if ((((q % 2) + 2) % 2) == key2) qs.insert(q);
    } else {
        if (key2 == 0) {
            for (std::int64_t q = -qmax; q <= qmax; ++q)
                if (q % 4 == 0) qs.insert(q);
        } else {
            for (std::int64_t q = -qmax; q <= qmax; ++q)
                if (q != 0 && q % 2 == 0) qs.insert(q);
            if (eps.e1 == 0 && eps.e2 == 0) qs.insert(0);  // the characters contribute 0
        }
    }

    std::vector<double> support;
    for (std::int64_t q : qs) support.push_back(beta * static_cast<double>(q));

    if (eps.e3 == 0) {
        int j = alpha_index(eps);
        SpectralSets sets = spectral_sets(l, cutoff);
        const auto& aj = (j == 0) ? sets.A0 : (j == 1) ? sets.A1 : sets.A2;
        for (const auto& e : aj) {
            bool dup = false;
            for (double v : support)
                if (std::abs(v - e.value) <= 1e-9 * std::max(1.0, std::abs(v))) dup = true;
            if (!dup) support.push_back(e.value);
        }
    }
    std::sort(support.begin(), support.end());
    return support;
}

SymmetryClass symmetry_check(const LatticeParams& l, const SpinStructure& eps) {
    require_valid(l, eps);
    if (eps.e3 == 0) return SymmetryClass::Asymmetric;
    return ((eps.e4 + l.kappa) % 2 == 0) ? SymmetryClass::SymmetricWithZero
                                         : SymmetryClass::SymmetricWithoutZero;
}

const char* symmetry_class_name(SymmetryClass s) {
    switch (s) {
        case SymmetryClass::SymmetricWithZero: return "symmetric_with_zero";
        case SymmetryClass::SymmetricWithoutZero: return "symmetric_without_zero";
        case SymmetryClass::Asymmetric: return "asymmetric";
    }
    return "";
}

namespace {

// Merge a value into a tolerance-keyed accumulator (used for D^t lines whose
// keys are not integer multiples of a common unit).
struct ValueLines {
    struct Item {
        double value;
        LineAcc acc;
    };
    std::vector<Item> items;

    LineAcc& at(double v) {
        for (auto& it : items)
            if (std::abs(it.value - v) <= 1e-12 * std::max(1.0, std::abs(v))) return it.acc;
        items.push_back({v, {}});
        return items.back().acc;
    }
};

}  // namespace

std::vector<SpectralLine> dirac_point_spectrum(const LatticeParams& l, const SpinStructure& eps, double t,
                                               double cutoff) {
    require_valid(l, eps);
    if (eps.e1 == 1 && eps.e2 == 0)
        throw std::invalid_argument("dirac_point_spectrum: apply normalize_spin first");
    if (!(cutoff > 0)) throw std::invalid_argument("dirac_point_spectrum: cutoff must be positive");

    const double beta = l.beta();
    const bool cubic = std::abs(3 * t - 1) < 1e-15;

    std::vector<SpectralLine> lines;
    if (cubic) {
        auto casimir = casimir_spectrum(l, eps, cutoff * cutoff);
        for (const auto& line : casimir) {
            double lambda = line.eigenvalue.real();
            complexd root = sqrt_signed(lambda);
            if (std::abs(root) > cutoff * (1 + 1e-12)) continue;
            if (lambda == 0.0) {
                SpectralLine z = line;
                z.eigenvalue = complexd(0, 0);
                lines.push_back(std::move(z));
                continue;
            }
            for (int sgn : {+1, -1}) {
                SpectralLine z = line;
                z.eigenvalue = double(sgn) * root;
                lines.push_back(std::move(z));
            }
        }
    } else {
        const int key2 = (eps.e4 + l.kappa) % 2;
        const double fourpik = 4 * kPi * l.kappa;
        ValueLines real_axis, imag_axis;
        auto line_at = [&](complexd z) -> LineAcc& {
            return (z.imag() != 0.0) ? imag_axis.at(z.imag()) : real_axis.at(z.real());
        };

        // characters: D^t is nilpotent, eigenvalue 0 only
        if (eps.e1 == 0 && eps.e2 == 0 && eps.e3 == 0) {
            auto& a0 = real_axis.at(0.0);
            a0.infinite = true;
            for (std::int64_t n = eps.e4, cnt = 0; cnt < 3; n += 2, ++cnt)
                a0.add_source(IrrepLabel::C(static_cast<double>(n) / fourpik), kInfiniteSourceCap);
        }

        // S-type: eigenvalues +-2 pi (a/2) = +-pi a, independent of t
        int j = alpha_index(eps);
        if (eps.e3 == 0 && j >= 0) {
            NormGroups groups = norm_groups(l, (cutoff * cutoff) / (kPi * kPi));
            for (const auto& g : groups.groups) {
                int aj = alpha_of(g.counts, j);
                if (aj == 0) continue;
                double a = std::sqrt(g.a_squared);
                if (kPi * a > cutoff * (1 + 1e-12)) continue;
                for (int sgn : {+1, -1}) {
                    auto& la = real_axis.at(sgn * kPi * a);
                    for (int bigK = eps.e4; bigK < 2 * l.kappa; bigK += 2) {
                        la.mult += aj;
                        la.add_source(IrrepLabel::S(0.5 * a, static_cast<double>(bigK) / (2.0 * l.kappa)));
                    }
                }
            }
        }

        // F-type: +-(lambda +- 2 pi c (3t-1))^{1/2} with c = r m / 2 and
        // lambda = beta m q. Both shifted values are beta*m*(q +- kappa(3t-1)),
        // so the value vanishes for every m along q = -+kappa(3t-1) whenever
        // that is an admissible integer: an infinite family at 0.
        const double kap3t = l.kappa * (3 * t - 1);
        const bool kap3t_integer = std::abs(kap3t - std::llround(kap3t)) < 1e-12;
        const std::int64_t mcap = 2'000'000;
        bool terminated = false;
        for (std::int64_t mabs = 1; mabs <= mcap; ++mabs) {
            if (mabs % 2 != eps.e3) continue;
            // smallest achievable |value|^2 for this |m| decides termination
            double min_abs2 = std::numeric_limits<double>::infinity();
            for (int branch : {+1, -1}) {
                double target = -branch * kap3t;
                double q_near = std::round((target - key2) / 2) * 2 + key2;
                for (double q : {q_near - 2, q_near, q_near + 2})
                    if (!(kap3t_integer && std::abs(q + branch * kap3t) < 0.5))
                        min_abs2 = std::min(min_abs2, beta * mabs * std::abs(q + branch * kap3t));
            }
            if (min_abs2 > cutoff * cutoff * (1 + 1e-9) && mabs > 2 && !kap3t_integer) {
                terminated = true;
                break;
            }

            for (int sgn : {+1, -1}) {
                std::int64_t m = sgn * mabs;
                double c = 0.5 * l.r * m;
                auto qbound = static_cast<std::int64_t>(
                                  std::floor(cutoff * cutoff / (beta * mabs) + std::abs(kap3t))) +
                              2;
                for (std::int64_t q = -qbound; q <= qbound; ++q) {
                    if ((((q % 2) + 2) % 2) != key2) continue;
                    std::int64_t n = (m > 0) ? q - l.kappa : q + l.kappa;
                    for (int branch : {+1, -1}) {
                        if (kap3t_integer && std::llround(kap3t) == -branch * q) {
                            // value == 0 for every m in this family
                            auto& a0 = real_axis.at(0.0);
                            a0.infinite = true;
                            if (mabs <= 4)
                                a0.add_source(IrrepLabel::F(c, static_cast<double>(n) / fourpik),
                                              kInfiniteSourceCap);
                            continue;
                        }
                        double inner = beta * static_cast<double>(m) * (static_cast<double>(q) + branch * kap3t);
                        complexd root = sqrt_signed(inner);
                        if (std::abs(root) > cutoff * (1 + 1e-12)) continue;
                        for (int rsgn : {+1, -1}) {
                            auto& la = line_at(double(rsgn) * root);
                            la.mult += static_cast<long>(l.r) * mabs / 2;
                            la.add_source(IrrepLabel::F(c, static_cast<double>(n) / fourpik));
                        }
                    }
                }
            }
            // with an infinite 0-family the values never die out; stop once all
            // nonzero values for this m exceed the cutoff
            if (kap3t_integer && min_abs2 > cutoff * cutoff * (1 + 1e-9) && mabs > 2 * l.kappa + 4) {
                terminated = true;
                break;
            }
        }
        if (!terminated) throw std::overflow_error("dirac_point_spectrum: enumeration bound overflow");

        auto emit = [&](ValueLines& axis, bool imag) {
            for (auto& it : axis.items) {
                SpectralLine line;
                line.eigenvalue = imag ? complexd(0, it.value) : complexd(it.value, 0);
                line.multiplicity = 4 * it.acc.mult;
                line.infinite_family = it.acc.infinite;
                line.sources = std::move(it.acc.sources);
                if (line.multiplicity == 0 && !line.infinite_family) continue;
                lines.push_back(std::move(line));
            }
        };
        emit(real_axis, false);
        emit(imag_axis, true);
    }

    std::sort(lines.begin(), lines.end(), [](const SpectralLine& x, const SpectralLine& y) {
        auto key = [](const SpectralLine& s) {
            return std::make_pair(s.eigenvalue.imag(), s.eigenvalue.real());
        };
        return key(x) < key(y);
    });
    return lines;
}

namespace {

double utilde_value(const ScalarInput& utilde) { return utilde.value; }

}  // namespace

std::vector<double> shifted_values_in_window(const LatticeParams& l, const SpinStructure& eps,
                                             const ScalarInput& utilde, double lo, double hi,
                                             std::int64_t max_m) {
    require_valid(l, eps);
    if (eps.e3 != 0 || (eps.e4 % 2) != (l.kappa % 2))
        throw std::invalid_argument("shifted spectrum: requires eps3 = 0 and eps4 = kappa mod 2");
    const double beta = l.beta();
    const double u = utilde_value(utilde);
    std::vector<double> vals;
    for (std::int64_t m = 1; m <= max_m; ++m) {
        double um = u * static_cast<double>(m);
        auto base = static_cast<std::int64_t>(std::floor(um));
        for (std::int64_t n = base - 1; n <= base + 2; ++n) {
            double v = -4.0 * beta * static_cast<double>(m) * (static_cast<double>(n) - um);
            if (v < lo || v >= hi) continue;
            bool dup = false;
            for (double w : vals)
                if (std::abs(w - v) <= 1e-12 * std::max(1.0, std::abs(w))) dup = true;
            if (!dup) vals.push_back(v);
        }
    }
    std::sort(vals.begin(), vals.end());
    return vals;
}

ShiftedResult shifted_spectrum(const LatticeParams& l, const SpinStructure& eps, const ScalarInput& utilde,
                               int count) {
    require_valid(l, eps);
    if (eps.e3 != 0 || (eps.e4 % 2) != (l.kappa % 2))
        throw std::invalid_argument("shifted spectrum: requires eps3 = 0 and eps4 = kappa mod 2");
    if (count < 1) throw std::invalid_argument("shifted_spectrum: count must be positive");

    ShiftedResult out;
    out.beta = l.beta();
    const double u = utilde_value(utilde);

    // convergents of utilde: exact for surd tokens, floating otherwise
    std::vector<Convergent> conv;
    if (utilde.exact_rational()) {
        out.rational_warning = true;
    } else if (utilde.exact_irrational() && *utilde.coef == Rational(1)) {
        conv = sqrt_convergents(utilde.radicand, 14);
    } else {
        conv = double_convergents(u, 14);
        if (conv.size() < 6) out.rational_warning = true;  // terminated: rational at double precision
    }
    for (const auto& c : conv) {
        double v = -4.0 * out.beta * static_cast<double>(c.q) * (static_cast<double>(c.p) - u * c.q);
        out.convergents.push_back({c.q, c.p, v});
    }

    // distinct eigenvalues closest to zero over an adaptive search region
    std::int64_t max_m = 2048;
    std::vector<double> best;
    for (int attempt = 0; attempt < 6; ++attempt) {
        std::vector<std::pair<double, double>> vals;  // (|v|, v)
        for (std::int64_t m = 1; m <= max_m; ++m) {
            double um = u * static_cast<double>(m);
            auto base = static_cast<std::int64_t>(std::floor(um));
            for (std::int64_t n = base - 1; n <= base + 2; ++n) {
                double v = -4.0 * out.beta * static_cast<double>(m) * (static_cast<double>(n) - um);
                vals.push_back({std::abs(v), v});
            }
        }
        std::sort(vals.begin(), vals.end());
        best.clear();
        for (const auto& [av, v] : vals) {
            bool dup = false;
            for (double w : best)
                if (std::abs(w - v) <= 1e-12 * std::max(1.0, std::abs(w))) dup = true;
            if (!dup) best.push_back(v);
            if (static_cast<int>(best.size()) >= count) break;
        }
        if (static_cast<int>(best.size()) >= count || out.rational_warning) break;
        max_m *= 4;
    }
    out.eigenvalues = std::move(best);
    return out;
}

}  // namespace oscdirac
