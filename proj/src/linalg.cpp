#include "oscdirac/linalg.hpp"

#include <Eigen/Eigenvalues>
#include <Eigen/SVD>
#include <numeric>
#include <stdexcept>

namespace oscdirac {

CMat kron(const CMat& a, const CMat& b) {
    CMat out(a.rows() * b.rows(), a.cols() * b.cols());
    for (Eigen::Index i = 0; i < a.rows(); ++i)
        for (Eigen::Index j = 0; j < a.cols(); ++j)
            out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
    return out;
}

double op_norm(const CMat& a) {
    if (a.size() == 0) return 0.0;
    Eigen::SelfAdjointEigenSolver<CMat> es(a.adjoint() * a, Eigen::EigenvaluesOnly);
    double lmax = es.eigenvalues().maxCoeff();
    return std::sqrt(std::max(0.0, lmax));
}

Eigensystem dense_eig(const CMat& a) {
    Eigen::ComplexEigenSolver<CMat> es(a, true);
    if (es.info() != Eigen::Success) throw std::runtime_error("dense_eig: eigensolver failed");
    return {es.eigenvalues(), es.eigenvectors()};
}

namespace {

struct UnionFind {
    std::vector<int> parent;
    explicit UnionFind(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
    int find(int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    }
    void unite(int x, int y) { parent[find(x)] = find(y); }
};

}  // namespace

std::vector<std::vector<int>> sparsity_components(const CMat& a, double drop_rel_tol) {
    const int n = static_cast<int>(a.rows());
    double scale = a.cwiseAbs().maxCoeff();
    double tol = drop_rel_tol * (scale > 0 ? scale : 1.0);
    UnionFind uf(n);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (std::abs(a(i, j)) > tol || std::abs(a(j, i)) > tol) uf.unite(i, j);
    std::vector<std::vector<int>> comps(n);
    for (int i = 0; i < n; ++i) comps[uf.find(i)].push_back(i);
    std::erase_if(comps, [](const std::vector<int>& c) { return c.empty(); });
    return comps;
}

Eigensystem sparse_block_eig(const CMat& a, double drop_rel_tol) {
    if (a.rows() != a.cols()) throw std::invalid_argument("sparse_block_eig: square matrix required");
    const int n = static_cast<int>(a.rows());
    auto comps = sparsity_components(a, drop_rel_tol);
    Eigensystem out;
    out.values = CVec::Zero(n);
    out.vectors = CMat::Zero(n, n);
    int col = 0;
    for (const auto& comp : comps) {
        const int m = static_cast<int>(comp.size());
        CMat sub(m, m);
        for (int i = 0; i < m; ++i)
            for (int j = 0; j < m; ++j) sub(i, j) = a(comp[i], comp[j]);
        Eigen::ComplexEigenSolver<CMat> es(sub, true);
        if (es.info() != Eigen::Success) throw std::runtime_error("sparse_block_eig: eigensolver failed");
        for (int k = 0; k < m; ++k) {
            out.values(col) = es.eigenvalues()(k);
            for (int i = 0; i < m; ++i) out.vectors(comp[i], col) = es.eigenvectors()(i, k);
            ++col;
        }
    }
    return out;
}

double ls_slope(const std::vector<double>& x, const std::vector<double>& y) {
    if (x.size() != y.size() || x.size() < 2) throw std::invalid_argument("ls_slope: need >= 2 samples");
    const double n = static_cast<double>(x.size());
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        sx += x[i];
        sy += y[i];
        sxx += x[i] * x[i];
        sxy += x[i] * y[i];
    }
    double denom = sxx - sx * sx / n;
    if (denom == 0) throw std::invalid_argument("ls_slope: degenerate abscissae");
    return (sxy - sx * sy / n) / denom;
}

int numerical_rank(const CMat& a, double rel_tol) {
    if (a.size() == 0) return 0;
    Eigen::JacobiSVD<CMat> svd(a);
    double smax = svd.singularValues()(0);
    if (smax == 0) return 0;
    int rank = 0;
    for (Eigen::Index i = 0; i < svd.singularValues().size(); ++i)
        if (svd.singularValues()(i) > rel_tol * smax) ++rank;
    return rank;
}

}  // namespace oscdirac
