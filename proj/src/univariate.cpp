#include "univariate.hpp"

#include <algorithm>
#include <cmath>

#include <Eigen/Eigenvalues>
#include <Eigen/SVD>

#include "gammatk/errors.hpp"

namespace gammatk::detail {

double uni_max_abs(const std::vector<Complex>& f) {
    double m = 0.0;
    for (const auto& c : f) m = std::max(m, std::abs(c));
    return m;
}

std::vector<Complex> uni_trim(const std::vector<Complex>& f, double rel_tol) {
    const double thr = rel_tol * uni_max_abs(f);
    std::size_t deg = f.size();
    while (deg > 1 && std::abs(f[deg - 1]) <= thr) --deg;
    return std::vector<Complex>(f.begin(), f.begin() + deg);
}

Complex uni_eval(const std::vector<Complex>& f, Complex x) {
    Complex acc(0, 0);
    for (std::size_t i = f.size(); i-- > 0;) acc = acc * x + f[i];
    return acc;
}

std::vector<Complex> uni_derivative(const std::vector<Complex>& f) {
    if (f.size() <= 1) return {Complex(0, 0)};
    std::vector<Complex> d(f.size() - 1);
    for (std::size_t i = 1; i < f.size(); ++i) d[i - 1] = double(i) * f[i];
    return d;
}

namespace {

// Newton polish. Converges quadratically for simple roots and linearly for
// multiple ones, pulling companion-split root clouds back toward the center.
Complex polish_root(const std::vector<Complex>& f, const std::vector<Complex>& df,
                    Complex x) {
    const double scale = uni_max_abs(f);
    for (int it = 0; it < 60; ++it) {
        const Complex fx = uni_eval(f, x);
        if (std::abs(fx) <= 1e-15 * scale * (1.0 + std::pow(std::abs(x), double(f.size() - 1))))
            break;
        const Complex dfx = uni_eval(df, x);
        if (std::abs(dfx) == 0.0) break;
        const Complex step = fx / dfx;
        if (std::abs(step) > 0.5 * (1.0 + std::abs(x))) break;  // diverging; keep companion value
        x -= step;
        if (std::abs(step) <= 1e-16 * (1.0 + std::abs(x))) break;
    }
    return x;
}

}  // namespace

std::vector<Complex> uni_roots(const std::vector<Complex>& f_in, double trim_rel) {
    std::vector<Complex> f = uni_trim(f_in, trim_rel);
    const int n = static_cast<int>(f.size()) - 1;
    if (n <= 0) return {};
    if (n == 1) return {-f[0] / f[1]};

    ComplexMatrix comp = ComplexMatrix::Zero(n, n);
    for (int i = 1; i < n; ++i) comp(i, i - 1) = 1.0;
    for (int i = 0; i < n; ++i) comp(i, n - 1) = -f[i] / f[n];

    Eigen::ComplexEigenSolver<ComplexMatrix> es(comp, false);
    if (es.info() != Eigen::Success)
        throw Error("uni_roots: eigensolver failed");

    const std::vector<Complex> df = uni_derivative(f);
    std::vector<Complex> roots(n);
    for (int i = 0; i < n; ++i) roots[i] = polish_root(f, df, es.eigenvalues()(i));

    std::sort(roots.begin(), roots.end(), [](const Complex& a, const Complex& b) {
        const double ma = std::abs(a), mb = std::abs(b);
        if (ma != mb) return ma < mb;
        return std::arg(a) < std::arg(b);
    });
    return roots;
}

std::vector<RootCluster> cluster_roots(const std::vector<Complex>& roots) {
    std::vector<RootCluster> clusters;
    // sum of members, so centers are means (first-order accurate for
    // rounding-split multiple roots)
    std::vector<Complex> sums;

    auto scale_of = [](const Complex& a, const Complex& b) {
        return 1.0 + 0.5 * (std::abs(a) + std::abs(b));
    };

    for (const Complex& r : roots) {
        bool merged = false;
        for (std::size_t k = 0; k < clusters.size(); ++k) {
            if (std::abs(r - clusters[k].center) <= 1e-6 * scale_of(r, clusters[k].center)) {
                sums[k] += r;
                clusters[k].multiplicity += 1;
                clusters[k].center = sums[k] / double(clusters[k].multiplicity);
                merged = true;
                break;
            }
        }
        if (!merged) {
            clusters.push_back({r, 1});
            sums.push_back(r);
        }
    }

    // Coarse pass: a root of multiplicity m splits O(eps^(1/m)) wide, so only
    // fuse when a multiple cluster is already present.
    bool changed = true;
    while (changed) {
        changed = false;
        for (std::size_t a = 0; a < clusters.size() && !changed; ++a) {
            for (std::size_t b = a + 1; b < clusters.size() && !changed; ++b) {
                if (clusters[a].multiplicity < 2 && clusters[b].multiplicity < 2) continue;
                const double gap = std::abs(clusters[a].center - clusters[b].center);
                if (gap <= 6e-4 * scale_of(clusters[a].center, clusters[b].center)) {
                    const int m = clusters[a].multiplicity + clusters[b].multiplicity;
                    sums[a] += sums[b];
                    clusters[a].multiplicity = m;
                    clusters[a].center = sums[a] / double(m);
                    clusters.erase(clusters.begin() + b);
                    sums.erase(sums.begin() + b);
                    changed = true;
                }
            }
        }
    }
    return clusters;
}

UniSquareFree uni_square_free(const std::vector<Complex>& f_in, double tol) {
    std::vector<Complex> f = uni_trim(f_in);
    const int nf = static_cast<int>(f.size()) - 1;
    if (nf <= 0) throw InvalidInput("uni_square_free: constant polynomial");

    // normalize to monic for conditioning
    for (auto& c : f) c /= f[nf];
    f[nf] = Complex(1, 0);

    if (nf == 1) return {f, 0};

    const std::vector<Complex> g = uni_derivative(f);
    const int ng = nf - 1;

    auto build_system = [&](int du, int dv) {
        // columns: u_0..u_du (times f), v_0..v_dv (times g); rows index powers
        const int rows = std::max(nf + du, ng + dv) + 1;
        ComplexMatrix M = ComplexMatrix::Zero(rows, du + dv + 2);
        for (int i = 0; i <= du; ++i)
            for (int k = 0; k <= nf; ++k) M(i + k, i) = f[k];
        for (int j = 0; j <= dv; ++j)
            for (int k = 0; k <= ng; ++k) M(j + k, du + 1 + j) = g[k];
        return M;
    };

    // gcd degree from the rank of the full Sylvester matrix
    const ComplexMatrix syl = build_system(ng - 1, nf - 1);
    Eigen::JacobiSVD<ComplexMatrix> svd(syl);
    const auto& sv = svd.singularValues();
    int rank = 0;
    for (int i = 0; i < sv.size(); ++i)
        if (sv(i) > tol * sv(0)) ++rank;
    const int d = nf + ng - rank;

    if (d == 0) return {f, 0};

    // null vector of the deflated system is (g/h, -f/h) up to scalar
    const ComplexMatrix M = build_system(ng - d, nf - d);
    Eigen::JacobiSVD<ComplexMatrix> svd2(M, Eigen::ComputeThinV);
    const ComplexVector null_vec = svd2.matrixV().col(M.cols() - 1);

    std::vector<Complex> v(nf - d + 1);
    for (int j = 0; j <= nf - d; ++j) v[j] = null_vec(ng - d + 1 + j);

    v = uni_trim(v, 1e-10);
    const int dv = static_cast<int>(v.size()) - 1;
    for (auto& c : v) c /= v[dv];
    v[dv] = Complex(1, 0);
    return {v, d};
}

}  // namespace gammatk::detail
