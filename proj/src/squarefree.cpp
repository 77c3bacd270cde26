// Square-free reduction of bivariate polynomials via univariate square-free
// parts on interpolation slices (axis slices fix the target bidegree; generic
// lines through a common base point supply values for the coefficient fit).

#include <algorithm>
#include <cmath>
#include <map>
#include <random>
#include <vector>

#include <Eigen/SVD>

#include "gammatk/bipoly.hpp"
#include "gammatk/errors.hpp"
#include "univariate.hpp"

namespace gammatk::bipoly {

namespace {

constexpr double kTwoPi = 6.283185307179586476925;

Complex draw_ring(std::mt19937_64& rng, double rmin, double rmax) {
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    return std::polar(rmin + (rmax - rmin) * unit(rng), kTwoPi * unit(rng));
}

// Degree of the square-free part along one axis, decided by majority over
// several generic slices. Throws NumericalGCDUnstable when three or more
// slices disagree with the majority.
int axis_square_free_degree(const BiPoly& p, bool fix_z2, std::mt19937_64& rng,
                            double degen_thr) {
    const int full = fix_z2 ? p.deg1() : p.deg2();
    if (full == 0) return 0;

    std::vector<int> degs;
    int attempts = 0;
    while (static_cast<int>(degs.size()) < 5 && attempts < 25) {
        ++attempts;
        const Complex node = draw_ring(rng, 0.45, 1.25);
        std::vector<Complex> f(full + 1, Complex(0, 0));
        if (fix_z2) {
            Complex tp(1, 0);
            for (int j = 0; j <= p.deg2(); ++j) {
                for (int i = 0; i <= p.deg1(); ++i) f[i] += p.coeff(i, j) * tp;
                tp *= node;
            }
        } else {
            Complex sp(1, 0);
            for (int i = 0; i <= p.deg1(); ++i) {
                for (int j = 0; j <= p.deg2(); ++j) f[j] += p.coeff(i, j) * sp;
                sp *= node;
            }
        }
        if (detail::uni_max_abs(f) <= degen_thr) continue;
        const auto trimmed = detail::uni_trim(f, 1e-10);
        if (trimmed.size() <= 1) {
            degs.push_back(0);
            continue;
        }
        degs.push_back(static_cast<int>(detail::uni_square_free(trimmed).square_free.size()) - 1);
    }
    if (degs.empty())
        throw NumericalGCDUnstable("square_free: no usable axis slices");

    std::map<int, int> counts;
    for (int d : degs) ++counts[d];
    auto majority = std::max_element(counts.begin(), counts.end(),
                                     [](auto& a, auto& b) { return a.second < b.second; });
    const int disagreements = static_cast<int>(degs.size()) - majority->second;
    if (disagreements >= 3)
        throw NumericalGCDUnstable("square_free: slice GCD degrees disagree");
    return majority->first;
}

BiPoly normalized(const BiPoly& p) {
    const BiPoly t = p.trimmed(1e-10);
    Complex lead(0, 0);
    double best = -1.0;
    for (int i = 0; i <= t.deg1(); ++i)
        for (int j = 0; j <= t.deg2(); ++j)
            if (std::abs(t.coeff(i, j)) > best) {
                best = std::abs(t.coeff(i, j));
                lead = t.coeff(i, j);
            }
    return (Complex(1, 0) / lead) * t;
}

}  // namespace

BiPoly square_free(const BiPoly& p_in) {
    if (p_in.is_zero()) throw InvalidInput("square_free: zero polynomial");
    const BiPoly p = p_in.trimmed(1e-12);
    const int n = p.deg1(), m = p.deg2();
    if (n + m <= 1) return normalized(p);

    std::mt19937_64 rng(0x5fba1e5u);
    const double degen_thr = 1e-12 * p.max_abs_coeff();

    const int n_sf = axis_square_free_degree(p, /*fix_z2=*/true, rng, degen_thr);
    const int m_sf = axis_square_free_degree(p, /*fix_z2=*/false, rng, degen_thr);
    if (n_sf == n && m_sf == m) return normalized(p);

    // Values of the square-free part, one unknown scalar per line; lines share
    // the base point, which pins all scalars to the common value there.
    const int line_deg = n + m;
    const int unknowns = (n_sf + 1) * (m_sf + 1);

    struct LineFit {
        int sf_degree = 0;
        std::vector<Eigen::RowVectorXcd> rows;
        std::vector<Complex> rhs;
    };

    for (int attempt = 0; attempt < 4; ++attempt) {
        const Complex base1 = draw_ring(rng, 0.55, 0.95);
        const Complex base2 = draw_ring(rng, 0.55, 0.95);

        const int lines = n_sf + m_sf + 6;
        const int pts = n_sf + m_sf + 4;

        std::vector<LineFit> fits;
        bool bad_base = false;

        for (int k = 0; k < lines && !bad_base; ++k) {
            const Complex dir1 = std::polar(1.0, kTwoPi * std::fmod(0.618033988749895 * k + 0.13, 1.0));
            const Complex dir2 = draw_ring(rng, 0.7, 1.3);

            // restriction of p to the line via Fourier interpolation in u
            const int nodes = line_deg + 1;
            std::vector<Complex> vals(nodes);
            for (int a = 0; a < nodes; ++a) {
                const Complex u = std::polar(1.0, kTwoPi * double(a) / double(nodes));
                vals[a] = eval_scalar(p, {base1 + u * dir1, base2 + u * dir2});
            }
            std::vector<Complex> f(nodes, Complex(0, 0));
            for (int d = 0; d < nodes; ++d) {
                Complex acc(0, 0);
                for (int a = 0; a < nodes; ++a)
                    acc += vals[a] * std::polar(1.0, -kTwoPi * double(a * d % nodes) / double(nodes));
                f[d] = acc / double(nodes);
            }
            if (detail::uni_max_abs(f) <= degen_thr) continue;
            const auto trimmed_f = detail::uni_trim(f, 1e-10);
            if (trimmed_f.size() <= 1) continue;

            const auto sf = detail::uni_square_free(trimmed_f);
            const Complex at_base = detail::uni_eval(sf.square_free, Complex(0, 0));
            if (std::abs(at_base) <= 1e-8 * detail::uni_max_abs(sf.square_free)) {
                bad_base = true;  // base point sits on the zero set
                break;
            }

            LineFit fit;
            fit.sf_degree = static_cast<int>(sf.square_free.size()) - 1;
            for (int j = 0; j < pts; ++j) {
                const Complex u = std::polar(0.35 + 0.8 * double(j) / double(pts),
                                             kTwoPi * std::fmod(0.618033988749895 * (j + 1), 1.0));
                const Complex x = base1 + u * dir1;
                const Complex y = base2 + u * dir2;
                Eigen::RowVectorXcd row(unknowns);
                Complex xp(1, 0);
                for (int i = 0; i <= n_sf; ++i) {
                    Complex yp(1, 0);
                    for (int jj = 0; jj <= m_sf; ++jj) {
                        row(i * (m_sf + 1) + jj) = xp * yp;
                        yp *= y;
                    }
                    xp *= x;
                }
                fit.rows.push_back(std::move(row));
                fit.rhs.push_back(detail::uni_eval(sf.square_free, u) / at_base);
            }
            fits.push_back(std::move(fit));
        }

        if (bad_base || fits.empty()) continue;

        // keep only lines whose square-free degree matches the majority
        std::map<int, int> counts;
        for (const auto& fit : fits) ++counts[fit.sf_degree];
        const int major = std::max_element(counts.begin(), counts.end(),
                                           [](auto& a, auto& b) { return a.second < b.second; })
                              ->first;
        if (static_cast<int>(fits.size()) - counts[major] >= 3)
            throw NumericalGCDUnstable("square_free: line square-free degrees disagree");

        std::vector<Eigen::RowVectorXcd> rows;
        std::vector<Complex> rhs;
        for (const auto& fit : fits) {
            if (fit.sf_degree != major) continue;
            rows.insert(rows.end(), fit.rows.begin(), fit.rows.end());
            rhs.insert(rhs.end(), fit.rhs.begin(), fit.rhs.end());
        }
        if (static_cast<int>(rows.size()) < std::max(2 * unknowns, unknowns + 4)) continue;

        Eigen::MatrixXcd M(rows.size(), unknowns);
        Eigen::VectorXcd b(rows.size());
        for (std::size_t r = 0; r < rows.size(); ++r) {
            M.row(r) = rows[r];
            b(r) = rhs[r];
        }
        Eigen::JacobiSVD<Eigen::MatrixXcd> svd(M, Eigen::ComputeThinU | Eigen::ComputeThinV);
        const Eigen::VectorXcd x = svd.solve(b);
        const double rel_res = (M * x - b).norm() / std::max(b.norm(), 1e-300);
        if (rel_res > 1e-6) continue;

        ComplexMatrix grid(n_sf + 1, m_sf + 1);
        for (int i = 0; i <= n_sf; ++i)
            for (int j = 0; j <= m_sf; ++j) grid(i, j) = x(i * (m_sf + 1) + j);
        return normalized(BiPoly(std::move(grid)));
    }

    throw NumericalGCDUnstable("square_free: interpolation failed on all attempts");
}

}  // namespace gammatk::bipoly
