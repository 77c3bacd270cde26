#include "gammatk/bipoly.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <vector>

#include <Eigen/LU>

#include "gammatk/errors.hpp"

namespace gammatk::bipoly {

BiPoly::BiPoly(ComplexMatrix grid) : coeffs_(std::move(grid)) {
    if (coeffs_.rows() < 1 || coeffs_.cols() < 1)
        throw InvalidInput("BiPoly: empty coefficient grid");
    if (!coeffs_.allFinite())
        throw InvalidInput("BiPoly: non-finite coefficients");
}

BiPoly BiPoly::constant(Complex c) {
    ComplexMatrix g(1, 1);
    g(0, 0) = c;
    return BiPoly(std::move(g));
}

BiPoly BiPoly::monomial(int i, int j, Complex c) {
    if (i < 0 || j < 0) throw InvalidInput("BiPoly::monomial: negative power");
    ComplexMatrix g = ComplexMatrix::Zero(i + 1, j + 1);
    g(i, j) = c;
    return BiPoly(std::move(g));
}

int BiPoly::total_degree() const {
    int best = 0;
    for (int i = 0; i <= deg1(); ++i)
        for (int j = 0; j <= deg2(); ++j)
            if (coeffs_(i, j) != Complex(0, 0)) best = std::max(best, i + j);
    return best;
}

Complex BiPoly::coeff(int i, int j) const {
    if (i < 0 || j < 0 || i > deg1() || j > deg2()) return Complex(0, 0);
    return coeffs_(i, j);
}

double BiPoly::max_abs_coeff() const {
    return coeffs_.cwiseAbs().maxCoeff();
}

BiPoly BiPoly::trimmed(double rel_tol) const {
    const double thr = rel_tol * max_abs_coeff();
    ComplexMatrix g = coeffs_;
    for (Eigen::Index i = 0; i < g.rows(); ++i)
        for (Eigen::Index j = 0; j < g.cols(); ++j)
            if (std::abs(g(i, j)) <= thr) g(i, j) = Complex(0, 0);

    Eigen::Index top_row = 0, top_col = 0;
    for (Eigen::Index i = 0; i < g.rows(); ++i)
        for (Eigen::Index j = 0; j < g.cols(); ++j)
            if (g(i, j) != Complex(0, 0)) {
                top_row = std::max(top_row, i);
                top_col = std::max(top_col, j);
            }
    return BiPoly(ComplexMatrix(g.topLeftCorner(top_row + 1, top_col + 1)));
}

BiPoly BiPoly::dz1() const {
    if (deg1() == 0) return BiPoly();
    ComplexMatrix g(deg1(), deg2() + 1);
    for (int i = 1; i <= deg1(); ++i)
        for (int j = 0; j <= deg2(); ++j) g(i - 1, j) = double(i) * coeffs_(i, j);
    return BiPoly(std::move(g));
}

BiPoly BiPoly::dz2() const {
    if (deg2() == 0) return BiPoly();
    ComplexMatrix g(deg1() + 1, deg2());
    for (int i = 0; i <= deg1(); ++i)
        for (int j = 1; j <= deg2(); ++j) g(i, j - 1) = double(j) * coeffs_(i, j);
    return BiPoly(std::move(g));
}

BiPoly operator+(const BiPoly& a, const BiPoly& b) {
    ComplexMatrix g = ComplexMatrix::Zero(std::max(a.deg1(), b.deg1()) + 1,
                                          std::max(a.deg2(), b.deg2()) + 1);
    g.topLeftCorner(a.deg1() + 1, a.deg2() + 1) += a.coeffs();
    g.topLeftCorner(b.deg1() + 1, b.deg2() + 1) += b.coeffs();
    return BiPoly(std::move(g));
}

BiPoly operator-(const BiPoly& a, const BiPoly& b) {
    return a + (Complex(-1, 0) * b);
}

BiPoly operator*(const BiPoly& a, const BiPoly& b) {
    ComplexMatrix g = ComplexMatrix::Zero(a.deg1() + b.deg1() + 1, a.deg2() + b.deg2() + 1);
    for (int i = 0; i <= a.deg1(); ++i)
        for (int j = 0; j <= a.deg2(); ++j) {
            const Complex c = a.coeff(i, j);
            if (c == Complex(0, 0)) continue;
            for (int k = 0; k <= b.deg1(); ++k)
                for (int l = 0; l <= b.deg2(); ++l) g(i + k, j + l) += c * b.coeff(k, l);
        }
    return BiPoly(std::move(g));
}

BiPoly operator*(Complex c, const BiPoly& a) {
    return BiPoly(ComplexMatrix(c * a.coeffs()));
}

Complex eval_scalar(const BiPoly& p, const geometry::Point2& pt) {
    // Horner in z1 with inner Horner in z2.
    Complex acc(0, 0);
    for (int i = p.deg1(); i >= 0; --i) {
        Complex row(0, 0);
        for (int j = p.deg2(); j >= 0; --j) row = row * pt.p + p.coeff(i, j);
        acc = acc * pt.s + row;
    }
    return acc;
}

ComplexMatrix eval_pair(const BiPoly& p, const CommutingPair& pair, double ctol) {
    const double bound = ctol * (1.0 + op_norm(pair.S) * op_norm(pair.P));
    if (pair.commutator_norm > bound) {
        std::ostringstream msg;
        msg << "eval_pair: commutator norm " << pair.commutator_norm
            << " exceeds bound " << bound;
        throw CommutatorTooLarge(msg.str());
    }

    const Eigen::Index d = pair.dim();
    const ComplexMatrix id = ComplexMatrix::Identity(d, d);

    std::vector<ComplexMatrix> ppow(p.deg2() + 1);
    ppow[0] = id;
    for (int j = 1; j <= p.deg2(); ++j) ppow[j] = ppow[j - 1] * pair.P;

    ComplexMatrix acc = ComplexMatrix::Zero(d, d);
    ComplexMatrix spow = id;
    for (int i = 0; i <= p.deg1(); ++i) {
        if (i > 0) spow = spow * pair.S;
        ComplexMatrix row = ComplexMatrix::Zero(d, d);
        bool any = false;
        for (int j = 0; j <= p.deg2(); ++j) {
            const Complex c = p.coeff(i, j);
            if (c == Complex(0, 0)) continue;
            row += c * ppow[j];
            any = true;
        }
        if (any) acc += spow * row;
    }
    return acc;
}

BiPoly det_pencil(const ComplexMatrix& A, PencilOrder order) {
    if (A.rows() != A.cols()) throw InvalidInput("det_pencil: A must be square");
    const int k = static_cast<int>(A.rows());
    if (k == 0) throw InvalidInput("det_pencil: empty matrix");

    const ComplexMatrix M0 = (order == PencilOrder::AFirst) ? A : ComplexMatrix(A.adjoint());
    const ComplexMatrix M1 = (order == PencilOrder::AFirst) ? ComplexMatrix(A.adjoint()) : A;
    const ComplexMatrix id = ComplexMatrix::Identity(k, k);

    const int nodes = k + 1;
    const double two_pi = 2.0 * std::acos(-1.0);
    auto omega = [&](int a) {
        return std::polar(1.0, two_pi * double(a) / double(nodes));
    };

    // determinant values on the Fourier tensor grid
    ComplexMatrix vals(nodes, nodes);
    for (int a = 0; a < nodes; ++a)
        for (int b = 0; b < nodes; ++b)
            vals(a, b) = ComplexMatrix(M0 + omega(b) * M1 - omega(a) * id).determinant();

    // invert the two nested Vandermonde systems (inverse DFT in each index)
    ComplexMatrix coeff = ComplexMatrix::Zero(nodes, nodes);
    for (int i = 0; i < nodes; ++i)
        for (int j = 0; j < nodes; ++j) {
            Complex acc(0, 0);
            for (int a = 0; a < nodes; ++a)
                for (int b = 0; b < nodes; ++b)
                    acc += vals(a, b) * std::conj(omega(a * i % nodes)) *
                           std::conj(omega(b * j % nodes));
            coeff(i, j) = acc / double(nodes * nodes);
        }

    return BiPoly(std::move(coeff)).trimmed(1e-10);
}

BiPoly compose_symmetrize(const BiPoly& q) {
    const int n = q.deg1(), m = q.deg2();
    const int d = n + m;
    ComplexMatrix g = ComplexMatrix::Zero(d + 1, d + 1);

    // Pascal triangle up to n
    std::vector<std::vector<double>> binom(n + 1, std::vector<double>(n + 1, 0.0));
    for (int i = 0; i <= n; ++i) {
        binom[i][0] = 1.0;
        for (int j = 1; j <= i; ++j)
            binom[i][j] = binom[i - 1][j - 1] + (j <= i - 1 ? binom[i - 1][j] : 0.0);
    }

    for (int i = 0; i <= n; ++i)
        for (int j = 0; j <= m; ++j) {
            const Complex c = q.coeff(i, j);
            if (c == Complex(0, 0)) continue;
            for (int t = 0; t <= i; ++t)
                g(t + j, i - t + j) += c * binom[i][t];
        }
    return BiPoly(std::move(g)).trimmed(1e-12);
}

namespace {

std::optional<Complex> symmetry_alpha_raw(const BiPoly& p, double tol) {
    const int n = p.deg1(), m = p.deg2();
    const double maxc = p.max_abs_coeff();

    int bi = 0, bj = 0;
    double best = -1.0;
    for (int i = 0; i <= n; ++i)
        for (int j = 0; j <= m; ++j)
            if (std::abs(p.coeff(i, j)) > best) {
                best = std::abs(p.coeff(i, j));
                bi = i;
                bj = j;
            }

    const Complex partner = p.coeff(n - bi, m - bj);
    if (std::abs(partner) <= tol * maxc) return std::nullopt;
    return std::conj(p.coeff(bi, bj)) / partner;
}

}  // namespace

Certificate inner_toral_symmetry_check(const BiPoly& p, double tol) {
    if (p.is_zero()) throw InvalidInput("inner_toral_symmetry_check: zero polynomial");

    Certificate cert;
    const int n = p.deg1(), m = p.deg2();
    const double maxc = p.max_abs_coeff();

    const auto alpha_raw = symmetry_alpha_raw(p, tol);
    if (!alpha_raw) {
        cert.add_flag("symmetry_partner_present", false);
        cert.notes = "largest coefficient has no mirror partner";
        cert.finalize();
        return cert;
    }

    cert.add_check("alpha_unimodular", std::abs(std::abs(*alpha_raw) - 1.0), tol);

    const Complex alpha = *alpha_raw / std::abs(*alpha_raw);
    double worst = 0.0;
    for (int i = 0; i <= n; ++i)
        for (int j = 0; j <= m; ++j)
            worst = std::max(worst, std::abs(std::conj(p.coeff(i, j)) -
                                             alpha * p.coeff(n - i, m - j)));
    cert.add_check("coefficient_symmetry", worst / maxc, tol);

    std::ostringstream notes;
    notes << "alpha = " << alpha.real() << (alpha.imag() < 0 ? " - " : " + ")
          << std::abs(alpha.imag()) << "i; bidegree (" << n << ", " << m << ")";
    cert.notes = notes.str();
    cert.finalize();
    return cert;
}

std::optional<Complex> inner_toral_alpha(const BiPoly& p, double tol) {
    const Certificate cert = inner_toral_symmetry_check(p, tol);
    if (!cert.passed()) return std::nullopt;
    const auto raw = symmetry_alpha_raw(p, tol);
    return *raw / std::abs(*raw);
}

const char* to_string(PolyTag t) {
    switch (t) {
        case PolyTag::GammaDistinguished: return "GammaDistinguished";
        case PolyTag::Distinguished: return "Distinguished";
        case PolyTag::NeitherEvidence: return "NeitherEvidence";
        case PolyTag::Inconclusive: return "Inconclusive";
    }
    return "Unknown";
}

}  // namespace gammatk::bipoly
