// Sampling-based classification of bivariate zero sets relative to the
// closed symmetrized bidisc.

#include <cmath>
#include <random>
#include <vector>

#include "gammatk/bipoly.hpp"
#include "gammatk/errors.hpp"
#include "univariate.hpp"

namespace gammatk::bipoly {

namespace {

using geometry::Point2;
using geometry::PointClass;
using geometry::PointTag;

constexpr double kTwoPi = 6.283185307179586476925;

// Coefficients in w of p(z + w, z * w) for a fixed z.
std::vector<Complex> restrict_fiber_slice(const BiPoly& p, Complex z) {
    const int n = p.deg1(), m = p.deg2();
    std::vector<Complex> out(n + m + 1, Complex(0, 0));

    std::vector<std::vector<double>> binom(n + 1, std::vector<double>(n + 1, 0.0));
    for (int i = 0; i <= n; ++i) {
        binom[i][0] = 1.0;
        for (int j = 1; j <= i; ++j)
            binom[i][j] = binom[i - 1][j - 1] + (j <= i - 1 ? binom[i - 1][j] : 0.0);
    }

    // precompute powers of z up to n + m
    std::vector<Complex> zp(n + m + 1);
    zp[0] = Complex(1, 0);
    for (int t = 1; t <= n + m; ++t) zp[t] = zp[t - 1] * z;

    for (int i = 0; i <= n; ++i)
        for (int j = 0; j <= m; ++j) {
            const Complex c = p.coeff(i, j);
            if (c == Complex(0, 0)) continue;
            for (int k = 0; k <= i; ++k)
                out[k + j] += c * binom[i][k] * zp[i - k + j];
        }
    return out;
}

// Coefficients in z2 of p(s0, z2).
std::vector<Complex> restrict_fix_z1(const BiPoly& p, Complex s0) {
    std::vector<Complex> out(p.deg2() + 1, Complex(0, 0));
    Complex sp(1, 0);
    for (int i = 0; i <= p.deg1(); ++i) {
        for (int j = 0; j <= p.deg2(); ++j) out[j] += p.coeff(i, j) * sp;
        sp *= s0;
    }
    return out;
}

// Coefficients in z1 of p(z1, t0).
std::vector<Complex> restrict_fix_z2(const BiPoly& p, Complex t0) {
    std::vector<Complex> out(p.deg1() + 1, Complex(0, 0));
    Complex tp(1, 0);
    for (int j = 0; j <= p.deg2(); ++j) {
        for (int i = 0; i <= p.deg1(); ++i) out[i] += p.coeff(i, j) * tp;
        tp *= t0;
    }
    return out;
}

struct ScanState {
    const SamplerConfig& cfg;
    int samples_checked = 0;
    int boundary_violations = 0;
    int exterior_violations = 0;
    int degenerate = 0;
    std::optional<Violation> worst;
    std::optional<Point2> witness;

    void record_violation(const Point2& at, const PointClass& cls) {
        if (!worst || cls.margin > worst->cls.margin) worst = Violation{at, cls};
    }

    // Classifies a zero of p and books it against the two definitions.
    void book_zero(const Point2& at) {
        const PointClass cls = geometry::classify_point(at, cfg.tol);
        switch (cls.tag) {
            case PointTag::OtherBoundary:
                ++boundary_violations;
                record_violation(at, cls);
                break;
            case PointTag::ExteriorOther:
            case PointTag::ExteriorGamma:
                ++exterior_violations;
                record_violation(at, cls);
                break;
            case PointTag::InteriorG2:
                if (!witness) witness = at;
                break;
            default:
                break;  // distinguished boundary / full exterior: admissible
        }
    }
};

Complex draw_disc(std::mt19937_64& rng, double radius) {
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    const double r = radius * std::sqrt(unit(rng));
    const double phi = kTwoPi * unit(rng);
    return std::polar(r, phi);
}

}  // namespace

PolyVerdict classify_poly(const BiPoly& p, const SamplerConfig& cfg) {
    if (p.is_zero()) throw InvalidInput("classify_poly: zero polynomial");
    if (cfg.samples < 16) throw InvalidInput("classify_poly: need at least 16 samples");
    if (cfg.tol <= 0.0) throw InvalidInput("classify_poly: tol must be > 0");

    std::mt19937_64 rng(cfg.seed);
    ScanState st{cfg};
    const double degen_thr = 1e-12 * p.max_abs_coeff();

    // --- (a) boundary scan over z1 on the unit circle -----------------------
    // On |z1| = 1 a zero's fiber is {z1, w}; roots with |w| < 1 - tol witness
    // a boundary zero off the distinguished boundary, roots with |w| > 1 + tol
    // a mixed-exterior zero. Root clouds are clustered so that multiple roots
    // are judged by their (well-conditioned) means.
    std::vector<std::pair<Complex, Complex>> circle_roots;  // (z, w) on-circle pairs
    for (int k = 0; k < cfg.samples; ++k) {
        const Complex z = std::polar(1.0, kTwoPi * double(k) / double(cfg.samples));
        const auto coef = restrict_fiber_slice(p, z);
        if (detail::uni_max_abs(coef) <= degen_thr) {
            ++st.degenerate;
            continue;
        }
        ++st.samples_checked;
        const auto clusters = detail::cluster_roots(detail::uni_roots(coef));
        for (const auto& cl : clusters) {
            const double aw = std::abs(cl.center);
            if (aw < 1.0 - cfg.tol) {
                ++st.boundary_violations;
                const Point2 at = geometry::symmetrize(z, cl.center);
                st.record_violation(at, geometry::classify_point(at, cfg.tol));
            } else if (aw > 1.0 + cfg.tol) {
                ++st.exterior_violations;
                const Point2 at = geometry::symmetrize(z, cl.center);
                st.record_violation(at, geometry::classify_point(at, cfg.tol));
            } else if (circle_roots.size() < 32) {
                circle_roots.emplace_back(z, cl.center);
            }
        }
    }
    if (st.degenerate == cfg.samples)
        throw DegenerateSlices("classify_poly: restriction vanishes on the whole scan family");

    // --- (b) interior witness ------------------------------------------------
    // Continuation of on-circle roots inward, then random slices.
    if (!st.witness) {
        for (const auto& [z, w0] : circle_roots) {
            (void)w0;
            for (double shrink : {0.95, 0.85, 0.7, 0.5, 0.3}) {
                const Complex zi = shrink * z;
                const auto coef = restrict_fiber_slice(p, zi);
                if (detail::uni_max_abs(coef) <= degen_thr) continue;
                ++st.samples_checked;
                for (const Complex& w : detail::uni_roots(coef)) {
                    if (std::abs(zi) < 1.0 - cfg.tol && std::abs(w) < 1.0 - cfg.tol) {
                        st.witness = geometry::symmetrize(zi, w);
                        break;
                    }
                }
                if (st.witness) break;
            }
            if (st.witness) break;
        }
    }
    for (int k = 0; k < cfg.samples / 4 && !st.witness; ++k) {
        std::vector<Complex> coef;
        Complex fixed;
        bool fix_first;
        if (k % 2 == 0) {
            fixed = draw_disc(rng, 0.95);
            coef = restrict_fix_z2(p, fixed);
            fix_first = false;
        } else {
            fixed = draw_disc(rng, 1.9);
            coef = restrict_fix_z1(p, fixed);
            fix_first = true;
        }
        if (detail::uni_max_abs(coef) <= degen_thr) continue;
        ++st.samples_checked;
        for (const Complex& r : detail::uni_roots(coef)) {
            const Point2 at = fix_first ? Point2{fixed, r} : Point2{r, fixed};
            if (geometry::classify_point(at, cfg.tol).tag == PointTag::InteriorG2) {
                st.witness = at;
                break;
            }
        }
    }

    // --- (c) mixed-exterior slice scan ---------------------------------------
    // Axis slices catch zeros whose fiber has one root inside and one outside
    // the disc; those never appear on the |z1| = 1 scan.
    for (int k = 0; k < cfg.samples / 2; ++k) {
        std::vector<Complex> coef;
        Complex fixed;
        bool fix_first;
        if (k % 2 == 0) {
            fixed = draw_disc(rng, 3.0);
            coef = restrict_fix_z1(p, fixed);
            fix_first = true;
        } else {
            std::uniform_real_distribution<double> unit(0.0, 1.0);
            fixed = (k % 4 == 1) ? std::polar(1.0, kTwoPi * unit(rng))
                                 : draw_disc(rng, 1.5);
            coef = restrict_fix_z2(p, fixed);
            fix_first = false;
        }
        if (detail::uni_max_abs(coef) <= degen_thr) continue;
        ++st.samples_checked;
        const auto clusters = detail::cluster_roots(detail::uni_roots(coef));
        for (const auto& cl : clusters) {
            const Point2 at = fix_first ? Point2{fixed, cl.center} : Point2{cl.center, fixed};
            st.book_zero(at);
        }
    }

    PolyVerdict out;
    out.samples_checked = st.samples_checked;
    out.boundary_violations = st.boundary_violations;
    out.exterior_violations = st.exterior_violations;
    out.degenerate_slices = st.degenerate;
    out.worst_violation = st.worst;
    out.interior_witness = st.witness;

    if (st.degenerate > cfg.samples / 10) {
        out.tag = PolyTag::Inconclusive;
    } else if (st.witness && st.boundary_violations == 0) {
        out.tag = PolyTag::GammaDistinguished;
    } else if (st.boundary_violations == 0 && st.exterior_violations == 0) {
        out.tag = PolyTag::Distinguished;
    } else {
        out.tag = PolyTag::NeitherEvidence;
    }
    return out;
}

}  // namespace gammatk::bipoly
