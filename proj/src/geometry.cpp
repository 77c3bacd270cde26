#include "gammatk/geometry.hpp"

#include <algorithm>
#include <cmath>

#include "gammatk/errors.hpp"

namespace gammatk::geometry {

bool is_finite(const Point2& pt) {
    return std::isfinite(pt.s.real()) && std::isfinite(pt.s.imag()) &&
           std::isfinite(pt.p.real()) && std::isfinite(pt.p.imag());
}

Point2 symmetrize(Complex z1, Complex z2) {
    return Point2{z1 + z2, z1 * z2};
}

namespace {

// Ascending (modulus, argument) order; deterministic for tests.
void order_roots(std::array<Complex, 2>& r) {
    auto key_less = [](const Complex& a, const Complex& b) {
        const double ma = std::abs(a), mb = std::abs(b);
        if (ma != mb) return ma < mb;
        return std::arg(a) < std::arg(b);
    };
    if (key_less(r[1], r[0])) std::swap(r[0], r[1]);
}

}  // namespace

std::array<Complex, 2> fiber(const Point2& pt) {
    if (!is_finite(pt)) throw InvalidInput("fiber: non-finite point");
    const Complex s = pt.s, p = pt.p;

    const Complex disc = s * s - 4.0 * p;
    const Complex sq = std::sqrt(disc);
    // Pick the sign that avoids cancellation; the other root comes from the
    // product p = l1 * l2.
    const Complex big = (std::abs(s + sq) >= std::abs(s - sq)) ? s + sq : s - sq;

    std::array<Complex, 2> r;
    if (std::abs(big) == 0.0) {
        r = {Complex(0, 0), Complex(0, 0)};
    } else {
        r[0] = big / 2.0;
        r[1] = p / r[0];
    }

    // One Newton polish per root; skipped near a double root where the
    // derivative degenerates.
    for (auto& root : r) {
        const Complex dq = 2.0 * root - s;
        const double scale = std::abs(root) + std::abs(s) + 1.0;
        if (std::abs(dq) > 1e-8 * scale) {
            root -= (root * root - s * root + p) / dq;
        }
    }

    order_roots(r);
    return r;
}

PointClass classify_point(const Point2& pt, double tol) {
    if (tol <= 0.0) throw InvalidInput("classify_point: tol must be > 0");

    PointClass out;
    out.fiber = fiber(pt);
    const double m1 = std::abs(out.fiber[0]);  // smaller modulus
    const double m2 = std::abs(out.fiber[1]);
    out.margin = std::max(std::abs(m1 - 1.0), std::abs(m2 - 1.0));

    const bool m1_band = std::abs(m1 - 1.0) <= tol;
    const bool m2_band = std::abs(m2 - 1.0) <= tol;

    if (m1_band && m2_band) {
        out.tag = PointTag::DistinguishedBoundary;
    } else if (m2_band && m1 < 1.0 - tol) {
        out.tag = PointTag::OtherBoundary;
    } else if (m2 < 1.0 - tol) {
        out.tag = PointTag::InteriorG2;
    } else if (m1 > 1.0 + tol) {
        out.tag = PointTag::ExteriorSymmetrizedE2;
    } else if (m1_band) {
        out.tag = PointTag::ExteriorGamma;
    } else {
        out.tag = PointTag::ExteriorOther;
    }
    return out;
}

const char* to_string(PointTag t) {
    switch (t) {
        case PointTag::InteriorG2: return "InteriorG2";
        case PointTag::DistinguishedBoundary: return "DistinguishedBoundary";
        case PointTag::OtherBoundary: return "OtherBoundary";
        case PointTag::ExteriorGamma: return "ExteriorGamma";
        case PointTag::ExteriorSymmetrizedE2: return "ExteriorSymmetrizedE2";
        case PointTag::ExteriorOther: return "ExteriorOther";
    }
    return "Unknown";
}

}  // namespace gammatk::geometry
