#pragma once

#include <array>
#include <utility>

#include "gammatk/types.hpp"

namespace gammatk::geometry {

/// A point of C^2 in symmetrized coordinates (s, p).
struct Point2 {
    Complex s{0.0, 0.0};
    Complex p{0.0, 0.0};
};

enum class PointTag {
    InteriorG2,             // both fiber moduli < 1 - tol
    DistinguishedBoundary,  // both fiber moduli within tol of 1
    OtherBoundary,          // boundary band, but not the distinguished boundary
    ExteriorGamma,          // outside the closed domain, one modulus on the circle band
    ExteriorSymmetrizedE2,  // both fiber moduli > 1 + tol
    ExteriorOther           // mixed: one modulus inside, one outside
};

/// Classification verdict with the fiber used and the distance of the fiber
/// moduli to 1 (Chebyshev distance of (|l1|,|l2|) from (1,1)).
struct PointClass {
    PointTag tag = PointTag::InteriorG2;
    std::array<Complex, 2> fiber{};
    double margin = 0.0;
};

/// (z1, z2) -> (z1 + z2, z1 * z2). Symmetric in its arguments.
Point2 symmetrize(Complex z1, Complex z2);

/// The two roots (with multiplicity) of l^2 - s*l + p = 0, ordered by
/// (modulus, then argument). symmetrize(fiber(pt)) == pt up to rounding.
std::array<Complex, 2> fiber(const Point2& pt);

/// Locates pt relative to the closed symmetrized bidisc via its fiber.
/// Ties within the tolerance band resolve toward boundary tags, so closure
/// statements survive perturbation.
PointClass classify_point(const Point2& pt, double tol);

bool is_finite(const Point2& pt);

const char* to_string(PointTag t);

}  // namespace gammatk::geometry
