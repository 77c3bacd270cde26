#pragma once

// Internal univariate polynomial helpers shared by the bivariate routines.
// Coefficients are stored ascending in degree.

#include <vector>

#include "gammatk/types.hpp"

namespace gammatk::detail {

/// Largest coefficient modulus.
double uni_max_abs(const std::vector<Complex>& f);

/// Drops leading coefficients below rel_tol * max|coeff|.
std::vector<Complex> uni_trim(const std::vector<Complex>& f, double rel_tol = 1e-12);

Complex uni_eval(const std::vector<Complex>& f, Complex x);

std::vector<Complex> uni_derivative(const std::vector<Complex>& f);

/// All roots via the companion matrix, each polished by damped Newton.
std::vector<Complex> uni_roots(const std::vector<Complex>& f, double trim_rel = 1e-12);

struct RootCluster {
    Complex center;
    int multiplicity = 1;
};

/// Merges root clouds that are consistent with a multiple root at working
/// precision: a tight pass for double-root splits, then a coarse pass that
/// only fuses already-multiple clusters (higher-order splits are wider).
std::vector<RootCluster> cluster_roots(const std::vector<Complex>& roots);

struct UniSquareFree {
    std::vector<Complex> square_free;  // monic
    int gcd_degree = 0;
};

/// Square-free part f / gcd(f, f') from the null space of the deflated
/// Sylvester matrix; rank decisions use rel. tolerance `tol` on the SVD.
UniSquareFree uni_square_free(const std::vector<Complex>& f, double tol = 1e-8);

}  // namespace gammatk::detail
