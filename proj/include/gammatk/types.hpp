#pragma once

#include <complex>
#include <Eigen/Dense>

namespace gammatk {

using Complex = std::complex<double>;

/// Dense complex matrix; the universal operator carrier of the toolkit.
using ComplexMatrix = Eigen::MatrixXcd;
using ComplexVector = Eigen::VectorXcd;

/// Operator (spectral) norm.
double op_norm(const ComplexMatrix& m);

/// Commutator norm ||SP - PS|| (spectral).
double commutator_norm(const ComplexMatrix& s, const ComplexMatrix& p);

inline ComplexMatrix adj(const ComplexMatrix& m) { return m.adjoint(); }

}  // namespace gammatk
