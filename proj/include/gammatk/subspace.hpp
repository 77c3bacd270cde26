#pragma once

#include <string>

#include "gammatk/types.hpp"

namespace gammatk {

/// Orthonormal column frame describing a subspace of C^d.
struct SubspaceBasis {
    ComplexMatrix frame;  // d x k, frame^* frame = I_k
    std::string label;

    Eigen::Index ambient_dim() const { return frame.rows(); }
    Eigen::Index dim() const { return frame.cols(); }

    /// Validating factory: checks frame^* frame = I to `tol`.
    static SubspaceBasis make(ComplexMatrix frame, std::string label = {},
                              double tol = 1e-10);
};

}  // namespace gammatk
