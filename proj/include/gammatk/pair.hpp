#pragma once

#include "gammatk/types.hpp"

namespace gammatk {

enum class PairRole { Generic, GammaContraction, GammaUnitary, PureGammaIsometryModel };

/// Ordered pair (S, P) of same-size square matrices with a verified
/// commutator bound ||SP - PS|| <= ctol * (1 + ||S|| ||P||).
struct CommutingPair {
    ComplexMatrix S;
    ComplexMatrix P;
    double commutator_norm = 0.0;
    PairRole role = PairRole::Generic;

    Eigen::Index dim() const { return S.rows(); }

    /// Validating factory; throws CommutatorTooLarge / InvalidInput.
    static CommutingPair make(ComplexMatrix S, ComplexMatrix P,
                              double ctol = 1e-8,
                              PairRole role = PairRole::Generic);
};

const char* to_string(PairRole r);

}  // namespace gammatk
