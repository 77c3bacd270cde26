#pragma once

#include <stdexcept>
#include <string>

namespace gammatk {

/// Base class for all toolkit errors.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Pair construction / functional calculus.
struct CommutatorTooLarge : Error { using Error::Error; };

// Contraction / defect machinery.
struct NotAContraction : Error { using Error::Error; };
struct RankDeficientInconsistent : Error { using Error::Error; };

// Gamma-unitary certification and splitting.
struct JointDiagonalizationFailed : Error { using Error::Error; };
struct SpectralGapTooSmall : Error { using Error::Error; };
struct NotUnitary : Error { using Error::Error; };

// Polynomial classification and reduction.
struct DegenerateSlices : Error { using Error::Error; };
struct NumericalGCDUnstable : Error { using Error::Error; };

// Dilation / Toeplitz model checks.
struct BandUnsafe : Error { using Error::Error; };
struct NotNormal : Error { using Error::Error; };
struct SpectrumTouchesCircle : Error { using Error::Error; };

// Decomposition.
struct PointNotOnDistinguishedBoundary : Error { using Error::Error; };
struct AnnihilationPreconditionFailed : Error { using Error::Error; };
struct ResidualTooLarge : Error { using Error::Error; };
struct IncompleteDecomposition : Error { using Error::Error; };

// Malformed inputs (bad dimensions, bad arguments).
struct InvalidInput : Error { using Error::Error; };

}  // namespace gammatk
