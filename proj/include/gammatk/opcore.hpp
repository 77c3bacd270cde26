#pragma once

#include <cstdint>
#include <vector>

#include "gammatk/certificate.hpp"
#include "gammatk/pair.hpp"
#include "gammatk/subspace.hpp"
#include "gammatk/types.hpp"

namespace gammatk::opcore {

/// max over theta of the largest eigenvalue of Re(e^{i theta} T), located on a
/// uniform grid and sharpened by golden-section refinement around the best
/// cell. Monotone in the refinement count.
double numerical_radius(const ComplexMatrix& T, int grid = 256, int refine_iters = 40);

/// Largest eigenvalue modulus.
double spectral_radius(const ComplexMatrix& T);

/// Defect operator D = (I - P*P)^{1/2} with the orthonormal frame of its
/// range and the eigenvalues of D (descending).
struct DefectData {
    ComplexMatrix D;
    SubspaceBasis frame;
    std::vector<double> eigs;
};

/// Hermitian square root via eigendecomposition. Eigenvalues of I - P*P in
/// [-1e-8, 0) are clamped to zero; anything below that throws NotAContraction.
/// The frame keeps eigenvectors whose D-eigenvalue exceeds rank_tol * max.
DefectData defect(const ComplexMatrix& P, double rank_tol = 1e-8);

/// Solution data for S - S*P = D A D on the defect space of P.
/// A is k x k in defect-frame coordinates (k = frame dimension);
/// residual = ||D lift(A) D - (S - S*P)||_F. For genuine inputs the part of
/// S - S*P outside the defect block vanishes; its largest entry is reported
/// in out_of_frame.
struct FundamentalSolve {
    ComplexMatrix A;
    double residual = 0.0;
    double omega = 0.0;        // numerical radius of A
    DefectData defect;
    double out_of_frame = 0.0;

    /// A carried back to the ambient space: frame * A * frame^*.
    ComplexMatrix lifted() const;
};

/// Solves the fundamental equation in the defect eigenframe by entrywise
/// division. Throws RankDeficientInconsistent when S - S*P has weight
/// outside the defect block above inconsistency_tol * scale (the input is
/// then not a Gamma-contraction); pass +infinity to always report instead.
FundamentalSolve fundamental_operator(const CommutingPair& pair,
                                      double rank_tol = 1e-8,
                                      double inconsistency_tol = 1e-6);

struct CertifyConfig {
    double tol = 1e-9;
    double ctol = 1e-8;
    double rank_tol = 1e-8;
    int radius_grid = 256;
    int radius_refine = 40;
};

/// Checks commutator, ||S|| <= 2, ||P|| <= 1, fundamental residual and
/// omega(A) <= 1, all within cfg.tol slack. Failures are recorded in the
/// certificate, never thrown.
Certificate certify_gamma_contraction(const CommutingPair& pair,
                                      const CertifyConfig& cfg = {});

/// Simultaneous diagonalization of a commuting normal pair by one random
/// linear combination with validation and retry.
struct JointDiag {
    ComplexMatrix basis;      // unitary; columns are joint eigenvectors
    ComplexVector s_eigs;
    ComplexVector p_eigs;
};
JointDiag joint_diagonalize(const CommutingPair& pair, double tol = 1e-8,
                            std::uint64_t seed = 0x9e3779b9u);

/// Checks normality, commutation, joint diagonalizability and that every
/// joint eigenvalue pair lies on the distinguished boundary.
Certificate certify_gamma_unitary(const CommutingPair& pair, double tol = 1e-8);

/// Finite-dimensional purity: spectral radius of P strictly below 1.
bool is_pure(const ComplexMatrix& P, double tol = 1e-8);

/// Spectral splitting of P into interior (pure) and unimodular (unitary)
/// spectral parts; both returned with their orthonormal frames. Valid for
/// Gamma-contractions, where the off-diagonal coupling blocks vanish.
struct SplitResult {
    CommutingPair pure;
    CommutingPair unitary;
    SubspaceBasis pure_frame;
    SubspaceBasis unitary_frame;
};
SplitResult split_pure_unitary(const CommutingPair& pair, double gap_tol = 1e-6);

/// (U* S U, U* P U); throws NotUnitary unless U is unitary within 1e-10.
CommutingPair unitary_conjugate(const CommutingPair& pair, const ComplexMatrix& U);

}  // namespace gammatk::opcore
