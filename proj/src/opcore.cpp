#include "gammatk/opcore.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>
#include <sstream>

#include <Eigen/Eigenvalues>
#include <Eigen/QR>

#include "gammatk/errors.hpp"
#include "gammatk/geometry.hpp"

namespace gammatk::opcore {

namespace {

constexpr double kTwoPi = 6.283185307179586476925;
constexpr double kGolden = 0.6180339887498949;

double herm_lambda_max(const ComplexMatrix& T, double theta) {
    const Complex phase = std::polar(1.0, theta);
    const ComplexMatrix H = 0.5 * (phase * T + std::conj(phase) * T.adjoint());
    Eigen::SelfAdjointEigenSolver<ComplexMatrix> es(H, Eigen::EigenvaluesOnly);
    return es.eigenvalues().maxCoeff();
}

}  // namespace

double numerical_radius(const ComplexMatrix& T, int grid, int refine_iters) {
    if (T.rows() != T.cols()) throw InvalidInput("numerical_radius: square matrix required");
    if (T.size() == 0) return 0.0;
    if (grid < 32) throw InvalidInput("numerical_radius: grid must be >= 32");

    double best = -std::numeric_limits<double>::infinity();
    int best_i = 0;
    for (int i = 0; i < grid; ++i) {
        const double v = herm_lambda_max(T, kTwoPi * double(i) / double(grid));
        if (v > best) {
            best = v;
            best_i = i;
        }
    }

    // golden-section sweep of the bracketing cell
    const double h = kTwoPi / double(grid);
    double a = kTwoPi * double(best_i) / double(grid) - h;
    double b = a + 2.0 * h;
    double x1 = b - kGolden * (b - a);
    double x2 = a + kGolden * (b - a);
    double f1 = herm_lambda_max(T, x1);
    double f2 = herm_lambda_max(T, x2);
    for (int it = 0; it < refine_iters; ++it) {
        best = std::max(best, std::max(f1, f2));
        if (f1 < f2) {
            a = x1;
            x1 = x2;
            f1 = f2;
            x2 = a + kGolden * (b - a);
            f2 = herm_lambda_max(T, x2);
        } else {
            b = x2;
            x2 = x1;
            f2 = f1;
            x1 = b - kGolden * (b - a);
            f1 = herm_lambda_max(T, x1);
        }
    }
    return std::max(best, std::max(f1, f2));
}

double spectral_radius(const ComplexMatrix& T) {
    if (T.rows() != T.cols()) throw InvalidInput("spectral_radius: square matrix required");
    if (T.size() == 0) return 0.0;
    Eigen::ComplexEigenSolver<ComplexMatrix> es(T, false);
    if (es.info() != Eigen::Success) throw Error("spectral_radius: eigensolver failed");
    return es.eigenvalues().cwiseAbs().maxCoeff();
}

DefectData defect(const ComplexMatrix& P, double rank_tol) {
    if (P.rows() != P.cols()) throw InvalidInput("defect: square matrix required");
    const Eigen::Index d = P.rows();

    ComplexMatrix H = ComplexMatrix::Identity(d, d) - P.adjoint() * P;
    H = 0.5 * (H + H.adjoint()).eval();
    Eigen::SelfAdjointEigenSolver<ComplexMatrix> es(H);
    Eigen::VectorXd lam = es.eigenvalues();  // ascending

    if (lam.size() > 0 && lam(0) < -1e-8) {
        std::ostringstream msg;
        msg << "defect: I - P*P has eigenvalue " << lam(0) << "; P is not a contraction";
        throw NotAContraction(msg.str());
    }
    for (Eigen::Index i = 0; i < lam.size(); ++i) lam(i) = std::max(lam(i), 0.0);

    const Eigen::VectorXd droot = lam.cwiseSqrt();
    ComplexMatrix D = es.eigenvectors() * droot.asDiagonal() * es.eigenvectors().adjoint();
    D = 0.5 * (D + D.adjoint()).eval();

    const double dmax = (droot.size() > 0) ? droot.maxCoeff() : 0.0;
    const double thr = rank_tol * dmax;

    // descending order, keep eigenvectors above the rank threshold
    std::vector<Eigen::Index> keep;
    for (Eigen::Index i = droot.size(); i-- > 0;)
        if (dmax > 0.0 && droot(i) > thr) keep.push_back(i);

    ComplexMatrix frame(d, static_cast<Eigen::Index>(keep.size()));
    std::vector<double> eigs(keep.size());
    for (std::size_t c = 0; c < keep.size(); ++c) {
        frame.col(static_cast<Eigen::Index>(c)) = es.eigenvectors().col(keep[c]);
        eigs[c] = droot(keep[c]);
    }
    return DefectData{std::move(D), SubspaceBasis::make(std::move(frame), "defect"),
                      std::move(eigs)};
}

ComplexMatrix FundamentalSolve::lifted() const {
    return defect.frame.frame * A * defect.frame.frame.adjoint();
}

FundamentalSolve fundamental_operator(const CommutingPair& pair, double rank_tol,
                                      double inconsistency_tol) {
    FundamentalSolve out;
    out.defect = defect(pair.P, rank_tol);

    const ComplexMatrix R = pair.S - pair.S.adjoint() * pair.P;
    const ComplexMatrix& F = out.defect.frame.frame;
    const Eigen::Index k = F.cols();

    // entrywise division in the defect eigenframe
    const ComplexMatrix Rf = F.adjoint() * R * F;
    out.A.resize(k, k);
    for (Eigen::Index i = 0; i < k; ++i)
        for (Eigen::Index j = 0; j < k; ++j)
            out.A(i, j) = Rf(i, j) / (out.defect.eigs[i] * out.defect.eigs[j]);

    out.residual = (out.defect.D * out.lifted() * out.defect.D - R).norm();

    // weight of S - S*P outside the defect block
    const ComplexMatrix proj = F * F.adjoint();
    const ComplexMatrix outside = R - proj * R * proj;
    out.out_of_frame = outside.size() > 0 ? outside.cwiseAbs().maxCoeff() : 0.0;

    out.omega = numerical_radius(out.A);

    const double scale = 1.0 + R.norm();
    if (out.out_of_frame > inconsistency_tol * scale) {
        std::ostringstream msg;
        msg << "fundamental_operator: S - S*P has weight " << out.out_of_frame
            << " outside the defect block; the pair is not a Gamma-contraction";
        throw RankDeficientInconsistent(msg.str());
    }
    return out;
}

Certificate certify_gamma_contraction(const CommutingPair& pair, const CertifyConfig& cfg) {
    Certificate cert;
    const double ns = op_norm(pair.S);
    const double np = op_norm(pair.P);

    cert.add_check("commutator", pair.commutator_norm, cfg.ctol * (1.0 + ns * np));
    cert.add_check("norm_S", ns, 2.0 + cfg.tol);
    cert.add_check("norm_P", np, 1.0 + cfg.tol);

    if (np <= 1.0 + 1e-8) {
        const FundamentalSolve fs = fundamental_operator(
            pair, cfg.rank_tol, std::numeric_limits<double>::infinity());
        const double rscale = 1.0 + (pair.S - pair.S.adjoint() * pair.P).norm();
        cert.add_check("fundamental_residual", fs.residual, cfg.tol * rscale);
        cert.add_check("omega_A", fs.omega, 1.0 + cfg.tol);
        std::ostringstream notes;
        notes << "omega(A) from grid " << cfg.radius_grid << " + " << cfg.radius_refine
              << " golden-section iterations; defect rank " << fs.defect.frame.dim()
              << " at rank_tol " << cfg.rank_tol;
        cert.notes = notes.str();
    } else {
        cert.add_flag("fundamental_solve", false);
        cert.notes = "P is not a contraction; fundamental equation skipped";
    }
    cert.finalize();
    return cert;
}

JointDiag joint_diagonalize(const CommutingPair& pair, double tol, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> unit(0.0, 1.0);

    const double scale = 1.0 + op_norm(pair.S) + op_norm(pair.P);
    for (int attempt = 0; attempt < 5; ++attempt) {
        const Complex mu = std::polar(0.5 + unit(rng), kTwoPi * unit(rng));
        const ComplexMatrix M = pair.S + mu * pair.P;
        Eigen::ComplexSchur<ComplexMatrix> schur(M, true);
        if (schur.info() != Eigen::Success) continue;
        const ComplexMatrix Q = schur.matrixU();

        const ComplexMatrix Ds = Q.adjoint() * pair.S * Q;
        const ComplexMatrix Dp = Q.adjoint() * pair.P * Q;
        const double off = (Ds - ComplexMatrix(Ds.diagonal().asDiagonal())).norm() +
                           (Dp - ComplexMatrix(Dp.diagonal().asDiagonal())).norm();
        if (off <= tol * scale * double(pair.dim() == 0 ? 1 : pair.dim())) {
            return JointDiag{Q, Ds.diagonal(), Dp.diagonal()};
        }
    }
    throw JointDiagonalizationFailed(
        "joint_diagonalize: no random combination produced a joint eigenbasis "
        "(input not a commuting normal pair?)");
}

Certificate certify_gamma_unitary(const CommutingPair& pair, double tol) {
    Certificate cert;
    const double ns = op_norm(pair.S);
    const double np = op_norm(pair.P);

    const double normal_s = (pair.S.adjoint() * pair.S - pair.S * pair.S.adjoint()).norm();
    const double normal_p = (pair.P.adjoint() * pair.P - pair.P * pair.P.adjoint()).norm();
    cert.add_check("normal_S", normal_s, tol * (1.0 + ns * ns));
    cert.add_check("normal_P", normal_p, tol * (1.0 + np * np));
    cert.add_check("commutator", pair.commutator_norm, tol * (1.0 + ns * np));

    bool structural_ok = true;
    for (const auto& c : cert.checks) structural_ok = structural_ok && c.ok;

    if (structural_ok) {
        const JointDiag jd = joint_diagonalize(pair, tol);
        double worst = 0.0;
        for (Eigen::Index i = 0; i < jd.s_eigs.size(); ++i) {
            const auto cls = geometry::classify_point({jd.s_eigs(i), jd.p_eigs(i)}, tol);
            worst = std::max(worst, cls.margin);
        }
        cert.add_check("joint_spectrum_on_distinguished_boundary", worst, tol);
    } else {
        cert.add_flag("joint_spectrum_on_distinguished_boundary", false);
        cert.notes = "normality or commutation failed; joint spectrum not examined";
    }
    cert.finalize();
    return cert;
}

bool is_pure(const ComplexMatrix& P, double tol) {
    if (P.rows() != P.cols()) throw InvalidInput("is_pure: square matrix required");
    if (op_norm(P) > 1.0 + 1e-8) throw NotAContraction("is_pure: ||P|| > 1");
    return spectral_radius(P) < 1.0 - tol;
}

SplitResult split_pure_unitary(const CommutingPair& pair, double gap_tol) {
    const Eigen::Index d = pair.dim();
    Eigen::ComplexEigenSolver<ComplexMatrix> es(pair.P, true);
    if (es.info() != Eigen::Success) throw Error("split_pure_unitary: eigensolver failed");

    std::vector<Eigen::Index> unit_idx;
    for (Eigen::Index i = 0; i < d; ++i) {
        const double m = std::abs(es.eigenvalues()(i));
        if (m >= 1.0 - 1e-10) {
            unit_idx.push_back(i);
        } else if (m > 1.0 - gap_tol) {
            std::ostringstream msg;
            msg << "split_pure_unitary: eigenvalue modulus " << m
                << " inside the gap band (1 - " << gap_tol << ", 1)";
            throw SpectralGapTooSmall(msg.str());
        }
    }

    const Eigen::Index ku = static_cast<Eigen::Index>(unit_idx.size());
    ComplexMatrix Vu(d, ku);
    for (Eigen::Index c = 0; c < ku; ++c) Vu.col(c) = es.eigenvectors().col(unit_idx[c]);

    // orthonormalize the unitary-part eigenvectors, complete to a full basis
    ComplexMatrix Qu(d, ku), Qp(d, d - ku);
    if (ku > 0) {
        Eigen::HouseholderQR<ComplexMatrix> qr(Vu);
        const ComplexMatrix Qfull = qr.householderQ();
        Qu = Qfull.leftCols(ku);
        Qp = Qfull.rightCols(d - ku);
    } else {
        Qp = ComplexMatrix::Identity(d, d);
    }

    // the unimodular spectral subspace of a contraction reduces the pair;
    // verify the coupling blocks vanish before restricting
    const double scale = 1.0 + op_norm(pair.S) + op_norm(pair.P);
    double coupling = 0.0;
    if (ku > 0 && ku < d) {
        coupling = std::max({(Qu.adjoint() * pair.S * Qp).norm(),
                             (Qp.adjoint() * pair.S * Qu).norm(),
                             (Qu.adjoint() * pair.P * Qp).norm(),
                             (Qp.adjoint() * pair.P * Qu).norm()});
    }
    if (coupling > 1e-8 * scale) {
        std::ostringstream msg;
        msg << "split_pure_unitary: coupling blocks do not vanish (" << coupling
            << "); input is not a Gamma-contraction";
        throw InvalidInput(msg.str());
    }

    SplitResult out{
        CommutingPair::make(Qp.adjoint() * pair.S * Qp, Qp.adjoint() * pair.P * Qp,
                            1e-6, PairRole::GammaContraction),
        CommutingPair::make(Qu.adjoint() * pair.S * Qu, Qu.adjoint() * pair.P * Qu,
                            1e-6, PairRole::GammaUnitary),
        SubspaceBasis::make(std::move(Qp), "pure"),
        SubspaceBasis::make(std::move(Qu), "unitary")};
    return out;
}

CommutingPair unitary_conjugate(const CommutingPair& pair, const ComplexMatrix& U) {
    if (U.rows() != U.cols() || U.rows() != pair.dim())
        throw InvalidInput("unitary_conjugate: dimension mismatch");
    const double dev =
        (U.adjoint() * U - ComplexMatrix::Identity(U.rows(), U.cols())).norm();
    if (dev > 1e-10 * (1.0 + std::sqrt(double(U.rows())))) {
        std::ostringstream msg;
        msg << "unitary_conjugate: U deviates from unitarity by " << dev;
        throw NotUnitary(msg.str());
    }
    return CommutingPair{U.adjoint() * pair.S * U, U.adjoint() * pair.P * U,
                         pair.commutator_norm, pair.role};
}

}  // namespace gammatk::opcore
