#pragma once

#include <Eigen/Dense>
#include <optional>
#include <variant>

#include "framefit/evidence.hpp"
#include "framefit/sequence.hpp"

namespace framefit {

using Mat = Eigen::MatrixXd;

/// Dense real symmetric matrix with its eigendecomposition cached and
/// validated at construction (eigenvalues descending).
class FiniteHermitian {
  public:
    explicit FiniteHermitian(Mat m, double tol = kDefaultTol);

    long dim() const { return mat_.rows(); }
    const Mat& matrix() const { return mat_; }
    const Vec& eigenvalues() const { return eigs_; }       // descending
    const Mat& eigenvectors() const { return vecs_; }      // column i pairs with eigs[i]
    double trace() const { return mat_.trace(); }
    double min_eigenvalue() const { return eigs_[eigs_.size() - 1]; }
    double max_eigenvalue() const { return eigs_[0]; }
    double operator_norm() const;

  private:
    Mat mat_;
    Vec eigs_;
    Mat vecs_;
};

Vec eigenvalues_desc(const FiniteHermitian& s);

/// Diagonal operator over an infinite sequence model; the spectral summary
/// is computed once at construction.
class DiagonalOperator;

struct SpectralSummary {
    bool finite_dimensional = false;
    double alpha_plus = 0.0;   // essential norm (unset when finite_dimensional)
    double alpha_minus = 0.0;  // essential spectrum minimum
    double operator_norm = 0.0;
    bool p2_infinite = false;
    long p2_rank = 0;  // valid when !p2_infinite
    Vec splus_eigs;    // descending positive part eigenvalues (maybe truncated)
    double splus_residual = 0.0;
    bool sminus_available = false;
    Vec sminus_eigs;  // ascending (most negative first)
    double sminus_residual = 0.0;
};

class DiagonalOperator {
  public:
    explicit DiagonalOperator(SequenceModel diag, double accuracy = 1e-12);

    const SequenceModel& diag() const { return diag_; }
    const SpectralSummary& summary() const { return summary_; }
    double accuracy() const { return accuracy_; }

  private:
    SequenceModel diag_;
    SpectralSummary summary_;
    double accuracy_;
};

using OperatorModel = std::variant<FiniteHermitian, DiagonalOperator>;

inline bool is_finite_dimensional(const OperatorModel& s) {
    return std::holds_alternative<FiniteHermitian>(s);
}

SpectralSummary spectral_summary(const OperatorModel& s, double accuracy = 1e-12);

/// Sum of the k largest (smallest) eigenvalues for finite matrices; for
/// diagonal models, the compact positive (negative) part plus k times the
/// essential spectrum extreme, with a certified error bound.
BoundedValue u_k_op(const OperatorModel& s, long k);
BoundedValue l_k_op(const OperatorModel& s, long k);

struct InfiniteExtension {};  // tag: extend by an infinite zero block

/// S padded with a d-dimensional zero block, or diagonalized and extended
/// by an infinite zero tail.
OperatorModel embed_extended(const FiniteHermitian& s, long d);
OperatorModel embed_extended(const FiniteHermitian& s, InfiniteExtension);

struct MembershipReport {
    bool member = false;
    EvidenceList evidence;
};

/// Whether c lies in the sup-norm closure of the diagonals attainable from
/// S by conjugation: the two k-indexed trace-extremum inequality families
/// plus the asymptotic limsup/liminf bounds. Finite operators are embedded
/// with an infinite zero block first.
MembershipReport closure_membership(const OperatorModel& s, const SequenceModel& c,
                                    long horizon = kDefaultHorizon, double tol = kDefaultTol);

}  // namespace framefit
