#pragma once

#include "framefit/evidence.hpp"
#include "framefit/operators.hpp"

namespace framefit {

enum class Status { Admissible, NotAdmissible, Undetermined };

const char* to_string(Status s);

/// Trichotomy verdict. Admissible only via a decisive or sufficient test;
/// NotAdmissible only via a provably failed necessary condition (with
/// witness); Undetermined when all necessary checks pass but no sufficient
/// test applies.
struct AdmissibilityVerdict {
    Status status = Status::Undetermined;
    EvidenceList evidence;
};

struct CheckResult {
    bool pass = false;
    EvidenceList evidence;
};

/// Decisive test for an invertible n x n operator and m prescribed norms:
/// admissible iff c is majorized by the eigenvalue list padded with zeros.
AdmissibilityVerdict check_finite_finite(const FiniteHermitian& s, const Vec& c,
                                         double tol = kDefaultTol);

/// Decisive test for an invertible n x n operator and a summable infinite
/// norm list: partial eigenvalue sums dominate U_k(c) for k < n, and the
/// trace equals the total sum of c.
AdmissibilityVerdict check_finite_infinite(const FiniteHermitian& s, const SequenceModel& c,
                                           double tol = kDefaultTol);

/// Necessary conditions for an infinite diagonal operator: divergence of
/// the norm sums, the U_k inequality family up to the horizon, and the
/// limsup bound by the essential norm. The L_k side is omitted: the
/// zero-padded extension makes it hold automatically.
CheckResult check_necessary(const DiagonalOperator& s, const SequenceModel& c,
                            long horizon = kDefaultHorizon, double tol = kDefaultTol);

/// Sufficient conditions, split on the rank of the spectral projection onto
/// [essential norm, norm]: infinite rank needs the non-strict U_k family and
/// a strict limsup gap; finite rank r additionally needs strictness for
/// k > r. Beyond the horizon the inequalities are certified by the affine
/// gap lower bound with slope (essential norm - limsup c).
CheckResult check_sufficient(const DiagonalOperator& s, const SequenceModel& c,
                             long horizon = kDefaultHorizon, double tol = kDefaultTol);

/// Dispatch: decisive tests in finite dimension, the necessary/sufficient
/// trichotomy for diagonal operators.
AdmissibilityVerdict classify(const OperatorModel& s, const SequenceModel& c,
                              long horizon = kDefaultHorizon, double tol = kDefaultTol);

/// Tight-frame criterion for S = A*I: admissible when the norms not equal
/// to A diverge in sum and their limsup stays below A. Membership in the
/// equality set is structural (exact head values, tail kind); when the
/// criterion does not structurally apply, falls back to classify(A*I, c).
AdmissibilityVerdict tight_admissible(double a, const SequenceModel& c,
                                      long horizon = kDefaultHorizon, double tol = kDefaultTol);

/// True when every frame realizing the pair must have infinite excess:
/// liminf c strictly below the essential spectrum minimum of S.
bool excess_forced_infinite(const DiagonalOperator& s, const SequenceModel& c,
                            double tol = kDefaultTol);

}  // namespace framefit
