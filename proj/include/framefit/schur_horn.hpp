#pragma once

#include <vector>

#include "framefit/operators.hpp"
#include "framefit/sequence.hpp"

namespace framefit {

/// One two-coordinate averaging step: a rotation in the (i, j) plane with
/// cos^2(theta) = t, placing t*d_i + (1-t)*d_j on coordinate i. Indices are
/// 0-based positions in the sorted arrangement diag(b sorted descending).
struct TStep {
    long i = 0;
    long j = 0;
    double t = 0.0;  // in [0, 1]
};

/// Chain of at most n-1 averaging steps reducing diag(b sorted descending)
/// to a matrix whose diagonal carries the entries of c (sorted descending,
/// as a multiset; the landing order is tracked by the caller via replay).
std::vector<TStep> t_transform_chain(const Vec& b, const Vec& c, double tol = kDefaultTol);

/// The orthogonal matrix accumulated by replaying the chain (product of the
/// step rotations in order).
Mat chain_rotation(long n, const std::vector<TStep>& chain);

/// Orthogonal U with diag(U^T diag(b) U) = c entrywise, built from the
/// averaging chain conjugated with sorting permutations on both sides.
/// Residuals: |diag_i - c_i| <= 1e-9*(1+max|b|), ||U^T U - I||_inf <= 1e-10*n.
Mat construct_diagonal_unitary(const Vec& b, const Vec& c, double tol = kDefaultTol);

}  // namespace framefit
