#pragma once

#include "framefit/operators.hpp"

namespace framefit {

/// Ordered finite vector family in R^n, stored as the n x m synthesis
/// matrix whose k-th column is the k-th vector.
class Frame {
  public:
    explicit Frame(Mat synthesis);

    long dim() const { return t_.rows(); }
    long count() const { return t_.cols(); }
    const Mat& synthesis() const { return t_; }
    Vec vector(long k) const { return t_.col(k); }  // 0-based

  private:
    Mat t_;
};

struct FrameBounds {
    double lower = 0.0;  // least eigenvalue of the frame operator
    double upper = 0.0;  // greatest eigenvalue
};

/// S = T T^T = sum of the rank-one outer products of the vectors.
FiniteHermitian frame_operator(const Frame& f);

FrameBounds frame_bounds(const Frame& f);
bool is_frame(const Frame& f, double tol = kDefaultTol);
bool is_tight(const Frame& f, double tol = kDefaultTol);
bool is_parseval(const Frame& f, double tol = kDefaultTol);

/// Number of vectors minus the numerical rank of the synthesis matrix.
long excess(const Frame& f, double tol = kDefaultTol);

Vec norms_squared(const Frame& f);

struct VerifyReport {
    double max_norm_dev = 0.0;  // max_k | ||f_k||^2 - c_k |
    double operator_dev = 0.0;  // 2-norm of frame_operator(F) - S
    bool pass = false;
};

VerifyReport verify_pair(const Frame& f, const FiniteHermitian& s, const Vec& c,
                         double tol = kDefaultTol);

}  // namespace framefit
