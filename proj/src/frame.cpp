#include "framefit/frame.hpp"

#include <Eigen/SVD>

namespace framefit {

Frame::Frame(Mat synthesis) : t_(std::move(synthesis)) {
    if (t_.rows() < 1 || t_.cols() < 1)
        throw DimensionMismatch("Frame: need at least one vector in a nonzero-dimensional space");
    if (!t_.allFinite()) throw InvalidInput("Frame: non-finite entry");
}

FiniteHermitian frame_operator(const Frame& f) {
    Mat s = f.synthesis() * f.synthesis().transpose();
    return FiniteHermitian(std::move(s));
}

FrameBounds frame_bounds(const Frame& f) {
    const FiniteHermitian s = frame_operator(f);
    return {s.min_eigenvalue(), s.max_eigenvalue()};
}

bool is_frame(const Frame& f, double tol) { return frame_bounds(f).lower > tol; }

bool is_tight(const Frame& f, double tol) {
    const FrameBounds b = frame_bounds(f);
    return b.upper - b.lower <= tol * (1.0 + b.upper);
}

bool is_parseval(const Frame& f, double tol) {
    const FrameBounds b = frame_bounds(f);
    return b.upper - b.lower <= tol * (1.0 + b.upper) && std::abs(b.lower - 1.0) <= tol;
}

long excess(const Frame& f, double tol) {
    Eigen::JacobiSVD<Mat> svd(f.synthesis());
    const Vec sv = svd.singularValues();
    const double cutoff = tol * (1.0 + sv[0]);
    long rank = 0;
    for (long i = 0; i < sv.size(); ++i)
        if (sv[i] > cutoff) ++rank;
    return f.count() - rank;
}

Vec norms_squared(const Frame& f) { return f.synthesis().colwise().squaredNorm(); }

VerifyReport verify_pair(const Frame& f, const FiniteHermitian& s, const Vec& c, double tol) {
    if (f.dim() != s.dim()) throw DimensionMismatch("verify_pair: ambient dimension mismatch");
    if (f.count() != c.size()) throw DimensionMismatch("verify_pair: norm list length mismatch");
    VerifyReport r;
    r.max_norm_dev = (norms_squared(f) - c).cwiseAbs().maxCoeff();
    const FiniteHermitian dev(
        (f.synthesis() * f.synthesis().transpose() - s.matrix()).eval());
    r.operator_dev = dev.operator_norm();
    const double cmax = c.cwiseAbs().maxCoeff();
    r.pass = r.max_norm_dev <= tol * (1.0 + cmax) &&
             r.operator_dev <= tol * (1.0 + s.operator_norm());
    return r;
}

}  // namespace framefit
