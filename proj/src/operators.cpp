#include "framefit/operators.hpp"

#include <Eigen/Eigenvalues>
#include <algorithm>
#include <cmath>
#include <vector>

namespace framefit {

namespace {

constexpr long kMaxTailScan = 4'000'000;

// Entries exceeding the limsup, as positive deviations, scanned until the
// remaining declared tail mass drops below `accuracy`. Sorted descending.
std::vector<double> upper_deviations(const SequenceModel& a, double accuracy, double& residual) {
    const double ls = a.limsup();
    std::vector<double> pos;
    for (long i = 1; i <= a.head_size(); ++i) {
        const double dev = a.entry(i) - ls;
        if (dev > 0.0) pos.push_back(dev);
    }
    residual = 0.0;
    if (a.tail_kind() == TailKind::Generator) {
        const TailMeta& m = a.meta();
        if (!m.dev_summable_above || !m.upper_tail_mass)
            throw HorizonExceeded("spectral summary: deviations above the limsup not declared summable");
        long scanned = 0;
        residual = m.upper_tail_mass(a.tail_origin() - 1);
        while (residual > accuracy) {
            const long chunk = std::max<long>(1024, scanned);
            if (scanned + chunk > kMaxTailScan)
                throw HorizonExceeded("spectral summary: tail-mass bound cannot certify the accuracy");
            for (long j = 0; j < chunk; ++j) {
                const double dev = a.entry(a.head_size() + scanned + j + 1) - ls;
                if (dev > 0.0) pos.push_back(dev);
            }
            scanned += chunk;
            residual = m.upper_tail_mass(a.tail_origin() - 1 + scanned);
        }
    }
    std::sort(pos.begin(), pos.end(), std::greater<double>());
    return pos;
}

SpectralSummary summarize_diagonal(const SequenceModel& a, double accuracy) {
    SpectralSummary s;
    s.finite_dimensional = false;
    s.alpha_plus = a.limsup();
    s.alpha_minus = a.liminf();
    s.operator_norm = a.sup_abs();

    std::vector<double> plus = upper_deviations(a, accuracy, s.splus_residual);
    s.splus_eigs = Eigen::Map<const Vec>(plus.data(), static_cast<long>(plus.size()));

    const bool lower_ok = a.tail_kind() == TailKind::Constant ||
                          (a.meta().dev_summable_below && a.meta().lower_tail_mass);
    s.sminus_available = lower_ok;
    if (lower_ok) {
        std::vector<double> minus = upper_deviations(a.negated(), accuracy, s.sminus_residual);
        Vec v(static_cast<long>(minus.size()));
        for (long i = 0; i < v.size(); ++i) v[i] = -minus[i];  // ascending from most negative
        s.sminus_eigs = std::move(v);
    }

    // Rank of the spectral projection onto [alpha_plus, norm]. Membership at
    // the boundary is structural for tail entries (declared by the model) and
    // tolerance-banded for explicit head entries.
    const double btol = 1e-12 * (1.0 + std::abs(s.alpha_plus));
    if (a.tail_kind() == TailKind::Constant || a.meta().attains_limsup_infinitely) {
        s.p2_infinite = true;
    } else {
        long rank = 0;
        for (long i = 1; i <= a.head_size(); ++i)
            if (a.entry(i) >= s.alpha_plus - btol) ++rank;
        // Tail entries count only through strict positive deviations; the
        // scan is complete for entries beyond btol since the unscanned mass
        // is below the accuracy.
        if (a.head_size() > 0) {
            double dummy = 0.0;
            const std::vector<double> tail_devs =
                upper_deviations(a.drop_front(a.head_size()), accuracy, dummy);
            for (double d : tail_devs)
                if (d > btol) ++rank;
        } else {
            for (double d : plus)
                if (d > btol) ++rank;
        }
        s.p2_rank = rank;
    }
    return s;
}

double top_k_sum(const Vec& v, long k) {
    double s = 0.0;
    const long take = std::min<long>(k, v.size());
    for (long i = 0; i < take; ++i) s += v[i];
    return s;
}

}  // namespace

FiniteHermitian::FiniteHermitian(Mat m, double tol) : mat_(std::move(m)) {
    if (mat_.rows() < 1 || mat_.rows() != mat_.cols())
        throw DimensionMismatch("FiniteHermitian: matrix must be square and non-empty");
    if (!mat_.allFinite()) throw InvalidInput("FiniteHermitian: non-finite entry");
    const double scale = mat_.cwiseAbs().maxCoeff();
    const double sym = (mat_ - mat_.transpose()).cwiseAbs().maxCoeff();
    if (sym > tol_scale(tol, scale))
        throw InvalidInput("FiniteHermitian: matrix is not symmetric");
    mat_ = ((mat_ + mat_.transpose()) / 2.0).eval();

    Eigen::SelfAdjointEigenSolver<Mat> es(mat_);
    if (es.info() != Eigen::Success)
        throw NumericalFailure("FiniteHermitian: eigendecomposition did not converge");
    eigs_ = es.eigenvalues().reverse();
    vecs_ = es.eigenvectors().rowwise().reverse();

    const Mat recon = vecs_ * eigs_.asDiagonal() * vecs_.transpose();
    if ((recon - mat_).norm() > tol_scale(tol, mat_.norm()) * mat_.rows())
        throw NumericalFailure("FiniteHermitian: reconstruction residual too large");
}

double FiniteHermitian::operator_norm() const { return eigs_.cwiseAbs().maxCoeff(); }

Vec eigenvalues_desc(const FiniteHermitian& s) { return s.eigenvalues(); }

DiagonalOperator::DiagonalOperator(SequenceModel diag, double accuracy)
    : diag_(std::move(diag)), accuracy_(accuracy) {
    if (diag_.is_finite())
        throw InvalidInput("DiagonalOperator: requires an infinite sequence model");
    summary_ = summarize_diagonal(diag_, accuracy_);
}

SpectralSummary spectral_summary(const OperatorModel& s, double accuracy) {
    if (const auto* f = std::get_if<FiniteHermitian>(&s)) {
        (void)accuracy;
        SpectralSummary out;
        out.finite_dimensional = true;
        out.operator_norm = f->operator_norm();
        return out;
    }
    return std::get<DiagonalOperator>(s).summary();
}

BoundedValue u_k_op(const OperatorModel& s, long k) {
    if (k < 1) throw KMismatch("u_k_op: k must be >= 1");
    if (const auto* f = std::get_if<FiniteHermitian>(&s)) {
        if (k > f->dim()) throw KMismatch("u_k_op: k exceeds the dimension");
        return {top_k_sum(f->eigenvalues(), k), 0.0};
    }
    const SpectralSummary& sm = std::get<DiagonalOperator>(s).summary();
    return {top_k_sum(sm.splus_eigs, k) + static_cast<double>(k) * sm.alpha_plus,
            sm.splus_residual};
}

BoundedValue l_k_op(const OperatorModel& s, long k) {
    if (k < 1) throw KMismatch("l_k_op: k must be >= 1");
    if (const auto* f = std::get_if<FiniteHermitian>(&s)) {
        if (k > f->dim()) throw KMismatch("l_k_op: k exceeds the dimension");
        const Vec& e = f->eigenvalues();
        double v = 0.0;
        for (long i = 0; i < k; ++i) v += e[e.size() - 1 - i];
        return {v, 0.0};
    }
    const SpectralSummary& sm = std::get<DiagonalOperator>(s).summary();
    if (!sm.sminus_available)
        throw HorizonExceeded("l_k_op: deviations below the liminf not declared summable");
    return {top_k_sum(sm.sminus_eigs, k) + static_cast<double>(k) * sm.alpha_minus,
            sm.sminus_residual};
}

OperatorModel embed_extended(const FiniteHermitian& s, long d) {
    if (d < 0) throw InvalidInput("embed_extended: negative extension");
    const long n = s.dim();
    Mat out = Mat::Zero(n + d, n + d);
    out.topLeftCorner(n, n) = s.matrix();
    return FiniteHermitian(std::move(out));
}

OperatorModel embed_extended(const FiniteHermitian& s, InfiniteExtension) {
    return DiagonalOperator(SequenceModel::constant_tail(s.eigenvalues(), 0.0));
}

MembershipReport closure_membership(const OperatorModel& s_in, const SequenceModel& c_in,
                                    long horizon, double tol) {
    const OperatorModel* sp = &s_in;
    OperatorModel embedded = s_in;
    if (const auto* f = std::get_if<FiniteHermitian>(&s_in)) {
        embedded = embed_extended(*f, InfiniteExtension{});
        sp = &embedded;
    }
    const SequenceModel c =
        c_in.is_finite() ? SequenceModel::constant_tail(c_in.head(), 0.0) : c_in;
    const SpectralSummary sm = spectral_summary(*sp);

    MembershipReport rep;
    Evidence uk{"U_k(S) >= U_k(c) for k = 1..horizon", "uk-family", true, -1, 0.0, 0.0};
    for (long k = 1; k <= horizon; ++k) {
        const BoundedValue us = u_k_op(*sp, k);
        const BoundedValue uc = u_k_seq(c, k);
        if (us.value + us.error < uc.value - uc.error - tol_scale(tol, std::abs(uc.value))) {
            uk.pass = false;
            uk.witness_k = k;
            uk.lhs = us.value;
            uk.rhs = uc.value;
            break;
        }
    }
    rep.evidence.push_back(uk);

    Evidence lk{"L_k(S) <= L_k(c) for k = 1..horizon", "lk-family", true, -1, 0.0, 0.0};
    for (long k = 1; k <= horizon; ++k) {
        const BoundedValue ls = l_k_op(*sp, k);
        const BoundedValue lc = l_k_seq(c, k);
        if (ls.value - ls.error > lc.value + lc.error + tol_scale(tol, std::abs(lc.value))) {
            lk.pass = false;
            lk.witness_k = k;
            lk.lhs = ls.value;
            lk.rhs = lc.value;
            break;
        }
    }
    rep.evidence.push_back(lk);

    const double lsc = c.limsup();
    rep.evidence.push_back({"limsup c <= essential norm of S", "limsup-bound",
                            lsc <= sm.alpha_plus + tol_scale(tol, sm.alpha_plus), -1, lsc,
                            sm.alpha_plus});
    const double lic = c.liminf();
    rep.evidence.push_back({"liminf c >= essential spectrum minimum of S", "liminf-bound",
                            lic >= sm.alpha_minus - tol_scale(tol, sm.alpha_minus), -1, lic,
                            sm.alpha_minus});

    rep.member = all_pass(rep.evidence);
    return rep;
}

}  // namespace framefit
