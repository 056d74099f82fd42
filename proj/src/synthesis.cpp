#include "framefit/synthesis.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

#include "framefit/schur_horn.hpp"

namespace framefit {

namespace {

constexpr long kScanCap = 2'000'000;

struct LevelCoord {
    double val = 0.0;
    long idx = 0;  // 1-based
};

double remaining_upper_mass(const SequenceModel& a, long scanned_through) {
    if (a.tail_kind() == TailKind::Constant) return 0.0;
    const TailMeta& m = a.meta();
    if (!m.dev_summable_above || !m.upper_tail_mass)
        throw HorizonExceeded("head decomposition: tail deviations not declared summable");
    const long J = std::max(scanned_through, a.head_size());
    return m.upper_tail_mass(a.tail_origin() - 1 + (J - a.head_size()));
}

/// The `count` largest diagonal entries at or above `alpha`, smallest index
/// first on ties. Complete once the unscanned deviation mass above alpha is
/// negligible.
std::vector<LevelCoord> top_block_coords(const SequenceModel& a, double alpha, long count,
                                         double btol) {
    std::vector<LevelCoord> found;
    for (long i = 1; i <= kScanCap; ++i) {
        const double v = a.entry(i);
        if (v >= alpha - btol) found.push_back({v, i});
        if (static_cast<long>(found.size()) >= count && i >= a.head_size() &&
            remaining_upper_mass(a, i) <= btol)
            break;
    }
    if (static_cast<long>(found.size()) < count)
        throw HorizonExceeded("head decomposition: too few coordinates at the top level");
    std::stable_sort(found.begin(), found.end(),
                     [](const LevelCoord& x, const LevelCoord& y) { return x.val > y.val; });
    found.resize(count);
    return found;
}

/// The first `count` coordinates whose entries lie strictly inside (lo, hi).
std::vector<LevelCoord> interval_coords(const SequenceModel& a, double lo, double hi, long count) {
    std::vector<LevelCoord> found;
    for (long i = 1; i <= kScanCap && static_cast<long>(found.size()) < count; ++i) {
        const double v = a.entry(i);
        if (v > lo && v < hi) found.push_back({v, i});
    }
    if (static_cast<long>(found.size()) < count)
        throw HorizonExceeded("head decomposition: too few coordinates in the surrogate band");
    return found;
}

/// Smallest index past every norm entry above the threshold.
long find_m0(const SequenceModel& c, double threshold) {
    long last_above = 0;
    const double lsc = c.limsup();
    if (threshold <= lsc)
        throw SufficiencyFailed("head decomposition: threshold does not clear the norm limsup");
    for (long i = 1; i <= c.head_size(); ++i)
        if (c.entry(i) > threshold) last_above = i;
    if (c.tail_kind() == TailKind::Generator) {
        const TailMeta& m = c.meta();
        if (!m.dev_summable_above || !m.upper_tail_mass)
            throw HorizonExceeded("head decomposition: norm tail deviations not declared summable");
        long i = c.head_size();
        while (remaining_upper_mass(c, i) > threshold - lsc) {
            if (++i > kScanCap)
                throw HorizonExceeded("head decomposition: norm tail scan exceeded the cap");
            if (c.entry(i) > threshold) last_above = i;
        }
    }
    return last_above + 1;
}

}  // namespace

Frame synthesize_finite(const FiniteHermitian& s, const Vec& c, double tol) {
    const AdmissibilityVerdict v = check_finite_finite(s, c, tol);
    if (v.status != Status::Admissible)
        throw NotAdmissibleError("synthesize_finite: the pair fails the finite decisive test");
    const long n = s.dim();
    const long m = c.size();
    Vec bpad = Vec::Zero(m);
    bpad.head(n) = s.eigenvalues();
    const Mat rot = construct_diagonal_unitary(bpad, c, tol);
    const Mat x = bpad.cwiseMax(0.0).cwiseSqrt().asDiagonal() * rot;
    Mat t = s.eigenvectors() * x.topRows(n);
    return Frame(std::move(t));
}

Frame synthesize_truncated_summable(const FiniteHermitian& s, const SequenceModel& c,
                                    long n_vectors, double tol) {
    const AdmissibilityVerdict v = check_finite_infinite(s, c, tol);
    if (v.status != Status::Admissible)
        throw NotAdmissibleError("synthesize_truncated_summable: the pair fails the decisive test");
    if (n_vectors < s.dim() + 1)
        throw InvalidInput("synthesize_truncated_summable: need at least n+1 vectors");
    Vec ct(n_vectors);
    double consumed = 0.0;
    for (long i = 0; i < n_vectors - 1; ++i) {
        ct[i] = c.entry(i + 1);
        consumed += ct[i];
    }
    ct[n_vectors - 1] = c.total_sum() - consumed;
    if (ct[n_vectors - 1] < -tol)
        throw TruncationInadmissible("synthesize_truncated_summable: absorbed tail is negative");
    const AdmissibilityVerdict fv = check_finite_finite(s, ct, tol);
    if (fv.status != Status::Admissible)
        throw TruncationInadmissible(
            "synthesize_truncated_summable: absorbed-tail profile not majorized; increase N");
    return synthesize_finite(s, ct, tol);
}

HeadDecomposition head_decompose(const DiagonalOperator& s, const SequenceModel& c, long horizon,
                                 double tol) {
    const CheckResult suf = check_sufficient(s, c, horizon, tol);
    if (!suf.pass) throw SufficiencyFailed("head_decompose: sufficient conditions do not hold");

    const SequenceModel& a = s.diag();
    const SpectralSummary& sm = s.summary();
    const double alpha = sm.alpha_plus;
    const double lsc = c.limsup();
    const double gap = alpha - lsc;
    const double eps = gap / 2.0;
    const double btol = 1e-12 * (1.0 + std::abs(alpha));
    const long m0 = find_m0(c, alpha - eps);

    HeadDecomposition dec;
    std::vector<LevelCoord> block;  // lambda coordinates then the h coordinate
    if (sm.p2_infinite) {
        dec.case_id = 1;
        dec.eps_or_delta = eps;
        dec.m_index = m0;
        block = top_block_coords(a, alpha, m0 + 1, btol);
        dec.lambdas = Vec(m0);
        for (long i = 0; i < m0; ++i) dec.lambdas[i] = block[i].val;
    } else {
        dec.case_id = 2;
        const long r = sm.p2_rank;
        double min_gap = gap;
        const OperatorModel op = s;
        for (long k = r + 1; k <= horizon; ++k) {
            const BoundedValue us = u_k_op(op, k);
            const BoundedValue uc = u_k_seq(c, k);
            min_gap = std::min(min_gap, (us.value - us.error) - (uc.value + uc.error));
        }
        const double delta = min_gap / 2.0;
        if (delta <= 0.0)
            throw SufficiencyFailed("head_decompose: no certified strictness margin");
        const long m1 = std::max(m0, r + 1);
        const double level = alpha - delta / (2.0 * static_cast<double>(m1));
        dec.eps_or_delta = delta;
        dec.m_index = m1;
        block = top_block_coords(a, alpha, r, btol);
        const std::vector<LevelCoord> surr = interval_coords(a, level, alpha - btol, m1 + 1 - r);
        dec.lambdas = Vec(m1);
        for (long i = 0; i < r; ++i) dec.lambdas[i] = block[i].val;
        for (long i = r; i < m1; ++i) dec.lambdas[i] = level;
        for (const LevelCoord& lc : surr) block.push_back(lc);
    }

    // First n0 with a strictly larger partial norm sum than the block mass.
    const double lamsum = dec.lambdas.size() > 0 ? dec.lambdas.sum() : 0.0;
    double csum = 0.0;
    long n0 = 0;
    for (long i = 1; i <= kScanCap; ++i) {
        csum += c.entry(i);
        if (csum > lamsum) {
            n0 = i;
            break;
        }
    }
    if (n0 == 0) throw HorizonExceeded("head_decompose: norm sums never exceed the block mass");
    dec.n0 = n0;
    dec.h = csum - lamsum;
    dec.c0 = c.prefix(n0);

    const double hcap =
        dec.case_id == 1 ? block[dec.m_index].val : alpha - dec.eps_or_delta / (2.0 * dec.m_index);
    if (dec.h > c.entry(n0) + tol_scale(tol, c.entry(n0)) || dec.h > hcap + tol_scale(tol, hcap))
        throw NumericalFailure("head_decompose: leftover level violates its bounds");

    Vec target = Vec::Zero(n0);
    target.head(dec.m_index) = dec.lambdas;
    target[dec.m_index] = dec.h;
    if (!majorizes(target, dec.c0, tol))
        throw SufficiencyFailed("head_decompose: consumed norms not majorized by the block levels");

    dec.block_coords.clear();
    for (const LevelCoord& lc : block) dec.block_coords.push_back(lc.idx);

    Vec block_diag(dec.m_index + 1);
    block_diag.head(dec.m_index) = dec.lambdas;
    block_diag[dec.m_index] = dec.h;
    const Frame head = synthesize_finite(FiniteHermitian(Mat(block_diag.asDiagonal())), dec.c0, tol);
    dec.head_vectors = head.synthesis();

    const long maxc = *std::max_element(dec.block_coords.begin(), dec.block_coords.end());
    Vec pref = a.prefix(maxc);
    for (long i = 0; i <= dec.m_index; ++i)
        pref[dec.block_coords[i] - 1] -= block_diag[i];
    dec.residual_diag = a.replace_prefix(pref);
    return dec;
}

GreedyResult greedy_extend(const HeadDecomposition& dec, const SequenceModel& c, long steps,
                           long horizon, double tol) {
    const long stages = std::max<long>(steps, 1);
    GreedyResult out;
    std::vector<Mat> blocks;
    std::vector<std::vector<long>> coords;

    HeadDecomposition cur = dec;
    SequenceModel crem = c;
    for (long stage = 1;; ++stage) {
        blocks.push_back(cur.head_vectors);
        coords.push_back(cur.block_coords);
        const double zero_tol = 1e-12 * (1.0 + cur.lambdas.cwiseAbs().maxCoeff());
        for (long j : cur.block_coords)
            if (std::abs(cur.residual_diag.entry(j)) <= zero_tol) out.consumed_coords.push_back(j);
        out.norms_consumed += cur.n0;
        out.residual_diag = cur.residual_diag;
        out.stages_done = stage;
        crem = crem.drop_front(cur.n0);
        if (stage == stages) break;
        try {
            cur = head_decompose(DiagonalOperator(cur.residual_diag), crem, horizon, tol);
        } catch (const SufficiencyFailed&) {
            out.stopped_early = true;
            break;
        } catch (const HorizonExceeded&) {
            out.stopped_early = true;
            break;
        }
    }

    long ambient = 0, total = 0;
    for (std::size_t s = 0; s < coords.size(); ++s) {
        for (long j : coords[s]) ambient = std::max(ambient, j);
        total += blocks[s].cols();
    }
    Mat synth = Mat::Zero(ambient, total);
    long col = 0;
    for (std::size_t s = 0; s < coords.size(); ++s) {
        for (long k = 0; k < blocks[s].cols(); ++k, ++col)
            for (long i = 0; i < blocks[s].rows(); ++i)
                synth(coords[s][static_cast<std::size_t>(i)] - 1, col) = blocks[s](i, k);
    }
    out.synthesis = std::move(synth);
    return out;
}

}  // namespace framefit
