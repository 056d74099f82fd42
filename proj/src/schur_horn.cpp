#include "framefit/schur_horn.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <vector>

namespace framefit {

namespace {

struct ChainResult {
    std::vector<TStep> steps;
    // landing[s] = position (in the sorted arrangement) that holds the s-th
    // largest entry of c after the replay.
    std::vector<long> landing;
};

// Inductive two-coordinate averaging on the sorted arrangement. Invariant:
// the values at the active positions are non-increasing along the position
// order, so the bracketing pair for the current (largest remaining) target
// is always a pair of adjacent active positions.
ChainResult build_chain(const Vec& bd, const Vec& cd) {
    const long n = bd.size();
    std::vector<double> vals(bd.data(), bd.data() + n);
    std::vector<long> active(n);
    std::iota(active.begin(), active.end(), 0L);
    ChainResult out;
    out.landing.resize(n);

    for (long s = 0; s < n; ++s) {
        const long m = static_cast<long>(active.size());
        double target = cd[s];
        target = std::min(std::max(target, vals[active[m - 1]]), vals[active[0]]);
        // First active slot whose value does not exceed the target; values
        // are non-increasing, so ties resolve to the smallest position.
        long idx = 0;
        while (idx < m && vals[active[idx]] > target) ++idx;
        if (idx < m && vals[active[idx]] == target) {
            out.landing[s] = active[idx];
            active.erase(active.begin() + idx);
            continue;
        }
        // Bracket: vals[p] > target > vals[q] with p, q adjacent.
        const long p = active[idx - 1];
        const long q = active[idx];
        const double x = vals[p], y = vals[q];
        const double t = (target - y) / (x - y);
        out.steps.push_back({p, q, t});
        vals[p] = target;
        vals[q] = x + y - target;
        out.landing[s] = p;
        active.erase(active.begin() + idx - 1);
    }
    return out;
}

}  // namespace

std::vector<TStep> t_transform_chain(const Vec& b, const Vec& c, double tol) {
    if (b.size() != c.size()) throw DimensionMismatch("t_transform_chain: length mismatch");
    if (!majorizes(b, c, tol)) throw NotMajorized("t_transform_chain: c is not majorized by b");
    return build_chain(sort_desc(b), sort_desc(c)).steps;
}

Mat chain_rotation(long n, const std::vector<TStep>& chain) {
    Mat u = Mat::Identity(n, n);
    for (const TStep& st : chain) {
        const double co = std::sqrt(st.t);
        const double si = std::sqrt(1.0 - st.t);
        const Vec colp = u.col(st.i);
        const Vec colq = u.col(st.j);
        u.col(st.i) = co * colp + si * colq;
        u.col(st.j) = -si * colp + co * colq;
    }
    return u;
}

Mat construct_diagonal_unitary(const Vec& b, const Vec& c, double tol) {
    if (b.size() != c.size()) throw DimensionMismatch("construct_diagonal_unitary: length mismatch");
    if (!majorizes(b, c, tol)) throw NotMajorized("construct_diagonal_unitary: c is not majorized by b");
    const long n = b.size();

    // Stable sorting permutations: bd[i] = b[pb[i]], cd[s] = c[pc[s]].
    auto sort_idx = [](const Vec& v) {
        std::vector<long> idx(v.size());
        std::iota(idx.begin(), idx.end(), 0L);
        std::stable_sort(idx.begin(), idx.end(), [&](long a, long b2) { return v[a] > v[b2]; });
        return idx;
    };
    const std::vector<long> pb = sort_idx(b);
    const std::vector<long> pc = sort_idx(c);
    Vec bd(n), cd(n);
    for (long i = 0; i < n; ++i) bd[i] = b[pb[i]];
    for (long i = 0; i < n; ++i) cd[i] = c[pc[i]];

    const ChainResult chain = build_chain(bd, cd);
    const Mat u0 = chain_rotation(n, chain.steps);

    // P^T diag(b) P = diag(bd) when P maps column i to basis vector pb[i].
    Mat perm_b = Mat::Zero(n, n);
    for (long i = 0; i < n; ++i) perm_b(pb[i], i) = 1.0;
    // After the chain, position landing[s] holds cd[s] = c[pc[s]]; the final
    // permutation routes it back to coordinate pc[s].
    Mat perm_c = Mat::Zero(n, n);
    for (long s = 0; s < n; ++s) perm_c(chain.landing[s], pc[s]) = 1.0;

    Mat u = perm_b * u0 * perm_c;

    const double orth = (u.transpose() * u - Mat::Identity(n, n)).cwiseAbs().maxCoeff();
    if (orth > 1e-10 * static_cast<double>(n))
        throw NumericalFailure("construct_diagonal_unitary: orthogonality residual too large");
    const Vec diag = (u.transpose() * b.asDiagonal() * u).diagonal();
    const double bmax = b.cwiseAbs().maxCoeff();
    if ((diag - c).cwiseAbs().maxCoeff() > 1e-9 * (1.0 + bmax))
        throw NumericalFailure("construct_diagonal_unitary: diagonal residual too large");
    return u;
}

}  // namespace framefit
