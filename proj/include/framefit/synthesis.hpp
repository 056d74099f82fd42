#pragma once

#include <vector>

#include "framefit/admissibility.hpp"
#include "framefit/frame.hpp"

namespace framefit {

/// Data of one head-stage decomposition of an infinite diagonal pair: a
/// finite block S1 = sum of n0 rank-one terms living on block_coords, and
/// the diagonal remainder S2 = S - S1.
struct HeadDecomposition {
    int case_id = 1;          // 1: infinite boundary projection rank, 2: finite rank r
    double eps_or_delta = 0.0;
    long m_index = 0;         // m0 (case 1) or m1 (case 2)
    Vec lambdas;              // block levels, descending; size m_index
    long n0 = 0;              // number of norms consumed
    double h = 0.0;           // leftover level on the last block coordinate
    Vec c0;                   // the consumed norms c_1..c_n0
    std::vector<long> block_coords;  // 1-based diagonal coordinates; size m_index + 1
    Mat head_vectors;         // (m_index + 1) x n0, columns in block-local coordinates
    SequenceModel residual_diag = SequenceModel::constant_tail(Vec(), 0.0);
};

/// Exact finite frame for an invertible S and m prescribed norms; excess is
/// exactly m - n.
Frame synthesize_finite(const FiniteHermitian& s, const Vec& c, double tol = kDefaultTol);

/// Exact frame of N vectors whose last norm absorbs the tail mass of c;
/// the norm profile converges to c in the summable sense as N grows.
Frame synthesize_truncated_summable(const FiniteHermitian& s, const SequenceModel& c, long n_vectors,
                                    double tol = kDefaultTol);

/// One head stage for a diagonal pair satisfying the sufficient conditions.
HeadDecomposition head_decompose(const DiagonalOperator& s, const SequenceModel& c,
                                 long horizon = kDefaultHorizon, double tol = kDefaultTol);

struct GreedyResult {
    Mat synthesis;            // ambient = largest touched coordinate; one column per vector
    std::vector<long> consumed_coords;  // 1-based coordinates driven exactly to zero
    SequenceModel residual_diag = SequenceModel::constant_tail(Vec(), 0.0);
    long stages_done = 0;
    bool stopped_early = false;
    long norms_consumed = 0;

    Frame frame() const { return Frame(synthesis); }
};

/// Iterates the head decomposition on the residual with the shifted norms,
/// re-verifying sufficiency before each extra stage. `steps` counts total
/// stages including the initial decomposition (0 behaves as 1).
GreedyResult greedy_extend(const HeadDecomposition& dec, const SequenceModel& c, long steps,
                           long horizon = kDefaultHorizon, double tol = kDefaultTol);

}  // namespace framefit
