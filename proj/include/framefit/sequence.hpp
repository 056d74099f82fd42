#pragma once

#include <Eigen/Core>
#include <functional>
#include <map>
#include <string>

#include "framefit/errors.hpp"

namespace framefit {

using Vec = Eigen::VectorXd;

// Default comparison tolerance. All comparisons use tol * (1 + magnitude)
// scaling so thresholds stay meaningful across value ranges.
inline constexpr double kDefaultTol = 1e-9;
inline constexpr long kDefaultHorizon = 200;
inline constexpr long kValidationHorizon = 10000;

inline double tol_scale(double tol, double magnitude) {
    return tol * (1.0 + std::abs(magnitude));
}

/// Returns a copy of v sorted in non-increasing order (stable in the
/// original index on ties).
Vec sort_desc(const Vec& v);

/// True iff c is majorized by b: sorted partial sums of b dominate those
/// of c and the totals agree, all within tol * (1 + magnitude).
bool majorizes(const Vec& b, const Vec& c, double tol = kDefaultTol);

enum class TailKind { None, Constant, Generator };

/// Declared asymptotics of a generator tail. Declared, not inferred:
/// the entries are spot-checked against these values at construction.
struct TailMeta {
    double limsup = 0.0;
    double liminf = 0.0;
    double bound = 0.0;  // uniform bound on |entry| over the tail

    bool dev_summable_above = false;
    bool dev_summable_below = false;
    // J -> bound on sum over original indices j > J of max(a_j - limsup, 0)
    std::function<double(long)> upper_tail_mass;
    // J -> bound on sum over original indices j > J of -min(a_j - liminf, 0)
    std::function<double(long)> lower_tail_mass;

    bool summable = false;
    // J -> exact sum over original indices j >= J (when summable)
    std::function<double(long)> tail_sum_from;

    // Infinitely many tail entries >= limsup (resp. <= liminf), exact and
    // structural. Drives the spectral-projection rank of diagonal operators
    // built on this sequence.
    bool attains_limsup_infinitely = false;
    bool attains_liminf_infinitely = false;
};

/// A finite real vector, or an infinite bounded sequence given by explicit
/// leading entries plus a structured tail (constant, or a named generator
/// with declared asymptotics). Entries are 1-indexed. Immutable.
class SequenceModel {
  public:
    static SequenceModel finite(Vec values);
    static SequenceModel constant_tail(Vec head, double kappa);
    /// Named generators: alternating(v1,v2), geometric(g,rho),
    /// example61(p,a), harmonic_gap.
    static SequenceModel generator_tail(Vec head, const std::string& name,
                                        const std::map<std::string, double>& params);
    /// Generator tail from an explicit rule (internal derived models).
    static SequenceModel generator_tail_raw(Vec head, std::function<double(long)> rule,
                                            TailMeta meta, std::string label = "derived");

    bool is_finite() const { return kind_ == TailKind::None; }
    TailKind tail_kind() const { return kind_; }
    long head_size() const { return head_.size(); }
    /// Length, finite sequences only.
    long size() const;
    const Vec& head() const { return head_; }
    double tail_constant() const;
    const TailMeta& meta() const { return meta_; }
    const std::string& generator_name() const { return gen_name_; }
    const std::map<std::string, double>& generator_params() const { return gen_params_; }
    long tail_origin() const { return tail_origin_; }

    double entry(long i) const;  // 1-based
    Vec prefix(long n) const;

    // Asymptotics; throw KMismatch on finite sequences.
    double limsup() const;
    double liminf() const;
    /// Uniform bound on |entry| over the whole sequence.
    double sup_abs() const;

    bool summable() const;
    double total_sum() const;  // throws NotSummable when divergent

    SequenceModel negated() const;
    /// Entries k+1, k+2, ... as a new model.
    SequenceModel drop_front(long k) const;
    /// New model whose first v.size() entries are v and whose remaining
    /// entries are this model's entries beyond v.size().
    SequenceModel replace_prefix(const Vec& v) const;

    /// Checks sampled entries against the declared metadata; throws
    /// InvalidInput on a contradiction beyond the validation tolerance.
    void spot_validate(long horizon = kValidationHorizon, double tol = kDefaultTol) const;

  private:
    SequenceModel() = default;

    Vec head_;
    TailKind kind_ = TailKind::None;
    double constant_ = 0.0;
    std::function<double(long)> rule_;  // original-index rule, tail entries only
    long tail_origin_ = 1;              // original index of the first tail entry
    TailMeta meta_;
    std::string gen_name_;
    std::map<std::string, double> gen_params_;
};

struct BoundedValue {
    double value = 0.0;
    double error = 0.0;  // certified absolute error bound
};

/// Entrywise max(a_i - limsup a, 0) (resp. min(a_i - liminf a, 0)).
SequenceModel plus_part(const SequenceModel& a);
SequenceModel minus_part(const SequenceModel& a);

/// Largest (resp. smallest) possible sum of k entries. Exact for finite
/// sequences; for infinite models evaluated through the compact deviation
/// part plus k times the limsup (liminf), with a certified error bound.
BoundedValue u_k_seq(const SequenceModel& a, long k, double accuracy = 1e-10);
BoundedValue l_k_seq(const SequenceModel& a, long k, double accuracy = 1e-10);

/// Membership of b in the l1-closure of the convex permutation-orbit hull
/// of a: equal totals plus the two k-indexed partial-sum inequality
/// families, checked for k = 1..horizon.
bool ell1_orbit_closure_member(const SequenceModel& b, const SequenceModel& a,
                               long horizon = kDefaultHorizon, double tol = kDefaultTol);

}  // namespace framefit
