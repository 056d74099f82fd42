#include "framefit/sequence.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <vector>

namespace framefit {

namespace {

constexpr long kMaxTailScan = 4'000'000;

void require_finite_entries(const Vec& v, const char* what) {
    if (v.size() < 1) throw InvalidInput(std::string(what) + ": empty vector");
    for (long i = 0; i < v.size(); ++i)
        if (!std::isfinite(v[i])) throw InvalidInput(std::string(what) + ": non-finite entry");
}

double param(const std::map<std::string, double>& p, const std::string& key) {
    auto it = p.find(key);
    if (it == p.end()) throw InvalidInput("generator: missing parameter '" + key + "'");
    return it->second;
}

/// Sum of the k largest values among `vals` padded with infinitely many
/// zeros; summation runs in descending order.
double top_k_sum_padded(std::vector<double> vals, long k) {
    std::sort(vals.begin(), vals.end(), std::greater<double>());
    double s = 0.0;
    long take = std::min<long>(k, static_cast<long>(vals.size()));
    for (long i = 0; i < take; ++i) {
        if (vals[i] <= 0.0) break;  // zeros from the pad beat negatives
        s += vals[i];
    }
    return s;
}

}  // namespace

Vec sort_desc(const Vec& v) {
    require_finite_entries(v, "sort_desc");
    std::vector<long> idx(v.size());
    std::iota(idx.begin(), idx.end(), 0L);
    std::stable_sort(idx.begin(), idx.end(), [&](long a, long b) { return v[a] > v[b]; });
    Vec out(v.size());
    for (long i = 0; i < v.size(); ++i) out[i] = v[idx[i]];
    return out;
}

bool majorizes(const Vec& b, const Vec& c, double tol) {
    if (b.size() != c.size()) throw DimensionMismatch("majorizes: length mismatch");
    require_finite_entries(b, "majorizes");
    require_finite_entries(c, "majorizes");
    const Vec bd = sort_desc(b);
    const Vec cd = sort_desc(c);
    double sb = 0.0, sc = 0.0;
    const long n = b.size();
    for (long k = 0; k < n - 1; ++k) {
        sb += bd[k];
        sc += cd[k];
        if (sb < sc - tol_scale(tol, std::max(std::abs(sb), std::abs(sc)))) return false;
    }
    sb += bd[n - 1];
    sc += cd[n - 1];
    return std::abs(sb - sc) <= tol_scale(tol, std::max(std::abs(sb), std::abs(sc)));
}

// ---------------------------------------------------------------------------
// SequenceModel construction

SequenceModel SequenceModel::finite(Vec values) {
    require_finite_entries(values, "SequenceModel::finite");
    SequenceModel m;
    m.head_ = std::move(values);
    m.kind_ = TailKind::None;
    return m;
}

SequenceModel SequenceModel::constant_tail(Vec head, double kappa) {
    if (!std::isfinite(kappa)) throw InvalidInput("constant tail: non-finite value");
    if (head.size() > 0) require_finite_entries(head, "SequenceModel::constant_tail");
    SequenceModel m;
    m.head_ = std::move(head);
    m.kind_ = TailKind::Constant;
    m.constant_ = kappa;
    m.tail_origin_ = m.head_.size() + 1;
    TailMeta& meta = m.meta_;
    meta.limsup = meta.liminf = kappa;
    meta.bound = std::abs(kappa);
    meta.dev_summable_above = meta.dev_summable_below = true;
    meta.upper_tail_mass = [](long) { return 0.0; };
    meta.lower_tail_mass = [](long) { return 0.0; };
    meta.summable = (kappa == 0.0);
    meta.tail_sum_from = [](long) { return 0.0; };
    meta.attains_limsup_infinitely = true;
    meta.attains_liminf_infinitely = true;
    return m;
}

namespace {

struct GeneratorDef {
    std::function<double(long)> rule;
    TailMeta meta;
};

GeneratorDef make_generator(const std::string& name, const std::map<std::string, double>& p) {
    GeneratorDef g;
    TailMeta& m = g.meta;
    if (name == "alternating") {
        const double v1 = param(p, "v1"), v2 = param(p, "v2");
        g.rule = [v1, v2](long j) { return (j % 2 == 1) ? v1 : v2; };
        m.limsup = std::max(v1, v2);
        m.liminf = std::min(v1, v2);
        m.bound = std::max(std::abs(v1), std::abs(v2));
        m.dev_summable_above = m.dev_summable_below = true;
        m.upper_tail_mass = [](long) { return 0.0; };
        m.lower_tail_mass = [](long) { return 0.0; };
        m.summable = (v1 == 0.0 && v2 == 0.0);
        m.tail_sum_from = [](long) { return 0.0; };
        m.attains_limsup_infinitely = true;
        m.attains_liminf_infinitely = true;
    } else if (name == "geometric") {
        const double gg = param(p, "g"), rho = param(p, "rho");
        if (!(rho > 0.0 && rho < 1.0)) throw InvalidInput("geometric: rho must lie in (0,1)");
        g.rule = [gg, rho](long j) { return gg * std::pow(rho, static_cast<double>(j)); };
        m.limsup = m.liminf = 0.0;
        m.bound = std::abs(gg) * rho;
        m.dev_summable_above = m.dev_summable_below = true;
        m.upper_tail_mass = [gg, rho](long J) {
            return gg > 0.0 ? gg * std::pow(rho, static_cast<double>(J + 1)) / (1.0 - rho) : 0.0;
        };
        m.lower_tail_mass = [gg, rho](long J) {
            return gg < 0.0 ? -gg * std::pow(rho, static_cast<double>(J + 1)) / (1.0 - rho) : 0.0;
        };
        m.summable = true;
        m.tail_sum_from = [gg, rho](long J) {
            return gg * std::pow(rho, static_cast<double>(J)) / (1.0 - rho);
        };
        // g > 0: every entry sits above the limsup 0, so the upper level is
        // met infinitely often (symmetrically below for g < 0).
        m.attains_limsup_infinitely = (gg >= 0.0);
        m.attains_liminf_infinitely = (gg <= 0.0);
    } else if (name == "example61") {
        const double pp = param(p, "p"), a = param(p, "a");
        if (!(pp > 0.0 && pp < 1.0 && a > 0.0 && a < 1.0))
            throw InvalidInput("example61: p and a must lie in (0,1)");
        g.rule = [pp, a](long j) {
            if (j == 1) return pp;
            const double aj = std::pow(a, static_cast<double>(j));
            return (j % 2 == 1) ? aj : 1.0 - aj;
        };
        m.limsup = 1.0;
        m.liminf = 0.0;
        m.bound = 1.0;
        m.dev_summable_above = m.dev_summable_below = true;
        m.upper_tail_mass = [](long) { return 0.0; };  // every entry < 1
        m.lower_tail_mass = [](long) { return 0.0; };  // every entry > 0
        m.summable = false;
        m.attains_limsup_infinitely = false;
        m.attains_liminf_infinitely = false;
    } else if (name == "harmonic_gap") {
        g.rule = [](long j) { return 1.0 - 1.0 / static_cast<double>(j + 1); };
        m.limsup = m.liminf = 1.0;
        m.bound = 1.0;
        m.dev_summable_above = true;
        m.upper_tail_mass = [](long) { return 0.0; };
        m.dev_summable_below = false;  // sum of 1/(j+1) diverges
        m.summable = false;
        m.attains_limsup_infinitely = false;
        m.attains_liminf_infinitely = false;
    } else {
        throw InvalidInput("unknown generator '" + name + "'");
    }
    return g;
}

}  // namespace

SequenceModel SequenceModel::generator_tail(Vec head, const std::string& name,
                                            const std::map<std::string, double>& params) {
    GeneratorDef def = make_generator(name, params);
    SequenceModel m;
    if (head.size() > 0) require_finite_entries(head, "SequenceModel::generator_tail");
    m.head_ = std::move(head);
    m.kind_ = TailKind::Generator;
    m.rule_ = std::move(def.rule);
    m.meta_ = std::move(def.meta);
    m.tail_origin_ = m.head_.size() + 1;
    m.gen_name_ = name;
    m.gen_params_ = params;
    m.spot_validate();
    return m;
}

SequenceModel SequenceModel::generator_tail_raw(Vec head, std::function<double(long)> rule,
                                                TailMeta meta, std::string label) {
    SequenceModel m;
    if (head.size() > 0) require_finite_entries(head, "SequenceModel::generator_tail_raw");
    m.head_ = std::move(head);
    m.kind_ = TailKind::Generator;
    m.rule_ = std::move(rule);
    m.meta_ = std::move(meta);
    m.tail_origin_ = m.head_.size() + 1;
    m.gen_name_ = std::move(label);
    return m;
}

// ---------------------------------------------------------------------------
// Accessors

long SequenceModel::size() const {
    if (!is_finite()) throw KMismatch("size(): sequence is infinite");
    return head_.size();
}

double SequenceModel::tail_constant() const {
    if (kind_ != TailKind::Constant) throw InvalidInput("tail_constant(): tail is not constant");
    return constant_;
}

double SequenceModel::entry(long i) const {
    if (i < 1) throw KMismatch("entry(): index must be >= 1");
    if (i <= head_.size()) return head_[i - 1];
    switch (kind_) {
        case TailKind::None:
            throw KMismatch("entry(): index past the end of a finite sequence");
        case TailKind::Constant:
            return constant_;
        case TailKind::Generator:
            return rule_(tail_origin_ + (i - head_.size()) - 1);
    }
    return 0.0;  // unreachable
}

Vec SequenceModel::prefix(long n) const {
    if (n < 0) throw KMismatch("prefix(): negative length");
    Vec out(n);
    for (long i = 0; i < n; ++i) out[i] = entry(i + 1);
    return out;
}

double SequenceModel::limsup() const {
    if (is_finite()) throw KMismatch("limsup(): finite sequence has no asymptotics");
    return kind_ == TailKind::Constant ? constant_ : meta_.limsup;
}

double SequenceModel::liminf() const {
    if (is_finite()) throw KMismatch("liminf(): finite sequence has no asymptotics");
    return kind_ == TailKind::Constant ? constant_ : meta_.liminf;
}

double SequenceModel::sup_abs() const {
    double s = head_.size() > 0 ? head_.cwiseAbs().maxCoeff() : 0.0;
    if (kind_ == TailKind::Constant) s = std::max(s, std::abs(constant_));
    if (kind_ == TailKind::Generator) s = std::max(s, meta_.bound);
    return s;
}

bool SequenceModel::summable() const {
    switch (kind_) {
        case TailKind::None: return true;
        case TailKind::Constant: return constant_ == 0.0;
        case TailKind::Generator: return meta_.summable;
    }
    return false;
}

double SequenceModel::total_sum() const {
    if (!summable()) throw NotSummable("total_sum(): sequence is not absolutely summable");
    double s = head_.size() > 0 ? head_.sum() : 0.0;
    if (kind_ == TailKind::Generator && meta_.tail_sum_from) s += meta_.tail_sum_from(tail_origin_);
    return s;
}

// ---------------------------------------------------------------------------
// Transformations

SequenceModel SequenceModel::negated() const {
    SequenceModel m;
    m.head_ = -head_;
    m.kind_ = kind_;
    m.tail_origin_ = tail_origin_;
    m.gen_name_ = gen_name_.empty() ? gen_name_ : "negated(" + gen_name_ + ")";
    switch (kind_) {
        case TailKind::None:
            break;
        case TailKind::Constant:
            m.constant_ = -constant_;
            m.meta_ = meta_;
            m.meta_.limsup = m.meta_.liminf = -constant_;
            break;
        case TailKind::Generator: {
            auto rule = rule_;
            m.rule_ = [rule](long j) { return -rule(j); };
            TailMeta& nm = m.meta_;
            nm.limsup = -meta_.liminf;
            nm.liminf = -meta_.limsup;
            nm.bound = meta_.bound;
            nm.dev_summable_above = meta_.dev_summable_below;
            nm.dev_summable_below = meta_.dev_summable_above;
            nm.upper_tail_mass = meta_.lower_tail_mass;
            nm.lower_tail_mass = meta_.upper_tail_mass;
            nm.summable = meta_.summable;
            if (meta_.tail_sum_from) {
                auto ts = meta_.tail_sum_from;
                nm.tail_sum_from = [ts](long J) { return -ts(J); };
            }
            nm.attains_limsup_infinitely = meta_.attains_liminf_infinitely;
            nm.attains_liminf_infinitely = meta_.attains_limsup_infinitely;
            break;
        }
    }
    return m;
}

SequenceModel SequenceModel::drop_front(long k) const {
    if (k < 0) throw KMismatch("drop_front(): negative count");
    if (k == 0) return *this;
    SequenceModel m = *this;
    if (k < head_.size()) {
        m.head_ = head_.tail(head_.size() - k).eval();
        return m;
    }
    const long into_tail = k - head_.size();
    m.head_ = Vec();
    switch (kind_) {
        case TailKind::None:
            if (k > head_.size()) throw KMismatch("drop_front(): past the end of a finite sequence");
            throw InvalidInput("drop_front(): result would be empty");
        case TailKind::Constant:
            break;
        case TailKind::Generator:
            m.tail_origin_ = tail_origin_ + into_tail;
            break;
    }
    return m;
}

SequenceModel SequenceModel::replace_prefix(const Vec& v) const {
    require_finite_entries(v, "replace_prefix");
    const long m = v.size();
    SequenceModel out = *this;
    if (m <= head_.size()) {
        Vec h = head_;
        h.head(m) = v;
        out.head_ = std::move(h);
        return out;
    }
    if (kind_ == TailKind::None) throw KMismatch("replace_prefix(): past the end of a finite sequence");
    out.head_ = v;
    if (kind_ == TailKind::Generator) out.tail_origin_ = tail_origin_ + (m - head_.size());
    return out;
}

void SequenceModel::spot_validate(long horizon, double tol) const {
    if (kind_ != TailKind::Generator) return;
    if (!(meta_.liminf <= meta_.limsup + tol_scale(tol, meta_.limsup)) ||
        !(meta_.limsup <= meta_.bound + tol_scale(tol, meta_.bound)))
        throw InvalidInput("tail meta: need liminf <= limsup <= bound");
    double above = 0.0, below = 0.0;
    for (long j = tail_origin_; j < tail_origin_ + horizon; ++j) {
        const double x = rule_(j);
        if (!std::isfinite(x)) throw InvalidInput("tail rule produced a non-finite entry");
        if (std::abs(x) > meta_.bound + tol_scale(tol, meta_.bound))
            throw InvalidInput("tail entry contradicts the declared bound");
        above += std::max(x - meta_.limsup, 0.0);
        below += std::max(meta_.liminf - x, 0.0);
    }
    const long J0 = tail_origin_ - 1;
    if (meta_.dev_summable_above && meta_.upper_tail_mass &&
        above > meta_.upper_tail_mass(J0) + tol_scale(tol, above))
        throw InvalidInput("sampled deviations above limsup exceed the declared tail mass");
    if (meta_.dev_summable_below && meta_.lower_tail_mass &&
        below > meta_.lower_tail_mass(J0) + tol_scale(tol, below))
        throw InvalidInput("sampled deviations below liminf exceed the declared tail mass");
}

// ---------------------------------------------------------------------------
// Deviation parts and the k-subset extrema

SequenceModel plus_part(const SequenceModel& a) {
    if (a.is_finite()) throw InvalidInput("plus_part(): requires an infinite model");
    const double ls = a.limsup();
    Vec head = (a.head().array() - ls).max(0.0).matrix();
    if (a.tail_kind() == TailKind::Constant) return SequenceModel::constant_tail(std::move(head), 0.0);
    const TailMeta& src = a.meta();
    TailMeta m;
    m.limsup = m.liminf = 0.0;
    m.bound = src.bound + std::abs(ls);
    m.dev_summable_above = src.dev_summable_above;
    // Indices of the derived model coincide with positions of `a`; translate
    // before delegating to the source mass bound, whose indices may be shifted.
    const long shift = a.tail_origin() - a.head_size() - 1;
    if (src.upper_tail_mass) {
        auto mass = src.upper_tail_mass;
        m.upper_tail_mass = [mass, shift](long J) { return mass(J + shift); };
    }
    m.dev_summable_below = true;
    m.lower_tail_mass = [](long) { return 0.0; };
    m.summable = false;
    const SequenceModel base = a;
    auto rule = [base, ls](long j) { return std::max(base.entry(j) - ls, 0.0); };
    return SequenceModel::generator_tail_raw(std::move(head), rule, std::move(m),
                                             "plus_part(" + a.generator_name() + ")");
}

SequenceModel minus_part(const SequenceModel& a) { return plus_part(a.negated()).negated(); }

BoundedValue u_k_seq(const SequenceModel& a, long k, double accuracy) {
    if (k < 1) throw KMismatch("u_k: k must be >= 1");
    if (a.is_finite()) {
        if (k > a.size()) throw KMismatch("u_k: k exceeds the sequence length");
        const Vec d = sort_desc(a.head());
        double s = 0.0;
        for (long i = 0; i < k; ++i) s += d[i];
        return {s, 0.0};
    }
    const double ls = a.limsup();
    std::vector<double> pos;
    for (long i = 1; i <= a.head_size(); ++i) {
        const double dev = a.entry(i) - ls;
        if (dev > 0.0) pos.push_back(dev);
    }
    double residual = 0.0;
    if (a.tail_kind() == TailKind::Generator) {
        const TailMeta& m = a.meta();
        if (!m.dev_summable_above || !m.upper_tail_mass)
            throw HorizonExceeded("u_k: deviations above limsup are not declared summable");
        long scanned = 0;
        residual = m.upper_tail_mass(a.tail_origin() - 1);
        while (residual > accuracy) {
            const long chunk = std::max<long>(1024, scanned);
            if (scanned + chunk > kMaxTailScan)
                throw HorizonExceeded("u_k: tail-mass bound cannot certify the requested accuracy");
            for (long j = 0; j < chunk; ++j) {
                const double dev = a.entry(a.head_size() + scanned + j + 1) - ls;
                if (dev > 0.0) pos.push_back(dev);
            }
            scanned += chunk;
            residual = m.upper_tail_mass(a.tail_origin() - 1 + scanned);
        }
    }
    const double value = top_k_sum_padded(std::move(pos), k) + static_cast<double>(k) * ls;
    return {value, residual};
}

BoundedValue l_k_seq(const SequenceModel& a, long k, double accuracy) {
    BoundedValue u = u_k_seq(a.negated(), k, accuracy);
    return {-u.value, u.error};
}

bool ell1_orbit_closure_member(const SequenceModel& b_in, const SequenceModel& a_in, long horizon,
                               double tol) {
    auto as_infinite = [](const SequenceModel& s) {
        return s.is_finite() ? SequenceModel::constant_tail(s.head(), 0.0) : s;
    };
    const SequenceModel b = as_infinite(b_in);
    const SequenceModel a = as_infinite(a_in);
    if (!b.summable() || !a.summable())
        throw NotSummable("ell1 closure membership requires summable models");
    const double sb = b.total_sum(), sa = a.total_sum();
    if (std::abs(sb - sa) > tol_scale(tol, std::max(std::abs(sb), std::abs(sa)))) return false;
    for (long k = 1; k <= horizon; ++k) {
        const BoundedValue ua = u_k_seq(a, k), ub = u_k_seq(b, k);
        if (ua.value + ua.error < ub.value - ub.error - tol_scale(tol, std::abs(ub.value)))
            return false;
        const BoundedValue la = l_k_seq(a, k), lb = l_k_seq(b, k);
        if (la.value - la.error > lb.value + lb.error + tol_scale(tol, std::abs(lb.value)))
            return false;
    }
    return true;
}

}  // namespace framefit
