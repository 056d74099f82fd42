#include "framefit/admissibility.hpp"

#include <algorithm>
#include <cmath>

namespace framefit {

namespace {

void require_nonnegative_norms(const SequenceModel& c, double tol) {
    for (long i = 1; i <= c.head_size(); ++i)
        if (c.entry(i) < -tol) throw InvalidInput("norm list: negative entry");
    if (!c.is_finite() && c.liminf() < -tol)
        throw InvalidInput("norm list: negative tail asymptotics");
}

// Total mass of the deviations of c above its limsup; finite exactly when
// the model declares them summable.
double plus_mass(const SequenceModel& c) {
    const double ls = c.limsup();
    double m = 0.0;
    for (long i = 1; i <= c.head_size(); ++i) m += std::max(c.entry(i) - ls, 0.0);
    if (c.tail_kind() == TailKind::Generator) {
        const TailMeta& meta = c.meta();
        if (!meta.dev_summable_above || !meta.upper_tail_mass)
            throw HorizonExceeded("plus mass: deviations above limsup not declared summable");
        m += meta.upper_tail_mass(c.tail_origin() - 1);
    }
    return m;
}

}  // namespace

const char* to_string(Status s) {
    switch (s) {
        case Status::Admissible: return "Admissible";
        case Status::NotAdmissible: return "NotAdmissible";
        case Status::Undetermined: return "Undetermined";
    }
    return "Undetermined";
}

AdmissibilityVerdict check_finite_finite(const FiniteHermitian& s, const Vec& c, double tol) {
    if (s.min_eigenvalue() <= tol * (1.0 + s.operator_norm()))
        throw NotPositiveDefinite("check_finite_finite: operator is not positive definite");
    for (long i = 0; i < c.size(); ++i)
        if (c[i] < -tol) throw InvalidInput("check_finite_finite: negative norm entry");

    const long n = s.dim();
    const long m = c.size();
    const long len = std::max(n, m);
    Vec b = Vec::Zero(len);
    b.head(n) = s.eigenvalues();
    Vec cpad = Vec::Zero(len);
    cpad.head(m) = c;
    const Vec bd = sort_desc(b);
    const Vec cd = sort_desc(cpad);

    AdmissibilityVerdict v;
    double sb = 0.0, sc = 0.0;
    long bad_k = -1;
    for (long k = 0; k < len - 1; ++k) {
        sb += bd[k];
        sc += cd[k];
        if (sb < sc - tol_scale(tol, std::max(std::abs(sb), std::abs(sc))) && bad_k < 0) {
            bad_k = k + 1;
            v.evidence.push_back({"partial eigenvalue sum dominates partial norm sum",
                                  "uk-family", false, bad_k, sb, sc});
        }
    }
    if (bad_k < 0)
        v.evidence.push_back(
            {"partial eigenvalue sums dominate partial norm sums", "uk-family", true, -1, 0.0, 0.0});
    const double tb = b.sum(), tc = cpad.sum();
    const bool trace_ok = std::abs(tb - tc) <= tol_scale(tol, std::max(std::abs(tb), std::abs(tc)));
    v.evidence.push_back({"trace of S equals the total norm mass", "trace", trace_ok, -1, tb, tc});
    v.status = (bad_k < 0 && trace_ok) ? Status::Admissible : Status::NotAdmissible;
    return v;
}

AdmissibilityVerdict check_finite_infinite(const FiniteHermitian& s, const SequenceModel& c,
                                           double tol) {
    if (s.min_eigenvalue() <= tol * (1.0 + s.operator_norm()))
        throw NotPositiveDefinite("check_finite_infinite: operator is not positive definite");
    if (c.is_finite()) throw InvalidInput("check_finite_infinite: norm list must be infinite");
    require_nonnegative_norms(c, tol);
    if (!c.summable())
        throw NotSummable("check_finite_infinite: norm list must be absolutely summable");

    AdmissibilityVerdict v;
    const Vec b = s.eigenvalues();
    double sb = 0.0;
    long bad_k = -1;
    for (long k = 1; k <= s.dim() - 1; ++k) {
        sb += b[k - 1];
        const BoundedValue uc = u_k_seq(c, k);
        if (sb + tol_scale(tol, std::abs(sb)) < uc.value - uc.error && bad_k < 0) {
            bad_k = k;
            v.evidence.push_back({"partial eigenvalue sum dominates U_k of the norms", "uk-family",
                                  false, k, sb, uc.value});
        }
    }
    if (bad_k < 0)
        v.evidence.push_back({"partial eigenvalue sums dominate U_k of the norms for k < n",
                              "uk-family", true, -1, 0.0, 0.0});
    const double tb = b.sum(), tc = c.total_sum();
    const bool trace_ok = std::abs(tb - tc) <= tol_scale(tol, std::max(std::abs(tb), std::abs(tc)));
    v.evidence.push_back({"trace of S equals the total norm mass", "trace", trace_ok, -1, tb, tc});
    v.status = (bad_k < 0 && trace_ok) ? Status::Admissible : Status::NotAdmissible;
    return v;
}

CheckResult check_necessary(const DiagonalOperator& s, const SequenceModel& c, long horizon,
                            double tol) {
    require_nonnegative_norms(c, tol);
    CheckResult r;
    const bool divergent = !(c.is_finite() || c.summable());
    r.evidence.push_back({"total norm mass diverges", "divergence", divergent, -1, 0.0, 0.0});

    const OperatorModel op = s;
    long bad_k = -1;
    for (long k = 1; k <= horizon; ++k) {
        const BoundedValue us = u_k_op(op, k);
        const BoundedValue uc = u_k_seq(c.is_finite() ? SequenceModel::constant_tail(c.head(), 0.0) : c, k);
        if (us.value + us.error < uc.value - uc.error - tol_scale(tol, std::abs(uc.value))) {
            bad_k = k;
            r.evidence.push_back(
                {"U_k(S) dominates U_k(c)", "uk-family", false, k, us.value, uc.value});
            break;
        }
    }
    if (bad_k < 0)
        r.evidence.push_back({"U_k(S) dominates U_k(c) up to the horizon", "uk-family", true, -1,
                              0.0, 0.0});

    if (!c.is_finite()) {
        const double lsc = c.limsup();
        const double ap = s.summary().alpha_plus;
        r.evidence.push_back({"limsup of the norms is at most the essential norm of S",
                              "limsup-bound", lsc <= ap + tol_scale(tol, ap), -1, lsc, ap});
    }
    r.pass = all_pass(r.evidence);
    return r;
}

CheckResult check_sufficient(const DiagonalOperator& s, const SequenceModel& c, long horizon,
                             double tol) {
    require_nonnegative_norms(c, tol);
    CheckResult r;
    const bool divergent = !(c.is_finite() || c.summable());
    r.evidence.push_back({"total norm mass diverges", "divergence", divergent, -1, 0.0, 0.0});
    if (!divergent) {
        r.pass = false;
        return r;
    }

    const SpectralSummary& sm = s.summary();
    const double ap = sm.alpha_plus;
    const double lsc = c.limsup();
    const double gap = ap - lsc;
    const bool gap_ok = gap > tol_scale(tol, ap);
    r.evidence.push_back(
        {"essential norm of S strictly exceeds limsup of the norms", "limsup-gap", gap_ok, -1, lsc, ap});
    if (!gap_ok) {
        r.pass = false;
        return r;
    }

    const long strict_from = sm.p2_infinite ? horizon + 1 : sm.p2_rank + 1;
    const OperatorModel op = s;
    bool family_ok = true;
    BoundedValue us_last{0.0, 0.0};
    for (long k = 1; k <= horizon; ++k) {
        const BoundedValue us = u_k_op(op, k);
        const BoundedValue uc = u_k_seq(c, k);
        us_last = us;
        const bool ok =
            k < strict_from
                ? us.value + us.error >= uc.value - uc.error - tol_scale(tol, std::abs(uc.value))
                : us.value - us.error > uc.value + uc.error + tol_scale(tol, std::abs(uc.value));
        if (!ok) {
            r.evidence.push_back({k < strict_from ? "U_k(S) dominates U_k(c)"
                                                  : "U_k(S) strictly exceeds U_k(c)",
                                  "uk-family", false, k, us.value, uc.value});
            family_ok = false;
            break;
        }
    }
    if (family_ok)
        r.evidence.push_back({"U_k inequality family holds up to the horizon", "uk-family", true,
                              -1, 0.0, 0.0});
    if (!family_ok) {
        r.pass = false;
        return r;
    }

    // Beyond the horizon K: U_k(S) >= U_K(S) + (k-K)*alpha_plus and
    // U_k(c) <= plus_mass(c) + k*limsup c, so the gap is bounded below by an
    // affine function of k with positive slope; its value at K+1 certifies
    // every remaining k.
    const double mass = plus_mass(c);
    const double floor_next =
        (us_last.value - us_last.error) + ap - mass - static_cast<double>(horizon + 1) * lsc;
    const bool cert_ok = floor_next > tol_scale(tol, std::abs(mass));
    r.evidence.push_back({"gap lower bound beyond the horizon is positive", "beyond-horizon",
                          cert_ok, horizon + 1, floor_next, 0.0});
    if (!cert_ok)
        throw HorizonExceeded("check_sufficient: cannot certify the family beyond the horizon");
    r.pass = all_pass(r.evidence);
    return r;
}

AdmissibilityVerdict classify(const OperatorModel& s, const SequenceModel& c, long horizon,
                              double tol) {
    if (const auto* f = std::get_if<FiniteHermitian>(&s)) {
        if (c.is_finite()) return check_finite_finite(*f, c.head(), tol);
        return check_finite_infinite(*f, c, tol);
    }
    const DiagonalOperator& d = std::get<DiagonalOperator>(s);
    for (long i = 1; i <= d.diag().head_size(); ++i)
        if (d.diag().entry(i) <= tol)
            throw NotPositiveDefinite("classify: diagonal operator is not strictly positive");
    if (d.diag().liminf() <= tol)
        throw NotPositiveDefinite("classify: diagonal operator has essential infimum <= 0");

    AdmissibilityVerdict v;
    const CheckResult nec = check_necessary(d, c, horizon, tol);
    v.evidence = nec.evidence;
    if (!nec.pass) {
        v.status = Status::NotAdmissible;
        return v;
    }
    const CheckResult suf = check_sufficient(d, c, horizon, tol);
    v.evidence.insert(v.evidence.end(), suf.evidence.begin(), suf.evidence.end());
    v.status = suf.pass ? Status::Admissible : Status::Undetermined;
    return v;
}

AdmissibilityVerdict tight_admissible(double a, const SequenceModel& c, long horizon, double tol) {
    if (a <= 0.0) throw InvalidInput("tight_admissible: frame bound must be positive");
    require_nonnegative_norms(c, tol);
    for (long i = 1; i <= c.head_size(); ++i)
        if (c.entry(i) > a + tol_scale(tol, a))
            throw InvalidInput("tight_admissible: norm entry exceeds the frame bound");
    if (!c.is_finite() && c.sup_abs() > a + tol_scale(tol, a))
        throw InvalidInput("tight_admissible: norm tail exceeds the frame bound");

    auto fallback = [&]() {
        return classify(DiagonalOperator(SequenceModel::constant_tail(Vec(), a)), c, horizon, tol);
    };
    if (c.is_finite()) return fallback();

    // Structural equality set J = { i : c_i = A }: exact head matches, and
    // tail membership decided by the tail kind.
    bool tail_in_j;
    double off_limsup;
    bool off_divergent;
    if (c.tail_kind() == TailKind::Constant) {
        tail_in_j = (c.tail_constant() == a);
        off_limsup = tail_in_j ? 0.0 : c.tail_constant();
        off_divergent = !tail_in_j && c.tail_constant() > 0.0;
    } else {
        if (c.limsup() == a) return fallback();  // equality hits the tail non-structurally
        tail_in_j = false;
        off_limsup = c.limsup();
        off_divergent = !c.summable();
    }
    if (tail_in_j) return fallback();  // norms off J have finite total mass

    AdmissibilityVerdict v;
    v.evidence.push_back({"norms below the frame bound have divergent total mass", "divergence",
                          off_divergent, -1, 0.0, 0.0});
    v.evidence.push_back({"limsup of the norms below the frame bound stays under it",
                          "limsup-gap", off_limsup < a, -1, off_limsup, a});
    if (all_pass(v.evidence)) {
        v.status = Status::Admissible;
        return v;
    }
    return fallback();
}

bool excess_forced_infinite(const DiagonalOperator& s, const SequenceModel& c, double tol) {
    const double am = s.summary().alpha_minus;
    const double lic = c.is_finite() ? 0.0 : c.liminf();
    return lic < am - tol_scale(tol, am);
}

}  // namespace framefit
