#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "framefit/admissibility.hpp"
#include "framefit/examples.hpp"

using namespace framefit;

namespace {

Vec make_vec(std::initializer_list<double> xs) {
    Vec v(static_cast<long>(xs.size()));
    long i = 0;
    for (double x : xs) v[i++] = x;
    return v;
}

// Exhaustive k-subset maximum, for re-checking reported witnesses.
double brute_u_k(const Vec& a, long k) {
    const long n = a.size();
    double best = -1e300;
    for (long mask = 0; mask < (1L << n); ++mask) {
        if (__builtin_popcountl(static_cast<unsigned long>(mask)) != k) continue;
        double s = 0.0;
        for (long i = 0; i < n; ++i)
            if (mask & (1L << i)) s += a[i];
        best = std::max(best, s);
    }
    return best;
}

const Evidence* find_tag(const EvidenceList& ev, const std::string& tag) {
    for (const auto& e : ev)
        if (e.tag == tag) return &e;
    return nullptr;
}

}  // namespace

TEST_CASE("finite decisive test") {
    const AdmissibilityVerdict a =
        check_finite_finite(FiniteHermitian(Mat(2.0 * Mat::Identity(2, 2))), Vec::Ones(4));
    CHECK(a.status == Status::Admissible);

    const AdmissibilityVerdict b = check_finite_finite(
        FiniteHermitian(Mat(2.0 * Mat::Identity(3, 3))), make_vec({1.5, 1.5, 1.5, 1.5}));
    CHECK(b.status == Status::Admissible);

    const AdmissibilityVerdict bad =
        check_finite_finite(FiniteHermitian(Mat(Mat::Identity(2, 2))), make_vec({2, 0.5}));
    CHECK(bad.status == Status::NotAdmissible);
    const Evidence* w = find_tag(bad.evidence, "uk-family");
    REQUIRE(w != nullptr);
    CHECK_FALSE(w->pass);
    CHECK(w->witness_k == 1);

    CHECK_THROWS_AS(
        check_finite_finite(FiniteHermitian(Vec(make_vec({1, 0})).asDiagonal()), make_vec({1})),
        NotPositiveDefinite);
}

TEST_CASE("finite operator against a summable infinite norm list") {
    const auto geo = SequenceModel::generator_tail(Vec(), "geometric", {{"g", 2.0}, {"rho", 0.5}});
    // entries 1, 1/2, 1/4, ...; total 2
    const AdmissibilityVerdict a =
        check_finite_infinite(FiniteHermitian(Mat(Mat::Identity(2, 2))), geo);
    CHECK(a.status == Status::Admissible);

    const auto heavy = SequenceModel::generator_tail(make_vec({1.5}), "geometric",
                                                     {{"g", 0.25}, {"rho", 0.5}});
    // head 1.5, tail sums to 0.25; U_1 = 1.5 > 1
    const AdmissibilityVerdict b =
        check_finite_infinite(FiniteHermitian(Mat(Mat::Identity(2, 2))), heavy);
    CHECK(b.status == Status::NotAdmissible);

    const auto half = SequenceModel::generator_tail(Vec(), "geometric", {{"g", 1.0}, {"rho", 0.5}});
    const AdmissibilityVerdict c =
        check_finite_infinite(FiniteHermitian(Mat::Identity(1, 1)), half);
    CHECK(c.status == Status::Admissible);  // scalar case: only the trace condition

    const auto alt = SequenceModel::generator_tail(Vec(), "alternating", {{"v1", 0.5}, {"v2", 1.0}});
    CHECK_THROWS_AS(check_finite_infinite(FiniteHermitian(Mat(Mat::Identity(2, 2))), alt),
                    NotSummable);
}

TEST_CASE("necessary conditions") {
    SUBCASE("tight equality family passes") {
        const ExampleFixture fx = example_fixture("6.1");
        const CheckResult r =
            check_necessary(std::get<DiagonalOperator>(fx.op), fx.norms, 100);
        CHECK(r.pass);
    }
    SUBCASE("strict domination passes") {
        const ExampleFixture fx = example_fixture("6.2");
        const CheckResult r = check_necessary(std::get<DiagonalOperator>(fx.op), fx.norms);
        CHECK(r.pass);
    }
    SUBCASE("oversized norms fail at k = 1 and at the limsup test") {
        const DiagonalOperator id(SequenceModel::constant_tail(Vec(), 1.0));
        const CheckResult r =
            check_necessary(id, SequenceModel::constant_tail(Vec(), 2.0));
        CHECK_FALSE(r.pass);
        const Evidence* uk = find_tag(r.evidence, "uk-family");
        REQUIRE(uk != nullptr);
        CHECK_FALSE(uk->pass);
        CHECK(uk->witness_k == 1);
        const Evidence* ls = find_tag(r.evidence, "limsup-bound");
        REQUIRE(ls != nullptr);
        CHECK_FALSE(ls->pass);
    }
}

TEST_CASE("sufficient conditions") {
    SUBCASE("infinite boundary rank with a strict gap") {
        const ExampleFixture fx = example_fixture("6.6");
        const CheckResult r = check_sufficient(std::get<DiagonalOperator>(fx.op), fx.norms);
        CHECK(r.pass);
    }
    SUBCASE("rank zero demands strictness already at k = 1") {
        const ExampleFixture fx = example_fixture("6.2");
        const CheckResult r = check_sufficient(std::get<DiagonalOperator>(fx.op), fx.norms);
        CHECK_FALSE(r.pass);
        const Evidence* uk = find_tag(r.evidence, "uk-family");
        REQUIRE(uk != nullptr);
        CHECK(uk->witness_k == 1);
    }
    SUBCASE("vanishing limsup gap fails") {
        const ExampleFixture fx = example_fixture("6.3");
        const CheckResult r = check_sufficient(std::get<DiagonalOperator>(fx.op), fx.norms);
        CHECK_FALSE(r.pass);
        const Evidence* g = find_tag(r.evidence, "limsup-gap");
        REQUIRE(g != nullptr);
        CHECK_FALSE(g->pass);
    }
    SUBCASE("sufficient implies necessary") {
        for (const char* name : {"6.6", "6.1", "6.2", "6.3"}) {
            const ExampleFixture fx = example_fixture(name);
            if (!std::holds_alternative<DiagonalOperator>(fx.op)) continue;
            const auto& d = std::get<DiagonalOperator>(fx.op);
            if (check_sufficient(d, fx.norms).pass) CHECK(check_necessary(d, fx.norms).pass);
        }
    }
}

TEST_CASE("classify trichotomy on the named fixtures") {
    CHECK(classify(example_fixture("6.1").op, example_fixture("6.1").norms, 100).status ==
          Status::Undetermined);
    CHECK(classify(example_fixture("6.2").op, example_fixture("6.2").norms).status ==
          Status::Undetermined);
    CHECK(classify(example_fixture("6.3").op, example_fixture("6.3").norms).status ==
          Status::Undetermined);
    CHECK(classify(example_fixture("6.6").op, example_fixture("6.6").norms).status ==
          Status::Admissible);
    CHECK(classify(example_fixture("6.7").op, example_fixture("6.7").norms).status ==
          Status::Admissible);
    CHECK(classify(example_fixture("4.8").op, example_fixture("4.8").norms).status ==
          Status::Admissible);
}

TEST_CASE("classify rejects non-positive diagonal operators") {
    const auto c = SequenceModel::constant_tail(Vec(), 0.5);
    CHECK_THROWS_AS(classify(DiagonalOperator(SequenceModel::constant_tail(make_vec({0.0}), 1.0)),
                             c),
                    NotPositiveDefinite);
    CHECK_THROWS_AS(
        classify(DiagonalOperator(SequenceModel::generator_tail(
                     Vec(), "geometric", {{"g", 1.0}, {"rho", 0.5}})),
                 c),
        NotPositiveDefinite);  // diagonal decays to 0
}

TEST_CASE("reported witnesses survive the exhaustive oracle") {
    std::mt19937 rng(83);
    std::uniform_real_distribution<double> u(0.0, 3.0);
    int rejected = 0;
    for (int trial = 0; trial < 200; ++trial) {
        const long n = 2 + trial % 4;
        const long m = n + trial % 5;
        Vec diag(n);
        for (long i = 0; i < n; ++i) diag[i] = 0.5 + u(rng);
        Vec c(m);
        for (long j = 0; j < m; ++j) c[j] = u(rng);
        const AdmissibilityVerdict v =
            check_finite_finite(FiniteHermitian(Vec(diag).asDiagonal()), c);
        if (v.status != Status::NotAdmissible) continue;
        const Evidence* w = find_tag(v.evidence, "uk-family");
        if (w == nullptr || w->pass || w->witness_k > 12) continue;
        ++rejected;
        const long len = std::max(n, m);
        Vec bp = Vec::Zero(len), cp = Vec::Zero(len);
        bp.head(n) = diag;
        cp.head(m) = c;
        CHECK(brute_u_k(bp, w->witness_k) < brute_u_k(cp, w->witness_k) + 1e-9);
    }
    CHECK(rejected > 10);  // the sampler must actually exercise the branch
}

TEST_CASE("tight frame criterion") {
    const AdmissibilityVerdict a = tight_admissible(1.0, SequenceModel::constant_tail(Vec(), 0.5));
    CHECK(a.status == Status::Admissible);

    // every norm equal to the bound: the criterion cannot apply, fallback runs
    const AdmissibilityVerdict b = tight_admissible(1.0, SequenceModel::constant_tail(Vec(), 1.0));
    CHECK(b.status == Status::Undetermined);

    const AdmissibilityVerdict c = tight_admissible(2.0, SequenceModel::constant_tail(Vec(), 1.5));
    CHECK(c.status == Status::Admissible);
    CHECK(c.status ==
          classify(DiagonalOperator(SequenceModel::constant_tail(Vec(), 2.0)),
                   SequenceModel::constant_tail(Vec(), 1.5))
              .status);

    CHECK_THROWS_AS(tight_admissible(1.0, SequenceModel::constant_tail(Vec(), 1.5)), InvalidInput);
}

TEST_CASE("forced infinite excess") {
    const DiagonalOperator id(SequenceModel::constant_tail(Vec(), 1.0));
    const auto low = SequenceModel::generator_tail(Vec(), "alternating",
                                                   {{"v1", 0.5}, {"v2", 1.0}});
    CHECK(excess_forced_infinite(id, low));  // liminf 1/2 below the essential floor 1

    const ExampleFixture e63 = example_fixture("6.3");
    CHECK_FALSE(excess_forced_infinite(std::get<DiagonalOperator>(e63.op), e63.norms));

    const ExampleFixture e66 = example_fixture("6.6");
    CHECK_FALSE(excess_forced_infinite(std::get<DiagonalOperator>(e66.op), e66.norms));
}
