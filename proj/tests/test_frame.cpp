#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <Eigen/Dense>
#include <random>

#include "framefit/frame.hpp"

using namespace framefit;

namespace {

Vec make_vec(std::initializer_list<double> xs) {
    Vec v(static_cast<long>(xs.size()));
    long i = 0;
    for (double x : xs) v[i++] = x;
    return v;
}

Mat cols(std::initializer_list<Vec> vs) {
    const long n = vs.begin()->size();
    Mat t(n, static_cast<long>(vs.size()));
    long k = 0;
    for (const Vec& v : vs) t.col(k++) = v;
    return t;
}

}  // namespace

TEST_CASE("frame operator on small families") {
    const Vec e1 = make_vec({1, 0});
    const Vec e2 = make_vec({0, 1});

    const FiniteHermitian id = frame_operator(Frame(cols({e1, e2})));
    CHECK((id.matrix() - Mat::Identity(2, 2)).cwiseAbs().maxCoeff() <= 1e-12);

    const FiniteHermitian s = frame_operator(Frame(cols({e1, e1, e2})));
    Mat expect(2, 2);
    expect << 2, 0, 0, 1;
    CHECK((s.matrix() - expect).cwiseAbs().maxCoeff() <= 1e-12);
    CHECK(frame_operator(Frame(cols({e1, e1, e2}))).min_eigenvalue() ==
          doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("bounds, tightness, parseval") {
    const Vec e1 = make_vec({1, 0});
    const Vec e2 = make_vec({0, 1});

    const Frame onb(cols({e1, e2}));
    CHECK(is_frame(onb));
    CHECK(is_tight(onb));
    CHECK(is_parseval(onb));

    const Frame unbalanced(cols({e1, e1, e2}));
    const FrameBounds fb = frame_bounds(unbalanced);
    CHECK(fb.lower == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(fb.upper == doctest::Approx(2.0).epsilon(1e-12));
    CHECK(is_frame(unbalanced));
    CHECK_FALSE(is_tight(unbalanced));

    const Frame deficient(cols({e1, e1}));
    CHECK_FALSE(is_frame(deficient));

    // Mercedes-Benz family: tight but not parseval (bound 3/2)
    Mat mb(2, 3);
    for (int k = 0; k < 3; ++k) {
        const double th = 2.0 * M_PI * k / 3.0;
        mb(0, k) = std::cos(th);
        mb(1, k) = std::sin(th);
    }
    CHECK(is_tight(Frame(mb)));
    CHECK_FALSE(is_parseval(Frame(mb)));
    CHECK(frame_bounds(Frame(mb)).upper == doctest::Approx(1.5).epsilon(1e-12));
}

TEST_CASE("excess counts dependent vectors") {
    const Vec e1 = make_vec({1, 0});
    const Vec e2 = make_vec({0, 1});
    CHECK(excess(Frame(cols({e1, e2}))) == 0);
    CHECK(excess(Frame(cols({e1, e1, e2}))) == 1);
    CHECK(excess(Frame(cols({e1, e1}))) == 1);

    std::mt19937 rng(17);
    std::normal_distribution<double> g;
    for (int trial = 0; trial < 30; ++trial) {
        const long n = 2 + trial % 4;
        const long m = n + trial % 5;
        Mat t(n, m);
        for (long i = 0; i < n; ++i)
            for (long j = 0; j < m; ++j) t(i, j) = g(rng);
        const Frame f(t);  // generic, hence full rank
        CHECK(excess(f) == m - n);
        const Eigen::FullPivLU<Mat> lu(t);
        CHECK(excess(f) + lu.rank() == m);
    }
}

TEST_CASE("parseval frames have norms at most one") {
    std::mt19937 rng(29);
    std::normal_distribution<double> g;
    for (int trial = 0; trial < 20; ++trial) {
        Mat t(3, 7);
        for (long i = 0; i < 3; ++i)
            for (long j = 0; j < 7; ++j) t(i, j) = g(rng);
        // normalize into a parseval frame
        const FiniteHermitian s = frame_operator(Frame(t));
        const Mat shalf = s.eigenvectors() *
                          s.eigenvalues().cwiseSqrt().cwiseInverse().asDiagonal() *
                          s.eigenvectors().transpose();
        const Frame p(Mat(shalf * t));
        CHECK(is_parseval(p));
        CHECK(norms_squared(p).maxCoeff() <= 1.0 + 1e-9);
    }
}

TEST_CASE("frame operator is positive semidefinite") {
    std::mt19937 rng(37);
    std::normal_distribution<double> g;
    for (int trial = 0; trial < 20; ++trial) {
        Mat t(4, 3);
        for (long i = 0; i < 4; ++i)
            for (long j = 0; j < 3; ++j) t(i, j) = g(rng);
        CHECK(frame_operator(Frame(t)).min_eigenvalue() >= -1e-10);
    }
}

TEST_CASE("verify_pair") {
    const Vec e1 = make_vec({1, 0});
    const Vec e2 = make_vec({0, 1});
    const Frame f(cols({e1, e1, e2}));
    Mat sm(2, 2);
    sm << 2, 0, 0, 1;
    const FiniteHermitian s(sm);

    const VerifyReport ok = verify_pair(f, s, make_vec({1, 1, 1}), 1e-8);
    CHECK(ok.pass);
    CHECK(ok.max_norm_dev <= 1e-12);
    CHECK(ok.operator_dev <= 1e-12);

    const VerifyReport bad_norm = verify_pair(f, s, make_vec({1, 1, 0.5}), 1e-8);
    CHECK_FALSE(bad_norm.pass);
    CHECK(bad_norm.max_norm_dev == doctest::Approx(0.5).epsilon(1e-12));

    const VerifyReport bad_op = verify_pair(f, FiniteHermitian(Mat(Mat::Identity(2, 2))),
                                            make_vec({1, 1, 1}), 1e-8);
    CHECK_FALSE(bad_op.pass);
    CHECK(bad_op.operator_dev == doctest::Approx(1.0).epsilon(1e-12));
}
