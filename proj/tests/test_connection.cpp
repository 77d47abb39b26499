#include <doctest.h>

#include <cmath>

#include <Eigen/Dense>

#include "ipsf/connection.hpp"
#include "ipsf/errors.hpp"
#include "ipsf/rational_linalg.hpp"
#include "support.hpp"

using namespace ipsf;

TEST_CASE("order-4 connection coefficients") {
    const auto& t = testing::connection4();
    CHECK(t.at(0) == Rational(-20, 9));
    CHECK(t.at(1) == Rational(9, 8));
    CHECK(t.at(2) == Rational(0));
    CHECK(t.at(3) == Rational(-1, 72));
    CHECK(t.at(4) == Rational(0));
    CHECK(t.at(5) == Rational(0));
    CHECK(t.at(6) == Rational(0)); // beyond the band
    CHECK(t.at(-3) == t.at(3));
}

TEST_CASE("order-2 connection coefficients (hat function)") {
    const auto t = compute_connection(build_mask(ScaleOrder(2)));
    CHECK(t.at(0) == Rational(-2));
    CHECK(t.at(1) == Rational(1));
}

TEST_CASE("normalization and zero-sum identities") {
    for (int n : {2, 4, 6, 8}) {
        const auto t = compute_connection(build_mask(ScaleOrder(n)));
        Rational second(0), total = t.at(0);
        for (int k = 1; k <= t.band(); ++k) {
            second += 2 * Rational(k) * k * t.at(k);
            total += 2 * t.at(k);
        }
        CHECK(second == Rational(2)); // pairing against x^2
        CHECK(total == Rational(0));  // second derivative kills constants
    }
}

TEST_CASE("two-scale residual of the solved table") {
    for (int n : {2, 4, 6, 8}) {
        const auto mask = build_mask(ScaleOrder(n));
        const auto t = compute_connection(mask);
        for (int k = -t.band(); k <= t.band(); ++k) {
            double rhs = 0.0;
            for (int l1 = -n + 1; l1 <= n - 1; ++l1) {
                for (int l2 = -n + 1; l2 <= n - 1; ++l2) {
                    rhs += mask.at_d(l1) * mask.at_d(l2) * t.at_d(2 * k + l2 - l1);
                }
            }
            REQUIRE(std::abs(t.at_d(k) - 2.0 * rhs) <= 1e-13);
        }
    }
}

TEST_CASE("negated stiffness window is positive semi-definite") {
    const auto& t = testing::connection4();
    const int n = 40;
    Eigen::MatrixXd s(n, n);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) s(i, j) = -t.at_d(j - i);
    }
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(s, Eigen::EigenvaluesOnly);
    CHECK(es.eigenvalues().minCoeff() >= -1e-10);
}

TEST_CASE("degenerate masks are rejected") {
    // Sum-2 symmetric interpolatory filter that is not a Deslauriers-Dubuc
    // mask; its two-scale solution cannot satisfy the second-moment
    // normalization.
    const int n = 4;
    std::vector<Rational> a(2 * n - 1, Rational(0));
    auto set = [&](int k, Rational v) { a[static_cast<std::size_t>(k + n - 1)] = v; };
    set(0, Rational(1));
    set(1, Rational(3, 4));
    set(-1, Rational(3, 4));
    set(3, Rational(-1, 4));
    set(-3, Rational(-1, 4));
    const auto mask = RefinementMask::from_coefficients(ScaleOrder(4), a);
    CHECK_THROWS_AS(compute_connection(mask), NumericalError);
}

TEST_CASE("exact kernel extraction demands a one-dimensional null space") {
    using ipsf::detail::nullspace_1d;
    using Mat = ipsf::detail::RationalMatrix;
    const Mat full_rank{{Rational(1), Rational(0)}, {Rational(0), Rational(1)}};
    CHECK_THROWS_AS(nullspace_1d(full_rank), NumericalError);

    const Mat rank_zero{{Rational(0), Rational(0)}, {Rational(0), Rational(0)}};
    CHECK_THROWS_AS(nullspace_1d(rank_zero), NumericalError);

    const Mat rank_one{{Rational(1), Rational(-2)}, {Rational(2), Rational(-4)}};
    const auto v = nullspace_1d(rank_one);
    CHECK(v[0] * 1 - v[1] * 2 == 0);
    CHECK((v[0] != 0 || v[1] != 0));
}
