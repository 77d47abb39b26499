#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "ipsf/eigensolve.hpp"
#include "ipsf/errors.hpp"
#include "support.hpp"

using namespace ipsf;

namespace {

SpectralProblem sextic_problem(double a, double b, double c, int level) {
    const auto disc = make_discretization(level, 6.0, ScaleOrder(4));
    return assemble(PolynomialPotential::sextic(a, b, c), disc, testing::connection4(),
                    testing::moments4());
}

} // namespace

TEST_CASE("quasi-exactly-solvable sextic at j=5 reproduces the reference digits") {
    const auto spec = solve_generalized(sextic_problem(-2.75, 1, 1, 5), 3);
    CHECK(std::abs(spec.eigenvalues[0] - 0.5000000008) <= 1e-8);
    CHECK(std::abs(spec.eigenvalues[1] - 3.1200310533) <= 1e-8);
    CHECK(std::abs(spec.eigenvalues[2] - 7.9429050475) <= 1e-8);
    CHECK(std::is_sorted(spec.eigenvalues.begin(), spec.eigenvalues.end()));
}

TEST_CASE("exact integer eigenvalue at moderate resolution") {
    const auto spec = solve_generalized(sextic_problem(1, -4, 1, 5), 1);
    CHECK(std::abs(spec.eigenvalues[0] - (-2.0)) <= 5e-8);
}

TEST_CASE("identical pencil sides give unit eigenvalues") {
    auto p = sextic_problem(1, 1, 1, 1);
    p.a = p.b;
    p.refresh_extended_band();
    const auto spec = solve_generalized(p, 4);
    for (double e : spec.eigenvalues) CHECK(e == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("eigenvalues are invariant under symmetric permutation") {
    // Index reversal is the symmetric permutation that keeps the pencil
    // banded, so the same solve path applies on both sides.
    const auto p = sextic_problem(1, -1, 1, 2);
    const auto base = solve_generalized(p, 4);

    const long long dim = p.disc.dimension();
    SpectralProblem q = p;
    for (long long i = 0; i < dim; ++i) {
        for (long long j = 0; j < dim; ++j) {
            q.a(i, j) = p.a(dim - 1 - i, dim - 1 - j);
            q.b(i, j) = p.b(dim - 1 - i, dim - 1 - j);
        }
    }
    q.refresh_extended_band();
    const auto permuted = solve_generalized(q, 4);
    for (int i = 0; i < 4; ++i) {
        REQUIRE(permuted.eigenvalues[i] ==
                doctest::Approx(base.eigenvalues[i]).epsilon(1e-10));
    }
}

TEST_CASE("free particle in the truncated box converges from above") {
    const PolynomialPotential zero{};
    const double box_ground = std::pow(std::numbers::pi / 12.0, 2);
    double last = 1e300;
    for (int level : {2, 3, 4}) {
        const auto disc = make_discretization(level, 6.0, ScaleOrder(4));
        const auto p = assemble(zero, disc, testing::connection4(), testing::moments4());
        const auto spec = solve_generalized(p, 1);
        CHECK(spec.eigenvalues[0] <= last + 1e-12);
        CHECK(spec.eigenvalues[0] >= box_ground - 1e-9);
        last = spec.eigenvalues[0];
    }
    CHECK(std::abs(last - box_ground) <= 1e-2);
}

TEST_CASE("constant potential shift moves every eigenvalue rigidly") {
    const auto base = solve_generalized(sextic_problem(1, 1, 1, 3), 3);
    const auto disc = make_discretization(3, 6.0, ScaleOrder(4));
    const auto shifted_problem = assemble(PolynomialPotential({5.0, 0, 1, 0, 1, 0, 1}), disc,
                                          testing::connection4(), testing::moments4());
    const auto shifted = solve_generalized(shifted_problem, 3);
    for (int i = 0; i < 3; ++i) {
        REQUIRE(std::abs(shifted.eigenvalues[i] - base.eigenvalues[i] - 5.0) <= 1e-10);
    }
}

TEST_CASE("B-orthonormality and residual certificates") {
    const auto p = sextic_problem(1, 1, 1, 3);
    const auto spec = solve_generalized(p, 4);
    const double a_max = p.a.cwiseAbs().maxCoeff();
    for (int i = 0; i < 4; ++i) {
        CHECK(spec.norm_certificates[i] <= 1e-10);
        CHECK(spec.residuals[i] <= 1e-8 * (1.0 + std::abs(spec.eigenvalues[i])) * a_max);
        for (int j = 0; j < i; ++j) {
            const double cross = spec.coefficients.col(i).dot(p.b * spec.coefficients.col(j));
            REQUIRE(std::abs(cross) <= 1e-10);
        }
    }
}

TEST_CASE("indefinite Gram matrix is reported with its pivot") {
    auto p = sextic_problem(1, 1, 1, 0);
    p.b = -Eigen::MatrixXd::Identity(p.disc.dimension(), p.disc.dimension());
    p.refresh_extended_band();
    try {
        solve_generalized(p, 1);
        FAIL("expected NumericalError");
    } catch (const NumericalError& e) {
        CHECK(std::string(e.what()).find("pivot") != std::string::npos);
    }
}

TEST_CASE("state-count validation") {
    const auto p = sextic_problem(1, 1, 1, 0);
    CHECK_THROWS_AS(solve_generalized(p, 0), ValidationError);
    CHECK_THROWS_AS(solve_generalized(p, static_cast<int>(p.disc.dimension()) + 1),
                    ValidationError);
    CHECK_NOTHROW(solve_generalized(p, static_cast<int>(p.disc.dimension())));
}

TEST_CASE("order-6 pipeline solves the harmonic oscillator") {
    // End-to-end run of the generic-order path: tables, assembly and the
    // generalized solve at N = 6 against the exact spectrum E_n = 2n + 1.
    const auto mask = build_mask(ScaleOrder(6));
    const auto conn = compute_connection(mask);
    const auto mom = compute_moments(mask, 2);
    const auto disc = make_discretization(4, 6.0, ScaleOrder(6));
    const auto problem = assemble(PolynomialPotential({0, 0, 1}), disc, conn, mom);
    const auto spec = solve_generalized(problem, 4);
    for (int n = 0; n < 4; ++n) {
        REQUIRE(std::abs(spec.eigenvalues[n] - (2.0 * n + 1.0)) <= 1e-8);
    }
}
