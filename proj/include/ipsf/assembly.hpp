#pragma once

#include <vector>

#include <Eigen/Dense>

#include "ipsf/connection.hpp"
#include "ipsf/moments.hpp"
#include "ipsf/scaling.hpp"

namespace ipsf {

// V(x) = sum_m c_m x^m with real coefficients.
class PolynomialPotential {
public:
    PolynomialPotential() = default;
    explicit PolynomialPotential(std::vector<double> coeffs); // index = degree
    PolynomialPotential(std::initializer_list<double> coeffs)
        : PolynomialPotential(std::vector<double>(coeffs)) {}

    static PolynomialPotential sextic(double a, double b, double c);
    static PolynomialPotential decatic(double a, double b, double c, double d, double e);

    int degree() const;
    double coeff(int m) const;
    const std::vector<double>& coeffs() const { return c_; }

    double operator()(double x) const;

    // True when the leading term confines bound states (positive
    // coefficient, even degree). Violation is a caller-side warning,
    // not an error.
    bool is_confining() const;

private:
    std::vector<double> c_;
};

// Truncated translate set at resolution j over [-R, R]:
//   k_min = -R 2^j + N - 1,  k_max = R 2^j - N + 1.
struct Discretization {
    int level = 0;
    int half_width = 0;
    ScaleOrder order{2};
    long long k_min = 0;
    long long k_max = 0;

    long long dimension() const { return k_max - k_min + 1; }
};

Discretization make_discretization(int level, double half_width, ScaleOrder order);

// Dense symmetric pencil of the Galerkin eigenproblem A c = E B c:
//   A[k1,k2] = -2^{2j} L_{k2-k1} + sum_m c_m 2^{-jm} H_{m,k1,k2}
//   B[k1,k2] = H_{0,k1-k2}
// Both banded with half-bandwidth 2N-3. The band is kept in extended
// precision as well: at high levels the double rounding of the 2^{2j}-scaled
// kinetic entries alone moves small eigenvalues by ~4^j eps, so Rayleigh
// quotients evaluated against the extended band recover the exact-table
// eigenvalue where the double matrix cannot.
struct SpectralProblem {
    Eigen::MatrixXd a;
    Eigen::MatrixXd b;
    Discretization disc;
    // Row-major band storage, width 2*(2N-3)+1: entry (i, i+o) lives at
    // [i * width + o + 2N-3].
    std::vector<long double> a_band;
    std::vector<long double> b_band;

    long double a_at(long long i, long long j) const {
        const int band = disc.order.table_band();
        return a_band[static_cast<std::size_t>(i * (2 * band + 1) + (j - i) + band)];
    }
    long double b_at(long long i, long long j) const {
        const int band = disc.order.table_band();
        return b_band[static_cast<std::size_t>(i * (2 * band + 1) + (j - i) + band)];
    }

    // Rebuild the extended band from the dense entries. Required after
    // editing `a` or `b` directly; assemble() keeps both in sync itself.
    void refresh_extended_band();
};

SpectralProblem assemble(const PolynomialPotential& potential, const Discretization& disc,
                         const ConnectionTable& connection, const MomentTable& moments);

} // namespace ipsf
