#pragma once

#include <vector>

#include "ipsf/rational.hpp"
#include "ipsf/scaling.hpp"

namespace ipsf {

// Monomial Galerkin coefficients H_{m,k} = <x^m Phi(x-k), Phi(x)> for
// 0 <= m <= m_max and |k| <= 2N-3. Even orders are symmetric in k, odd
// orders antisymmetric; everything beyond the band is exactly zero.
class MomentTable {
public:
    MomentTable(ScaleOrder order, int m_max, std::vector<std::vector<Rational>> upper);

    ScaleOrder order() const { return order_; }
    int m_max() const { return m_max_; }
    int band() const { return order_.table_band(); }

    // H_{m,k} (signed k).
    double at(int m, int k) const;
    Rational rational_at(int m, int k) const;

    // Two-index form H_{m,k1,k2} = sum_r C(m,r) k2^{m-r} H_{r,k1-k2};
    // exactly zero when |k1-k2| >= 2N-2. Rejects m > m_max.
    double shift_moment(int m, long long k1, long long k2) const;

    // Overlap <Phi_{j,k1}, Phi_{j,k2}> = H_{0,k1-k2}, level-independent.
    double gram_coefficient(long long k1, long long k2) const;

private:
    ScaleOrder order_;
    int m_max_;
    std::vector<std::vector<Rational>> upper_; // [m][k], k = 0 .. 2N-3
    std::vector<std::vector<double>> upper_d_;
    std::vector<std::vector<long double>> upper_ld_;
};

// Build the moment table by the two-scale recurrence: each order m is a
// small linear solve whose right-hand side binomially combines the lower
// orders; m = 0 is the homogeneous case normalized by sum_k H_{0,k} = 1.
// Solved in exact rational arithmetic.
MomentTable compute_moments(const RefinementMask& mask, int m_max);

// Free-function spellings of the table queries.
inline double shift_moment(const MomentTable& t, int m, long long k1, long long k2) {
    return t.shift_moment(m, k1, k2);
}
inline double gram_coefficient(const MomentTable& t, long long k1, long long k2) {
    return t.gram_coefficient(k1, k2);
}

} // namespace ipsf
