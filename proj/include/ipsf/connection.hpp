#pragma once

#include <vector>

#include "ipsf/rational.hpp"
#include "ipsf/scaling.hpp"

namespace ipsf {

// Level-0 second-derivative Galerkin coefficients
//   L_k = <Phi''(. - k), Phi>,  L_k = L_{-k},  L_k = 0 for |k| >= 2N-2,
// normalized by sum_k k^2 L_k = 2.
class ConnectionTable {
public:
    ConnectionTable(ScaleOrder order, std::vector<Rational> upper);

    // Wrap deserialized values; verifies the normalization identity.
    static ConnectionTable from_values(ScaleOrder order, std::vector<Rational> upper);

    ScaleOrder order() const { return order_; }
    int band() const { return order_.table_band(); }

    const Rational& at(int k) const; // exact zero for |k| >= 2N-2
    double at_d(int k) const;

private:
    ScaleOrder order_;
    std::vector<Rational> upper_; // k = 0 .. 2N-3
    std::vector<double> upper_d_;
    static const Rational zero_;
};

// Solve the homogeneous two-scale system for L_k (null space must be
// one-dimensional) and rescale with the second-moment normalization.
ConnectionTable compute_connection(const RefinementMask& mask);

} // namespace ipsf
