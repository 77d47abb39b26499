#include "ipsf/connection.hpp"

#include <utility>

#include "ipsf/errors.hpp"
#include "ipsf/rational_linalg.hpp"

namespace ipsf {

const Rational ConnectionTable::zero_(0);

ConnectionTable::ConnectionTable(ScaleOrder order, std::vector<Rational> upper)
    : order_(order), upper_(std::move(upper)) {
    if (upper_.size() != static_cast<std::size_t>(order_.table_band() + 1)) {
        throw ValidationError("connection table has wrong length");
    }
    upper_d_.reserve(upper_.size());
    for (const auto& v : upper_) upper_d_.push_back(to_double(v));
}

ConnectionTable ConnectionTable::from_values(ScaleOrder order, std::vector<Rational> upper) {
    ConnectionTable t(order, std::move(upper));
    Rational second_moment(0);
    for (int k = 1; k <= t.band(); ++k) second_moment += 2 * Rational(k) * k * t.at(k);
    if (second_moment != 2) {
        throw ValidationError("connection table violates the second-moment normalization");
    }
    return t;
}

const Rational& ConnectionTable::at(int k) const {
    if (k < 0) k = -k;
    if (k > order_.table_band()) return zero_;
    return upper_[static_cast<std::size_t>(k)];
}

double ConnectionTable::at_d(int k) const {
    if (k < 0) k = -k;
    if (k > order_.table_band()) return 0.0;
    return upper_d_[static_cast<std::size_t>(k)];
}

ConnectionTable compute_connection(const RefinementMask& mask) {
    const int n = mask.order().value();
    const int band = 2 * n - 3;
    const std::size_t dim = static_cast<std::size_t>(band + 1);

    // Two-scale identity L_k = 2 sum_{l1,l2} a_{l1} a_{l2} L_{2k+l2-l1},
    // folded onto k >= 0 by L_{-k} = L_k. Rows form (I - 2T) u = 0.
    detail::RationalMatrix m(dim, detail::RationalVector(dim, Rational(0)));
    for (int k = 0; k <= band; ++k) {
        m[k][k] += 1;
        for (int l1 = -n + 1; l1 <= n - 1; ++l1) {
            for (int l2 = -n + 1; l2 <= n - 1; ++l2) {
                const int q = 2 * k + l2 - l1;
                if (std::abs(q) > band) continue;
                m[k][std::abs(q)] -= 2 * mask.at(l1) * mask.at(l2);
            }
        }
    }

    detail::RationalVector u;
    try {
        u = detail::nullspace_1d(std::move(m));
    } catch (const NumericalError& e) {
        throw NumericalError(std::string("connection coefficients: ") + e.what());
    }

    // Rescale so sum_k k^2 L_k = 2.
    Rational second_moment(0);
    for (int k = 1; k <= band; ++k) second_moment += 2 * Rational(k) * k * u[k];
    if (second_moment == 0) {
        throw NumericalError("connection coefficients: degenerate normalization");
    }
    const Rational scale = Rational(2) / second_moment;
    for (auto& v : u) v *= scale;
    return ConnectionTable(mask.order(), std::move(u));
}

} // namespace ipsf
