#include "ipsf/scaling.hpp"

#include <string>
#include <utility>

#include "ipsf/errors.hpp"

namespace ipsf {

const Rational RefinementMask::zero_(0);
const Rational DyadicSamples::zero_(0);

ScaleOrder::ScaleOrder(int n) : n_(n) {
    if (n < 2 || n % 2 != 0) {
        throw ValidationError("scaling-function order must be a positive even integer, got " +
                              std::to_string(n));
    }
}

RefinementMask::RefinementMask(ScaleOrder order, std::vector<Rational> a)
    : order_(order), a_(std::move(a)) {}

RefinementMask RefinementMask::build(ScaleOrder order) {
    const int n = order.value();
    std::vector<Rational> a(2 * n - 1, Rational(0));
    const auto idx = [n](int k) { return k + n - 1; };

    a[idx(0)] = 1;
    // Odd entries: a_{1-2i} = l_i(1/2) on the integer nodes {-N/2+1, ..., N/2}.
    const Rational half(1, 2);
    for (int i = -n / 2 + 1; i <= n / 2; ++i) {
        Rational value(1);
        for (int node = -n / 2 + 1; node <= n / 2; ++node) {
            if (node == i) continue;
            value *= (half - node) / Rational(i - node);
        }
        a[idx(1 - 2 * i)] = value;
    }
    return RefinementMask(order, std::move(a));
}

RefinementMask RefinementMask::from_coefficients(ScaleOrder order, std::vector<Rational> a) {
    const int n = order.value();
    if (a.size() != static_cast<std::size_t>(2 * n - 1)) {
        throw ValidationError("refinement mask for order " + std::to_string(n) + " needs " +
                              std::to_string(2 * n - 1) + " coefficients");
    }
    const auto idx = [n](int k) { return k + n - 1; };
    if (a[idx(0)] != 1) throw ValidationError("refinement mask must have a_0 = 1");
    Rational sum(0);
    for (int k = -n + 1; k <= n - 1; ++k) {
        if (k != 0 && k % 2 == 0 && a[idx(k)] != 0) {
            throw ValidationError("refinement mask must vanish at nonzero even offsets");
        }
        if (a[idx(k)] != a[idx(-k)]) {
            throw ValidationError("refinement mask must be reflection-symmetric");
        }
        sum += a[idx(k)];
    }
    if (sum != 2) throw ValidationError("refinement mask coefficients must sum to 2");
    return RefinementMask(order, std::move(a));
}

const Rational& RefinementMask::at(int k) const {
    const int n = order_.value();
    if (k <= -n || k >= n) return zero_;
    return a_[k + n - 1];
}

double RefinementMask::at_d(int k) const { return to_double(at(k)); }

DyadicSamples::DyadicSamples(ScaleOrder order, int depth, std::vector<Rational> values)
    : order_(order), depth_(depth),
      max_index_(static_cast<long long>(order.support_radius()) << depth),
      values_(std::move(values)) {
    if (values_.size() != static_cast<std::size_t>(2 * max_index_ + 1)) {
        throw ValidationError("dyadic sample vector has wrong length");
    }
    values_d_.reserve(values_.size());
    for (const auto& v : values_) values_d_.push_back(to_double(v));
}

const Rational& DyadicSamples::at_index(long long i) const {
    if (i < -max_index_ || i > max_index_) return zero_;
    return values_[static_cast<std::size_t>(i + max_index_)];
}

double DyadicSamples::value(long long i) const {
    if (i < -max_index_ || i > max_index_) return 0.0;
    return values_d_[static_cast<std::size_t>(i + max_index_)];
}

RefinementMask build_mask(ScaleOrder order) { return RefinementMask::build(order); }

DyadicSamples eval_phi_dyadic(const RefinementMask& mask, int depth) {
    if (depth < 0) throw ValidationError("dyadic depth must be non-negative");
    const int n = mask.order().value();
    const int radius = n - 1;

    // Kronecker seed on the integers, then one refinement pass per level:
    // values at even sub-indices are inherited, odd ones come from the
    // two-scale relation applied to the previous level.
    std::vector<Rational> prev(2 * radius + 1, Rational(0));
    prev[radius] = 1;

    for (int d = 1; d <= depth; ++d) {
        const long long half = static_cast<long long>(radius) << (d - 1);
        const long long full = half * 2;
        std::vector<Rational> cur(2 * full + 1, Rational(0));
        for (long long i = -full; i <= full; ++i) {
            if ((i & 1LL) == 0) {
                cur[i + full] = prev[i / 2 + half];
                continue;
            }
            // Phi(i/2^d) = sum_k a_k Phi(i/2^{d-1} - k)
            Rational acc(0);
            for (int k = -n + 1; k <= n - 1; ++k) {
                const long long arg = i - (static_cast<long long>(k) << (d - 1));
                if (arg < -half || arg > half) continue;
                const Rational& pv = prev[arg + half];
                if (pv != 0) acc += mask.at(k) * pv;
            }
            cur[i + full] = std::move(acc);
        }
        prev = std::move(cur);
    }
    return DyadicSamples(mask.order(), depth, std::move(prev));
}

} // namespace ipsf
