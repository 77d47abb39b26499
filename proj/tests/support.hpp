#pragma once

#include <cmath>

#include "ipsf/connection.hpp"
#include "ipsf/moments.hpp"
#include "ipsf/scaling.hpp"

namespace ipsf::testing {

// Shared N=4 tables; computed once per process.
inline const RefinementMask& mask4() {
    static const RefinementMask m = build_mask(ScaleOrder(4));
    return m;
}

inline const ConnectionTable& connection4() {
    static const ConnectionTable t = compute_connection(mask4());
    return t;
}

inline const MomentTable& moments4() {
    static const MomentTable t = compute_moments(mask4(), 10);
    return t;
}

// Brute-force trapezoid quadrature of <x^m Phi(x-k), Phi(x)> on the dyadic
// grid carried by `samples`. Independent oracle for the recurrence-built
// moment tables; both factors vanish at the range ends so the half-weight
// endpoint correction is moot.
inline double quadrature_moment(const DyadicSamples& samples, int m, long long k) {
    const long long s = samples.max_index();
    const long long shift = k << samples.depth();
    const long long lo = std::max(-s, shift - s);
    const long long hi = std::min(s, shift + s);
    const double h = std::ldexp(1.0, -samples.depth());
    double sum = 0.0;
    for (long long i = lo; i <= hi; ++i) {
        const double phi_pair = samples.value(i - shift) * samples.value(i);
        if (phi_pair == 0.0) continue;
        const double x = static_cast<double>(i) * h;
        sum += std::pow(x, m) * phi_pair;
    }
    return sum * h;
}

} // namespace ipsf::testing
