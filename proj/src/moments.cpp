#include "ipsf/moments.hpp"

#include <cmath>
#include <cstdlib>
#include <string>
#include <utility>

#include "ipsf/errors.hpp"
#include "ipsf/rational_linalg.hpp"

namespace ipsf {

namespace {

BigInt binomial(int n, int k) {
    BigInt r = 1;
    for (int i = 0; i < k; ++i) {
        r *= n - i;
        r /= i + 1;
    }
    return r;
}

} // namespace

MomentTable::MomentTable(ScaleOrder order, int m_max, std::vector<std::vector<Rational>> upper)
    : order_(order), m_max_(m_max), upper_(std::move(upper)) {
    const std::size_t width = static_cast<std::size_t>(order_.table_band() + 1);
    if (upper_.size() != static_cast<std::size_t>(m_max_ + 1)) {
        throw ValidationError("moment table has wrong number of orders");
    }
    for (const auto& row : upper_) {
        if (row.size() != width) throw ValidationError("moment table row has wrong length");
    }
    upper_d_.resize(upper_.size());
    upper_ld_.resize(upper_.size());
    for (std::size_t m = 0; m < upper_.size(); ++m) {
        for (const auto& v : upper_[m]) {
            upper_d_[m].push_back(to_double(v));
            upper_ld_[m].push_back(to_long_double(v));
        }
    }
}

double MomentTable::at(int m, int k) const {
    if (m < 0 || m > m_max_) throw ValidationError("moment order out of range");
    const int a = std::abs(k);
    if (a > band()) return 0.0;
    const double v = upper_d_[static_cast<std::size_t>(m)][static_cast<std::size_t>(a)];
    return (k < 0 && m % 2 != 0) ? -v : v;
}

Rational MomentTable::rational_at(int m, int k) const {
    if (m < 0 || m > m_max_) throw ValidationError("moment order out of range");
    const int a = std::abs(k);
    if (a > band()) return Rational(0);
    Rational v = upper_[static_cast<std::size_t>(m)][static_cast<std::size_t>(a)];
    return (k < 0 && m % 2 != 0) ? Rational(-v) : v;
}

double MomentTable::shift_moment(int m, long long k1, long long k2) const {
    if (m < 0 || m > m_max_) {
        throw ValidationError("shift_moment: order " + std::to_string(m) +
                              " exceeds table m_max " + std::to_string(m_max_));
    }
    const long long q = k1 - k2;
    if (std::llabs(q) >= 2LL * order_.value() - 2) return 0.0;
    // sum_r C(m,r) k2^{m-r} H_{r,q}: Horner in k2 over coefficients
    // C(m,r) H_{r,q}, accumulated in extended precision.
    const int aq = static_cast<int>(std::llabs(q));
    long double acc = 0.0L;
    for (int r = 0; r <= m; ++r) {
        long double h = upper_ld_[static_cast<std::size_t>(r)][static_cast<std::size_t>(aq)];
        if (q < 0 && r % 2 != 0) h = -h;
        const long double coeff = static_cast<long double>(binomial(m, r).convert_to<double>()) * h;
        acc = acc * static_cast<long double>(k2) + coeff;
    }
    return static_cast<double>(acc);
}

double MomentTable::gram_coefficient(long long k1, long long k2) const {
    const long long q = k1 - k2;
    if (std::llabs(q) > band()) return 0.0;
    return upper_d_[0][static_cast<std::size_t>(std::llabs(q))];
}

MomentTable compute_moments(const RefinementMask& mask, int m_max) {
    if (m_max < 0) throw ValidationError("m_max must be non-negative");
    const int n = mask.order().value();
    const int band = 2 * n - 3;

    // Folded transfer matrix: row k, unknown |q|, signed by the parity of
    // the moment order for negative q.
    const auto transfer = [&](int parity) {
        const int k_lo = parity == 0 ? 0 : 1;
        const std::size_t dim = static_cast<std::size_t>(band - k_lo + 1);
        detail::RationalMatrix t(dim, detail::RationalVector(dim, Rational(0)));
        for (int k = k_lo; k <= band; ++k) {
            for (int l1 = -n + 1; l1 <= n - 1; ++l1) {
                for (int l2 = -n + 1; l2 <= n - 1; ++l2) {
                    const int q = 2 * k + l1 - l2;
                    if (std::abs(q) > band) continue;
                    if (parity == 1 && q == 0) continue;
                    Rational w = mask.at(l1) * mask.at(l2);
                    if (q < 0 && parity == 1) w = -w;
                    t[k - k_lo][std::abs(q) - k_lo] += w;
                }
            }
        }
        return t;
    };

    std::vector<std::vector<Rational>> h;
    h.reserve(static_cast<std::size_t>(m_max) + 1);

    // m = 0: homogeneous fixed point of T/2, normalized to sum_k H_{0,k} = 1.
    {
        auto t = transfer(0);
        const std::size_t dim = t.size();
        detail::RationalMatrix m0(dim, detail::RationalVector(dim, Rational(0)));
        for (std::size_t i = 0; i < dim; ++i) {
            m0[i][i] += 1;
            for (std::size_t jc = 0; jc < dim; ++jc) m0[i][jc] -= t[i][jc] / 2;
        }
        detail::RationalVector u;
        try {
            u = detail::nullspace_1d(std::move(m0));
        } catch (const NumericalError& e) {
            throw NumericalError(std::string("moment table, order 0: ") + e.what());
        }
        Rational total = u[0];
        for (std::size_t i = 1; i < dim; ++i) total += 2 * u[i];
        if (total == 0) throw NumericalError("moment table: zero partition sum");
        for (auto& v : u) v /= total;
        h.push_back(std::move(u));
    }

    // m >= 1: (I - T/2^{m+1}) H_m = rhs built from the lower orders.
    for (int m = 1; m <= m_max; ++m) {
        const int parity = m % 2;
        const int k_lo = parity;
        auto t = transfer(parity);
        const std::size_t dim = t.size();
        const Rational scale = Rational(1, BigInt(1) << static_cast<unsigned>(m + 1));

        detail::RationalMatrix sys(dim, detail::RationalVector(dim, Rational(0)));
        for (std::size_t i = 0; i < dim; ++i) {
            sys[i][i] += 1;
            for (std::size_t jc = 0; jc < dim; ++jc) sys[i][jc] -= scale * t[i][jc];
        }

        detail::RationalVector rhs(dim, Rational(0));
        for (int k = k_lo; k <= band; ++k) {
            Rational acc(0);
            for (int l1 = -n + 1; l1 <= n - 1; ++l1) {
                for (int l2 = -n + 1; l2 <= n - 1; ++l2) {
                    const int q = 2 * k + l1 - l2;
                    if (std::abs(q) > band) continue;
                    const Rational w = mask.at(l1) * mask.at(l2);
                    if (w == 0) continue;
                    // sum_{s<m} C(m,s) l2^{m-s} H_{s,q}
                    Rational inner(0);
                    BigInt l2_pow = l2; // l2^{m-s}, built downward from s = m-1
                    for (int s = m - 1; s >= 0; --s) {
                        Rational hval = h[static_cast<std::size_t>(s)]
                                         [static_cast<std::size_t>(std::abs(q))];
                        if (q < 0 && s % 2 != 0) hval = -hval;
                        if (hval != 0) inner += Rational(binomial(m, s) * l2_pow) * hval;
                        l2_pow *= l2;
                    }
                    acc += w * inner;
                }
            }
            rhs[static_cast<std::size_t>(k - k_lo)] = scale * acc;
        }

        detail::RationalVector sol;
        try {
            sol = detail::solve_exact(std::move(sys), std::move(rhs));
        } catch (const NumericalError& e) {
            throw NumericalError("moment table, order " + std::to_string(m) + ": " + e.what());
        }

        std::vector<Rational> row(static_cast<std::size_t>(band + 1), Rational(0));
        for (int k = k_lo; k <= band; ++k) {
            row[static_cast<std::size_t>(k)] = sol[static_cast<std::size_t>(k - k_lo)];
        }
        h.push_back(std::move(row));
    }

    return MomentTable(mask.order(), m_max, std::move(h));
}

} // namespace ipsf
