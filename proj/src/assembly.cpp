#include "ipsf/assembly.hpp"

#include <cmath>
#include <string>
#include <utility>

#include "ipsf/errors.hpp"

namespace ipsf {

PolynomialPotential::PolynomialPotential(std::vector<double> coeffs) : c_(std::move(coeffs)) {
    for (double v : c_) {
        if (!std::isfinite(v)) throw ValidationError("potential coefficients must be finite");
    }
    while (!c_.empty() && c_.back() == 0.0) c_.pop_back();
}

PolynomialPotential PolynomialPotential::sextic(double a, double b, double c) {
    return PolynomialPotential({0, 0, a, 0, b, 0, c});
}

PolynomialPotential PolynomialPotential::decatic(double a, double b, double c, double d, double e) {
    return PolynomialPotential({0, 0, a, 0, b, 0, c, 0, d, 0, e});
}

int PolynomialPotential::degree() const { return static_cast<int>(c_.size()) - 1; }

double PolynomialPotential::coeff(int m) const {
    if (m < 0 || m >= static_cast<int>(c_.size())) return 0.0;
    return c_[static_cast<std::size_t>(m)];
}

double PolynomialPotential::operator()(double x) const {
    double v = 0.0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) v = v * x + *it;
    return v;
}

bool PolynomialPotential::is_confining() const {
    if (c_.empty()) return false;
    return degree() % 2 == 0 && c_.back() > 0.0;
}

void SpectralProblem::refresh_extended_band() {
    const int band = disc.order.table_band();
    const int width = 2 * band + 1;
    const long long dim = a.rows();
    a_band.assign(static_cast<std::size_t>(dim) * width, 0.0L);
    b_band.assign(static_cast<std::size_t>(dim) * width, 0.0L);
    for (long long i = 0; i < dim; ++i) {
        const long long j_hi = std::min<long long>(dim - 1, i + band);
        for (long long j = std::max<long long>(0, i - band); j <= j_hi; ++j) {
            a_band[static_cast<std::size_t>(i * width + (j - i) + band)] = a(i, j);
            b_band[static_cast<std::size_t>(i * width + (j - i) + band)] = b(i, j);
        }
    }
}

Discretization make_discretization(int level, double half_width, ScaleOrder order) {
    if (level < 0) throw ValidationError("resolution level must be non-negative");
    if (!(half_width > 0) || half_width != std::floor(half_width)) {
        throw ValidationError("domain half-width must be a positive integer");
    }
    Discretization d;
    d.level = level;
    d.half_width = static_cast<int>(half_width);
    d.order = order;
    const long long span = static_cast<long long>(d.half_width) << level;
    d.k_min = -span + order.value() - 1;
    d.k_max = span - order.value() + 1;
    if (d.dimension() <= 0) {
        throw ValidationError("half-width " + std::to_string(d.half_width) +
                              " is too small for order " + std::to_string(order.value()) +
                              " at level " + std::to_string(level));
    }
    return d;
}

SpectralProblem assemble(const PolynomialPotential& potential, const Discretization& disc,
                         const ConnectionTable& connection, const MomentTable& moments) {
    if (connection.order() != disc.order || moments.order() != disc.order) {
        throw ValidationError("coefficient tables were built for a different scaling order");
    }
    if (potential.degree() > moments.m_max()) {
        throw ValidationError("potential degree " + std::to_string(potential.degree()) +
                              " exceeds moment table m_max " + std::to_string(moments.m_max()));
    }

    const int band = disc.order.table_band();
    const long long dim = disc.dimension();
    const int j = disc.level;
    const double kinetic_scale = std::ldexp(1.0, 2 * j); // 2^{2j}, exact

    // Per-offset polynomial-in-k2 coefficients of the potential block:
    // coeff[q][i] = sum over contributing (m, r = m - i) of
    //   c_m 2^{-jm} C(m,r) H_{r,q}.  The entry is then a single Horner
    //   evaluation in k2 per offset, accumulated in extended precision.
    const int m_max = potential.degree();
    std::vector<std::vector<long double>> poly(static_cast<std::size_t>(2 * band + 1));
    std::vector<long double> binom((m_max + 1) * (m_max + 1), 0.0L);
    for (int m = 0; m <= m_max; ++m) {
        binom[m * (m_max + 1)] = 1.0L;
        for (int r = 1; r <= m; ++r) {
            binom[m * (m_max + 1) + r] =
                binom[(m - 1) * (m_max + 1) + r - 1] + binom[(m - 1) * (m_max + 1) + r];
        }
    }
    for (int q = -band; q <= band; ++q) {
        auto& pc = poly[static_cast<std::size_t>(q + band)];
        pc.assign(static_cast<std::size_t>(m_max + 1), 0.0L);
        for (int m = 0; m <= m_max; ++m) {
            const double cm = potential.coeff(m);
            if (cm == 0.0) continue;
            const long double level_scale =
                static_cast<long double>(cm) * std::ldexp(1.0L, -j * m);
            for (int r = 0; r <= m; ++r) {
                long double h = moments.rational_at(r, q).convert_to<long double>();
                if (h == 0.0L) continue;
                pc[static_cast<std::size_t>(m - r)] += level_scale * binom[m * (m_max + 1) + r] * h;
            }
        }
        while (!pc.empty() && pc.back() == 0.0L) pc.pop_back();
    }

    SpectralProblem p;
    p.disc = disc;
    p.a = Eigen::MatrixXd::Zero(dim, dim);
    p.b = Eigen::MatrixXd::Zero(dim, dim);
    const int width = 2 * band + 1;
    p.a_band.assign(static_cast<std::size_t>(dim) * width, 0.0L);
    p.b_band.assign(static_cast<std::size_t>(dim) * width, 0.0L);

    std::vector<long double> conn_ld(static_cast<std::size_t>(band + 1));
    std::vector<long double> gram_ld(static_cast<std::size_t>(band + 1));
    for (int k = 0; k <= band; ++k) {
        conn_ld[static_cast<std::size_t>(k)] = connection.at(k).convert_to<long double>();
        gram_ld[static_cast<std::size_t>(k)] = moments.rational_at(0, k).convert_to<long double>();
    }
    const long double kinetic_scale_ld = std::ldexp(1.0L, 2 * j);

    const auto band_slot = [&](long long i, long long jc) {
        return static_cast<std::size_t>(i * width + (jc - i) + band);
    };

    for (long long i1 = 0; i1 < dim; ++i1) {
        const long long k1 = disc.k_min + i1;
        for (long long i2 = i1; i2 < dim && i2 - i1 <= band; ++i2) {
            const long long k2 = disc.k_min + i2;
            const int q = static_cast<int>(k1 - k2);

            const double kinetic = -kinetic_scale * connection.at_d(q);
            const long double kinetic_ld = -kinetic_scale_ld * conn_ld[static_cast<std::size_t>(-q)];

            const auto& pc = poly[static_cast<std::size_t>(q + band)];
            long double pot = 0.0L;
            for (auto it = pc.rbegin(); it != pc.rend(); ++it) {
                pot = pot * static_cast<long double>(k2) + *it;
            }

            const double entry = kinetic + static_cast<double>(pot);
            p.a(i1, i2) = entry;
            p.a(i2, i1) = entry;
            const double gram = moments.gram_coefficient(k1, k2);
            p.b(i1, i2) = gram;
            p.b(i2, i1) = gram;

            const long double entry_ld = kinetic_ld + pot;
            const long double gram_ld_v = gram_ld[static_cast<std::size_t>(-q)];
            p.a_band[band_slot(i1, i2)] = entry_ld;
            p.a_band[band_slot(i2, i1)] = entry_ld;
            p.b_band[band_slot(i1, i2)] = gram_ld_v;
            p.b_band[band_slot(i2, i1)] = gram_ld_v;
        }
    }
    return p;
}

} // namespace ipsf
