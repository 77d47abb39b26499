#include "ipsf/wavefunction.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <string>

#include "ipsf/errors.hpp"

namespace ipsf {

SampledWavefunction reconstruct(const Spectrum& spectrum, int state, const Discretization& disc,
                                const DyadicSamples& samples, int depth) {
    if (state < 0 || state >= spectrum.states()) {
        throw ValidationError("state " + std::to_string(state) + " not present in spectrum");
    }
    if (depth < disc.level) {
        throw ValidationError("sampling depth must be at least the resolution level");
    }
    if (samples.order() != disc.order) {
        throw ValidationError("scaling-function samples have the wrong order");
    }
    const int rel_depth = depth - disc.level;
    if (samples.depth() < rel_depth) {
        throw ValidationError("scaling-function samples too shallow: need depth >= " +
                              std::to_string(rel_depth));
    }
    // Samples may be deeper than needed; the coarser grid embeds exactly.
    const int shift = samples.depth() - rel_depth;

    const Eigen::VectorXd c = spectrum.coefficients.col(state);
    const double amp = std::sqrt(std::ldexp(1.0, disc.level)); // 2^{j/2}
    const long long half_points = static_cast<long long>(disc.half_width) << depth;
    const int radius = disc.order.support_radius();

    SampledWavefunction psi;
    psi.depth = depth;
    psi.half_width = disc.half_width;
    psi.values.resize(static_cast<std::size_t>(2 * half_points + 1));
    psi.norm_certificate = spectrum.norm_certificates[static_cast<std::size_t>(state)];

    for (long long i = -half_points; i <= half_points; ++i) {
        // x = i / 2^depth, so 2^j x = i / 2^rel_depth; translate k
        // contributes when |2^j x - k| < radius.
        const long long k_centre = i >> rel_depth;
        double acc = 0.0;
        for (long long k = k_centre - radius; k <= k_centre + radius + 1; ++k) {
            if (k < disc.k_min || k > disc.k_max) continue;
            const long long arg = (i << shift) - (k << samples.depth());
            const double phi = samples.value(arg);
            if (phi != 0.0) acc += c[k - disc.k_min] * phi;
        }
        psi.values[static_cast<std::size_t>(i + half_points)] = amp * acc;
    }

    // Sign convention: the extremum nearest x = 0 is positive.
    const long long centre = half_points;
    double v_max = 0.0;
    for (double v : psi.values) v_max = std::max(v_max, std::abs(v));
    const double tol = 1e-6 * v_max;
    for (long long off = 0; off <= half_points; ++off) {
        bool fixed = false;
        for (long long idx : {centre + off, centre - off}) {
            if (idx < 0 || idx >= psi.points()) continue;
            const double v = psi.values[static_cast<std::size_t>(idx)];
            if (std::abs(v) <= tol) continue;
            const double left = idx > 0 ? std::abs(psi.values[static_cast<std::size_t>(idx - 1)])
                                        : 0.0;
            const double right = idx + 1 < psi.points()
                                     ? std::abs(psi.values[static_cast<std::size_t>(idx + 1)])
                                     : 0.0;
            if (std::abs(v) >= left && std::abs(v) >= right) {
                if (v < 0.0) {
                    for (double& x : psi.values) x = -x;
                }
                fixed = true;
                break;
            }
        }
        if (fixed) break;
    }
    return psi;
}

Deviation deviation(const SampledWavefunction& f, const SampledWavefunction& g) {
    if (f.depth != g.depth || f.half_width != g.half_width || f.points() != g.points()) {
        throw ValidationError("deviation: sample grids do not match");
    }
    // Align the global sign before differencing.
    double dot = 0.0;
    for (std::size_t i = 0; i < f.values.size(); ++i) dot += f.values[i] * g.values[i];
    const double sign = dot < 0.0 ? -1.0 : 1.0;

    Deviation d;
    d.pointwise.resize(f.values.size());
    for (std::size_t i = 0; i < f.values.size(); ++i) {
        d.pointwise[i] = std::abs(f.values[i] - sign * g.values[i]);
        d.max_abs = std::max(d.max_abs, d.pointwise[i]);
    }
    return d;
}

int count_nodes(const SampledWavefunction& f, double threshold) {
    double v_max = 0.0;
    for (double v : f.values) v_max = std::max(v_max, std::abs(v));
    const double tol = threshold * v_max;
    int nodes = 0;
    int last_sign = 0;
    for (double v : f.values) {
        if (std::abs(v) <= tol) continue;
        const int sgn = v > 0.0 ? 1 : -1;
        if (last_sign != 0 && sgn != last_sign) ++nodes;
        last_sign = sgn;
    }
    return nodes;
}

void write_wavefunction_csv(const std::string& path, const SampledWavefunction& psi,
                            const std::string& metadata, const SampledWavefunction* oracle) {
    std::ofstream out(path);
    if (!out) throw IoError("cannot open '" + path + "' for writing");
    out << "# " << metadata << "\n";
    if (oracle != nullptr) {
        if (oracle->points() != psi.points() || oracle->depth != psi.depth) {
            throw ValidationError("oracle wavefunction grid does not match");
        }
        out << "x,psi,psi_oracle,abs_dev\n";
        char buf[128];
        for (long long i = 0; i < psi.points(); ++i) {
            const double o = oracle->values[static_cast<std::size_t>(i)];
            const double v = psi.values[static_cast<std::size_t>(i)];
            std::snprintf(buf, sizeof buf, "%.17g,%.17g,%.17g,%.17g\n", psi.x_at(i), v, o,
                          std::abs(v - o));
            out << buf;
        }
    } else {
        out << "x,psi\n";
        char buf[80];
        for (long long i = 0; i < psi.points(); ++i) {
            std::snprintf(buf, sizeof buf, "%.17g,%.17g\n", psi.x_at(i),
                          psi.values[static_cast<std::size_t>(i)]);
            out << buf;
        }
    }
    if (!out.good()) throw IoError("write failure on '" + path + "'");
}

} // namespace ipsf
