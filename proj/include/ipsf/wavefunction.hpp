#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "ipsf/assembly.hpp"
#include "ipsf/eigensolve.hpp"

namespace ipsf {

// psi sampled on the dyadic grid {i / 2^depth : |i| <= R 2^depth}, unit
// L2 norm certified through the Gram matrix, sign fixed so the extremum
// nearest x = 0 is positive.
struct SampledWavefunction {
    int depth = 0;
    int half_width = 0;
    std::vector<double> values; // index 0 corresponds to x = -R
    double norm_certificate = 0.0;

    long long points() const { return static_cast<long long>(values.size()); }
    double x_at(long long i) const {
        return std::ldexp(static_cast<double>(i - (points() - 1) / 2), -depth);
    }
};

// Pointwise |f - g| after global sign alignment.
struct Deviation {
    double max_abs = 0.0;
    std::vector<double> pointwise;
};

// Sum 2^{j/2} c_k Phi(2^j x - k) on the depth-d grid. `samples` must hold
// Phi at depth >= d - j; d >= j is required so every evaluation point is
// dyadic for every translate.
SampledWavefunction reconstruct(const Spectrum& spectrum, int state, const Discretization& disc,
                                const DyadicSamples& samples, int depth);

Deviation deviation(const SampledWavefunction& f, const SampledWavefunction& g);

// Count strict sign alternations of the sampled values, ignoring noise
// below `threshold` times the max amplitude.
int count_nodes(const SampledWavefunction& f, double threshold = 1e-8);

// CSV export: metadata comment, header row, then x,psi[,psi_oracle,abs_dev].
void write_wavefunction_csv(const std::string& path, const SampledWavefunction& psi,
                            const std::string& metadata,
                            const SampledWavefunction* oracle = nullptr);

} // namespace ipsf
