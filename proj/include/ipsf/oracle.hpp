#pragma once

#include <string>
#include <vector>

#include "ipsf/assembly.hpp"
#include "ipsf/wavefunction.hpp"

namespace ipsf {

// Independent reference machinery: a finite-difference boundary-value
// eigensolver on the same truncated domain, the quasi-exactly-solvable
// sextic ground-state profile, and the published reference energies.

struct NumerovResult {
    std::vector<double> eigenvalues;      // Richardson-extrapolated
    std::vector<double> error_estimates;  // |fine - extrapolated|
    int n_points = 0;
};

// Lowest n_states Dirichlet eigenvalues of -psi'' + V psi = E psi on
// [-R, R] from the three-point discretization at n_points and 2*n_points
// interior-step resolutions, Richardson-combined. n_points >= 1000.
NumerovResult numerov_solve(const PolynomialPotential& potential, double half_width,
                            int n_points, int n_states);

// High-resolution finite-difference eigenfunction restricted to the dyadic
// sample grid at `depth`. Internally solved at refine_depth and
// refine_depth+1 and Richardson-combined pointwise; refine_depth > depth.
SampledWavefunction numerov_wavefunction(const PolynomialPotential& potential, int half_width,
                                         int depth, int state, int refine_depth = 13);

// Ground-state profile exp(-sqrt(c) x^4 / 4 - b x^2 / (4 sqrt(c))) of the
// sextic potential a x^2 + b x^4 + c x^6 under the constraint
// a = b^2/(4c) - 3 sqrt(c), unnormalized. Self-certifies by checking
// -psi'' + V psi = E0 psi pointwise with a finite-difference second
// derivative; expected_energy defaults to the closed-form b / (2 sqrt(c)).
std::vector<double> qes_ground_profile(double b, double c, const std::vector<double>& grid,
                                       double expected_energy);
std::vector<double> qes_ground_profile(double b, double c, const std::vector<double>& grid);

// Closed-form QES ground energy b / (2 sqrt(c)).
double qes_ground_energy(double b, double c);

// One published (or pinned) reference energy.
struct ReferenceCase {
    enum class Source { published, pinned, numerov, qes_ansatz };

    std::string label;
    PolynomialPotential potential;
    int state = 0;
    double reference_energy = 0.0;
    Source source = Source::published;
    std::string group; // e.g. "sextic-exact", "sextic-scm", "decatic-scm"
};

// Load the versioned reference-case data file. With no argument the
// compiled-in default (data/reference_cases.txt next to the source tree,
// overridable with IPSF_DATA_FILE) is used.
std::vector<ReferenceCase> reference_suite(const std::string& path);
std::vector<ReferenceCase> reference_suite();

const char* to_string(ReferenceCase::Source s);

} // namespace ipsf
