#pragma once

#include <vector>

#include <Eigen/Dense>

#include "ipsf/assembly.hpp"

namespace ipsf {

// Lowest eigenpairs of A c = E B c, ascending, with B-orthonormal
// coefficient vectors and residual certificates.
struct Spectrum {
    std::vector<double> eigenvalues;
    Eigen::MatrixXd coefficients;        // one column per state
    std::vector<double> residuals;       // ||A c - E B c||_2
    std::vector<double> norm_certificates; // |c^T B c - 1|
    int states() const { return static_cast<int>(eigenvalues.size()); }
};

// Reduce with the Cholesky factor B = G G^T to a standard symmetric problem,
// solve it densely, back-transform, then refine each pair with banded
// inverse iteration and a compensated Rayleigh quotient before
// B-normalizing. Near-degenerate clusters (gap < 1e-9) are re-orthogonalized
// in the B inner product.
Spectrum solve_generalized(const SpectralProblem& problem, int n_states);

} // namespace ipsf
