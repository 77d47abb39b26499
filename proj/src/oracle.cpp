#include "ipsf/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <vector>

#include <lapacke.h>

#include "ipsf/errors.hpp"

#ifndef IPSF_DEFAULT_DATA_FILE
#define IPSF_DEFAULT_DATA_FILE "data/reference_cases.txt"
#endif

namespace ipsf {

namespace {

// Lowest n_states Dirichlet eigenvalues of the three-point discretization
// with n_int interior steps, optionally with eigenvectors.
std::vector<double> fd_eigenvalues(const PolynomialPotential& pot, double half_width, long long n_int,
                                   int n_states, Eigen::MatrixXd* vectors = nullptr) {
    const long long n = n_int - 1; // interior points
    if (n < n_states) throw ValidationError("finite-difference grid too coarse");
    const double h = 2.0 * half_width / static_cast<double>(n_int);
    std::vector<double> diag(static_cast<std::size_t>(n));
    std::vector<double> off(static_cast<std::size_t>(n > 0 ? n - 1 : 0));
    const double inv_h2 = 1.0 / (h * h);
    for (long long i = 0; i < n; ++i) {
        const double x = -half_width + h * static_cast<double>(i + 1);
        diag[static_cast<std::size_t>(i)] = 2.0 * inv_h2 + pot(x);
        if (i + 1 < n) off[static_cast<std::size_t>(i)] = -inv_h2;
    }
    std::vector<double> w(static_cast<std::size_t>(n));
    lapack_int found = 0;
    std::vector<lapack_int> isuppz(static_cast<std::size_t>(2 * n_states));
    std::vector<double> z;
    double* z_ptr = nullptr;
    lapack_int ldz = 1;
    if (vectors != nullptr) {
        z.resize(static_cast<std::size_t>(n) * n_states);
        z_ptr = z.data();
        ldz = static_cast<lapack_int>(n);
    }
    const lapack_int info = LAPACKE_dstevr(
        LAPACK_COL_MAJOR, vectors != nullptr ? 'V' : 'N', 'I', static_cast<lapack_int>(n),
        diag.data(), off.data(), 0.0, 0.0, 1, n_states, 2.0 * LAPACKE_dlamch('S'), &found,
        w.data(), z_ptr, ldz, isuppz.data());
    if (info != 0 || found != n_states) {
        throw NumericalError("tridiagonal eigensolver failed (info " + std::to_string(info) + ")");
    }
    if (vectors != nullptr) {
        vectors->resize(n, n_states);
        for (int s = 0; s < n_states; ++s) {
            for (long long i = 0; i < n; ++i) {
                (*vectors)(i, s) = z[static_cast<std::size_t>(i) +
                                     static_cast<std::size_t>(s) * static_cast<std::size_t>(n)];
            }
        }
    }
    w.resize(static_cast<std::size_t>(n_states));
    return w;
}

} // namespace

NumerovResult numerov_solve(const PolynomialPotential& potential, double half_width, int n_points,
                            int n_states) {
    if (n_points < 1000) throw ValidationError("numerov_solve requires n_points >= 1000");
    if (n_states < 1) throw ValidationError("numerov_solve requires n_states >= 1");
    if (!(half_width > 0.0)) throw ValidationError("domain half-width must be positive");

    const auto coarse = fd_eigenvalues(potential, half_width, n_points, n_states);
    const auto fine = fd_eigenvalues(potential, half_width, 2LL * n_points, n_states);

    NumerovResult r;
    r.n_points = n_points;
    r.eigenvalues.resize(static_cast<std::size_t>(n_states));
    r.error_estimates.resize(static_cast<std::size_t>(n_states));
    for (int i = 0; i < n_states; ++i) {
        // Second-order scheme: E(h) = E + c h^2 + O(h^4).
        const double extrap = (4.0 * fine[static_cast<std::size_t>(i)] -
                               coarse[static_cast<std::size_t>(i)]) / 3.0;
        r.eigenvalues[static_cast<std::size_t>(i)] = extrap;
        r.error_estimates[static_cast<std::size_t>(i)] =
            std::abs(fine[static_cast<std::size_t>(i)] - extrap);
    }
    return r;
}

SampledWavefunction numerov_wavefunction(const PolynomialPotential& potential, int half_width,
                                         int depth, int state, int refine_depth) {
    if (refine_depth <= depth) throw ValidationError("refine_depth must exceed the sample depth");
    if (state < 0) throw ValidationError("state must be non-negative");

    // Two nested dyadic resolutions; the pointwise Richardson combination
    // removes the h^2 eigenvector error on the shared grid.
    const long long n1 = static_cast<long long>(2 * half_width) << refine_depth;
    const long long n2 = 2 * n1;
    Eigen::MatrixXd v1, v2;
    fd_eigenvalues(potential, half_width, n1, state + 1, &v1);
    fd_eigenvalues(potential, half_width, n2, state + 1, &v2);

    const double h1 = 2.0 * half_width / static_cast<double>(n1);

    // Interior-point vectors; embed into the full grid with Dirichlet ends.
    std::vector<double> psi1(static_cast<std::size_t>(n1 + 1), 0.0);
    for (long long i = 1; i < n1; ++i) psi1[static_cast<std::size_t>(i)] = v1(i - 1, state);
    std::vector<double> psi2(static_cast<std::size_t>(n2 + 1), 0.0);
    for (long long i = 1; i < n2; ++i) psi2[static_cast<std::size_t>(i)] = v2(i - 1, state);

    // For even potentials the eigenstates alternate parity, and a
    // tunneling-split pair can be nearly degenerate relative to the matrix
    // norm, which lets inverse iteration mix the two. Projecting onto the
    // state's parity removes the opposite-parity contamination exactly.
    bool even_potential = true;
    for (int m = 1; m <= potential.degree(); m += 2) {
        if (potential.coeff(m) != 0.0) even_potential = false;
    }
    if (even_potential) {
        const double parity = state % 2 == 0 ? 1.0 : -1.0;
        const auto project = [parity](std::vector<double>& psi) {
            const std::size_t n = psi.size();
            for (std::size_t i = 0; i < n / 2; ++i) {
                const double v = 0.5 * (psi[i] + parity * psi[n - 1 - i]);
                psi[i] = v;
                psi[n - 1 - i] = parity * v;
            }
            if (n % 2 != 0 && parity < 0.0) psi[n / 2] = 0.0;
        };
        project(psi1);
        project(psi2);
    }

    // Normalize both to unit L2 (composite Simpson) and a common sign
    // before combining.
    const auto normalize = [](std::vector<double>& psi, double h) {
        double s = 0.0;
        for (std::size_t i = 0; i + 2 < psi.size(); i += 2) {
            s += psi[i] * psi[i] + 4.0 * psi[i + 1] * psi[i + 1] + psi[i + 2] * psi[i + 2];
        }
        s *= h / 3.0;
        const double inv = 1.0 / std::sqrt(s);
        for (double& v : psi) v *= inv;
    };
    normalize(psi1, h1);
    normalize(psi2, h1 / 2.0);
    {
        double dot = 0.0;
        for (long long i = 0; i <= n1; ++i) {
            dot += psi1[static_cast<std::size_t>(i)] * psi2[static_cast<std::size_t>(2 * i)];
        }
        if (dot < 0.0) {
            for (double& v : psi2) v = -v;
        }
    }

    std::vector<double> combined(static_cast<std::size_t>(n1 + 1));
    for (long long i = 0; i <= n1; ++i) {
        combined[static_cast<std::size_t>(i)] =
            (4.0 * psi2[static_cast<std::size_t>(2 * i)] - psi1[static_cast<std::size_t>(i)]) / 3.0;
    }

    // Restrict to the requested (coarser, nested) sample grid.
    const int stride_log = refine_depth - depth;
    const long long half_points = static_cast<long long>(half_width) << depth;
    SampledWavefunction out;
    out.depth = depth;
    out.half_width = half_width;
    out.values.resize(static_cast<std::size_t>(2 * half_points + 1));
    for (long long i = 0; i <= 2 * half_points; ++i) {
        out.values[static_cast<std::size_t>(i)] = combined[static_cast<std::size_t>(i << stride_log)];
    }
    {
        // Simpson-normalize on the final grid as the certificate.
        double s = 0.0;
        const double h = std::ldexp(1.0, -depth);
        for (std::size_t i = 0; i + 2 < out.values.size(); i += 2) {
            s += out.values[i] * out.values[i] + 4.0 * out.values[i + 1] * out.values[i + 1] +
                 out.values[i + 2] * out.values[i + 2];
        }
        s *= h / 3.0;
        out.norm_certificate = std::abs(s - 1.0);
    }

    // Match the reconstruction sign convention: extremum nearest the
    // origin positive.
    const long long centre = half_points;
    double v_max = 0.0;
    for (double v : out.values) v_max = std::max(v_max, std::abs(v));
    for (long long off = 0; off <= half_points; ++off) {
        bool fixed = false;
        for (long long idx : {centre + off, centre - off}) {
            if (idx < 0 || idx >= out.points()) continue;
            const double v = out.values[static_cast<std::size_t>(idx)];
            if (std::abs(v) <= 1e-6 * v_max) continue;
            const double left =
                idx > 0 ? std::abs(out.values[static_cast<std::size_t>(idx - 1)]) : 0.0;
            const double right = idx + 1 < out.points()
                                     ? std::abs(out.values[static_cast<std::size_t>(idx + 1)])
                                     : 0.0;
            if (std::abs(v) >= left && std::abs(v) >= right) {
                if (v < 0.0) {
                    for (double& x : out.values) x = -x;
                }
                fixed = true;
                break;
            }
        }
        if (fixed) break;
    }
    return out;
}

double qes_ground_energy(double b, double c) {
    if (!(c > 0.0)) throw ValidationError("QES profile requires c > 0");
    return b / (2.0 * std::sqrt(c));
}

std::vector<double> qes_ground_profile(double b, double c, const std::vector<double>& grid,
                                       double expected_energy) {
    if (!(c > 0.0)) throw ValidationError("QES profile requires c > 0");
    const double sqrt_c = std::sqrt(c);
    const double a = b * b / (4.0 * c) - 3.0 * sqrt_c;
    const auto psi = [&](double x) {
        const double x2 = x * x;
        return std::exp(-sqrt_c * x2 * x2 / 4.0 - b * x2 / (4.0 * sqrt_c));
    };

    // Self-certification: -psi'' + V psi = E0 psi must hold pointwise.
    // The second derivative is taken by a five-point stencil so the check
    // does not reuse the closed-form algebra it certifies.
    const double h = 1.0 / 1024.0;
    double worst = 0.0;
    for (int i = -192; i <= 192; ++i) {
        const double x = static_cast<double>(i) / 64.0; // [-3, 3]
        const double p = psi(x);
        const double d2 = (-psi(x + 2 * h) + 16.0 * psi(x + h) - 30.0 * p + 16.0 * psi(x - h) -
                           psi(x - 2 * h)) / (12.0 * h * h);
        const double v = a * x * x + b * std::pow(x, 4) + c * std::pow(x, 6);
        const double residual = -d2 + (v - expected_energy) * p;
        worst = std::max(worst, std::abs(residual) / (1.0 + std::abs(expected_energy) * p));
    }
    if (worst > 1e-8) {
        throw NumericalError("QES profile failed residual certification: worst relative residual " +
                             std::to_string(worst));
    }

    std::vector<double> out;
    out.reserve(grid.size());
    for (double x : grid) out.push_back(psi(x));
    return out;
}

std::vector<double> qes_ground_profile(double b, double c, const std::vector<double>& grid) {
    return qes_ground_profile(b, c, grid, qes_ground_energy(b, c));
}

const char* to_string(ReferenceCase::Source s) {
    switch (s) {
    case ReferenceCase::Source::published: return "published";
    case ReferenceCase::Source::pinned: return "pinned";
    case ReferenceCase::Source::numerov: return "numerov";
    case ReferenceCase::Source::qes_ansatz: return "qes_ansatz";
    }
    return "unknown";
}

namespace {

ReferenceCase::Source parse_source(const std::string& s) {
    if (s == "published") return ReferenceCase::Source::published;
    if (s == "pinned") return ReferenceCase::Source::pinned;
    if (s == "numerov") return ReferenceCase::Source::numerov;
    if (s == "qes_ansatz") return ReferenceCase::Source::qes_ansatz;
    throw ValidationError("unknown reference source '" + s + "'");
}

std::string trim(const std::string& s) {
    const auto b = s.find_first_not_of(" \t");
    if (b == std::string::npos) return "";
    const auto e = s.find_last_not_of(" \t");
    return s.substr(b, e - b + 1);
}

} // namespace

std::vector<ReferenceCase> reference_suite(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot open reference data file '" + path + "'");

    std::vector<ReferenceCase> cases;
    std::string line;
    bool version_seen = false;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        line = trim(line);
        if (line.empty() || line[0] == '#') continue;
        std::istringstream ls(line);
        std::string tag;
        ls >> tag;
        if (tag == "version") {
            int v = -1;
            ls >> v;
            if (v != 1) {
                throw VersionError("reference data file version " + std::to_string(v) +
                                   " not supported");
            }
            version_seen = true;
            continue;
        }
        if (tag != "case") {
            throw ValidationError("reference data: unexpected line " + std::to_string(lineno));
        }
        if (!version_seen) throw ValidationError("reference data: missing version header");

        // case <group> | <label> | <m:c,...> | <state> | <energy> | <source>
        std::string rest;
        std::getline(ls, rest);
        std::vector<std::string> fields;
        std::istringstream fs(rest);
        std::string field;
        while (std::getline(fs, field, '|')) fields.push_back(trim(field));
        if (fields.size() != 6) {
            throw ValidationError("reference data: malformed case on line " +
                                  std::to_string(lineno));
        }
        ReferenceCase rc;
        rc.group = fields[0];
        rc.label = fields[1];
        std::vector<double> coeffs;
        std::istringstream cs(fields[2]);
        std::string term;
        while (std::getline(cs, term, ',')) {
            const auto colon = term.find(':');
            if (colon == std::string::npos) {
                throw ValidationError("reference data: bad coefficient '" + term + "'");
            }
            const int m = std::stoi(term.substr(0, colon));
            const double v = std::stod(term.substr(colon + 1));
            if (m < 0) throw ValidationError("reference data: negative degree");
            if (coeffs.size() <= static_cast<std::size_t>(m)) coeffs.resize(m + 1, 0.0);
            coeffs[static_cast<std::size_t>(m)] = v;
        }
        rc.potential = PolynomialPotential(coeffs);
        rc.state = std::stoi(fields[3]);
        rc.reference_energy = std::stod(fields[4]);
        if (!std::isfinite(rc.reference_energy)) {
            throw ValidationError("reference data: non-finite energy");
        }
        rc.source = parse_source(fields[5]);
        cases.push_back(std::move(rc));
    }
    if (cases.empty()) throw ValidationError("reference data file '" + path + "' has no cases");
    return cases;
}

std::vector<ReferenceCase> reference_suite() {
    if (const char* env = std::getenv("IPSF_DATA_FILE"); env != nullptr && *env != '\0') {
        return reference_suite(env);
    }
    return reference_suite(IPSF_DEFAULT_DATA_FILE);
}

} // namespace ipsf
