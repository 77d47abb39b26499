#include "ipsf/eigensolve.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <vector>

#include <lapacke.h>

#include "ipsf/errors.hpp"

namespace ipsf {

namespace {

// Kahan-compensated banded quadratic form c^T M c against the
// extended-precision band storage.
long double quad_form(const std::vector<long double>& band_store, long long n, int band,
                      const Eigen::VectorXd& c) {
    const int width = 2 * band + 1;
    long double sum = 0.0L, comp = 0.0L;
    for (long long i = 0; i < n; ++i) {
        const long double ci = static_cast<long double>(c[i]);
        const long long j_hi = std::min<long long>(n - 1, i + band);
        for (long long j = std::max<long long>(0, i - band); j <= j_hi; ++j) {
            const long double t =
                ci * band_store[static_cast<std::size_t>(i * width + (j - i) + band)] *
                static_cast<long double>(c[j]);
            const long double y = t - comp;
            const long double s = sum + y;
            comp = (s - sum) - y;
            sum = s;
        }
    }
    return sum;
}

Eigen::VectorXd band_matvec(const Eigen::MatrixXd& m, const Eigen::VectorXd& c, int band) {
    const long long n = m.rows();
    Eigen::VectorXd r(n);
    for (long long i = 0; i < n; ++i) {
        double acc = 0.0;
        const long long j_hi = std::min<long long>(n - 1, i + band);
        for (long long j = std::max<long long>(0, i - band); j <= j_hi; ++j) {
            acc += m(i, j) * c[j];
        }
        r[i] = acc;
    }
    return r;
}

// One banded-LU inverse-iteration pass on (A - shift B) z = B c.
// Returns false when the shifted pencil factors singularly, i.e. the
// current vector is already as good as the factorization can tell.
bool inverse_iterate(const Eigen::MatrixXd& a, const Eigen::MatrixXd& b, int band,
                     double shift, Eigen::VectorXd& c) {
    const lapack_int n = static_cast<lapack_int>(a.rows());
    const lapack_int kl = band, ku = band;
    const lapack_int ldab = 2 * kl + ku + 1;
    std::vector<double> ab(static_cast<std::size_t>(ldab) * n, 0.0);
    for (lapack_int j = 0; j < n; ++j) {
        const lapack_int i_lo = std::max<lapack_int>(0, j - ku);
        const lapack_int i_hi = std::min<lapack_int>(n - 1, j + kl);
        for (lapack_int i = i_lo; i <= i_hi; ++i) {
            ab[static_cast<std::size_t>(kl + ku + i - j) + static_cast<std::size_t>(j) * ldab] =
                a(i, j) - shift * b(i, j);
        }
    }
    std::vector<lapack_int> ipiv(n);
    lapack_int info = LAPACKE_dgbtrf(LAPACK_COL_MAJOR, n, n, kl, ku, ab.data(), ldab, ipiv.data());
    if (info > 0) return false;
    if (info < 0) throw NumericalError("inverse iteration: bad argument to dgbtrf");

    Eigen::VectorXd rhs = band_matvec(b, c, band);
    info = LAPACKE_dgbtrs(LAPACK_COL_MAJOR, 'N', n, kl, ku, 1, ab.data(), ldab, ipiv.data(),
                          rhs.data(), n);
    if (info != 0) throw NumericalError("inverse iteration: dgbtrs failed");
    const double norm = rhs.norm();
    if (!(norm > 0.0) || !std::isfinite(norm)) return false;
    c = rhs / norm;
    return true;
}

} // namespace

Spectrum solve_generalized(const SpectralProblem& problem, int n_states) {
    const long long dim = problem.a.rows();
    if (problem.a.rows() != problem.a.cols() || problem.b.rows() != problem.b.cols() ||
        problem.a.rows() != problem.b.rows()) {
        throw ValidationError("spectral problem matrices must be square and conformant");
    }
    if (n_states < 1 || n_states > dim) {
        throw ValidationError("requested " + std::to_string(n_states) + " states from a " +
                              std::to_string(dim) + "-dimensional problem");
    }
    const int band = problem.disc.order.table_band();
    const lapack_int n = static_cast<lapack_int>(dim);

    // The extended band carries the pencil beyond double rounding; callers
    // that edited the dense matrices must have refreshed it, and problems
    // built by hand may not carry one at all.
    SpectralProblem fallback;
    const SpectralProblem* pencil = &problem;
    const std::size_t band_len = static_cast<std::size_t>(dim) * (2 * band + 1);
    if (problem.a_band.size() != band_len || problem.b_band.size() != band_len) {
        fallback = problem;
        fallback.refresh_extended_band();
        pencil = &fallback;
    }
    const auto quad_a = [&](const Eigen::VectorXd& c) {
        return quad_form(pencil->a_band, dim, band, c);
    };
    const auto quad_b = [&](const Eigen::VectorXd& c) {
        return quad_form(pencil->b_band, dim, band, c);
    };

    // Cholesky reduction to a standard symmetric problem, dense solve for
    // the lowest n_states, back-transform. dsygvx performs exactly this
    // sequence (itype = 1).
    Eigen::MatrixXd a_work = problem.a;
    Eigen::MatrixXd b_work = problem.b;
    std::vector<double> w(static_cast<std::size_t>(n_states));
    Eigen::MatrixXd z(dim, n_states);
    std::vector<lapack_int> ifail(static_cast<std::size_t>(n_states));
    lapack_int found = 0;
    const double abstol = 2.0 * LAPACKE_dlamch('S');
    lapack_int info = LAPACKE_dsygvx(LAPACK_COL_MAJOR, 1, 'V', 'I', 'L', n, a_work.data(), n,
                                     b_work.data(), n, 0.0, 0.0, 1, n_states, abstol, &found,
                                     w.data(), z.data(), n, ifail.data());
    if (info > n) {
        throw NumericalError("Gram matrix is not positive definite (Cholesky pivot " +
                             std::to_string(info - n) + ")");
    }
    if (info != 0 || found != n_states) {
        throw NumericalError("generalized eigensolver failed to converge (info " +
                             std::to_string(info) + ")");
    }

    Spectrum s;
    s.eigenvalues.resize(static_cast<std::size_t>(n_states));
    s.coefficients = z;
    s.residuals.resize(static_cast<std::size_t>(n_states));
    s.norm_certificates.resize(static_cast<std::size_t>(n_states));

    // Polish each pair: banded inverse iteration re-centres the vector on
    // the pencil, the compensated Rayleigh quotient then reads the
    // eigenvalue to near machine limits.
    for (int s_i = 0; s_i < n_states; ++s_i) {
        Eigen::VectorXd c = s.coefficients.col(s_i);
        double rho;
        {
            const long double den0 = quad_b(c);
            c /= std::sqrt(static_cast<double>(den0));
            rho = static_cast<double>(quad_a(c) / quad_b(c));
        }
        for (int pass = 0; pass < 2; ++pass) {
            if (!inverse_iterate(problem.a, problem.b, band, rho, c)) break;
            const long double num = quad_a(c);
            const long double den = quad_b(c);
            const double next = static_cast<double>(num / den);
            if (std::abs(next - rho) <= 1e-15 * (1.0 + std::abs(next))) {
                rho = next;
                break;
            }
            rho = next;
        }
        s.eigenvalues[static_cast<std::size_t>(s_i)] = rho;
        s.coefficients.col(s_i) = c;
    }

    // The polish can reorder nearly equal values; restore ascending order.
    std::vector<int> order(static_cast<std::size_t>(n_states));
    for (int i = 0; i < n_states; ++i) order[static_cast<std::size_t>(i)] = i;
    std::stable_sort(order.begin(), order.end(),
                     [&](int x, int y) { return s.eigenvalues[x] < s.eigenvalues[y]; });
    {
        Spectrum sorted;
        sorted.eigenvalues.resize(s.eigenvalues.size());
        sorted.coefficients.resize(dim, n_states);
        sorted.residuals.resize(s.residuals.size());
        sorted.norm_certificates.resize(s.norm_certificates.size());
        for (int i = 0; i < n_states; ++i) {
            sorted.eigenvalues[i] = s.eigenvalues[order[i]];
            sorted.coefficients.col(i) = s.coefficients.col(order[i]);
        }
        s.eigenvalues = std::move(sorted.eigenvalues);
        s.coefficients = std::move(sorted.coefficients);
    }

    // Re-orthogonalize near-degenerate clusters in the B inner product.
    int lo = 0;
    while (lo < n_states) {
        int hi = lo;
        while (hi + 1 < n_states &&
               s.eigenvalues[hi + 1] - s.eigenvalues[hi] < 1e-9) {
            ++hi;
        }
        for (int i = lo + 1; i <= hi; ++i) {
            Eigen::VectorXd ci = s.coefficients.col(i);
            for (int k = lo; k < i; ++k) {
                const Eigen::VectorXd ck = s.coefficients.col(k);
                const double proj =
                    static_cast<double>(quad_b(ci + ck) - quad_b(ci - ck)) / 4.0;
                ci -= proj * ck;
            }
            s.coefficients.col(i) = ci;
        }
        lo = hi + 1;
    }

    const double a_max = problem.a.cwiseAbs().maxCoeff();
    for (int i = 0; i < n_states; ++i) {
        Eigen::VectorXd c = s.coefficients.col(i);
        const double bn = std::sqrt(static_cast<double>(quad_b(c)));
        if (!(bn > 0.0) || !std::isfinite(bn)) {
            throw NumericalError("eigenvector has non-positive B-norm");
        }
        c /= bn;

        // Deterministic orientation: first significant coefficient
        // scanning outward from the centre is positive.
        const double c_max = c.cwiseAbs().maxCoeff();
        const long long centre = dim / 2;
        for (long long off = 0; off <= dim; ++off) {
            bool done = false;
            for (long long idx : {centre + off, centre - off}) {
                if (idx < 0 || idx >= dim) continue;
                if (std::abs(c[idx]) > 1e-8 * c_max) {
                    if (c[idx] < 0) c = -c;
                    done = true;
                    break;
                }
            }
            if (done) break;
        }
        s.coefficients.col(i) = c;

        s.norm_certificates[i] = std::abs(static_cast<double>(quad_b(c)) - 1.0);
        const Eigen::VectorXd r =
            band_matvec(problem.a, c, band) - s.eigenvalues[i] * band_matvec(problem.b, c, band);
        s.residuals[i] = r.norm();
        if (s.residuals[i] > 1e-8 * (1.0 + std::abs(s.eigenvalues[i])) * a_max) {
            throw NumericalError("eigenpair " + std::to_string(i) + " residual " +
                                 std::to_string(s.residuals[i]) + " exceeds its certificate bound");
        }
    }
    return s;
}

} // namespace ipsf
