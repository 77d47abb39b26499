#pragma once

#include <map>
#include <vector>

#include "ipsf/rational.hpp"

namespace ipsf {

// Order of a Deslauriers-Dubuc interpolating scaling function. Must be a
// positive even integer; the function is then supported on [-N+1, N-1].
class ScaleOrder {
public:
    explicit ScaleOrder(int n);
    int value() const { return n_; }
    int support_radius() const { return n_ - 1; }
    // All pairwise-overlap tables vanish at offsets |k| >= 2N-2.
    int table_band() const { return 2 * n_ - 3; }

    friend bool operator==(ScaleOrder a, ScaleOrder b) { return a.n_ == b.n_; }
    friend bool operator!=(ScaleOrder a, ScaleOrder b) { return a.n_ != b.n_; }

private:
    int n_;
};

// Coefficients a_k of the two-scale relation Phi(x) = sum_k a_k Phi(2x - k),
// k in [-N+1, N-1], held as exact rationals. For the Deslauriers-Dubuc
// family the odd entries are Lagrange basis polynomials evaluated at 1/2,
// a_0 = 1 and the remaining even entries vanish.
class RefinementMask {
public:
    // Construct the order-N mask from the Lagrange node set {-N/2+1,...,N/2}.
    static RefinementMask build(ScaleOrder order);

    // Wrap externally supplied coefficients (deserialized tables). Verifies
    // the structural invariants: a_0 = 1, even entries zero, symmetry, and
    // sum 2.
    static RefinementMask from_coefficients(ScaleOrder order, std::vector<Rational> a);

    ScaleOrder order() const { return order_; }

    // a_k; exact zero outside [-N+1, N-1].
    const Rational& at(int k) const;
    double at_d(int k) const;

private:
    RefinementMask(ScaleOrder order, std::vector<Rational> a);

    ScaleOrder order_;
    std::vector<Rational> a_; // index k + N - 1
    static const Rational zero_;
};

// Values of Phi on the dyadic grid {i / 2^depth} over the support, exact.
// Integer points carry the Kronecker seed; finer levels follow from the
// refinement equation.
class DyadicSamples {
public:
    DyadicSamples(ScaleOrder order, int depth, std::vector<Rational> values);

    ScaleOrder order() const { return order_; }
    int depth() const { return depth_; }

    // Phi(i / 2^depth); exact zero outside the support.
    const Rational& at_index(long long i) const;
    double value(long long i) const;

    // Largest i with a stored sample: (N-1) * 2^depth.
    long long max_index() const { return max_index_; }

private:
    ScaleOrder order_;
    int depth_;
    long long max_index_;
    std::vector<Rational> values_; // index i + max_index_
    std::vector<double> values_d_;
    static const Rational zero_;
};

// Build the order-N refinement mask.
RefinementMask build_mask(ScaleOrder order);

// Evaluate Phi at every dyadic point k / 2^depth of the support by cascading
// the refinement equation from the integer Kronecker seeds. Exact.
DyadicSamples eval_phi_dyadic(const RefinementMask& mask, int depth);

} // namespace ipsf
