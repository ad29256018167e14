#pragma once

#include "cmseq/sequence.hpp"

#include <optional>
#include <utility>

namespace cmseq {

/// Element a^{(r)} of the convolution group generated by a normalized
/// sequence c (c_0 = 1); generating function F(z)^r.
struct ConvGroupElement {
  Scalar r;
  Sequence terms;
};

/// Canonical sequence (b_k) of a normalized sequence: solves
/// (n+1) c_{n+1} = sum_{k<=n} c_{n-k} b_k forward; exact for exact input.
/// Throws unless c_0 = 1.
Sequence canonical_from_moments(const Sequence& c);

/// a^{(r)} via the r-scaled canonical recursion, a^{(r)}_0 = 1.
ConvGroupElement conv_group_power(const Sequence& c, const Scalar& r);

/// Verifies a^{(r+s)} = a^{(r)} * a^{(s)} termwise to order N
/// (exact inputs compare exactly; floating ones within tol).
bool group_law_check(const Sequence& c, const Scalar& r, const Scalar& s,
                     std::optional<double> tol = std::nullopt);

/// lhs = b_{n-1}/n; rhs = sum_{k=1}^{n} ((-1)^{k-1}/k) C(n,k) a^{(k)}_n.
/// Exact equality expected for exact inputs.
std::pair<Scalar, Scalar> bn_alternating_crosscheck(const Sequence& c, int n);

/// Rebuilds c as the truncated power-series exponential
/// exp(sum b_n z^{n+1}/(n+1)) = sum_m T^m/m! and returns the maximum
/// absolute coefficient defect; exactly zero for exact inputs.
Scalar series_exp_identity(const Sequence& c);

/// Estimates rho* = ess sup of the canonical density of the dilated
/// sequence (c_j tau^{-j}) as a sup of arg A_1(z)/pi over upper-half-plane
/// samples. Combines the truncated exp-series grid with a moment-quadrature
/// discretization (exact Jacobi recurrence, Golub-Welsch nodes) whose arg is
/// Richardson-extrapolated at heights tied to the local pole spacing.
double canonical_density_bound(const Sequence& c, const Scalar& tau);

namespace detail {
/// Gauss nodes/weights of the measure behind an exact moment prefix
/// (Chebyshev algorithm in rational arithmetic, then Golub-Welsch).
/// Stops early if the moment matrix degenerates; may return fewer nodes.
struct GaussRule {
  std::vector<double> nodes;
  std::vector<double> weights;
};
GaussRule gauss_from_moments(const Sequence& moments, int max_nodes);
}  // namespace detail

}  // namespace cmseq
