#pragma once

#include "cmseq/sequence.hpp"

#include <optional>

namespace cmseq {

struct Witness {
  int j = 0;
  int k = 0;
  Scalar value;
};

/// Result of a truncated complete-monotonicity / complete-alternation test.
/// verdict "verified-to-order max_order" when no cell with j+k <= N fails;
/// otherwise the first failing cell in lexicographic (k, j) order.
struct MonotonicityReport {
  bool verified = false;
  int max_order = -1;
  std::optional<Witness> witness;
};

/// Backward difference (I-S)^k c_j = sum_{n<=k} (-1)^n C(k,n) c_{n+j}.
/// Exact for exact sequences. Throws std::out_of_range when j + k > N.
Scalar finite_difference(const Sequence& c, int k, int j);

/// Checks (I-S)^k c_j >= 0 for all j+k <= N. Exact comparison for exact
/// sequences; floating ones fail a cell below -tol, with the default
/// tol = 1e-12 * max(1, max|c_j|).
MonotonicityReport check_completely_monotone(const Sequence& c,
                                             std::optional<double> tol = std::nullopt);

/// Tests the increment sequence (a_{n+1} - a_n) for complete monotonicity.
/// Witness coordinates refer to the increment sequence.
MonotonicityReport check_completely_alternating(const Sequence& a,
                                                std::optional<double> tol = std::nullopt);

/// Tests (c_j tau^{-j}) for complete monotonicity; tau must be positive.
MonotonicityReport check_dilated_hausdorff(const Sequence& c, const Scalar& tau,
                                           std::optional<double> tol = std::nullopt);

/// Builds a_0 = 0, a_n = n c_{n-1} and tests complete alternation.
/// `warned_c0` (optional) is set when c_0 != 1; the test still runs.
MonotonicityReport check_convex_moments(const Sequence& c,
                                        std::optional<double> tol = std::nullopt,
                                        bool* warned_c0 = nullptr);

/// Tests ((n+1) c_n) for complete monotonicity.
MonotonicityReport check_concave_moments(const Sequence& c,
                                         std::optional<double> tol = std::nullopt);

/// Bernoulli-thinning transform b_k = sum_{j>=k} c_j C(j,k) (1-p)^{j-k} p^k,
/// truncated at the input length with a certified geometric tail bound:
/// the output stops at the largest M whose tail bound stays below tail_tol,
/// and the call fails if even k = 0 cannot meet it. Requires 0 < p < 2.
Sequence dilate_compound(const Sequence& c, const Scalar& p, double tail_tol);

/// Mixture of dilate_compound over a discrete measure on [0, 2). Atoms at
/// t = 0 and t = 1 contribute exactly (0^0 = 1 convention); the t = 0 atom
/// additionally needs the sequence tail to be declared summable, via >= 5
/// trailing zero terms or a fitted geometric envelope of the last terms.
Sequence exchangeable_compound(const Sequence& c, const DiscreteMeasure& nu, double tail_tol);

/// (b*c)_k = sum_{i<=k} b_i c_{k-i}, truncated to the shorter input.
Sequence convolve(const Sequence& b, const Sequence& c);

/// Compound composition a_k = sum_j b_j c^{*j}_k over the supplied prefix of
/// b. Exact when c_0 = 0 (only j <= k contribute); otherwise truncated at
/// len(b) terms, with error at most 1 - sum_j b_j for probability inputs.
Sequence compound_compose(const Sequence& b, const Sequence& c);

/// Leading differences c^_k = (I-S)^k c_0; an involution on prefixes.
Sequence leading_differences(const Sequence& c);

/// Row n of the triangular array c_{n,m} = C(n,m) (I-S)^{n-m} c_m,
/// m = 0..n. Requires n <= N.
std::vector<Scalar> diaconis_freedman_array(const Sequence& c, int n);

namespace detail {
/// Default floating comparison tolerance: 1e-12 * max(1, max|c_j|).
double default_tol(const Sequence& c);
/// Full backward-difference table; row k holds (I-S)^k c_j for j <= N-k.
std::vector<std::vector<Scalar>> difference_table(const Sequence& c);
}  // namespace detail

}  // namespace cmseq
