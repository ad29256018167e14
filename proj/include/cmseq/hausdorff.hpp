#pragma once

#include "cmseq/seqcore.hpp"

#include <optional>

namespace cmseq {

/// Staircase estimate of the distribution function behind a moment prefix:
/// partial sums of row n of the triangular array on the grid x_m = tau m/n,
/// right-continuous at jumps. `dilated_check` reports whether the input
/// passed the truncated dilated-Hausdorff test over all orders up to n.
struct DistributionEstimate {
  std::vector<double> grid;
  std::vector<double> cdf;
  int order = 0;
  bool dilated_check_passed = true;
  std::optional<Witness> dilated_witness;
};

/// Thrown when row n itself contains a negative entry (the input is not a
/// moment sequence to order n); carries the offending cell.
struct negative_entry_error : std::runtime_error {
  int m;
  double value;
  negative_entry_error(int m_, double value_)
      : std::runtime_error("reconstruct_cdf: negative array entry at m = " + std::to_string(m_)),
        m(m_),
        value(value_) {}
};

/// Rescales to [0,1] via c_j tau^{-j}, computes row n of the triangular
/// array once (exact for exact input), and returns the normalized partial
/// sums. Requires n <= N and tau > 0.
DistributionEstimate reconstruct_cdf(const Sequence& c, int n, const Scalar& tau,
                                     std::optional<double> tol = std::nullopt);

}  // namespace cmseq
