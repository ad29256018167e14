#include "cmseq/hausdorff.hpp"

#include <algorithm>
#include <cmath>

namespace cmseq {

DistributionEstimate reconstruct_cdf(const Sequence& c, int n, const Scalar& tau,
                                     std::optional<double> tol) {
  if (tau.sign() <= 0) throw std::domain_error("reconstruct_cdf: tau must be positive");
  if (n < 1 || n > c.max_index()) throw std::out_of_range("reconstruct_cdf: n out of range");
  if (c[0].sign() <= 0) throw std::domain_error("reconstruct_cdf: c_0 must be positive");

  std::vector<Scalar> scaled;
  scaled.reserve(static_cast<size_t>(n) + 1);
  for (int j = 0; j <= n; ++j)
    scaled.push_back(c[static_cast<size_t>(j)] * tau.pow_int(-j));
  Sequence cs(std::move(scaled));
  const double t = tol.value_or(detail::default_tol(cs));
  const bool exact = cs.is_exact();
  auto fails = [&](const Scalar& v) { return exact ? v.sign() < 0 : v.to_double() < -t; };

  // One pass over the difference table: collect the anti-diagonal j + k = n
  // (the row) and scan every cell for the dilated-Hausdorff warning.
  DistributionEstimate est;
  est.order = n;
  std::vector<Scalar> level = cs.terms();
  std::vector<Scalar> row(static_cast<size_t>(n) + 1, Scalar(0));
  row[static_cast<size_t>(n)] = level[static_cast<size_t>(n)];
  auto scan_level = [&](int k) {
    if (!est.dilated_check_passed) return;
    for (size_t j = 0; j + static_cast<size_t>(k) < cs.size(); ++j) {
      if (fails(level[j])) {
        est.dilated_check_passed = false;
        est.dilated_witness = Witness{static_cast<int>(j), k, level[j]};
        return;
      }
    }
  };
  scan_level(0);
  for (int k = 1; k <= n; ++k) {
    for (size_t j = 0; j + static_cast<size_t>(k) < cs.size(); ++j)
      level[j] = level[j] - level[j + 1];
    scan_level(k);
    row[static_cast<size_t>(n - k)] = level[static_cast<size_t>(n - k)];
  }

  const Scalar& c0 = cs[0];
  for (int m = 0; m <= n; ++m) {
    Scalar entry = Scalar(binomial(n, m)) * row[static_cast<size_t>(m)];
    if (fails(entry)) throw negative_entry_error(m, entry.to_double());
    row[static_cast<size_t>(m)] = entry / c0;
  }

  const double tau_d = tau.to_double();
  est.grid.reserve(static_cast<size_t>(n) + 1);
  est.cdf.reserve(static_cast<size_t>(n) + 1);
  Scalar acc(0);
  for (int m = 0; m <= n; ++m) {
    acc += row[static_cast<size_t>(m)];
    est.grid.push_back(tau_d * m / n);
    // Floating noise in [-tol, 0) was accepted above; clamp so the cdf
    // stays monotone in [0, 1].
    est.cdf.push_back(std::clamp(acc.to_double(), 0.0, 1.0));
  }
  if (exact) est.cdf.back() = acc.to_double();  // exactly 1 by construction
  return est;
}

}  // namespace cmseq
