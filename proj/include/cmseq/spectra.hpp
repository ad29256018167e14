#pragma once

#include <cstdint>
#include <vector>

namespace cmseq {

/// Monte Carlo setup for products of independent complex Ginibre matrices.
struct SpectraConfig {
  int m = 1;            // number of factor matrices
  int size = 200;       // matrix dimension N
  int n_max = 5;        // highest trace moment
  int trials = 20;
  uint64_t seed = 1;
};

struct MomentEstimate {
  int n = 0;
  double mean = 0;
  double stderr_ = 0;
  double target = 0;  // Fuss-Catalan reference A_n(m+1, 1)
};

/// Per trial draws m iid N x N standard complex Gaussian matrices, forms
/// W = P P* / N^m with P = X_1 ... X_m, and averages (1/N) tr(W^n) across
/// trials for n = 1..n_max. Trial i uses the Philox stream (seed; i, matrix),
/// so results are bit-identical for a fixed seed regardless of scheduling.
std::vector<MomentEstimate> sample_product_moments(const SpectraConfig& cfg);

struct SpectraFlag {
  int n;
  double mean, stderr_, target;
};

struct CompareReport {
  std::vector<SpectraFlag> flags;
  int checked = 0;
};

/// Flags estimates with |mean - target| > max(rel_tol * target, 3 * stderr).
CompareReport compare_to_fc(const std::vector<MomentEstimate>& estimates, double rel_tol);

}  // namespace cmseq
