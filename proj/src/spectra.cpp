#include "cmseq/spectra.hpp"

#include "cmseq/fusscatalan.hpp"
#include "cmseq/philox.hpp"

#include <Eigen/Dense>

#include <cmath>
#include <stdexcept>

namespace cmseq {

namespace {

Eigen::MatrixXcd draw_matrix(uint64_t seed, uint32_t trial, uint32_t matrix_index, int n) {
  ComplexGaussianStream stream(seed, trial, matrix_index);
  Eigen::MatrixXcd x(n, n);
  uint64_t e = 0;
  for (int row = 0; row < n; ++row)
    for (int col = 0; col < n; ++col) x(row, col) = stream.entry(e++);
  return x;
}

}  // namespace

std::vector<MomentEstimate> sample_product_moments(const SpectraConfig& cfg) {
  if (cfg.m < 1 || cfg.size < 1 || cfg.n_max < 1 || cfg.trials < 0)
    throw std::invalid_argument("sample_product_moments: invalid configuration");
  if (cfg.n_max > 12)
    throw std::invalid_argument("sample_product_moments: n_max capped at 12 (variance blow-up)");

  const int n = cfg.size;
  std::vector<std::vector<double>> samples(static_cast<size_t>(cfg.n_max));

  for (int trial = 0; trial < cfg.trials; ++trial) {
    Eigen::MatrixXcd p = draw_matrix(cfg.seed, static_cast<uint32_t>(trial), 0, n);
    for (int f = 1; f < cfg.m; ++f)
      p = (p * draw_matrix(cfg.seed, static_cast<uint32_t>(trial), static_cast<uint32_t>(f), n))
              .eval();
    Eigen::MatrixXcd w = p * p.adjoint() / std::pow(static_cast<double>(n), cfg.m);
    Eigen::MatrixXcd wk = w;
    for (int mom = 1; mom <= cfg.n_max; ++mom) {
      std::complex<double> tr = wk.trace();
      if (std::fabs(tr.imag()) > 1e-10 * std::max(1.0, std::fabs(tr.real())))
        throw std::runtime_error("sample_product_moments: non-real trace moment");
      samples[static_cast<size_t>(mom) - 1].push_back(tr.real() / n);
      if (mom < cfg.n_max) wk = (wk * w).eval();
    }
  }

  std::vector<MomentEstimate> out;
  FcParams params = FcParams::make(Scalar(cfg.m + 1), Scalar(1));
  for (int mom = 1; mom <= cfg.n_max; ++mom) {
    const auto& xs = samples[static_cast<size_t>(mom) - 1];
    if (xs.empty()) continue;  // trials == 0 -> empty estimates
    double mean = 0;
    for (double v : xs) mean += v;
    mean /= static_cast<double>(xs.size());
    double var = 0;
    for (double v : xs) var += (v - mean) * (v - mean);
    double se = xs.size() > 1 ? std::sqrt(var / (static_cast<double>(xs.size()) - 1.0) /
                                          static_cast<double>(xs.size()))
                              : 0.0;
    out.push_back({mom, mean, se, fc_number(params, mom).to_double()});
  }
  return out;
}

CompareReport compare_to_fc(const std::vector<MomentEstimate>& estimates, double rel_tol) {
  CompareReport rep;
  for (const auto& est : estimates) {
    ++rep.checked;
    double allowed = std::max(rel_tol * est.target, 3.0 * est.stderr_);
    if (std::fabs(est.mean - est.target) > allowed)
      rep.flags.push_back({est.n, est.mean, est.stderr_, est.target});
  }
  return rep;
}

}  // namespace cmseq
