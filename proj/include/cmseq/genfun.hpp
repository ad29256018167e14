#pragma once

#include "cmseq/sequence.hpp"

#include <complex>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace cmseq {

using Complex = std::complex<double>;

/// Thrown when an evaluation cannot be completed (point on a cut,
/// continuation breakdown, series domain exceeded, divergence).
struct eval_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// psi_p(c) = (c - 1)/c^p with the principal branch of c^p; c != 0.
Complex psi(double p, Complex c);

/// The branch of psi_p(B) = z with B(0) = 1, continued from the origin by
/// predictor-corrector Newton along a segment path (detouring over i z_p
/// when the straight segment grazes the branch point). The result satisfies
/// |psi_p(B) - z| <= tol * max(1, |z|); real and in (0, p/(p-1)] for real
/// z < z_p. Throws eval_error on the cut [z_p, inf) or on breakdown.
Complex eval_Bp(double p, Complex z, double tol);

/// B_p(z)^r = exp(r Log B_p(z)), principal logarithm.
Complex eval_Bpr(double p, double r, Complex z, double tol);

/// E_{p,r}(z) = B_p(z)^r / (p - (p-1) B_p(z)); blows up only at the cut tip.
Complex eval_Epr(double p, double r, Complex z, double tol);

/// A generating function with a declared real cut [cut_start, inf).
/// Truncated series are only evaluated for |z| <= 0.9 * radius estimate.
class GenFun {
public:
  enum class Kind { fc_B, fc_Bpr, fc_Epr, truncated_series, closed_form };

  static GenFun fc_B(double p);
  static GenFun fc_Bpr(double p, double r);
  static GenFun fc_Epr(double p, double r);
  static GenFun truncated_series(Sequence coefficients);
  static GenFun truncated_series(Sequence coefficients, double radius_estimate);
  static GenFun closed_form(std::function<Complex(Complex)> f,
                            double cut_start = std::numeric_limits<double>::infinity());

  Kind kind() const { return kind_; }
  double cut_start() const { return cut_start_; }
  double radius_estimate() const { return radius_; }

  Complex eval(Complex z, double tol = 1e-12) const;

private:
  GenFun() = default;
  Kind kind_ = Kind::closed_form;
  double p_ = 0, r_ = 0;
  double cut_start_ = std::numeric_limits<double>::infinity();
  double radius_ = std::numeric_limits<double>::infinity();
  std::vector<double> coeff_;
  std::function<Complex(Complex)> fun_;
};

struct ScanRect {
  double re0, re1, im0, im1;
};

/// Default verification window for B_p-type functions:
/// Re in [-3 z_p, 0.8 z_p], Im in [0.02, 3 z_p].
ScanRect standard_rect(double p);

struct PickViolation {
  Complex z;
  Complex value;
};

/// Grid verification of (Im z)(Im f) >= 0 over a rectangle in the upper
/// half plane; violations are the samples with Im f(z) < -tol. Per-point
/// evaluation failures are counted, not fatal. Row-major aggregation.
struct PickScanReport {
  ScanRect rect{};
  int nx = 0, ny = 0;
  double min_im_value = 0;
  std::vector<PickViolation> violations;
  long samples_checked = 0;
  long eval_failures = 0;
};

PickScanReport pick_scan(const GenFun& f, const ScanRect& rect, int nx, int ny, double tol);

/// Scans z * B_p(z)^r; witnesses the Pick property for r <= p and its
/// failure for r > p.
PickScanReport pick_scan_power(double p, double r, const ScanRect& rect, int nx, int ny,
                               double tol);

/// Sweeps z = radius e^{i theta} over (0, pi) looking for Im(z B_p(z)^r) < -tol,
/// mirroring the arg-variation argument; a miss is inconclusive.
std::optional<PickViolation> arc_search_power(double p, double r, double radius, int n_theta,
                                              double tol);

struct AtomMassEstimate {
  double value = 0;
  double error_proxy = 0;
};

/// Atom mass at the right support endpoint: Richardson-style (Neville)
/// extrapolation of (1 - tau x) F(x) along xs increasing to 1/tau.
AtomMassEstimate atom_mass_right(const GenFun& f, double tau, std::span<const double> xs);

/// Atom mass at 0: extrapolated limit of F(x) along xs decreasing to -inf,
/// in the variable u = -1/x. Throws eval_error when F grows along the tail.
AtomMassEstimate atom_mass_left(const GenFun& f, std::span<const double> xs);

}  // namespace cmseq
