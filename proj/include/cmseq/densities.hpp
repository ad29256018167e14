#pragma once

#include <functional>
#include <string>
#include <utility>
#include <vector>

namespace cmseq {

/// Marchenko-Pastur density (1/2pi) sqrt((4-t)/t) on (0, 4).
double mp_density(double t);

/// w_2(t) = arccos(sqrt(t/4))/pi on [0, 4]; w2(0) = 1/2, w2(4) = 0.
double w2(double t);

/// f_p(u) = sin^p(pi u) / (sin(pi u/p) sin^{p-1}((1-1/p) pi u)) for p > 1,
/// u in [0, 1]; decreases from tau_p at 0+ to 0 at 1-. Endpoint limits are
/// supplied analytically and tiny u switches to the small-angle series.
double f_p(double p, double u);

/// w_p(t) = f_p^{-1}(t)/p by bracketed bisection refined with Newton,
/// to |f_p(p w) - t| <= tol; nonincreasing in t, range (0, 1/p).
double w_p(double p, double t, double tol);

/// Binomial coefficient C(r, k) for real r >= k >= 1 via the sine-kernel
/// integral on (0, pi) with theta = k/r; converges to the exact binomial.
double binom_integral(double r, long long k, int n_quad);

/// A density/distribution on [0, tau] with an evaluation rule and
/// endpoint-singularity metadata (integrable exponents > -1).
struct DensitySpec {
  enum class Kind {
    marchenko_pastur,   // density (1/2pi) sqrt((4-t)/t) on [0,4]
    mu_pp,              // t * (MP density): the r = p = 2 measure
    w2_closed,          // distribution function 1 - 2 w_2 on [0,4]
    wp_inverse,         // distribution function 1 - p w_p on [0,tau_p]
    arcsine_binomial,   // density 1/(pi sqrt(t(4-t))) on [0,4] (p = 2)
    custom_grid,        // piecewise-linear density from (t, w) samples
  };

  Kind kind;
  double p = 2.0;
  double tau = 4.0;
  double left_exponent = 0.0;   // density ~ t^a at 0
  double right_exponent = 0.0;  // density ~ (tau-t)^b at tau
  std::vector<std::pair<double, double>> grid;

  static DensitySpec marchenko_pastur();
  static DensitySpec mu_pp();
  static DensitySpec w2_closed();
  static DensitySpec wp_inverse(double p);
  static DensitySpec arcsine_binomial();
  static DensitySpec custom_grid_density(std::vector<std::pair<double, double>> samples);
  /// Two-column CSV (t, w(t)) with strictly increasing t.
  static DensitySpec custom_grid_from_csv(const std::string& path);
};

/// n-th power moment of the spec's measure. Densities integrate with
/// composite Gauss-Legendre after the t = tau sin^2(theta) substitution;
/// distribution-function kinds integrate by parts against the monotone
/// distribution function, so only w_p values are needed.
double density_moment(const DensitySpec& spec, int n, int n_quad = 512);

namespace quadrature {
struct Result {
  double value;
  double error_estimate;  // doubling-based
};
/// Composite 16-point Gauss-Legendre with ~n_nodes total nodes.
Result composite_gl(const std::function<double(double)>& f, double a, double b, int n_nodes);
}  // namespace quadrature

}  // namespace cmseq
