#include "cmseq/densities.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace cmseq {

namespace {

// sin(pi x) with the argument reduced exactly, so values stay accurate
// near integer x.
double sinpi(double x) {
  double k = std::round(x);
  double r = x - k;  // |r| <= 1/2, exact
  double s = std::sin(M_PI * r);
  return static_cast<long long>(k) % 2 == 0 ? s : -s;
}

double tau_of(double p) { return p == 1.0 ? 1.0 : std::pow(p, p) / std::pow(p - 1.0, p - 1.0); }

constexpr double kGlNodes[8] = {
    0.0950125098376374, 0.2816035507792589, 0.4580167776572274, 0.6178762444026438,
    0.7554044083550030, 0.8656312023878318, 0.9445750230732326, 0.9894009349916499,
};
constexpr double kGlWeights[8] = {
    0.1894506104550685, 0.1826034150449236, 0.1691565193950025, 0.1495959888165767,
    0.1246289712555339, 0.0951585116824928, 0.0622535239386479, 0.0271524594117541,
};

double gl_fixed(const std::function<double(double)>& f, double a, double b, int n_panels) {
  double h = (b - a) / n_panels;
  double acc = 0.0;
  for (int i = 0; i < n_panels; ++i) {
    double mid = a + (i + 0.5) * h;
    double half = 0.5 * h;
    double panel = 0.0;
    for (int q = 0; q < 8; ++q)
      panel += kGlWeights[q] * (f(mid + half * kGlNodes[q]) + f(mid - half * kGlNodes[q]));
    acc += panel * half;
  }
  return acc;
}

}  // namespace

namespace quadrature {

Result composite_gl(const std::function<double(double)>& f, double a, double b, int n_nodes) {
  int n_panels = std::max(1, n_nodes / 16);
  double coarse = gl_fixed(f, a, b, n_panels);
  double fine = gl_fixed(f, a, b, 2 * n_panels);
  return Result{fine, std::fabs(fine - coarse)};
}

}  // namespace quadrature

double mp_density(double t) {
  if (!(t > 0.0 && t < 4.0)) throw std::domain_error("mp_density: t must lie in (0, 4)");
  return std::sqrt((4.0 - t) / t) / (2.0 * M_PI);
}

double w2(double t) {
  if (!(t >= 0.0 && t <= 4.0)) throw std::domain_error("w2: t must lie in [0, 4]");
  return std::acos(std::sqrt(t / 4.0)) / M_PI;
}

double f_p(double p, double u) {
  if (!(p > 1.0)) throw std::domain_error("f_p: requires p > 1");
  if (!(u >= 0.0 && u <= 1.0)) throw std::domain_error("f_p: u must lie in [0, 1]");
  if (u == 0.0) return tau_of(p);
  if (u == 1.0) return 0.0;
  if (u < 1e-6) {
    // log f = log tau_p - (pi u)^2/6 * (p - (1 + (p-1)^3)/p^2) + O(u^4)
    double k = p - (1.0 + std::pow(p - 1.0, 3)) / (p * p);
    double x = M_PI * u;
    return tau_of(p) * std::exp(-x * x * k / 6.0);
  }
  double num = std::pow(sinpi(u), p);
  double den = sinpi(u / p) * std::pow(sinpi((1.0 - 1.0 / p) * u), p - 1.0);
  return num / den;
}

namespace {

// d/du log f_p(u), for the Newton refinement of the inverse.
double f_p_log_deriv(double p, double u) {
  double cot1 = M_PI / std::tan(M_PI * u);
  double cot2 = (M_PI / p) / std::tan(M_PI * u / p);
  double c3 = (1.0 - 1.0 / p);
  double cot3 = c3 * M_PI / std::tan(c3 * M_PI * u);
  return p * cot1 - cot2 - (p - 1.0) * cot3;
}

}  // namespace

double w_p(double p, double t, double tol) {
  if (!(p > 1.0)) throw std::domain_error("w_p: requires p > 1");
  const double tau_p = tau_of(p);
  if (!(t > 0.0 && t < tau_p)) throw std::domain_error("w_p: t must lie in (0, tau_p)");
  if (tol <= 0) throw std::domain_error("w_p: tol must be positive");

  double lo = 0.0, hi = 1.0;  // f_p decreasing: f(lo) > t > f(hi)
  for (int it = 0; it < 80; ++it) {
    double mid = 0.5 * (lo + hi);
    if (f_p(p, mid) > t)
      lo = mid;
    else
      hi = mid;
  }
  double u = 0.5 * (lo + hi);
  for (int it = 0; it < 8; ++it) {
    double fu = f_p(p, u);
    if (std::fabs(fu - t) <= tol) break;
    double step = (fu - t) / (fu * f_p_log_deriv(p, u));
    double next = u - step;
    if (next <= lo || next >= hi) break;  // keep the bisection bracket
    u = next;
  }
  if (std::fabs(f_p(p, u) - t) > tol)
    throw std::runtime_error("w_p: inversion did not reach tolerance");
  return u / p;
}

double binom_integral(double r, long long k, int n_quad) {
  if (k <= 0) throw std::domain_error("binom_integral: k must be a positive integer");
  if (r < static_cast<double>(k)) throw std::domain_error("binom_integral: requires r >= k");
  const double theta = static_cast<double>(k) / r;
  if (theta == 1.0) return 1.0;  // C(r, r); the (1-theta) factor tends to 1

  auto integrand = [r, theta](double x) {
    double s = std::sin(x);
    double d = std::pow(std::sin(theta * x), theta) *
               std::pow(std::sin((1.0 - theta) * x), 1.0 - theta);
    return std::pow(s / d, r);
  };
  return quadrature::composite_gl(integrand, 0.0, M_PI, n_quad).value / M_PI;
}

DensitySpec DensitySpec::marchenko_pastur() {
  return DensitySpec{Kind::marchenko_pastur, 2.0, 4.0, -0.5, 0.5, {}};
}
DensitySpec DensitySpec::mu_pp() { return DensitySpec{Kind::mu_pp, 2.0, 4.0, 0.5, 0.5, {}}; }
DensitySpec DensitySpec::w2_closed() { return DensitySpec{Kind::w2_closed, 2.0, 4.0, -0.5, 0.5, {}}; }
DensitySpec DensitySpec::wp_inverse(double p) {
  if (!(p > 1.0)) throw std::domain_error("DensitySpec: wp_inverse requires p > 1");
  return DensitySpec{Kind::wp_inverse, p, tau_of(p), -0.5, 0.5, {}};
}
DensitySpec DensitySpec::arcsine_binomial() {
  return DensitySpec{Kind::arcsine_binomial, 2.0, 4.0, -0.5, -0.5, {}};
}

DensitySpec DensitySpec::custom_grid_density(std::vector<std::pair<double, double>> samples) {
  if (samples.size() < 2) throw std::invalid_argument("DensitySpec: grid needs >= 2 samples");
  for (size_t i = 0; i + 1 < samples.size(); ++i)
    if (!(samples[i].first < samples[i + 1].first))
      throw std::invalid_argument("DensitySpec: grid abscissae must strictly increase");
  DensitySpec spec{Kind::custom_grid, 0.0, samples.back().first, 0.0, 0.0, std::move(samples)};
  return spec;
}

DensitySpec DensitySpec::custom_grid_from_csv(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("DensitySpec: cannot open '" + path + "'");
  std::vector<std::pair<double, double>> samples;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#') continue;
    std::replace(line.begin(), line.end(), ',', ' ');
    std::istringstream ls(line);
    double t, w;
    if (!(ls >> t >> w)) throw std::runtime_error("DensitySpec: bad CSV line '" + line + "'");
    samples.emplace_back(t, w);
  }
  return custom_grid_density(std::move(samples));
}

namespace {

// integral of t^n * density over [0, tau] with the t = tau sin^2(theta)
// substitution absorbing inverse-square-root endpoint behavior.
double density_integral(const std::function<double(double)>& density, double tau, int n,
                        int n_quad) {
  auto g = [&](double theta) {
    double s = std::sin(theta), c = std::cos(theta);
    double t = tau * s * s;
    if (t <= 0.0 || t >= tau) return 0.0;
    return std::pow(t, n) * density(t) * tau * 2.0 * s * c;
  };
  return quadrature::composite_gl(g, 0.0, M_PI / 2.0, n_quad).value;
}

// Stieltjes moment against a distribution function G with G(0)=0, G(tau)=1:
// integral t^n dG = tau^n - n * integral t^{n-1} G(t) dt, written with
// G = 1 - p w so only w values are needed.
double stieltjes_moment(const std::function<double(double)>& pw, double tau, int n, int n_quad) {
  if (n == 0) return 1.0;
  auto g = [&](double theta) {
    double s = std::sin(theta), c = std::cos(theta);
    double t = tau * s * s;
    if (t <= 0.0 || t >= tau) return 0.0;
    return std::pow(t, n - 1) * pw(t) * tau * 2.0 * s * c;
  };
  return static_cast<double>(n) * quadrature::composite_gl(g, 0.0, M_PI / 2.0, n_quad).value;
}

}  // namespace

double density_moment(const DensitySpec& spec, int n, int n_quad) {
  if (n < 0) throw std::domain_error("density_moment: n must be nonnegative");
  if (spec.left_exponent <= -1.0 || spec.right_exponent <= -1.0)
    throw std::domain_error("density_moment: unintegrable endpoint singularity");
  switch (spec.kind) {
    case DensitySpec::Kind::marchenko_pastur:
      return density_integral([](double t) { return mp_density(t); }, 4.0, n, n_quad);
    case DensitySpec::Kind::mu_pp:
      return density_integral([](double t) { return t * mp_density(t); }, 4.0, n, n_quad);
    case DensitySpec::Kind::arcsine_binomial:
      return density_integral([](double t) { return 1.0 / (M_PI * std::sqrt(t * (4.0 - t))); },
                              4.0, n, n_quad);
    case DensitySpec::Kind::w2_closed:
      return stieltjes_moment([](double t) { return 2.0 * w2(t); }, 4.0, n, n_quad);
    case DensitySpec::Kind::wp_inverse: {
      double p = spec.p;
      return stieltjes_moment([p](double t) { return p * w_p(p, t, 1e-13); }, spec.tau, n,
                              n_quad);
    }
    case DensitySpec::Kind::custom_grid: {
      // Piecewise-linear density integrated exactly against t^n per segment.
      double acc = 0.0;
      for (size_t i = 0; i + 1 < spec.grid.size(); ++i) {
        auto [t0, w0] = spec.grid[i];
        auto [t1, w1] = spec.grid[i + 1];
        double slope = (w1 - w0) / (t1 - t0);
        double icept = w0 - slope * t0;
        // integral t^n (icept + slope t) dt
        acc += icept * (std::pow(t1, n + 1) - std::pow(t0, n + 1)) / (n + 1) +
               slope * (std::pow(t1, n + 2) - std::pow(t0, n + 2)) / (n + 2);
      }
      return acc;
    }
  }
  throw std::logic_error("density_moment: unknown kind");
}

}  // namespace cmseq
