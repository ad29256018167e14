#include "cmseq/genfun.hpp"

#include <algorithm>
#include <cmath>

namespace cmseq {

namespace {

double branch_point(double p) {
  if (p == 1.0) return 1.0;
  return std::pow(p - 1.0, p - 1.0) / std::pow(p, p);  // z_p = 1/tau_p
}

bool on_cut(Complex z, double zp) { return z.imag() == 0.0 && z.real() >= zp - 1e-15; }

// Distance from the segment [a, b] to a point w.
double segment_distance(Complex a, Complex b, Complex w) {
  Complex d = b - a;
  double len2 = std::norm(d);
  if (len2 == 0.0) return std::abs(w - a);
  double t = std::clamp(((w - a) * std::conj(d)).real() / len2, 0.0, 1.0);
  return std::abs(w - (a + t * d));
}

// Distance from w to the cut [zp, inf) on the real axis.
double cut_distance(Complex w, double zp) {
  if (w.real() >= zp) return std::fabs(w.imag());
  return std::abs(w - Complex(zp, 0.0));
}

Complex psi_prime(double p, Complex c) {
  // psi_p'(c) = c^{-p} ((1-p) + p/c)
  return std::pow(c, -p) * ((1.0 - p) + p / c);
}

// Newton solve of psi_p(B) = w from a seed; returns nullopt when it fails
// to reach |psi_p(B) - w| <= tol within max_iter or wanders off.
std::optional<Complex> newton_psi(double p, Complex w, Complex seed, double tol, int max_iter) {
  Complex b = seed;
  for (int it = 0; it < max_iter; ++it) {
    if (b == Complex(0.0, 0.0) || !std::isfinite(b.real()) || !std::isfinite(b.imag()))
      return std::nullopt;
    Complex g = psi(p, b) - w;
    if (std::abs(g) <= tol) return b;
    Complex dg = psi_prime(p, b);
    if (std::abs(dg) < 1e-300) return std::nullopt;
    Complex step = g / dg;
    if (!std::isfinite(step.real()) || !std::isfinite(step.imag())) return std::nullopt;
    b -= step;
  }
  Complex g = psi(p, b) - w;
  if (std::abs(g) <= tol) return b;
  return std::nullopt;
}

// Continuation of B_p along the segment from `from` (value b) to `to`.
// Newton is the corrector; the predictor is one explicit step of
// dB/dz = 1/psi_p'(B). Steps halve when Newton needs more than 8 iterations
// and fail below 1e-12 of the leg length.
Complex continue_leg(double p, Complex from, Complex b, Complex to, double tol) {
  const double leg_len = std::abs(to - from);
  if (leg_len == 0.0) return b;
  const double zp = branch_point(p);
  double t = 0.0;
  double h = 0.25;
  while (t < 1.0) {
    double step = std::min(h, 1.0 - t);
    // Keep well clear of the cut while traveling.
    Complex here = from + t * (to - from);
    double d_cut = cut_distance(here, zp);
    double target_abs = std::max(d_cut * 0.5, 1e-13);
    step = std::min(step, target_abs / leg_len);
    if (step < 1e-12)
      throw eval_error("eval_Bp: continuation step underflow near the cut");

    Complex w_next = from + (t + step) * (to - from);
    Complex dz = w_next - here;
    Complex predictor = b + dz / psi_prime(p, b);
    auto corrected = newton_psi(p, w_next, predictor, 0.1 * tol * std::max(1.0, std::abs(w_next)), 8);
    if (!corrected) corrected = newton_psi(p, w_next, b, 0.1 * tol * std::max(1.0, std::abs(w_next)), 8);
    if (!corrected) {
      h = step * 0.5;
      if (h < 1e-12) throw eval_error("eval_Bp: continuation step underflow");
      continue;
    }
    b = *corrected;
    t += step;
    h = std::min(0.5, step * 1.4);
  }
  return b;
}

}  // namespace

Complex psi(double p, Complex c) {
  if (c == Complex(0.0, 0.0)) throw std::domain_error("psi: c must be nonzero");
  return (c - 1.0) * std::pow(c, -p);
}

Complex eval_Bp(double p, Complex z, double tol) {
  if (p < 1.0) throw std::domain_error("eval_Bp: requires p >= 1");
  if (tol <= 0) throw std::domain_error("eval_Bp: tol must be positive");
  const double zp = branch_point(p);
  if (on_cut(z, zp)) throw eval_error("eval_Bp: z on the cut [z_p, inf)");
  if (p == 1.0) return 1.0 / (1.0 - z);  // psi_1(B) = z solves exactly
  if (std::abs(z) < 1e-300) return Complex(1.0, 0.0);

  Complex b(1.0, 0.0);
  Complex start(0.0, 0.0);
  if (segment_distance(start, z, Complex(zp, 0.0)) < 0.05 * zp && std::abs(z) > 0.5 * zp) {
    Complex waypoint(0.0, std::abs(z.imag()) > 0 && z.imag() < 0 ? -zp : zp);
    b = continue_leg(p, start, b, waypoint, tol);
    b = continue_leg(p, waypoint, b, z, tol);
  } else {
    b = continue_leg(p, start, b, z, tol);
  }
  auto polished = newton_psi(p, z, b, tol * std::max(1.0, std::abs(z)), 16);
  if (!polished) throw eval_error("eval_Bp: residual tolerance not reached");
  return *polished;
}

Complex eval_Bpr(double p, double r, Complex z, double tol) {
  if (r == 0.0) {
    // Still validates the domain.
    (void)eval_Bp(p, z, tol);
    return Complex(1.0, 0.0);
  }
  Complex b = eval_Bp(p, z, tol);
  return std::exp(r * std::log(b));
}

Complex eval_Epr(double p, double r, Complex z, double tol) {
  Complex b = eval_Bp(p, z, tol);
  Complex denom = p - (p - 1.0) * b;
  if (std::abs(denom) < 1e-14)
    throw eval_error("eval_Epr: denominator blow-up near the cut tip");
  return std::exp(r * std::log(b)) / denom;
}

GenFun GenFun::fc_B(double p) {
  GenFun g;
  g.kind_ = Kind::fc_B;
  g.p_ = p;
  g.cut_start_ = branch_point(p);
  return g;
}

GenFun GenFun::fc_Bpr(double p, double r) {
  GenFun g;
  g.kind_ = Kind::fc_Bpr;
  g.p_ = p;
  g.r_ = r;
  g.cut_start_ = branch_point(p);
  return g;
}

GenFun GenFun::fc_Epr(double p, double r) {
  GenFun g;
  g.kind_ = Kind::fc_Epr;
  g.p_ = p;
  g.r_ = r;
  g.cut_start_ = branch_point(p);
  return g;
}

GenFun GenFun::truncated_series(Sequence coefficients) {
  // Radius from the median of trailing coefficient ratios.
  std::vector<double> ratios;
  const auto xs = coefficients.to_doubles();
  for (size_t i = xs.size() >= 11 ? xs.size() - 11 : 0; i + 1 < xs.size(); ++i) {
    if (xs[i + 1] != 0.0 && xs[i] != 0.0) ratios.push_back(std::fabs(xs[i] / xs[i + 1]));
  }
  double radius = std::numeric_limits<double>::infinity();
  if (!ratios.empty()) {
    std::nth_element(ratios.begin(), ratios.begin() + ratios.size() / 2, ratios.end());
    radius = ratios[ratios.size() / 2];
  }
  return truncated_series(std::move(coefficients), radius);
}

GenFun GenFun::truncated_series(Sequence coefficients, double radius_estimate) {
  GenFun g;
  g.kind_ = Kind::truncated_series;
  g.coeff_ = coefficients.to_doubles();
  g.radius_ = radius_estimate;
  g.cut_start_ = radius_estimate;
  return g;
}

GenFun GenFun::closed_form(std::function<Complex(Complex)> f, double cut_start) {
  GenFun g;
  g.kind_ = Kind::closed_form;
  g.fun_ = std::move(f);
  g.cut_start_ = cut_start;
  return g;
}

Complex GenFun::eval(Complex z, double tol) const {
  switch (kind_) {
    case Kind::fc_B:
      return eval_Bp(p_, z, tol);
    case Kind::fc_Bpr:
      return eval_Bpr(p_, r_, z, tol);
    case Kind::fc_Epr:
      return eval_Epr(p_, r_, z, tol);
    case Kind::truncated_series: {
      if (std::abs(z) > 0.9 * radius_)
        throw eval_error("GenFun: |z| outside 0.9 * series radius estimate");
      Complex acc(0.0, 0.0);
      for (size_t m = coeff_.size(); m-- > 0;) acc = acc * z + coeff_[m];
      return acc;
    }
    case Kind::closed_form:
      return fun_(z);
  }
  throw std::logic_error("GenFun: unknown kind");
}

ScanRect standard_rect(double p) {
  double zp = branch_point(p);
  return ScanRect{-3.0 * zp, 0.8 * zp, 0.02, 3.0 * zp};
}

PickScanReport pick_scan(const GenFun& f, const ScanRect& rect, int nx, int ny, double tol) {
  if (rect.im0 <= 0.0)
    throw std::invalid_argument("pick_scan: rectangle must lie in the open upper half plane");
  if (nx < 1 || ny < 1) throw std::invalid_argument("pick_scan: grid must be at least 1x1");
  PickScanReport rep;
  rep.rect = rect;
  rep.nx = nx;
  rep.ny = ny;
  rep.min_im_value = std::numeric_limits<double>::infinity();
  for (int iy = 0; iy < ny; ++iy) {
    double im = ny == 1 ? rect.im0 : rect.im0 + (rect.im1 - rect.im0) * iy / (ny - 1);
    for (int ix = 0; ix < nx; ++ix) {
      double re = nx == 1 ? rect.re0 : rect.re0 + (rect.re1 - rect.re0) * ix / (nx - 1);
      Complex z(re, im);
      Complex v;
      try {
        v = f.eval(z);
      } catch (const eval_error&) {
        ++rep.eval_failures;
        continue;
      }
      ++rep.samples_checked;
      rep.min_im_value = std::min(rep.min_im_value, v.imag());
      if (v.imag() < -tol) rep.violations.push_back({z, v});
    }
  }
  if (rep.samples_checked == 0) rep.min_im_value = 0.0;
  return rep;
}

PickScanReport pick_scan_power(double p, double r, const ScanRect& rect, int nx, int ny,
                               double tol) {
  GenFun f = GenFun::closed_form(
      [p, r](Complex z) { return z * eval_Bpr(p, r, z, 1e-13); },
      branch_point(p));
  return pick_scan(f, rect, nx, ny, tol);
}

std::optional<PickViolation> arc_search_power(double p, double r, double radius, int n_theta,
                                              double tol) {
  for (int i = 1; i < n_theta; ++i) {
    double theta = M_PI * i / n_theta;
    Complex z = std::polar(radius, theta);
    Complex v;
    try {
      v = z * eval_Bpr(p, r, z, 1e-13);
    } catch (const eval_error&) {
      continue;
    }
    if (v.imag() < -tol) return PickViolation{z, v};
  }
  return std::nullopt;
}

namespace {

// Neville polynomial extrapolation to x = 0 of points (xs, ys);
// error proxy is the last diagonal increment.
AtomMassEstimate neville_to_zero(const std::vector<double>& xs, const std::vector<double>& ys) {
  const size_t n = xs.size();
  std::vector<double> tab = ys;
  double prev_diag = tab.back();
  for (size_t m = 1; m < n; ++m) {
    for (size_t i = n - 1; i >= m; --i) {
      tab[i] = tab[i] + (tab[i] - tab[i - 1]) * (0.0 - xs[i]) / (xs[i] - xs[i - m]);
      if (i == m) break;
    }
    prev_diag = m + 1 < n ? tab.back() : prev_diag;
  }
  AtomMassEstimate est;
  est.value = tab.back();
  est.error_proxy = std::fabs(tab.back() - prev_diag);
  return est;
}

}  // namespace

AtomMassEstimate atom_mass_right(const GenFun& f, double tau, std::span<const double> xs) {
  if (tau <= 0) throw std::domain_error("atom_mass_right: tau must be positive");
  if (xs.size() < 2) throw std::invalid_argument("atom_mass_right: needs at least two samples");
  for (size_t i = 0; i + 1 < xs.size(); ++i)
    if (!(xs[i] < xs[i + 1]))
      throw std::invalid_argument("atom_mass_right: x sequence must increase");
  if (!(xs.back() < 1.0 / tau))
    throw std::invalid_argument("atom_mass_right: x sequence must stay below 1/tau");

  std::vector<double> deltas, values;
  for (double x : xs) {
    deltas.push_back(1.0 / tau - x);
    values.push_back((1.0 - tau * x) * f.eval(Complex(x, 0.0)).real());
  }
  return neville_to_zero(deltas, values);
}

AtomMassEstimate atom_mass_left(const GenFun& f, std::span<const double> xs) {
  if (xs.size() < 2) throw std::invalid_argument("atom_mass_left: needs at least two samples");
  for (size_t i = 0; i + 1 < xs.size(); ++i)
    if (!(xs[i] > xs[i + 1]))
      throw std::invalid_argument("atom_mass_left: x sequence must decrease");
  if (!(xs.back() < 0)) throw std::invalid_argument("atom_mass_left: x sequence must be negative");

  std::vector<double> us, values;
  for (double x : xs) {
    us.push_back(-1.0 / x);
    values.push_back(f.eval(Complex(x, 0.0)).real());
  }
  // Divergence guard: a genuine limit cannot keep growing along the tail.
  double head = std::fabs(values.front()), tail = std::fabs(values.back());
  double mid = std::fabs(values[values.size() / 2]);
  if (tail > 10.0 * head + 1.0 && tail > 2.0 * mid)
    throw eval_error("atom_mass_left: F(x) grows as x -> -inf");
  return neville_to_zero(us, values);
}

}  // namespace cmseq
