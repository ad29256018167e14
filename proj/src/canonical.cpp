#include "cmseq/canonical.hpp"

#include "cmseq/seqcore.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <complex>

namespace cmseq {

namespace {

void require_normalized(const Sequence& c, const char* who) {
  bool ok = c.is_exact() ? c[0] == Scalar(1) : std::fabs(c[0].to_double() - 1.0) < 1e-12;
  if (!ok) throw std::invalid_argument(std::string(who) + ": requires c_0 = 1");
}

}  // namespace

Sequence canonical_from_moments(const Sequence& c) {
  require_normalized(c, "canonical_from_moments");
  const int n_max = c.max_index();
  if (n_max < 1) throw std::invalid_argument("canonical_from_moments: needs at least two terms");
  std::vector<Scalar> b;
  b.reserve(static_cast<size_t>(n_max));
  for (int n = 0; n < n_max; ++n) {
    Scalar acc = Scalar(n + 1) * c[static_cast<size_t>(n) + 1];
    for (int k = 0; k < n; ++k) acc -= c[static_cast<size_t>(n - k)] * b[static_cast<size_t>(k)];
    // c_0 = 1, so the forward solve needs no division.
    b.push_back(std::move(acc));
  }
  return Sequence(std::move(b));
}

ConvGroupElement conv_group_power(const Sequence& c, const Scalar& r) {
  require_normalized(c, "conv_group_power");
  Sequence b = canonical_from_moments(c);
  std::vector<Scalar> a;
  a.reserve(c.size());
  a.push_back(Scalar(1));
  for (int n = 0; n < c.max_index(); ++n) {
    Scalar acc(0);
    for (int k = 0; k <= n; ++k)
      acc += a[static_cast<size_t>(n - k)] * b[static_cast<size_t>(k)];
    a.push_back(r * acc / Scalar(n + 1));
  }
  return ConvGroupElement{r, Sequence(std::move(a))};
}

bool group_law_check(const Sequence& c, const Scalar& r, const Scalar& s,
                     std::optional<double> tol) {
  Sequence lhs = conv_group_power(c, r + s).terms;
  Sequence rhs = convolve(conv_group_power(c, r).terms, conv_group_power(c, s).terms);
  if (lhs.is_exact() && rhs.is_exact()) {
    for (size_t i = 0; i < lhs.size(); ++i)
      if (lhs[i] != rhs[i]) return false;
    return true;
  }
  const double t = tol.value_or(1e-10 * std::max(1.0, lhs.max_abs()));
  for (size_t i = 0; i < lhs.size(); ++i)
    if (std::fabs(lhs[i].to_double() - rhs[i].to_double()) > t) return false;
  return true;
}

std::pair<Scalar, Scalar> bn_alternating_crosscheck(const Sequence& c, int n) {
  require_normalized(c, "bn_alternating_crosscheck");
  if (n < 1 || n > c.max_index())
    throw std::out_of_range("bn_alternating_crosscheck: n out of range");
  Sequence b = canonical_from_moments(c);
  Scalar lhs = b[static_cast<size_t>(n) - 1] / Scalar(n);
  Scalar rhs(0);
  for (int k = 1; k <= n; ++k) {
    Scalar term = Scalar(binomial(n, k)) *
                  conv_group_power(c, Scalar(k)).terms[static_cast<size_t>(n)] / Scalar(k);
    if (k % 2 == 1)
      rhs += term;
    else
      rhs -= term;
  }
  return {lhs, rhs};
}

Scalar series_exp_identity(const Sequence& c) {
  require_normalized(c, "series_exp_identity");
  const int n_max = c.max_index();
  Sequence b = canonical_from_moments(c);

  // T(z) = sum b_n z^{n+1}/(n+1), a polynomial of degree n_max with T_0 = 0.
  std::vector<Scalar> T(static_cast<size_t>(n_max) + 1, Scalar(0));
  for (int n = 0; n < n_max; ++n)
    T[static_cast<size_t>(n) + 1] = b[static_cast<size_t>(n)] / Scalar(n + 1);

  // exp(T) as sum_m T^m / m!, truncated at degree n_max. T has valuation 1,
  // so powers beyond m = n_max cannot contribute.
  std::vector<Scalar> total(static_cast<size_t>(n_max) + 1, Scalar(0));
  total[0] = Scalar(1);
  std::vector<Scalar> power(static_cast<size_t>(n_max) + 1, Scalar(0));
  power[0] = Scalar(1);
  Scalar inv_fact(1);
  for (int m = 1; m <= n_max; ++m) {
    std::vector<Scalar> next(static_cast<size_t>(n_max) + 1, Scalar(0));
    for (int i = m - 1; i <= n_max; ++i) {
      if (power[static_cast<size_t>(i)].sign() == 0 && power[static_cast<size_t>(i)].is_exact())
        continue;
      for (int j = 1; i + j <= n_max; ++j)
        next[static_cast<size_t>(i + j)] += power[static_cast<size_t>(i)] * T[static_cast<size_t>(j)];
    }
    power = std::move(next);
    inv_fact /= Scalar(m);
    for (int i = 0; i <= n_max; ++i) total[static_cast<size_t>(i)] += power[static_cast<size_t>(i)] * inv_fact;
  }

  Scalar defect(0);
  for (int i = 0; i <= n_max; ++i) {
    Scalar d = (total[static_cast<size_t>(i)] - c[static_cast<size_t>(i)]).abs();
    if (d > defect) defect = d;
  }
  return defect;
}

namespace detail {

GaussRule gauss_from_moments(const Sequence& moments, int max_nodes) {
  const int n_terms = static_cast<int>(moments.size());
  int n = std::min(max_nodes, n_terms / 2);
  if (!moments.is_exact()) n = std::min(n, 8);  // float Chebyshev degrades fast
  if (n < 1) return {};

  // Chebyshev algorithm on raw moments: sigma_{k,l} with recurrence
  //   sigma_{k,l} = sigma_{k-1,l+1} - alpha_{k-1} sigma_{k-1,l} - beta_{k-1} sigma_{k-2,l}
  // alpha_k = sigma_{k,k+1}/sigma_{k,k} - sigma_{k-1,k}/sigma_{k-1,k-1},
  // beta_k = sigma_{k,k}/sigma_{k-1,k-1}. Exact arithmetic keeps it stable.
  std::vector<Scalar> alpha, beta;
  std::vector<Scalar> prev, cur(moments.begin(), moments.end());
  if (cur[0].sign() <= 0) return {};
  alpha.push_back(cur[1] / cur[0]);
  beta.push_back(cur[0]);
  for (int k = 1; k < n; ++k) {
    const int cols = 2 * n - 2 * k;  // need sigma_{k,l} for l = k..2n-1-k
    std::vector<Scalar> next;
    next.reserve(static_cast<size_t>(cols));
    // row offsets: cur[l - (k-1)] holds sigma_{k-1,l}; prev similarly shifted.
    for (int l = k; l <= 2 * n - 1 - k; ++l) {
      Scalar v = cur[static_cast<size_t>(l + 1 - (k - 1))] -
                 alpha[static_cast<size_t>(k) - 1] * cur[static_cast<size_t>(l - (k - 1))];
      if (k >= 2) v -= beta[static_cast<size_t>(k) - 1] * prev[static_cast<size_t>(l - (k - 2))];
      next.push_back(std::move(v));
    }
    // Degenerate or indefinite principal minor: stop with k nodes.
    if (next[0].sign() <= 0) {
      n = k;
      break;
    }
    Scalar a_k = next[1] / next[0] - cur[1] / cur[0];
    Scalar b_k = next[0] / cur[0];
    if (!moments.is_exact() &&
        (!std::isfinite(a_k.to_double()) || !std::isfinite(b_k.to_double()))) {
      n = k;
      break;
    }
    alpha.push_back(std::move(a_k));
    beta.push_back(std::move(b_k));
    prev = std::move(cur);
    cur = std::move(next);
  }

  n = static_cast<int>(alpha.size());
  Eigen::MatrixXd jacobi = Eigen::MatrixXd::Zero(n, n);
  for (int i = 0; i < n; ++i) {
    jacobi(i, i) = alpha[static_cast<size_t>(i)].to_double();
    if (i + 1 < n) {
      double off = std::sqrt(std::max(0.0, beta[static_cast<size_t>(i) + 1].to_double()));
      jacobi(i, i + 1) = off;
      jacobi(i + 1, i) = off;
    }
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(jacobi);
  GaussRule rule;
  const double mass = beta[0].to_double();
  for (int i = 0; i < n; ++i) {
    rule.nodes.push_back(es.eigenvalues()(i));
    double v0 = es.eigenvectors()(0, i);
    rule.weights.push_back(mass * v0 * v0);
  }
  return rule;
}

}  // namespace detail

namespace {

std::complex<double> discrete_genfun(const detail::GaussRule& rule, std::complex<double> z) {
  std::complex<double> acc(0.0, 0.0);
  for (size_t i = 0; i < rule.nodes.size(); ++i)
    acc += rule.weights[i] / (1.0 - rule.nodes[i] * z);
  return acc;
}

// Sup of Im T(z)/pi over an upper-half-disk grid, T the truncated
// exp-series of the dilated canonical sequence (arg A_1 = Im Log A_1).
double series_grid_sup(const Sequence& dilated) {
  Sequence b = canonical_from_moments(dilated);
  std::vector<double> coeff;  // T_m = b_{m-1}/m
  coeff.push_back(0.0);
  for (size_t n = 0; n < b.size(); ++n)
    coeff.push_back(b[n].to_double() / static_cast<double>(n + 1));

  double sup = 0.0;
  const int n_r = 16, n_th = 64;
  for (int ir = 1; ir <= n_r; ++ir) {
    double rad = 0.9 * ir / n_r;
    for (int it = 1; it < n_th; ++it) {
      double th = M_PI * it / n_th;
      std::complex<double> z = std::polar(rad, th);
      std::complex<double> acc(0.0, 0.0);
      for (size_t m = coeff.size(); m-- > 0;) acc = acc * z + coeff[m];
      sup = std::max(sup, acc.imag() / M_PI);
    }
  }
  return sup;
}

// Richardson-extrapolated arg of the Gauss-discretized generating function
// near the cut, probed at heights tied to the local pole spacing.
double quadrature_arg_sup(const detail::GaussRule& rule) {
  std::vector<double> poles;
  for (double t : rule.nodes)
    if (t > 1e-12) poles.push_back(1.0 / t);
  std::sort(poles.begin(), poles.end());
  if (poles.size() < 2) return 0.0;

  const double lambda = 0.75;
  double sup = 0.0;
  for (size_t i = 0; i + 1 < poles.size(); ++i) {
    double x = std::sqrt(poles[i] * poles[i + 1]);
    double gap = poles[i + 1] - poles[i];
    double a1 = std::arg(discrete_genfun(rule, {x, lambda * gap}));
    double a2 = std::arg(discrete_genfun(rule, {x, 2.0 * lambda * gap}));
    if (a2 - a1 > M_PI) a1 += 2.0 * M_PI;  // principal-branch wrap just above a real zero
    sup = std::max(sup, 2.0 * a1 - a2);
  }
  return sup / M_PI;
}

}  // namespace

double canonical_density_bound(const Sequence& c, const Scalar& tau) {
  require_normalized(c, "canonical_density_bound");
  if (tau.sign() <= 0) throw std::domain_error("canonical_density_bound: tau must be positive");
  std::vector<Scalar> scaled;
  scaled.reserve(c.size());
  for (size_t j = 0; j < c.size(); ++j)
    scaled.push_back(c[j] * tau.pow_int(-static_cast<long long>(j)));
  Sequence dilated(std::move(scaled));

  double est = series_grid_sup(dilated);
  detail::GaussRule rule = detail::gauss_from_moments(dilated, 20);
  if (!rule.nodes.empty()) est = std::max(est, quadrature_arg_sup(rule));
  return std::max(0.0, est);
}

}  // namespace cmseq
