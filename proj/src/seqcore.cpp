#include "cmseq/seqcore.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace cmseq {

namespace detail {

double default_tol(const Sequence& c) { return 1e-12 * std::max(1.0, c.max_abs()); }

std::vector<std::vector<Scalar>> difference_table(const Sequence& c) {
  const int n = c.max_index();
  std::vector<std::vector<Scalar>> table;
  table.reserve(static_cast<size_t>(n) + 1);
  table.push_back(c.terms());
  for (int k = 1; k <= n; ++k) {
    const auto& prev = table.back();
    std::vector<Scalar> row;
    row.reserve(prev.size() - 1);
    for (size_t j = 0; j + 1 < prev.size(); ++j) row.push_back(prev[j] - prev[j + 1]);
    table.push_back(std::move(row));
  }
  return table;
}

namespace {

bool cell_fails(const Scalar& v, ScalarKind kind, double tol) {
  if (kind == ScalarKind::exact) return v.sign() < 0;
  return v.to_double() < -tol;
}

MonotonicityReport scan_table(const Sequence& c, std::optional<double> tol) {
  const double t = tol.value_or(default_tol(c));
  const int n = c.max_index();
  auto table = difference_table(c);

  MonotonicityReport rep;
  rep.verified = true;
  rep.max_order = n;
  int min_violating_sum = std::numeric_limits<int>::max();
  for (int k = 0; k <= n && rep.verified; ++k) {
    for (int j = 0; j + k <= n; ++j) {
      if (cell_fails(table[static_cast<size_t>(k)][static_cast<size_t>(j)], c.kind(), t)) {
        rep.verified = false;
        rep.witness = Witness{j, k, table[static_cast<size_t>(k)][static_cast<size_t>(j)]};
        break;
      }
    }
  }
  if (!rep.verified) {
    // max_order needs the smallest violating j+k over the whole table, which
    // may be below the lexicographic-first witness.
    for (int k = 0; k <= n; ++k)
      for (int j = 0; j + k <= n; ++j)
        if (cell_fails(table[static_cast<size_t>(k)][static_cast<size_t>(j)], c.kind(), t))
          min_violating_sum = std::min(min_violating_sum, j + k);
    rep.max_order = min_violating_sum - 1;
  }
  return rep;
}

Scalar scalar_pow0(const Scalar& x, long long e) {
  // x^e with the 0^0 = 1 convention used throughout the compounding ops.
  if (e == 0) return Scalar(1);
  return x.pow_int(e);
}

}  // namespace
}  // namespace detail

Scalar finite_difference(const Sequence& c, int k, int j) {
  if (k < 0 || j < 0 || j + k > c.max_index())
    throw std::out_of_range("finite_difference: j + k exceeds sequence order");
  Scalar acc(0);
  for (int n = 0; n <= k; ++n) {
    Scalar term = Scalar(binomial(k, n)) * c[static_cast<size_t>(n + j)];
    if (n % 2 == 0)
      acc += term;
    else
      acc -= term;
  }
  return acc;
}

MonotonicityReport check_completely_monotone(const Sequence& c, std::optional<double> tol) {
  return detail::scan_table(c, tol);
}

MonotonicityReport check_completely_alternating(const Sequence& a, std::optional<double> tol) {
  if (a.size() < 2)
    throw std::invalid_argument("check_completely_alternating: needs at least two terms");
  std::vector<Scalar> inc;
  inc.reserve(a.size() - 1);
  for (size_t i = 0; i + 1 < a.size(); ++i) inc.push_back(a[i + 1] - a[i]);
  return check_completely_monotone(Sequence(std::move(inc)), tol);
}

MonotonicityReport check_dilated_hausdorff(const Sequence& c, const Scalar& tau,
                                           std::optional<double> tol) {
  if (tau.sign() <= 0) throw std::domain_error("check_dilated_hausdorff: tau must be positive");
  std::vector<Scalar> scaled;
  scaled.reserve(c.size());
  for (size_t j = 0; j < c.size(); ++j)
    scaled.push_back(c[j] * tau.pow_int(-static_cast<long long>(j)));
  return check_completely_monotone(Sequence(std::move(scaled)), tol);
}

MonotonicityReport check_convex_moments(const Sequence& c, std::optional<double> tol,
                                        bool* warned_c0) {
  if (warned_c0) *warned_c0 = c[0] != Scalar(1);
  std::vector<Scalar> a;
  a.reserve(c.size() + 1);
  a.push_back(Scalar(0));
  for (size_t n = 1; n <= c.size(); ++n) a.push_back(Scalar(static_cast<long long>(n)) * c[n - 1]);
  return check_completely_alternating(Sequence(std::move(a)), tol);
}

MonotonicityReport check_concave_moments(const Sequence& c, std::optional<double> tol) {
  std::vector<Scalar> g;
  g.reserve(c.size());
  for (size_t n = 0; n < c.size(); ++n) g.push_back(Scalar(static_cast<long long>(n) + 1) * c[n]);
  return check_completely_monotone(Sequence(std::move(g)), tol);
}

namespace {

// Tail of sup|c| * sum_{j>N} C(j,k) q^{j-k} t^k for 0 <= q < 1, t >= 0,
// using sum_{j>=k} C(j,k) q^{j-k} = (1-q)^{-(k+1)}.
double geometric_tail(double sup_c, double t, double q, int big_n, int k) {
  if (sup_c == 0.0) return 0.0;
  double full = std::pow(t, k) / std::pow(1.0 - q, k + 1);
  double partial = 0.0;
  double binom_qpow = std::pow(t, k);  // C(j,k) q^{j-k} t^k, starting at j = k
  for (int j = k; j <= big_n; ++j) {
    partial += binom_qpow;
    binom_qpow *= q * static_cast<double>(j + 1) / static_cast<double>(j + 1 - k);
  }
  return sup_c * std::max(0.0, full - partial);
}

Scalar compound_term_sum(const Sequence& c, int k, const Scalar& t) {
  // sum_{j=k}^{N} c_j C(j,k) (1-t)^{j-k} t^k with 0^0 = 1.
  const Scalar one_minus = Scalar(1) - t;
  Scalar acc(0);
  for (int j = k; j <= c.max_index(); ++j) {
    acc += c[static_cast<size_t>(j)] * Scalar(binomial(j, k)) *
           detail::scalar_pow0(one_minus, j - k);
  }
  return acc * detail::scalar_pow0(t, k);
}

// Bound on |sum_{j>N} c_j| from the supplied prefix: zero when the sequence
// is declared finitely supported (>= 5 trailing zeros), else a geometric
// envelope fitted to the trailing terms. Returns nullopt when no summable
// envelope can be justified.
std::optional<double> tail_sum_bound(const Sequence& c) {
  const int n = c.max_index();
  int last_nonzero = -1;
  for (int j = n; j >= 0; --j)
    if (c[static_cast<size_t>(j)].sign() != 0) {
      last_nonzero = j;
      break;
    }
  if (last_nonzero < 0) return 0.0;
  if (n - last_nonzero >= 5) return 0.0;
  double ratio = 0.0;
  int pairs = 0;
  for (int j = std::max(0, last_nonzero - 5); j < last_nonzero; ++j) {
    double a = std::fabs(c[static_cast<size_t>(j)].to_double());
    double b = std::fabs(c[static_cast<size_t>(j) + 1].to_double());
    if (a == 0.0) return std::nullopt;
    ratio = std::max(ratio, b / a);
    ++pairs;
  }
  if (pairs == 0 || ratio >= 0.999) return std::nullopt;
  double last = std::fabs(c[static_cast<size_t>(last_nonzero)].to_double());
  return last * std::pow(ratio, n - last_nonzero + 1) / (1.0 - ratio);
}

}  // namespace

Sequence dilate_compound(const Sequence& c, const Scalar& p, double tail_tol) {
  if (p.sign() <= 0 || p >= Scalar(2))
    throw std::domain_error("dilate_compound: p must lie in (0, 2)");
  const int n = c.max_index();
  const double pd = p.to_double();
  const double q = std::fabs(1.0 - pd);
  const double sup_c = c.max_abs();

  std::vector<Scalar> out;
  for (int k = 0; k <= n; ++k) {
    if (geometric_tail(sup_c, pd, q, n, k) >= tail_tol) break;
    out.push_back(compound_term_sum(c, k, p));
  }
  if (out.empty())
    throw std::runtime_error("dilate_compound: tail bound unachievable at the given order");
  return Sequence(std::move(out));
}

Sequence exchangeable_compound(const Sequence& c, const DiscreteMeasure& nu, double tail_tol) {
  const int n = c.max_index();
  const double sup_c = c.max_abs();
  for (const auto& a : nu.atoms())
    if (a.location >= Scalar(2))
      throw std::domain_error("exchangeable_compound: atom outside [0, 2)");

  // Split off the exactly-handled endpoint atoms.
  Scalar mass0(0), mass1(0);
  std::vector<DiscreteMeasure::Atom> generic;
  for (const auto& a : nu.atoms()) {
    if (a.location.sign() == 0)
      mass0 += a.mass;
    else if (a.location == Scalar(1))
      mass1 += a.mass;
    else
      generic.push_back(a);
  }

  std::optional<double> zero_tail;
  if (mass0.sign() != 0) {
    zero_tail = tail_sum_bound(c);
    if (!zero_tail)
      throw std::runtime_error(
          "exchangeable_compound: atom at t=0 needs a summable sequence tail "
          "(trailing zeros or geometric decay)");
  }

  std::vector<Scalar> out;
  for (int k = 0; k <= n; ++k) {
    double tail = 0.0;
    for (const auto& a : generic) {
      double t = a.location.to_double();
      tail += a.mass.to_double() * geometric_tail(sup_c, t, std::fabs(1.0 - t), n, k);
    }
    if (k == 0 && zero_tail) tail += mass0.to_double() * *zero_tail;
    if (tail >= tail_tol) break;

    Scalar value(0);
    for (const auto& a : generic) value += a.mass * compound_term_sum(c, k, a.location);
    if (mass1.sign() != 0) value += mass1 * c[static_cast<size_t>(k)];
    if (mass0.sign() != 0 && k == 0) {
      Scalar total(0);
      for (const auto& t : c) total += t;
      value += mass0 * total;
    }
    out.push_back(std::move(value));
  }
  if (out.empty())
    throw std::runtime_error("exchangeable_compound: tail bound unachievable at the given order");
  return Sequence(std::move(out));
}

Sequence convolve(const Sequence& b, const Sequence& c) {
  const size_t len = std::min(b.size(), c.size());
  std::vector<Scalar> out;
  out.reserve(len);
  for (size_t k = 0; k < len; ++k) {
    Scalar acc(0);
    for (size_t i = 0; i <= k; ++i) acc += b[i] * c[k - i];
    out.push_back(std::move(acc));
  }
  return Sequence(std::move(out));
}

Sequence compound_compose(const Sequence& b, const Sequence& c) {
  const size_t len = c.size();
  const bool c0_zero = c[0].sign() == 0;
  std::vector<Scalar> acc(len, Scalar(0));
  std::vector<Scalar> cpow(len, Scalar(0));
  cpow[0] = Scalar(1);  // c^{*0} = delta_0

  for (size_t j = 0; j < b.size(); ++j) {
    if (c0_zero && j >= len) break;  // c^{*j} vanishes below index j
    for (size_t k = 0; k < len; ++k) acc[k] += b[j] * cpow[k];
    if (j + 1 < b.size()) {
      std::vector<Scalar> next(len, Scalar(0));
      for (size_t k = 0; k < len; ++k) {
        for (size_t i = 0; i <= k; ++i) next[k] += cpow[i] * c[k - i];
      }
      cpow = std::move(next);
    }
  }
  // Kind contagion: a floating b must taint the output even where cpow is 0.
  if (!b.is_exact() || !c.is_exact())
    for (auto& v : acc)
      if (v.is_exact()) v = Scalar::from_double(v.to_double());
  return Sequence(std::move(acc));
}

Sequence leading_differences(const Sequence& c) {
  const int n = c.max_index();
  std::vector<Scalar> level = c.terms();
  std::vector<Scalar> out;
  out.reserve(c.size());
  out.push_back(level[0]);
  for (int k = 1; k <= n; ++k) {
    for (size_t j = 0; j + static_cast<size_t>(k) < c.size(); ++j)
      level[j] = level[j] - level[j + 1];
    out.push_back(level[0]);
  }
  return Sequence(std::move(out));
}

std::vector<Scalar> diaconis_freedman_array(const Sequence& c, int n) {
  if (n < 0 || n > c.max_index())
    throw std::out_of_range("diaconis_freedman_array: n exceeds sequence order");
  std::vector<Scalar> level = c.terms();
  std::vector<Scalar> row(static_cast<size_t>(n) + 1, Scalar(0));
  // Level k carries (I-S)^k c_j; the row needs the anti-diagonal j + k = n.
  row[static_cast<size_t>(n)] = level[static_cast<size_t>(n)];
  for (int k = 1; k <= n; ++k) {
    for (size_t j = 0; j + static_cast<size_t>(k) < c.size(); ++j)
      level[j] = level[j] - level[j + 1];
    row[static_cast<size_t>(n - k)] = level[static_cast<size_t>(n - k)];
  }
  for (int m = 0; m <= n; ++m) row[static_cast<size_t>(m)] *= Scalar(binomial(n, m));
  return row;
}

}  // namespace cmseq
