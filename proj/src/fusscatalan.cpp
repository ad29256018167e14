#include "cmseq/fusscatalan.hpp"

#include <cmath>

namespace cmseq {

Scalar tau(const Scalar& p) {
  if (p < Scalar(1)) throw std::domain_error("tau: requires p >= 1");
  if (p == Scalar(1)) return Scalar(1);
  if (p.is_integer()) {
    // p^p / (p-1)^{p-1}, exact for integer p.
    long long pi = p.integer().convert_to<long long>();
    return p.pow_int(pi) / (p - Scalar(1)).pow_int(pi - 1);
  }
  double pd = p.to_double();
  return Scalar::from_double(std::pow(pd, pd) / std::pow(pd - 1.0, pd - 1.0));
}

FcParams FcParams::make(Scalar p, Scalar r) {
  FcParams params{std::move(p), std::move(r), std::nullopt, std::nullopt};
  if (params.p.sign() <= 0) throw std::domain_error("FcParams: p must be positive");
  if (params.p >= Scalar(1)) {
    params.tau_p = tau(params.p);
    params.z_p = Scalar(1) / *params.tau_p;
  }
  return params;
}

Scalar fc_number(const FcParams& params, long long n) {
  if (n < 0) throw std::domain_error("fc_number: n must be nonnegative");
  if (n == 0) return Scalar(1);
  // (r/n!) prod_{j<n} (pn+r-j), dividing factor by factor so floating
  // parameters stay in range for large n.
  Scalar acc = params.r / Scalar(n);
  const Scalar pn = params.p * Scalar(n);
  for (long long j = 1; j <= n - 1; ++j) acc *= (pn + params.r - Scalar(j)) / Scalar(j);
  return acc;
}

Scalar falling_binomial(const Scalar& x, long long n) {
  if (n < 0) return Scalar(0);
  Scalar acc(1);
  for (long long i = 0; i < n; ++i) acc *= (x - Scalar(i)) / Scalar(i + 1);
  return acc;
}

Sequence binomial_sequence(const FcParams& params, int count_n) {
  if (count_n < 0) throw std::domain_error("binomial_sequence: N must be nonnegative");
  std::vector<Scalar> terms;
  terms.reserve(static_cast<size_t>(count_n) + 1);
  for (long long n = 0; n <= count_n; ++n)
    terms.push_back(falling_binomial(params.p * Scalar(n) + params.r - Scalar(1), n));
  return Sequence(std::move(terms));
}

Sequence fc_canonical_sequence(const Scalar& p, int count_n) {
  if (p < Scalar(1)) throw std::domain_error("fc_canonical_sequence: requires p >= 1");
  if (count_n < 0) throw std::domain_error("fc_canonical_sequence: N must be nonnegative");
  std::vector<Scalar> terms;
  terms.reserve(static_cast<size_t>(count_n) + 1);
  for (long long n = 1; n <= count_n + 1; ++n)
    terms.push_back(falling_binomial(p * Scalar(n) - Scalar(1), n - 1));
  return Sequence(std::move(terms));
}

std::pair<Scalar, Scalar> fc_alternating_identity(const Scalar& p, int n) {
  if (n < 1) throw std::domain_error("fc_alternating_identity: n must be >= 1");
  Scalar sum(0);
  for (long long k = 1; k <= n; ++k) {
    Scalar term = Scalar(binomial(n, k)) * fc_number(FcParams::make(p, Scalar(k)), n) / Scalar(k);
    if (k % 2 == 1)
      sum += term;
    else
      sum -= term;
  }
  Scalar lhs = Scalar(n) * sum;
  Scalar rhs = falling_binomial(p * Scalar(n) - Scalar(1), n - 1);
  return {lhs, rhs};
}

}  // namespace cmseq
