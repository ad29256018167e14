#pragma once

#include "cmseq/sequence.hpp"

#include <optional>
#include <utility>

namespace cmseq {

/// Fuss-Catalan parameter pair (p, r) with the support constants
/// tau_p = p^p/(p-1)^{p-1} (tau_1 = 1) and z_p = 1/tau_p, populated for
/// p >= 1. tau_p is exact for exact integer p and floating otherwise.
struct FcParams {
  Scalar p;
  Scalar r;
  std::optional<Scalar> tau_p;
  std::optional<Scalar> z_p;

  static FcParams make(Scalar p, Scalar r);
};

/// Support radius tau_p; requires p >= 1.
Scalar tau(const Scalar& p);

/// A_n(p, r) = (r/n!) prod_{j=1}^{n-1} (pn + r - j), A_0 = 1, via the
/// product formula (never gamma functions); exact for exact p, r.
Scalar fc_number(const FcParams& params, long long n);

/// Terms C(pn + r - 1, n), n = 0..N, by falling-factorial products.
Sequence binomial_sequence(const FcParams& params, int count_n);

/// Canonical Fuss-Catalan terms b^{(p)}_{n-1} = C(pn - 1, n - 1) for
/// n = 1..N+1; requires p >= 1.
Sequence fc_canonical_sequence(const Scalar& p, int count_n);

/// Both sides of the alternating identity
///   n sum_{k=1}^{n} ((-1)^{k-1}/k) C(n,k) A_n(p,k)  =  C(pn-1, n-1),
/// computed independently; exact equality expected for exact p.
std::pair<Scalar, Scalar> fc_alternating_identity(const Scalar& p, int n);

/// Generalized binomial C(x, n) as the falling-factorial product
/// prod_{i=0}^{n-1} (x - i) / n!; exact for exact x.
Scalar falling_binomial(const Scalar& x, long long n);

}  // namespace cmseq
