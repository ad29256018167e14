#include "cmseq/sequence.hpp"

#include <algorithm>
#include <cmath>

namespace cmseq {

Sequence::Sequence(std::vector<Scalar> terms) : terms_(std::move(terms)) {
  if (terms_.empty()) throw std::invalid_argument("Sequence: needs at least one term");
  bool any_float = std::any_of(terms_.begin(), terms_.end(),
                               [](const Scalar& s) { return !s.is_exact(); });
  kind_ = any_float ? ScalarKind::floating : ScalarKind::exact;
  if (any_float) {
    for (auto& t : terms_)
      if (t.is_exact()) t = Scalar::from_double(t.to_double());
  }
}

Sequence Sequence::of_doubles(const std::vector<double>& xs) {
  std::vector<Scalar> t;
  t.reserve(xs.size());
  for (double x : xs) t.push_back(Scalar::from_double(x));
  return Sequence(std::move(t));
}

Sequence Sequence::of_rationals(const std::vector<Rational>& xs) {
  std::vector<Scalar> t;
  t.reserve(xs.size());
  for (const auto& x : xs) t.push_back(Scalar(x));
  return Sequence(std::move(t));
}

Sequence Sequence::constant(const Scalar& value, int count) {
  if (count < 1) throw std::invalid_argument("Sequence: count must be >= 1");
  return Sequence(std::vector<Scalar>(static_cast<size_t>(count), value));
}

std::vector<double> Sequence::to_doubles() const {
  std::vector<double> out;
  out.reserve(terms_.size());
  for (const auto& t : terms_) out.push_back(t.to_double());
  return out;
}

double Sequence::max_abs() const {
  double m = 0;
  for (const auto& t : terms_) m = std::max(m, std::fabs(t.to_double()));
  return m;
}

DiscreteMeasure::DiscreteMeasure(std::vector<Atom> atoms, Scalar tau)
    : atoms_(std::move(atoms)), tau_(std::move(tau)) {
  if (tau_.sign() <= 0) throw std::invalid_argument("DiscreteMeasure: tau must be positive");
  for (const auto& a : atoms_) {
    if (a.mass.sign() < 0) throw std::invalid_argument("DiscreteMeasure: negative mass");
    if (a.location.sign() < 0 || a.location > tau_)
      throw std::invalid_argument("DiscreteMeasure: atom outside [0, tau]");
  }
}

Scalar DiscreteMeasure::total_mass() const {
  Scalar s(0);
  for (const auto& a : atoms_) s += a.mass;
  return s;
}

Scalar DiscreteMeasure::moment(long long j) const {
  Scalar s(0);
  for (const auto& a : atoms_) s += a.mass * a.location.pow_int(j);
  return s;
}

Sequence DiscreteMeasure::moments(int count) const {
  std::vector<Scalar> t;
  t.reserve(static_cast<size_t>(count));
  for (int j = 0; j < count; ++j) t.push_back(moment(j));
  return Sequence(std::move(t));
}

}  // namespace cmseq
