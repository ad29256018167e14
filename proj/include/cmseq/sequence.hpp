#pragma once

#include "cmseq/scalar.hpp"

#include <utility>
#include <vector>

namespace cmseq {

/// A finite prefix (c_0..c_N) of a real sequence with a homogeneous scalar
/// kind. Mixing a floating term into exact ones coerces the whole sequence
/// to floating, mirroring scalar contagion.
class Sequence {
public:
  explicit Sequence(std::vector<Scalar> terms);

  static Sequence of_doubles(const std::vector<double>& xs);
  static Sequence of_rationals(const std::vector<Rational>& xs);
  static Sequence constant(const Scalar& value, int count);

  /// Highest index N; size() == N + 1.
  int max_index() const { return static_cast<int>(terms_.size()) - 1; }
  size_t size() const { return terms_.size(); }
  ScalarKind kind() const { return kind_; }
  bool is_exact() const { return kind_ == ScalarKind::exact; }

  const Scalar& operator[](size_t i) const { return terms_.at(i); }
  const std::vector<Scalar>& terms() const { return terms_; }

  std::vector<double> to_doubles() const;
  double max_abs() const;

  auto begin() const { return terms_.begin(); }
  auto end() const { return terms_.end(); }

private:
  std::vector<Scalar> terms_;
  ScalarKind kind_;
};

/// Finitely supported measure on [0, tau]: nonnegative masses at locations
/// inside the interval. Serves as the mixing measure of exchangeable
/// compounding and as the test generator for moment sequences.
class DiscreteMeasure {
public:
  struct Atom {
    Scalar location;
    Scalar mass;
  };

  DiscreteMeasure(std::vector<Atom> atoms, Scalar tau);

  const std::vector<Atom>& atoms() const { return atoms_; }
  const Scalar& tau() const { return tau_; }

  Scalar total_mass() const;
  /// j-th power moment sum_a mass * location^j (0^0 = 1).
  Scalar moment(long long j) const;
  Sequence moments(int count) const;

private:
  std::vector<Atom> atoms_;
  Scalar tau_;
};

}  // namespace cmseq
