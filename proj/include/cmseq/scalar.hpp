#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>

namespace cmseq {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

enum class ScalarKind { exact, floating };

/// A real number carried either as an exact rational (arbitrary precision,
/// lowest terms) or as a binary double. Arithmetic between two exact values
/// stays exact; any operation touching a floating value yields a floating one.
class Scalar {
public:
  Scalar() : v_(Rational(0)) {}
  Scalar(int n) : v_(Rational(n)) {}
  Scalar(long n) : v_(Rational(n)) {}
  Scalar(long long n) : v_(Rational(n)) {}
  Scalar(const BigInt& n) : v_(Rational(n)) {}
  Scalar(const Rational& r) : v_(r) {}
  Scalar(BigInt num, BigInt den);

  static Scalar from_double(double d) {
    Scalar s;
    s.v_ = d;
    return s;
  }

  ScalarKind kind() const {
    return std::holds_alternative<Rational>(v_) ? ScalarKind::exact : ScalarKind::floating;
  }
  bool is_exact() const { return kind() == ScalarKind::exact; }

  const Rational& rational() const;
  double to_double() const;
  bool is_integer() const;
  /// Exact integer value; throws unless is_exact() and denominator is 1.
  BigInt integer() const;

  int sign() const;
  Scalar abs() const;
  /// Integer power; negative exponents require a nonzero base.
  Scalar pow_int(long long e) const;

  Scalar operator-() const;
  Scalar& operator+=(const Scalar& o);
  Scalar& operator-=(const Scalar& o);
  Scalar& operator*=(const Scalar& o);
  Scalar& operator/=(const Scalar& o);

  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
  friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }

  friend bool operator==(const Scalar& a, const Scalar& b) { return cmp(a, b) == 0; }
  friend bool operator!=(const Scalar& a, const Scalar& b) { return cmp(a, b) != 0; }
  friend bool operator<(const Scalar& a, const Scalar& b) { return cmp(a, b) < 0; }
  friend bool operator<=(const Scalar& a, const Scalar& b) { return cmp(a, b) <= 0; }
  friend bool operator>(const Scalar& a, const Scalar& b) { return cmp(a, b) > 0; }
  friend bool operator>=(const Scalar& a, const Scalar& b) { return cmp(a, b) >= 0; }

  /// "num/den" (or plain integer) for exact values, shortest round-trip
  /// decimal for floating ones.
  std::string str() const;

  /// Parses "a/b", integers, and decimal/scientific literals. In exact mode a
  /// decimal literal becomes the exact rational it denotes (e.g. 0.25 -> 1/4).
  static Scalar parse(std::string_view text, ScalarKind mode = ScalarKind::exact);

private:
  static int cmp(const Scalar& a, const Scalar& b);
  std::variant<Rational, double> v_;
};

/// C(n, k) for integers, 0 when k < 0 or k > n.
BigInt binomial(long long n, long long k);
BigInt factorial(long long n);

}  // namespace cmseq
