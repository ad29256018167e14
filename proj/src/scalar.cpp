#include "cmseq/scalar.hpp"

#include <cctype>
#include <charconv>
#include <cmath>
#include <limits>
#include <sstream>

namespace cmseq {

Scalar::Scalar(BigInt num, BigInt den) {
  if (den == 0) throw std::invalid_argument("Scalar: zero denominator");
  v_ = Rational(std::move(num), std::move(den));
}

const Rational& Scalar::rational() const {
  if (!is_exact()) throw std::logic_error("Scalar: rational() on floating value");
  return std::get<Rational>(v_);
}

double Scalar::to_double() const {
  if (is_exact()) return std::get<Rational>(v_).convert_to<double>();
  return std::get<double>(v_);
}

bool Scalar::is_integer() const {
  return is_exact() && boost::multiprecision::denominator(rational()) == 1;
}

BigInt Scalar::integer() const {
  if (!is_integer()) throw std::logic_error("Scalar: integer() on non-integer value");
  return boost::multiprecision::numerator(rational());
}

int Scalar::sign() const {
  if (is_exact()) return rational().sign();
  double d = std::get<double>(v_);
  return (d > 0) - (d < 0);
}

Scalar Scalar::abs() const {
  if (is_exact()) return Scalar(Rational(boost::multiprecision::abs(rational())));
  return Scalar::from_double(std::fabs(std::get<double>(v_)));
}

Scalar Scalar::pow_int(long long e) const {
  if (e == 0) return Scalar(1);
  bool invert = e < 0;
  unsigned long long n = invert ? static_cast<unsigned long long>(-(e + 1)) + 1ULL
                                : static_cast<unsigned long long>(e);
  if (invert && sign() == 0) throw std::domain_error("Scalar: negative power of zero");
  if (is_exact()) {
    Rational base = rational();
    Rational acc(1);
    while (n) {
      if (n & 1) acc *= base;
      base *= base;
      n >>= 1;
    }
    if (invert) acc = Rational(1) / acc;
    return Scalar(acc);
  }
  return Scalar::from_double(std::pow(std::get<double>(v_), static_cast<double>(e)));
}

Scalar Scalar::operator-() const {
  if (is_exact()) return Scalar(Rational(-rational()));
  return Scalar::from_double(-std::get<double>(v_));
}

namespace {
template <class Op>
void apply_binary(std::variant<Rational, double>& a, const std::variant<Rational, double>& b,
                  Op op) {
  if (std::holds_alternative<Rational>(a) && std::holds_alternative<Rational>(b)) {
    op(std::get<Rational>(a), std::get<Rational>(b));
  } else {
    double x = std::holds_alternative<Rational>(a) ? std::get<Rational>(a).convert_to<double>()
                                                   : std::get<double>(a);
    double y = std::holds_alternative<Rational>(b) ? std::get<Rational>(b).convert_to<double>()
                                                   : std::get<double>(b);
    op(x, y);
    a = x;
  }
}
}  // namespace

Scalar& Scalar::operator+=(const Scalar& o) {
  apply_binary(v_, o.v_, [](auto& x, const auto& y) { x += y; });
  return *this;
}
Scalar& Scalar::operator-=(const Scalar& o) {
  apply_binary(v_, o.v_, [](auto& x, const auto& y) { x -= y; });
  return *this;
}
Scalar& Scalar::operator*=(const Scalar& o) {
  apply_binary(v_, o.v_, [](auto& x, const auto& y) { x *= y; });
  return *this;
}
Scalar& Scalar::operator/=(const Scalar& o) {
  if (o.sign() == 0 && o.is_exact() && is_exact()) throw std::domain_error("Scalar: division by zero");
  apply_binary(v_, o.v_, [](auto& x, const auto& y) { x /= y; });
  return *this;
}

int Scalar::cmp(const Scalar& a, const Scalar& b) {
  if (a.is_exact() && b.is_exact()) return a.rational().compare(b.rational());
  double x = a.to_double(), y = b.to_double();
  return (x > y) - (x < y);
}

std::string Scalar::str() const {
  if (is_exact()) {
    const Rational& r = rational();
    if (boost::multiprecision::denominator(r) == 1)
      return boost::multiprecision::numerator(r).str();
    return boost::multiprecision::numerator(r).str() + "/" +
           boost::multiprecision::denominator(r).str();
  }
  std::ostringstream os;
  os.precision(std::numeric_limits<double>::max_digits10);
  os << std::get<double>(v_);
  return os.str();
}

namespace {

BigInt parse_bigint(std::string_view s) {
  if (s.empty()) throw std::invalid_argument("Scalar: empty integer literal");
  for (size_t i = 0; i < s.size(); ++i) {
    char c = s[i];
    if ((c == '+' || c == '-') && i == 0 && s.size() > 1) continue;
    if (!std::isdigit(static_cast<unsigned char>(c)))
      throw std::invalid_argument("Scalar: bad integer literal '" + std::string(s) + "'");
  }
  return BigInt(std::string(s));
}

Rational parse_decimal(std::string_view s) {
  // [sign] digits [. digits] [e|E [sign] digits]
  std::string_view mant = s;
  long long exp10 = 0;
  size_t epos = s.find_first_of("eE");
  if (epos != std::string_view::npos) {
    mant = s.substr(0, epos);
    std::string_view es = s.substr(epos + 1);
    if (es.empty()) throw std::invalid_argument("Scalar: bad exponent in '" + std::string(s) + "'");
    auto [p, ec] = std::from_chars(es.data(), es.data() + es.size(), exp10);
    if (ec != std::errc() || p != es.data() + es.size())
      throw std::invalid_argument("Scalar: bad exponent in '" + std::string(s) + "'");
  }
  size_t dot = mant.find('.');
  std::string digits;
  if (dot == std::string_view::npos) {
    digits = std::string(mant);
  } else {
    digits = std::string(mant.substr(0, dot)) + std::string(mant.substr(dot + 1));
    exp10 -= static_cast<long long>(mant.size() - dot - 1);
  }
  if (digits.empty() || digits == "+" || digits == "-")
    throw std::invalid_argument("Scalar: bad numeric literal '" + std::string(s) + "'");
  Rational r(parse_bigint(digits));
  BigInt ten(10);
  if (exp10 >= 0) {
    r *= Rational(boost::multiprecision::pow(ten, static_cast<unsigned>(exp10)));
  } else {
    r /= Rational(boost::multiprecision::pow(ten, static_cast<unsigned>(-exp10)));
  }
  return r;
}

}  // namespace

Scalar Scalar::parse(std::string_view text, ScalarKind mode) {
  size_t b = text.find_first_not_of(" \t");
  size_t e = text.find_last_not_of(" \t\r\n");
  if (b == std::string_view::npos) throw std::invalid_argument("Scalar: empty literal");
  text = text.substr(b, e - b + 1);

  size_t slash = text.find('/');
  if (slash != std::string_view::npos) {
    BigInt num = parse_bigint(text.substr(0, slash));
    BigInt den = parse_bigint(text.substr(slash + 1));
    if (den == 0) throw std::invalid_argument("Scalar: zero denominator");
    Rational r(num, den);
    if (mode == ScalarKind::exact) return Scalar(r);
    return Scalar::from_double(r.convert_to<double>());
  }
  if (mode == ScalarKind::exact) return Scalar(parse_decimal(text));
  std::string tmp(text);
  size_t pos = 0;
  double d = std::stod(tmp, &pos);
  if (pos != tmp.size()) throw std::invalid_argument("Scalar: bad numeric literal '" + tmp + "'");
  return Scalar::from_double(d);
}

BigInt binomial(long long n, long long k) {
  if (k < 0 || k > n) return BigInt(0);
  if (k > n - k) k = n - k;
  BigInt num(1), den(1);
  for (long long i = 0; i < k; ++i) {
    num *= BigInt(n - i);
    den *= BigInt(i + 1);
  }
  return num / den;
}

BigInt factorial(long long n) {
  BigInt r(1);
  for (long long i = 2; i <= n; ++i) r *= i;
  return r;
}

}  // namespace cmseq
