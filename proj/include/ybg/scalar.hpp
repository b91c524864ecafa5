#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>
#include <string_view>

#include "ybg/error.hpp"

namespace ybg {

using Rational = boost::multiprecision::cpp_rational;
using BigInt = boost::multiprecision::cpp_int;

// Element of Q(i): exact complex number with rational real and imaginary
// parts. cpp_rational keeps numerator/denominator reduced with positive
// denominator, so operator== is structural equality.
struct Scalar {
  Rational re{};
  Rational im{};

  Scalar() = default;
  Scalar(int v) : re(v) {}  // NOLINT: implicit by design, mirrors field literals
  Scalar(long v) : re(v) {}
  Scalar(Rational r) : re(std::move(r)) {}
  Scalar(Rational r, Rational i) : re(std::move(r)), im(std::move(i)) {}

  bool is_zero() const { return re == 0 && im == 0; }
  bool is_real() const { return im == 0; }

  friend bool operator==(const Scalar&, const Scalar&) = default;
};

Scalar operator+(const Scalar& a, const Scalar& b);
Scalar operator-(const Scalar& a, const Scalar& b);
Scalar operator-(const Scalar& a);
Scalar operator*(const Scalar& a, const Scalar& b);
Scalar operator/(const Scalar& a, const Scalar& b);  // DivisionByZero if b = 0

Scalar& operator+=(Scalar& a, const Scalar& b);
Scalar& operator-=(Scalar& a, const Scalar& b);
Scalar& operator*=(Scalar& a, const Scalar& b);

Scalar inverse(const Scalar& a);  // DivisionByZero if a = 0

// Canonical "p/q" with q > 0 and gcd(p, q) = 1; the denominator is always
// printed ("0/1", "5/1", "-23/7").
std::string rational_to_string(const Rational& r);
Rational rational_from_string(std::string_view s);  // ParseError

std::string to_string(const Scalar& s);

inline Scalar scalar(long num, long den = 1) { return Scalar(Rational(num, den)); }

}  // namespace ybg
