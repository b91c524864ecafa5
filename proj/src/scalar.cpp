#include "ybg/scalar.hpp"

#include <cctype>

namespace ybg {

const char* errc_name(Errc c) {
  switch (c) {
    case Errc::DivisionByZero: return "DivisionByZero";
    case Errc::DegenerateInput: return "DegenerateInput";
    case Errc::ZeroN: return "ZeroN";
    case Errc::DimensionMismatch: return "DimensionMismatch";
    case Errc::NotComposable: return "NotComposable";
    case Errc::CZero: return "CZero";
    case Errc::DerivedCZero: return "DerivedCZero";
    case Errc::NotFreeFermionic: return "NotFreeFermionic";
    case Errc::NotInOmega: return "NotInOmega";
    case Errc::NotBoundary: return "NotBoundary";
    case Errc::ZeroLabel: return "ZeroLabel";
    case Errc::ObjectMismatch: return "ObjectMismatch";
    case Errc::NotInPhi: return "NotInPhi";
    case Errc::NotInPhiB: return "NotInPhiB";
    case Errc::ExhaustedRetries: return "ExhaustedRetries";
    case Errc::TagMismatch: return "TagMismatch";
    case Errc::IndexOutOfRange: return "IndexOutOfRange";
    case Errc::SizeCap: return "SizeCap";
    case Errc::ParseError: return "ParseError";
    case Errc::InvalidElement: return "InvalidElement";
  }
  return "UnknownError";
}

Scalar operator+(const Scalar& a, const Scalar& b) { return {a.re + b.re, a.im + b.im}; }
Scalar operator-(const Scalar& a, const Scalar& b) { return {a.re - b.re, a.im - b.im}; }
Scalar operator-(const Scalar& a) { return {-a.re, -a.im}; }

Scalar operator*(const Scalar& a, const Scalar& b) {
  return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
}

Scalar inverse(const Scalar& a) {
  if (a.is_zero()) fail(Errc::DivisionByZero, "inverse of zero");
  Rational n = a.re * a.re + a.im * a.im;
  return {a.re / n, -a.im / n};
}

Scalar operator/(const Scalar& a, const Scalar& b) {
  if (b.is_zero()) fail(Errc::DivisionByZero, "division by zero");
  return a * inverse(b);
}

Scalar& operator+=(Scalar& a, const Scalar& b) { a = a + b; return a; }
Scalar& operator-=(Scalar& a, const Scalar& b) { a = a - b; return a; }
Scalar& operator*=(Scalar& a, const Scalar& b) { a = a * b; return a; }

std::string rational_to_string(const Rational& r) {
  return numerator(r).str() + "/" + denominator(r).str();
}

Rational rational_from_string(std::string_view s) {
  auto is_int = [](std::string_view t) {
    if (!t.empty() && (t.front() == '+' || t.front() == '-')) t.remove_prefix(1);
    if (t.empty()) return false;
    for (char c : t)
      if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    return true;
  };
  std::string_view num = s, den = "1";
  if (auto slash = s.find('/'); slash != std::string_view::npos) {
    num = s.substr(0, slash);
    den = s.substr(slash + 1);
  }
  if (!is_int(num) || !is_int(den))
    fail(Errc::ParseError, "bad rational '" + std::string(s) + "'");
  if (!num.empty() && num.front() == '+') num.remove_prefix(1);
  if (!den.empty() && den.front() == '+') den.remove_prefix(1);
  BigInt n{std::string(num)};
  BigInt d{std::string(den)};
  if (d == 0) fail(Errc::ParseError, "zero denominator in '" + std::string(s) + "'");
  return Rational(n, d);
}

std::string to_string(const Scalar& s) {
  if (s.im == 0) return rational_to_string(s.re);
  return rational_to_string(s.re) + (s.im > 0 ? "+" : "") + rational_to_string(s.im) + "i";
}

}  // namespace ybg
