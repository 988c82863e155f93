#ifndef SETCALC_RATIONAL_HPP
#define SETCALC_RATIONAL_HPP

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <string>

#include "setcalc/errors.hpp"

namespace setcalc {

using BigInt = boost::multiprecision::cpp_int;

// Exact non-negative fraction, always reduced, denominator positive.
// Every ratio in the library (growth ratios, hypothesis constants, bounds,
// slack) is one of these; no floating point enters any comparison.
class Rational {
 public:
  Rational() : num_(0), den_(1) {}
  Rational(BigInt num, BigInt den) : num_(std::move(num)), den_(std::move(den)) {
    normalize();
  }
  Rational(std::int64_t n) : num_(n), den_(1) {  // NOLINT: implicit by design
    if (n < 0) fail(errc::parse, "rational must be non-negative");
  }

  const BigInt& num() const { return num_; }
  const BigInt& den() const { return den_; }

  bool is_integer() const { return den_ == 1; }
  bool is_zero() const { return num_ == 0; }

  friend Rational operator+(const Rational& a, const Rational& b) {
    return Rational(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
  }
  friend Rational operator*(const Rational& a, const Rational& b) {
    return Rational(a.num_ * b.num_, a.den_ * b.den_);
  }
  friend Rational operator/(const Rational& a, const Rational& b) {
    if (b.num_ == 0) fail(errc::empty_set, "division by zero rational");
    return Rational(a.num_ * b.den_, a.den_ * b.num_);
  }

  friend bool operator==(const Rational& a, const Rational& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend bool operator!=(const Rational& a, const Rational& b) { return !(a == b); }
  friend bool operator<(const Rational& a, const Rational& b) {
    return a.num_ * b.den_ < b.num_ * a.den_;
  }
  friend bool operator<=(const Rational& a, const Rational& b) {
    return a.num_ * b.den_ <= b.num_ * a.den_;
  }
  friend bool operator>(const Rational& a, const Rational& b) { return b < a; }
  friend bool operator>=(const Rational& a, const Rational& b) { return b <= a; }

  Rational pow(unsigned e) const {
    Rational r(1);
    Rational base = *this;
    while (e != 0) {
      if (e & 1u) r = r * base;
      base = base * base;
      e >>= 1u;
    }
    return r;
  }

  // "4/3"; integers render without the denominator.
  std::string str() const;

  // Decimal rendering to `digits` significant digits, round half up.
  // Deterministic integer long division; used for report output only.
  std::string decimal(int digits = 6) const;

 private:
  void normalize() {
    if (den_ == 0) fail(errc::parse, "rational with zero denominator");
    if (den_ < 0 || num_ < 0) fail(errc::parse, "rational must be non-negative");
    BigInt g = boost::multiprecision::gcd(num_, den_);
    if (g > 1) {
      num_ /= g;
      den_ /= g;
    }
    if (num_ == 0) den_ = 1;
  }

  BigInt num_;
  BigInt den_;
};

inline Rational ratio_of(std::int64_t num, std::int64_t den) {
  return Rational(BigInt(num), BigInt(den));
}

inline std::string Rational::str() const {
  std::string s = num_.str();
  if (den_ != 1) {
    s += '/';
    s += den_.str();
  }
  return s;
}

inline std::string Rational::decimal(int digits) const {
  if (digits < 1) digits = 1;
  if (num_ == 0) return "0";
  // Scale so the quotient carries `digits` significant digits, then one
  // extra for rounding.
  BigInt n = num_;
  int exp10 = 0;  // value = (n/den) * 10^exp10 as we shift below
  while (n < den_) {
    n *= 10;
    --exp10;
  }
  BigInt q = n / den_;
  int qdigits = static_cast<int>(q.str().size());
  int shift = digits + 1 - qdigits;
  for (int i = 0; i < shift; ++i) {
    n *= 10;
    --exp10;
  }
  q = n / den_;
  // Round half up on the extra digit.
  q = (q + 5) / 10;
  ++exp10;
  std::string ds = q.str();
  // Strip trailing zeros (they carry no information after rounding).
  int point = static_cast<int>(ds.size()) + exp10;  // digits before the point
  while (ds.size() > 1 && ds.back() == '0' &&
         static_cast<int>(ds.size()) > point) {
    ds.pop_back();
  }
  std::string out;
  if (point <= 0) {
    out = "0.";
    out.append(static_cast<size_t>(-point), '0');
    out += ds;
  } else if (point >= static_cast<int>(ds.size())) {
    out = ds;
    out.append(static_cast<size_t>(point - static_cast<int>(ds.size())), '0');
  } else {
    out = ds.substr(0, static_cast<size_t>(point)) + "." +
          ds.substr(static_cast<size_t>(point));
  }
  return out;
}

}  // namespace setcalc

#endif
