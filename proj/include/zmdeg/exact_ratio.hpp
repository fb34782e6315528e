#pragma once

#include <compare>
#include <ostream>
#include <stdexcept>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

#include "zmdeg/arith.hpp"

namespace zmdeg {

/// Reduced rational with arbitrary-precision numerator and a positive
/// denominator. Degrees are always carried as ExactRatio, never as floats.
class ExactRatio {
 public:
  using Integer = boost::multiprecision::cpp_int;

  ExactRatio() = default;
  ExactRatio(const Integer& value) : value_(value) {}  // NOLINT(google-explicit-constructor)
  ExactRatio(const Integer& numerator, const Integer& denominator) {
    if (denominator == 0) throw std::domain_error("ExactRatio: zero denominator");
    value_ = Rational(numerator, denominator);
  }

  Integer numerator() const { return boost::multiprecision::numerator(value_); }
  Integer denominator() const { return boost::multiprecision::denominator(value_); }

  bool is_integer() const { return denominator() == 1; }

  /// Always "p/q", including "1/1" for integers.
  std::string str() const { return numerator().str() + "/" + denominator().str(); }

  /// Parses "p/q" or a plain integer.
  static ExactRatio parse(const std::string& text) {
    const auto slash = text.find('/');
    try {
      if (slash == std::string::npos) return ExactRatio(Integer(text));
      return ExactRatio(Integer(text.substr(0, slash)), Integer(text.substr(slash + 1)));
    } catch (const std::runtime_error&) {
      throw std::invalid_argument("ExactRatio::parse: malformed rational '" + text + "'");
    }
  }

  /// Display-only decimal rounded half-up to `places` digits.
  std::string decimal(unsigned places = 6) const {
    Integer scale = boost::multiprecision::pow(Integer(10), places);
    Integer num = numerator();
    const bool negative = num < 0;
    if (negative) num = -num;
    Integer scaled = (num * scale * 2 + denominator()) / (denominator() * 2);
    Integer whole = scaled / scale;
    std::string frac = Integer(scaled % scale).str();
    frac.insert(0, places - frac.size(), '0');
    std::string out = (negative ? "-" : "") + whole.str();
    if (places > 0) out += "." + frac;
    return out;
  }

  friend ExactRatio operator+(const ExactRatio& a, const ExactRatio& b) { return from(Rational(a.value_ + b.value_)); }
  friend ExactRatio operator-(const ExactRatio& a, const ExactRatio& b) { return from(Rational(a.value_ - b.value_)); }
  friend ExactRatio operator*(const ExactRatio& a, const ExactRatio& b) { return from(Rational(a.value_ * b.value_)); }
  friend ExactRatio operator/(const ExactRatio& a, const ExactRatio& b) {
    if (b.value_ == 0) throw std::domain_error("ExactRatio: division by zero");
    return from(Rational(a.value_ / b.value_));
  }

  friend bool operator==(const ExactRatio& a, const ExactRatio& b) { return a.value_ == b.value_; }
  friend std::strong_ordering operator<=>(const ExactRatio& a, const ExactRatio& b) {
    if (a.value_ < b.value_) return std::strong_ordering::less;
    if (a.value_ > b.value_) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
  }

  friend std::ostream& operator<<(std::ostream& os, const ExactRatio& q) { return os << q.str(); }

 private:
  using Rational = boost::multiprecision::cpp_rational;
  static ExactRatio from(Rational value) {
    ExactRatio q;
    q.value_ = std::move(value);
    return q;
  }

  Rational value_{0};
};

}  // namespace zmdeg
