#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

namespace wcr {

using BigInt = boost::multiprecision::number<boost::multiprecision::cpp_int_backend<>,
                                             boost::multiprecision::et_off>;

/// Exact rational, always normalized (lowest terms, positive denominator).
using Rational = boost::multiprecision::number<boost::multiprecision::cpp_rational_backend,
                                               boost::multiprecision::et_off>;

/// Parses "p/q", a signed integer, or an exact decimal such as "-0.125".
/// Throws Error{parse} on anything else, including a zero denominator.
Rational parse_rational(std::string_view text);

/// Canonical text form: "p" for integers, "p/q" otherwise.
std::string to_string(const Rational& value);

bool is_integer(const Rational& value);

/// Throws Error{validation} unless `value` is an integer that fits.
std::int64_t to_int64(const Rational& value);

Rational abs(const Rational& value);

struct RationalInterval {
  Rational lo;
  Rational hi;

  bool exact() const { return lo == hi; }
};

/// sqrt(value) when it is rational, nullopt otherwise. Requires value >= 0.
std::optional<Rational> exact_sqrt(const Rational& value);

/// Rational bounds lo <= sqrt(value) <= hi with hi - lo <= max_width.
RationalInterval sqrt_bounds(const Rational& value, const Rational& max_width);

/// A non-negative length held through its exact square, so that Euclidean
/// distances between rational points compare without rounding.
class Length {
 public:
  Length() = default;

  static Length from_value(const Rational& value);
  static Length from_square(const Rational& square);

  const Rational& square() const { return square_; }

  /// The length itself when it is rational.
  std::optional<Rational> exact() const { return exact_sqrt(square_); }

  /// "3/2" when rational, "sqrt(2)" otherwise.
  std::string to_string() const;

  friend bool operator==(const Length& a, const Length& b) {
    return a.square_ == b.square_;
  }
  friend bool operator<(const Length& a, const Length& b) {
    return a.square_ < b.square_;
  }
  friend bool operator<=(const Length& a, const Length& b) {
    return a.square_ <= b.square_;
  }
  friend bool operator>(const Length& a, const Length& b) { return b < a; }

 private:
  Rational square_{0};
};

}  // namespace wcr
