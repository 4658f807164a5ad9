#include "wcr/rational.hpp"

#include <cctype>
#include <limits>

#include "wcr/error.hpp"

namespace wcr {

const char* to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::parse: return "ParseError";
    case ErrorKind::validation: return "ValidationError";
    case ErrorKind::key_mismatch: return "KeyMismatch";
    case ErrorKind::mode: return "ModeError";
    case ErrorKind::infeasible: return "Infeasible";
    case ErrorKind::size_limit: return "SizeLimit";
    case ErrorKind::search_limit: return "SearchLimit";
    case ErrorKind::isolated_vertex: return "IsolatedVertex";
    case ErrorKind::heterogeneous_ranges: return "HeterogeneousRanges";
    case ErrorKind::dialect: return "DialectError";
    case ErrorKind::not_enough_satisfied: return "NotEnoughSatisfied";
    case ErrorKind::inconsistent_solution: return "InconsistentSolution";
    case ErrorKind::unsatisfied_clause: return "UnsatisfiedClause";
    case ErrorKind::not_a_solution: return "NotASolution";
    case ErrorKind::not_gadget_instance: return "NotGadgetInstance";
    case ErrorKind::property_violation: return "PropertyViolation";
  }
  return "Error";
}

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

// The string constructor reads a leading 0 as an octal prefix.
BigInt decimal(std::string_view digits) {
  const auto first = digits.find_first_not_of('0');
  return first == std::string_view::npos ? BigInt(0) : BigInt(std::string(digits.substr(first)));
}

[[noreturn]] void bad_number(std::string_view text) {
  fail(ErrorKind::parse, "not an exact rational: \"" + std::string(text) + "\"");
}

}  // namespace

Rational parse_rational(std::string_view text) {
  std::string_view body = text;
  bool negative = false;
  if (!body.empty() && (body.front() == '-' || body.front() == '+')) {
    negative = body.front() == '-';
    body.remove_prefix(1);
  }

  Rational result;
  if (auto slash = body.find('/'); slash != std::string_view::npos) {
    std::string_view num = body.substr(0, slash);
    std::string_view den = body.substr(slash + 1);
    if (!all_digits(num) || !all_digits(den)) bad_number(text);
    const BigInt d = decimal(den);
    if (d == 0) bad_number(text);
    result = Rational(decimal(num), d);
  } else if (auto dot = body.find('.'); dot != std::string_view::npos) {
    std::string_view whole = body.substr(0, dot);
    std::string_view frac = body.substr(dot + 1);
    if (whole.empty()) whole = "0";
    if (!all_digits(whole) || !all_digits(frac)) bad_number(text);
    BigInt scale = boost::multiprecision::pow(BigInt(10), static_cast<unsigned>(frac.size()));
    result = Rational(decimal(std::string(whole) + std::string(frac)), scale);
  } else {
    if (!all_digits(body)) bad_number(text);
    result = Rational(decimal(body));
  }
  return negative ? Rational(-result) : result;
}

std::string to_string(const Rational& value) {
  const BigInt& num = boost::multiprecision::numerator(value);
  const BigInt& den = boost::multiprecision::denominator(value);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

bool is_integer(const Rational& value) {
  return boost::multiprecision::denominator(value) == 1;
}

std::int64_t to_int64(const Rational& value) {
  if (!is_integer(value)) {
    fail(ErrorKind::validation, "expected an integer, got " + to_string(value));
  }
  const BigInt& num = boost::multiprecision::numerator(value);
  if (num > std::numeric_limits<std::int64_t>::max() ||
      num < std::numeric_limits<std::int64_t>::min()) {
    fail(ErrorKind::validation, "integer out of range: " + num.str());
  }
  return num.convert_to<std::int64_t>();
}

Rational abs(const Rational& value) { return value < 0 ? Rational(-value) : value; }

std::optional<Rational> exact_sqrt(const Rational& value) {
  const BigInt& num = boost::multiprecision::numerator(value);
  const BigInt& den = boost::multiprecision::denominator(value);
  if (num < 0) return std::nullopt;
  BigInt rn = boost::multiprecision::sqrt(num);
  BigInt rd = boost::multiprecision::sqrt(den);
  if (rn * rn != num || rd * rd != den) return std::nullopt;
  return Rational(rn, rd);
}

RationalInterval sqrt_bounds(const Rational& value, const Rational& max_width) {
  if (auto root = exact_sqrt(value)) return {*root, *root};
  // sqrt(p/q) = sqrt(p*q)/q; scale until one integer step is narrow enough.
  const BigInt& num = boost::multiprecision::numerator(value);
  const BigInt& den = boost::multiprecision::denominator(value);
  BigInt scale = 1;
  while (Rational(BigInt(1), den * scale) > max_width) scale *= 2;
  BigInt radicand = num * den * scale * scale;
  BigInt floor_root = boost::multiprecision::sqrt(radicand);
  Rational lo(floor_root, den * scale);
  Rational hi(floor_root + 1, den * scale);
  return {lo, hi};
}

Length Length::from_value(const Rational& value) {
  Length out;
  out.square_ = value * value;
  return out;
}

Length Length::from_square(const Rational& square) {
  Length out;
  out.square_ = square;
  return out;
}

std::string Length::to_string() const {
  if (auto value = exact()) return wcr::to_string(*value);
  return "sqrt(" + wcr::to_string(square_) + ")";
}

}  // namespace wcr
