#include "forest_trees/exact.hpp"

#include <algorithm>
#include <cctype>

#include "forest_trees/error.hpp"

namespace forest_trees {

std::string to_string(const ExactInt& value) { return value.get_str(10); }

std::string to_string(const ExactRational& value) {
  if (value.get_den() == 1) return value.get_num().get_str(10);
  return value.get_num().get_str(10) + "/" + value.get_den().get_str(10);
}

namespace {

bool is_decimal_integer(std::string_view s) {
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) s.remove_prefix(1);
  return !s.empty() &&
         std::all_of(s.begin(), s.end(), [](unsigned char c) { return std::isdigit(c) != 0; });
}

ExactInt parse_integer(std::string_view s) {
  if (!s.empty() && s.front() == '+') s.remove_prefix(1);
  return ExactInt(std::string(s), 10);
}

}  // namespace

ExactRational parse_rational(std::string_view text) {
  const auto slash = text.find('/');
  const std::string_view num = text.substr(0, slash);
  const std::string_view den = slash == std::string_view::npos ? std::string_view{"1"}
                                                               : text.substr(slash + 1);
  if (!is_decimal_integer(num) || !is_decimal_integer(den))
    throw Error(ErrorKind::ParseError, "not a rational: '" + std::string(text) + "'");
  ExactRational q(parse_integer(num), parse_integer(den));
  if (q.get_den() == 0)
    throw Error(ErrorKind::ParseError, "zero denominator: '" + std::string(text) + "'");
  q.canonicalize();
  return q;
}

bool is_integral(const ExactRational& value) { return value.get_den() == 1; }

ExactInt require_integral(const ExactRational& value, std::string_view what) {
  if (!is_integral(value))
    throw Error(ErrorKind::DivisibilityViolation,
                std::string(what) + " evaluated to non-integer " + to_string(value));
  return value.get_num();
}

ExactInt power(const ExactInt& base, unsigned long exponent) {
  ExactInt out;
  mpz_pow_ui(out.get_mpz_t(), base.get_mpz_t(), exponent);
  return out;
}

ExactRational power(const ExactRational& base, long exponent) {
  if (exponent >= 0) {
    ExactRational out(power(base.get_num(), static_cast<unsigned long>(exponent)),
                      power(base.get_den(), static_cast<unsigned long>(exponent)));
    out.canonicalize();
    return out;
  }
  if (base == 0) throw Error(ErrorKind::SingularPoint, "zero raised to a negative power");
  const auto e = static_cast<unsigned long>(-exponent);
  ExactRational out(power(base.get_den(), e), power(base.get_num(), e));
  out.canonicalize();
  return out;
}

}  // namespace forest_trees
