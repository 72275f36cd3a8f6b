#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <optional>
#include <string>
#include <string_view>

namespace qmlab {

using Integer = boost::multiprecision::number<boost::multiprecision::cpp_int_backend<>,
                                              boost::multiprecision::et_off>;
using Rational = boost::multiprecision::number<boost::multiprecision::cpp_rational_backend,
                                               boost::multiprecision::et_off>;

std::string to_string(const Rational& value);
std::string to_string(const Integer& value);

/// Parses "p", "-p" or "p/q".  Throws InputError on anything else.
Rational parse_rational(std::string_view text);

inline Rational abs(const Rational& value) { return value < 0 ? Rational(-value) : value; }

/// An exact value together with a certified error radius.  An absent radius means the
/// error is not certified (for instance because no defect bound was known).
struct Interval {
  Rational center;
  std::optional<Rational> radius;

  bool certified() const { return radius.has_value(); }
  bool contains(const Rational& value) const {
    return radius && abs(value - center) <= *radius;
  }
};

}  // namespace qmlab
