#pragma once

#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

namespace memlearn {

using Rational = boost::multiprecision::cpp_rational;

// Accepts "7", "-3/2", "1.25", "+0.5". Decimal input is read as an exact
// fraction. Throws ValidationError on anything else.
Rational parse_rational(std::string_view text);

// Canonical form: "7", "-3/2".
std::string to_string(const Rational& value);

// Terminating decimals are written exactly ("1.25"); other values fall back
// to the fraction form.
std::string to_decimal_string(const Rational& value);

bool is_integer(const Rational& value);

}  // namespace memlearn
