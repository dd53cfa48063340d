#include "moebius/rational.hpp"

#include <iomanip>
#include <sstream>

namespace moebius {

bool is_integer(const Rational& value) { return denominator(value) == 1; }

std::string to_fraction_string(const Rational& value) {
  std::ostringstream out;
  out << numerator(value);
  if (!is_integer(value)) {
    out << '/' << denominator(value);
  }
  return out.str();
}

std::string to_decimal_string(const Rational& value, int significant_digits) {
  std::ostringstream out;
  out << std::setprecision(significant_digits) << value.convert_to<double>();
  return out.str();
}

}  // namespace moebius
