#include "stpath/rational.hpp"

#include <stdexcept>

namespace stpath {

std::string to_fraction_string(const Rational& r) {
  return r.get_num().get_str() + "/" + r.get_den().get_str();
}

Rational parse_fraction(std::string_view text) {
  const std::string s(text);
  if (s.empty() || s.find_first_of(" \t\n") != std::string::npos)
    throw std::invalid_argument("malformed rational '" + s + "'");
  Rational r;
  if (r.set_str(s, 10) != 0) throw std::invalid_argument("malformed rational '" + s + "'");
  if (r.get_den() == 0) throw std::invalid_argument("zero denominator in '" + s + "'");
  r.canonicalize();
  return r;
}

double to_double(const Rational& r) { return r.get_d(); }

}  // namespace stpath
