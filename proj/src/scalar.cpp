#include "hkt/scalar.hpp"

#include <ostream>

namespace hkt {

std::string rational_str(const Rational& r) {
  if (r.get_den() == 1) return r.get_num().get_str();
  return r.get_num().get_str() + "/" + r.get_den().get_str();
}

std::string Scalar::str() const {
  if (im == 0) return rational_str(re);
  std::string s;
  if (re != 0) {
    s = rational_str(re);
    if (im > 0) s += "+";
  }
  if (im == 1) {
    s += "i";
  } else if (im == -1) {
    s += "-i";
  } else {
    s += rational_str(im) + "i";
  }
  return s;
}

Rational parse_rational(std::string_view text) {
  if (text.empty()) throw std::invalid_argument("empty rational");
  std::string s(text);
  for (char c : s) {
    if (!(std::isdigit(static_cast<unsigned char>(c)) || c == '-' ||
          c == '+' || c == '/'))
      throw std::invalid_argument("malformed rational: " + s);
  }
  try {
    Rational r(s);
    if (r.get_den() == 0)
      throw std::invalid_argument("zero denominator: " + s);
    r.canonicalize();
    return r;
  } catch (const std::exception&) {
    throw std::invalid_argument("malformed rational: " + s);
  }
}

std::ostream& operator<<(std::ostream& os, const Scalar& s) {
  return os << s.str();
}

}  // namespace hkt
