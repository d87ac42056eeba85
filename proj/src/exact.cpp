#include "symobs/exact.hpp"

namespace symobs {

std::string to_string(const GaussRational& z) {
  if (z.is_real()) return z.re.get_str();
  if (sgn(z.re) == 0) return z.im.get_str() + "i";
  std::string im = z.im.get_str();
  return z.re.get_str() + (sgn(z.im) > 0 ? "+" : "") + im + "i";
}

std::ostream& operator<<(std::ostream& os, const GaussRational& z) { return os << to_string(z); }

}  // namespace symobs
