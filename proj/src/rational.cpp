#include "wph/rational.hpp"

#include <limits>
#include <stdexcept>

namespace wph {

std::string rational_string(const Rational& r) {
  if (r.get_den() == 1) return r.get_num().get_str();
  return r.get_num().get_str() + "/" + r.get_den().get_str();
}

bool is_integer(const Rational& r) { return r.get_den() == 1; }

long long to_long(const Rational& r) {
  if (!is_integer(r)) throw std::overflow_error("rational is not integral");
  const Integer& n = r.get_num();
  if (!n.fits_slong_p()) throw std::overflow_error("integer out of range");
  long v = n.get_si();
  return static_cast<long long>(v);
}

}  // namespace wph
