#include "engel/rational.hpp"

namespace engel {

Rat::Rat(long n, long d) {
  if (d == 0) throw domain_error("rational with zero denominator");
  q_ = mpq_class(n, d);
  q_.canonicalize();
}

Rat Rat::from_decimal_string(const std::string& digits) {
  mpz_class z;
  if (z.set_str(digits, 10) != 0)
    throw domain_error("not a decimal integer literal: '" + digits + "'");
  return Rat(mpq_class(z));
}

Rat Rat::inverse() const {
  if (is_zero()) throw domain_error("inversion of zero");
  return Rat::raw(1 / q_);
}

std::string Rat::str() const {
  if (q_.get_den() == 1) return q_.get_num().get_str();
  return q_.get_num().get_str() + "/" + q_.get_den().get_str();
}

} // namespace engel
