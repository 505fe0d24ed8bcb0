#include "lnp/gf.hpp"

#include <stdexcept>
#include <string>

namespace lnp {

bool is_prime(int64_t m) {
  if (m < 2) return false;
  if (m % 2 == 0) return m == 2;
  for (int64_t d = 3; d * d <= m; d += 2)
    if (m % d == 0) return false;
  return true;
}

Field::Field(int32_t q) : q_(q) {
  if (!is_prime(q))
    throw std::invalid_argument("Field: characteristic must be prime, got " +
                                std::to_string(q));
}

int32_t Field::inv(int32_t a) const {
  if (a == 0) throw std::domain_error("Field::inv: zero is not invertible");
  // extended Euclid on (a, q)
  int64_t r0 = a, r1 = q_, s0 = 1, s1 = 0;
  while (r1 != 0) {
    int64_t k = r0 / r1;
    int64_t r2 = r0 - k * r1;
    int64_t s2 = s0 - k * s1;
    r0 = r1;
    r1 = r2;
    s0 = s1;
    s1 = s2;
  }
  return reduce(s0);
}

}  // namespace lnp
