#pragma once

#include <cstdint>

namespace lnp {

bool is_prime(int64_t m);

// Arithmetic in the prime field GF(q). Elements are canonical residues
// in [0, q); all operations are exact, no floating point anywhere.
class Field {
 public:
  explicit Field(int32_t q);

  int32_t q() const { return q_; }

  int32_t add(int32_t a, int32_t b) const {
    int32_t s = a + b;
    return s >= q_ ? s - q_ : s;
  }
  int32_t sub(int32_t a, int32_t b) const {
    int32_t s = a - b;
    return s < 0 ? s + q_ : s;
  }
  int32_t neg(int32_t a) const { return a == 0 ? 0 : q_ - a; }
  int32_t mul(int32_t a, int32_t b) const {
    return static_cast<int32_t>(static_cast<int64_t>(a) * b % q_);
  }
  int32_t inv(int32_t a) const;

  // canonical residue of an arbitrary integer
  int32_t reduce(int64_t a) const {
    int64_t r = a % q_;
    return static_cast<int32_t>(r < 0 ? r + q_ : r);
  }

  bool operator==(const Field& o) const { return q_ == o.q_; }

 private:
  int32_t q_;
};

}  // namespace lnp
