#pragma once

#include <cstdint>
#include <optional>

#include "lnp/algebra.hpp"

namespace lnp {

// Element of F_2[x]/(x^{2n}); the coefficient vector always has length
// exactly 2n.
class TruncPoly {
 public:
  explicit TruncPoly(int32_t n);
  static TruncPoly monomial(int32_t n, int64_t e);  // x^e, zero for e >= 2n

  int32_t n() const { return n_; }
  bool is_zero() const;
  const std::vector<uint8_t>& coeffs() const { return c_; }

  TruncPoly add(const TruncPoly& o) const;
  TruncPoly mul(const TruncPoly& o) const;
  TruncPoly pow(uint64_t e) const;
  Vec to_vec() const;

  bool operator==(const TruncPoly&) const = default;

 private:
  int32_t n_;
  std::vector<uint8_t> c_;
};

// C(m, u) odd, by base-2 digit domination; throws for u > m.
bool odd_binomial(uint64_t m, uint64_t u);

struct InvariantFormula {
  int64_t value;  // n - k0
  int64_t k0;
};

// dim T_i - dim [A,A] for the deformation X^{2j} in characteristic 2:
// n - max(ceil((2n - (2^{i+1}-2) j - (2^{i+1}-1)) / 2^{i+1}), 0); i >= 1.
InvariantFormula closed_form(int64_t n, int64_t j, int32_t i);

// The same codimension from the model in F_2[x]/(x^{2n}): the dimension of
// {v in span{x^{2k+1}} : v^{2^i} in span{(x^2+x^{2j+3})^m, 1 <= m <= n-1}},
// computed by brute-force linear algebra; i >= 1.
int64_t reduced_model_dim(int64_t n, int64_t j, int32_t i);

// The squaring map induced on A/[A,A] over GF(2). Well-definedness is
// verified by squaring a spanning set of [A,A] back into [A,A].
struct CommutatorQuotient {
  Subspace comm;
  std::vector<size_t> rep_coords;  // coset representative coordinates
  Mat projection;                  // A -> A/[A,A]
  Mat square_map;
};

CommutatorQuotient power_map_mod_commutator(const Algebra& a);

// T_i(A) = {x : x^{2^i} in [A,A]}: the full preimage in A of the kernel of
// the i-fold iterate of the induced squaring. T_0 is [A,A] itself.
Subspace kulshammer_space(const Algebra& a, const CommutatorQuotient& q,
                          int32_t i);
Subspace kulshammer_space(const Algebra& a, int32_t i);

// j with p = X^{2j}, when the deformation has that shape
std::optional<int32_t> even_monomial_half_exponent(const DeformationPoly& p);

struct KulshammerResult {
  int32_t n = 0, j = 0, i = 0;
  int64_t dim_t_full = -1;  // -1 when the full-algebra route was skipped
  int64_t dim_t_reduced_plus_comm = 0;
  int64_t closed_form_plus_comm = 0;
  int64_t k0 = 0;
  bool agree() const {
    return (dim_t_full < 0 || dim_t_full == closed_form_plus_comm) &&
           dim_t_reduced_plus_comm == closed_form_plus_comm;
  }
};

// Evaluates all three routes (full route only when alg != nullptr, which
// requires alg to be the GF(2) algebra with deformation X^{2j}).
KulshammerResult kulshammer_result(int32_t n, int32_t j, int32_t i,
                                   const Algebra* alg,
                                   const CommutatorQuotient* q);

}  // namespace lnp
