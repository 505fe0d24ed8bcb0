#pragma once

#include <optional>
#include <string>

#include "lnp/algebra.hpp"

namespace lnp {

// span of u v - v u over all ordered basis pairs
Subspace commutator_subspace(const Algebra& a);

// {x : g x = x g for the trivial paths and all arrows}; those generate the
// algebra, so this is the centre
Subspace center(const Algebra& a);

// two-sided annihilator of the radical; the algebra is weakly symmetric,
// so the left and right annihilators agree (verified, disagreement throws)
Subspace socle(const Algebra& a);

// eps^2 + eps^3 p(eps) + sum_{l=0}^{n-3} (-1)^{l+1} abar_l a_l;
// throws when the element fails to commute with some generator
Vec central_element(const Algebra& a);

// powers lambda^s, 0 <= s <= n-1, of the central element are independent
bool central_element_powers_check(const Algebra& a);

// the cosets of e_0..e_{n-1} and the odd loop powers eps^{2l+1},
// 0 <= l <= n-1, form a basis of A/[A,A]
bool coset_basis_check(const Algebra& a, const Subspace& comm);

// the four explicit families land in [A,A], are independent, and their
// count equals dim [A,A]
bool explicit_comm_basis_check(const Algebra& a, const Subspace& comm);

// smallest subspace containing gens and closed under multiplication by
// trivial paths and arrows on both sides
Subspace two_sided_ideal(const Algebra& a, const std::vector<Vec>& gens);

struct ProjectionReport {
  bool well_defined = false;
  bool surjective = false;
  int64_t kernel_dim = -1;
  bool kernel_matches_formula = false;  // 2 (n+1)^2
  bool kernel_is_vertex_ideal = false;  // kernel == ideal generated by e_n
  bool loop_relation_in_ideal = false;  // eps^{2n} lies in that ideal
  bool ok() const {
    return well_defined && surjective && kernel_matches_formula &&
           kernel_is_vertex_ideal && loop_relation_in_ideal;
  }
};

// the quotient map onto the algebra with one vertex fewer: e_n, a_{n-1},
// abar_{n-1} -> 0, every other generator to itself
ProjectionReport projection_check(int32_t n, const DeformationPoly& p,
                                  const Field& field);

// two path identity families evaluated via normal forms: the reversal
// identity for the long closed paths (equality on the nose, not up to
// scalar), and abar_{n-2} ... abar_l a_l = 0
bool word_identities_check(const Algebra& a);

// eps^{2n-1} equals the long closed path a_0 ... a_{n-2} abar_{n-2} ... abar_0 eps
bool long_socle_identity_check(const Algebra& a);

// {eps^l : 0 <= l < 2n} is a basis of e_0 A e_0
bool loop_powers_basis_check(const Algebra& a);

struct StructureReport {
  int32_t n = 0;
  int32_t field_char = 0;
  std::vector<int32_t> p_coeffs;
  int64_t dim_algebra = 0;
  int64_t dim_commutator = 0;
  int64_t dim_center = 0;
  int64_t dim_socle = 0;
  bool coset_basis_ok = false;
  bool explicit_comm_basis_ok = false;
  bool lambda_central_ok = false;
  std::optional<bool> pi_kernel_ok;  // unset when n+1 exceeds engine range
};

StructureReport structure_report(const Algebra& a);
std::string to_json_string(const StructureReport& r);

}  // namespace lnp
