#pragma once

#include <cstdint>
#include <string>
#include <unordered_map>
#include <vector>

#include "lnp/linalg.hpp"
#include "lnp/quiver.hpp"

namespace lnp {

// closed forms for the algebra and commutator dimensions
int64_t dimension_formula(int32_t n);             // n(n+1)(2n+1)/3
int64_t commutator_dimension_formula(int32_t n);  // n(n-1)(2n+5)/3

// 64-bit path keys hold 4 bits per arrow id, which bounds the
// full-algebra engine; formula and reduced-model routes have no bound
constexpr int32_t kMaxFullAlgebraN = 7;

// Deformation polynomial p(X), dense coefficient list, index = exponent.
struct DeformationPoly {
  std::vector<int32_t> coeffs;

  static DeformationPoly zero() { return {}; }
  static DeformationPoly monomial(int32_t degree);
  int32_t degree() const;  // -1 for the zero polynomial
  DeformationPoly normalized(const Field& f) const;
  bool operator==(const DeformationPoly&) const = default;
};

// Formal K-linear combination of quiver paths.
struct PathSum {
  std::vector<std::pair<Path, int32_t>> terms;
  void add(Path p, int32_t coeff) { terms.emplace_back(std::move(p), coeff); }
};

// The n+1 defining relations: a_i abar_i + abar_{i-1} a_{i-1} for
// 1 <= i <= n-2, then abar_{n-2} a_{n-2}, then eps^{2n}, then
// eps^2 + a_0 abar_0 + eps^3 p(eps). For n = 1 the arrow terms are vacuous
// and the list degenerates to {eps^2, eps^2 + eps^3 p(eps)}.
std::vector<PathSum> relation_elements(int32_t n, const DeformationPoly& p,
                                       const Field& field);

// The deformed preprojective algebra of type L_n over GF(q), built as the
// truncated path algebra on paths of length < 2n modulo the saturated
// relation ideal. The basis consists of the non-pivot paths of the ideal's
// per-block RREF, in deterministic path order, so the basis and all
// coordinates are reproducible bit-exactly across runs.
class Algebra {
 public:
  int32_t n() const { return n_; }
  const Field& field() const { return field_; }
  const DeformationPoly& deformation() const { return p_; }
  const Quiver& quiver() const { return quiver_; }
  int32_t dim() const { return static_cast<int32_t>(basis_.size()); }

  const std::vector<Path>& basis_paths() const { return basis_; }
  int32_t source_of(int32_t k) const { return basis_[k].src; }
  int32_t target_of(int32_t k) const { return basis_[k].tgt; }
  const std::vector<int32_t>& idempotent_positions() const {
    return idem_pos_;
  }

  Vec unit(int32_t k) const;
  Vec one() const;
  Vec idempotent(int32_t vertex) const { return unit(idem_pos_.at(vertex)); }
  Vec arrow(int32_t arrow_id) const;
  Vec loop_power(int32_t e) const;  // eps^e, 0 <= e (zero for e >= 2n)

  Vec multiply(const Vec& x, const Vec& y) const;
  Vec power(const Vec& x, uint64_t e) const;
  Vec normal_form(const PathSum& w) const;
  Vec path_element(const Path& p) const;
  Mat left_mult(const Vec& x) const;
  Mat right_mult(const Vec& x) const;

  const std::vector<std::pair<int32_t, int32_t>>& table(int32_t u,
                                                        int32_t v) const {
    return table_[static_cast<size_t>(u) * basis_.size() + v];
  }

  std::string descriptor_json() const;

 private:
  friend Algebra build_algebra(int32_t n, const DeformationPoly& p,
                               const Field& field);
  Algebra(int32_t n, const DeformationPoly& p, const Field& field);

  Vec reduce_path(int32_t pid) const;  // normal form of a book path

  int32_t n_;
  Field field_;
  DeformationPoly p_;
  Quiver quiver_;

  // truncated path algebra scaffolding
  std::vector<Path> book_;                        // all paths, path_less order
  std::unordered_map<uint64_t, int32_t> pindex_;  // encoded path -> book id
  std::vector<int32_t> block_of_;                 // book id -> i*n+j
  std::vector<int32_t> local_of_;                 // book id -> index in block
  std::vector<std::vector<int32_t>> block_paths_; // block -> book ids
  std::vector<Subspace> ideal_;                   // per-block RREF

  // quotient data
  std::vector<Path> basis_;
  std::vector<int32_t> basis_pos_;  // book id -> basis index or -1
  std::vector<int32_t> idem_pos_;
  std::vector<std::vector<std::pair<int32_t, int32_t>>> table_;

  int32_t book_find(const Path& p) const;
};

// Throws when the computed quotient dimension differs from the closed form.
Algebra build_algebra(int32_t n, const DeformationPoly& p, const Field& field);

// The explicit path family of types (1)-(7): one path per basis slot,
// independent of the deformation polynomial, containing the n socle paths.
std::vector<Path> explicit_path_basis(int32_t n);
// The n closed paths of length 2n-1 (one per vertex) spanning the socle.
std::vector<Path> socle_paths(int32_t n);
// Images of explicit_path_basis in the algebra; throws if they fail to be
// a basis.
std::vector<Vec> explicit_basis_elements(const Algebra& a);

// Entry (i,j) counts basis elements with source i and target j.
std::vector<std::vector<int64_t>> cartan_matrix(const Algebra& a);
int64_t matrix_determinant(std::vector<std::vector<int64_t>> m);  // Bareiss

// (u v) w == u (v w); exhaustive when sample_triples == 0, otherwise that
// many pseudo-random triples of basis-vector combinations.
bool check_associativity(const Algebra& a, uint64_t sample_triples = 0,
                         uint64_t seed = 1);
// e_i x e_j == x for basis x with grade (i,j), and 1 x == x == x 1.
bool check_grading(const Algebra& a);

}  // namespace lnp
