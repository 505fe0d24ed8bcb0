#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "lnp/gf.hpp"

namespace lnp {

// Coordinate vector over GF(q), entries are canonical residues.
using Vec = std::vector<int32_t>;

// Dense matrix over GF(q), row major. Acts on column vectors: y = apply(x),
// so cols() is the domain dimension and rows() the codomain dimension.
class Mat {
 public:
  Mat(const Field& f, size_t rows, size_t cols);
  static Mat identity(const Field& f, size_t dim);
  static Mat from_rows(const Field& f, const std::vector<Vec>& rows);

  size_t rows() const { return rows_; }
  size_t cols() const { return cols_; }
  const Field& field() const { return f_; }

  int32_t at(size_t r, size_t c) const { return a_[r * cols_ + c]; }
  void set(size_t r, size_t c, int32_t v) { a_[r * cols_ + c] = v; }

  Vec row(size_t r) const;
  Vec col(size_t c) const;
  void set_col(size_t c, const Vec& v);

  Vec apply(const Vec& x) const;
  Mat mul(const Mat& o) const;
  Mat add(const Mat& o) const;
  Mat sub(const Mat& o) const;
  Mat transpose() const;
  Mat pow(uint32_t e) const;  // square matrices only
  size_t rank() const;
  std::optional<Mat> inverse() const;
  // one solution of  this * x = b, if any
  std::optional<Vec> solve(const Vec& b) const;

  bool operator==(const Mat& o) const;

 private:
  Field f_;
  size_t rows_, cols_;
  std::vector<int32_t> a_;
};

// Which row representation a Subspace uses internally. Auto selects the
// bit-packed GF(2) kernel when q == 2; Generic forces dense residue rows
// (used to cross-check the two paths against each other).
enum class RowLayout { Auto, Generic, Packed };

// A linear subspace of F^ambient held as its reduced row-echelon basis.
// Rows are kept fully reduced at all times, so basis() is the canonical
// RREF of the span: equal subspaces produce identical rows in identical
// order. Pivoting is leftmost-column.
class Subspace {
 public:
  Subspace(const Field& f, size_t ambient, RowLayout layout = RowLayout::Auto);

  size_t ambient() const { return ambient_; }
  size_t rank() const { return pivots_.size(); }
  const Field& field() const { return f_; }

  // Adds v to the span; returns true if the rank grew.
  bool insert(const Vec& v);
  // Residual of v after elimination against the basis. Zero iff v is in
  // the span; otherwise the normal form of v modulo the span, supported
  // on non-pivot coordinates.
  Vec reduce(Vec v) const;
  bool contains(const Vec& v) const;
  bool contains(const Subspace& o) const;

  const std::vector<size_t>& pivots() const { return pivots_; }
  std::vector<size_t> free_coords() const;  // complement of pivots()
  std::vector<Vec> basis() const;           // RREF rows, ascending pivot

  bool operator==(const Subspace& o) const;

 private:
  Field f_;
  size_t ambient_;
  bool packed_;
  size_t words_;
  std::vector<std::vector<uint64_t>> bit_rows_;
  std::vector<Vec> gen_rows_;
  std::vector<size_t> pivots_;  // ascending, parallel to the row store
};

// Row span of the given vectors. Throws on ragged rows.
Subspace rref(const Field& f, const std::vector<Vec>& rows,
              RowLayout layout = RowLayout::Auto);

// {x : m x = 0}
Subspace kernel(const Mat& m);
// {x : m x in s}; requires m.rows() == s.ambient()
Subspace preimage(const Mat& m, const Subspace& s);
Subspace intersect(const Subspace& s1, const Subspace& s2);
Subspace add(const Subspace& s1, const Subspace& s2);
bool member(const Vec& v, const Subspace& s);

// The linear map x -> s.reduce(x) as an ambient x ambient matrix.
Mat residual_map(const Subspace& s);

}  // namespace lnp
