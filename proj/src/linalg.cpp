#include "lnp/linalg.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

namespace lnp {

// ---------------------------------------------------------------------------
// Mat

Mat::Mat(const Field& f, size_t rows, size_t cols)
    : f_(f), rows_(rows), cols_(cols), a_(rows * cols, 0) {}

Mat Mat::identity(const Field& f, size_t dim) {
  Mat m(f, dim, dim);
  for (size_t i = 0; i < dim; ++i) m.set(i, i, 1);
  return m;
}

Mat Mat::from_rows(const Field& f, const std::vector<Vec>& rows) {
  const size_t cols = rows.empty() ? 0 : rows.front().size();
  Mat m(f, rows.size(), cols);
  for (size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != cols)
      throw std::invalid_argument("Mat::from_rows: ragged rows");
    for (size_t c = 0; c < cols; ++c) m.set(r, c, rows[r][c]);
  }
  return m;
}

Vec Mat::row(size_t r) const {
  return Vec(a_.begin() + r * cols_, a_.begin() + (r + 1) * cols_);
}

Vec Mat::col(size_t c) const {
  Vec v(rows_);
  for (size_t r = 0; r < rows_; ++r) v[r] = at(r, c);
  return v;
}

void Mat::set_col(size_t c, const Vec& v) {
  if (v.size() != rows_) throw std::invalid_argument("Mat::set_col: bad size");
  for (size_t r = 0; r < rows_; ++r) set(r, c, v[r]);
}

Vec Mat::apply(const Vec& x) const {
  if (x.size() != cols_)
    throw std::invalid_argument("Mat::apply: dimension mismatch");
  Vec y(rows_, 0);
  for (size_t r = 0; r < rows_; ++r) {
    int64_t acc = 0;
    const int32_t* row = a_.data() + r * cols_;
    for (size_t c = 0; c < cols_; ++c) {
      acc += static_cast<int64_t>(row[c]) * x[c];
      if (acc > (int64_t{1} << 60)) acc %= f_.q();
    }
    y[r] = f_.reduce(acc);
  }
  return y;
}

Mat Mat::mul(const Mat& o) const {
  if (cols_ != o.rows_)
    throw std::invalid_argument("Mat::mul: dimension mismatch");
  Mat out(f_, rows_, o.cols_);
  for (size_t r = 0; r < rows_; ++r)
    for (size_t k = 0; k < cols_; ++k) {
      const int32_t v = at(r, k);
      if (v == 0) continue;
      for (size_t c = 0; c < o.cols_; ++c)
        out.set(r, c, f_.reduce(out.at(r, c) +
                                static_cast<int64_t>(v) * o.at(k, c)));
    }
  return out;
}

Mat Mat::add(const Mat& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_)
    throw std::invalid_argument("Mat::add: dimension mismatch");
  Mat out(f_, rows_, cols_);
  for (size_t i = 0; i < a_.size(); ++i) out.a_[i] = f_.add(a_[i], o.a_[i]);
  return out;
}

Mat Mat::sub(const Mat& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_)
    throw std::invalid_argument("Mat::sub: dimension mismatch");
  Mat out(f_, rows_, cols_);
  for (size_t i = 0; i < a_.size(); ++i) out.a_[i] = f_.sub(a_[i], o.a_[i]);
  return out;
}

Mat Mat::transpose() const {
  Mat out(f_, cols_, rows_);
  for (size_t r = 0; r < rows_; ++r)
    for (size_t c = 0; c < cols_; ++c) out.set(c, r, at(r, c));
  return out;
}

Mat Mat::pow(uint32_t e) const {
  if (rows_ != cols_) throw std::invalid_argument("Mat::pow: square only");
  Mat acc = identity(f_, rows_);
  Mat base = *this;
  while (e) {
    if (e & 1) acc = acc.mul(base);
    e >>= 1;
    if (e) base = base.mul(base);
  }
  return acc;
}

size_t Mat::rank() const {
  std::vector<Vec> rs;
  rs.reserve(rows_);
  for (size_t r = 0; r < rows_; ++r) rs.push_back(row(r));
  return rref(f_, rs).rank();
}

std::optional<Mat> Mat::inverse() const {
  if (rows_ != cols_) return std::nullopt;
  // Gauss-Jordan on [this | I]
  const size_t d = rows_;
  std::vector<Vec> aug(d, Vec(2 * d, 0));
  for (size_t r = 0; r < d; ++r) {
    for (size_t c = 0; c < d; ++c) aug[r][c] = at(r, c);
    aug[r][d + r] = 1;
  }
  size_t rank = 0;
  for (size_t col = 0; col < d && rank < d; ++col) {
    size_t sel = rank;
    while (sel < d && aug[sel][col] == 0) ++sel;
    if (sel == d) continue;
    std::swap(aug[sel], aug[rank]);
    const int32_t piv_inv = f_.inv(aug[rank][col]);
    for (auto& x : aug[rank]) x = f_.mul(x, piv_inv);
    for (size_t r = 0; r < d; ++r) {
      if (r == rank || aug[r][col] == 0) continue;
      const int32_t c0 = aug[r][col];
      for (size_t c = 0; c < 2 * d; ++c)
        aug[r][c] = f_.sub(aug[r][c], f_.mul(c0, aug[rank][c]));
    }
    ++rank;
  }
  if (rank < d) return std::nullopt;
  Mat inv(f_, d, d);
  for (size_t r = 0; r < d; ++r)
    for (size_t c = 0; c < d; ++c) inv.set(r, c, aug[r][d + c]);
  return inv;
}

std::optional<Vec> Mat::solve(const Vec& b) const {
  if (b.size() != rows_) throw std::invalid_argument("Mat::solve: bad rhs");
  std::vector<Vec> aug(rows_, Vec(cols_ + 1, 0));
  for (size_t r = 0; r < rows_; ++r) {
    for (size_t c = 0; c < cols_; ++c) aug[r][c] = at(r, c);
    aug[r][cols_] = b[r];
  }
  Subspace s = rref(f_, aug, RowLayout::Generic);
  Vec x(cols_, 0);
  const auto rows = s.basis();
  const auto& piv = s.pivots();
  for (size_t i = 0; i < rows.size(); ++i) {
    if (piv[i] == cols_) return std::nullopt;  // inconsistent system
    x[piv[i]] = rows[i][cols_];
  }
  // free coordinates stay zero; verify (cheap, catches misuse)
  if (apply(x) != b) return std::nullopt;
  return x;
}

bool Mat::operator==(const Mat& o) const {
  return rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_;
}

// ---------------------------------------------------------------------------
// Subspace

Subspace::Subspace(const Field& f, size_t ambient, RowLayout layout)
    : f_(f),
      ambient_(ambient),
      packed_(layout == RowLayout::Packed ||
              (layout == RowLayout::Auto && f.q() == 2)),
      words_((ambient + 63) / 64) {
  if (packed_ && f_.q() != 2)
    throw std::invalid_argument("Subspace: packed layout requires GF(2)");
}

namespace {

size_t bit_pivot(const std::vector<uint64_t>& row) {
  for (size_t w = 0; w < row.size(); ++w)
    if (row[w]) return w * 64 + static_cast<size_t>(std::countr_zero(row[w]));
  return static_cast<size_t>(-1);
}

}  // namespace

bool Subspace::insert(const Vec& v) {
  if (v.size() != ambient_)
    throw std::invalid_argument("Subspace::insert: dimension mismatch");
  if (packed_) {
    std::vector<uint64_t> row(words_, 0);
    for (size_t c = 0; c < ambient_; ++c) {
      if (v[c] & 1) row[c / 64] ^= uint64_t{1} << (c % 64);
    }
    // forward elimination
    for (size_t i = 0; i < pivots_.size(); ++i) {
      const size_t p = pivots_[i];
      if (row[p / 64] >> (p % 64) & 1) {
        const auto& bi = bit_rows_[i];
        for (size_t w = 0; w < words_; ++w) row[w] ^= bi[w];
      }
    }
    const size_t p = bit_pivot(row);
    if (p == static_cast<size_t>(-1)) return false;
    // back substitution keeps the stored rows fully reduced
    for (size_t i = 0; i < pivots_.size(); ++i) {
      if (bit_rows_[i][p / 64] >> (p % 64) & 1)
        for (size_t w = 0; w < words_; ++w) bit_rows_[i][w] ^= row[w];
    }
    const auto pos = std::lower_bound(pivots_.begin(), pivots_.end(), p);
    const size_t idx = static_cast<size_t>(pos - pivots_.begin());
    pivots_.insert(pos, p);
    bit_rows_.insert(bit_rows_.begin() + idx, std::move(row));
    return true;
  }
  Vec row = v;
  for (size_t i = 0; i < pivots_.size(); ++i) {
    const int32_t c = row[pivots_[i]];
    if (c == 0) continue;
    const Vec& ri = gen_rows_[i];
    for (size_t k = 0; k < ambient_; ++k)
      row[k] = f_.sub(row[k], f_.mul(c, ri[k]));
  }
  size_t p = 0;
  while (p < ambient_ && row[p] == 0) ++p;
  if (p == ambient_) return false;
  const int32_t s = f_.inv(row[p]);
  for (auto& x : row) x = f_.mul(x, s);
  for (size_t i = 0; i < pivots_.size(); ++i) {
    const int32_t c = gen_rows_[i][p];
    if (c == 0) continue;
    for (size_t k = 0; k < ambient_; ++k)
      gen_rows_[i][k] = f_.sub(gen_rows_[i][k], f_.mul(c, row[k]));
  }
  const auto pos = std::lower_bound(pivots_.begin(), pivots_.end(), p);
  const size_t idx = static_cast<size_t>(pos - pivots_.begin());
  pivots_.insert(pos, p);
  gen_rows_.insert(gen_rows_.begin() + idx, std::move(row));
  return true;
}

Vec Subspace::reduce(Vec v) const {
  if (v.size() != ambient_)
    throw std::invalid_argument("Subspace::reduce: dimension mismatch");
  if (packed_) {
    std::vector<uint64_t> row(words_, 0);
    for (size_t c = 0; c < ambient_; ++c)
      if (v[c] & 1) row[c / 64] ^= uint64_t{1} << (c % 64);
    for (size_t i = 0; i < pivots_.size(); ++i) {
      const size_t p = pivots_[i];
      if (row[p / 64] >> (p % 64) & 1) {
        const auto& bi = bit_rows_[i];
        for (size_t w = 0; w < words_; ++w) row[w] ^= bi[w];
      }
    }
    Vec out(ambient_, 0);
    for (size_t c = 0; c < ambient_; ++c)
      out[c] = static_cast<int32_t>(row[c / 64] >> (c % 64) & 1);
    return out;
  }
  for (size_t i = 0; i < pivots_.size(); ++i) {
    const int32_t c = v[pivots_[i]];
    if (c == 0) continue;
    const Vec& ri = gen_rows_[i];
    for (size_t k = 0; k < ambient_; ++k)
      v[k] = f_.sub(v[k], f_.mul(c, ri[k]));
  }
  return v;
}

bool Subspace::contains(const Vec& v) const {
  Vec r = reduce(v);
  return std::all_of(r.begin(), r.end(), [](int32_t x) { return x == 0; });
}

bool Subspace::contains(const Subspace& o) const {
  for (const auto& row : o.basis())
    if (!contains(row)) return false;
  return true;
}

std::vector<size_t> Subspace::free_coords() const {
  std::vector<size_t> out;
  out.reserve(ambient_ - pivots_.size());
  size_t pi = 0;
  for (size_t c = 0; c < ambient_; ++c) {
    if (pi < pivots_.size() && pivots_[pi] == c)
      ++pi;
    else
      out.push_back(c);
  }
  return out;
}

std::vector<Vec> Subspace::basis() const {
  std::vector<Vec> out;
  out.reserve(pivots_.size());
  if (packed_) {
    for (const auto& row : bit_rows_) {
      Vec v(ambient_, 0);
      for (size_t c = 0; c < ambient_; ++c)
        v[c] = static_cast<int32_t>(row[c / 64] >> (c % 64) & 1);
      out.push_back(std::move(v));
    }
  } else {
    out = gen_rows_;
  }
  return out;
}

bool Subspace::operator==(const Subspace& o) const {
  return ambient_ == o.ambient_ && pivots_ == o.pivots_ &&
         basis() == o.basis();
}

// ---------------------------------------------------------------------------
// free functions

Subspace rref(const Field& f, const std::vector<Vec>& rows, RowLayout layout) {
  const size_t ambient = rows.empty() ? 0 : rows.front().size();
  for (const auto& r : rows)
    if (r.size() != ambient)
      throw std::invalid_argument("rref: ragged rows");
  Subspace s(f, ambient, layout);
  for (const auto& r : rows) s.insert(r);
  return s;
}

Subspace kernel(const Mat& m) {
  const Field& f = m.field();
  std::vector<Vec> eqs;
  eqs.reserve(m.rows());
  for (size_t r = 0; r < m.rows(); ++r) eqs.push_back(m.row(r));
  Subspace row_space = rref(f, eqs);
  if (m.cols() == 0) return Subspace(f, 0);
  const auto rows = row_space.basis();
  const auto& piv = row_space.pivots();
  Subspace ker(f, m.cols());
  for (size_t fc : row_space.free_coords()) {
    Vec x(m.cols(), 0);
    x[fc] = 1;
    for (size_t i = 0; i < piv.size(); ++i) x[piv[i]] = f.neg(rows[i][fc]);
    ker.insert(x);
  }
  return ker;
}

Mat residual_map(const Subspace& s) {
  const size_t d = s.ambient();
  Mat m(s.field(), d, d);
  for (size_t c = 0; c < d; ++c) {
    Vec e(d, 0);
    e[c] = 1;
    m.set_col(c, s.reduce(std::move(e)));
  }
  return m;
}

Subspace preimage(const Mat& m, const Subspace& s) {
  if (m.rows() != s.ambient())
    throw std::invalid_argument("preimage: dimension mismatch");
  return kernel(residual_map(s).mul(m));
}

Subspace intersect(const Subspace& s1, const Subspace& s2) {
  if (s1.ambient() != s2.ambient())
    throw std::invalid_argument("intersect: ambient mismatch");
  const size_t d = s1.ambient();
  // Zassenhaus: row reduce [v|v] for v in s1 and [w|0] for w in s2; rows
  // with vanishing left half carry an intersection basis on the right.
  Subspace z(s1.field(), 2 * d);
  for (const auto& v : s1.basis()) {
    Vec row(2 * d, 0);
    std::copy(v.begin(), v.end(), row.begin());
    std::copy(v.begin(), v.end(), row.begin() + d);
    z.insert(row);
  }
  for (const auto& w : s2.basis()) {
    Vec row(2 * d, 0);
    std::copy(w.begin(), w.end(), row.begin());
    z.insert(row);
  }
  Subspace out(s1.field(), d);
  for (const auto& row : z.basis()) {
    bool left_zero = true;
    for (size_t c = 0; c < d && left_zero; ++c) left_zero = row[c] == 0;
    if (left_zero) out.insert(Vec(row.begin() + d, row.end()));
  }
  return out;
}

Subspace add(const Subspace& s1, const Subspace& s2) {
  if (s1.ambient() != s2.ambient())
    throw std::invalid_argument("add: ambient mismatch");
  Subspace out = s1;
  for (const auto& w : s2.basis()) out.insert(w);
  return out;
}

bool member(const Vec& v, const Subspace& s) { return s.contains(v); }

}  // namespace lnp
