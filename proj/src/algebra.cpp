#include "lnp/algebra.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <random>
#include <stdexcept>
#include <string>

#include "json.hpp"

namespace lnp {

int64_t dimension_formula(int32_t n) {
  return static_cast<int64_t>(n) * (n + 1) * (2 * n + 1) / 3;
}

int64_t commutator_dimension_formula(int32_t n) {
  return static_cast<int64_t>(n) * (n - 1) * (2 * n + 5) / 3;
}

// ---------------------------------------------------------------------------
// DeformationPoly

DeformationPoly DeformationPoly::monomial(int32_t degree) {
  DeformationPoly p;
  p.coeffs.assign(degree + 1, 0);
  p.coeffs[degree] = 1;
  return p;
}

int32_t DeformationPoly::degree() const {
  for (int32_t k = static_cast<int32_t>(coeffs.size()) - 1; k >= 0; --k)
    if (coeffs[k] != 0) return k;
  return -1;
}

DeformationPoly DeformationPoly::normalized(const Field& f) const {
  DeformationPoly out;
  out.coeffs.reserve(coeffs.size());
  for (int32_t c : coeffs) out.coeffs.push_back(f.reduce(c));
  while (!out.coeffs.empty() && out.coeffs.back() == 0) out.coeffs.pop_back();
  return out;
}

// ---------------------------------------------------------------------------
// relations

namespace {

std::vector<int32_t> up_run(const Quiver& q, int32_t a, int32_t b) {
  std::vector<int32_t> ids;
  for (int32_t i = a; i <= b; ++i) ids.push_back(q.up_id(i));
  return ids;
}

std::vector<int32_t> down_run(const Quiver& q, int32_t a, int32_t b) {
  std::vector<int32_t> ids;
  for (int32_t i = a; i >= b; --i) ids.push_back(q.down_id(i));
  return ids;
}

std::vector<int32_t> cat(std::vector<int32_t> x,
                         const std::vector<int32_t>& y) {
  x.insert(x.end(), y.begin(), y.end());
  return x;
}

Path loops(const Quiver& q, int32_t e) {
  if (e == 0) return trivial_path(0);
  return make_path(q, std::vector<int32_t>(e, q.loop_id()));
}

}  // namespace

std::vector<PathSum> relation_elements(int32_t n, const DeformationPoly& p,
                                       const Field& field) {
  if (n < 1) throw std::invalid_argument("relation_elements: n >= 1 required");
  const Quiver q(n);
  const DeformationPoly pn = p.normalized(field);
  std::vector<PathSum> rels;
  for (int32_t i = 1; i <= n - 2; ++i) {
    PathSum r;
    r.add(make_path(q, {q.up_id(i), q.down_id(i)}), 1);
    r.add(make_path(q, {q.down_id(i - 1), q.up_id(i - 1)}), 1);
    rels.push_back(std::move(r));
  }
  if (n >= 2) {
    PathSum r;
    r.add(make_path(q, {q.down_id(n - 2), q.up_id(n - 2)}), 1);
    rels.push_back(std::move(r));
  }
  {
    PathSum r;
    r.add(loops(q, 2 * n), 1);
    rels.push_back(std::move(r));
  }
  {
    PathSum r;
    r.add(loops(q, 2), 1);
    if (n >= 2) r.add(make_path(q, {q.up_id(0), q.down_id(0)}), 1);
    for (size_t c = 0; c < pn.coeffs.size(); ++c)
      if (pn.coeffs[c] != 0)
        r.add(loops(q, 3 + static_cast<int32_t>(c)), pn.coeffs[c]);
    rels.push_back(std::move(r));
  }
  return rels;
}

// ---------------------------------------------------------------------------
// path book

namespace {

uint64_t encode_path(const Path& p) {
  uint64_t key = static_cast<uint64_t>(p.src) |
                 (static_cast<uint64_t>(p.arrows.size()) << 4);
  for (size_t k = 0; k < p.arrows.size(); ++k)
    key |= static_cast<uint64_t>(p.arrows[k]) << (8 + 4 * k);
  return key;
}

bool valid_path(const Quiver& q, const Path& p) {
  const int32_t m = static_cast<int32_t>(q.arrows().size());
  int32_t at = p.src;
  for (int32_t id : p.arrows) {
    if (id < 0 || id >= m) return false;
    const Arrow& a = q.arrow(id);
    if (a.src != at) return false;
    at = a.tgt;
  }
  return at == p.tgt;
}

}  // namespace

// ---------------------------------------------------------------------------
// Algebra

Algebra::Algebra(int32_t n, const DeformationPoly& p, const Field& field)
    : n_(n), field_(field), p_(p.normalized(field)), quiver_(n) {}

int32_t Algebra::book_find(const Path& p) const {
  auto it = pindex_.find(encode_path(p));
  return it == pindex_.end() ? -1 : it->second;
}

Vec Algebra::reduce_path(int32_t pid) const {
  const int32_t b = block_of_[pid];
  const auto& paths = block_paths_[b];
  Vec local(paths.size(), 0);
  local[local_of_[pid]] = 1;
  Vec red = ideal_[b].reduce(std::move(local));
  Vec out(dim(), 0);
  for (size_t l = 0; l < red.size(); ++l)
    if (red[l] != 0) {
      const int32_t pos = basis_pos_[paths[l]];
      out[pos] = red[l];
    }
  return out;
}

Vec Algebra::unit(int32_t k) const {
  Vec v(dim(), 0);
  v.at(k) = 1;
  return v;
}

Vec Algebra::one() const {
  Vec v(dim(), 0);
  for (int32_t i : idem_pos_) v[i] = 1;
  return v;
}

Vec Algebra::arrow(int32_t arrow_id) const {
  return path_element(arrow_path(quiver_, arrow_id));
}

Vec Algebra::loop_power(int32_t e) const {
  if (e < 0) throw std::invalid_argument("loop_power: negative exponent");
  if (e == 0) return idempotent(0);  // eps^0 is the trivial path at vertex 0
  if (e >= 2 * n_) return Vec(dim(), 0);
  return path_element(loops(quiver_, e));
}

Vec Algebra::multiply(const Vec& x, const Vec& y) const {
  const size_t d = basis_.size();
  if (x.size() != d || y.size() != d)
    throw std::invalid_argument("Algebra::multiply: dimension mismatch");
  Vec out(d, 0);
  for (size_t u = 0; u < d; ++u) {
    if (x[u] == 0) continue;
    for (size_t v = 0; v < d; ++v) {
      if (y[v] == 0) continue;
      const int32_t c = field_.mul(x[u], y[v]);
      for (const auto& [pos, val] : table_[u * d + v])
        out[pos] = field_.add(out[pos], field_.mul(c, val));
    }
  }
  return out;
}

Vec Algebra::power(const Vec& x, uint64_t e) const {
  Vec acc = one();
  Vec base = x;
  while (e) {
    if (e & 1) acc = multiply(acc, base);
    e >>= 1;
    if (e) base = multiply(base, base);
  }
  return acc;
}

Vec Algebra::normal_form(const PathSum& w) const {
  Vec out(dim(), 0);
  for (const auto& [path, coeff] : w.terms) {
    const int32_t c = field_.reduce(coeff);
    if (c == 0) continue;
    if (!valid_path(quiver_, path))
      throw std::invalid_argument("normal_form: word does not compose");
    if (path.length() >= 2 * n_) continue;  // truncated away
    const int32_t pid = book_find(path);
    Vec r = reduce_path(pid);
    for (int32_t k = 0; k < dim(); ++k)
      out[k] = field_.add(out[k], field_.mul(c, r[k]));
  }
  return out;
}

Vec Algebra::path_element(const Path& p) const {
  PathSum w;
  w.add(p, 1);
  return normal_form(w);
}

Mat Algebra::left_mult(const Vec& x) const {
  const size_t d = basis_.size();
  Mat m(field_, d, d);
  for (size_t k = 0; k < d; ++k) {
    if (x[k] == 0) continue;
    for (size_t u = 0; u < d; ++u)
      for (const auto& [pos, val] : table_[k * d + u])
        m.set(pos, u, field_.add(m.at(pos, u), field_.mul(x[k], val)));
  }
  return m;
}

Mat Algebra::right_mult(const Vec& x) const {
  const size_t d = basis_.size();
  Mat m(field_, d, d);
  for (size_t k = 0; k < d; ++k) {
    if (x[k] == 0) continue;
    for (size_t u = 0; u < d; ++u)
      for (const auto& [pos, val] : table_[u * d + k])
        m.set(pos, u, field_.add(m.at(pos, u), field_.mul(x[k], val)));
  }
  return m;
}

// ---------------------------------------------------------------------------
// construction

Algebra build_algebra(int32_t n, const DeformationPoly& p, const Field& field) {
  if (n < 1) throw std::invalid_argument("build_algebra: n >= 1 required");
  if (n > kMaxFullAlgebraN)
    throw std::invalid_argument(
        "build_algebra: n > " + std::to_string(kMaxFullAlgebraN) +
        " exceeds the path-key encoding bound of the full-algebra engine");

  Algebra a(n, p, field);
  const Quiver& q = a.quiver_;
  const int32_t max_len = 2 * n - 1;

  a.book_ = enumerate_paths(q, max_len);
  const size_t npaths = a.book_.size();
  a.pindex_.reserve(npaths * 2);
  for (size_t i = 0; i < npaths; ++i)
    a.pindex_.emplace(encode_path(a.book_[i]), static_cast<int32_t>(i));

  a.block_of_.resize(npaths);
  a.local_of_.resize(npaths);
  a.block_paths_.assign(static_cast<size_t>(n) * n, {});
  for (size_t i = 0; i < npaths; ++i) {
    const int32_t b = a.book_[i].src * n + a.book_[i].tgt;
    a.block_of_[i] = b;
    a.local_of_[i] = static_cast<int32_t>(a.block_paths_[b].size());
    a.block_paths_[b].push_back(static_cast<int32_t>(i));
  }

  // arrow extension tables: book id -> book id of (arrow . path) resp.
  // (path . arrow), or -1 when the product leaves the truncation
  const size_t narrows = q.arrows().size();
  std::vector<std::vector<int32_t>> lext(narrows,
                                         std::vector<int32_t>(npaths, -1));
  std::vector<std::vector<int32_t>> rext(narrows,
                                         std::vector<int32_t>(npaths, -1));
  for (size_t i = 0; i < npaths; ++i) {
    const Path& t = a.book_[i];
    if (t.length() == max_len) continue;
    for (const Arrow& g : q.arrows()) {
      if (g.tgt == t.src) {
        auto prod = compose(arrow_path(q, g.id), t);
        lext[g.id][i] = a.book_find(*prod);
      }
      if (g.src == t.tgt) {
        auto prod = compose(t, arrow_path(q, g.id));
        rext[g.id][i] = a.book_find(*prod);
      }
    }
  }

  for (int32_t b = 0; b < n * n; ++b)
    a.ideal_.emplace_back(field, a.block_paths_[b].size());

  // saturate the two-sided relation ideal: relations are vertex homogeneous,
  // so trivial-path multiples are the block split and it remains to close
  // under single-arrow multiplication on both sides
  using SparseRow = std::vector<std::pair<int32_t, int32_t>>;  // (local, c)
  std::deque<std::pair<int32_t, SparseRow>> work;
  auto try_insert = [&](int32_t block, const SparseRow& row) {
    if (row.empty()) return;
    Vec v(a.block_paths_[block].size(), 0);
    for (const auto& [loc, c] : row) v[loc] = field.add(v[loc], c);
    if (a.ideal_[block].insert(v)) work.emplace_back(block, row);
  };

  for (const PathSum& rel : relation_elements(n, p, field)) {
    std::map<int32_t, std::map<int32_t, int32_t>> by_block;
    for (const auto& [path, coeff] : rel.terms) {
      if (path.length() > max_len) continue;
      const int32_t pid = a.book_find(path);
      auto& slot = by_block[a.block_of_[pid]][a.local_of_[pid]];
      slot = field.add(slot, field.reduce(coeff));
    }
    for (const auto& [block, entries] : by_block) {
      SparseRow row;
      for (const auto& [loc, c] : entries)
        if (c != 0) row.emplace_back(loc, c);
      try_insert(block, row);
    }
  }

  while (!work.empty()) {
    const auto [block, row] = work.front();
    work.pop_front();
    const int32_t i = block / n, j = block % n;
    for (const Arrow& g : q.arrows()) {
      if (g.tgt == i) {
        SparseRow prod;
        for (const auto& [loc, c] : row) {
          const int32_t np = lext[g.id][a.block_paths_[block][loc]];
          if (np >= 0) prod.emplace_back(a.local_of_[np], c);
        }
        try_insert(g.src * n + j, prod);
      }
      if (g.src == j) {
        SparseRow prod;
        for (const auto& [loc, c] : row) {
          const int32_t np = rext[g.id][a.block_paths_[block][loc]];
          if (np >= 0) prod.emplace_back(a.local_of_[np], c);
        }
        try_insert(i * n + g.tgt, prod);
      }
    }
  }

  // quotient basis: non-pivot paths, deterministic path order
  std::vector<int32_t> basis_ids;
  for (int32_t b = 0; b < n * n; ++b)
    for (size_t loc : a.ideal_[b].free_coords())
      basis_ids.push_back(a.block_paths_[b][loc]);
  std::sort(basis_ids.begin(), basis_ids.end());

  if (static_cast<int64_t>(basis_ids.size()) != dimension_formula(n))
    throw std::runtime_error(
        "build_algebra: quotient dimension " +
        std::to_string(basis_ids.size()) + " != closed form " +
        std::to_string(dimension_formula(n)) + " (n=" + std::to_string(n) +
        ", char=" + std::to_string(field.q()) + ")");

  a.basis_pos_.assign(npaths, -1);
  for (size_t k = 0; k < basis_ids.size(); ++k) {
    a.basis_.push_back(a.book_[basis_ids[k]]);
    a.basis_pos_[basis_ids[k]] = static_cast<int32_t>(k);
  }
  a.idem_pos_.assign(n, -1);
  for (size_t k = 0; k < a.basis_.size(); ++k)
    if (a.basis_[k].trivial()) a.idem_pos_[a.basis_[k].src] = (int32_t)k;

  // multiplication table: basis paths concatenate to book paths
  const size_t d = a.basis_.size();
  a.table_.assign(d * d, {});
  for (size_t u = 0; u < d; ++u)
    for (size_t v = 0; v < d; ++v) {
      const Path& pu = a.basis_[u];
      const Path& pv = a.basis_[v];
      if (pu.tgt != pv.src) continue;
      if (pu.length() + pv.length() > max_len) continue;
      const int32_t pid = a.book_find(*compose(pu, pv));
      Vec r = a.reduce_path(pid);
      auto& entry = a.table_[u * d + v];
      for (size_t k = 0; k < r.size(); ++k)
        if (r[k] != 0) entry.emplace_back(static_cast<int32_t>(k), r[k]);
    }

  // every defining relation must vanish in the quotient
  for (const PathSum& rel : relation_elements(n, p, field)) {
    const Vec v = a.normal_form(rel);
    if (!std::all_of(v.begin(), v.end(), [](int32_t x) { return x == 0; }))
      throw std::runtime_error("build_algebra: relation fails to vanish");
  }

  return a;
}

// ---------------------------------------------------------------------------
// explicit path family and socle

std::vector<Path> socle_paths(int32_t n) {
  const Quiver q(n);
  std::vector<Path> out;
  for (int32_t v = 0; v < n; ++v) {
    std::vector<int32_t> ids;
    if (v == n - 1) {
      ids = cat(cat(down_run(q, n - 2, 0), {q.loop_id()}), up_run(q, 0, n - 2));
    } else {
      ids = cat(cat(cat(up_run(q, v, n - 2), down_run(q, n - 2, 0)),
                    {q.loop_id()}),
                up_run(q, 0, v - 1));
    }
    out.push_back(ids.empty() ? trivial_path(v) : make_path(q, ids));
  }
  return out;
}

std::vector<Path> explicit_path_basis(int32_t n) {
  const Quiver q(n);
  std::vector<Path> out;
  auto emit = [&](int32_t src, const std::vector<int32_t>& ids) {
    out.push_back(ids.empty() ? trivial_path(src) : make_path(q, ids));
  };
  for (int32_t i = 0; i < n; ++i)
    for (int32_t j = 0; j < n; ++j) {
      if (i < j) {
        emit(i, up_run(q, i, j - 1));                                 // (1)
        for (int32_t l = j; l <= n - 2; ++l)
          emit(i, cat(up_run(q, i, l), down_run(q, l, j)));           // (2)
      } else {
        emit(i, down_run(q, i - 1, j));                               // (3)
        for (int32_t l = i; l <= n - 2; ++l)
          emit(i, cat(up_run(q, i, l), down_run(q, l, j)));           // (4)
      }
      emit(i, cat(cat(down_run(q, i - 1, 0), {q.loop_id()}),
                  up_run(q, 0, j - 1)));                              // (5)
      if (i < j) {
        for (int32_t l = j; l <= n - 2; ++l)                          // (6)
          emit(i, cat(cat(cat(down_run(q, i - 1, 0), {q.loop_id()}),
                          up_run(q, 0, l)),
                      down_run(q, l, j)));
      } else {
        for (int32_t l = i; l <= n - 2; ++l)                          // (7)
          emit(i, cat(cat(cat(up_run(q, i, l), down_run(q, l, 0)),
                          {q.loop_id()}),
                      up_run(q, 0, j - 1)));
      }
    }
  return out;
}

std::vector<Vec> explicit_basis_elements(const Algebra& a) {
  const auto family = explicit_path_basis(a.n());
  if (static_cast<int64_t>(family.size()) != dimension_formula(a.n()))
    throw std::runtime_error("explicit_basis_elements: wrong cardinality");
  std::vector<Vec> out;
  out.reserve(family.size());
  Subspace span(a.field(), a.dim());
  for (const Path& p : family) {
    Vec v = a.path_element(p);
    if (!span.insert(v))
      throw std::runtime_error(
          "explicit_basis_elements: family is rank deficient");
    out.push_back(std::move(v));
  }
  return out;
}

// ---------------------------------------------------------------------------
// Cartan data

std::vector<std::vector<int64_t>> cartan_matrix(const Algebra& a) {
  const int32_t n = a.n();
  std::vector<std::vector<int64_t>> c(n, std::vector<int64_t>(n, 0));
  for (int32_t k = 0; k < a.dim(); ++k)
    ++c[a.source_of(k)][a.target_of(k)];
  return c;
}

int64_t matrix_determinant(std::vector<std::vector<int64_t>> m) {
  const size_t n = m.size();
  if (n == 0) return 1;
  int64_t sign = 1, prev = 1;
  for (size_t k = 0; k + 1 < n; ++k) {
    if (m[k][k] == 0) {
      size_t r = k + 1;
      while (r < n && m[r][k] == 0) ++r;
      if (r == n) return 0;
      std::swap(m[r], m[k]);
      sign = -sign;
    }
    for (size_t i = k + 1; i < n; ++i)
      for (size_t j = k + 1; j < n; ++j)
        m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev;
    prev = m[k][k];
  }
  return sign * m[n - 1][n - 1];
}

// ---------------------------------------------------------------------------
// structural sanity helpers

bool check_associativity(const Algebra& a, uint64_t sample_triples,
                         uint64_t seed) {
  const int32_t d = a.dim();
  if (sample_triples == 0) {
    for (int32_t u = 0; u < d; ++u)
      for (int32_t v = 0; v < d; ++v)
        for (int32_t w = 0; w < d; ++w) {
          Vec lhs(d, 0), rhs(d, 0);
          for (const auto& [z, c] : a.table(u, v))
            for (const auto& [pos, val] : a.table(z, w))
              lhs[pos] = a.field().add(lhs[pos], a.field().mul(c, val));
          for (const auto& [z, c] : a.table(v, w))
            for (const auto& [pos, val] : a.table(u, z))
              rhs[pos] = a.field().add(rhs[pos], a.field().mul(c, val));
          if (lhs != rhs) return false;
        }
    return true;
  }
  std::mt19937_64 rng(seed);
  auto rand_vec = [&] {
    Vec v(d);
    for (auto& x : v) x = static_cast<int32_t>(rng() % a.field().q());
    return v;
  };
  for (uint64_t s = 0; s < sample_triples; ++s) {
    const Vec x = rand_vec(), y = rand_vec(), z = rand_vec();
    if (a.multiply(a.multiply(x, y), z) != a.multiply(x, a.multiply(y, z)))
      return false;
  }
  return true;
}

bool check_grading(const Algebra& a) {
  const Vec id = a.one();
  for (int32_t k = 0; k < a.dim(); ++k) {
    const Vec b = a.unit(k);
    const Vec left = a.multiply(a.idempotent(a.source_of(k)), b);
    const Vec right = a.multiply(b, a.idempotent(a.target_of(k)));
    if (left != b || right != b) return false;
    if (a.multiply(id, b) != b || a.multiply(b, id) != b) return false;
  }
  return true;
}

// ---------------------------------------------------------------------------
// serialization

std::string Algebra::descriptor_json() const {
  nlohmann::json j;
  j["n"] = n_;
  j["char"] = field_.q();
  j["p_coeffs"] = p_.coeffs;
  j["dim"] = dim();
  nlohmann::json basis = nlohmann::json::array();
  for (const Path& p : basis_) basis.push_back(p.arrows);
  j["basis"] = basis;
  j["cartan"] = cartan_matrix(*this);
  return j.dump(2);
}

}  // namespace lnp
