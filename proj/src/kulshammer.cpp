#include "lnp/kulshammer.hpp"

#include <algorithm>
#include <stdexcept>

#include "lnp/structure.hpp"

namespace lnp {

// ---------------------------------------------------------------------------
// TruncPoly

TruncPoly::TruncPoly(int32_t n) : n_(n), c_(2 * n, 0) {
  if (n < 1) throw std::invalid_argument("TruncPoly: n >= 1 required");
}

TruncPoly TruncPoly::monomial(int32_t n, int64_t e) {
  TruncPoly p(n);
  if (e < 0) throw std::invalid_argument("TruncPoly::monomial: e < 0");
  if (e < 2 * n) p.c_[e] = 1;
  return p;
}

bool TruncPoly::is_zero() const {
  return std::all_of(c_.begin(), c_.end(), [](uint8_t x) { return x == 0; });
}

TruncPoly TruncPoly::add(const TruncPoly& o) const {
  if (n_ != o.n_) throw std::invalid_argument("TruncPoly::add: mixed moduli");
  TruncPoly out(n_);
  for (size_t k = 0; k < c_.size(); ++k) out.c_[k] = c_[k] ^ o.c_[k];
  return out;
}

TruncPoly TruncPoly::mul(const TruncPoly& o) const {
  if (n_ != o.n_) throw std::invalid_argument("TruncPoly::mul: mixed moduli");
  TruncPoly out(n_);
  for (size_t a = 0; a < c_.size(); ++a) {
    if (!c_[a]) continue;
    for (size_t b = 0; a + b < c_.size(); ++b)
      if (o.c_[b]) out.c_[a + b] ^= 1;
  }
  return out;
}

TruncPoly TruncPoly::pow(uint64_t e) const {
  TruncPoly acc = monomial(n_, 0);
  TruncPoly base = *this;
  while (e) {
    if (e & 1) acc = acc.mul(base);
    e >>= 1;
    if (e) base = base.mul(base);
  }
  return acc;
}

Vec TruncPoly::to_vec() const {
  Vec v(c_.size());
  for (size_t k = 0; k < c_.size(); ++k) v[k] = c_[k];
  return v;
}

// ---------------------------------------------------------------------------
// parity and the closed formula

bool odd_binomial(uint64_t m, uint64_t u) {
  if (u > m) throw std::out_of_range("odd_binomial: u > m");
  return (m & u) == u;
}

namespace {

int64_t ceil_div(int64_t a, int64_t b) {  // b > 0
  const int64_t q = a / b, r = a % b;
  return q + (r > 0 ? 1 : 0);
}

}  // namespace

InvariantFormula closed_form(int64_t n, int64_t j, int32_t i) {
  if (n < 1 || j < 0 || i < 1)
    throw std::invalid_argument("closed_form: need n >= 1, j >= 0, i >= 1");
  int64_t k0 = 0;
  if (i + 1 < 62) {
    const int64_t p = int64_t{1} << (i + 1);
    k0 = std::max<int64_t>(ceil_div(2 * n - (p - 2) * j - (p - 1), p), 0);
  }
  return InvariantFormula{n - k0, k0};
}

int64_t reduced_model_dim(int64_t n, int64_t j, int32_t i) {
  if (n < 1 || j < 0 || i < 1)
    throw std::invalid_argument(
        "reduced_model_dim: need n >= 1, j >= 0, i >= 1");
  const int32_t nn = static_cast<int32_t>(n);
  const Field f2(2);
  const TruncPoly base =
      TruncPoly::monomial(nn, 2).add(TruncPoly::monomial(nn, 2 * j + 3));

  Subspace target(f2, 2 * n);
  TruncPoly pw = TruncPoly::monomial(nn, 0);
  for (int64_t m = 1; m <= n - 1; ++m) {
    pw = pw.mul(base);
    target.insert(pw.to_vec());
  }
  if (!pw.mul(base).is_zero())
    throw std::runtime_error("reduced_model_dim: power n fails to vanish");

  Subspace residues(f2, 2 * n);
  for (int64_t k = 0; k < n; ++k) {
    TruncPoly w = TruncPoly::monomial(nn, 2 * k + 1);
    for (int32_t s = 0; s < i; ++s) w = w.mul(w);
    residues.insert(target.reduce(w.to_vec()));
  }
  return n - static_cast<int64_t>(residues.rank());
}

// ---------------------------------------------------------------------------
// full-algebra route

CommutatorQuotient power_map_mod_commutator(const Algebra& a) {
  if (a.field().q() != 2)
    throw std::invalid_argument(
        "power_map_mod_commutator: requires characteristic 2");
  const int32_t d = a.dim();
  CommutatorQuotient out{commutator_subspace(a), {}, Mat(a.field(), 0, 0),
                         Mat(a.field(), 0, 0)};
  for (const Vec& c : out.comm.basis())
    if (!out.comm.contains(a.multiply(c, c)))
      throw std::runtime_error(
          "power_map_mod_commutator: squaring does not preserve [A,A]");

  out.rep_coords = out.comm.free_coords();
  const size_t m = out.rep_coords.size();
  const Mat residual = residual_map(out.comm);
  out.projection = Mat(a.field(), m, d);
  for (size_t r = 0; r < m; ++r)
    for (int32_t c = 0; c < d; ++c)
      out.projection.set(r, c, residual.at(out.rep_coords[r], c));

  out.square_map = Mat(a.field(), m, m);
  for (size_t r = 0; r < m; ++r) {
    const int32_t k = static_cast<int32_t>(out.rep_coords[r]);
    Vec sq(d, 0);
    for (const auto& [pos, val] : a.table(k, k)) sq[pos] = val;
    out.square_map.set_col(r, out.projection.apply(sq));
  }
  return out;
}

Subspace kulshammer_space(const Algebra&, const CommutatorQuotient& q,
                          int32_t i) {
  if (i < 0) throw std::invalid_argument("kulshammer_space: i >= 0 required");
  if (i == 0) return q.comm;
  return kernel(q.square_map.pow(i).mul(q.projection));
}

Subspace kulshammer_space(const Algebra& a, int32_t i) {
  return kulshammer_space(a, power_map_mod_commutator(a), i);
}

std::optional<int32_t> even_monomial_half_exponent(const DeformationPoly& p) {
  const int32_t deg = p.degree();
  if (deg < 0 || deg % 2 != 0) return std::nullopt;
  for (int32_t k = 0; k < deg; ++k)
    if (p.coeffs[k] != 0) return std::nullopt;
  if (p.coeffs[deg] != 1) return std::nullopt;
  return deg / 2;
}

KulshammerResult kulshammer_result(int32_t n, int32_t j, int32_t i,
                                   const Algebra* alg,
                                   const CommutatorQuotient* q) {
  KulshammerResult r;
  r.n = n;
  r.j = j;
  r.i = i;
  const int64_t comm_dim = commutator_dimension_formula(n);
  const InvariantFormula formula = closed_form(n, j, i);
  r.k0 = formula.k0;
  r.closed_form_plus_comm = formula.value + comm_dim;
  r.dim_t_reduced_plus_comm = reduced_model_dim(n, j, i) + comm_dim;
  if (alg != nullptr) {
    if (alg->field().q() != 2 || alg->n() != n ||
        even_monomial_half_exponent(alg->deformation()) !=
            std::optional<int32_t>(j))
      throw std::invalid_argument(
          "kulshammer_result: algebra does not match (n, j) over GF(2)");
    if (static_cast<int64_t>(q->comm.rank()) != comm_dim)
      throw std::runtime_error(
          "kulshammer_result: commutator dimension mismatch");
    r.dim_t_full =
        static_cast<int64_t>(kulshammer_space(*alg, *q, i).rank());
  }
  return r;
}

}  // namespace lnp
