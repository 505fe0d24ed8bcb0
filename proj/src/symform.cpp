#include "lnp/symform.hpp"

#include <algorithm>
#include <stdexcept>

#include "lnp/structure.hpp"

namespace lnp {

int32_t SymmetrizingForm::value(const Field& f, const Vec& x,
                                const Vec& y) const {
  // <x,y> = x^T unit_form y in engine coordinates
  int64_t acc = 0;
  const size_t d = x.size();
  for (size_t a = 0; a < d; ++a) {
    if (x[a] == 0) continue;
    int64_t row = 0;
    for (size_t b = 0; b < d; ++b)
      row += static_cast<int64_t>(unit_form.at(a, b)) * y[b] % f.q();
    acc += x[a] * (row % f.q());
  }
  return f.reduce(acc);
}

SymmetrizingForm gram_form(const Algebra& a) {
  const int32_t d = a.dim();
  const Field& f = a.field();
  const auto family = explicit_path_basis(a.n());
  const auto elements = explicit_basis_elements(a);  // throws if deficient

  // locate the socle paths inside the family and check they really span
  // the socle
  const auto soc_paths = socle_paths(a.n());
  const Subspace soc = socle(a);
  std::vector<int32_t> soc_pos;
  for (const Path& sp : soc_paths) {
    auto it = std::find(family.begin(), family.end(), sp);
    if (it == family.end())
      throw std::runtime_error("gram_form: basis misses a socle path");
    const int32_t pos = static_cast<int32_t>(it - family.begin());
    if (!soc.contains(elements[pos]))
      throw std::runtime_error("gram_form: socle path not in the socle");
    soc_pos.push_back(pos);
  }

  Mat bmat(f, d, d);
  for (int32_t k = 0; k < d; ++k) bmat.set_col(k, elements[k]);
  auto binv = bmat.inverse();
  if (!binv)
    throw std::runtime_error("gram_form: basis matrix is singular");

  // psi in engine coordinates: psi(x) = sum of the socle rows of B^{-1} x
  Vec psi(d, 0);
  for (int32_t k = 0; k < d; ++k) {
    int32_t acc = 0;
    for (int32_t s : soc_pos) acc = f.add(acc, binv->at(s, k));
    psi[k] = acc;
  }

  Mat unit_form(f, d, d);
  for (int32_t u = 0; u < d; ++u)
    for (int32_t v = 0; v < d; ++v) {
      int32_t acc = 0;
      for (const auto& [pos, val] : a.table(u, v))
        acc = f.add(acc, f.mul(val, psi[pos]));
      unit_form.set(u, v, acc);
    }

  const Mat gram = bmat.transpose().mul(unit_form).mul(bmat);
  if (gram.rank() != static_cast<size_t>(d))
    throw std::runtime_error("gram_form: degenerate form");

  SymmetrizingForm out{gram, unit_form, bmat, *binv, psi, soc_pos};
  if (!form_associative_check(a, out))
    throw std::runtime_error("gram_form: form is not associative");
  return out;
}

bool form_associative_check(const Algebra& a, const SymmetrizingForm& g) {
  const int32_t d = a.dim();
  const Field& f = a.field();
  for (int32_t x = 0; x < d; ++x)
    for (int32_t y = 0; y < d; ++y) {
      const auto& xy = a.table(x, y);
      for (int32_t z = 0; z < d; ++z) {
        int32_t lhs = 0, rhs = 0;
        for (const auto& [pos, val] : xy)
          lhs = f.add(lhs, f.mul(val, g.unit_form.at(pos, z)));
        for (const auto& [pos, val] : a.table(y, z))
          rhs = f.add(rhs, f.mul(val, g.unit_form.at(x, pos)));
        if (lhs != rhs) return false;
      }
    }
  return true;
}

bool gram_symmetric(const SymmetrizingForm& g) {
  return g.gram == g.gram.transpose();
}

bool NakayamaMap::is_identity() const {
  return matrix == Mat::identity(matrix.field(), matrix.rows());
}

NakayamaMap nakayama(const Algebra& a, const SymmetrizingForm& g) {
  const int32_t d = a.dim();
  auto ginv = g.gram.inverse();
  if (!ginv) throw std::runtime_error("nakayama: degenerate form");
  const Mat in_family = ginv->mul(g.gram.transpose());
  const Mat nu = g.basis_mat.mul(in_family).mul(g.basis_inv);

  // defining identity <a,b> = <b,nu(a)> on the engine basis:
  // unit_form == (unit_form . nu)^T
  if (!(g.unit_form == g.unit_form.mul(nu).transpose()))
    throw std::runtime_error("nakayama: defining identity fails");

  // automorphism check; the identity map needs none
  NakayamaMap out{nu};
  if (!out.is_identity()) {
    if (nu.apply(a.one()) != a.one())
      throw std::runtime_error("nakayama: does not fix the identity");
    if (nu.rank() != static_cast<size_t>(d))
      throw std::runtime_error("nakayama: not invertible");
    for (int32_t u = 0; u < d; ++u)
      for (int32_t v = 0; v < d; ++v) {
        Vec uv(d, 0);
        for (const auto& [pos, val] : a.table(u, v)) uv[pos] = val;
        const Vec lhs = nu.apply(uv);
        const Vec rhs = a.multiply(nu.col(u), nu.col(v));
        if (lhs != rhs)
          throw std::runtime_error("nakayama: not multiplicative");
      }
  }
  return out;
}

TwistedCentre twisted_centre(const Algebra& a, const NakayamaMap& nu) {
  const int32_t d = a.dim();
  std::vector<Vec> eqs;
  auto add_condition = [&](const Vec& g) {
    const Mat diff = a.left_mult(g).sub(a.right_mult(nu.matrix.apply(g)));
    for (int32_t r = 0; r < d; ++r) eqs.push_back(diff.row(r));
  };
  for (int32_t v = 0; v < a.n(); ++v) add_condition(a.idempotent(v));
  for (const Arrow& g : a.quiver().arrows()) add_condition(a.arrow(g.id));
  return TwistedCentre{kernel(Mat::from_rows(a.field(), eqs))};
}

}  // namespace lnp
