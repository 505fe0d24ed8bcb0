#include "lnp/structure.hpp"

#include <algorithm>
#include <deque>
#include <stdexcept>

#include "json.hpp"

namespace lnp {

namespace {

bool is_zero(const Vec& v) {
  return std::all_of(v.begin(), v.end(), [](int32_t x) { return x == 0; });
}

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

Vec word_element(const Algebra& a, int32_t src,
                 const std::vector<int32_t>& ids) {
  return a.path_element(ids.empty() ? trivial_path(src)
                                    : make_path(a.quiver(), ids));
}

// generators of the algebra: trivial paths then arrows
std::vector<Vec> generator_elements(const Algebra& a) {
  std::vector<Vec> gens;
  for (int32_t v = 0; v < a.n(); ++v) gens.push_back(a.idempotent(v));
  for (const Arrow& g : a.quiver().arrows()) gens.push_back(a.arrow(g.id));
  return gens;
}

}  // namespace

Subspace commutator_subspace(const Algebra& a) {
  const int32_t d = a.dim();
  const Field& f = a.field();
  Subspace s(f, d);
  for (int32_t u = 0; u < d; ++u)
    for (int32_t v = u + 1; v < d; ++v) {
      Vec c(d, 0);
      for (const auto& [pos, val] : a.table(u, v)) c[pos] = val;
      for (const auto& [pos, val] : a.table(v, u))
        c[pos] = f.sub(c[pos], val);
      s.insert(c);
    }
  return s;
}

Subspace center(const Algebra& a) {
  const int32_t d = a.dim();
  std::vector<Vec> eqs;
  for (const Vec& g : generator_elements(a)) {
    const Mat diff = a.left_mult(g).sub(a.right_mult(g));
    for (int32_t r = 0; r < d; ++r) eqs.push_back(diff.row(r));
  }
  return kernel(Mat::from_rows(a.field(), eqs));
}

Subspace socle(const Algebra& a) {
  const int32_t d = a.dim();
  std::vector<Vec> left_eqs, right_eqs;
  for (const Arrow& g : a.quiver().arrows()) {
    const Vec ge = a.arrow(g.id);
    const Mat lm = a.left_mult(ge);
    const Mat rm = a.right_mult(ge);
    for (int32_t r = 0; r < d; ++r) {
      left_eqs.push_back(lm.row(r));
      right_eqs.push_back(rm.row(r));
    }
  }
  const Subspace right_ann = kernel(Mat::from_rows(a.field(), left_eqs));
  const Subspace left_ann = kernel(Mat::from_rows(a.field(), right_eqs));
  if (!(right_ann == left_ann))
    throw std::runtime_error(
        "socle: one-sided annihilators disagree (weak symmetry violated)");
  return right_ann;
}

Vec central_element(const Algebra& a) {
  const Quiver& q = a.quiver();
  const Field& f = a.field();
  PathSum w;
  auto loop_term = [&](int32_t e, int32_t c) {
    if (e < 2 * a.n() && c != 0)
      w.add(make_path(q, std::vector<int32_t>(e, q.loop_id())), c);
  };
  loop_term(2, 1);
  const auto& pc = a.deformation().coeffs;
  for (size_t c = 0; c < pc.size(); ++c)
    loop_term(3 + static_cast<int32_t>(c), pc[c]);
  for (int32_t l = 0; l <= a.n() - 3; ++l)
    w.add(make_path(q, {q.down_id(l), q.up_id(l)}),
          l % 2 == 0 ? f.neg(1) : 1);
  const Vec lambda = a.normal_form(w);
  for (const Vec& g : generator_elements(a))
    if (a.multiply(g, lambda) != a.multiply(lambda, g))
      throw std::runtime_error("central_element: fails to be central");
  return lambda;
}

bool central_element_powers_check(const Algebra& a) {
  const Vec lambda = central_element(a);
  Subspace span(a.field(), a.dim());
  Vec pw = a.one();
  for (int32_t s = 0; s < a.n(); ++s) {
    if (!span.insert(pw)) return false;
    pw = a.multiply(pw, lambda);
  }
  return true;
}

bool coset_basis_check(const Algebra& a, const Subspace& comm) {
  const int32_t n = a.n();
  if (static_cast<int64_t>(comm.rank()) + 2 * n != a.dim()) return false;
  Subspace s = comm;
  for (int32_t v = 0; v < n; ++v)
    if (!s.insert(a.idempotent(v))) return false;
  for (int32_t l = 0; l < n; ++l)
    if (!s.insert(a.loop_power(2 * l + 1))) return false;
  return static_cast<int64_t>(s.rank()) == a.dim();
}

bool explicit_comm_basis_check(const Algebra& a, const Subspace& comm) {
  const int32_t n = a.n();
  const Quiver& q = a.quiver();
  std::vector<Vec> family;
  // (i) non-closed paths, (ii) closed even paths off vertex 0
  for (const Path& p : explicit_path_basis(n)) {
    if (p.src != p.tgt)
      family.push_back(a.path_element(p));
    else if (p.length() >= 2 && p.length() % 2 == 0 && p.src != 0)
      family.push_back(a.path_element(p));
  }
  // (iii) differences of equal-length odd closed paths at consecutive vertices
  for (int32_t i = 0; i <= n - 2; ++i)
    for (int32_t l = i; l <= n - 2; ++l) {
      const Vec at_i = word_element(
          a, i,
          cat(cat(cat(up_run(q, i, l), down_run(q, l, 0)), {q.loop_id()}),
              up_run(q, 0, i - 1)));
      const Vec at_i1 =
          l == i ? word_element(a, i + 1,
                                cat(cat(down_run(q, i, 0), {q.loop_id()}),
                                    up_run(q, 0, i)))
                 : word_element(a, i + 1,
                                cat(cat(cat(up_run(q, i + 1, l),
                                            down_run(q, l, 0)),
                                        {q.loop_id()}),
                                    up_run(q, 0, i)));
      Vec diff(a.dim());
      for (int32_t k = 0; k < a.dim(); ++k)
        diff[k] = a.field().sub(at_i[k], at_i1[k]);
      family.push_back(std::move(diff));
    }
  // (iv) the closed even paths at vertex 0
  for (int32_t l = 0; l <= n - 2; ++l)
    family.push_back(word_element(a, 0, cat(up_run(q, 0, l),
                                            down_run(q, l, 0))));

  if (family.size() != comm.rank()) return false;
  Subspace span(a.field(), a.dim());
  for (const Vec& v : family) {
    if (!comm.contains(v)) return false;
    if (!span.insert(v)) return false;
  }
  return span.rank() == comm.rank();
}

Subspace two_sided_ideal(const Algebra& a, const std::vector<Vec>& gens) {
  Subspace s(a.field(), a.dim());
  std::deque<Vec> work;
  auto try_insert = [&](const Vec& v) {
    if (!is_zero(v) && s.insert(v)) work.push_back(v);
  };
  for (const Vec& g : gens) try_insert(g);
  const std::vector<Vec> mults = generator_elements(a);
  while (!work.empty()) {
    const Vec v = std::move(work.front());
    work.pop_front();
    for (const Vec& g : mults) {
      try_insert(a.multiply(g, v));
      try_insert(a.multiply(v, g));
    }
  }
  return s;
}

ProjectionReport projection_check(int32_t n, const DeformationPoly& p,
                                  const Field& field) {
  ProjectionReport rep;
  const Algebra big = build_algebra(n + 1, p, field);
  const Algebra small = build_algebra(n, p, field);
  const Quiver& bq = big.quiver();

  // images of the generators of the larger algebra
  std::vector<Vec> arrow_img(bq.arrows().size(), Vec(small.dim(), 0));
  arrow_img[bq.loop_id()] = small.arrow(small.quiver().loop_id());
  for (int32_t i = 0; i <= n - 2; ++i) {
    arrow_img[bq.up_id(i)] = small.arrow(small.quiver().up_id(i));
    arrow_img[bq.down_id(i)] = small.arrow(small.quiver().down_id(i));
  }
  std::vector<Vec> idem_img(n + 1, Vec(small.dim(), 0));
  for (int32_t v = 0; v < n; ++v) idem_img[v] = small.idempotent(v);

  auto path_image = [&](const Path& path) {
    if (path.trivial()) return idem_img[path.src];
    Vec img = arrow_img[path.arrows.front()];
    for (size_t k = 1; k < path.arrows.size(); ++k) {
      if (is_zero(img)) break;
      img = small.multiply(img, arrow_img[path.arrows[k]]);
    }
    return img;
  };

  // well-defined iff every defining relation of the larger algebra maps to 0
  rep.well_defined = true;
  for (const PathSum& rel : relation_elements(n + 1, p, field)) {
    Vec acc(small.dim(), 0);
    for (const auto& [path, coeff] : rel.terms) {
      const Vec img = path_image(path);
      const int32_t c = field.reduce(coeff);
      for (int32_t k = 0; k < small.dim(); ++k)
        acc[k] = field.add(acc[k], field.mul(c, img[k]));
    }
    if (!is_zero(acc)) rep.well_defined = false;
  }

  Mat m(field, small.dim(), big.dim());
  for (int32_t k = 0; k < big.dim(); ++k)
    m.set_col(k, path_image(big.basis_paths()[k]));

  rep.surjective = m.rank() == static_cast<size_t>(small.dim());
  const Subspace ker = kernel(m);
  rep.kernel_dim = static_cast<int64_t>(ker.rank());
  rep.kernel_matches_formula =
      rep.kernel_dim == 2 * static_cast<int64_t>(n + 1) * (n + 1) &&
      rep.kernel_dim == big.dim() - small.dim();

  const Subspace vertex_ideal =
      two_sided_ideal(big, {big.idempotent(n)});
  rep.kernel_is_vertex_ideal = vertex_ideal == ker;
  rep.loop_relation_in_ideal = vertex_ideal.contains(big.loop_power(2 * n));
  return rep;
}

bool word_identities_check(const Algebra& a) {
  const int32_t n = a.n();
  const Quiver& q = a.quiver();
  for (int32_t r = 0; r <= n - 2; ++r) {
    const Vec lhs = word_element(
        a, r,
        cat(cat(cat(down_run(q, r - 1, 0), {q.loop_id()}), up_run(q, 0, n - 2)),
            down_run(q, n - 2, r)));
    const Vec rhs = word_element(
        a, r,
        cat(cat(cat(up_run(q, r, n - 2), down_run(q, n - 2, 0)),
                {q.loop_id()}),
            up_run(q, 0, r - 1)));
    if (lhs != rhs) return false;
  }
  for (int32_t l = 0; l <= n - 2; ++l) {
    const Vec w =
        word_element(a, n - 1, cat(down_run(q, n - 2, l), {q.up_id(l)}));
    if (!is_zero(w)) return false;
  }
  return true;
}

bool long_socle_identity_check(const Algebra& a) {
  const int32_t n = a.n();
  const Quiver& q = a.quiver();
  const Vec lhs = a.loop_power(2 * n - 1);
  const Vec rhs = word_element(
      a, 0, cat(cat(up_run(q, 0, n - 2), down_run(q, n - 2, 0)),
                {q.loop_id()}));
  return lhs == rhs;
}

bool loop_powers_basis_check(const Algebra& a) {
  Subspace span(a.field(), a.dim());
  for (int32_t l = 0; l < 2 * a.n(); ++l)
    if (!span.insert(a.loop_power(l))) return false;
  return static_cast<int32_t>(span.rank()) == 2 * a.n();
}

StructureReport structure_report(const Algebra& a) {
  StructureReport r;
  r.n = a.n();
  r.field_char = a.field().q();
  r.p_coeffs = a.deformation().coeffs;
  r.dim_algebra = a.dim();
  const Subspace comm = commutator_subspace(a);
  r.dim_commutator = static_cast<int64_t>(comm.rank());
  r.dim_center = static_cast<int64_t>(center(a).rank());
  r.dim_socle = static_cast<int64_t>(socle(a).rank());
  r.coset_basis_ok = coset_basis_check(a, comm);
  r.explicit_comm_basis_ok = explicit_comm_basis_check(a, comm);
  bool central_ok = true;
  try {
    central_ok = central_element_powers_check(a);
  } catch (const std::runtime_error&) {
    central_ok = false;
  }
  r.lambda_central_ok = central_ok;
  if (a.n() + 1 <= kMaxFullAlgebraN)
    r.pi_kernel_ok =
        projection_check(a.n(), a.deformation(), a.field()).ok();
  return r;
}

std::string to_json_string(const StructureReport& r) {
  nlohmann::json j;
  j["n"] = r.n;
  j["char"] = r.field_char;
  j["p_coeffs"] = r.p_coeffs;
  j["dim_algebra"] = r.dim_algebra;
  j["dim_commutator"] = r.dim_commutator;
  j["dim_center"] = r.dim_center;
  j["dim_socle"] = r.dim_socle;
  j["coset_basis_ok"] = r.coset_basis_ok;
  j["explicit_comm_basis_ok"] = r.explicit_comm_basis_ok;
  j["lambda_central_ok"] = r.lambda_central_ok;
  if (r.pi_kernel_ok.has_value())
    j["pi_kernel_ok"] = *r.pi_kernel_ok;
  else
    j["pi_kernel_ok"] = nullptr;
  return j.dump(2);
}

}  // namespace lnp
