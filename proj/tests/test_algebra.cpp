#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <algorithm>
#include <set>

#include "doctest.h"
#include "lnp/algebra.hpp"

using namespace lnp;

namespace {

bool is_zero(const Vec& v) {
  return std::all_of(v.begin(), v.end(), [](int32_t x) { return x == 0; });
}

Vec add_vecs(const Field& f, const Vec& a, const Vec& b) {
  Vec out(a.size());
  for (size_t k = 0; k < a.size(); ++k) out[k] = f.add(a[k], b[k]);
  return out;
}

}  // namespace

TEST_CASE("relation elements") {
  const Field f2(2);
  const Quiver q2(2);

  SUBCASE("n=2, p=1 over GF(2)") {
    const auto rels = relation_elements(2, DeformationPoly::monomial(0), f2);
    REQUIRE(rels.size() == 3);
    // abar_0 a_0
    REQUIRE(rels[0].terms.size() == 1);
    CHECK(rels[0].terms[0].first ==
          make_path(q2, {q2.down_id(0), q2.up_id(0)}));
    // eps^4
    REQUIRE(rels[1].terms.size() == 1);
    CHECK(rels[1].terms[0].first.length() == 4);
    // eps^2 + eps^3 + a_0 abar_0
    REQUIRE(rels[2].terms.size() == 3);
    std::multiset<int32_t> lens;
    for (const auto& [p, c] : rels[2].terms) {
      lens.insert(p.length());
      CHECK(c == 1);
    }
    CHECK(lens == std::multiset<int32_t>{2, 2, 3});
  }

  SUBCASE("n=2, p=X^2: the loop term leaves the truncation") {
    const Algebra a = build_algebra(2, DeformationPoly::monomial(2), f2);
    // eps^{2j+3} = eps^5 vanishes, so eps^2 = a_0 abar_0
    CHECK(a.loop_power(2) ==
          a.path_element(make_path(q2, {q2.up_id(0), q2.down_id(0)})));
  }

  SUBCASE("n=3 over GF(3) keeps the plus signs") {
    const Field f3(3);
    const Quiver q3(3);
    const auto rels = relation_elements(3, DeformationPoly::monomial(0), f3);
    REQUIRE(rels.size() == 4);
    REQUIRE(rels[0].terms.size() == 2);
    CHECK(rels[0].terms[0].first ==
          make_path(q3, {q3.up_id(1), q3.down_id(1)}));
    CHECK(rels[0].terms[0].second == 1);
    CHECK(rels[0].terms[1].first ==
          make_path(q3, {q3.down_id(0), q3.up_id(0)}));
    CHECK(rels[0].terms[1].second == 1);
  }

  SUBCASE("n=1 degenerates to two loop relations") {
    const auto rels = relation_elements(1, DeformationPoly::monomial(0), f2);
    REQUIRE(rels.size() == 2);
    CHECK(rels[0].terms.size() == 1);
    CHECK(rels[0].terms[0].first.length() == 2);
    for (const auto& [p, c] : rels[1].terms) CHECK(p.src == 0);
  }
}

TEST_CASE("build dimensions") {
  const Field f2(2);
  CHECK(build_algebra(2, DeformationPoly::monomial(0), f2).dim() == 10);
  for (int32_t j = 0; j < 3; ++j)
    CHECK(build_algebra(3, DeformationPoly::monomial(2 * j), f2).dim() == 28);
  CHECK(build_algebra(5, DeformationPoly::monomial(4), f2).dim() == 110);

  // dimension is independent of the polynomial and of the characteristic
  DeformationPoly weird;
  weird.coeffs = {1, 1, 0, 1};
  CHECK(build_algebra(3, weird, f2).dim() == 28);
  CHECK(build_algebra(3, weird, Field(3)).dim() == 28);
  CHECK(build_algebra(3, weird, Field(5)).dim() == 28);

  CHECK_THROWS(build_algebra(0, DeformationPoly::monomial(0), f2));
  CHECK_THROWS(build_algebra(8, DeformationPoly::monomial(0), f2));

  for (int32_t n = 1; n <= 6; ++n)
    CHECK(dimension_formula(n) ==
          build_algebra(n, DeformationPoly::monomial(0), f2).dim());
}

TEST_CASE("n=1 is the two-dimensional nilpotent extension") {
  const Algebra a = build_algebra(1, DeformationPoly::monomial(0), Field(2));
  REQUIRE(a.dim() == 2);
  CHECK(a.basis_paths()[0] == trivial_path(0));
  CHECK(a.basis_paths()[1] == arrow_path(a.quiver(), 0));
  CHECK(is_zero(a.multiply(a.arrow(0), a.arrow(0))));  // eps^2 = 0
}

TEST_CASE("normal forms") {
  const Field f2(2);
  const Algebra a = build_algebra(2, DeformationPoly::monomial(0), f2);
  const Quiver& q = a.quiver();

  CHECK(is_zero(a.path_element(make_path(q, {q.down_id(0), q.up_id(0)}))));
  // eps^2 = a_0 abar_0 + eps^3 in characteristic 2
  const Vec lhs = a.loop_power(2);
  const Vec rhs = add_vecs(
      f2, a.path_element(make_path(q, {q.up_id(0), q.down_id(0)})),
      a.loop_power(3));
  CHECK(lhs == rhs);
  CHECK(a.idempotent(0) == a.path_element(trivial_path(0)));

  PathSum bad;
  bad.add(Path{0, 1, {q.up_id(0), q.up_id(0)}}, 1);
  CHECK_THROWS(a.normal_form(bad));
}

TEST_CASE("multiplication") {
  const Field f2(2);
  for (int32_t j : {0, 1, 3}) {
    const Algebra a = build_algebra(2, DeformationPoly::monomial(2 * j), f2);
    const Quiver& q = a.quiver();
    CHECK(a.multiply(a.idempotent(0), a.arrow(q.loop_id())) ==
          a.arrow(q.loop_id()));
    // socle times radical vanishes
    CHECK(is_zero(a.multiply(a.loop_power(3), a.arrow(q.loop_id()))));
    // (a_0 abar_0)^2 three ways: table square, word reduction, and the
    // substituted loop relation (eps^2 + eps^{2j+3})^2
    const Vec x = a.path_element(make_path(q, {q.up_id(0), q.down_id(0)}));
    const Vec square = a.multiply(x, x);
    const Vec word = a.path_element(make_path(
        q, {q.up_id(0), q.down_id(0), q.up_id(0), q.down_id(0)}));
    CHECK(square == word);
    const Vec eps2 = a.loop_power(2);
    CHECK(square == a.multiply(eps2, eps2));
    CHECK(is_zero(square));
  }
}

TEST_CASE("explicit path family") {
  const Field f2(2);
  SUBCASE("n=2 reproduces the ten known paths") {
    const Quiver q(2);
    const auto fam = explicit_path_basis(2);
    REQUIRE(fam.size() == 10);
    const std::vector<Path> expected = {
        trivial_path(0),
        trivial_path(1),
        arrow_path(q, q.loop_id()),
        arrow_path(q, q.up_id(0)),
        arrow_path(q, q.down_id(0)),
        make_path(q, {q.up_id(0), q.down_id(0)}),
        make_path(q, {q.loop_id(), q.up_id(0)}),
        make_path(q, {q.down_id(0), q.loop_id()}),
        make_path(q, {q.up_id(0), q.down_id(0), q.loop_id()}),
        make_path(q, {q.down_id(0), q.loop_id(), q.up_id(0)}),
    };
    for (const Path& p : expected)
      CHECK(std::count(fam.begin(), fam.end(), p) == 1);
  }

  SUBCASE("n=1 needs only the trivial path and the loop") {
    const auto fam = explicit_path_basis(1);
    REQUIRE(fam.size() == 2);
    const Algebra a = build_algebra(1, DeformationPoly::monomial(0), f2);
    CHECK(explicit_basis_elements(a).size() == 2);
  }

  SUBCASE("trivial paths appear once per vertex") {
    for (int32_t n = 1; n <= 6; ++n) {
      const auto fam = explicit_path_basis(n);
      CHECK(static_cast<int64_t>(fam.size()) == dimension_formula(n));
      int32_t trivial = 0;
      for (const Path& p : fam) trivial += p.trivial();
      CHECK(trivial == n);
    }
  }

  SUBCASE("family is a basis for every deformation") {
    for (int32_t n = 1; n <= 5; ++n)
      for (int32_t j : {0, 1, n - 1}) {
        if (j < 0) continue;
        const Algebra a =
            build_algebra(n, DeformationPoly::monomial(2 * j), f2);
        CHECK(explicit_basis_elements(a).size() ==
              static_cast<size_t>(a.dim()));
      }
  }

  SUBCASE("socle paths close the family") {
    for (int32_t n = 1; n <= 5; ++n) {
      const auto soc = socle_paths(n);
      const auto fam = explicit_path_basis(n);
      REQUIRE(soc.size() == static_cast<size_t>(n));
      for (int32_t v = 0; v < n; ++v) {
        CHECK(soc[v].src == v);
        CHECK(soc[v].tgt == v);
        CHECK(soc[v].length() == 2 * n - 1);
        CHECK(std::count(fam.begin(), fam.end(), soc[v]) == 1);
      }
    }
  }
}

TEST_CASE("cartan data") {
  const Field f2(2);
  const Algebra a2 = build_algebra(2, DeformationPoly::monomial(0), f2);
  const auto c2 = cartan_matrix(a2);
  CHECK(c2 == std::vector<std::vector<int64_t>>{{4, 2}, {2, 2}});
  CHECK(matrix_determinant(c2) == 4);

  const Algebra a3 = build_algebra(3, DeformationPoly::monomial(2), f2);
  const auto c3 = cartan_matrix(a3);
  CHECK(c3 ==
        std::vector<std::vector<int64_t>>{{6, 4, 2}, {4, 4, 2}, {2, 2, 2}});
  CHECK(matrix_determinant(c3) == 8);

  const Algebra a1 = build_algebra(1, DeformationPoly::monomial(0), f2);
  CHECK(cartan_matrix(a1) == std::vector<std::vector<int64_t>>{{2}});
  CHECK(matrix_determinant(cartan_matrix(a1)) == 2);

  for (int32_t n = 1; n <= 6; ++n) {
    const Algebra a = build_algebra(n, DeformationPoly::monomial(2), f2);
    const auto c = cartan_matrix(a);
    for (int32_t i = 0; i < n; ++i)
      for (int32_t j = 0; j < n; ++j)
        CHECK(c[i][j] == 2 * std::min(n - i, n - j));
    CHECK(matrix_determinant(c) == (int64_t{1} << n));
  }
}

TEST_CASE("associativity and grading") {
  for (int32_t q : {2, 3}) {
    const Field f(q);
    for (int32_t n = 1; n <= 3; ++n) {
      const Algebra a = build_algebra(n, DeformationPoly::monomial(0), f);
      CHECK(check_associativity(a));  // exhaustive
      CHECK(check_grading(a));
    }
  }
  const Algebra a5 = build_algebra(5, DeformationPoly::monomial(2), Field(2));
  CHECK(check_associativity(a5, 64, 7));  // sampled
  CHECK(check_grading(a5));
}

TEST_CASE("all relations vanish in the quotient") {
  for (int32_t q : {2, 3}) {
    const Field f(q);
    for (int32_t n = 1; n <= 4; ++n)
      for (int32_t j = 0; j < n; ++j) {
        const DeformationPoly p = DeformationPoly::monomial(2 * j);
        const Algebra a = build_algebra(n, p, f);
        for (const PathSum& rel : relation_elements(n, p, f))
          CHECK(is_zero(a.normal_form(rel)));
      }
  }
}

TEST_CASE("descriptor serialization is reproducible") {
  const Field f2(2);
  const Algebra a = build_algebra(3, DeformationPoly::monomial(2), f2);
  const Algebra b = build_algebra(3, DeformationPoly::monomial(2), f2);
  CHECK(a.descriptor_json() == b.descriptor_json());
  CHECK(a.descriptor_json().find("\"dim\": 28") != std::string::npos);
}

TEST_CASE("loop powers") {
  const Algebra a = build_algebra(3, DeformationPoly::monomial(0), Field(2));
  CHECK(a.loop_power(0) == a.idempotent(0));
  CHECK(is_zero(a.loop_power(6)));
  CHECK(a.power(a.arrow(0), 2) == a.loop_power(2));
  // the top loop power annihilates the loop in every L_n^p
  for (int32_t n = 1; n <= 5; ++n) {
    const Algebra b = build_algebra(n, DeformationPoly::monomial(2), Field(2));
    CHECK(is_zero(b.multiply(b.loop_power(2 * n - 1), b.arrow(0))));
  }
}

TEST_CASE("frozen descriptor basis for the ten-dimensional case") {
  const Algebra a = build_algebra(2, DeformationPoly::monomial(0), Field(2));
  // canonical basis order: trivial paths, then paths by (length, arrows)
  const std::vector<std::vector<int32_t>> expected = {
      {},        {},        {0},       {1},          {2},
      {0, 1},    {1, 2},    {2, 0},    {1, 2, 0},    {2, 0, 1}};
  REQUIRE(a.basis_paths().size() == expected.size());
  for (size_t k = 0; k < expected.size(); ++k)
    CHECK(a.basis_paths()[k].arrows == expected[k]);
  CHECK(a.basis_paths()[0].src == 0);
  CHECK(a.basis_paths()[1].src == 1);
}
