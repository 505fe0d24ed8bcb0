#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <random>

#include "doctest.h"
#include "lnp/quiver.hpp"

using namespace lnp;

namespace {

// independent path counter: powers of the arrow adjacency matrix
std::vector<std::vector<int64_t>> adjacency(const Quiver& q) {
  const int32_t n = q.vertex_count();
  std::vector<std::vector<int64_t>> m(n, std::vector<int64_t>(n, 0));
  for (const Arrow& a : q.arrows()) ++m[a.src][a.tgt];
  return m;
}

std::vector<std::vector<int64_t>> mat_mul(
    const std::vector<std::vector<int64_t>>& a,
    const std::vector<std::vector<int64_t>>& b) {
  const size_t n = a.size();
  std::vector<std::vector<int64_t>> c(n, std::vector<int64_t>(n, 0));
  for (size_t i = 0; i < n; ++i)
    for (size_t k = 0; k < n; ++k)
      for (size_t j = 0; j < n; ++j) c[i][j] += a[i][k] * b[k][j];
  return c;
}

int64_t walk_count(const Quiver& q, int32_t len) {
  auto m = adjacency(q);
  std::vector<std::vector<int64_t>> p(m.size(),
                                      std::vector<int64_t>(m.size(), 0));
  for (size_t i = 0; i < m.size(); ++i) p[i][i] = 1;
  for (int32_t l = 0; l < len; ++l) p = mat_mul(p, m);
  int64_t total = 0;
  for (const auto& row : p)
    for (int64_t x : row) total += x;
  return total;
}

}  // namespace

TEST_CASE("quiver shape") {
  CHECK_THROWS(Quiver(0));
  const Quiver q1(1);
  CHECK(q1.arrows().size() == 1);
  CHECK(q1.arrow(0).src == 0);
  CHECK(q1.arrow(0).tgt == 0);

  const Quiver q2(2);
  REQUIRE(q2.arrows().size() == 3);
  CHECK(q2.arrow(q2.loop_id()).src == 0);
  CHECK(q2.arrow(q2.up_id(0)).src == 0);
  CHECK(q2.arrow(q2.up_id(0)).tgt == 1);
  CHECK(q2.arrow(q2.down_id(0)).src == 1);
  CHECK(q2.arrow(q2.down_id(0)).tgt == 0);

  CHECK(Quiver(5).arrows().size() == 9);  // 2n-1
}

TEST_CASE("compose") {
  const Quiver q(2);
  const Path eps = arrow_path(q, q.loop_id());
  const Path a0 = arrow_path(q, q.up_id(0));
  const Path ab0 = arrow_path(q, q.down_id(0));

  auto r = compose(trivial_path(0), eps);
  REQUIRE(r.has_value());
  CHECK(*r == eps);

  r = compose(a0, ab0);
  REQUIRE(r.has_value());
  CHECK(r->src == 0);
  CHECK(r->tgt == 0);
  CHECK(r->length() == 2);

  CHECK_FALSE(compose(a0, a0).has_value());
}

TEST_CASE("compose is associative where defined") {
  std::mt19937_64 rng(3);
  const Quiver q(4);
  const auto paths = enumerate_paths(q, 4);
  for (int rep = 0; rep < 500; ++rep) {
    const Path& a = paths[rng() % paths.size()];
    const Path& b = paths[rng() % paths.size()];
    const Path& c = paths[rng() % paths.size()];
    const auto ab = compose(a, b);
    const auto bc = compose(b, c);
    if (ab && bc) {
      const auto left = compose(*ab, c);
      const auto right = compose(a, *bc);
      REQUIRE(left.has_value());
      REQUIRE(right.has_value());
      CHECK(*left == *right);
    }
  }
}

TEST_CASE("enumeration order and counts") {
  const Quiver q(2);
  const auto l0 = enumerate_paths(q, 0);
  REQUIRE(l0.size() == 2);
  CHECK(l0[0] == trivial_path(0));
  CHECK(l0[1] == trivial_path(1));

  const auto l1 = enumerate_paths(q, 1);
  REQUIRE(l1.size() == 5);
  CHECK(l1[2] == arrow_path(q, q.loop_id()));
  CHECK(l1[3] == arrow_path(q, q.up_id(0)));
  CHECK(l1[4] == arrow_path(q, q.down_id(0)));

  // L_2 up to length 3: frozen against the adjacency-power count
  const auto l3 = enumerate_paths(q, 3);
  CHECK(l3.size() == 18);
  int64_t oracle = 0;
  for (int32_t len = 0; len <= 3; ++len) oracle += walk_count(q, len);
  CHECK(oracle == 18);

  for (int32_t n = 1; n <= 5; ++n) {
    const Quiver qn(n);
    const auto all = enumerate_paths(qn, 2 * n);
    int64_t expect = 0;
    for (int32_t len = 0; len <= 2 * n; ++len) expect += walk_count(qn, len);
    CHECK(static_cast<int64_t>(all.size()) == expect);
    // deterministic and strictly ordered
    for (size_t k = 1; k < all.size(); ++k) CHECK(path_less(all[k - 1], all[k]));
  }
}

TEST_CASE("make_path validation") {
  const Quiver q(3);
  CHECK_THROWS(make_path(q, {q.up_id(0), q.up_id(0)}));
  const Path p = make_path(q, {q.up_id(0), q.up_id(1), q.down_id(1)});
  CHECK(p.src == 0);
  CHECK(p.tgt == 1);
}
