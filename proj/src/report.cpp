#include "lnp/report.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <map>
#include <memory>
#include <sstream>
#include <stdexcept>

#include "json.hpp"
#include "lnp/structure.hpp"
#include "lnp/symform.hpp"

namespace lnp {

int32_t stabilization_index(int32_t n) {
  for (int32_t i = 1;; ++i) {
    bool all_n = true;
    for (int32_t j = 0; j < n && all_n; ++j)
      all_n = closed_form(n, j, i).value == n;
    if (all_n) return i;
  }
}

std::vector<InvariantRecord> invariant_table(int32_t n, int32_t i_max,
                                             int32_t full_algebra_max) {
  if (n < 1 || i_max < 1)
    throw std::invalid_argument("invariant_table: n >= 1, i_max >= 1");
  const bool with_full = n <= full_algebra_max && n <= kMaxFullAlgebraN;
  const Field f2(2);
  std::vector<InvariantRecord> out;
  for (int32_t j = 0; j < n; ++j) {
    std::unique_ptr<Algebra> alg;
    std::unique_ptr<CommutatorQuotient> quo;
    if (with_full) {
      alg = std::make_unique<Algebra>(
          build_algebra(n, DeformationPoly::monomial(2 * j), f2));
      quo = std::make_unique<CommutatorQuotient>(
          power_map_mod_commutator(*alg));
    }
    for (int32_t i = 1; i <= i_max; ++i) {
      const KulshammerResult r =
          kulshammer_result(n, j, i, alg.get(), quo.get());
      if (!r.agree())
        throw std::runtime_error(
            "invariant_table: source disagreement at (n=" +
            std::to_string(n) + ", j=" + std::to_string(j) +
            ", i=" + std::to_string(i) + "): full=" +
            std::to_string(r.dim_t_full) + " reduced=" +
            std::to_string(r.dim_t_reduced_plus_comm) + " formula=" +
            std::to_string(r.closed_form_plus_comm));
      InvariantRecord rec;
      rec.n = n;
      rec.j = j;
      rec.i = i;
      rec.invariant =
          r.closed_form_plus_comm - commutator_dimension_formula(n);
      rec.sources = kSourceFormula | kSourceReduced |
                    (r.dim_t_full >= 0 ? kSourceFull : 0);
      out.push_back(rec);
    }
  }
  // rows sorted by (n, j, i) -- already emitted in that order
  return out;
}

DistinguishReport distinguish(int32_t n) {
  if (n < 2) throw std::invalid_argument("distinguish: n >= 2 required");
  DistinguishReport rep;
  rep.n = n;
  rep.cartan_det = int64_t{1} << n;
  rep.simple_modules = n;
  rep.stable_from = stabilization_index(n);

  auto value = [&](int32_t j, int32_t i) { return closed_form(n, j, i).value; };

  // the pairs the i=1 invariant cannot separate
  std::map<std::pair<int32_t, int32_t>, bool> expected_open;
  for (int32_t r = 1; r <= (n - 2 + 1) / 2; ++r) {
    const int32_t lo = n - 2 * r - 1, hi = n - 2 * r;
    if (lo >= 0) expected_open[{lo, hi}] = true;
  }
  std::map<std::pair<int32_t, int32_t>, bool> i1_equal;
  for (int32_t j = 0; j < n; ++j)
    for (int32_t k = j + 1; k < n; ++k)
      if (value(j, 1) == value(k, 1)) i1_equal[{j, k}] = true;
  if (i1_equal != expected_open)
    throw std::runtime_error(
        "distinguish: i=1 coincidences differ from the expected family");

  for (int32_t j = 0; j < n; ++j)
    for (int32_t k = j + 1; k < n; ++k) {
      PairStatus st;
      st.j = j;
      st.k = k;
      for (int32_t i = 1; i <= rep.stable_from; ++i)
        if (value(j, i) != value(k, i)) {
          st.distinguished = true;
          st.at_i = i;
          break;
        }
      if (!st.distinguished && !expected_open.count({j, k}))
        throw std::runtime_error(
            "distinguish: unexpected open pair {" + std::to_string(j) + "," +
            std::to_string(k) + "} at n=" + std::to_string(n));
      rep.pairs.push_back(st);
    }
  return rep;
}

// ---------------------------------------------------------------------------
// emission

std::string invariant_csv(const std::vector<InvariantRecord>& recs) {
  std::ostringstream os;
  os << "n,j,i,invariant,source_flags\n";
  for (const auto& r : recs)
    os << r.n << ',' << r.j << ',' << r.i << ',' << r.invariant << ','
       << r.sources << '\n';
  return os.str();
}

namespace {

nlohmann::json record_json(const InvariantRecord& r) {
  nlohmann::json j;
  j["n"] = r.n;
  j["j"] = r.j;
  j["i"] = r.i;
  j["invariant"] = r.invariant;
  j["source_flags"] = r.sources;
  nlohmann::json src = nlohmann::json::array();
  if (r.sources & kSourceFull) src.push_back("full");
  if (r.sources & kSourceReduced) src.push_back("reduced");
  if (r.sources & kSourceFormula) src.push_back("formula");
  j["sources"] = src;
  return j;
}

}  // namespace

std::string invariant_json(const std::vector<InvariantRecord>& recs) {
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& r : recs) arr.push_back(record_json(r));
  return arr.dump(2);
}

std::string distinguish_csv(const DistinguishReport& r) {
  std::ostringstream os;
  os << "n,j,k,status,at_i\n";
  for (const auto& p : r.pairs) {
    os << r.n << ',' << p.j << ',' << p.k << ','
       << (p.distinguished ? "distinguished" : "open") << ',';
    if (p.distinguished) os << p.at_i;
    os << '\n';
  }
  return os.str();
}

std::string distinguish_json(const DistinguishReport& r) {
  nlohmann::json j;
  j["n"] = r.n;
  j["cartan_note"] = {{"det", r.cartan_det},
                      {"simple_modules", r.simple_modules}};
  j["stable_from"] = r.stable_from;
  nlohmann::json pairs = nlohmann::json::array();
  for (const auto& p : r.pairs) {
    nlohmann::json pj;
    pj["j"] = p.j;
    pj["k"] = p.k;
    if (p.distinguished) {
      pj["status"] = "distinguished";
      pj["at_i"] = p.at_i;
    } else {
      // not distinguished by Kulshammer invariants; no equivalence claim
      pj["status"] = "open";
    }
    pairs.push_back(pj);
  }
  j["pairs"] = pairs;
  return j.dump(2);
}

// ---------------------------------------------------------------------------
// verify suite

namespace {

class Stopwatch {
 public:
  Stopwatch() : start_(std::chrono::steady_clock::now()) {}
  double seconds() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() -
                                         start_)
        .count();
  }

 private:
  std::chrono::steady_clock::time_point start_;
};

struct SuiteRunner {
  std::vector<CheckResult> results;

  void run(const std::string& name, const std::function<bool(std::string&)>& fn) {
    Stopwatch sw;
    std::string detail;
    bool pass = false;
    try {
      pass = fn(detail);
    } catch (const std::exception& e) {
      pass = false;
      detail = e.what();
    }
    results.push_back({name, pass, sw.seconds(), detail});
  }
};

bool cartan_checks(const Algebra& a, std::string& detail) {
  const int32_t n = a.n();
  const auto c = cartan_matrix(a);
  for (int32_t i = 0; i < n; ++i)
    for (int32_t j = 0; j < n; ++j)
      if (c[i][j] != 2 * std::min(n - i, n - j)) {
        detail = "entry mismatch";
        return false;
      }
  if (matrix_determinant(c) != (int64_t{1} << n)) {
    detail = "determinant mismatch";
    return false;
  }
  return true;
}

bool dim_checks(const Algebra& a, const Subspace& comm, std::string& detail) {
  const int32_t n = a.n();
  if (a.dim() != dimension_formula(n)) {
    detail = "algebra dim";
    return false;
  }
  if (static_cast<int64_t>(comm.rank()) != commutator_dimension_formula(n)) {
    detail = "commutator dim";
    return false;
  }
  if (static_cast<int64_t>(center(a).rank()) != 2 * n) {
    detail = "centre dim";
    return false;
  }
  if (static_cast<int64_t>(socle(a).rank()) != n) {
    detail = "socle dim";
    return false;
  }
  return true;
}

bool symmetry_checks(const Algebra& a, const Subspace& comm,
                     std::string& detail) {
  const SymmetrizingForm form = gram_form(a);  // throws when degenerate
  if (!gram_symmetric(form)) {
    detail = "gram not symmetric";
    return false;
  }
  const NakayamaMap nu = nakayama(a, form);
  if (!nu.is_identity()) {
    detail = "nakayama representative differs from the identity";
    return false;
  }
  const TwistedCentre tz = twisted_centre(a, nu);
  if (static_cast<int64_t>(tz.subspace.rank() + comm.rank()) != a.dim()) {
    detail = "twisted centre dimension";
    return false;
  }
  if (!(tz.subspace == center(a))) {
    detail = "twisted centre differs from the centre";
    return false;
  }
  return true;
}

bool central_checks(const Algebra& a, std::string& detail) {
  if (!central_element_powers_check(a)) {
    detail = "powers dependent";
    return false;
  }
  const Subspace z = center(a);
  const Subspace soc = socle(a);
  if (!z.contains(soc)) {
    detail = "socle not central";
    return false;
  }
  // span of the positive powers meets the socle trivially
  const Vec lambda = central_element(a);
  Subspace powers(a.field(), a.dim());
  Vec pw = lambda;
  for (int32_t s = 1; s <= a.n() - 1; ++s) {
    powers.insert(pw);
    pw = a.multiply(pw, lambda);
  }
  if (intersect(powers, soc).rank() != 0) {
    detail = "powers meet socle";
    return false;
  }
  return true;
}

bool kulshammer_checks(const Algebra& a, const CommutatorQuotient& quo,
                       int32_t j, std::string& detail) {
  const int32_t n = a.n();
  Subspace prev = kulshammer_space(a, quo, 0);
  if (!(prev == quo.comm)) {
    detail = "T_0 != [A,A]";
    return false;
  }
  for (int32_t i = 1; i <= 5; ++i) {
    const KulshammerResult r = kulshammer_result(n, j, i, &a, &quo);
    if (!r.agree()) {
      detail = "triple disagreement at i=" + std::to_string(i);
      return false;
    }
    const Subspace ti = kulshammer_space(a, quo, i);
    if (!ti.contains(prev)) {
      detail = "chain violated at i=" + std::to_string(i);
      return false;
    }
    prev = ti;
  }
  return true;
}

}  // namespace

std::vector<CheckResult> verify_suite(int32_t n_max,
                                      int32_t full_algebra_max) {
  if (n_max < 1) throw std::invalid_argument("verify_suite: n_max >= 1");
  SuiteRunner runner;
  const Field f2(2);
  for (int32_t n = 1; n <= n_max; ++n) {
    std::vector<Algebra> algs;
    runner.run("build n=" + std::to_string(n), [&](std::string& detail) {
      for (int32_t j = 0; j < n; ++j)
        algs.push_back(
            build_algebra(n, DeformationPoly::monomial(2 * j), f2));
      detail = "dim " + std::to_string(algs.front().dim());
      return true;
    });
    if (algs.empty()) continue;

    std::vector<Subspace> comms;
    for (const Algebra& a : algs) comms.push_back(commutator_subspace(a));

    auto for_all_j = [&](const std::string& name, auto&& fn) {
      runner.run(name + " n=" + std::to_string(n), [&](std::string& detail) {
        for (int32_t j = 0; j < n; ++j) {
          std::string d;
          if (!fn(algs[j], comms[j], j, d)) {
            detail = "j=" + std::to_string(j) +
                     (d.empty() ? "" : (": " + d));
            return false;
          }
        }
        return true;
      });
    };

    for_all_j("dims", [&](const Algebra& a, const Subspace& c, int32_t,
                          std::string& d) { return dim_checks(a, c, d); });
    for_all_j("cartan", [&](const Algebra& a, const Subspace&, int32_t,
                            std::string& d) { return cartan_checks(a, d); });
    for_all_j("explicit-basis",
              [&](const Algebra& a, const Subspace&, int32_t, std::string&) {
                return explicit_basis_elements(a).size() ==
                       static_cast<size_t>(a.dim());
              });
    for_all_j("commutator-basis",
              [&](const Algebra& a, const Subspace& c, int32_t,
                  std::string&) {
                return coset_basis_check(a, c) &&
                       explicit_comm_basis_check(a, c);
              });
    for_all_j("central-element",
              [&](const Algebra& a, const Subspace&, int32_t,
                  std::string& d) { return central_checks(a, d); });
    for_all_j("symmetry-nakayama",
              [&](const Algebra& a, const Subspace& c, int32_t,
                  std::string& d) { return symmetry_checks(a, c, d); });
    for_all_j("word-identities",
              [&](const Algebra& a, const Subspace&, int32_t, std::string&) {
                return word_identities_check(a) &&
                       long_socle_identity_check(a) &&
                       loop_powers_basis_check(a);
              });
    for_all_j("kulshammer-triple",
              [&](const Algebra& a, const Subspace&, int32_t j,
                  std::string& d) {
                if (n > full_algebra_max) {
                  for (int32_t i = 1; i <= 5; ++i)
                    if (!kulshammer_result(n, j, i, nullptr, nullptr).agree())
                      return false;
                  return true;
                }
                const CommutatorQuotient quo = power_map_mod_commutator(a);
                return kulshammer_checks(a, quo, j, d);
              });

    if (n <= 5) {
      runner.run("projection n=" + std::to_string(n),
                 [&](std::string& detail) {
                   for (int32_t j = 0; j < n; ++j) {
                     const ProjectionReport pr = projection_check(
                         n, DeformationPoly::monomial(2 * j), f2);
                     if (!pr.ok()) {
                       detail = "j=" + std::to_string(j);
                       return false;
                     }
                   }
                   return true;
                 });
    }

    if (n >= 2) {
      runner.run("distinguish n=" + std::to_string(n),
                 [&](std::string& detail) {
                   const DistinguishReport rep = distinguish(n);
                   int32_t open = 0;
                   for (const auto& p : rep.pairs)
                     if (!p.distinguished) ++open;
                   detail = std::to_string(open) + " open pair(s)";
                   return true;
                 });
    }

    if (n <= 3) {
      runner.run("char-3-sample n=" + std::to_string(n),
                 [&](std::string& detail) {
                   const Field f3(3);
                   for (int32_t j = 0; j < n; ++j) {
                     const Algebra a3 =
                         build_algebra(n, DeformationPoly::monomial(2 * j), f3);
                     const Subspace c3 = commutator_subspace(a3);
                     std::string d;
                     if (!dim_checks(a3, c3, d) || !symmetry_checks(a3, c3, d)) {
                       detail = "j=" + std::to_string(j) + ": " + d;
                       return false;
                     }
                   }
                   return true;
                 });
    }
  }
  return runner.results;
}

}  // namespace lnp
