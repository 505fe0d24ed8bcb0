#pragma once

#include <string>
#include <vector>

#include "lnp/kulshammer.hpp"

namespace lnp {

// source_flags bits
constexpr unsigned kSourceFull = 1;
constexpr unsigned kSourceReduced = 2;
constexpr unsigned kSourceFormula = 4;

struct InvariantRecord {
  int32_t n = 0, j = 0, i = 0;
  int64_t invariant = 0;  // dim T_i - dim [A,A]
  unsigned sources = 0;
};

// least i with invariant == n for every j; rows beyond it repeat
int32_t stabilization_index(int32_t n);

// Full (j, i) grid for 0 <= j < n, 1 <= i <= i_max. Every cell is computed
// by the closed formula and confirmed by the reduced model; cells with
// n <= full_algebra_max are additionally confirmed against the full
// algebra over GF(2). Any cross-source disagreement throws, naming the
// offending (n, j, i).
std::vector<InvariantRecord> invariant_table(int32_t n, int32_t i_max,
                                             int32_t full_algebra_max = 6);

struct PairStatus {
  int32_t j = 0, k = 0;  // j < k
  bool distinguished = false;
  int32_t at_i = 0;  // least separating i when distinguished
};

// "open" means: not distinguished by these invariants; it never claims the
// two algebras are equivalent.
struct DistinguishReport {
  int32_t n = 0;
  int64_t cartan_det = 0;  // 2^n
  int32_t simple_modules = 0;
  int32_t stable_from = 0;
  std::vector<PairStatus> pairs;
};

// Marks every unordered pair {j,k} with the least separating i, or open.
// The open pairs must coincide with the i=1 coincidence family
// {n-2r, n-2r-1} minus the pairs separated at higher i; an open pair
// outside that family throws.
DistinguishReport distinguish(int32_t n);

struct CheckResult {
  std::string name;
  bool pass = false;
  double seconds = 0.0;
  std::string detail;
};

// dimension / Cartan / basis / commutator / centre / socle / symmetry /
// Nakayama / projection / word-identity / Kulshammer-triple checks over
// 1 <= n <= n_max, 0 <= j <= n-1
std::vector<CheckResult> verify_suite(int32_t n_max,
                                      int32_t full_algebra_max = 6);

std::string invariant_csv(const std::vector<InvariantRecord>& recs);
std::string invariant_json(const std::vector<InvariantRecord>& recs);
std::string distinguish_csv(const DistinguishReport& r);
std::string distinguish_json(const DistinguishReport& r);

}  // namespace lnp
