#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace lnp {

struct Arrow {
  int32_t id;
  int32_t src;
  int32_t tgt;
};

// The type-L quiver on n vertices 0..n-1: a loop at vertex 0, an arrow
// i -> i+1 and an arrow i+1 -> i between consecutive vertices. Arrow ids
// are fixed for stable ordering: loop = 0, up arrows a_i = 1+i, down
// arrows abar_i = n+i.
class Quiver {
 public:
  explicit Quiver(int32_t n);

  int32_t vertex_count() const { return n_; }
  const std::vector<Arrow>& arrows() const { return arrows_; }
  const Arrow& arrow(int32_t id) const { return arrows_.at(id); }

  int32_t loop_id() const { return 0; }
  int32_t up_id(int32_t i) const;    // a_i : i -> i+1, 0 <= i <= n-2
  int32_t down_id(int32_t i) const;  // abar_i : i+1 -> i, 0 <= i <= n-2

  std::string arrow_name(int32_t id) const;

 private:
  int32_t n_;
  std::vector<Arrow> arrows_;
};

// A path is a composable arrow sequence; the empty sequence is the trivial
// path at src (== tgt). Successive arrows compose left to right: the path
// "a_0 abar_0" traverses a_0 first.
struct Path {
  int32_t src = 0;
  int32_t tgt = 0;
  std::vector<int32_t> arrows;

  int32_t length() const { return static_cast<int32_t>(arrows.size()); }
  bool trivial() const { return arrows.empty(); }
  bool operator==(const Path&) const = default;
};

Path trivial_path(int32_t vertex);
Path arrow_path(const Quiver& q, int32_t arrow_id);

// Concatenation p1 then p2, or nullopt when tgt(p1) != src(p2).
std::optional<Path> compose(const Path& p1, const Path& p2);

// Path from an arrow id sequence; throws when the arrows do not compose.
Path make_path(const Quiver& q, const std::vector<int32_t>& arrow_ids);

// Deterministic order: length, then lexicographic arrow-id sequence, then
// source vertex (the source only discriminates trivial paths).
bool path_less(const Path& a, const Path& b);

// All paths of length <= max_len in path_less order.
std::vector<Path> enumerate_paths(const Quiver& q, int32_t max_len);

std::string path_name(const Quiver& q, const Path& p);

}  // namespace lnp
