#include "lnp/quiver.hpp"

#include <algorithm>
#include <stdexcept>

namespace lnp {

Quiver::Quiver(int32_t n) : n_(n) {
  if (n < 1) throw std::invalid_argument("Quiver: need at least one vertex");
  arrows_.push_back({0, 0, 0});  // loop at vertex 0
  for (int32_t i = 0; i + 1 < n; ++i) arrows_.push_back({1 + i, i, i + 1});
  for (int32_t i = 0; i + 1 < n; ++i) arrows_.push_back({n + i, i + 1, i});
}

int32_t Quiver::up_id(int32_t i) const {
  if (i < 0 || i > n_ - 2) throw std::out_of_range("Quiver::up_id");
  return 1 + i;
}

int32_t Quiver::down_id(int32_t i) const {
  if (i < 0 || i > n_ - 2) throw std::out_of_range("Quiver::down_id");
  return n_ + i;
}

std::string Quiver::arrow_name(int32_t id) const {
  if (id == 0) return "eps";
  if (id < n_) return "a" + std::to_string(id - 1);
  return "ab" + std::to_string(id - n_);
}

Path trivial_path(int32_t vertex) { return Path{vertex, vertex, {}}; }

Path arrow_path(const Quiver& q, int32_t arrow_id) {
  const Arrow& a = q.arrow(arrow_id);
  return Path{a.src, a.tgt, {arrow_id}};
}

std::optional<Path> compose(const Path& p1, const Path& p2) {
  if (p1.tgt != p2.src) return std::nullopt;
  Path out{p1.src, p2.tgt, p1.arrows};
  out.arrows.insert(out.arrows.end(), p2.arrows.begin(), p2.arrows.end());
  return out;
}

Path make_path(const Quiver& q, const std::vector<int32_t>& arrow_ids) {
  if (arrow_ids.empty())
    throw std::invalid_argument("make_path: empty word has no source");
  Path p = arrow_path(q, arrow_ids.front());
  for (size_t k = 1; k < arrow_ids.size(); ++k) {
    auto next = compose(p, arrow_path(q, arrow_ids[k]));
    if (!next)
      throw std::invalid_argument("make_path: arrows do not compose");
    p = std::move(*next);
  }
  return p;
}

bool path_less(const Path& a, const Path& b) {
  if (a.length() != b.length()) return a.length() < b.length();
  if (a.arrows != b.arrows) return a.arrows < b.arrows;
  return a.src < b.src;
}

std::vector<Path> enumerate_paths(const Quiver& q, int32_t max_len) {
  if (max_len < 0) throw std::invalid_argument("enumerate_paths: max_len < 0");
  std::vector<Path> out;
  std::vector<Path> level;
  for (int32_t v = 0; v < q.vertex_count(); ++v)
    level.push_back(trivial_path(v));
  for (int32_t len = 0; len <= max_len; ++len) {
    std::sort(level.begin(), level.end(), path_less);
    out.insert(out.end(), level.begin(), level.end());
    if (len == max_len) break;
    std::vector<Path> next;
    for (const Path& p : level)
      for (const Arrow& a : q.arrows())
        if (a.src == p.tgt) {
          Path e = p;
          e.arrows.push_back(a.id);
          e.tgt = a.tgt;
          next.push_back(std::move(e));
        }
    level = std::move(next);
  }
  return out;
}

std::string path_name(const Quiver& q, const Path& p) {
  if (p.trivial()) return "e" + std::to_string(p.src);
  std::string s;
  for (size_t k = 0; k < p.arrows.size(); ++k) {
    if (k) s += ".";
    s += q.arrow_name(p.arrows[k]);
  }
  return s;
}

}  // namespace lnp
