#pragma once

#include <gact/cone.hpp>

#include <map>

namespace gact {

// e in M pairing to -1 with its distinguished ray and >= 0 with every other
// extremal ray of the cone it was certified against.
struct DemazureRoot {
  LatVec e;
  LatVec distinguished_ray;

  bool operator==(const DemazureRoot& o) const {
    return e == o.e && distinguished_ray == o.distinguished_ray;
  }
  bool operator<(const DemazureRoot& o) const {
    if (e != o.e) return e < o.e;
    return distinguished_ray < o.distinguished_ray;
  }
};

inline std::optional<DemazureRoot> is_root(const Cone& c, const LatVec& e) {
  if (c.is_zero()) throw std::domain_error("zero cone has no extremal rays");
  const auto& rays = c.extremal_rays();
  std::optional<LatVec> distinguished;
  for (auto& rho : rays) {
    Z s = pair_ll(e, rho);
    if (s == -1) {
      if (distinguished) return std::nullopt;  // cannot happen twice with the sign condition, but be safe
      distinguished = rho;
    } else if (s < 0) {
      return std::nullopt;
    }
  }
  if (!distinguished) return std::nullopt;
  return DemazureRoot{e, *distinguished};
}

// All roots with sup-norm <= bound, sorted by distinguished ray then by e.
inline std::vector<DemazureRoot> enumerate_roots(const Cone& c, long bound) {
  std::vector<DemazureRoot> out;
  if (bound < 0) return out;
  size_t n = c.rank();
  std::vector<long> x(n, -bound);
  while (true) {
    LatVec e(n);
    for (size_t i = 0; i < n; ++i) e.c[i] = x[i];
    if (auto r = is_root(c, e)) out.push_back(*r);
    size_t i = 0;
    for (; i < n; ++i) {
      if (x[i] < bound) {
        ++x[i];
        break;
      }
      x[i] = -bound;
    }
    if (i == n) break;
  }
  std::sort(out.begin(), out.end(), [](const DemazureRoot& a, const DemazureRoot& b) {
    if (a.distinguished_ray != b.distinguished_ray) return a.distinguished_ray < b.distinguished_ray;
    return a.e < b.e;
  });
  return out;
}

}  // namespace gact
