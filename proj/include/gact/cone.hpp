#pragma once

#include <gact/linalg.hpp>

#include <algorithm>
#include <set>
#include <vector>

namespace gact {

constexpr size_t kMaxRank = 4;  // exact arithmetic stays tractable up to here

struct HRep {
  std::vector<LatVec> eq;    // <a,x> = 0
  std::vector<LatVec> ineq;  // <a,x> >= 0
};

namespace detail {

inline void check_rank(size_t n) {
  if (n > kMaxRank) throw std::invalid_argument("unsupported rank > 4");
}

inline void dedupe_sort(std::vector<LatVec>& v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
}

// Enumerate subsets of size k (indices), calling f on each.
template <typename F>
void for_subsets(size_t n, size_t k, F&& f) {
  std::vector<size_t> idx(k);
  if (k > n) return;
  for (size_t i = 0; i < k; ++i) idx[i] = i;
  while (true) {
    f(idx);
    size_t i = k;
    while (i-- > 0) {
      if (idx[i] != i + n - k) {
        ++idx[i];
        for (size_t j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
        break;
      }
      if (i == 0) return;
    }
    if (k == 0) return;
  }
}

// Facet normals of the full-dimensional cone generated by `gens` inside its
// span, where `coords` are the coordinates of the generators in a basis of the
// span. Empty result means the cone is the whole span.
inline std::vector<LatVec> facet_normals_fulldim(const std::vector<LatVec>& coords, size_t d) {
  std::vector<LatVec> normals;
  if (d == 1) {
    bool pos = false, neg = false;
    for (auto& y : coords) (y.c[0] > 0 ? pos : neg) = true;
    if (pos && !neg) normals.push_back(LatVec{1});
    if (neg && !pos) normals.push_back(LatVec{(long)-1});
    return normals;
  }
  for_subsets(coords.size(), d - 1, [&](const std::vector<size_t>& idx) {
    std::vector<LatVec> sub;
    for (auto i : idx) sub.push_back(coords[i]);
    auto ker = linalg::kernel_basis(sub, d);
    if (ker.size() != 1) return;
    LatVec a = ker[0];
    bool ge = true, le = true;
    for (auto& y : coords) {
      Z s = pair_ll(a, y);
      if (s < 0) ge = false;
      if (s > 0) le = false;
    }
    if (ge)
      normals.push_back(a.primitive());
    else if (le)
      normals.push_back((-a).primitive());
  });
  dedupe_sort(normals);
  return normals;
}

}  // namespace detail

// H-representation of the cone generated by `rays` in rank n.
inline HRep vrep_to_hrep(const std::vector<LatVec>& rays_in, size_t n) {
  detail::check_rank(n);
  std::vector<LatVec> rays;
  for (auto& r : rays_in)
    if (!r.is_zero()) rays.push_back(r.primitive());
  detail::dedupe_sort(rays);
  HRep h;
  if (rays.empty()) {
    for (size_t i = 0; i < n; ++i) h.eq.push_back(LatVec::unit(n, i));
    return h;
  }
  h.eq = linalg::kernel_basis(rays, n);
  auto keep = linalg::independent_subset(rays, n);
  size_t d = keep.size();
  // coordinates of the rays in the basis formed by the independent subset
  linalg::Mat B(n, std::vector<Q>(d, Q(0)));
  for (size_t j = 0; j < d; ++j)
    for (size_t i = 0; i < n; ++i) B[i][j] = Q(rays[keep[j]].c[i]);
  std::vector<LatVec> coords;
  for (auto& r : rays) {
    std::vector<Q> b(n);
    for (size_t i = 0; i < n; ++i) b[i] = Q(r.c[i]);
    auto y = linalg::solve(B, b);
    if (!y) throw std::logic_error("ray outside its own span");
    coords.push_back(y->primitive_direction());
  }
  auto normals_y = detail::facet_normals_fulldim(coords, d);
  // lift a y-normal a to an x-normal c with B^T c = a
  linalg::Mat Bt(d, std::vector<Q>(n, Q(0)));
  for (size_t j = 0; j < d; ++j)
    for (size_t i = 0; i < n; ++i) Bt[j][i] = Q(rays[keep[j]].c[i]);
  for (auto& a : normals_y) {
    std::vector<Q> rhs(d);
    for (size_t j = 0; j < d; ++j) rhs[j] = Q(a.c[j]);
    auto c = linalg::solve(Bt, rhs);
    if (!c) throw std::logic_error("normal lift failed");
    h.ineq.push_back(c->primitive_direction());
  }
  detail::dedupe_sort(h.ineq);
  return h;
}

// Canonical generators of { x : eq x = 0, ineq x >= 0 }: extreme rays of the
// pointed part plus a +/- pair per lineality direction.
inline std::vector<LatVec> hrep_to_vrep(const HRep& h, size_t n) {
  detail::check_rank(n);
  auto S = linalg::kernel_basis(h.eq, n);
  size_t d0 = S.size();
  std::vector<LatVec> out;
  if (d0 == 0) return out;
  std::vector<LatVec> alpha;  // inequality functionals in S-coordinates
  for (auto& a : h.ineq) {
    LatVec f(d0);
    for (size_t j = 0; j < d0; ++j) f.c[j] = pair_ll(a, S[j]);
    if (!f.is_zero()) alpha.push_back(f);
  }
  detail::dedupe_sort(alpha);
  auto K = linalg::kernel_basis(alpha, d0);  // lineality (in S-coordinates)
  auto lift_to_x = [&](const LatVec& y) {
    QVec x(n);
    for (size_t j = 0; j < d0; ++j)
      for (size_t i = 0; i < n; ++i) x.c[i] += Q(y.c[j]) * Q(S[j].c[i]);
    return x.primitive_direction();
  };
  for (auto& k : K) {
    out.push_back(lift_to_x(k));
    out.push_back(lift_to_x(-k));
  }
  auto U = linalg::kernel_basis(K, d0);  // complement of the lineality
  size_t e = U.size();
  if (e > 0 && !alpha.empty()) {
    std::vector<LatVec> beta;
    for (auto& a : alpha) {
      LatVec f(e);
      for (size_t j = 0; j < e; ++j) f.c[j] = pair_ll(a, U[j]);
      if (!f.is_zero()) beta.push_back(f);
    }
    detail::dedupe_sort(beta);
    std::vector<LatVec> ext;
    auto feasible = [&](const LatVec& w) {
      for (auto& b : beta)
        if (pair_ll(b, w) < 0) return false;
      return true;
    };
    if (e == 1) {
      if (feasible(LatVec{1})) ext.push_back(LatVec{1});
      if (feasible(LatVec{(long)-1})) ext.push_back(LatVec{(long)-1});
    } else {
      detail::for_subsets(beta.size(), e - 1, [&](const std::vector<size_t>& idx) {
        std::vector<LatVec> sub;
        for (auto i : idx) sub.push_back(beta[i]);
        auto ker = linalg::kernel_basis(sub, e);
        if (ker.size() != 1) return;
        if (feasible(ker[0]))
          ext.push_back(ker[0].primitive());
        else if (feasible(-ker[0]))
          ext.push_back((-ker[0]).primitive());
      });
    }
    detail::dedupe_sort(ext);
    for (auto& w : ext) {
      LatVec y(d0);
      for (size_t j = 0; j < e; ++j)
        for (size_t i = 0; i < d0; ++i) y.c[i] += w.c[j] * U[j].c[i];
      out.push_back(lift_to_x(y));
    }
  }
  detail::dedupe_sort(out);
  return out;
}

// Rational polyhedral cone; stores the canonical V-representation (extreme
// rays, lines expanded as +/- pairs) together with the H-representation.
class Cone {
 public:
  Cone() : n_(0) {}
  static Cone from_rays(std::vector<LatVec> gens, size_t n) {
    Cone c;
    c.n_ = n;
    c.h_ = vrep_to_hrep(gens, n);
    c.rays_ = hrep_to_vrep(c.h_, n);
    return c;
  }
  static Cone from_hrep(HRep h, size_t n) {
    Cone c;
    c.n_ = n;
    c.rays_ = hrep_to_vrep(h, n);
    // rebuild for a canonical, irredundant H-representation
    c.h_ = vrep_to_hrep(c.rays_, n);
    return c;
  }
  static Cone zero(size_t n) { return from_rays({}, n); }
  static Cone full(size_t n) { return from_hrep(HRep{}, n); }
  static Cone quadrant(size_t n) {
    std::vector<LatVec> r;
    for (size_t i = 0; i < n; ++i) r.push_back(LatVec::unit(n, i));
    return from_rays(r, n);
  }
  static Cone intersect(const Cone& a, const Cone& b) {
    HRep h = a.h_;
    h.eq.insert(h.eq.end(), b.h_.eq.begin(), b.h_.eq.end());
    h.ineq.insert(h.ineq.end(), b.h_.ineq.begin(), b.h_.ineq.end());
    return from_hrep(h, a.n_);
  }

  size_t rank() const { return n_; }
  const std::vector<LatVec>& rays() const { return rays_; }
  const HRep& hrep() const { return h_; }
  bool is_zero() const { return rays_.empty(); }

  template <typename V>
  bool contains(const V& x) const {
    for (auto& a : h_.eq)
      if (pairing(a, x) != 0) return false;
    for (auto& a : h_.ineq)
      if (pairing(a, x) < 0) return false;
    return true;
  }

  size_t dim() const { return n_ - linalg::rank(h_.eq, n_); }

  bool is_strongly_convex() const {
    std::vector<LatVec> all = h_.eq;
    all.insert(all.end(), h_.ineq.begin(), h_.ineq.end());
    return linalg::rank(all, n_) == n_;
  }

  bool operator==(const Cone& o) const { return n_ == o.n_ && rays_ == o.rays_; }
  bool operator!=(const Cone& o) const { return !(*this == o); }
  bool operator<(const Cone& o) const { return rays_ < o.rays_; }

  // Extremal rays sigma(1); only meaningful for strongly convex cones.
  const std::vector<LatVec>& extremal_rays() const {
    if (!is_strongly_convex()) throw std::domain_error("extremal rays of a non-pointed cone");
    return rays_;
  }

 private:
  static Q pairing(const LatVec& a, const LatVec& x) { return Q(pair_ll(a, x)); }
  static Q pairing(const LatVec& a, const QVec& x) { return pair_lq(a, x); }

  size_t n_;
  std::vector<LatVec> rays_;
  HRep h_;
};

inline Cone dual_cone(const Cone& c) {
  HRep h;
  h.ineq = c.rays();
  return Cone::from_hrep(h, c.rank());
}

// All faces of the given dimension.
inline std::vector<Cone> faces(const Cone& c, size_t d) {
  std::vector<Cone> out;
  const auto& ineq = c.hrep().ineq;
  std::set<std::vector<LatVec>> seen;
  for (size_t k = 0; k <= ineq.size(); ++k) {
    detail::for_subsets(ineq.size(), k, [&](const std::vector<size_t>& idx) {
      HRep h = c.hrep();
      for (auto i : idx) h.eq.push_back(ineq[i]);
      Cone f = Cone::from_hrep(h, c.rank());
      if (f.dim() != d) return;
      if (seen.insert(f.rays()).second) out.push_back(f);
    });
  }
  return out;
}

inline bool is_face(const Cone& c, const Cone& f) {
  for (auto& r : f.rays())
    if (!c.contains(r)) return false;
  HRep h = c.hrep();
  for (auto& a : c.hrep().ineq) {
    bool tight = true;
    for (auto& r : f.rays())
      if (pair_ll(a, r) != 0) {
        tight = false;
        break;
      }
    if (tight) h.eq.push_back(a);
  }
  return Cone::from_hrep(h, c.rank()) == f;
}

// F* = F^perp intersect dual(c), a face of the dual cone.
inline Cone dual_face(const Cone& c, const Cone& f) {
  if (!is_face(c, f)) throw std::invalid_argument("dual_face: not a face");
  HRep h;
  h.eq = f.rays();
  h.ineq = c.rays();
  return Cone::from_hrep(h, c.rank());
}

// Nonzero lattice points of c with sup-norm <= bound.
inline std::vector<LatVec> box_points(const Cone& c, long bound) {
  size_t n = c.rank();
  std::vector<LatVec> pts;
  std::vector<long> x(n, -bound);
  if (bound < 0) return pts;
  while (true) {
    LatVec v(n);
    for (size_t i = 0; i < n; ++i) v.c[i] = x[i];
    if (!v.is_zero() && c.contains(v)) pts.push_back(v);
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
  return pts;
}

// Prune points that are sums of two others in the list.
inline std::vector<LatVec> prune_sums(const std::vector<LatVec>& pts) {
  std::set<LatVec> all(pts.begin(), pts.end());
  std::vector<LatVec> basis;
  for (auto& p : pts) {
    bool decomposable = false;
    for (auto& q : pts) {
      if (q == p) continue;
      LatVec r = p - q;
      if (r == p) continue;
      if (all.count(r)) {
        decomposable = true;
        break;
      }
    }
    if (!decomposable) basis.push_back(p);
  }
  std::sort(basis.begin(), basis.end());
  return basis;
}

// Lattice points of c with sup-norm <= bound, pruned of points that are sums
// of two others; an over-approximation of the Hilbert basis, exact once the
// bound is large enough.
inline std::vector<LatVec> hilbert_points(const Cone& c, long bound) {
  return prune_sums(box_points(c, bound));
}

}  // namespace gact
