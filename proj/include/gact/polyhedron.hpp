#pragma once

#include <gact/cone.hpp>

#include <map>
#include <optional>

namespace gact {

// Minkowski sum conv(vertices) + tail cone; the vertex list is kept minimal.
class SigmaPolyhedron {
 public:
  SigmaPolyhedron() = default;
  SigmaPolyhedron(std::vector<QVec> vertices, Cone tail) : tail_(std::move(tail)) {
    if (vertices.empty()) throw std::invalid_argument("polyhedron needs at least one vertex");
    vs_ = std::move(vertices);
    minimize();
  }
  // The cone itself, as the polyhedron {0} + tail.
  static SigmaPolyhedron cone_itself(const Cone& tail) {
    return SigmaPolyhedron({QVec(tail.rank())}, tail);
  }
  static SigmaPolyhedron translate(const QVec& v, const Cone& tail) { return SigmaPolyhedron({v}, tail); }

  const std::vector<QVec>& vertices() const { return vs_; }
  const Cone& tail() const { return tail_; }
  size_t rank() const { return tail_.rank(); }
  bool is_single_vertex() const { return vs_.size() == 1; }

  bool operator==(const SigmaPolyhedron& o) const { return vs_ == o.vs_ && tail_ == o.tail_; }
  bool operator!=(const SigmaPolyhedron& o) const { return !(*this == o); }

  // min over vertices of <m, v>; -infinity (nullopt) off the dual of the tail,
  // where the true support function is unbounded below.
  std::optional<Q> support_value(const LatVec& m) const {
    for (auto& r : tail_.rays())
      if (pair_ll(m, r) < 0) return std::nullopt;
    return vertex_min(m);
  }

  // min over vertices of <m, v>, defined for every m (used for D(e) at roots).
  Q vertex_min(const LatVec& m) const {
    Q best = pair_lq(m, vs_[0]);
    for (size_t i = 1; i < vs_.size(); ++i) best = std::min(best, pair_lq(m, vs_[i]));
    return best;
  }

  QVec argmin_vertex(const LatVec& m) const {
    QVec best = vs_[0];
    for (auto& v : vs_)
      if (pair_lq(m, v) < pair_lq(m, best)) best = v;
    return best;
  }

  SigmaPolyhedron minkowski_sum(const SigmaPolyhedron& o) const {
    if (tail_ != o.tail_) throw std::invalid_argument("minkowski_sum: tail mismatch");
    std::vector<QVec> vs;
    for (auto& a : vs_)
      for (auto& b : o.vs_) vs.push_back(a + b);
    return SigmaPolyhedron(vs, tail_);
  }

  SigmaPolyhedron dilate(const Z& k) const {
    if (k <= 0) throw std::invalid_argument("dilate: factor must be positive");
    std::vector<QVec> vs;
    for (auto& v : vs_) vs.push_back(v * Q(k));
    return SigmaPolyhedron(vs, tail_);
  }

  SigmaPolyhedron translate_by(const QVec& w) const {
    std::vector<QVec> vs;
    for (auto& v : vs_) vs.push_back(v + w);
    return SigmaPolyhedron(vs, tail_);
  }

  bool contains(const QVec& x) const {
    auto h = lifted_hrep(vs_, tail_);
    return lifted_contains(h, x);
  }

  // Full-dimensional cells of the normal quasifan inside dual(tail): on the
  // cell of v the support function is <., v>.
  std::vector<std::pair<QVec, Cone>> normal_cells() const {
    std::vector<std::pair<QVec, Cone>> cells;
    size_t n = rank();
    for (auto& v : vs_) {
      HRep h;
      for (auto& w : vs_) {
        if (w == v) continue;
        h.ineq.push_back((w - v).primitive_direction());
      }
      for (auto& r : tail_.rays()) h.ineq.push_back(r);
      Cone cell = Cone::from_hrep(h, n);
      if (cell.dim() == n) cells.push_back({v, cell});
    }
    return cells;
  }

  // H-representation of conv(vertices)+tail via the homogenization cone in
  // rank n+1: a point x lies in the polyhedron iff (x,1) satisfies it.
  static HRep lifted_hrep(const std::vector<QVec>& vs, const Cone& tail) {
    size_t n = tail.rank();
    std::vector<LatVec> gens;
    for (auto& v : vs) {
      QVec lift(n + 1);
      for (size_t i = 0; i < n; ++i) lift.c[i] = v.c[i];
      lift.c[n] = 1;
      gens.push_back(lift.primitive_direction());
    }
    for (auto& r : tail.rays()) {
      LatVec lift(n + 1);
      for (size_t i = 0; i < n; ++i) lift.c[i] = r.c[i];
      gens.push_back(lift);
    }
    return vrep_to_hrep(gens, n + 1);
  }
 private:
  static bool lifted_contains(const HRep& h, const QVec& x) {
    QVec lift(x.rank() + 1);
    for (size_t i = 0; i < x.rank(); ++i) lift.c[i] = x.c[i];
    lift.c[x.rank()] = 1;
    for (auto& a : h.eq)
      if (pair_lq(a, lift) != 0) return false;
    for (auto& a : h.ineq)
      if (pair_lq(a, lift) < 0) return false;
    return true;
  }

  void minimize() {
    for (auto& v : vs_) v.canonicalize();
    std::sort(vs_.begin(), vs_.end());
    vs_.erase(std::unique(vs_.begin(), vs_.end()), vs_.end());
    // drop any vertex contained in the hull of the others plus the tail
    bool changed = true;
    while (changed && vs_.size() > 1) {
      changed = false;
      for (size_t i = 0; i < vs_.size(); ++i) {
        std::vector<QVec> others;
        for (size_t j = 0; j < vs_.size(); ++j)
          if (j != i) others.push_back(vs_[j]);
        auto h = lifted_hrep(others, tail_);
        if (lifted_contains(h, vs_[i])) {
          vs_.erase(vs_.begin() + i);
          changed = true;
          break;
        }
      }
    }
  }

  std::vector<QVec> vs_;
  Cone tail_;
};

inline HRep homogenization_hrep(const SigmaPolyhedron& P) {
  return SigmaPolyhedron::lifted_hrep(P.vertices(), P.tail());
}

// Subdivision of a common support cone into full-dimensional cells.
struct QuasiFan {
  std::vector<Cone> cells;

  bool operator==(const QuasiFan& o) const { return cells == o.cells; }

  void sort_cells() {
    std::sort(cells.begin(), cells.end());
    cells.erase(std::unique(cells.begin(), cells.end()), cells.end());
  }
};

// Coarsest common refinement: all full-dimensional pairwise intersections.
inline QuasiFan common_refinement(const std::vector<QuasiFan>& fans, size_t n) {
  QuasiFan out;
  if (fans.empty()) return out;
  out = fans[0];
  out.sort_cells();
  for (size_t k = 1; k < fans.size(); ++k) {
    QuasiFan next;
    for (auto& a : out.cells)
      for (auto& b : fans[k].cells) {
        Cone c = Cone::intersect(a, b);
        if (c.dim() == n) next.cells.push_back(c);
      }
    next.sort_cells();
    out = next;
  }
  return out;
}

}  // namespace gact
