#pragma once

#include <gact/curve.hpp>
#include <gact/lattice.hpp>

#include <map>
#include <sstream>

namespace gact {

// True when the rendering has a top-level sum and so needs parentheses as a factor.
inline bool needs_parens(const std::string& s) {
  int depth = 0;
  for (size_t i = 0; i + 2 < s.size(); ++i) {
    if (s[i] == '(') ++depth;
    if (s[i] == ')') --depth;
    if (depth == 0 && s[i] == ' ' && (s[i + 1] == '+' || s[i + 1] == '-') && s[i + 2] == ' ') return true;
  }
  return false;
}

// Finite sum of f * X^m with f a rational function of the base curve. A
// component may be expressed in the cover variable zeta with t = zeta^d; such
// components never belong to the algebra and mark failed closure.
class GradedElement {
 public:
  struct Component {
    RatFunc f;
    bool in_zeta = false;
  };

  GradedElement() = default;
  GradedElement(size_t rank, const PrimeField& F) : rank_(rank), F_(F) {}

  static GradedElement monomial(size_t rank, const PrimeField& F, const LatVec& m, const RatFunc& f,
                                bool in_zeta = false) {
    GradedElement g(rank, F);
    g.add(m, f, in_zeta);
    return g;
  }
  static GradedElement character(size_t rank, const PrimeField& F, const LatVec& m) {
    return monomial(rank, F, m, RatFunc::constant(F, 1));
  }
  static GradedElement one(size_t rank, const PrimeField& F) { return character(rank, F, LatVec(rank)); }

  size_t rank() const { return rank_; }
  const PrimeField& field() const { return F_; }
  const std::map<LatVec, Component>& components() const { return c_; }
  bool is_zero() const { return c_.empty(); }
  bool has_zeta() const {
    for (auto& [m, comp] : c_)
      if (comp.in_zeta) return true;
    return false;
  }
  bool is_homogeneous() const { return c_.size() == 1; }

  void add(const LatVec& m, const RatFunc& f, bool in_zeta = false) {
    if (f.is_zero()) return;
    auto it = c_.find(m);
    if (it == c_.end()) {
      c_[m] = {f, in_zeta};
      return;
    }
    if (it->second.in_zeta != in_zeta) throw std::invalid_argument("mixing t and zeta components at one degree");
    it->second.f += f;
    if (it->second.f.is_zero()) c_.erase(it);
  }

  GradedElement operator+(const GradedElement& o) const {
    GradedElement r = *this;
    for (auto& [m, comp] : o.c_) r.add(m, comp.f, comp.in_zeta);
    return r;
  }
  GradedElement operator-() const {
    GradedElement r(rank_, F_);
    for (auto& [m, comp] : c_) r.c_[m] = {-comp.f, comp.in_zeta};
    return r;
  }
  GradedElement operator-(const GradedElement& o) const { return *this + (-o); }
  GradedElement operator*(const GradedElement& o) const {
    GradedElement r(rank_, F_);
    for (auto& [m, a] : c_)
      for (auto& [m2, b] : o.c_) {
        if (a.in_zeta || b.in_zeta) throw std::invalid_argument("product of zeta-expressed components");
        r.add(m + m2, a.f * b.f);
      }
    return r;
  }
  GradedElement operator*(const FieldElem& k) const {
    GradedElement r(rank_, F_);
    for (auto& [m, comp] : c_) {
      RatFunc f = comp.f * k;
      if (!f.is_zero()) r.c_[m] = {f, comp.in_zeta};
    }
    return r;
  }
  bool operator==(const GradedElement& o) const {
    if (c_.size() != o.c_.size()) return false;
    for (auto it = c_.begin(), jt = o.c_.begin(); it != c_.end(); ++it, ++jt) {
      if (!(it->first == jt->first)) return false;
      if (it->second.in_zeta != jt->second.in_zeta || it->second.f != jt->second.f) return false;
    }
    return true;
  }
  bool operator!=(const GradedElement& o) const { return !(*this == o); }

  std::string str() const {
    if (c_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto& [m, comp] : c_) {
      if (!first) os << " + ";
      first = false;
      std::string fs = comp.f.str(comp.in_zeta ? "zeta" : "t");
      bool is_one = !comp.in_zeta && comp.f == RatFunc::constant(F_, 1);
      if (m.is_zero()) {
        os << fs;
        continue;
      }
      if (is_one) {
        os << "X^" << m.str();
      } else {
        os << (needs_parens(fs) ? "(" + fs + ")" : fs) << "*X^" << m.str();
      }
    }
    return os.str();
  }

 private:
  size_t rank_ = 0;
  PrimeField F_;
  std::map<LatVec, Component> c_;
};

}  // namespace gact
