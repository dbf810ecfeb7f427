#pragma once

#include <gact/numeric.hpp>

#include <sstream>
#include <vector>

namespace gact {

// Integer lattice vector (element of M or N).
struct LatVec {
  std::vector<Z> c;

  LatVec() = default;
  explicit LatVec(size_t n) : c(n, Z(0)) {}
  LatVec(std::initializer_list<long> xs) {
    for (long x : xs) c.emplace_back(x);
  }
  static LatVec unit(size_t n, size_t i) {
    LatVec v(n);
    v.c[i] = 1;
    return v;
  }

  size_t rank() const { return c.size(); }
  bool is_zero() const {
    for (auto& x : c)
      if (x != 0) return false;
    return true;
  }
  Z sup_norm() const {
    Z m = 0;
    for (auto& x : c) m = std::max(m, Z(abs(x)));
    return m;
  }
  LatVec operator+(const LatVec& o) const {
    LatVec r(*this);
    for (size_t i = 0; i < c.size(); ++i) r.c[i] += o.c[i];
    return r;
  }
  LatVec operator-(const LatVec& o) const {
    LatVec r(*this);
    for (size_t i = 0; i < c.size(); ++i) r.c[i] -= o.c[i];
    return r;
  }
  LatVec operator-() const {
    LatVec r(*this);
    for (auto& x : r.c) x = -x;
    return r;
  }
  LatVec operator*(const Z& k) const {
    LatVec r(*this);
    for (auto& x : r.c) x *= k;
    return r;
  }
  bool operator==(const LatVec& o) const { return c == o.c; }
  bool operator!=(const LatVec& o) const { return c != o.c; }
  bool operator<(const LatVec& o) const { return c < o.c; }

  // Divide by the gcd of the coordinates (zero vector unchanged).
  LatVec primitive() const {
    Z g = 0;
    for (auto& x : c) g = gcd_z(g, x);
    if (g == 0 || g == 1) return *this;
    LatVec r(*this);
    for (auto& x : r.c) x /= g;
    return r;
  }

  std::string str() const {
    std::ostringstream os;
    if (c.size() == 1) {
      os << c[0].get_str();
      return os.str();
    }
    os << "(";
    for (size_t i = 0; i < c.size(); ++i) os << (i ? "," : "") << c[i].get_str();
    os << ")";
    return os.str();
  }
};

// Rational vector in M_Q or N_Q.
struct QVec {
  std::vector<Q> c;

  QVec() = default;
  explicit QVec(size_t n) : c(n, Q(0)) {}
  QVec(std::initializer_list<Q> xs) : c(xs) { canonicalize(); }
  explicit QVec(const LatVec& v) {
    for (auto& x : v.c) c.emplace_back(x);
  }

  void canonicalize() {
    for (auto& x : c) x.canonicalize();
  }
  size_t rank() const { return c.size(); }
  bool is_zero() const {
    for (auto& x : c)
      if (x != 0) return false;
    return true;
  }
  bool is_integral() const {
    for (auto& x : c)
      if (x.get_den() != 1) return false;
    return true;
  }
  LatVec to_lat() const {
    LatVec v(c.size());
    for (size_t i = 0; i < c.size(); ++i) v.c[i] = Z(c[i].get_num());
    return v;
  }
  Z denominator_lcm() const {
    Z d = 1;
    for (auto& x : c) d = lcm_z(d, Z(x.get_den()));
    return d;
  }
  QVec operator+(const QVec& o) const {
    QVec r(*this);
    for (size_t i = 0; i < c.size(); ++i) r.c[i] += o.c[i];
    return r;
  }
  QVec operator-(const QVec& o) const {
    QVec r(*this);
    for (size_t i = 0; i < c.size(); ++i) r.c[i] -= o.c[i];
    return r;
  }
  QVec operator-() const {
    QVec r(*this);
    for (auto& x : r.c) x = -x;
    return r;
  }
  QVec operator*(const Q& k) const {
    QVec r(*this);
    for (auto& x : r.c) x *= k;
    return r;
  }
  bool operator==(const QVec& o) const { return c == o.c; }
  bool operator!=(const QVec& o) const { return c != o.c; }
  bool operator<(const QVec& o) const {
    for (size_t i = 0; i < c.size() && i < o.c.size(); ++i) {
      if (c[i] < o.c[i]) return true;
      if (o.c[i] < c[i]) return false;
    }
    return c.size() < o.c.size();
  }

  // Integer vector on the same ray through the origin.
  LatVec primitive_direction() const {
    QVec s = *this * Q(denominator_lcm());
    return s.to_lat().primitive();
  }

  std::string str() const {
    std::ostringstream os;
    if (c.size() == 1) {
      os << q_to_string(c[0]);
      return os.str();
    }
    os << "(";
    for (size_t i = 0; i < c.size(); ++i) os << (i ? "," : "") << q_to_string(c[i]);
    os << ")";
    return os.str();
  }
};

inline Q pair_qq(const QVec& m, const QVec& v) {
  Q s = 0;
  for (size_t i = 0; i < m.c.size(); ++i) s += m.c[i] * v.c[i];
  return s;
}
inline Q pair_lq(const LatVec& m, const QVec& v) { return pair_qq(QVec(m), v); }
inline Z pair_ll(const LatVec& m, const LatVec& v) {
  Z s = 0;
  for (size_t i = 0; i < m.c.size(); ++i) s += m.c[i] * v.c[i];
  return s;
}

}  // namespace gact
