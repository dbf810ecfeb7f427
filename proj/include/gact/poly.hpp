#pragma once

#include <gact/field.hpp>

#include <algorithm>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

namespace gact {

// Dense univariate polynomial over a prime field, coefficients ascending in degree.
class Poly {
 public:
  Poly() : F_() {}
  explicit Poly(const PrimeField& F) : F_(F) {}
  Poly(const PrimeField& F, std::vector<Q> coeffs) : F_(F) {
    for (auto& q : coeffs) c_.emplace_back(F, q);
    trim();
  }
  static Poly constant(const PrimeField& F, const FieldElem& a) {
    Poly p(F);
    p.c_ = {a};
    p.trim();
    return p;
  }
  static Poly constant(const PrimeField& F, long a) { return constant(F, FieldElem(F, a)); }
  // t - a
  static Poly linear_root(const PrimeField& F, const FieldElem& a) {
    Poly p(F);
    p.c_ = {-a, FieldElem(F, 1)};
    return p;
  }
  static Poly variable(const PrimeField& F) { return linear_root(F, FieldElem(F, 0)); }

  const PrimeField& field() const { return F_; }
  bool is_zero() const { return c_.empty(); }
  int degree() const { return (int)c_.size() - 1; }  // -1 for the zero polynomial
  const std::vector<FieldElem>& coeffs() const { return c_; }
  FieldElem coeff(size_t i) const { return i < c_.size() ? c_[i] : FieldElem(F_, 0); }
  FieldElem leading() const {
    if (is_zero()) throw std::domain_error("leading coefficient of 0");
    return c_.back();
  }
  bool is_constant() const { return c_.size() <= 1; }
  bool is_monic() const { return !is_zero() && leading().is_one(); }

  Poly operator-() const {
    Poly r(F_);
    for (auto& a : c_) r.c_.push_back(-a);
    return r;
  }
  Poly operator+(const Poly& o) const {
    Poly r(F_);
    size_t n = std::max(c_.size(), o.c_.size());
    r.c_.reserve(n);
    for (size_t i = 0; i < n; ++i) r.c_.push_back(coeff(i) + o.coeff(i));
    r.trim();
    return r;
  }
  Poly operator-(const Poly& o) const { return *this + (-o); }
  Poly operator*(const Poly& o) const {
    if (is_zero() || o.is_zero()) return Poly(F_);
    Poly r(F_);
    r.c_.assign(c_.size() + o.c_.size() - 1, FieldElem(F_, 0));
    for (size_t i = 0; i < c_.size(); ++i)
      for (size_t j = 0; j < o.c_.size(); ++j) r.c_[i + j] += c_[i] * o.c_[j];
    r.trim();
    return r;
  }
  Poly operator*(const FieldElem& a) const {
    Poly r(F_);
    for (auto& x : c_) r.c_.push_back(x * a);
    r.trim();
    return r;
  }
  bool operator==(const Poly& o) const {
    if (c_.size() != o.c_.size()) return false;
    for (size_t i = 0; i < c_.size(); ++i)
      if (c_[i] != o.c_[i]) return false;
    return true;
  }
  bool operator!=(const Poly& o) const { return !(*this == o); }

  // Euclidean division: *this = q*d + r with deg r < deg d.
  std::pair<Poly, Poly> divmod(const Poly& d) const {
    if (d.is_zero()) throw std::domain_error("polynomial division by zero");
    Poly q(F_), r = *this;
    FieldElem lead_inv = d.leading().inv();
    if (r.degree() >= d.degree()) q.c_.assign(r.degree() - d.degree() + 1, FieldElem(F_, 0));
    while (!r.is_zero() && r.degree() >= d.degree()) {
      int k = r.degree() - d.degree();
      FieldElem f = r.leading() * lead_inv;
      q.c_[k] = f;
      for (size_t i = 0; i < d.c_.size(); ++i) r.c_[i + k] -= f * d.c_[i];
      r.trim();
    }
    q.trim();
    return {q, r};
  }
  bool divides(const Poly& other) const { return other.divmod(*this).second.is_zero(); }

  Poly monic() const {
    if (is_zero()) return *this;
    return *this * leading().inv();
  }

  static Poly gcd(Poly a, Poly b) {
    while (!b.is_zero()) {
      Poly r = a.divmod(b).second;
      a = b;
      b = r;
    }
    return a.monic();
  }

  FieldElem eval(const FieldElem& x) const {
    FieldElem r(F_, 0);
    for (size_t i = c_.size(); i-- > 0;) r = r * x + c_[i];
    return r;
  }

  // Substitute another polynomial for the variable.
  Poly compose(const Poly& x) const {
    Poly r(F_);
    for (size_t i = c_.size(); i-- > 0;) r = r * x + constant(F_, c_[i]);
    return r;
  }

  Poly pow(unsigned long e) const {
    Poly r = constant(F_, 1), b = *this;
    while (e) {
      if (e & 1) r = r * b;
      b = b * b;
      e >>= 1;
    }
    return r;
  }

  // t |-> t^k
  Poly inflate(unsigned long k) const {
    Poly r(F_);
    if (is_zero()) return r;
    r.c_.assign((size_t)degree() * k + 1, FieldElem(F_, 0));
    for (size_t i = 0; i < c_.size(); ++i) r.c_[i * k] = c_[i];
    r.trim();
    return r;
  }

  Poly shift_up(unsigned long k) const {  // multiply by t^k
    if (is_zero()) return *this;
    Poly r(F_);
    r.c_.assign(k, FieldElem(F_, 0));
    r.c_.insert(r.c_.end(), c_.begin(), c_.end());
    return r;
  }

  unsigned long low_order() const {  // ord_0
    if (is_zero()) throw std::domain_error("ord of 0");
    for (size_t i = 0; i < c_.size(); ++i)
      if (!c_[i].is_zero()) return i;
    return 0;
  }

  std::string str(const std::string& var = "t") const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (size_t i = c_.size(); i-- > 0;) {
      if (c_[i].is_zero()) continue;
      Q v = c_[i].value();
      bool neg = v < 0;
      Q av = neg ? Q(-v) : v;
      if (first) {
        if (neg) os << "-";
        first = false;
      } else {
        os << (neg ? " - " : " + ");
      }
      bool unit = (av == 1) && i > 0;
      if (!unit) os << q_to_string(av);
      if (i > 0) {
        if (!unit) os << "*";
        os << var;
        if (i > 1) os << "^" << i;
      }
    }
    return os.str();
  }

 private:
  void trim() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
  }

  PrimeField F_;
  std::vector<FieldElem> c_;
};

// Exhaustive trial division up to the certification cap: degree 4 over F_p
// (p <= 101), degree 3 over Q. Larger inputs are rejected rather than guessed.
inline bool certify_irreducible(const Poly& p) {
  if (p.degree() < 1) return false;
  if (p.degree() == 1) return true;
  const PrimeField F = p.field();
  if (F.ch == 0) {
    if (p.degree() > 3) throw std::invalid_argument("irreducibility certification capped at degree 3 over Q");
    // degree 2 or 3: reducible iff there is a rational root a/b, b | lead, a | const
    std::vector<Z> num_div, den_div;
    Z lead_l = Z(p.leading().value().get_num()) * 1;
    Q c0 = p.coeff(0).value();
    if (c0 == 0) return false;
    Z scale = 1;
    for (auto& c : p.coeffs()) scale = lcm_z(scale, Z(c.value().get_den()));
    Z a0 = Z(p.coeff(0).value().get_num()) * (scale / Z(p.coeff(0).value().get_den()));
    Z an = Z(p.leading().value().get_num()) * (scale / Z(p.leading().value().get_den()));
    num_div = small_divisors(a0);
    den_div = small_divisors(an);
    if (num_div.empty() || den_div.empty())
      throw std::invalid_argument("coefficients too large for rational root certification");
    for (auto& a : num_div)
      for (auto& b : den_div)
        for (int s : {1, -1}) {
          FieldElem root(F, Q(s * a, b));
          if (p.eval(root).is_zero()) return false;
        }
    return true;
  }
  if (F.ch > 101) throw std::invalid_argument("irreducibility certification capped at p <= 101");
  if (p.degree() > 4) throw std::invalid_argument("irreducibility certification capped at degree 4 over F_p");
  // no root => no linear factor
  for (unsigned long a = 0; a < F.ch; ++a)
    if (p.eval(FieldElem(F, (long)a)).is_zero()) return false;
  if (p.degree() <= 3) return true;
  // degree 4: also rule out monic quadratic factors
  for (unsigned long b = 0; b < F.ch; ++b)
    for (unsigned long c = 0; c < F.ch; ++c) {
      Poly q(F, {Q(c), Q(b), Q(1)});
      if (q.divides(p)) return false;
    }
  return true;
}

}  // namespace gact
