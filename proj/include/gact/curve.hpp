#pragma once

#include <gact/ratfunc.hpp>

#include <map>
#include <sstream>
#include <variant>

namespace gact {

enum class CurveKind { Affine, Projective };

// Closed point of A^1 or P^1: a monic irreducible polynomial, or the point at
// infinity (projective only, degree one).
class CurvePoint {
 public:
  static CurvePoint finite(const Poly& p) {
    if (!p.is_monic() || p.degree() < 1) throw std::invalid_argument("point polynomial must be monic nonconstant");
    if (!certify_irreducible(p)) throw std::invalid_argument("point polynomial not certified irreducible");
    CurvePoint z;
    z.p_ = p;
    return z;
  }
  static CurvePoint rational(const PrimeField& F, const FieldElem& a) {
    return finite(Poly::linear_root(F, a));
  }
  static CurvePoint rational(const PrimeField& F, long a) { return rational(F, FieldElem(F, a)); }
  static CurvePoint infinity() {
    CurvePoint z;
    z.inf_ = true;
    return z;
  }

  bool is_infinity() const { return inf_; }
  const Poly& poly() const {
    if (inf_) throw std::domain_error("infinity has no polynomial");
    return p_;
  }
  // [kappa_z : k]
  unsigned long degree() const { return inf_ ? 1 : (unsigned long)p_.degree(); }
  bool is_rational() const { return degree() == 1; }

  bool operator==(const CurvePoint& o) const {
    if (inf_ != o.inf_) return false;
    return inf_ || p_ == o.p_;
  }
  bool operator!=(const CurvePoint& o) const { return !(*this == o); }
  bool operator<(const CurvePoint& o) const {
    if (inf_ != o.inf_) return !inf_;  // finite points sort before infinity
    if (inf_) return false;
    if (p_.degree() != o.p_.degree()) return p_.degree() < o.p_.degree();
    for (int i = p_.degree(); i >= 0; --i) {
      Q a = p_.coeff(i).value(), b = o.p_.coeff(i).value();
      if (a != b) return a < b;
    }
    return false;
  }

  std::string str() const { return inf_ ? "infinity" : "[" + p_.str() + "]"; }

 private:
  bool inf_ = false;
  Poly p_;
};

// Weil Q-divisor on the curve; zero coefficients are never stored.
class QDivisor {
 public:
  QDivisor() = default;

  const std::map<CurvePoint, Q>& support() const { return m_; }
  Q coeff(const CurvePoint& z) const {
    auto it = m_.find(z);
    return it == m_.end() ? Q(0) : it->second;
  }
  void set(const CurvePoint& z, const Q& a) {
    if (a == 0)
      m_.erase(z);
    else
      m_[z] = a;
  }
  void add(const CurvePoint& z, const Q& a) { set(z, coeff(z) + a); }
  bool empty() const { return m_.empty(); }

  QDivisor operator+(const QDivisor& o) const {
    QDivisor r = *this;
    for (auto& [z, a] : o.m_) r.add(z, a);
    return r;
  }
  QDivisor operator-() const {
    QDivisor r;
    for (auto& [z, a] : m_) r.m_[z] = -a;
    return r;
  }
  QDivisor operator-(const QDivisor& o) const { return *this + (-o); }
  QDivisor operator*(const Q& k) const {
    QDivisor r;
    if (k != 0)
      for (auto& [z, a] : m_) r.m_[z] = a * k;
    return r;
  }
  bool operator==(const QDivisor& o) const { return m_ == o.m_; }

  QDivisor floor() const {
    QDivisor r;
    for (auto& [z, a] : m_) r.set(z, Q(floor_q(a)));
    return r;
  }
  QDivisor frac() const {
    QDivisor r;
    for (auto& [z, a] : m_) r.set(z, frac_q(a));
    return r;
  }
  bool is_effective() const {
    for (auto& [z, a] : m_)
      if (a < 0) return false;
    return true;
  }
  bool is_integral() const {
    for (auto& [z, a] : m_)
      if (a.get_den() != 1) return false;
    return true;
  }
  // Degree weighted by residue degrees.
  Q degree() const {
    Q d = 0;
    for (auto& [z, a] : m_) d += Q(z.degree()) * a;
    return d;
  }

  std::string str() const {
    if (m_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto& [z, a] : m_) {
      if (!first) os << " + ";
      first = false;
      os << q_to_string(a) << "*" << z.str();
    }
    return os.str();
  }

 private:
  std::map<CurvePoint, Q> m_;
};

inline long ord_at(const RatFunc& f, const CurvePoint& z) {
  if (f.is_zero()) throw std::domain_error("ord of the zero function");
  if (z.is_infinity()) return f.den().degree() - f.num().degree();
  auto mult = [&](Poly p) {
    long k = 0;
    while (true) {
      auto [q, r] = p.divmod(z.poly());
      if (!r.is_zero()) return k;
      p = q;
      ++k;
    }
  };
  return mult(f.num()) - mult(f.den());
}

struct DivisorError {
  std::string reason;
};

// div f restricted to locatable support: the declared points, plus linear
// factors found by root scanning. Zeros may stay unlocated (they are only ever
// used through lower bounds); a nonconstant unlocated part in the denominator
// is an error. On P^1 the infinity coefficient is appended and deg div f = 0
// is asserted, counting the unlocated part by its polynomial degree.
inline std::variant<QDivisor, DivisorError> principal_divisor(const RatFunc& f,
                                                              const std::vector<CurvePoint>& declared,
                                                              CurveKind curve) {
  if (f.is_zero()) return DivisorError{"div of the zero function"};
  const PrimeField F = f.field();
  QDivisor div;
  auto strip = [&](Poly p, auto&& record) {
    for (auto& z : declared) {
      if (z.is_infinity()) continue;
      long k = 0;
      while (true) {
        auto [q, r] = p.divmod(z.poly());
        if (!r.is_zero()) break;
        p = q;
        ++k;
      }
      if (k) record(z, k);
    }
    // linear factor scan
    std::vector<FieldElem> candidates;
    if (F.ch != 0) {
      for (unsigned long a = 0; a < F.ch; ++a) candidates.emplace_back(F, (long)a);
    } else if (!p.is_constant()) {
      candidates.emplace_back(F, 0L);
      Z scale = 1;
      for (auto& c : p.coeffs()) scale = lcm_z(scale, Z(c.value().get_den()));
      Q low = p.coeff(p.low_order()).value();
      Z a0 = Z(low.get_num()) * (scale / Z(low.get_den()));
      Z an = Z(p.leading().value().get_num()) * (scale / Z(p.leading().value().get_den()));
      auto nd = small_divisors(a0), dd = small_divisors(an);
      for (auto& a : nd)
        for (auto& b : dd)
          for (int s : {1, -1}) candidates.emplace_back(F, Q(s * a, b));
    }
    for (auto& a : candidates) {
      if (p.is_constant()) break;
      if (!p.eval(a).is_zero()) continue;
      Poly lin = Poly::linear_root(F, a);
      long k = 0;
      while (true) {
        auto [q, r] = p.divmod(lin);
        if (!r.is_zero()) break;
        p = q;
        ++k;
      }
      if (k) record(CurvePoint::finite(lin), k);
    }
    return p;  // unlocated remainder
  };
  Poly num_left = strip(f.num(), [&](const CurvePoint& z, long k) { div.add(z, Q(k)); });
  Poly den_left = strip(f.den(), [&](const CurvePoint& z, long k) { div.add(z, Q(-k)); });
  if (!den_left.is_constant())
    return DivisorError{"unlocatable pole: denominator factor " + den_left.str() + " outside declared support"};
  if (curve == CurveKind::Projective) {
    div.add(CurvePoint::infinity(), Q(f.den().degree() - f.num().degree()));
    Q total = div.degree() + Q(num_left.degree() > 0 ? num_left.degree() : 0);
    if (total != 0) throw std::logic_error("principal divisor has nonzero degree");
  }
  return div;
}

// H^0 of a Q-divisor on a genus-zero curve.
struct SectionBasis {
  CurveKind curve;
  RatFunc generator;            // f_D; on A^1 the module is generator * k[t]
  std::vector<RatFunc> basis;   // projective: f_D * t^j, 0 <= j <= deg floor(D)
  long dim = -1;                // projective dimension; -1 on affine (free rank 1)
};

inline SectionBasis section_module(const QDivisor& D, CurveKind curve, const PrimeField& F) {
  SectionBasis out;
  out.curve = curve;
  RatFunc gen = RatFunc::constant(F, 1);
  for (auto& [z, a] : D.support()) {
    if (z.is_infinity()) {
      if (curve == CurveKind::Affine) throw std::invalid_argument("infinity coefficient on an affine curve");
      continue;
    }
    long e = -floor_q(a).get_si();
    gen *= RatFunc(z.poly()).pow(e);
  }
  out.generator = gen;
  if (curve == CurveKind::Affine) return out;
  Q degf = D.floor().degree();
  long d = floor_q(degf).get_si();  // integral already
  out.dim = d < 0 ? 0 : d + 1;
  RatFunc t = RatFunc::variable(F);
  RatFunc cur = gen;
  for (long j = 0; j <= d; ++j) {
    out.basis.push_back(cur);
    cur = cur * t;
  }
  return out;
}

struct SectionCheck {
  bool ok;
  std::string reason;
};

// div f + floor(D) >= 0, with poles required to be locatable.
inline SectionCheck contains_section(const QDivisor& D, const RatFunc& f, CurveKind curve) {
  if (f.is_zero()) return {true, "zero section"};
  std::vector<CurvePoint> declared;
  for (auto& [z, a] : D.support()) declared.push_back(z);
  auto dv = principal_divisor(f, declared, curve);
  if (std::holds_alternative<DivisorError>(dv)) return {false, std::get<DivisorError>(dv).reason};
  QDivisor total = std::get<QDivisor>(dv) + D.floor();
  for (auto& [z, a] : total.support()) {
    if (curve == CurveKind::Affine && z.is_infinity()) continue;
    if (a < 0) return {false, "violated at " + z.str()};
  }
  return {true, ""};
}

}  // namespace gact
