#pragma once

#include <gact/poly.hpp>

namespace gact {

// Reduced fraction of polynomials; the denominator is monic and nonzero.
class RatFunc {
 public:
  RatFunc() = default;
  explicit RatFunc(const PrimeField& F) : num_(Poly(F)), den_(Poly::constant(F, 1)) {}
  RatFunc(Poly num, Poly den) : num_(std::move(num)), den_(std::move(den)) { reduce(); }
  explicit RatFunc(const Poly& num) : num_(num), den_(Poly::constant(num.field(), 1)) {}
  static RatFunc constant(const PrimeField& F, const FieldElem& a) { return RatFunc(Poly::constant(F, a)); }
  static RatFunc constant(const PrimeField& F, long a) { return RatFunc(Poly::constant(F, a)); }
  static RatFunc variable(const PrimeField& F) { return RatFunc(Poly::variable(F)); }

  const Poly& num() const { return num_; }
  const Poly& den() const { return den_; }
  const PrimeField& field() const { return den_.field(); }
  bool is_zero() const { return num_.is_zero(); }
  bool is_constant() const { return num_.is_constant() && den_.is_constant(); }
  bool is_polynomial() const { return den_.degree() == 0; }

  RatFunc operator-() const { return RatFunc(-num_, den_, already_reduced{}); }
  RatFunc operator+(const RatFunc& o) const { return RatFunc(num_ * o.den_ + o.num_ * den_, den_ * o.den_); }
  RatFunc operator-(const RatFunc& o) const { return *this + (-o); }
  RatFunc operator*(const RatFunc& o) const { return RatFunc(num_ * o.num_, den_ * o.den_); }
  RatFunc operator*(const FieldElem& a) const { return RatFunc(num_ * a, den_, already_reduced{}); }
  RatFunc operator/(const RatFunc& o) const {
    if (o.is_zero()) throw std::domain_error("division by zero rational function");
    return RatFunc(num_ * o.den_, den_ * o.num_);
  }
  RatFunc& operator+=(const RatFunc& o) { return *this = *this + o; }
  RatFunc& operator-=(const RatFunc& o) { return *this = *this - o; }
  RatFunc& operator*=(const RatFunc& o) { return *this = *this * o; }
  bool operator==(const RatFunc& o) const { return num_ == o.num_ && den_ == o.den_; }
  bool operator!=(const RatFunc& o) const { return !(*this == o); }

  RatFunc inv() const { return RatFunc(Poly::constant(field(), 1)) / *this; }

  RatFunc pow(long e) const {
    if (e < 0) return inv().pow(-e);
    return RatFunc(num_.pow((unsigned long)e), den_.pow((unsigned long)e));
  }

  // Substitute a rational function for the variable.
  RatFunc compose(const RatFunc& x) const {
    RatFunc rn = RatFunc::constant(field(), 0), rd = RatFunc::constant(field(), 0);
    for (size_t i = num_.coeffs().size(); i-- > 0;) rn = rn * x + RatFunc::constant(field(), num_.coeff(i));
    for (size_t i = den_.coeffs().size(); i-- > 0;) rd = rd * x + RatFunc::constant(field(), den_.coeff(i));
    return rn / rd;
  }

  // True when every monomial exponent of num and den is divisible by k; then
  // rewrites the function in the variable u = t^k.
  std::optional<RatFunc> deflate(unsigned long k) const {
    auto defl = [&](const Poly& p) -> std::optional<Poly> {
      std::vector<Q> cs;
      for (size_t i = 0; i <= (size_t)std::max(p.degree(), 0) && !p.is_zero(); ++i) {
        if (p.coeff(i).is_zero()) continue;
        if (i % k != 0) return std::nullopt;
      }
      if (!p.is_zero())
        for (size_t i = 0; i * k <= (size_t)p.degree(); ++i) cs.push_back(p.coeff(i * k).value());
      return Poly(p.field(), cs);
    };
    auto n = defl(num_), d = defl(den_);
    if (!n || !d) return std::nullopt;
    return RatFunc(*n, *d);
  }

  // "t^e" for monomials, "(num)/(den)" otherwise.
  std::string str(const std::string& var = "t") const {
    if (is_zero()) return "0";
    auto monomial = [](const Poly& p) { return !p.is_zero() && p.low_order() == (size_t)p.degree(); };
    if (monomial(num_) && monomial(den_)) {
      long e = num_.degree() - den_.degree();
      FieldElem c = num_.leading() / den_.leading();
      std::string cs = c.str();
      if (e == 0) return cs;
      std::string t = var + (e == 1 ? "" : "^" + std::to_string(e));
      if (c.is_one()) return t;
      if (c.value() == -1 && c.characteristic() == 0) return "-" + t;
      return cs + "*" + t;
    }
    if (den_.is_constant() && den_.coeff(0).is_one()) return num_.str(var);
    std::string n = num_.is_constant() || (num_.low_order() == (size_t)num_.degree()) ? num_.str(var)
                                                                                      : "(" + num_.str(var) + ")";
    return n + "/(" + den_.str(var) + ")";
  }

 private:
  struct already_reduced {};
  RatFunc(Poly num, Poly den, already_reduced) : num_(std::move(num)), den_(std::move(den)) {}
  void reduce() {
    if (den_.is_zero()) throw std::domain_error("zero denominator");
    if (num_.is_zero()) {
      den_ = Poly::constant(den_.field(), 1);
      return;
    }
    Poly g = Poly::gcd(num_, den_);
    if (g.degree() > 0) {
      num_ = num_.divmod(g).first;
      den_ = den_.divmod(g).first;
    }
    FieldElem lead = den_.leading();
    if (!lead.is_one()) {
      FieldElem li = lead.inv();
      num_ = num_ * li;
      den_ = den_ * li;
    }
  }

  Poly num_, den_;
};

}  // namespace gact
