#pragma once

#include <gact/numeric.hpp>

#include <cassert>
#include <stdexcept>
#include <string>

namespace gact {

// Prime field: characteristic 0 means the rationals, otherwise F_p for prime p.
struct PrimeField {
  unsigned long ch = 0;

  PrimeField() = default;
  explicit PrimeField(unsigned long c) : ch(c) {
    if (ch != 0 && !is_prime(ch)) throw std::invalid_argument("characteristic must be 0 or prime");
  }

  static bool is_prime(unsigned long p) {
    if (p < 2) return false;
    for (unsigned long d = 2; d * d <= p; ++d)
      if (p % d == 0) return false;
    return true;
  }

  bool operator==(const PrimeField& o) const { return ch == o.ch; }
  bool operator!=(const PrimeField& o) const { return ch != o.ch; }
};

// Element of a prime field. In characteristic p the value is a reduced residue.
class FieldElem {
 public:
  FieldElem() : ch_(0), v_(0) {}
  FieldElem(const PrimeField& F, const Q& v) : ch_(F.ch), v_(v) { reduce(); }
  FieldElem(const PrimeField& F, long v) : ch_(F.ch), v_(v) { reduce(); }

  const Q& value() const { return v_; }
  unsigned long characteristic() const { return ch_; }
  PrimeField field() const { PrimeField F; F.ch = ch_; return F; }

  bool is_zero() const { return v_ == 0; }
  bool is_one() const { return v_ == 1; }

  FieldElem operator-() const { return FieldElem(field(), -v_); }
  FieldElem operator+(const FieldElem& o) const { match(o); return FieldElem(field(), v_ + o.v_); }
  FieldElem operator-(const FieldElem& o) const { match(o); return FieldElem(field(), v_ - o.v_); }
  FieldElem operator*(const FieldElem& o) const { match(o); return FieldElem(field(), v_ * o.v_); }
  FieldElem operator/(const FieldElem& o) const { return *this * o.inv(); }
  FieldElem& operator+=(const FieldElem& o) { return *this = *this + o; }
  FieldElem& operator-=(const FieldElem& o) { return *this = *this - o; }
  FieldElem& operator*=(const FieldElem& o) { return *this = *this * o; }
  FieldElem& operator/=(const FieldElem& o) { return *this = *this / o; }
  bool operator==(const FieldElem& o) const { match(o); return v_ == o.v_; }
  bool operator!=(const FieldElem& o) const { return !(*this == o); }

  FieldElem inv() const {
    if (is_zero()) throw std::domain_error("division by zero in field");
    if (ch_ == 0) return FieldElem(field(), Q(1) / v_);
    Z r;
    Z p(ch_);
    if (mpz_invert(r.get_mpz_t(), v_.get_num_mpz_t(), p.get_mpz_t()) == 0)
      throw std::domain_error("non-invertible residue");
    return FieldElem(field(), Q(r));
  }

  FieldElem pow(long e) const {
    if (e < 0) return inv().pow(-e);
    FieldElem r(field(), 1), b = *this;
    unsigned long n = (unsigned long)e;
    while (n) {
      if (n & 1) r *= b;
      b *= b;
      n >>= 1;
    }
    return r;
  }

  std::string str() const { return q_to_string(v_); }

 private:
  void reduce() {
    v_.canonicalize();
    if (ch_ == 0) return;
    Z p(ch_);
    if (v_.get_den() != 1) {
      Z dinv;
      if (mpz_invert(dinv.get_mpz_t(), v_.get_den_mpz_t(), p.get_mpz_t()) == 0)
        throw std::domain_error("denominator not invertible mod p");
      Z n = v_.get_num() * dinv;
      v_ = Q(n);
    }
    Z r;
    mpz_fdiv_r(r.get_mpz_t(), v_.get_num_mpz_t(), p.get_mpz_t());
    v_ = Q(r);
  }
  void match(const FieldElem& o) const {
    if (ch_ != o.ch_) throw std::invalid_argument("field characteristic mismatch");
  }

  unsigned long ch_;
  Q v_;
};

inline Z binomial_z(unsigned long n, unsigned long k) {
  if (k > n) return 0;
  Z r;
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return r;
}

// Lucas: C(n,k) mod p is the product of the digit-wise binomials in base p.
inline unsigned long binomial_lucas(unsigned long n, unsigned long k, unsigned long p) {
  unsigned long r = 1;
  while (n || k) {
    unsigned long nd = n % p, kd = k % p;
    if (kd > nd) return 0;
    Z b = binomial_z(nd, kd);
    Z m;
    mpz_mod_ui(m.get_mpz_t(), b.get_mpz_t(), p);
    r = (r * m.get_ui()) % p;
    n /= p;
    k /= p;
  }
  return r;
}

// C(n,k) reduced into F; in characteristic p the Lucas route and the
// big-integer route are both computed and must agree.
inline FieldElem binomial_in_field(unsigned long n, unsigned long k, const PrimeField& F) {
  Z big = binomial_z(n, k);
  if (F.ch == 0) return FieldElem(F, Q(big));
  unsigned long lucas = binomial_lucas(n, k, F.ch);
  Z m;
  mpz_mod_ui(m.get_mpz_t(), big.get_mpz_t(), F.ch);
  if (m.get_ui() != lucas) throw std::logic_error("binomial cross-check failed");
  return FieldElem(F, (long)lucas);
}

}  // namespace gact
