#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace gact {

using Z = mpz_class;
using Q = mpq_class;

// mpq_class(num, den) does not canonicalize on its own; always go through here
// when numerator and denominator may share a factor.
inline Q make_q(const Z& num, const Z& den) {
  Q r(num, den);
  r.canonicalize();
  return r;
}

inline Z floor_q(const Q& q) {
  Z r;
  mpz_fdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return r;
}

inline Q frac_q(const Q& q) { return q - Q(floor_q(q)); }

inline Z pow_z(const Z& base, unsigned long e) {
  Z r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
  return r;
}

inline Q pow_q(const Q& base, long e) {
  if (e >= 0) {
    Q r;
    mpz_pow_ui(r.get_num_mpz_t(), base.get_num_mpz_t(), (unsigned long)e);
    mpz_pow_ui(r.get_den_mpz_t(), base.get_den_mpz_t(), (unsigned long)e);
    r.canonicalize();
    return r;
  }
  if (base == 0) throw std::domain_error("pow_q: 0 to negative power");
  return pow_q(Q(1) / base, -e);
}

inline std::string q_to_string(const Q& q) { return q.get_str(); }

// Accepts "p", "-p", "p/q"; denominator must be positive after canonicalization.
inline Q parse_q(const std::string& s) {
  Q q;
  if (q.set_str(s, 10) != 0) throw std::invalid_argument("bad rational: " + s);
  q.canonicalize();
  return q;
}

inline Z lcm_z(const Z& a, const Z& b) {
  Z r;
  mpz_lcm(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return r;
}

inline Z gcd_z(const Z& a, const Z& b) {
  Z r;
  mpz_gcd(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return r;
}

// Divisors of |n| by trial division; empty when |n| resists factoring at desk scale.
inline std::vector<Z> small_divisors(Z n) {
  std::vector<Z> out;
  n = abs(n);
  if (n == 0) return out;
  std::vector<std::pair<Z, unsigned>> fac;
  Z d = 2;
  while (d * d <= n && d < 1000000) {
    if (n % d == 0) {
      unsigned e = 0;
      while (n % d == 0) { n /= d; ++e; }
      fac.push_back({d, e});
    }
    d += (d == 2) ? 1 : 2;
  }
  if (n > 1) {
    if (n > Z(1000000) * Z(1000000)) return {};  // leftover too large to certify prime
    fac.push_back({n, 1});
  }
  out.push_back(1);
  for (auto& [p, e] : fac) {
    size_t sz = out.size();
    Z pk = 1;
    for (unsigned i = 1; i <= e; ++i) {
      pk *= p;
      for (size_t j = 0; j < sz; ++j) out.push_back(out[j] * pk);
    }
  }
  return out;
}

}  // namespace gact
