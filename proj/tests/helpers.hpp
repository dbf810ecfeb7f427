#pragma once

#include <gact/gact.hpp>

#include <random>

namespace gact::testing {

inline LatVec lv(std::initializer_list<long> xs) { return LatVec(xs); }

inline QVec qv(std::initializer_list<const char*> xs) {
  QVec v(xs.size());
  size_t i = 0;
  for (auto* s : xs) v.c[i++] = parse_q(s);
  return v;
}

inline Cone cone2(std::initializer_list<std::initializer_list<long>> rays, size_t n) {
  std::vector<LatVec> rs;
  for (auto& r : rays) rs.push_back(LatVec(r));
  return Cone::from_rays(rs, n);
}

inline Poly poly(const PrimeField& F, std::initializer_list<long> cs) {
  std::vector<Q> qs;
  for (long c : cs) qs.emplace_back(c);
  return Poly(F, qs);
}

// Example data used throughout: M = Z^2, sigma the first quadrant,
// D = Delta_0 [0] + Delta_1 [1] + Delta_inf [inf] on P^1 with
// Delta_0 = Delta_inf = (1/2,0)+sigma and Delta_1 = conv{(0,0),(-1/2,1/2)}+sigma.
inline PolyDivisor example_18(unsigned long ch = 0) {
  PrimeField F(ch);
  Cone sigma = Cone::quadrant(2);
  PolyDivisor D(F, CurveKind::Projective, sigma);
  SigmaPolyhedron half({qv({"1/2", "0"})}, sigma);
  SigmaPolyhedron seg({qv({"0", "0"}), qv({"-1/2", "1/2"})}, sigma);
  D.set_coefficient(CurvePoint::rational(F, 0), half);
  D.set_coefficient(CurvePoint::rational(F, 1), seg);
  D.set_coefficient(CurvePoint::infinity(), half);
  return D;
}

// Hyperbolic surface over F_2: D = {1/5} [t] + [0,1/5] [t+1] on A^1, tail {0}.
inline PolyDivisor example_513() {
  PrimeField F(2);
  Cone zero = Cone::zero(1);
  PolyDivisor D(F, CurveKind::Affine, zero);
  D.set_coefficient(CurvePoint::rational(F, 0), SigmaPolyhedron({qv({"1/5"})}, zero));
  D.set_coefficient(CurvePoint::rational(F, 1), SigmaPolyhedron({qv({"0"}), qv({"1/5"})}, zero));
  return D;
}

// Generators u1..u5 of Example 1.8's algebra.
inline std::vector<GradedElement> example_18_generators(const PrimeField& F) {
  Poly t = Poly::variable(F);
  Poly one = Poly::constant(F, 1);
  RatFunc u1((t - one), t);
  RatFunc u45((t - one) * (t - one), t);
  std::vector<GradedElement> out;
  out.push_back(GradedElement::monomial(2, F, lv({2, 0}), u1));
  out.push_back(GradedElement::character(2, F, lv({0, 1})));
  out.push_back(GradedElement::character(2, F, lv({1, 1})));
  out.push_back(GradedElement::monomial(2, F, lv({2, 0}), u45));
  out.push_back(GradedElement::monomial(2, F, lv({3, 0}), u45));
  return out;
}

inline std::mt19937 rng(unsigned seed) { return std::mt19937(seed); }

inline LatVec random_latvec(std::mt19937& g, size_t n, long lo, long hi) {
  std::uniform_int_distribution<long> d(lo, hi);
  LatVec v(n);
  for (size_t i = 0; i < n; ++i) v.c[i] = d(g);
  return v;
}

}  // namespace gact::testing
