#include <catch2/catch_amalgamated.hpp>

#include "helpers.hpp"

using namespace gact;
using namespace gact::testing;

namespace {
RatFunc rf(const PrimeField& F, std::initializer_list<long> num, std::initializer_list<long> den) {
  return RatFunc(poly(F, num), poly(F, den));
}
}  // namespace

TEST_CASE("orders at points") {
  PrimeField F0(0), F2(2);
  RatFunc f = rf(F0, {-1, 1}, {0, 1});  // (t-1)/t
  CHECK(ord_at(f, CurvePoint::rational(F0, 0)) == -1);
  CHECK(ord_at(f, CurvePoint::infinity()) == 0);
  CHECK(ord_at(RatFunc(poly(F2, {0, 1})), CurvePoint::rational(F2, 1)) == 0);
  CHECK_THROWS_AS(ord_at(RatFunc(F0), CurvePoint::infinity()), std::domain_error);
  // multiplicativity
  RatFunc g = rf(F0, {1, 1}, {0, 0, 1});
  for (auto z : {CurvePoint::rational(F0, 0), CurvePoint::rational(F0, 1), CurvePoint::infinity()})
    CHECK(ord_at(f * g, z) == ord_at(f, z) + ord_at(g, z));
}

TEST_CASE("principal divisors") {
  PrimeField F(0);
  CurvePoint p0 = CurvePoint::rational(F, 0), p1 = CurvePoint::rational(F, 1);
  CurvePoint inf = CurvePoint::infinity();

  auto dv = principal_divisor(rf(F, {-1, 1}, {0, 1}), {p0, p1}, CurveKind::Projective);
  REQUIRE(std::holds_alternative<QDivisor>(dv));
  QDivisor d = std::get<QDivisor>(dv);
  CHECK(d.coeff(p1) == 1);
  CHECK(d.coeff(p0) == -1);
  CHECK(d.coeff(inf) == 0);
  CHECK(d.degree() == 0);

  auto cst = principal_divisor(RatFunc::constant(F, 7), {}, CurveKind::Projective);
  CHECK(std::get<QDivisor>(cst).empty());

  auto tdiv = principal_divisor(RatFunc::variable(F), {}, CurveKind::Projective);
  QDivisor td = std::get<QDivisor>(tdiv);
  CHECK(td.coeff(p0) == 1);
  CHECK(td.coeff(inf) == -1);

  // undeclared irreducible quadratic pole is an error
  auto bad = principal_divisor(rf(F, {1}, {2, 0, 1}), {}, CurveKind::Affine);
  CHECK(std::holds_alternative<DivisorError>(bad));

  // undeclared zeros are fine on P^1 and the degree still balances
  PrimeField F7(7);
  Poly quad = poly(F7, {1, 0, 1});  // t^2+1, irreducible mod 7
  auto mixed = principal_divisor(RatFunc(quad), {}, CurveKind::Projective);
  REQUIRE(std::holds_alternative<QDivisor>(mixed));
  CHECK(std::get<QDivisor>(mixed).coeff(inf) == -2);
}

TEST_CASE("principal divisors over F_p locate linear factors by scanning") {
  PrimeField F2(2);
  RatFunc f = rf(F2, {0, 1, 1}, {1});  // t^2+t = t(t+1)
  auto dv = principal_divisor(f, {}, CurveKind::Affine);
  QDivisor d = std::get<QDivisor>(dv);
  CHECK(d.coeff(CurvePoint::rational(F2, 0)) == 1);
  CHECK(d.coeff(CurvePoint::rational(F2, 1)) == 1);
}

TEST_CASE("section modules on P^1") {
  PrimeField F(0);
  CurvePoint p0 = CurvePoint::rational(F, 0), p1 = CurvePoint::rational(F, 1);
  QDivisor D;
  D.set(p0, Q(1));
  D.set(p1, Q(-1));
  D.set(CurvePoint::infinity(), Q(1));
  SectionBasis B = section_module(D, CurveKind::Projective, F);
  REQUIRE(B.dim == 2);
  CHECK(B.basis[0] == rf(F, {-1, 1}, {0, 1}));
  CHECK(B.basis[1] == rf(F, {-1, 1}, {1}));
  for (auto& b : B.basis) CHECK(contains_section(D, b, CurveKind::Projective).ok);

  QDivisor zero;
  SectionBasis B0 = section_module(zero, CurveKind::Projective, F);
  REQUIRE(B0.dim == 1);
  CHECK(B0.basis[0] == RatFunc::constant(F, 1));
}

TEST_CASE("section module on A^1 is a free module") {
  PrimeField F(0);
  QDivisor D;
  D.set(CurvePoint::rational(F, 0), Q(-1, 5));
  SectionBasis B = section_module(D, CurveKind::Affine, F);
  CHECK(B.generator == RatFunc(poly(F, {0, 1})));  // floor(-1/5) = -1 gives generator t
}

TEST_CASE("Riemann-Roch dimension on sampled divisors") {
  PrimeField F(0);
  auto g = rng(99);
  std::uniform_int_distribution<long> num(-6, 6), den(1, 4);
  for (int trial = 0; trial < 40; ++trial) {
    QDivisor D;
    D.set(CurvePoint::rational(F, 0), Q(num(g), den(g)));
    D.set(CurvePoint::rational(F, 1), Q(num(g), den(g)));
    D.set(CurvePoint::infinity(), Q(num(g), den(g)));
    SectionBasis B = section_module(D, CurveKind::Projective, F);
    long deg = floor_q(D.floor().degree()).get_si();
    CHECK(B.dim == (deg < 0 ? 0 : deg + 1));
    for (auto& b : B.basis) CHECK(contains_section(D, b, CurveKind::Projective).ok);
  }
}

TEST_CASE("membership against a divisor") {
  PrimeField F2(2);
  QDivisor D;  // -[t] - [t+1] over F_2 on A^1
  D.set(CurvePoint::rational(F2, 0), Q(-1));
  D.set(CurvePoint::rational(F2, 1), Q(-1));
  CHECK_FALSE(contains_section(D, RatFunc(poly(F2, {0, 1})), CurveKind::Affine).ok);
  CHECK(contains_section(D, RatFunc(poly(F2, {0, 1, 1})), CurveKind::Affine).ok);
  CHECK(contains_section(D, RatFunc(F2), CurveKind::Affine).ok);  // zero section
}

TEST_CASE("curve point ordering and validation") {
  PrimeField F2(2);
  CHECK_THROWS_AS(CurvePoint::finite(poly(F2, {1, 0, 1})), std::invalid_argument);  // reducible
  CHECK(CurvePoint::rational(F2, 0) < CurvePoint::rational(F2, 1));
  CHECK(CurvePoint::rational(F2, 1) < CurvePoint::finite(poly(F2, {1, 1, 1})));
  CHECK(CurvePoint::finite(poly(F2, {1, 1, 1})) < CurvePoint::infinity());
}
