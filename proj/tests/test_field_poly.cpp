#include <catch2/catch_amalgamated.hpp>

#include "helpers.hpp"

using namespace gact;
using namespace gact::testing;

TEST_CASE("prime field arithmetic") {
  PrimeField F2(2), F5(5), F0(0);
  CHECK_THROWS_AS(PrimeField(6), std::invalid_argument);
  CHECK(FieldElem(F2, 3) == FieldElem(F2, 1));
  CHECK(FieldElem(F5, 2).inv() == FieldElem(F5, 3));
  CHECK(FieldElem(F5, Q(1, 2)) == FieldElem(F5, 3));
  CHECK(FieldElem(F0, Q(2, 3)).pow(-2) == FieldElem(F0, Q(9, 4)));
  CHECK_THROWS_AS(FieldElem(F5, 0).inv(), std::domain_error);
  CHECK_THROWS_AS(FieldElem(F5, 1) + FieldElem(F2, 1), std::invalid_argument);
}

TEST_CASE("binomials via Lucas agree with big integers") {
  PrimeField F2(2), F3(3), F5(5);
  CHECK(binomial_in_field(5, 1, F2) == FieldElem(F2, 1));
  CHECK(binomial_in_field(5, 2, F2) == FieldElem(F2, 0));
  CHECK(binomial_in_field(7, 0, F3) == FieldElem(F3, 1));
  for (auto F : {F2, F3, F5})
    for (unsigned long n = 0; n <= 512; ++n)
      for (unsigned long k = 0; k <= n; k += (n > 64 ? 7 : 1)) {
        Z big = binomial_z(n, k);
        Z m;
        mpz_mod_ui(m.get_mpz_t(), big.get_mpz_t(), F.ch);
        CHECK(binomial_lucas(n, k, F.ch) == m.get_ui());
      }
}

TEST_CASE("polynomial arithmetic and gcd") {
  PrimeField F(0);
  Poly t = Poly::variable(F), one = Poly::constant(F, 1);
  Poly p = (t - one) * (t - one) * t;
  Poly q = (t - one) * (t + one);
  CHECK(Poly::gcd(p, q) == t - one);
  auto [quo, rem] = p.divmod(t - one);
  CHECK(rem.is_zero());
  CHECK(quo == (t - one) * t);
  CHECK(p.compose(t + one) == t * t * (t + one));
  CHECK(poly(F, {0, 2}).str() == "2*t");
  CHECK(poly(F, {-1, 0, 1}).str() == "t^2 - 1");
}

TEST_CASE("polynomials over small prime fields") {
  PrimeField F2(2);
  Poly t = Poly::variable(F2), one = Poly::constant(F2, 1);
  CHECK((t + one) * (t + one) == t * t + one);
  CHECK(t.pow(5).divmod(t * t + t).second == t);
}

TEST_CASE("rational functions reduce and print") {
  PrimeField F(0);
  Poly t = Poly::variable(F), one = Poly::constant(F, 1);
  RatFunc f(t * t - one, t * (t - one));
  CHECK(f.num() == t + one);
  CHECK(f.den() == t);
  CHECK(f.str() == "(t + 1)/(t)");
  CHECK(RatFunc(one, t.pow(11)).str() == "t^-11");
  CHECK((f * f.inv()) == RatFunc::constant(F, 1));
  auto g = RatFunc(t.pow(6) - one, t.pow(3)).deflate(3);
  REQUIRE(g);
  CHECK(g->str() == "(t^2 - 1)/(t)");
  CHECK_FALSE(RatFunc(t.pow(5), one).deflate(3).has_value());
}

TEST_CASE("irreducibility certification") {
  PrimeField F2(2), F0(0);
  CHECK(certify_irreducible(poly(F2, {1, 1, 1})));              // t^2+t+1
  CHECK_FALSE(certify_irreducible(poly(F2, {1, 0, 1})));        // (t+1)^2
  CHECK(certify_irreducible(poly(F2, {1, 1, 0, 0, 1})));        // t^4+t+1
  CHECK_FALSE(certify_irreducible(poly(F2, {1, 0, 1, 0, 1})));  // (t^2+t+1)^2
  CHECK(certify_irreducible(poly(F0, {-2, 0, 1})));             // t^2-2
  CHECK_FALSE(certify_irreducible(poly(F0, {-1, 0, 1})));
  CHECK_THROWS_AS(certify_irreducible(poly(F0, {1, 0, 0, 0, 1})), std::invalid_argument);
}
