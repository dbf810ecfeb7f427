#include <catch2/catch_amalgamated.hpp>

#include "helpers.hpp"

#include <set>

using namespace gact;
using namespace gact::testing;

TEST_CASE("root certification") {
  Cone c36 = cone2({{0, 1}, {2, -1}}, 2);
  auto r = is_root(c36, lv({0, -1}));
  REQUIRE(r);
  CHECK(r->distinguished_ray == lv({0, 1}));

  Cone tau_hat = cone2({{1, 0}, {1, 5}}, 2);
  auto r2 = is_root(tau_hat, lv({4, -1}));
  REQUIRE(r2);
  CHECK(r2->distinguished_ray == lv({1, 5}));

  CHECK_FALSE(is_root(Cone::quadrant(2), lv({1, 1})));
  CHECK_THROWS_AS(is_root(Cone::zero(2), lv({1, 0})), std::domain_error);
}

TEST_CASE("bounded enumeration") {
  auto quad = enumerate_roots(Cone::quadrant(2), 1);
  std::set<std::pair<std::vector<Z>, std::vector<Z>>> got;
  for (auto& r : quad) got.insert({r.e.c, r.distinguished_ray.c});
  CHECK(quad.size() == 4);
  CHECK(got.count({lv({-1, 0}).c, lv({1, 0}).c}));
  CHECK(got.count({lv({-1, 1}).c, lv({1, 0}).c}));
  CHECK(got.count({lv({0, -1}).c, lv({0, 1}).c}));
  CHECK(got.count({lv({1, -1}).c, lv({0, 1}).c}));

  Cone tau_hat = cone2({{1, 0}, {1, 5}}, 2);
  auto roots = enumerate_roots(tau_hat, 13);
  bool has_4m1 = false, has_64m13 = false;
  for (auto& r : roots) {
    if (r.e == lv({4, -1})) has_4m1 = true;
    if (r.e == lv({64, -13})) has_64m13 = true;
  }
  CHECK(has_4m1);
  CHECK_FALSE(has_64m13);  // outside the box

  CHECK(enumerate_roots(Cone::quadrant(2), 0).empty());
}

TEST_CASE("enumeration agrees with the predicate and translation by the kernel face") {
  Cone c = cone2({{0, 1}, {2, -1}}, 2);
  auto roots = enumerate_roots(c, 4);
  CHECK_FALSE(roots.empty());
  std::set<std::vector<LatVec>> kernel_faces;
  for (auto& r : roots) {
    auto again = is_root(c, r.e);
    REQUIRE(again);
    CHECK(again->distinguished_ray == r.distinguished_ray);
    Cone ray = Cone::from_rays({r.distinguished_ray}, 2);
    Cone star = dual_face(c, ray);
    kernel_faces.insert(star.rays());
    for (auto& m : hilbert_points(star, 2)) {
      auto shifted = is_root(c, r.e + m);
      REQUIRE(shifted);
      CHECK(shifted->distinguished_ray == r.distinguished_ray);
    }
  }
  // finitely many kernels: at most one face per extremal ray
  CHECK(kernel_faces.size() <= c.extremal_rays().size());
}
