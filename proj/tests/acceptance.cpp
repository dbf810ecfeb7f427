// Acceptance suite: one line per criterion, exact assertions, nonzero exit on
// any failure. C4 encodes a characteristic-zero expectation that the exact
// arithmetic refutes; it is reported honestly (see the analysis it prints) and
// its characteristic-two counterpart is verified in full.

#include <gact/gact.hpp>

#include <functional>
#include <iostream>
#include <random>
#include <sstream>

using namespace gact;

namespace {

int failures = 0;
std::vector<std::string> notes;

void criterion(const std::string& name, const std::function<void()>& body) {
  notes.clear();
  std::string verdict = "PASS";
  std::string detail;
  try {
    body();
  } catch (const std::exception& ex) {
    verdict = "FAIL";
    detail = ex.what();
    ++failures;
  }
  std::cout << name << " ... " << verdict << "\n";
  if (!detail.empty()) std::cout << "    reason: " << detail << "\n";
  for (auto& n : notes) std::cout << "    note: " << n << "\n";
}

void require(bool cond, const std::string& what) {
  if (!cond) throw std::runtime_error(what);
}

LatVec lv(std::initializer_list<long> xs) { return LatVec(xs); }

QVec qv(std::initializer_list<const char*> xs) {
  QVec v(xs.size());
  size_t i = 0;
  for (auto* s : xs) v.c[i++] = parse_q(s);
  return v;
}

PolyDivisor projective_example(unsigned long ch) {
  PrimeField F(ch);
  Cone sigma = Cone::quadrant(2);
  PolyDivisor D(F, CurveKind::Projective, sigma);
  D.set_coefficient(CurvePoint::rational(F, 0), SigmaPolyhedron({qv({"1/2", "0"})}, sigma));
  D.set_coefficient(CurvePoint::rational(F, 1),
                    SigmaPolyhedron({qv({"0", "0"}), qv({"-1/2", "1/2"})}, sigma));
  D.set_coefficient(CurvePoint::infinity(), SigmaPolyhedron({qv({"1/2", "0"})}, sigma));
  return D;
}

std::vector<GradedElement> projective_generators(const PrimeField& F) {
  Poly t = Poly::variable(F), one = Poly::constant(F, 1);
  RatFunc u1(t - one, t), u45((t - one) * (t - one), t);
  return {GradedElement::monomial(2, F, lv({2, 0}), u1), GradedElement::character(2, F, lv({0, 1})),
          GradedElement::character(2, F, lv({1, 1})), GradedElement::monomial(2, F, lv({2, 0}), u45),
          GradedElement::monomial(2, F, lv({3, 0}), u45)};
}

PolyDivisor hyperbolic_surface() {
  PrimeField F(2);
  Cone zero = Cone::zero(1);
  PolyDivisor D(F, CurveKind::Affine, zero);
  D.set_coefficient(CurvePoint::rational(F, 0), SigmaPolyhedron({qv({"1/5"})}, zero));
  D.set_coefficient(CurvePoint::rational(F, 1), SigmaPolyhedron({qv({"0"}), qv({"1/5"})}, zero));
  return D;
}

ToricSpec toric_xzy2(const PrimeField& F, long lambda, unsigned long r) {
  Cone sigma = Cone::from_rays({lv({0, 1}), lv({2, -1})}, 2);
  return ToricSpec{sigma, *is_root(sigma, lv({0, -1})), FieldElem(F, lambda), r};
}

void c1() {
  PolyDivisor D = projective_example(0);
  PrimeField F = D.field();
  SigmaPolyhedron deg = D.degree_polyhedron();
  require(deg.vertices() == std::vector<QVec>{qv({"1/2", "1/2"}), qv({"1", "0"})},
          "deg D vertices differ");
  require(deg.tail() == D.tail(), "deg D tail differs");
  require(D.is_proper().proper, "properness verdict");

  auto u = projective_generators(F);
  std::vector<LatVec> degs{lv({2, 0}), lv({0, 1}), lv({1, 1}), lv({2, 0}), lv({3, 0})};
  for (size_t i = 0; i < u.size(); ++i)
    require(D.check_membership(u[i]).ok, "generator u" + std::to_string(i + 1) + " membership");
  require((u[1] * u[4] - u[2] * u[3]).is_zero(), "relation u2 u5 - u3 u4");
  require((u[2] * u[4] - u[0] * u[0] * u[1] - u[0] * u[1] * u[3]).is_zero(),
          "relation u3 u5 - u1^2 u2 - u1 u2 u4");
  require((u[4] * u[4] - u[0] * u[0] * u[3] - u[0] * u[3] * u[3]).is_zero(),
          "relation u5^2 - u1^2 u4 - u1 u4^2");
  require(D.graded_piece(lv({2, 0})).sections.dim == 2, "dim A_(2,0)");
}

void c2() {
  PrimeField F(0);
  ToricSpec spec = toric_xzy2(F, 1, 0);
  require(spec.root.distinguished_ray == lv({0, 1}), "distinguished ray of (0,-1)");
  GradedElement x = GradedElement::character(2, F, lv({1, 0}));
  GradedElement y = GradedElement::character(2, F, lv({1, 1}));
  GradedElement z = GradedElement::character(2, F, lv({1, 2}));
  ExpSeries sx = apply_toric(spec, lv({1, 0}), F);
  require(sx.degree() == 0, "d^(i)(x) = 0 for i > 0");
  ExpSeries sy = apply_toric(spec, lv({1, 1}), F);
  require(sy.degree() == 1 && sy.coeff(1) == x, "d^(1)(y) = x and higher terms vanish");
  ExpSeries sz = apply_toric(spec, lv({1, 2}), F);
  require(sz.degree() == 2, "series for z stops at x^2");
  require(sz.coeff(1) == y * FieldElem(F, 2), "d^(1)(z) = 2y");
  require(sz.coeff(2) == x, "d^(2)(z) = x");
}

void c3() {
  PolyDivisor D = projective_example(0);
  auto rays = vertical_admissible_rays(D);
  require(rays.size() == 2, "two extremal rays");
  for (auto& r : rays) {
    if (r.ray == lv({0, 1})) require(r.admissible, "(0,1) must be admissible");
    if (r.ray == lv({1, 0})) require(!r.admissible, "(1,0) must not be admissible");
  }
}

void check_512_data(const HorizontalData& d) {
  require(d.v == qv({"1/2", "0"}), "v = (1/2,0)");
  require(d.d == 2, "d = 2");
  require(d.tau_hat.rays() == std::vector<LatVec>{lv({-1, 1, 0}), lv({1, 0, -2}), lv({1, 0, 2})},
          "tau_hat = cone{(1,0,2),(-1,1,0),(1,0,-2)}");
  require(d.root_hat.e == lv({1, 2, -1}), "root (1,2,-1)");
}

void c4() {
  Cone omega = Cone::from_rays({lv({0, 1}), lv({1, 1})}, 2);
  {
    PolyDivisor D2 = projective_example(2);
    auto out2 = check_horizontal(D2, lv({1, 2}), omega, {0});
    require(out2.accepted, "characteristic-two twin accepts");
    check_512_data(*out2.data);
    HorizontalSpec spec = build_horizontal(*out2.data, lv({1, 2}), {FieldElem(D2.field(), 1)}, D2.field());
    auto closure = closure_oracle(spec, out2.data->normalized, 4);
    require(closure.ok, "characteristic-two closure oracle");
    notes.push_back("over F_2 the same data is accepted with the stated certificate (closure verified)");
  }
  PolyDivisor D = projective_example(0);
  auto out = check_horizontal(D, lv({1, 2}), omega, {0});
  if (out.data) {
    check_512_data(*out.data);
    notes.push_back("v, d, tau_hat and the lifted root match the stated values over Q as well");
  }
  if (!out.accepted) {
    std::ostringstream why;
    why << "rejected over Q at " << out.rejected_at << " with witness m = " << out.witness_m->str()
        << "; the first-order coefficient of the exponential on u1 = (t-1)/t X^(2,0) is 2*t^-1 X^(3,2), "
           "which is not a section of D((3,2)) = [0] - [t-1] + [infinity], so no such derivation exists "
           "in characteristic zero; the wild multiplier p^k = 2 that rescues the floor inequality is "
           "only available in characteristic two";
    throw std::runtime_error(why.str());
  }
}

void c5() {
  PolyDivisor D = hyperbolic_surface();
  PrimeField F = D.field();
  Cone omega = Cone::from_rays({lv({1})}, 1);
  Poly t = Poly::variable(F), one = Poly::constant(F, 1);
  GradedElement x = GradedElement::monomial(1, F, lv({5}), RatFunc(one, t));
  GradedElement y = GradedElement::monomial(1, F, lv({-5}), RatFunc(t * t + t));
  GradedElement z = GradedElement::character(1, F, lv({1}));

  auto rej = check_horizontal(D, lv({1}), omega, {2});
  require(!rej.accepted && rej.rejected_at == "(iv)", "s = 2 rejected at condition (iv)");
  require(rej.witness_m.has_value(), "rejection carries a witness");
  require(rej.data->rank1_exact, "rank-one verification is exact");
  {
    long m = rej.witness_m->c[0].get_si();
    require(m + 4 < 0 && floor_q(make_q(Z(m + 4), Z(5))) - floor_q(make_q(Z(m), Z(5))) < 1,
            "witness violates the floor inequality");
  }
  HorizontalData forced = *rej.data;
  forced.accepted_s = {2};
  HorizontalSpec bad = build_horizontal(forced, lv({1}), {FieldElem(F, 1)}, F);
  ExpSeries sy_bad = apply_horizontal(bad, y, D);
  require(sy_bad.coeff(4) == GradedElement::monomial(1, F, lv({-1}), RatFunc(t)),
          "d^(4)(y) = t X^-1 under the forced twist");
  require(!sy_bad.member[4], "t X^-1 is flagged outside the algebra");
  auto oracle = closure_oracle(bad, rej.data->normalized, 6);
  require(!oracle.ok, "forced closure oracle fails");

  auto acc = check_horizontal(D, lv({1}), omega, {6});
  require(acc.accepted, "s = 6 accepted");
  require(acc.data->d == 5 && acc.data->rank1_exact, "d = 5, exact verification");
  require(acc.data->tau_hat.rays() == std::vector<LatVec>{lv({1, 0}), lv({1, 5})}, "tau_hat rays");
  require(acc.data->root_hat.e == lv({64, -13}), "root (64,-13)");
  HorizontalSpec spec = build_horizontal(*acc.data, lv({1}), {FieldElem(F, 1)}, F);
  require(apply_horizontal(spec, x, D).str("a") == "t^-1*X^5", "e^{a d'}(x) = x");
  require(apply_horizontal(spec, z, D).str("a") == "X^1 + t^-13*X^65*a^64",
          "e^{a d'}(z) = z + a^64 x^13");
  require(apply_horizontal(spec, y, D).str("a") ==
              "(t^2 + t)*X^-5 + t^-11*X^59*a^64 + t^-50*X^251*a^256 + t^-63*X^315*a^320",
          "e^{a d'}(y) = y + a^64 x^11 z^4 + a^256 x^50 z + a^320 x^63");
  MembershipContext ctx{&D, nullptr};
  auto gens = kernel_generators(spec, ctx, 6, F);
  require(gens.generators.size() == 1 && gens.generators[0] == x, "kernel generated by x");
}

void c6() {
  long specs_checked = 0;
  // toric
  for (auto& [ch, r] : std::vector<std::pair<unsigned long, unsigned long>>{{0, 0}, {2, 1}, {3, 0}}) {
    PrimeField F(ch);
    ToricSpec spec = toric_xzy2(F, ch == 3 ? 2 : 1, r);
    MembershipContext ctx{nullptr, &spec.sigma};
    std::vector<GradedElement> samples;
    for (auto m : {lv({1, 0}), lv({1, 1}), lv({1, 2}), lv({2, 1}), lv({2, 3}), lv({2, 4}), lv({3, 2}),
                   lv({2, 2}), lv({3, 5}), lv({4, 2})})
      samples.push_back(GradedElement::character(2, F, m));
    long max_i = 2 * (long)spec.step() + 2;
    auto rep = verify_axioms(spec, ctx, samples, max_i);
    require(rep.ok, "toric axioms over char " + std::to_string(ch) +
                        (rep.violations.empty() ? "" : ": " + rep.violations[0]));
    ++specs_checked;
  }
  // vertical
  {
    PolyDivisor D = projective_example(0);
    PrimeField F = D.field();
    Poly t = Poly::variable(F), one = Poly::constant(F, 1);
    auto u = projective_generators(F);
    std::vector<GradedElement> samples = u;
    samples.push_back(u[0] * u[1]);
    samples.push_back(u[1] * u[2]);
    samples.push_back(u[2] * u[3]);
    samples.push_back(u[0] * u[0]);
    samples.push_back(u[1] * u[4]);
    VerticalSpec spec{D.tail(), *is_root(D.tail(), lv({2, -1})), RatFunc((t - one) * (t - one), t)};
    MembershipContext ctx{&D, nullptr};
    require(verify_axioms(spec, ctx, samples, 6).ok, "vertical axioms on the projective example");
    ++specs_checked;

    PolyDivisor A(F, CurveKind::Affine, D.tail());
    A.set_coefficient(CurvePoint::rational(F, 1),
                      SigmaPolyhedron({qv({"0", "0"}), qv({"-1/2", "1/2"})}, D.tail()));
    VerticalSpec spec2{A.tail(), *is_root(A.tail(), lv({0, -1})), RatFunc(t - one)};
    MembershipContext ctx2{&A, nullptr};
    std::vector<GradedElement> samples2;
    for (auto m : {lv({0, 1}), lv({1, 1}), lv({2, 1}), lv({1, 2}), lv({2, 2}), lv({0, 2}), lv({3, 1}),
                   lv({2, 0}), lv({4, 2}), lv({3, 3})})
      samples2.push_back(GradedElement::monomial(2, F, m, A.graded_piece(m).sections.generator));
    require(verify_axioms(spec2, ctx2, samples2, 6).ok, "vertical axioms on the affine variant");
    ++specs_checked;
  }
  // horizontal; s1 = 6 forces max_i >= 2 p^{s1} = 128
  {
    PolyDivisor D = hyperbolic_surface();
    PrimeField F = D.field();
    Poly t = Poly::variable(F), one = Poly::constant(F, 1);
    GradedElement x = GradedElement::monomial(1, F, lv({5}), RatFunc(one, t));
    GradedElement y = GradedElement::monomial(1, F, lv({-5}), RatFunc(t * t + t));
    GradedElement z = GradedElement::character(1, F, lv({1}));
    HorizontalSpec spec;
    spec.e = lv({1});
    spec.v = qv({"1/5"});
    spec.d = 5;
    spec.omega = Cone::from_rays({lv({1})}, 1);
    spec.steps = {{64, FieldElem(F, 1)}};
    MembershipContext ctx{&D, nullptr};
    std::vector<GradedElement> samples{x, y, z, x * x, x * z, x * y, y * z, z * z, x * x * z, y * y};
    auto rep = verify_axioms(spec, ctx, samples, 128);
    require(rep.ok, "horizontal axioms on the hyperbolic surface" +
                        std::string(rep.violations.empty() ? "" : ": " + rep.violations[0]));
    ++specs_checked;

    PolyDivisor E = projective_example(2);
    PrimeField F2 = E.field();
    HorizontalSpec h12;
    h12.e = lv({1, 2});
    h12.v = qv({"1/2", "0"});
    h12.d = 2;
    h12.omega = Cone::from_rays({lv({0, 1}), lv({1, 1})}, 2);
    h12.steps = {{1, FieldElem(F2, 1)}};
    MembershipContext ctx2{&E, nullptr};
    auto u = projective_generators(F2);
    std::vector<GradedElement> samples2 = u;
    samples2.push_back(u[0] * u[1]);
    samples2.push_back(u[1] * u[2]);
    samples2.push_back(u[3] * u[1]);
    samples2.push_back(u[2] * u[2]);
    samples2.push_back(u[0] * u[3]);
    require(verify_axioms(h12, ctx2, samples2, 8).ok, "horizontal axioms on the lifted-root threefold");
    ++specs_checked;
  }
  require(specs_checked >= 7, "spec count");
  // negative controls
  {
    PolyDivisor D = hyperbolic_surface();
    PrimeField F = D.field();
    GradedElement z = GradedElement::character(1, F, lv({1}));
    HorizontalSpec bad;
    bad.e = lv({1});
    bad.v = qv({"1/5"});
    bad.d = 5;
    bad.omega = Cone::from_rays({lv({1})}, 1);
    bad.steps = {{3, FieldElem(F, 1)}};  // not a power of two
    MembershipContext ctx{&D, nullptr};
    require(!verify_axioms(bad, ctx, {z * z * z, z, z * z}, 12).ok,
            "non-Frobenius exponent must fail an axiom");
  }
  {
    PolyDivisor D = projective_example(0);
    PrimeField F = D.field();
    VerticalSpec bad{D.tail(), *is_root(D.tail(), lv({2, -1})), RatFunc::constant(F, 1)};
    MembershipContext ctx{&D, nullptr};
    auto u = projective_generators(F);
    require(!verify_axioms(bad, ctx, {u[1], u[2]}, 4).ok, "non-section multiplier must fail an axiom");
  }
}

void c7() {
  PrimeField F2(2);
  ToricSpec spec = toric_xzy2(F2, 1, 0);
  Cone dual = dual_cone(spec.sigma);
  Cone star = dual_face(spec.sigma, Cone::from_rays({spec.root.distinguished_ray}, 2));
  std::map<LatVec, ExpSeries> cache;
  auto c = [&](unsigned long i, const LatVec& m) -> FieldElem {
    auto it = cache.find(m);
    if (it == cache.end()) it = cache.emplace(m, apply_toric(spec, m, F2)).first;
    const ExpSeries& s = it->second;
    GradedElement g = s.coeff(i);
    for (auto& [mm, comp] : g.components())
      if (mm == m + spec.root.e * Z(i)) return comp.f.num().coeff(0);
    return FieldElem(F2, 0);
  };
  std::vector<LatVec> box;
  for (long a = -6; a <= 6; ++a)
    for (long b = -6; b <= 6; ++b)
      if (dual.contains(lv({a, b}))) box.push_back(lv({a, b}));
  for (auto& m : box)
    for (auto& mp : box) {
      unsigned long n = pair_ll(m, spec.root.distinguished_ray).get_ui();
      for (unsigned long i = 0; i <= 8; ++i) {
        FieldElem sum(F2, 0);
        for (unsigned long j = 0; j <= i; ++j) sum += c(i - j, m) * c(j, mp);
        require(c(i, m + mp) == sum, "convolution law");
        for (unsigned long j = 0; i + j <= 8; ++j) {
          FieldElem rhs = j <= n ? c(i, m + spec.root.e * Z(j)) * c(j, m) : FieldElem(F2, 0);
          require(binomial_in_field(i + j, i, F2) * c(i + j, m) == rhs, "composition law");
        }
        if (star.contains(mp)) require(c(i, m + mp) == c(i, m), "kernel-face invariance");
      }
    }
  // order formula against the multinomial oracle
  PrimeField F3(3);
  require(ord_formula_check_range({{2, FieldElem(F2, 1)}}, 64, F2) > 1000, "oracle sweep over F_2");
  require(ord_formula_check_range({{2, FieldElem(F2, 1)}, {8, FieldElem(F2, 1)}}, 64, F2) > 1000,
          "two-step oracle sweep over F_2");
  require(ord_formula_check_range({{3, FieldElem(F3, 2)}}, 64, F3) > 700, "oracle sweep over F_3");
}

void c8() {
  for (unsigned long p : {2UL, 3UL}) {
    PrimeField F(p);
    for (unsigned long r : {0UL, 1UL, 2UL}) {
      ToricSpec spec = toric_xzy2(F, 1, r);
      Cone dual = dual_cone(spec.sigma);
      unsigned long pr = spec.step();
      for (long a = -4; a <= 4; ++a)
        for (long b = -4; b <= 4; ++b) {
          LatVec m{a, b};
          if (!dual.contains(m)) continue;
          ExpSeries s = apply_toric(spec, m, F);
          require(s.degree() == (long)(pr * pair_ll(m, spec.root.distinguished_ray).get_ui()),
                  "degree law at " + m.str());
        }
    }
  }
  PrimeField F0(0);
  ToricSpec spec0 = toric_xzy2(F0, 1, 0);
  Cone dual0 = dual_cone(spec0.sigma);
  for (long a = -4; a <= 4; ++a)
    for (long b = -4; b <= 4; ++b) {
      LatVec m{a, b};
      if (!dual0.contains(m)) continue;
      require(apply_toric(spec0, m, F0).degree() ==
                  (long)pair_ll(m, spec0.root.distinguished_ray).get_ui(),
              "degree law in characteristic zero");
    }
}

void c9() {
  Cone halfline = Cone::from_rays({lv({1})}, 1);
  long accepted = 0;
  for (unsigned long p : {2UL, 3UL}) {
    PrimeField F(p);
    for (long b : {3L, 5L, 7L})
      for (long a = 1; a < b; ++a) {
        if (std::gcd(a, b) != 1) continue;
        for (long c0 : {0L, 1L})
          for (long shift : {0L, 1L}) {
            PolyDivisor D(F, CurveKind::Affine, halfline);
            QVec vneg(1);
            vneg.c[0] = make_q(Z(-a), Z(b));
            D.set_coefficient(CurvePoint::rational(F, c0), SigmaPolyhedron({vneg}, halfline));
            if (shift) {
              QVec w0(1), w1(1);
              w0.c[0] = Q(shift);
              w1.c[0] = Q(shift) + make_q(Z(1), Z(3));
              D.set_coefficient(CurvePoint::rational(F, 1 - c0), SigmaPolyhedron({w0, w1}, halfline));
            }
            for (long e = 1; e <= b; ++e) {
              auto out = check_horizontal(D, lv({e}), dual_cone(halfline), {0, 1, 2, 3, 4});
              if (!out.accepted) continue;
              ++accepted;
              require(surface_support_check(D).ok, "support of the fractional part");
              break;
            }
          }
      }
  }
  require(accepted >= 20, "needed at least 20 accepted instances, got " + std::to_string(accepted));
  notes.push_back("accepted instances: " + std::to_string(accepted));
}

void c10() {
  for (unsigned long p : {2UL, 3UL, 5UL}) {
    PrimeField F(p);
    for (unsigned long n = 0; n <= 512; ++n)
      for (unsigned long k = 0; k <= n; ++k) {
        Z big = binomial_z(n, k);
        Z m;
        mpz_mod_ui(m.get_mpz_t(), big.get_mpz_t(), p);
        require(binomial_lucas(n, k, p) == m.get_ui(), "Lucas cross-check");
      }
  }
  std::mt19937 g(20260810);
  std::uniform_int_distribution<long> coord(-4, 4), count(1, 4), vc(-3, 3), vd(1, 3);
  long cones_done = 0, polys_done = 0;
  while (cones_done < 50) {
    size_t n = 2 + (cones_done % 2);
    std::vector<LatVec> rays;
    for (long i = 0, k = count(g); i < k; ++i) {
      LatVec r(n);
      for (size_t j = 0; j < n; ++j) r.c[j] = coord(g);
      rays.push_back(r);
    }
    Cone c = Cone::from_rays(rays, n);
    require(dual_cone(dual_cone(c)) == c, "dual-cone involution");
    ++cones_done;
  }
  while (polys_done < 50) {
    size_t n = 2 + (polys_done % 2);
    Cone tail = Cone::quadrant(n);
    auto rand_poly = [&] {
      std::vector<QVec> vs;
      for (long i = 0, k = count(g); i < k; ++i) {
        QVec v(n);
        for (size_t j = 0; j < n; ++j) v.c[j] = make_q(Z(vc(g)), Z(vd(g)));
        vs.push_back(v);
      }
      return SigmaPolyhedron(vs, tail);
    };
    SigmaPolyhedron A = rand_poly(), B = rand_poly();
    SigmaPolyhedron S = A.minkowski_sum(B);
    for (int trial = 0; trial < 8; ++trial) {
      LatVec m(n);
      for (size_t j = 0; j < n; ++j) m.c[j] = std::abs(coord(g));
      require(*S.support_value(m) == *A.support_value(m) + *B.support_value(m),
              "Minkowski support additivity");
    }
    ++polys_done;
  }
}

}  // namespace

int main() {
  criterion("C1  projective threefold: degree, properness, generators, relations", c1);
  criterion("C2  toric surface table and root certification", c2);
  criterion("C3  admissible rays for vertical actions", c3);
  criterion("C4  lifted-root certificate over Q", c4);
  criterion("C5  hyperbolic surface: exact rejection, acceptance, exponentials, kernel", c5);
  criterion("C6  axiom suite with negative controls", c6);
  criterion("C7  coefficient-function laws and the order formula oracle", c7);
  criterion("C8  degree law of the twisted toric exponential", c8);
  criterion("C9  fractional-support law on accepted rank-one instances", c9);
  criterion("C10 binomial cross-checks and convex-geometry laws", c10);
  if (failures) {
    std::cout << failures << " criterion(s) failed\n";
    return 1;
  }
  std::cout << "all criteria passed\n";
  return 0;
}
