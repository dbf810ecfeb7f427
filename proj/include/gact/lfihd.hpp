#pragma once

#include <gact/demazure.hpp>
#include <gact/pdiv.hpp>

#include <functional>
#include <variant>

namespace gact {

// lambda * d_e with a Frobenius twist: exponential sum of C(<m,rho>,i) lambda^i X^{m+ie} x^{i p^r}.
struct ToricSpec {
  Cone sigma;
  DemazureRoot root;
  FieldElem lambda;
  unsigned long frobenius_r = 0;

  void validate() const {
    if (lambda.is_zero()) throw std::invalid_argument("toric spec: lambda must be nonzero");
    if (lambda.characteristic() == 0 && frobenius_r > 0)
      throw std::invalid_argument("toric spec: Frobenius twist needs positive characteristic");
    if (!is_root(sigma, root.e)) throw std::invalid_argument("toric spec: e is not a root of sigma");
  }
  unsigned long step() const {  // p^r
    unsigned long p = lambda.characteristic();
    unsigned long s = 1;
    for (unsigned long i = 0; i < frobenius_r; ++i) s *= p;
    return s;
  }
};

// phi * d_e acting on A[C,D]; phi is a global section of D(e).
struct VerticalSpec {
  Cone sigma;
  DemazureRoot root;
  RatFunc phi;
};

struct HorizontalStep {
  unsigned long exponent;  // p^{s_i}; raw values are only used by negative-control tests
  FieldElem lambda;
};

// The derivation of the conjugation formula: map into k(zeta)[M] with
// t = zeta^d, substitute zeta -> zeta + sum lambda_i X^{exponent_i * e} x^{exponent_i},
// divide as truncated series, map back.
struct HorizontalSpec {
  LatVec e;
  QVec v;           // h(m) = <m, v>
  unsigned long d;  // smallest positive integer with d*v integral
  Cone omega;       // weight cone of the kernel
  std::vector<HorizontalStep> steps;

  LatVec dv() const {
    QVec w = v * Q((long)d);
    if (!w.is_integral()) throw std::invalid_argument("horizontal spec: d*v must be integral");
    return w.to_lat();
  }
  long dh(const LatVec& m) const { return pair_ll(m, dv()).get_si(); }
  unsigned long top_exponent() const {
    unsigned long e0 = 1;
    for (auto& s : steps) e0 = std::max(e0, s.exponent);
    return e0;
  }
  void validate(const PrimeField& F) const {
    if (steps.empty()) throw std::invalid_argument("horizontal spec: needs at least one step");
    dv();
    unsigned long prev = 0;
    for (auto& s : steps) {
      if (s.lambda.is_zero()) throw std::invalid_argument("horizontal spec: zero lambda");
      if (s.exponent <= prev && prev != 0) throw std::invalid_argument("horizontal spec: exponents must increase");
      prev = s.exponent;
    }
    if (F.ch == 0 && (steps.size() != 1 || steps[0].exponent != 1))
      throw std::invalid_argument("horizontal spec: characteristic zero admits a single step of exponent one");
  }
};

using LfihdSpec = std::variant<ToricSpec, VerticalSpec, HorizontalSpec>;

inline const LatVec& spec_degree(const LfihdSpec& s) {
  if (auto* t = std::get_if<ToricSpec>(&s)) return t->root.e;
  if (auto* v = std::get_if<VerticalSpec>(&s)) return v->root.e;
  return std::get<HorizontalSpec>(s).e;
}

// Truncated exponential e^{x d}(a): coefficient i is d^(i)(a).
struct ExpSeries {
  std::vector<GradedElement> c;
  std::vector<bool> member;  // per coefficient, when a membership context was supplied
  bool complete = true;

  const GradedElement& coeff_or_zero(size_t i, const GradedElement& zero) const {
    return i < c.size() ? c[i] : zero;
  }
  GradedElement coeff(size_t i) const {
    if (i < c.size()) return c[i];
    if (c.empty()) throw std::domain_error("empty series");
    return GradedElement(c[0].rank(), c[0].field());
  }
  size_t length() const { return c.size(); }
  long degree() const {  // largest index with a nonzero coefficient
    for (size_t i = c.size(); i-- > 0;)
      if (!c[i].is_zero()) return (long)i;
    return -1;
  }
  bool is_constant() const { return degree() <= 0; }
  void trim() {
    while (c.size() > 1 && c.back().is_zero()) {
      c.pop_back();
      if (member.size() > c.size()) member.pop_back();
    }
  }

  std::string str(const std::string& var = "x") const {
    if (c.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (size_t i = 0; i < c.size(); ++i) {
      if (c[i].is_zero()) continue;
      std::string g = c[i].str();
      if (!first) os << " + ";
      if (i == 0) {
        os << g;
      } else {
        os << (needs_parens(g) ? "(" + g + ")" : g) << "*" << var << (i == 1 ? "" : "^" + std::to_string(i));
      }
      first = false;
    }
    if (first) os << "0";
    return os.str();
  }
};

// Membership oracle: a polyhedral divisor for complexity one, or a bare cone
// for the toric algebra k[dual(sigma) cap M].
struct MembershipContext {
  const PolyDivisor* D = nullptr;
  const Cone* sigma = nullptr;

  PolyDivisor::Membership check(const GradedElement& a) const {
    if (D) return D->check_membership(a);
    for (auto& [m, comp] : a.components()) {
      if (comp.in_zeta) return {false, "fractional power of t at " + m.str()};
      for (auto& r : sigma->rays())
        if (pair_ll(m, r) < 0) return {false, "degree " + m.str() + " outside the weight cone"};
      if (!comp.f.is_constant()) return {false, "non-constant coefficient at " + m.str() + " in a toric algebra"};
    }
    return {true, ""};
  }
};

// ---------------------------------------------------------------------------
// toric and vertical exponentials (direct binomial formulas)

inline ExpSeries apply_toric_elem(const ToricSpec& s, const GradedElement& a) {
  s.validate();
  const PrimeField F = a.field();
  unsigned long step = s.step();
  size_t len = 1;
  for (auto& [m, comp] : a.components()) {
    Z n = pair_ll(m, s.root.distinguished_ray);
    if (n < 0) throw std::invalid_argument("toric apply: degree outside the weight cone");
    len = std::max(len, (size_t)(n.get_ui() * step + 1));
  }
  ExpSeries out;
  out.c.assign(len, GradedElement(a.rank(), F));
  for (auto& [m, comp] : a.components()) {
    if (comp.in_zeta) throw std::invalid_argument("toric apply: zeta component");
    unsigned long n = pair_ll(m, s.root.distinguished_ray).get_ui();
    for (unsigned long i = 0; i <= n; ++i) {
      FieldElem coeff = binomial_in_field(n, i, F) * s.lambda.pow((long)i);
      if (coeff.is_zero()) continue;
      out.c[i * step].add(m + s.root.e * Z(i), comp.f * coeff);
    }
  }
  out.complete = true;
  return out;
}

inline ExpSeries apply_toric(const ToricSpec& s, const LatVec& m, const PrimeField& F) {
  return apply_toric_elem(s, GradedElement::character(m.rank(), F, m));
}

inline ExpSeries apply_vertical(const VerticalSpec& s, const GradedElement& a, const PolyDivisor& D) {
  const PrimeField F = a.field();
  size_t len = 1;
  for (auto& [m, comp] : a.components()) {
    Z n = pair_ll(m, s.root.distinguished_ray);
    if (n < 0) throw std::invalid_argument("vertical apply: degree outside the weight cone");
    len = std::max(len, (size_t)(n.get_ui() + 1));
  }
  ExpSeries out;
  out.c.assign(len, GradedElement(a.rank(), F));
  for (auto& [m, comp] : a.components()) {
    if (comp.in_zeta) throw std::invalid_argument("vertical apply: zeta component");
    unsigned long n = pair_ll(m, s.root.distinguished_ray).get_ui();
    for (unsigned long i = 0; i <= n; ++i) {
      FieldElem b = binomial_in_field(n, i, F);
      if (b.is_zero()) continue;
      RatFunc f = comp.f * b * s.phi.pow((long)i);
      if (!f.is_zero()) out.c[i].add(m + s.root.e * Z(i), f);
    }
  }
  out.complete = true;
  for (auto& g : out.c) out.member.push_back(D.check_membership(g).ok);
  out.trim();
  return out;
}

// ---------------------------------------------------------------------------
// horizontal exponential via the zeta-cover substitution

namespace detail {

// series in x with coefficients in k(zeta)
struct ZetaSeries {
  std::vector<RatFunc> c;

  static ZetaSeries zero(const PrimeField& F, size_t len) {
    ZetaSeries s;
    s.c.assign(len, RatFunc(F));
    return s;
  }
  size_t deg() const { return c.empty() ? 0 : c.size() - 1; }
};

inline ZetaSeries zmul(const ZetaSeries& a, const ZetaSeries& b, const PrimeField& F, long cap = -1) {
  size_t len = a.c.size() + b.c.size() - 1;
  if (cap >= 0) len = std::min(len, (size_t)cap + 1);
  ZetaSeries r = ZetaSeries::zero(F, len);
  for (size_t i = 0; i < a.c.size(); ++i) {
    if (a.c[i].is_zero()) continue;
    for (size_t j = 0; j < b.c.size() && i + j < len; ++j) {
      if (b.c[j].is_zero()) continue;
      r.c[i + j] += a.c[i] * b.c[j];
    }
  }
  return r;
}

}  // namespace detail

// The i-th coefficient of the image of f(t) X^m sits at character m + i e and
// equals zeta^{-dh(m+ie)} d_zeta^(i)(zeta^{dh(m)} f(zeta^d)); components are
// mapped back to k(t) when every zeta-exponent is divisible by d.
inline ExpSeries apply_horizontal(const HorizontalSpec& s, const GradedElement& a, const PolyDivisor& D,
                                  long want = -1) {
  const PrimeField F = a.field();
  s.validate(F);
  const size_t n = a.rank();
  const unsigned long E = s.top_exponent();

  // substitution image of zeta
  detail::ZetaSeries Zs = detail::ZetaSeries::zero(F, E + 1);
  Zs.c[0] = RatFunc::variable(F);
  for (auto& st : s.steps) Zs.c[st.exponent] += RatFunc::constant(F, st.lambda);

  ExpSeries out;
  out.c.assign(1, GradedElement(n, F));
  bool all_complete = true;

  for (auto& [m, comp] : a.components()) {
    unsigned long inflate = comp.in_zeta ? 1 : s.d;
    Poly P = comp.f.num().inflate(inflate);
    Poly Qd = comp.f.den().inflate(inflate);
    long dhm = s.dh(m);
    unsigned long num_shift = dhm > 0 ? (unsigned long)dhm : 0;
    unsigned long den_shift = dhm < 0 ? (unsigned long)(-dhm) : 0;
    P = P.shift_up(num_shift);
    Qd = Qd.shift_up(den_shift);

    // substitute zeta -> Z by Horner
    auto subst = [&](const Poly& p) {
      detail::ZetaSeries acc = detail::ZetaSeries::zero(F, 1);
      for (size_t i = p.coeffs().size(); i-- > 0;) {
        acc = detail::zmul(acc, Zs, F);
        acc.c[0] += RatFunc::constant(F, p.coeff(i));
      }
      if (p.is_zero()) acc = detail::ZetaSeries::zero(F, 1);
      return acc;
    };
    detail::ZetaSeries SN = subst(P), SD = subst(Qd);

    // a terminating quotient must stop exactly at E*(deg P - deg Qd)
    long T = E * ((long)P.degree() - (long)Qd.degree());
    long W = std::max(T, want);
    if (W < 0) W = 0;
    detail::ZetaSeries Qt = detail::ZetaSeries::zero(F, (size_t)W + 1);
    RatFunc inv0 = SD.c[0].inv();
    for (long i = 0; i <= W; ++i) {
      RatFunc acc = i < (long)SN.c.size() ? SN.c[i] : RatFunc(F);
      for (long j = 1; j <= i && j < (long)SD.c.size(); ++j) {
        if (SD.c[j].is_zero() || Qt.c[i - j].is_zero()) continue;
        acc -= SD.c[j] * Qt.c[i - j];
      }
      Qt.c[i] = acc * inv0;
    }
    bool terminated = false;
    if (T >= 0) {
      detail::ZetaSeries QtT = Qt;
      QtT.c.resize(T + 1, RatFunc(F));
      detail::ZetaSeries back = detail::zmul(QtT, SD, F);
      terminated = true;
      size_t len = std::max(back.c.size(), SN.c.size());
      for (size_t i = 0; i < len && terminated; ++i) {
        RatFunc l = i < back.c.size() ? back.c[i] : RatFunc(F);
        RatFunc r = i < SN.c.size() ? SN.c[i] : RatFunc(F);
        if (l != r) terminated = false;
      }
    }
    if (!terminated) all_complete = false;
    long emit = terminated ? T : W;

    if ((long)out.c.size() <= emit) out.c.resize(emit + 1, GradedElement(n, F));
    Poly zeta_var = Poly::variable(F);
    for (long i = 0; i <= emit; ++i) {
      if (Qt.c[i].is_zero()) continue;
      LatVec mi = m + s.e * Z(i);
      long b = s.dh(mi);
      RatFunc g = Qt.c[i];
      if (b > 0)
        g = g / RatFunc(zeta_var.pow((unsigned long)b));
      else if (b < 0)
        g = g * RatFunc(zeta_var.pow((unsigned long)(-b)));
      if (auto in_t = (s.d == 1 ? std::optional<RatFunc>(g) : g.deflate(s.d)))
        out.c[i].add(mi, *in_t, false);
      else
        out.c[i].add(mi, g, true);
    }
  }

  out.complete = all_complete;
  if (want >= 0 && (long)out.c.size() <= want) out.c.resize(want + 1, GradedElement(n, F));
  for (auto& g : out.c) out.member.push_back(D.check_membership(g).ok);
  return out;
}

// ---------------------------------------------------------------------------
// unified application and the axiom verifier

inline ExpSeries apply_spec(const LfihdSpec& spec, const GradedElement& a, const MembershipContext& ctx,
                            long want = -1) {
  if (auto* t = std::get_if<ToricSpec>(&spec)) {
    ExpSeries s = apply_toric_elem(*t, a);
    for (auto& g : s.c) s.member.push_back(ctx.check(g).ok);
    if (want >= 0 && (long)s.c.size() <= want) {
      s.c.resize(want + 1, GradedElement(a.rank(), a.field()));
      while (s.member.size() < s.c.size()) s.member.push_back(true);
    }
    return s;
  }
  if (auto* v = std::get_if<VerticalSpec>(&spec)) {
    ExpSeries s = apply_vertical(*v, a, *ctx.D);
    if (want >= 0 && (long)s.c.size() <= want) {
      s.c.resize(want + 1, GradedElement(a.rank(), a.field()));
      while (s.member.size() < s.c.size()) s.member.push_back(true);
    }
    return s;
  }
  return apply_horizontal(std::get<HorizontalSpec>(spec), a, *ctx.D, want);
}

struct AxiomReport {
  bool ok = true;
  long checks = 0;
  std::vector<std::string> violations;

  void fail(const std::string& what) {
    ok = false;
    if (violations.size() < 64) violations.push_back(what);
  }
};

// Expected x-index stride and degree shift per stride for homogeneity checks.
inline std::pair<unsigned long, LatVec> spec_stride(const LfihdSpec& spec) {
  if (auto* t = std::get_if<ToricSpec>(&spec)) return {t->step(), t->root.e};
  if (auto* v = std::get_if<VerticalSpec>(&spec)) return {1, v->root.e};
  return {1, std::get<HorizontalSpec>(spec).e};
}

// How a verifier obtains exponential series; tests may substitute corrupted
// engines as negative controls.
using SeriesProvider = std::function<ExpSeries(const GradedElement&, long)>;

inline SeriesProvider provider_for(const LfihdSpec& spec, const MembershipContext& ctx) {
  return [spec, ctx](const GradedElement& a, long want) { return apply_spec(spec, a, ctx, want); };
}

// Checks Definition-of-LFIHD conditions on the samples: identity, Leibniz,
// local finiteness, iterativity, and (rational) homogeneity with membership.
inline AxiomReport verify_axioms_with(const SeriesProvider& provider, unsigned long stride, const LatVec& e,
                                      const MembershipContext& ctx, const std::vector<GradedElement>& samples,
                                      long max_i) {
  AxiomReport rep;
  if (samples.empty()) return rep;
  const PrimeField F = samples[0].field();
  const size_t n = samples[0].rank();
  const GradedElement zero(n, F);

  std::vector<ExpSeries> series;
  for (auto& a : samples) series.push_back(provider(a, max_i));

  for (size_t k = 0; k < samples.size(); ++k) {
    const auto& a = samples[k];
    const auto& S = series[k];
    ++rep.checks;
    if (S.coeff(0) != a) rep.fail("identity fails on sample " + std::to_string(k));
    if (!S.complete) rep.fail("local finiteness fails on sample " + std::to_string(k));
    bool a_member = ctx.check(a).ok;
    for (size_t i = 1; i < S.c.size(); ++i) {
      if (S.c[i].is_zero()) continue;
      ++rep.checks;
      if (i % stride != 0) {
        rep.fail("nonzero coefficient at index " + std::to_string(i) + " not divisible by the Frobenius step");
        continue;
      }
      LatVec shift = e * Z(i / stride);
      for (auto& [mm, comp] : S.c[i].components()) {
        bool found = false;
        for (auto& [m0, c0] : a.components())
          if (m0 + shift == mm) found = true;
        if (!found) rep.fail("degree shift violated at index " + std::to_string(i));
      }
      if (a_member && i < S.member.size() && !S.member[i])
        rep.fail("homogeneity: coefficient " + std::to_string(i) + " of sample " + std::to_string(k) +
                 " leaves the algebra");
    }
  }

  // Leibniz via the ring-homomorphism packaging of the exponential
  for (size_t k = 0; k + 1 <= samples.size(); ++k) {
    size_t k2 = (k + 1) % samples.size();
    bool zeta = false;
    for (auto& S : {series[k], series[k2]})
      for (auto& g : S.c) zeta |= g.has_zeta();
    if (zeta) continue;
    GradedElement prod = samples[k] * samples[k2];
    ExpSeries Sp = provider(prod, max_i);
    for (long i = 0; i <= max_i; ++i) {
      GradedElement conv(n, F);
      for (long j = 0; j <= i; ++j) {
        const GradedElement &x = series[k].coeff_or_zero(j, zero), &y = series[k2].coeff_or_zero(i - j, zero);
        if (x.is_zero() || y.is_zero()) continue;
        conv = conv + x * y;
      }
      ++rep.checks;
      if (conv != Sp.coeff(i)) {
        rep.fail("Leibniz fails on samples " + std::to_string(k) + "," + std::to_string(k2) + " at index " +
                 std::to_string(i));
        break;
      }
    }
  }

  // iterativity d^(i) o d^(j) = C(i+j,i) d^(i+j)
  for (size_t k = 0; k < samples.size(); ++k) {
    for (long j = 0; j <= max_i; ++j) {
      GradedElement aj = series[k].coeff_or_zero(j, zero);
      if (aj.is_zero()) continue;
      ExpSeries Sj = provider(aj, max_i - j);
      for (long i = 0; i + j <= max_i; ++i) {
        GradedElement lhs = Sj.coeff_or_zero(i, zero);
        GradedElement rhs =
            series[k].coeff_or_zero(i + j, zero) * binomial_in_field((unsigned long)(i + j), (unsigned long)i, F);
        ++rep.checks;
        if (lhs != rhs) {
          rep.fail("iterativity fails on sample " + std::to_string(k) + " at (i,j)=(" + std::to_string(i) + "," +
                   std::to_string(j) + ")");
          break;
        }
      }
    }
  }
  return rep;
}

inline AxiomReport verify_axioms(const LfihdSpec& spec, const MembershipContext& ctx,
                                 const std::vector<GradedElement>& samples, long max_i) {
  auto [stride, e] = spec_stride(spec);
  return verify_axioms_with(provider_for(spec, ctx), stride, e, ctx, samples, max_i);
}

inline bool kernel_test(const LfihdSpec& spec, const MembershipContext& ctx, const GradedElement& a) {
  ExpSeries s = apply_spec(spec, a, ctx);
  return s.complete && s.is_constant();
}

struct KernelGenerators {
  std::vector<GradedElement> generators;
  std::vector<std::string> diagnostics;
};

inline KernelGenerators kernel_generators(const LfihdSpec& spec, const MembershipContext& ctx, long bound,
                                          const PrimeField& F) {
  KernelGenerators out;
  if (auto* t = std::get_if<ToricSpec>(&spec)) {
    Cone face = dual_face(t->sigma, Cone::from_rays({t->root.distinguished_ray}, t->sigma.rank()));
    for (auto& m : hilbert_points(face, bound))
      out.generators.push_back(GradedElement::character(m.rank(), F, m));
    return out;
  }
  if (auto* v = std::get_if<VerticalSpec>(&spec)) {
    Cone face = dual_face(v->sigma, Cone::from_rays({v->root.distinguished_ray}, v->sigma.rank()));
    for (auto& m : hilbert_points(face, bound)) {
      auto piece = ctx.D->graded_piece(m);
      if (piece.sections.curve == CurveKind::Affine)
        out.generators.push_back(GradedElement::monomial(m.rank(), F, m, piece.sections.generator));
      else
        for (auto& b : piece.sections.basis) out.generators.push_back(GradedElement::monomial(m.rank(), F, m, b));
    }
    return out;
  }
  const auto& h = std::get<HorizontalSpec>(spec);
  LatVec dv = h.dv();
  // generators of the semigroup of omega-points in the sublattice L = h^{-1}(Z)
  std::vector<LatVec> pts;
  for (auto& m : box_points(h.omega, bound))
    if (pair_ll(m, dv) % Z((long)h.d) == 0) pts.push_back(m);
  std::vector<LatVec> gens = prune_sums(pts);
  for (auto& m : gens) {
    QDivisor Dm = ctx.D->evaluate_any(m);
    RatFunc phi = RatFunc::constant(F, 1);
    bool skip = false;
    for (auto& [z, coeffq] : Dm.support()) {
      if (z.is_infinity()) continue;
      if (coeffq.get_den() != 1) {
        out.diagnostics.push_back("no kernel section at " + m.str() + ": D(m) not integral");
        skip = true;
        break;
      }
      phi *= RatFunc(z.poly()).pow(-Z(coeffq.get_num()).get_si());
    }
    if (skip) continue;
    GradedElement g = GradedElement::monomial(m.rank(), F, m, phi);
    if (kernel_test(spec, ctx, g))
      out.generators.push_back(g);
    else
      out.diagnostics.push_back("candidate at " + m.str() + " failed the kernel test");
  }
  return out;
}

// Order formula of the one-variable positive-characteristic lemma, checked
// against the brute-force multinomial expansion of (t + sum lambda_j x^{E_j})^ell:
// the t^{ell-i} coefficient of d^{(i E_1)}(t^ell) is lambda_1^i C(ell,i), and
// every other contribution carries a strictly higher power of t. With a single
// step the whole coefficient is pinned.
inline FieldElem ord_formula_check(const std::vector<HorizontalStep>& steps, unsigned long i, unsigned long ell,
                                   const PrimeField& F) {
  if (steps.empty()) throw std::invalid_argument("ord_formula_check: no steps");
  unsigned long E1 = steps[0].exponent;
  if (ell < i * E1) throw std::invalid_argument("ord_formula_check: requires ell >= i * p^{s_1}");
  FieldElem predicted = steps[0].lambda.pow((long)i) * binomial_in_field(ell, i, F);

  // expansion with k[t] coefficients per power of x
  std::vector<Poly> base(1, Poly::variable(F));
  for (auto& st : steps) {
    if (base.size() <= st.exponent) base.resize(st.exponent + 1, Poly(F));
    base[st.exponent] = base[st.exponent] + Poly::constant(F, st.lambda);
  }
  std::vector<Poly> acc(1, Poly::constant(F, 1));
  for (unsigned long k = 0; k < ell; ++k) {
    std::vector<Poly> next(acc.size() + base.size() - 1, Poly(F));
    for (size_t x1 = 0; x1 < acc.size(); ++x1) {
      if (acc[x1].is_zero()) continue;
      for (size_t x2 = 0; x2 < base.size(); ++x2) {
        if (base[x2].is_zero()) continue;
        next[x1 + x2] = next[x1 + x2] + acc[x1] * base[x2];
      }
    }
    acc = std::move(next);
  }
  Poly got = i * E1 < acc.size() ? acc[i * E1] : Poly(F);
  if (got.coeff(ell - i) != predicted) throw std::logic_error("order formula disagrees with the multinomial oracle");
  if (!got.is_zero() && got.low_order() < ell - i)
    throw std::logic_error("multinomial oracle found a lower-order term");
  if (steps.size() == 1 && got != Poly::variable(F).pow(ell - i) * predicted)
    throw std::logic_error("single-step order formula disagrees with the multinomial oracle");
  if (!predicted.is_zero() && got.low_order() != ell - i)
    throw std::logic_error("order of the image disagrees with the formula");
  return predicted;
}

// Same check swept over all (i, ell) with ell <= ell_max, sharing one
// incrementally grown expansion; returns the number of pairs verified.
inline long ord_formula_check_range(const std::vector<HorizontalStep>& steps, unsigned long ell_max,
                                    const PrimeField& F) {
  if (steps.empty()) throw std::invalid_argument("ord_formula_check_range: no steps");
  unsigned long E1 = steps[0].exponent;
  std::vector<Poly> base(1, Poly::variable(F));
  for (auto& st : steps) {
    if (base.size() <= st.exponent) base.resize(st.exponent + 1, Poly(F));
    base[st.exponent] = base[st.exponent] + Poly::constant(F, st.lambda);
  }
  std::vector<Poly> acc(1, Poly::constant(F, 1));
  long checked = 0;
  for (unsigned long ell = 0; ell <= ell_max; ++ell) {
    if (ell > 0) {
      std::vector<Poly> next(acc.size() + base.size() - 1, Poly(F));
      for (size_t x1 = 0; x1 < acc.size(); ++x1) {
        if (acc[x1].is_zero()) continue;
        for (size_t x2 = 0; x2 < base.size(); ++x2) {
          if (base[x2].is_zero()) continue;
          next[x1 + x2] = next[x1 + x2] + acc[x1] * base[x2];
        }
      }
      acc = std::move(next);
    }
    for (unsigned long i = 0; i * E1 <= ell; ++i) {
      FieldElem predicted = steps[0].lambda.pow((long)i) * binomial_in_field(ell, i, F);
      Poly got = i * E1 < acc.size() ? acc[i * E1] : Poly(F);
      if (got.coeff(ell - i) != predicted)
        throw std::logic_error("order formula disagrees with the multinomial oracle");
      if (!got.is_zero() && got.low_order() < ell - i)
        throw std::logic_error("multinomial oracle found a lower-order term");
      if (!predicted.is_zero() && got.low_order() != ell - i)
        throw std::logic_error("order of the image disagrees with the formula");
      ++checked;
    }
  }
  return checked;
}

}  // namespace gact
