#pragma once

#include <gact/lfihd.hpp>

namespace gact {

// ---------------------------------------------------------------------------
// toric classification

struct ToricAction {
  DemazureRoot root;
  Cone kernel_face;  // rho* in M
};

// Normalized actions within the box: one lambda d_e family per root, with the
// Frobenius parameters (lambda, r) free in positive characteristic.
inline std::vector<ToricAction> classify_toric(const Cone& sigma, long bound) {
  if (sigma.is_zero()) throw std::domain_error("zero cone admits no nontrivial actions");
  std::vector<ToricAction> out;
  for (auto& r : enumerate_roots(sigma, bound)) {
    Cone ray = Cone::from_rays({r.distinguished_ray}, sigma.rank());
    out.push_back({r, dual_face(sigma, ray)});
  }
  return out;
}

// ---------------------------------------------------------------------------
// vertical actions

struct RayAdmissibility {
  LatVec ray;
  bool admissible;
  std::string reason;
};

// A ray can carry a vertical action iff the curve is affine or the ray misses
// deg D; the intersection test is an exact one-variable feasibility check.
inline std::vector<RayAdmissibility> vertical_admissible_rays(const PolyDivisor& D) {
  std::vector<RayAdmissibility> out;
  if (D.curve() == CurveKind::Affine) {
    for (auto& rho : D.tail().extremal_rays()) out.push_back({rho, true, "the curve is affine"});
    return out;
  }
  SigmaPolyhedron deg = D.degree_polyhedron();
  HRep h = homogenization_hrep(deg);
  size_t n = D.rank();
  for (auto& rho : D.tail().extremal_rays()) {
    // feasibility of s >= 0 with s*rho inside deg D
    std::optional<Q> lo = Q(0), hi;
    bool feasible = true;
    auto clamp = [&](const Z& c, const Q& rhs, bool equality) {
      if (c > 0) {
        Q b = rhs / Q(c);
        if (!lo || *lo < b) lo = b;
        if (equality && (!hi || *hi > b)) hi = b;
      } else if (c < 0) {
        Q b = rhs / Q(c);
        if (!hi || *hi > b) hi = b;
        if (equality && (!lo || *lo < b)) lo = b;
      } else if (rhs > 0 || (equality && rhs != 0)) {
        feasible = false;
      }
    };
    for (auto& a : h.ineq) {
      Z c = 0;
      for (size_t i = 0; i < n; ++i) c += a.c[i] * rho.c[i];
      clamp(c, Q(-a.c[n]), false);
    }
    for (auto& a : h.eq) {
      Z c = 0;
      for (size_t i = 0; i < n; ++i) c += a.c[i] * rho.c[i];
      clamp(c, Q(-a.c[n]), true);
    }
    if (feasible && hi && lo && *lo > *hi) feasible = false;
    if (feasible)
      out.push_back({rho, false, "the ray meets deg D"});
    else
      out.push_back({rho, true, "the ray misses deg D"});
  }
  return out;
}

struct VerticalBuild {
  std::vector<VerticalSpec> specs;
  std::string reason;
};

// All vertical actions with the given root: one per basis section of D(e).
inline VerticalBuild build_vertical(const PolyDivisor& D, const DemazureRoot& root) {
  VerticalBuild out;
  if (!is_root(D.tail(), root.e)) {
    out.reason = "e is not a root of the tail cone";
    return out;
  }
  QDivisor De = D.evaluate_any(root.e);
  SectionBasis phis = section_module(De, D.curve(), D.field());
  if (D.curve() == CurveKind::Affine) {
    out.specs.push_back({D.tail(), root, phis.generator});
    return out;
  }
  if (phis.dim == 0) {
    out.reason = "deg D(e) < 0: no sections";
    return out;
  }
  for (auto& phi : phis.basis) out.specs.push_back({D.tail(), root, phi});
  return out;
}

// ---------------------------------------------------------------------------
// horizontal existence checker

struct HorizontalData {
  Cone omega;
  CurvePoint z0 = CurvePoint::infinity();
  std::optional<CurvePoint> zinf;
  PolyDivisor normalized;
  NormalizeTranscript transcript;
  QVec v;
  unsigned long d = 1, d_prime = 1;
  unsigned long k = 0;
  Cone tau, tau_hat;
  unsigned long s1 = 0;
  std::vector<unsigned long> accepted_s;  // every s in s_list passing (iii)
  DemazureRoot root_hat;
  long verification_bound = 0;
  bool rank1_exact = false;
  bool cond_iv = false, cond_v = false, cond_vi = false;
};

struct HorizontalOutcome {
  bool accepted = false;
  std::optional<HorizontalData> data;  // present once normalization succeeded
  std::string rejected_at;             // "(i)".."(vi)"
  std::string reason;
  std::optional<LatVec> witness_m;
};

namespace detail {

inline unsigned long pow_ul(unsigned long b, unsigned long e) {
  unsigned long r = 1;
  while (e--) r *= b;
  return r;
}

struct HzData {
  CurvePoint z = CurvePoint::infinity();
  SigmaPolyhedron delta;
  bool has = false;
};

}  // namespace detail

inline HorizontalOutcome check_horizontal(const PolyDivisor& D, const LatVec& e, const Cone& omega,
                                          const std::vector<unsigned long>& s_list, long bound = 0) {
  HorizontalOutcome out;
  const PrimeField F = D.field();
  const size_t n = D.rank();
  auto pr = D.is_proper();
  if (!pr.proper) {
    out.rejected_at = "(i)";
    out.reason = "divisor is not proper: " + pr.reason;
    return out;
  }

  // probe points of omega
  long hb = 4;
  for (auto& r : omega.rays())
    if (r.sup_norm() > hb) hb = r.sup_norm().get_si();
  auto omega_points = hilbert_points(omega, hb);
  LatVec probe(n);
  for (auto& r : omega.rays()) probe = probe + r;
  if (probe.is_zero() && !omega_points.empty()) probe = omega_points.front();

  auto nonintegral_on_omega = [&](const SigmaPolyhedron& delta) {
    QVec v = delta.argmin_vertex(probe);
    for (auto& m : omega_points)
      if (pair_lq(m, v) != delta.vertex_min(m)) return true;  // not even linear
    for (auto& m : omega_points)
      if (Q(pair_lq(m, v)).get_den() != 1) return true;
    return false;
  };

  // choose zinf (projective) and z0: omega must be a maximal cell of the
  // quasifan away from zinf, and every other point must have integral h_z|omega
  std::vector<std::optional<CurvePoint>> zinf_candidates;
  if (D.curve() == CurveKind::Projective) {
    zinf_candidates.push_back(CurvePoint::infinity());
    for (auto& [z, delta] : D.coefficients())
      if (!z.is_infinity() && z.is_rational()) zinf_candidates.push_back(z);
  } else {
    zinf_candidates.push_back(std::nullopt);
  }
  std::optional<CurvePoint> z0, zinf;
  std::string why_ii = "omega is not a maximal cell with integral h_z away from a rational z0";
  bool found = false;
  for (auto& cand : zinf_candidates) {
    QuasiFan fan = D.quasifan(cand ? &*cand : nullptr);
    bool is_cell = false;
    for (auto& cell : fan.cells)
      if (cell == omega) is_cell = true;
    if (!is_cell) {
      why_ii = "omega is not a maximal cell of the quasifan";
      continue;
    }
    std::vector<CurvePoint> ni;
    for (auto& [z, delta] : D.coefficients()) {
      if (cand && z == *cand) continue;
      if (nonintegral_on_omega(delta)) ni.push_back(z);
    }
    if (ni.size() > 1) {
      why_ii = "h_z|omega fails integrality at more than one point";
      continue;
    }
    std::optional<CurvePoint> cz0;
    if (ni.size() == 1) {
      if (!ni[0].is_rational()) {
        why_ii = "the non-integral point " + ni[0].str() + " is not rational";
        continue;
      }
      cz0 = ni[0];
    } else {
      CurvePoint origin = CurvePoint::rational(F, 0L);
      if (cand && *cand == origin)
        cz0 = D.curve() == CurveKind::Projective ? CurvePoint::infinity() : CurvePoint::rational(F, 1L);
      else
        cz0 = origin;
    }
    z0 = cz0;
    zinf = cand;
    found = true;
    break;
  }
  if (!found) {
    out.rejected_at = D.curve() == CurveKind::Projective ? "(ii')" : "(ii)";
    out.reason = why_ii;
    return out;
  }

  auto norm = normalize_for_horizontal(D, *z0, zinf, omega);
  if (std::holds_alternative<NormalizeError>(norm)) {
    out.rejected_at = D.curve() == CurveKind::Projective ? "(ii')" : "(ii)";
    out.reason = std::get<NormalizeError>(norm).reason;
    return out;
  }
  auto& [Dn, transcript] = std::get<std::pair<PolyDivisor, NormalizeTranscript>>(norm);

  HorizontalData data;
  data.omega = omega;
  data.z0 = *z0;
  data.zinf = zinf;
  data.normalized = Dn;
  data.transcript = transcript;

  const CurvePoint origin = CurvePoint::rational(F, 0L);
  SigmaPolyhedron delta0 = Dn.coefficient(origin);
  data.v = delta0.argmin_vertex(probe);
  for (auto& m : omega_points)
    if (pair_lq(m, data.v) != delta0.vertex_min(m)) {
      out.rejected_at = "(ii)";
      out.reason = "h_{z0} is not linear on omega";
      return out;
    }
  data.d = data.v.denominator_lcm().get_ui();
  data.k = 0;
  data.d_prime = data.d;
  if (F.ch > 0) {
    while (data.d_prime % F.ch == 0) {
      data.d_prime /= F.ch;
      ++data.k;
    }
  }
  data.tau = dual_cone(omega);

  // lifted cone in N x Z
  std::vector<LatVec> gens;
  {
    QVec lift(n + 1);
    for (size_t i = 0; i < n; ++i) lift.c[i] = data.v.c[i];
    lift.c[n] = 1;
    gens.push_back(lift.primitive_direction());
    for (auto& r : data.tau.rays()) {
      LatVec g(n + 1);
      for (size_t i = 0; i < n; ++i) g.c[i] = r.c[i];
      gens.push_back(g);
    }
    if (D.curve() == CurveKind::Projective) {
      SigmaPolyhedron dinf = Dn.coefficient(CurvePoint::infinity());
      for (auto& w : dinf.vertices()) {
        QVec lw(n + 1);
        for (size_t i = 0; i < n; ++i) lw.c[i] = w.c[i];
        lw.c[n] = -1;
        gens.push_back(lw.primitive_direction());
      }
    }
  }
  data.tau_hat = Cone::from_rays(gens, n + 1);
  out.data = data;
  if (!data.tau_hat.is_strongly_convex()) {
    out.rejected_at = "(iii)";
    out.reason = "the lifted cone is not strongly convex";
    return out;
  }

  // condition (iii): Frobenius powers making the lifted vector a root
  LatVec dv = (data.v * Q((long)data.d)).to_lat();
  auto h_of = [&](const LatVec& m) { return make_q(pair_ll(m, dv), Z((long)data.d)); };
  std::vector<unsigned long> s_sorted = s_list;
  std::sort(s_sorted.begin(), s_sorted.end());
  std::vector<std::pair<unsigned long, DemazureRoot>> root_candidates;
  for (auto s : s_sorted) {
    unsigned long P = F.ch == 0 ? 1 : detail::pow_ul(F.ch, s);
    LatVec pe = e * Z((long)P);
    Q q = Q(-1, (long)data.d) - h_of(pe);
    if (q.get_den() != 1) continue;
    LatVec ehat(n + 1);
    for (size_t i = 0; i < n; ++i) ehat.c[i] = pe.c[i];
    ehat.c[n] = Z(q.get_num());
    if (auto r = is_root(data.tau_hat, ehat)) root_candidates.push_back({s, *r});
  }
  if (root_candidates.empty()) {
    out.rejected_at = "(iii)";
    out.reason = "no s in the list makes (p^s e, -1/d - h(p^s e)) a root of the lifted cone";
    return out;
  }

  std::vector<detail::HzData> others;
  SigmaPolyhedron dinf = SigmaPolyhedron::cone_itself(D.tail());
  for (auto& [z, delta] : Dn.coefficients()) {
    if (z == origin) continue;
    if (z.is_infinity()) {
      dinf = delta;
      continue;
    }
    others.push_back({z, delta, true});
  }
  unsigned long pk = F.ch == 0 ? 1 : detail::pow_ul(F.ch, data.k);

  // conditions (iv)-(vi) quantify over the weight cone with s1 the smallest
  // step of the derivation; each candidate s from the list is tried as s1
  std::optional<std::tuple<std::string, std::string, LatVec>> first_rejection;
  for (auto& [s1, root_hat] : root_candidates) {
    unsigned long P = F.ch == 0 ? 1 : detail::pow_ul(F.ch, s1);
    LatVec Pe = e * Z((long)P);
    Z dhPe = pair_ll(Pe, dv);  // d * h(Pe)

    auto check_at = [&](const LatVec& m) -> std::optional<std::pair<std::string, std::string>> {
      if (!Dn.in_weight_cone(m) || !Dn.in_weight_cone(m + Pe)) return std::nullopt;
      for (auto& o : others) {
        Q h1 = o.delta.vertex_min(m + Pe);
        if (h1 == 0) continue;
        Q h0 = o.delta.vertex_min(m);
        if (floor_q(Q(pk) * h1) - floor_q(Q(pk) * h0) < 1)
          return std::make_pair(std::string("(iv)"), "floor inequality fails at " + o.z.str());
      }
      {
        Q h1 = delta0.vertex_min(m + Pe);
        if (h1 != h_of(m + Pe)) {
          Q h0 = delta0.vertex_min(m);
          if (floor_q(Q((long)data.d) * h1) - floor_q(Q((long)data.d) * h0) < Q(1) + Q(dhPe))
            return std::make_pair(std::string("(v)"), "floor inequality fails at z0");
        }
      }
      if (D.curve() == CurveKind::Projective) {
        Q h1 = dinf.vertex_min(m + Pe);
        Q h0 = dinf.vertex_min(m);
        if (floor_q(Q((long)data.d) * h1) - floor_q(Q((long)data.d) * h0) < Q(-1) - Q(dhPe))
          return std::make_pair(std::string("(vi)"), "floor inequality fails at infinity");
      }
      return std::nullopt;
    };

    long B;
    if (n == 1) {
      // Exact for rank one: each h_z is linear on each side of 0, so beyond
      // the straddle zone every floor difference is periodic in m with period
      // dividing W = lcm of d and the vertex denominators.
      Z W = Z((long)data.d);
      for (auto& o : others)
        for (auto& vv : o.delta.vertices()) W = lcm_z(W, vv.denominator_lcm());
      for (auto& vv : delta0.vertices()) W = lcm_z(W, vv.denominator_lcm());
      for (auto& vv : dinf.vertices()) W = lcm_z(W, vv.denominator_lcm());
      B = Z(Pe.sup_norm() + W).get_si() + 1;
      out.data->rank1_exact = true;
    } else {
      Z maxden = 1;
      for (auto& [z, delta] : Dn.coefficients())
        for (auto& vv : delta.vertices()) maxden = std::max(maxden, vv.denominator_lcm());
      B = bound > 0 ? bound : (long)(4 * data.d * P * maxden.get_ui());
    }

    std::optional<LatVec> witness;
    std::pair<std::string, std::string> why;
    std::vector<long> x((size_t)n, -B);
    while (true) {
      LatVec m(n);
      for (size_t i = 0; i < n; ++i) m.c[i] = x[i];
      if (auto bad = check_at(m)) {
        witness = m;
        why = *bad;
        break;
      }
      size_t i = 0;
      for (; i < (size_t)n; ++i) {
        if (x[i] < B) {
          ++x[i];
          break;
        }
        x[i] = -B;
      }
      if (i == (size_t)n) break;
    }
    if (witness) {
      if (!first_rejection) {
        first_rejection = {why.first, why.second + " (s = " + std::to_string(s1) + ")", *witness};
        out.data->s1 = s1;
        out.data->root_hat = root_hat;
        out.data->verification_bound = B;
      }
      continue;
    }
    // full scan passed: s1 is the smallest admissible step
    out.data->s1 = s1;
    out.data->root_hat = root_hat;
    out.data->verification_bound = B;
    out.data->accepted_s.clear();
    for (auto& [s, r] : root_candidates)
      if (s >= s1) out.data->accepted_s.push_back(s);
    out.data->cond_iv = out.data->cond_v = out.data->cond_vi = true;
    out.accepted = true;
    return out;
  }
  auto& [at, why, wit] = *first_rejection;
  out.rejected_at = at;
  out.reason = why;
  out.witness_m = wit;
  return out;
}

// Assemble the horizontal derivation from an accepted (or forced) data block.
inline HorizontalSpec build_horizontal(const HorizontalData& data, const LatVec& e,
                                       const std::vector<FieldElem>& lambdas, const PrimeField& F) {
  if (lambdas.size() != data.accepted_s.size())
    throw std::invalid_argument("build_horizontal: one lambda per accepted s");
  HorizontalSpec spec;
  spec.e = e;
  spec.v = data.v;
  spec.d = data.d;
  spec.omega = data.omega;
  for (size_t i = 0; i < lambdas.size(); ++i) {
    unsigned long P = F.ch == 0 ? 1 : detail::pow_ul(F.ch, data.accepted_s[i]);
    spec.steps.push_back({P, lambdas[i]});
  }
  spec.validate(F);
  return spec;
}

struct ClosureReport {
  bool ok = true;
  std::string first_failure;
  long elements_checked = 0;
};

// Ground-truth validation of a horizontal spec: apply it to a generating set
// of the algebra (the module generators of every graded piece in the degree
// box, together with t in degree zero) and require every coefficient to stay
// in the algebra.
inline ClosureReport closure_oracle(const HorizontalSpec& spec, const PolyDivisor& D, long bound) {
  ClosureReport rep;
  Cone weight = dual_cone(D.tail());
  std::vector<LatVec> degrees = box_points(weight, bound);
  degrees.push_back(LatVec(D.rank()));
  for (auto& m : degrees) {
    auto piece = D.graded_piece(m);
    std::vector<RatFunc> fs;
    if (D.curve() == CurveKind::Affine) {
      fs.push_back(piece.sections.generator);
      fs.push_back(piece.sections.generator * RatFunc::variable(D.field()));
    } else {
      fs = piece.sections.basis;
    }
    for (auto& f : fs) {
      GradedElement a = GradedElement::monomial(m.rank(), D.field(), m, f);
      ExpSeries s = apply_horizontal(spec, a, D);
      ++rep.elements_checked;
      bool good = s.complete;
      for (size_t i = 0; i < s.c.size() && good; ++i)
        if (!s.member[i]) good = false;
      if (!good && rep.ok) {
        rep.ok = false;
        long bad = 0;
        for (size_t i = 0; i < s.c.size(); ++i)
          if (!s.member[i]) {
            bad = (long)i;
            break;
          }
        rep.first_failure = "element " + a.str() + ": coefficient " + std::to_string(bad) + " = " +
                            s.coeff(bad).str() + " leaves the algebra";
      }
    }
  }
  return rep;
}

struct SupportCheckReport {
  bool ok = true;
  std::string detail;
};

// Consistency check for horizontal G_m-surfaces with tail R_{>=0}: the
// fractional part of D(1) is supported in at most one point (affine) or two
// (projective), all rational.
inline SupportCheckReport surface_support_check(const PolyDivisor& D) {
  if (D.rank() != 1) throw std::invalid_argument("surface_support_check: rank one only");
  std::vector<LatVec> expect{LatVec{1}};
  if (D.tail().rays() != expect) throw std::invalid_argument("surface_support_check: tail must be R_{>=0}");
  QDivisor d1 = D.evaluate(LatVec{1});
  QDivisor fr = d1.frac();
  size_t limit = D.curve() == CurveKind::Affine ? 1 : 2;
  SupportCheckReport rep;
  if (fr.support().size() > limit) {
    rep.ok = false;
    rep.detail = "fractional part of D(1) supported at " + std::to_string(fr.support().size()) +
                 " points, limit " + std::to_string(limit);
    return rep;
  }
  for (auto& [z, a] : fr.support())
    if (!z.is_rational()) {
      rep.ok = false;
      rep.detail = "fractional support at the non-rational point " + z.str();
      return rep;
    }
  rep.detail = "fractional support size " + std::to_string(fr.support().size());
  return rep;
}

}  // namespace gact
