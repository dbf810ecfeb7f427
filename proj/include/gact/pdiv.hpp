#pragma once

#include <gact/graded.hpp>
#include <gact/polyhedron.hpp>

#include <array>
#include <map>
#include <sstream>

namespace gact {

// Proper sigma-polyhedral divisor on A^1 or P^1. Points with coefficient equal
// to the tail cone itself are not stored.
class PolyDivisor {
 public:
  PolyDivisor() = default;
  PolyDivisor(PrimeField F, CurveKind curve, Cone tail) : F_(F), curve_(curve), tail_(std::move(tail)) {
    if (!tail_.is_strongly_convex()) throw std::invalid_argument("tail cone must be strongly convex");
  }

  void set_coefficient(const CurvePoint& z, const SigmaPolyhedron& delta) {
    if (delta.tail() != tail_) throw std::invalid_argument("coefficient tail differs from the divisor tail");
    if (z.is_infinity() && curve_ == CurveKind::Affine)
      throw std::invalid_argument("infinity coefficient on an affine curve");
    if (delta == SigmaPolyhedron::cone_itself(tail_))
      coeff_.erase(z);
    else
      coeff_[z] = delta;
  }

  const PrimeField& field() const { return F_; }
  CurveKind curve() const { return curve_; }
  const Cone& tail() const { return tail_; }
  size_t rank() const { return tail_.rank(); }
  const std::map<CurvePoint, SigmaPolyhedron>& coefficients() const { return coeff_; }

  SigmaPolyhedron coefficient(const CurvePoint& z) const {
    auto it = coeff_.find(z);
    return it == coeff_.end() ? SigmaPolyhedron::cone_itself(tail_) : it->second;
  }

  bool in_weight_cone(const LatVec& m) const {
    for (auto& r : tail_.rays())
      if (pair_ll(m, r) < 0) return false;
    return true;
  }

  // h_z(m) over the stored points, m in the weight cone.
  QDivisor evaluate(const LatVec& m) const {
    if (!in_weight_cone(m)) throw std::invalid_argument("evaluation degree outside the weight cone");
    return evaluate_any(m);
  }

  // Vertex-minimum evaluation, defined for every m (used at Demazure roots).
  QDivisor evaluate_any(const LatVec& m) const {
    QDivisor D;
    for (auto& [z, delta] : coeff_) D.set(z, delta.vertex_min(m));
    return D;
  }

  SigmaPolyhedron degree_polyhedron() const {
    if (curve_ != CurveKind::Projective) throw std::domain_error("degree polyhedron needs a projective curve");
    SigmaPolyhedron acc = SigmaPolyhedron::cone_itself(tail_);
    for (auto& [z, delta] : coeff_) acc = acc.minkowski_sum(delta.dilate(Z(z.degree())));
    return acc;
  }

  struct Properness {
    bool proper;
    std::string reason;
  };

  Properness is_proper() const {
    if (curve_ == CurveKind::Affine) return {true, "the curve is affine"};
    SigmaPolyhedron deg = degree_polyhedron();
    for (auto& v : deg.vertices())
      if (!tail_.contains(v)) return {false, "deg D has vertex " + v.str() + " outside the tail cone"};
    if (polyhedron_hrep_key(deg) == polyhedron_hrep_key(SigmaPolyhedron::cone_itself(tail_)))
      return {false, "deg D equals the tail cone"};
    return {true,
            "deg D is a proper subset of the tail cone; degree-zero evaluations are principal on P^1"};
  }

  // Coarsest subdivision of the weight cone on which every h_z is linear,
  // optionally ignoring the coefficient at one point.
  QuasiFan quasifan(const CurvePoint* restrict_away_from = nullptr) const {
    size_t n = rank();
    std::vector<QuasiFan> fans;
    QuasiFan base;
    base.cells.push_back(dual_cone(tail_));
    fans.push_back(base);
    for (auto& [z, delta] : coeff_) {
      if (restrict_away_from && z == *restrict_away_from) continue;
      QuasiFan f;
      for (auto& [v, cell] : delta.normal_cells()) f.cells.push_back(cell);
      fans.push_back(f);
    }
    return common_refinement(fans, n);
  }

  struct GradedPiece {
    LatVec m;
    QDivisor D;
    SectionBasis sections;
  };

  GradedPiece graded_piece(const LatVec& m) const {
    auto pr = is_proper();
    if (!pr.proper) throw std::domain_error("graded piece of an improper divisor: " + pr.reason);
    QDivisor D = evaluate(m);
    return {m, D, section_module(D, curve_, F_)};
  }

  struct Membership {
    bool ok;
    std::string reason;
  };

  Membership check_membership(const GradedElement& a) const {
    for (auto& [m, comp] : a.components()) {
      if (comp.in_zeta) return {false, "component at " + m.str() + " involves a fractional power of t"};
      if (!in_weight_cone(m)) return {false, "degree " + m.str() + " outside the weight cone"};
      auto sc = contains_section(evaluate(m), comp.f, curve_);
      if (!sc.ok) return {false, "component at " + m.str() + ": " + sc.reason};
    }
    return {true, ""};
  }

  bool operator==(const PolyDivisor& o) const {
    return F_ == o.F_ && curve_ == o.curve_ && tail_ == o.tail_ && coeff_ == o.coeff_;
  }

  std::string str() const {
    std::ostringstream os;
    os << (curve_ == CurveKind::Affine ? "A^1" : "P^1") << " over "
       << (F_.ch == 0 ? std::string("Q") : "F_" + std::to_string(F_.ch));
    for (auto& [z, delta] : coeff_) {
      os << "; " << z.str() << " -> conv{";
      for (size_t i = 0; i < delta.vertices().size(); ++i) os << (i ? "," : "") << delta.vertices()[i].str();
      os << "}+tail";
    }
    return os.str();
  }

 private:
  static std::vector<LatVec> polyhedron_hrep_key(const SigmaPolyhedron& P) {
    size_t n = P.rank();
    std::vector<LatVec> gens;
    for (auto& v : P.vertices()) {
      QVec lift(n + 1);
      for (size_t i = 0; i < n; ++i) lift.c[i] = v.c[i];
      lift.c[n] = 1;
      gens.push_back(lift.primitive_direction());
    }
    for (auto& r : P.tail().rays()) {
      LatVec lift(n + 1);
      for (size_t i = 0; i < n; ++i) lift.c[i] = r.c[i];
      gens.push_back(lift);
    }
    HRep h = vrep_to_hrep(gens, n + 1);
    std::vector<LatVec> key = h.eq;
    key.insert(key.end(), h.ineq.begin(), h.ineq.end());
    std::sort(key.begin(), key.end());
    return key;
  }

  PrimeField F_;
  CurveKind curve_ = CurveKind::Affine;
  Cone tail_;
  std::map<CurvePoint, SigmaPolyhedron> coeff_;
};

// Coordinate change u = (a t + b)/(c t + d) on P^1 (or a shift on A^1).
struct Mobius {
  std::array<Q, 4> m{1, 0, 0, 1};  // a, b, c, d

  bool is_identity() const { return m[0] == 1 && m[1] == 0 && m[2] == 0 && m[3] == 1; }

  // Image of a closed point under the coordinate change.
  CurvePoint map_point(const CurvePoint& z, const PrimeField& F) const {
    const Q &a = m[0], &b = m[1], &c = m[2], &d = m[3];
    if (z.is_infinity()) {
      if (c == 0) return CurvePoint::infinity();
      return CurvePoint::rational(F, FieldElem(F, a / c));
    }
    // substitute t = (d u - b)/(-c u + a) into the point polynomial
    Poly q = z.poly();
    Poly num(F, {-b, d});    // d*u - b
    Poly den(F, {a, -c});    // -c*u + a
    Poly img(F);             // q(num/den) * den^deg
    Poly den_pow = Poly::constant(F, 1);
    std::vector<Poly> den_pows;
    for (int i = 0; i <= q.degree(); ++i) {
      den_pows.push_back(den_pow);
      den_pow = den_pow * den;
    }
    for (int i = 0; i <= q.degree(); ++i)
      img = img + Poly::constant(F, q.coeff(i)) * num.pow(i) * den_pows[q.degree() - i];
    if (img.is_zero()) throw std::logic_error("mobius image vanished");
    if (img.degree() < q.degree()) return CurvePoint::infinity();
    return CurvePoint::finite(img.monic());
  }
};

struct NormalizeTranscript {
  Mobius mobius;
  // (point in the new coordinate, integral vector w): the coefficient there
  // was translated by -w, with the compensating translate at infinity on P^1.
  std::vector<std::pair<CurvePoint, LatVec>> shifts;

  bool is_identity() const { return mobius.is_identity() && shifts.empty(); }
};

struct NormalizeError {
  std::string reason;
};

// Moves z0 to [t], zinf to infinity, then cancels h_z on omega at every other
// support point by principal polyhedral shifts. The result presents an
// equivariantly isomorphic algebra.
inline std::variant<std::pair<PolyDivisor, NormalizeTranscript>, NormalizeError> normalize_for_horizontal(
    const PolyDivisor& D, const CurvePoint& z0, const std::optional<CurvePoint>& zinf, const Cone& omega) {
  const PrimeField F = D.field();
  if (!z0.is_rational()) return NormalizeError{"z0 must be a rational point"};
  if (zinf && !zinf->is_rational()) return NormalizeError{"zinf must be a rational point"};
  if (D.curve() == CurveKind::Affine) {
    if (zinf) return NormalizeError{"zinf given on an affine curve"};
    if (z0.is_infinity()) return NormalizeError{"z0 at infinity on an affine curve"};
  } else if (!zinf) {
    return NormalizeError{"zinf required on a projective curve"};
  }
  if (zinf && z0 == *zinf) return NormalizeError{"z0 and zinf coincide"};

  NormalizeTranscript tr;
  const Q a0 = z0.is_infinity() ? Q(0) : Q(-z0.poly().coeff(0).value());
  if (z0.is_infinity()) {
    Q c1 = -zinf->poly().coeff(0).value();
    tr.mobius.m = {0, 1, 1, -c1};  // u = 1/(t - c1)
  } else if (!zinf || zinf->is_infinity()) {
    tr.mobius.m = {1, -a0, 0, 1};  // u = t - a0
  } else {
    Q c1 = -zinf->poly().coeff(0).value();
    tr.mobius.m = {1, -a0, 1, -c1};  // u = (t - a0)/(t - c1)
  }

  PolyDivisor out(F, D.curve(), D.tail());
  for (auto& [z, delta] : D.coefficients()) out.set_coefficient(tr.mobius.map_point(z, F), delta);

  const CurvePoint new_z0 = CurvePoint::rational(F, 0L);
  std::optional<CurvePoint> new_zinf;
  if (zinf) new_zinf = CurvePoint::infinity();

  // interior probe and integrality witnesses for omega
  long hb = 4;
  for (auto& r : omega.rays()) {
    Z s = r.sup_norm();
    if (s > hb) hb = s.get_si();
  }
  auto omega_points = hilbert_points(omega, hb);
  if (omega_points.empty()) return NormalizeError{"omega has no lattice points within the probe bound"};
  LatVec probe(omega.rank());
  for (auto& r : omega.rays()) probe = probe + r;
  if (probe.is_zero()) probe = omega_points.front();

  std::vector<std::pair<CurvePoint, LatVec>> shifts;
  for (auto& [z, delta] : out.coefficients()) {
    if (z == new_z0) continue;
    if (new_zinf && z == *new_zinf) continue;
    QVec v = delta.argmin_vertex(probe);
    for (auto& mpt : omega_points)
      if (pair_lq(mpt, v) != delta.vertex_min(mpt))
        return NormalizeError{"h_z is not linear on omega at " + z.str()};
    if (!v.is_integral()) return NormalizeError{"h_z|omega is not integral at " + z.str()};
    if (v.is_zero()) continue;
    shifts.push_back({z, v.to_lat()});
  }
  for (auto& [z, w] : shifts) {
    QVec wq = QVec(w);
    out.set_coefficient(z, out.coefficient(z).translate_by(-wq));
    if (D.curve() == CurveKind::Projective) {
      CurvePoint inf = CurvePoint::infinity();
      out.set_coefficient(inf, out.coefficient(inf).translate_by(wq * Q(z.degree())));
    }
    tr.shifts.push_back({z, w});
  }
  return std::make_pair(out, tr);
}

}  // namespace gact
