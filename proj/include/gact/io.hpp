#pragma once

#include <gact/gact.hpp>

#include <json.hpp>

namespace gact {

using json = nlohmann::ordered_json;

// ---------------------------------------------------------------------------
// parsing

inline Q parse_q_json(const json& j) {
  if (j.is_string()) return parse_q(j.get<std::string>());
  if (j.is_number_integer()) return Q(j.get<long>());
  throw std::invalid_argument("expected an integer or a \"p/q\" string");
}

inline Poly parse_poly(const json& j, const PrimeField& F) {
  std::vector<Q> cs;
  for (auto& c : j) cs.push_back(parse_q_json(c));
  return Poly(F, cs);
}

inline RatFunc parse_ratfunc(const json& j, const PrimeField& F) {
  if (j.is_array()) return RatFunc(parse_poly(j, F));
  Poly num = parse_poly(j.at("num"), F);
  Poly den = j.contains("den") ? parse_poly(j.at("den"), F) : Poly::constant(F, 1);
  return RatFunc(num, den);
}

inline LatVec parse_latvec(const json& j) {
  LatVec v(j.size());
  for (size_t i = 0; i < j.size(); ++i) v.c[i] = Z(j[i].get<long>());
  return v;
}

inline QVec parse_qvec(const json& j) {
  QVec v(j.size());
  for (size_t i = 0; i < j.size(); ++i) v.c[i] = parse_q_json(j[i]);
  return v;
}

inline Cone parse_cone(const json& rays, size_t rank) {
  std::vector<LatVec> rs;
  for (auto& r : rays) rs.push_back(parse_latvec(r));
  return Cone::from_rays(rs, rank);
}

inline CurvePoint parse_point(const json& j, const PrimeField& F) {
  if (j.is_string() && j.get<std::string>() == "infinity") return CurvePoint::infinity();
  Poly p = parse_poly(j, F);
  return CurvePoint::finite(p.monic());
}

inline GradedElement parse_element(const json& j, size_t rank, const PrimeField& F) {
  GradedElement g(rank, F);
  for (auto& t : j) {
    LatVec m = parse_latvec(t.at("m"));
    RatFunc f = t.contains("num") ? parse_ratfunc(t, F) : parse_ratfunc(t.at("f"), F);
    g.add(m, f);
  }
  return g;
}

struct ProblemFile {
  PrimeField field;
  size_t rank = 0;
  PolyDivisor divisor;
  json raw;

  // optional query parameters
  std::optional<LatVec> m;
  std::optional<long> bound;
  std::optional<LatVec> e;
  std::optional<Cone> omega;
  std::vector<unsigned long> s_list;
  std::vector<FieldElem> lambdas;
  std::optional<long> max_i;
  std::optional<GradedElement> element;
  std::optional<json> lfihd;
};

inline ProblemFile parse_problem(const json& j) {
  ProblemFile pf;
  pf.raw = j;
  pf.field = PrimeField(j.at("field").at("char").get<unsigned long>());
  pf.rank = j.at("rank").get<size_t>();
  std::string curve = j.at("curve").get<std::string>();
  if (curve != "affine" && curve != "projective") throw std::invalid_argument("curve must be affine or projective");
  Cone tail = parse_cone(j.at("tail"), pf.rank);
  pf.divisor = PolyDivisor(pf.field, curve == "affine" ? CurveKind::Affine : CurveKind::Projective, tail);
  for (auto& c : j.value("coefficients", json::array())) {
    CurvePoint z = parse_point(c.at("point"), pf.field);
    std::vector<QVec> vs;
    for (auto& v : c.at("vertices")) vs.push_back(parse_qvec(v));
    pf.divisor.set_coefficient(z, SigmaPolyhedron(vs, tail));
  }
  if (j.contains("query")) {
    const json& q = j.at("query");
    if (q.contains("m")) pf.m = parse_latvec(q.at("m"));
    if (q.contains("bound")) pf.bound = q.at("bound").get<long>();
    if (q.contains("e")) pf.e = parse_latvec(q.at("e"));
    if (q.contains("omega")) pf.omega = parse_cone(q.at("omega"), pf.rank);
    if (q.contains("s_list"))
      for (auto& s : q.at("s_list")) pf.s_list.push_back(s.get<unsigned long>());
    if (q.contains("lambdas"))
      for (auto& l : q.at("lambdas")) pf.lambdas.emplace_back(pf.field, parse_q_json(l));
    if (q.contains("max_i")) pf.max_i = q.at("max_i").get<long>();
    if (q.contains("element")) pf.element = parse_element(q.at("element"), pf.rank, pf.field);
  }
  if (j.contains("lfihd")) pf.lfihd = j.at("lfihd");
  return pf;
}

inline LfihdSpec parse_lfihd(const json& j, const ProblemFile& pf) {
  std::string type = j.at("type").get<std::string>();
  if (type == "toric") {
    Cone sigma = j.contains("sigma") ? parse_cone(j.at("sigma"), pf.rank) : pf.divisor.tail();
    LatVec e = parse_latvec(j.at("e"));
    auto root = is_root(sigma, e);
    if (!root) throw std::invalid_argument("e is not a Demazure root of sigma");
    FieldElem lambda(pf.field, j.contains("lambda") ? parse_q_json(j.at("lambda")) : Q(1));
    unsigned long r = j.value("r", 0UL);
    ToricSpec t{sigma, *root, lambda, r};
    t.validate();
    return t;
  }
  if (type == "vertical") {
    LatVec e = parse_latvec(j.at("e"));
    auto root = is_root(pf.divisor.tail(), e);
    if (!root) throw std::invalid_argument("e is not a Demazure root of the tail cone");
    RatFunc phi = parse_ratfunc(j.at("phi"), pf.field);
    auto sc = contains_section(pf.divisor.evaluate_any(e), phi, pf.divisor.curve());
    if (!sc.ok) throw std::invalid_argument("phi is not a section of D(e): " + sc.reason);
    return VerticalSpec{pf.divisor.tail(), *root, phi};
  }
  if (type == "horizontal") {
    HorizontalSpec h;
    h.e = parse_latvec(j.at("e"));
    h.v = parse_qvec(j.at("v"));
    h.d = j.at("d").get<unsigned long>();
    h.omega = j.contains("omega") ? parse_cone(j.at("omega"), pf.rank) : dual_cone(pf.divisor.tail());
    for (auto& st : j.at("steps")) {
      unsigned long s = st.at("s").get<unsigned long>();
      unsigned long P = 1;
      for (unsigned long i = 0; i < s && pf.field.ch > 0; ++i) P *= pf.field.ch;
      h.steps.push_back({P, FieldElem(pf.field, parse_q_json(st.at("lambda")))});
    }
    h.validate(pf.field);
    return h;
  }
  throw std::invalid_argument("unknown lfihd type: " + type);
}

// ---------------------------------------------------------------------------
// serialization (deterministic: degrees lex-sorted, points by degree then
// coefficients, rationals as exact strings)

inline json qvec_json(const QVec& v) {
  json a = json::array();
  for (auto& x : v.c) a.push_back(q_to_string(x));
  return a;
}

inline json latvec_json(const LatVec& v) {
  json a = json::array();
  for (auto& x : v.c) a.push_back(x.get_si());
  return a;
}

inline json cone_json(const Cone& c) {
  json a = json::array();
  for (auto& r : c.rays()) a.push_back(latvec_json(r));
  return a;
}

inline json poly_json(const Poly& p) {
  json a = json::array();
  for (int i = 0; i <= p.degree(); ++i) a.push_back(p.coeff(i).str());
  return a;
}

inline json point_json(const CurvePoint& z) {
  if (z.is_infinity()) return "infinity";
  return poly_json(z.poly());
}

inline json divisor_json(const QDivisor& D) {
  json a = json::array();
  for (auto& [z, c] : D.support()) {
    json e;
    e["point"] = point_json(z);
    e["coeff"] = q_to_string(c);
    a.push_back(e);
  }
  return a;
}

inline json ratfunc_json(const RatFunc& f) {
  json e;
  e["num"] = poly_json(f.num());
  if (f.den().degree() > 0) e["den"] = poly_json(f.den());
  return e;
}

inline json element_json(const GradedElement& g) {
  json a = json::array();
  for (auto& [m, comp] : g.components()) {
    json e;
    e["m"] = latvec_json(m);
    e["f"] = ratfunc_json(comp.f);
    if (comp.in_zeta) e["zeta"] = true;
    a.push_back(e);
  }
  return a;
}

inline json series_json(const ExpSeries& s) {
  json a = json::array();
  for (size_t i = 0; i < s.c.size(); ++i) {
    if (s.c[i].is_zero() && i > 0) continue;
    json e;
    e["i"] = i;
    e["coeff"] = element_json(s.c[i]);
    if (i < s.member.size()) e["member"] = (bool)s.member[i];
    a.push_back(e);
  }
  json out;
  out["terms"] = a;
  out["complete"] = s.complete;
  out["text"] = s.str();
  return out;
}

inline json problem_json(const ProblemFile& pf) {
  json j;
  j["field"] = json{{"char", pf.field.ch}};
  j["rank"] = pf.rank;
  j["curve"] = pf.divisor.curve() == CurveKind::Affine ? "affine" : "projective";
  j["tail"] = cone_json(pf.divisor.tail());
  json cs = json::array();
  for (auto& [z, delta] : pf.divisor.coefficients()) {
    json c;
    c["point"] = point_json(z);
    json vs = json::array();
    for (auto& v : delta.vertices()) vs.push_back(qvec_json(v));
    c["vertices"] = vs;
    cs.push_back(c);
  }
  j["coefficients"] = cs;
  if (pf.raw.contains("query")) j["query"] = pf.raw.at("query");
  if (pf.lfihd) j["lfihd"] = *pf.lfihd;
  return j;
}

}  // namespace gact
