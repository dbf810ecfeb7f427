// Command-line front end: reads a problem file describing a polyhedral
// divisor, runs the requested pipeline, and reports in text or JSON.
// Exit codes: 0 accept/pass, 1 reject (with witness), 2 input error.

#include <gact/io.hpp>

#include <CLI11.hpp>

#include <fstream>
#include <iostream>

using namespace gact;

namespace {

struct Options {
  std::string file;
  bool as_json = false;
  bool alpha = false;
  long bound = 6;
  long max_i = 4;
  std::string m_str, e_str, omega_str, s_list_str, lambda_str;
};

LatVec parse_csv_vec(const std::string& s) {
  LatVec v(0);
  std::stringstream ss(s);
  std::string tok;
  while (std::getline(ss, tok, ',')) v.c.emplace_back(tok);
  return v;
}

Cone parse_omega(const std::string& s, size_t rank) {
  std::vector<LatVec> rays;
  std::stringstream ss(s);
  std::string tok;
  while (std::getline(ss, tok, ';')) rays.push_back(parse_csv_vec(tok));
  return Cone::from_rays(rays, rank);
}

ProblemFile load(const Options& opt) {
  std::ifstream in(opt.file);
  if (!in) throw std::invalid_argument("cannot open " + opt.file);
  json j = json::parse(in);
  return parse_problem(j);
}

void emit(const Options& opt, const json& payload, const std::string& text) {
  if (opt.as_json)
    std::cout << payload.dump(2) << "\n";
  else
    std::cout << text;
}

int cmd_props(const Options& opt) {
  ProblemFile pf = load(opt);
  auto pr = pf.divisor.is_proper();
  json out;
  out["proper"] = pr.proper;
  out["reason"] = pr.reason;
  std::ostringstream text;
  text << (pr.proper ? "proper" : "improper") << ": " << pr.reason << "\n";
  if (pf.divisor.curve() == CurveKind::Projective) {
    SigmaPolyhedron deg = pf.divisor.degree_polyhedron();
    json vs = json::array();
    text << "deg D vertices:";
    for (auto& v : deg.vertices()) {
      vs.push_back(qvec_json(v));
      text << " " << v.str();
    }
    out["deg_vertices"] = vs;
    text << "\n";
  }
  json cells = json::array();
  text << "quasifan cells:\n";
  for (auto& cell : pf.divisor.quasifan().cells) {
    cells.push_back(cone_json(cell));
    text << "  cone{";
    for (size_t i = 0; i < cell.rays().size(); ++i) text << (i ? ", " : "") << cell.rays()[i].str();
    text << "}\n";
  }
  out["quasifan"] = cells;
  emit(opt, out, text.str());
  return pr.proper ? 0 : 1;
}

int cmd_eval(const Options& opt) {
  ProblemFile pf = load(opt);
  LatVec m = !opt.m_str.empty() ? parse_csv_vec(opt.m_str) : pf.m.value();
  QDivisor d = pf.divisor.evaluate(m);
  json out;
  out["m"] = latvec_json(m);
  out["divisor"] = divisor_json(d);
  emit(opt, out, "D(" + m.str() + ") = " + d.str() + "\n");
  return 0;
}

int cmd_piece(const Options& opt) {
  ProblemFile pf = load(opt);
  LatVec m = !opt.m_str.empty() ? parse_csv_vec(opt.m_str) : pf.m.value();
  auto piece = pf.divisor.graded_piece(m);
  json out;
  out["m"] = latvec_json(m);
  std::ostringstream text;
  if (piece.sections.curve == CurveKind::Affine) {
    out["generator"] = ratfunc_json(piece.sections.generator);
    text << "A_" << m.str() << " = " << piece.sections.generator.str() << " * k[t]\n";
  } else {
    out["dim"] = piece.sections.dim;
    json basis = json::array();
    text << "dim A_" << m.str() << " = " << piece.sections.dim << "\nbasis:";
    for (auto& b : piece.sections.basis) {
      basis.push_back(ratfunc_json(b));
      text << " " << b.str();
    }
    out["basis"] = basis;
    text << "\n";
  }
  emit(opt, out, text.str());
  return 0;
}

int cmd_roots(const Options& opt) {
  ProblemFile pf = load(opt);
  long bound = pf.bound ? *pf.bound : opt.bound;
  auto roots = enumerate_roots(pf.divisor.tail(), bound);
  json out = json::array();
  std::ostringstream text;
  text << roots.size() << " roots within sup-norm " << bound << "\n";
  for (auto& r : roots) {
    json e;
    e["e"] = latvec_json(r.e);
    e["distinguished_ray"] = latvec_json(r.distinguished_ray);
    out.push_back(e);
    text << "  e = " << r.e.str() << ", ray " << r.distinguished_ray.str() << "\n";
  }
  emit(opt, out, text.str());
  return 0;
}

int cmd_vertical(const Options& opt) {
  ProblemFile pf = load(opt);
  auto rays = vertical_admissible_rays(pf.divisor);
  json out;
  json rj = json::array();
  std::ostringstream text;
  for (auto& r : rays) {
    json e;
    e["ray"] = latvec_json(r.ray);
    e["admissible"] = r.admissible;
    e["reason"] = r.reason;
    rj.push_back(e);
    text << "ray " << r.ray.str() << ": " << (r.admissible ? "admissible" : "not admissible") << " ("
         << r.reason << ")\n";
  }
  out["rays"] = rj;
  json specs = json::array();
  long bound = pf.bound ? *pf.bound : opt.bound;
  for (auto& root : enumerate_roots(pf.divisor.tail(), bound)) {
    auto built = build_vertical(pf.divisor, root);
    for (auto& spec : built.specs) {
      json s;
      s["e"] = latvec_json(spec.root.e);
      s["phi"] = ratfunc_json(spec.phi);
      specs.push_back(s);
      text << "spec: e = " << spec.root.e.str() << ", phi = " << spec.phi.str() << "\n";
    }
  }
  out["specs"] = specs;
  emit(opt, out, text.str());
  return 0;
}

json data_json(const HorizontalData& d) {
  json j;
  j["z0"] = point_json(d.z0);
  if (d.zinf) j["zinf"] = point_json(*d.zinf);
  j["v"] = qvec_json(d.v);
  j["d"] = d.d;
  j["d_prime"] = d.d_prime;
  j["k"] = d.k;
  j["tau"] = cone_json(d.tau);
  j["tau_hat"] = cone_json(d.tau_hat);
  j["s1"] = d.s1;
  j["accepted_s"] = d.accepted_s;
  j["root_hat"] = latvec_json(d.root_hat.e);
  j["root_hat_ray"] = latvec_json(d.root_hat.distinguished_ray);
  j["verification_bound"] = d.verification_bound;
  j["rank1_exact"] = d.rank1_exact;
  return j;
}

int cmd_horizontal(const Options& opt) {
  ProblemFile pf = load(opt);
  LatVec e = !opt.e_str.empty() ? parse_csv_vec(opt.e_str) : pf.e.value();
  Cone omega = !opt.omega_str.empty() ? parse_omega(opt.omega_str, pf.rank)
                                      : (pf.omega ? *pf.omega : dual_cone(pf.divisor.tail()));
  std::vector<unsigned long> s_list = pf.s_list;
  if (!opt.s_list_str.empty()) {
    s_list.clear();
    for (auto& c : parse_csv_vec(opt.s_list_str).c) s_list.push_back(c.get_ui());
  }
  if (s_list.empty()) s_list = {0, 1, 2, 3, 4, 5, 6, 7, 8};
  auto out = check_horizontal(pf.divisor, e, omega, s_list, pf.bound ? *pf.bound : 0);
  json j;
  j["accepted"] = out.accepted;
  std::ostringstream text;
  if (out.accepted) {
    j["certificate"] = data_json(*out.data);
    text << "accepted: s1 = " << out.data->s1 << ", v = " << out.data->v.str() << ", d = " << out.data->d
         << ", root " << out.data->root_hat.e.str() << " of tau_hat{";
    for (size_t i = 0; i < out.data->tau_hat.rays().size(); ++i)
      text << (i ? ", " : "") << out.data->tau_hat.rays()[i].str();
    text << "}\n";
    text << (out.data->rank1_exact ? "verification: exact (rank one)\n"
                                   : "verification: bounded, sup-norm " +
                                         std::to_string(out.data->verification_bound) + "\n");
  } else {
    j["rejected_at"] = out.rejected_at;
    j["reason"] = out.reason;
    if (out.witness_m) j["witness_m"] = latvec_json(*out.witness_m);
    if (out.data) j["data"] = data_json(*out.data);
    text << "rejected at " << out.rejected_at << ": " << out.reason;
    if (out.witness_m) text << ", witness m = " << out.witness_m->str();
    text << "\n";
  }
  emit(opt, j, text.str());
  return out.accepted ? 0 : 1;
}

int cmd_apply(const Options& opt) {
  ProblemFile pf = load(opt);
  if (!pf.lfihd) throw std::invalid_argument("problem file carries no lfihd spec");
  LfihdSpec spec = parse_lfihd(*pf.lfihd, pf);
  if (!pf.element) throw std::invalid_argument("problem file carries no element");
  MembershipContext ctx{&pf.divisor, nullptr};
  ExpSeries s = apply_spec(spec, *pf.element, ctx, opt.max_i > 0 ? opt.max_i : -1);
  json j = series_json(s);
  std::string var = opt.alpha ? "a" : "x";
  emit(opt, j, "e^{" + var + " d}(" + pf.element->str() + ") = " + s.str(var) + "\n");
  bool all_member = s.complete;
  for (size_t i = 0; i < s.c.size() && all_member; ++i)
    if (i < s.member.size() && !s.member[i]) all_member = false;
  return all_member ? 0 : 1;
}

int cmd_verify(const Options& opt) {
  ProblemFile pf = load(opt);
  if (!pf.lfihd) throw std::invalid_argument("problem file carries no lfihd spec");
  LfihdSpec spec = parse_lfihd(*pf.lfihd, pf);
  MembershipContext ctx{&pf.divisor, nullptr};
  std::vector<GradedElement> samples;
  if (pf.element) samples.push_back(*pf.element);
  long bound = pf.bound ? *pf.bound : 2;
  for (auto& m : hilbert_points(dual_cone(pf.divisor.tail()), bound)) {
    auto piece = pf.divisor.graded_piece(m);
    if (piece.sections.curve == CurveKind::Affine)
      samples.push_back(GradedElement::monomial(pf.rank, pf.field, m, piece.sections.generator));
    else
      for (auto& b : piece.sections.basis)
        samples.push_back(GradedElement::monomial(pf.rank, pf.field, m, b));
  }
  AxiomReport rep = verify_axioms(spec, ctx, samples, opt.max_i);
  json j;
  j["ok"] = rep.ok;
  j["checks"] = rep.checks;
  j["violations"] = rep.violations;
  std::ostringstream text;
  text << (rep.ok ? "all axioms hold" : "violations found") << " (" << rep.checks << " checks, "
       << samples.size() << " samples, max_i " << opt.max_i << ")\n";
  for (auto& v : rep.violations) text << "  " << v << "\n";
  emit(opt, j, text.str());
  return rep.ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"polyhedral divisors and normalized additive group actions"};
  app.require_subcommand(1);
  app.fallthrough();
  Options opt;
  app.add_option("--file", opt.file, "problem file (JSON)")->required();
  app.add_flag("--json", opt.as_json, "emit machine-readable JSON");
  app.add_flag("--alpha", opt.alpha, "render the exponential in a formal alpha");
  app.add_option("--bound", opt.bound, "box bound for enumerations");
  app.add_option("--max-i", opt.max_i, "verify/apply up to this series index");
  app.add_option("--m", opt.m_str, "lattice degree, comma separated");
  app.add_option("--e", opt.e_str, "degree vector e, comma separated");
  app.add_option("--omega", opt.omega_str, "cone rays, semicolon separated");
  app.add_option("--s-list", opt.s_list_str, "Frobenius exponents, comma separated");
  app.add_option("--lambda", opt.lambda_str, "coefficients for the built derivation");

  auto* props = app.add_subcommand("props", "properness, degree and quasifan");
  auto* eval = app.add_subcommand("eval", "evaluate D(m)");
  auto* piece = app.add_subcommand("piece", "graded piece basis at m");
  auto* roots = app.add_subcommand("roots", "Demazure roots of the tail cone");
  auto* vertical = app.add_subcommand("vertical", "admissible rays and vertical actions");
  auto* horizontal = app.add_subcommand("horizontal", "horizontal existence certificate");
  auto* apply = app.add_subcommand("apply", "apply the file's lfihd spec to the file's element");
  auto* verify = app.add_subcommand("verify", "check the lfihd axioms on sampled elements");

  CLI11_PARSE(app, argc, argv);
  try {
    if (props->parsed()) return cmd_props(opt);
    if (eval->parsed()) return cmd_eval(opt);
    if (piece->parsed()) return cmd_piece(opt);
    if (roots->parsed()) return cmd_roots(opt);
    if (vertical->parsed()) return cmd_vertical(opt);
    if (horizontal->parsed()) return cmd_horizontal(opt);
    if (apply->parsed()) return cmd_apply(opt);
    if (verify->parsed()) return cmd_verify(opt);
  } catch (const std::exception& ex) {
    std::cerr << "error: " << ex.what() << "\n";
    return 2;
  }
  return 2;
}
