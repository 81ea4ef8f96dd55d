#include "report.hpp"

#include <algorithm>
#include <sstream>

#include <json.hpp>

#include "errors.hpp"

namespace gor {

namespace {

using nlohmann::json;  // plain json: object keys serialize alphabetically

json algebra_summary(const AlgebraPtr& a) {
  return json{{"dimension", a->dimension()},
              {"prime", a->field().modulus()},
              {"self_injective", is_self_injective(a)},
              {"vertices", a->vertex_count()}};
}

json module_summary(const NamedModule& m) {
  return json{{"dims", m.rep.dims},
              {"name", m.name},
              {"total_dim", m.rep.total_dim()}};
}

std::string algebra_phrase(const AlgebraPtr& a) {
  std::ostringstream out;
  out << "GF(" << a->field().modulus() << "), " << a->vertex_count()
      << " vertices, dimension " << a->dimension();
  return out.str();
}

std::string header(std::uint64_t seed) {
  return "# seed " + std::to_string(seed) + "\n";
}

std::string render_json(const json& j) { return j.dump(2) + "\n"; }

// ascending 1-based labels, e.g. "P(1) + P(1) + P(3)"
std::string proj_label(const std::vector<int>& vertices) {
  if (vertices.empty()) return "0";
  std::ostringstream out;
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    if (i > 0) out << " + ";
    out << "P(" << vertices[i] + 1 << ")";
  }
  return out.str();
}

std::vector<int> one_based(const std::vector<int>& vs) {
  std::vector<int> out;
  for (int v : vs) out.push_back(v + 1);
  return out;
}

std::string join_ints(const std::vector<int>& v) {
  std::ostringstream out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i > 0) out << " ";
    out << v[i];
  }
  return out.str();
}

json sg_verdict_json(const SGVerdict& v) {
  json j{{"assumptions", v.assumptions},
         {"kind", sg_kind_name(v.kind)},
         {"n", v.n},
         {"outcome", sg_outcome_name(v.outcome)},
         {"witness_present", v.witness.has_value()}};
  if (v.failed_ext_degree) j["failed_ext_degree"] = *v.failed_ext_degree;
  return j;
}

void sg_verdict_table(std::ostringstream& out, const SGVerdict& v) {
  out << "n = " << v.n << ": " << sg_outcome_name(v.outcome) << "\n";
  out << "witness: " << (v.witness ? "present" : "absent") << "\n";
  if (v.failed_ext_degree)
    out << "first nonvanishing Ext against the regular module: degree "
        << *v.failed_ext_degree << "\n";
  if (!v.assumptions.empty()) {
    out << "assumptions:\n";
    for (const auto& s : v.assumptions) out << "  - " << s << "\n";
  }
}

}  // namespace

RunResult run_resolve(const NamedModule& m, const RunOptions& o) {
  const AlgebraPtr& a = m.rep.algebra;
  int horizon = o.horizon > 0 ? o.horizon : 3 * a->dimension();
  Resolution res(m.rep);
  res.extend(horizon);
  json terms = json::array();
  for (int t = 0; t < res.term_count() && t <= horizon; ++t) {
    terms.push_back(json{{"degree", t},
                         {"total_dim", res.term(t).proj.total_dim()},
                         {"vertices", one_based(res.term(t).vertices)}});
  }
  json j{{"algebra", algebra_summary(a)},
         {"command", "resolve"},
         {"dims_sequence", res.dims_sequence(horizon)},
         {"finite", res.finite()},
         {"horizon", horizon},
         {"module", module_summary(m)},
         {"seed", o.seed},
         {"terms", terms}};
  if (res.finite()) j["projective_dimension"] = res.projective_dimension();
  if (o.json) return {render_json(j), 0};

  std::ostringstream out;
  out << header(o.seed);
  out << "resolve: module " << m.name << " over " << algebra_phrase(a) << "\n";
  out << "horizon " << horizon << ", minimal projective resolution\n";
  for (int t = 0; t < res.term_count() && t <= horizon; ++t)
    out << "  deg " << t << ": " << proj_label(res.term(t).vertices)
        << "  (total dim " << res.term(t).proj.total_dim() << ")\n";
  if (res.finite())
    out << "finite: projective dimension " << res.projective_dimension() << "\n";
  else
    out << "not finite within the horizon\n";
  out << "term dims: " << join_ints(res.dims_sequence(horizon)) << "\n";
  return {out.str(), 0};
}

RunResult run_ext(const NamedModule& m, const NamedModule& n, const RunOptions& o) {
  const AlgebraPtr& a = m.rep.algebra;
  int from = o.degree_from > 0 ? o.degree_from : 1;
  int to = o.degree_to > 0 ? o.degree_to : 3 * a->vertex_count();
  if (to < from) throw ComputeError("empty Ext degree range");
  Resolution res(m.rep);
  json dims = json::array();
  std::vector<int> values;
  for (int i = from; i <= to; ++i) {
    int d = ext_dim_on(res, n.rep, i);
    values.push_back(d);
    dims.push_back(json{{"degree", i}, {"dim", d}});
  }
  json j{{"algebra", algebra_summary(a)},
         {"command", "ext"},
         {"degree_from", from},
         {"degree_to", to},
         {"dims", dims},
         {"module", module_summary(m)},
         {"other_module", module_summary(n)},
         {"seed", o.seed}};
  if (o.json) return {render_json(j), 0};

  std::ostringstream out;
  out << header(o.seed);
  out << "ext: Ext(" << m.name << ", " << n.name << ") over "
      << algebra_phrase(a) << ", degrees " << from << ".." << to << "\n";
  for (int i = from; i <= to; ++i)
    out << "  deg " << i << ": " << values[std::size_t(i - from)] << "\n";
  return {out.str(), 0};
}

RunResult run_sg(const NamedModule& m, const RunOptions& o) {
  SGOptions sopt;
  sopt.seed = o.seed;
  SGVerdict v;
  if (o.flavor == "projective") v = is_n_sg_projective(m.rep, o.n, sopt);
  else if (o.flavor == "injective") v = is_n_sg_injective(m.rep, o.n, sopt);
  else if (o.flavor == "flat") v = is_n_sg_flat(m.rep, o.n, sopt);
  else throw ParseError("unknown sg flavor '" + o.flavor + "'");

  const AlgebraPtr& a = m.rep.algebra;
  json j = sg_verdict_json(v);
  j["algebra"] = algebra_summary(a);
  j["command"] = "sg";
  j["module"] = module_summary(m);
  j["seed"] = o.seed;
  int status = v.outcome == SGOutcome::unknown ? 1 : 0;
  if (o.json) return {render_json(j), status};

  std::ostringstream out;
  out << header(o.seed);
  out << "sg " << sg_kind_name(v.kind) << ": module " << m.name << " over "
      << algebra_phrase(a) << "\n";
  sg_verdict_table(out, v);
  return {out.str(), status};
}

RunResult run_period_set(const NamedModule& m, const RunOptions& o) {
  const AlgebraPtr& a = m.rep.algebra;
  int horizon = o.horizon > 0 ? o.horizon : 3 * a->vertex_count();
  SGOptions sopt;
  sopt.seed = o.seed;
  PeriodSet ps = sg_projective_period_set(m.rep, horizon, sopt);
  json verdicts = json::array();
  for (const auto& [n, v] : ps.verdicts)
    verdicts.push_back(json{{"n", n},
                            {"outcome", sg_outcome_name(v.outcome)},
                            {"witness_present", v.witness.has_value()}});
  json j{{"algebra", algebra_summary(a)},
         {"command", "period-set"},
         {"gcd_chains", ps.gcd_chains},
         {"horizon", ps.horizon},
         {"members", ps.members},
         {"module", module_summary(m)},
         {"seed", o.seed},
         {"verdicts", verdicts}};
  if (o.json) return {render_json(j), 0};

  std::ostringstream out;
  out << header(o.seed);
  out << "period-set: module " << m.name << " over " << algebra_phrase(a)
      << ", horizon " << ps.horizon << "\n";
  out << "certified members: "
      << (ps.members.empty() ? std::string("none") : join_ints(ps.members))
      << "\n";
  for (const auto& [n, v] : ps.verdicts)
    out << "  n = " << n << ": " << sg_outcome_name(v.outcome) << "\n";
  if (!ps.gcd_chains.empty()) {
    out << "gcd chains:\n";
    for (const auto& s : ps.gcd_chains) out << "  - " << s << "\n";
  }
  return {out.str(), 0};
}

RunResult run_strip(const NamedModule& m, const RunOptions& o) {
  const AlgebraPtr& a = m.rep.algebra;
  StripResult sr = strip_projective_summands(m.rep);
  std::vector<int> sorted_pv = sr.projective_vertices;
  std::sort(sorted_pv.begin(), sorted_pv.end());
  json j{{"algebra", algebra_summary(a)},
         {"command", "strip"},
         {"module", module_summary(m)},
         {"projective_part", json{{"dims", sr.projective_part.dims},
                                  {"total_dim", sr.projective_part.total_dim()}}},
         {"projective_vertices", one_based(sorted_pv)},
         {"seed", o.seed},
         {"stable_part", json{{"dims", sr.stable_part.dims},
                              {"total_dim", sr.stable_part.total_dim()}}}};
  if (o.json) return {render_json(j), 0};

  std::ostringstream out;
  out << header(o.seed);
  out << "strip: module " << m.name << " over " << algebra_phrase(a) << "\n";
  out << "stable part: dims " << join_ints(sr.stable_part.dims) << " (total "
      << sr.stable_part.total_dim() << ")\n";
  out << "projective summands: " << proj_label(sorted_pv) << "\n";
  return {out.str(), 0};
}

RunResult run_dual(const NamedModule& m, const RunOptions& o) {
  const AlgebraPtr& a = m.rep.algebra;
  AlgebraPtr op = opposite(a);
  Representation d = dual(m.rep, op);
  std::string name = m.name + "_dual";
  std::string file = write_module_file(name, d);
  json j{{"algebra", algebra_summary(a)},
         {"command", "dual"},
         {"module", module_summary(m)},
         {"module_file", file},
         {"name", name},
         {"opposite", algebra_summary(op)},
         {"seed", o.seed}};
  if (o.json) return {render_json(j), 0};

  // table output stays a valid module file: context rides in comments
  std::ostringstream out;
  out << header(o.seed);
  out << "# dual of " << m.name << " over the opposite algebra\n";
  out << "# opposite algebra:\n";
  std::istringstream alg(write_algebra_file(op));
  std::string line;
  while (std::getline(alg, line)) out << "#   " << line << "\n";
  out << file;
  return {out.str(), 0};
}

RunResult run_complexity(const NamedModule& m, const RunOptions& o) {
  const AlgebraPtr& a = m.rep.algebra;
  int horizon = o.horizon > 0 ? o.horizon : std::max(4, 3 * a->dimension());
  IsoOptions iopt;
  iopt.seed = o.seed;
  ComplexityEstimate e = complexity_estimate(m.rep, horizon, iopt);
  json j{{"algebra", algebra_summary(a)},
         {"certified", e.certified},
         {"classification", complexity_class_name(e.classification)},
         {"command", "complexity"},
         {"dims_sequence", e.dims_sequence},
         {"horizon", horizon},
         {"module", module_summary(m)},
         {"seed", o.seed}};
  if (e.classification == ComplexityClass::bounded_periodic) {
    j["period"] = e.period;
    j["period_from"] = e.period_from;
  }
  if (e.classification == ComplexityClass::growth)
    j["growth_exponent"] = e.growth_exponent;
  if (o.json) return {render_json(j), 0};

  std::ostringstream out;
  out << header(o.seed);
  out << "complexity: module " << m.name << " over " << algebra_phrase(a)
      << ", horizon " << horizon << "\n";
  out << "term dims: " << join_ints(e.dims_sequence) << "\n";
  out << "classification: " << complexity_class_name(e.classification)
      << (e.certified ? " (certified)" : "") << "\n";
  if (e.classification == ComplexityClass::bounded_periodic)
    out << "syzygy at degree " << e.period_from + e.period
        << " isomorphic to the one at degree " << e.period_from << "\n";
  if (e.classification == ComplexityClass::growth)
    out << "growth exponent estimate: " << e.growth_exponent << "\n";
  return {out.str(), 0};
}

RunResult run_verify(const AlgebraPtr& a, const RunOptions& o) {
  int horizon = o.horizon > 0 ? o.horizon : 3 * a->vertex_count();
  SGOptions sopt;
  sopt.seed = o.seed;
  SuiteReport rep = verify_theorem_suite(a, horizon, sopt);
  json checks = json::array();
  for (const auto& c : rep.checks)
    checks.push_back(json{{"applicable", c.applicable},
                          {"details", c.details},
                          {"name", c.name},
                          {"pass", c.pass}});
  json j{{"algebra", algebra_summary(a)},
         {"all_pass", rep.all_pass},
         {"checks", checks},
         {"command", "verify"},
         {"horizon", rep.horizon},
         {"seed", o.seed}};
  int status = rep.all_pass ? 0 : 1;
  if (o.json) return {render_json(j), status};

  std::ostringstream out;
  out << header(o.seed);
  out << "verify: algebra over " << algebra_phrase(a) << ", horizon "
      << rep.horizon << "\n";
  for (const auto& c : rep.checks) {
    const char* tag = !c.applicable ? "SKIP" : (c.pass ? "PASS" : "FAIL");
    out << "  [" << tag << "] " << c.name << ": " << c.details << "\n";
  }
  out << (rep.all_pass ? "all checks passed" : "checks FAILED") << "\n";
  return {out.str(), status};
}

}  // namespace gor
