/* Command-line front end.  Talks to the engine exclusively through the C API
 * in gorenstein.h; all rendering and mathematics live behind it.
 *
 * Exit codes: 0 success, 1 computation-level failure (undecided verdict,
 * failed verification, rejected precondition), 2 parse/usage error,
 * 3 internal invariant violation. */
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "gorenstein.h"

namespace {

struct Args {
  std::string algebra;
  std::vector<std::string> module;
  std::vector<std::string> rest;
  int n = 1;
  int degree_from = 1;
  int degree_to = 0;
  int horizon = 0;
  int prime = 0;
  std::string seed;
  std::string format = "table";
  std::string flavor = "projective";
};

bool looks_like_path(const std::string& s) {
  return s.find('/') != std::string::npos || s.ends_with(".mod") ||
         s.ends_with(".alg");
}

// A module spec is a file path or inline text (builtins like "simple 1").
std::string load_module_spec(const std::string& spec, bool& ok) {
  ok = true;
  std::ifstream in(spec);
  if (in.good()) {
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
  }
  if (looks_like_path(spec)) {
    ok = false;
    return "cannot read module file '" + spec + "'";
  }
  return spec;
}

int emit(gor_status st, char* out) {
  std::string text = out ? out : "";
  gor_string_free(out);
  if (st == GOR_OK || text.rfind("# seed", 0) == 0 || text.rfind("{", 0) == 0) {
    std::cout << text;
  } else {
    std::cerr << "error: " << text;
  }
  return int(st);
}

int fail_parse(const std::string& msg) {
  std::cerr << "error: " << msg << "\n";
  return int(GOR_ERR_PARSE);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"minimal projective resolutions, Ext groups, and "
               "n-strongly-Gorenstein detection for monomial bound-quiver "
               "algebras over GF(p)"};
  app.require_subcommand(1);

  Args args;
  auto add_common = [&](CLI::App* cmd, bool with_module) {
    cmd->add_option("--algebra", args.algebra, "algebra file")->required();
    cmd->add_option("--prime", args.prime,
                    "override the field line of the algebra file");
    cmd->add_option("--seed", args.seed, "RNG seed (decimal or 0x-hex)");
    cmd->add_option("--format", args.format, "output format")
        ->check(CLI::IsMember({"table", "json"}));
    if (with_module) {
      cmd->add_option("--module", args.module,
                      "module file or inline builtin (repeatable for ext)");
      cmd->add_option("spec", args.rest,
                      "inline module spec, e.g.: simple 1");
    }
  };

  CLI::App* c_resolve = app.add_subcommand("resolve", "minimal projective resolution");
  c_resolve->add_option("--horizon", args.horizon, "resolution length");
  add_common(c_resolve, true);

  CLI::App* c_ext = app.add_subcommand("ext", "Ext dimensions over a degree range");
  c_ext->add_option("--degree-from", args.degree_from, "first degree (>= 1)");
  c_ext->add_option("--degree-to", args.degree_to, "last degree");
  add_common(c_ext, true);

  CLI::App* c_sg = app.add_subcommand("sg", "n-strongly-Gorenstein verdict");
  c_sg->add_option("--n", args.n, "SG degree")->check(CLI::Range(1, 1000000));
  c_sg->add_option("--flavor", args.flavor, "projective, injective, or flat")
      ->check(CLI::IsMember({"projective", "injective", "flat"}));
  add_common(c_sg, true);

  CLI::App* c_period = app.add_subcommand("period-set", "certified SG degrees 1..horizon");
  c_period->add_option("--horizon", args.horizon, "largest degree to test");
  add_common(c_period, true);

  CLI::App* c_strip = app.add_subcommand("strip", "split off projective summands");
  add_common(c_strip, true);

  CLI::App* c_dual = app.add_subcommand("dual", "dual module over the opposite algebra");
  add_common(c_dual, true);

  CLI::App* c_complexity = app.add_subcommand("complexity", "resolution growth estimate");
  c_complexity->add_option("--horizon", args.horizon, "resolution length (>= 4)");
  add_common(c_complexity, true);

  CLI::App* c_verify = app.add_subcommand("verify", "run the theorem verification suite");
  c_verify->add_option("--horizon", args.horizon, "suite horizon");
  add_common(c_verify, false);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);
    app.exit(e);
    return int(GOR_ERR_PARSE);
  }

  gor_options opt = gor_default_options();
  opt.n = args.n;
  opt.degree_from = args.degree_from;
  opt.degree_to = args.degree_to;
  opt.horizon = args.horizon;
  opt.json = args.format == "json" ? 1 : 0;
  opt.flavor = args.flavor.c_str();
  std::string seed_text = args.seed;
  if (seed_text.empty()) {
    if (const char* env = std::getenv("GORENSTEIN_SEED")) seed_text = env;
  }
  if (!seed_text.empty()) {
    char* end = nullptr;
    unsigned long long v = std::strtoull(seed_text.c_str(), &end, 0);
    if (end == seed_text.c_str() || *end != '\0')
      return fail_parse("bad seed '" + seed_text + "'");
    opt.seed = v;
  }

  std::ifstream ain(args.algebra);
  if (!ain.good()) return fail_parse("cannot read algebra file '" + args.algebra + "'");
  std::ostringstream abuf;
  abuf << ain.rdbuf();

  gor_algebra* alg = nullptr;
  char* err = nullptr;
  gor_status st = gor_algebra_parse(abuf.str().c_str(), args.prime, &alg, &err);
  if (st != GOR_OK) {
    std::string msg = err ? err : "algebra parse failed\n";
    gor_string_free(err);
    std::cerr << "error: " << msg;
    return int(st);
  }

  char* out = nullptr;
  if (c_verify->parsed()) {
    st = gor_cmd_verify(alg, &opt, &out);
    gor_algebra_free(alg);
    return emit(st, out);
  }

  // module specs: --module values first, a positional spec fills the gaps
  std::string first_spec, second_spec;
  std::string positional;
  for (std::size_t i = 0; i < args.rest.size(); ++i) {
    if (i > 0) positional += " ";
    positional += args.rest[i];
  }
  if (args.module.size() > 2) {
    gor_algebra_free(alg);
    return fail_parse("at most two --module values");
  }
  if (args.module.size() == 2 && !positional.empty()) {
    gor_algebra_free(alg);
    return fail_parse("positional module spec conflicts with two --module values");
  }
  first_spec = !args.module.empty() ? args.module[0] : positional;
  if (first_spec.empty()) {
    gor_algebra_free(alg);
    return fail_parse("no module given; use --module or an inline spec");
  }
  if (args.module.size() == 2) second_spec = args.module[1];
  else if (!args.module.empty() && !positional.empty()) second_spec = positional;

  bool ok = true;
  std::string first_text = load_module_spec(first_spec, ok);
  if (!ok) {
    gor_algebra_free(alg);
    return fail_parse(first_text);
  }
  gor_module* m1 = nullptr;
  st = gor_module_parse(alg, first_text.c_str(), &m1, &err);
  if (st != GOR_OK) {
    std::string msg = err ? err : "module parse failed\n";
    gor_string_free(err);
    gor_algebra_free(alg);
    std::cerr << "error: " << msg;
    return int(st);
  }
  gor_module* m2 = nullptr;
  if (!second_spec.empty()) {
    std::string second_text = load_module_spec(second_spec, ok);
    if (!ok) {
      gor_module_free(m1);
      gor_algebra_free(alg);
      return fail_parse(second_text);
    }
    st = gor_module_parse(alg, second_text.c_str(), &m2, &err);
    if (st != GOR_OK) {
      std::string msg = err ? err : "module parse failed\n";
      gor_string_free(err);
      gor_module_free(m1);
      gor_algebra_free(alg);
      std::cerr << "error: " << msg;
      return int(st);
    }
  }

  if (c_resolve->parsed()) st = gor_cmd_resolve(m1, &opt, &out);
  else if (c_ext->parsed()) st = gor_cmd_ext(m1, m2, &opt, &out);
  else if (c_sg->parsed()) st = gor_cmd_sg(m1, &opt, &out);
  else if (c_period->parsed()) st = gor_cmd_period_set(m1, &opt, &out);
  else if (c_strip->parsed()) st = gor_cmd_strip(m1, &opt, &out);
  else if (c_dual->parsed()) st = gor_cmd_dual(m1, &opt, &out);
  else st = gor_cmd_complexity(m1, &opt, &out);

  gor_module_free(m2);
  gor_module_free(m1);
  gor_algebra_free(alg);
  return emit(st, out);
}
