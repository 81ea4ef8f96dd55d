#include "gorenstein.h"

#include <cstring>
#include <string>

#include "errors.hpp"
#include "report.hpp"

struct gor_algebra {
  gor::AlgebraPtr a;
};

struct gor_module {
  gor::NamedModule m;
};

namespace {

char* dup_string(const std::string& s) {
  char* out = new char[s.size() + 1];
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

void set_out(char** out, const std::string& s) {
  if (out) *out = dup_string(s);
}

/* One funnel for the exception-to-status mapping; fn returns a RunResult
 * whose status 1 marks decided-but-failing runs. */
template <typename Fn>
gor_status run_command(char** out, Fn&& fn) {
  if (out) *out = nullptr;
  try {
    gor::RunResult r = fn();
    set_out(out, r.text);
    return r.status == 0 ? GOR_OK : GOR_ERR_COMPUTE;
  } catch (const gor::ParseError& e) {
    set_out(out, std::string(e.what()) + "\n");
    return GOR_ERR_PARSE;
  } catch (const gor::ComputeError& e) {
    set_out(out, std::string(e.what()) + "\n");
    return GOR_ERR_COMPUTE;
  } catch (const gor::InternalError& e) {
    set_out(out, std::string(e.what()) + "\n");
    return GOR_ERR_INTERNAL;
  } catch (const std::exception& e) {
    set_out(out, std::string(e.what()) + "\n");
    return GOR_ERR_INTERNAL;
  }
}

gor::RunOptions to_run_options(const gor_options* opt) {
  gor::RunOptions o;
  if (!opt) return o;
  o.seed = opt->seed;
  o.n = opt->n;
  o.degree_from = opt->degree_from;
  o.degree_to = opt->degree_to;
  o.horizon = opt->horizon;
  o.json = opt->json != 0;
  if (opt->flavor) o.flavor = opt->flavor;
  return o;
}

}  // namespace

extern "C" {

const char* gor_version(void) { return "1.0.0"; }

void gor_string_free(char* s) { delete[] s; }

gor_status gor_algebra_parse(const char* text, int prime_override,
                             gor_algebra** out, char** err) {
  if (err) *err = nullptr;
  if (!text || !out) {
    set_out(err, "null argument\n");
    return GOR_ERR_PARSE;
  }
  *out = nullptr;
  try {
    gor::AlgebraPtr a = gor::parse_algebra_text(text, prime_override);
    *out = new gor_algebra{std::move(a)};
    return GOR_OK;
  } catch (const gor::ParseError& e) {
    set_out(err, std::string(e.what()) + "\n");
    return GOR_ERR_PARSE;
  } catch (const std::exception& e) {
    set_out(err, std::string(e.what()) + "\n");
    return GOR_ERR_INTERNAL;
  }
}

gor_status gor_algebra_opposite(const gor_algebra* a, gor_algebra** out,
                                char** err) {
  if (err) *err = nullptr;
  if (!a || !out) {
    set_out(err, "null argument\n");
    return GOR_ERR_PARSE;
  }
  *out = nullptr;
  try {
    *out = new gor_algebra{gor::opposite(a->a)};
    return GOR_OK;
  } catch (const std::exception& e) {
    set_out(err, std::string(e.what()) + "\n");
    return GOR_ERR_INTERNAL;
  }
}

void gor_algebra_free(gor_algebra* a) { delete a; }

int gor_algebra_dimension(const gor_algebra* a) {
  return a ? a->a->dimension() : -1;
}

int gor_algebra_vertex_count(const gor_algebra* a) {
  return a ? a->a->vertex_count() : -1;
}

int gor_algebra_prime(const gor_algebra* a) {
  return a ? int(a->a->field().modulus()) : -1;
}

int gor_algebra_self_injective(const gor_algebra* a) {
  return a ? (gor::is_self_injective(a->a) ? 1 : 0) : -1;
}

gor_status gor_module_parse(const gor_algebra* a, const char* text,
                            gor_module** out, char** err) {
  if (err) *err = nullptr;
  if (!a || !text || !out) {
    set_out(err, "null argument\n");
    return GOR_ERR_PARSE;
  }
  *out = nullptr;
  try {
    gor::NamedModule m = gor::parse_module_text(text, a->a);
    *out = new gor_module{std::move(m)};
    return GOR_OK;
  } catch (const gor::ParseError& e) {
    set_out(err, std::string(e.what()) + "\n");
    return GOR_ERR_PARSE;
  } catch (const std::exception& e) {
    set_out(err, std::string(e.what()) + "\n");
    return GOR_ERR_INTERNAL;
  }
}

void gor_module_free(gor_module* m) { delete m; }

int gor_module_total_dim(const gor_module* m) {
  return m ? m->m.rep.total_dim() : -1;
}

gor_status gor_module_print(const gor_module* m, char** out) {
  return run_command(out, [&]() -> gor::RunResult {
    if (!m) throw gor::ParseError("null module");
    return {gor::write_module_file(m->m.name, m->m.rep), 0};
  });
}

gor_options gor_default_options(void) {
  gor_options o;
  o.n = 1;
  o.degree_from = 1;
  o.degree_to = 0;
  o.horizon = 0;
  o.seed = 0xC0FFEEULL;
  o.json = 0;
  o.flavor = "projective";
  return o;
}

gor_status gor_cmd_resolve(const gor_module* m, const gor_options* opt,
                           char** out) {
  return run_command(out, [&] {
    if (!m) throw gor::ParseError("null module");
    return gor::run_resolve(m->m, to_run_options(opt));
  });
}

gor_status gor_cmd_ext(const gor_module* m, const gor_module* other,
                       const gor_options* opt, char** out) {
  return run_command(out, [&] {
    if (!m) throw gor::ParseError("null module");
    return gor::run_ext(m->m, other ? other->m : m->m, to_run_options(opt));
  });
}

gor_status gor_cmd_sg(const gor_module* m, const gor_options* opt, char** out) {
  return run_command(out, [&] {
    if (!m) throw gor::ParseError("null module");
    return gor::run_sg(m->m, to_run_options(opt));
  });
}

gor_status gor_cmd_period_set(const gor_module* m, const gor_options* opt,
                              char** out) {
  return run_command(out, [&] {
    if (!m) throw gor::ParseError("null module");
    return gor::run_period_set(m->m, to_run_options(opt));
  });
}

gor_status gor_cmd_strip(const gor_module* m, const gor_options* opt,
                         char** out) {
  return run_command(out, [&] {
    if (!m) throw gor::ParseError("null module");
    return gor::run_strip(m->m, to_run_options(opt));
  });
}

gor_status gor_cmd_dual(const gor_module* m, const gor_options* opt,
                        char** out) {
  return run_command(out, [&] {
    if (!m) throw gor::ParseError("null module");
    return gor::run_dual(m->m, to_run_options(opt));
  });
}

gor_status gor_cmd_complexity(const gor_module* m, const gor_options* opt,
                              char** out) {
  return run_command(out, [&] {
    if (!m) throw gor::ParseError("null module");
    return gor::run_complexity(m->m, to_run_options(opt));
  });
}

gor_status gor_cmd_verify(const gor_algebra* a, const gor_options* opt,
                          char** out) {
  return run_command(out, [&] {
    if (!a) throw gor::ParseError("null algebra");
    return gor::run_verify(a->a, to_run_options(opt));
  });
}

}  // extern "C"
