/* Command execution and rendering.  Every command yields both an aligned
 * table and stable-keyed JSON; the seed appears in every report header and
 * output is deterministic for a fixed request + seed. */
#pragma once
#include <string>

#include "sg.hpp"
#include "textio.hpp"

namespace gor {

struct RunOptions {
  std::uint64_t seed = kDefaultSeed;
  int n = 1;
  int degree_from = 1;
  int degree_to = 0;  // 0: command default
  int horizon = 0;    // 0: command default
  std::string flavor = "projective";
  bool json = false;
};

/* status 0: computed; 1: computation-level failure (undecided verdict,
 * failed verification) with the rendered report still in text.  Parse and
 * internal errors propagate as exceptions. */
struct RunResult {
  std::string text;
  int status = 0;
};

RunResult run_resolve(const NamedModule& m, const RunOptions& o);
RunResult run_ext(const NamedModule& m, const NamedModule& n, const RunOptions& o);
RunResult run_sg(const NamedModule& m, const RunOptions& o);
RunResult run_period_set(const NamedModule& m, const RunOptions& o);
RunResult run_strip(const NamedModule& m, const RunOptions& o);
RunResult run_dual(const NamedModule& m, const RunOptions& o);
RunResult run_complexity(const NamedModule& m, const RunOptions& o);
RunResult run_verify(const AlgebraPtr& a, const RunOptions& o);

}  // namespace gor
