/* Line-based file formats for algebras and modules.
 *
 * Algebra files, sections in this order ('#' starts a comment):
 *   field p=<prime>
 *   vertices <n>
 *   arrow <name> <src> <tgt>          (vertices are 1-based in files)
 *   relation <name1> <name2> ...      (traversal order, length >= 2)
 * or the shortcut
 *   nakayama cyclic <n>
 * optionally preceded by a field line.  A positive prime_override replaces
 * the field line (and stands in for a missing one).
 *
 * Module files:
 *   module <name>
 *   dim d1 d2 ... dk
 *   map <arrow> <rows, ';' separated, entries space-separated>
 *   map <arrow> zero
 * with omitted maps zero; or a builtin one-liner `simple <i>`, `proj <i>`,
 * `inj <i>`.  Parsing runs the relation check and rejects violations. */
#pragma once
#include <string>

#include "rep.hpp"

namespace gor {

AlgebraPtr parse_algebra_text(const std::string& text, int prime_override = 0);

struct NamedModule {
  std::string name;
  Representation rep;
};
NamedModule parse_module_text(const std::string& text, const AlgebraPtr& a);

// Canonical writers; write_module_file output re-parses to an equal module.
std::string write_algebra_file(const AlgebraPtr& a);
std::string write_module_file(const std::string& name, const Representation& m);

}  // namespace gor
