#include "textio.hpp"

#include <cstdlib>
#include <sstream>

#include "errors.hpp"

namespace gor {

namespace {

struct Line {
  int number = 0;
  std::vector<std::string> tokens;
};

[[noreturn]] void fail(int line, const std::string& msg) {
  throw ParseError("line " + std::to_string(line) + ": " + msg);
}

std::vector<Line> tokenize(const std::string& text) {
  std::vector<Line> lines;
  std::istringstream in(text);
  std::string raw;
  int number = 0;
  while (std::getline(in, raw)) {
    ++number;
    if (auto hash = raw.find('#'); hash != std::string::npos) raw.erase(hash);
    // let ';' separate rows even when glued to an entry
    std::string spaced;
    for (char ch : raw) {
      if (ch == ';') spaced += " ; ";
      else spaced += ch;
    }
    std::istringstream ls(spaced);
    Line line;
    line.number = number;
    std::string tok;
    while (ls >> tok) line.tokens.push_back(tok);
    if (!line.tokens.empty()) lines.push_back(std::move(line));
  }
  return lines;
}

long long parse_int(const std::string& tok, int line) {
  std::size_t pos = 0;
  long long value = 0;
  try {
    value = std::stoll(tok, &pos);
  } catch (const std::exception&) {
    fail(line, "expected an integer, got '" + tok + "'");
  }
  if (pos != tok.size()) fail(line, "expected an integer, got '" + tok + "'");
  return value;
}

int parse_count(const std::string& tok, int line, const char* what) {
  long long v = parse_int(tok, line);
  if (v < 0 || v > 1000000) fail(line, std::string(what) + " out of range: " + tok);
  return int(v);
}

}  // namespace

AlgebraPtr parse_algebra_text(const std::string& text, int prime_override) {
  std::vector<Line> lines = tokenize(text);
  std::size_t at = 0;
  int prime = prime_override > 0 ? prime_override : 0;
  int field_line = 0;

  if (at < lines.size() && lines[at].tokens[0] == "field") {
    const Line& l = lines[at];
    if (l.tokens.size() != 2 || l.tokens[1].rfind("p=", 0) != 0)
      fail(l.number, "field line must read 'field p=<prime>'");
    int file_prime = parse_count(l.tokens[1].substr(2), l.number, "prime");
    if (prime_override <= 0) prime = file_prime;
    field_line = l.number;
    ++at;
  }
  if (prime <= 0) {
    throw ParseError("no field line in the algebra file and no prime given");
  }
  Field field(2);
  try {
    field = Field(std::uint32_t(prime));
  } catch (const ParseError& e) {
    if (field_line > 0 && prime_override <= 0) fail(field_line, e.what());
    throw;
  }

  if (at < lines.size() && lines[at].tokens[0] == "nakayama") {
    const Line& l = lines[at];
    if (l.tokens.size() != 3 || l.tokens[1] != "cyclic")
      fail(l.number, "shortcut must read 'nakayama cyclic <n>'");
    int n = parse_count(l.tokens[2], l.number, "vertex count");
    if (at + 1 < lines.size())
      fail(lines[at + 1].number, "unexpected content after the nakayama shortcut");
    if (n < 2) fail(l.number, "cyclic Nakayama algebras need at least 2 vertices");
    return cyclic_nakayama(n, field);
  }

  if (at >= lines.size() || lines[at].tokens[0] != "vertices") {
    int where = at < lines.size() ? lines[at].number : 0;
    fail(where, "expected a 'vertices' line");
  }
  if (lines[at].tokens.size() != 2) fail(lines[at].number, "vertices takes one count");
  Quiver q;
  q.vertex_count = parse_count(lines[at].tokens[1], lines[at].number, "vertex count");
  if (q.vertex_count < 1) fail(lines[at].number, "at least one vertex required");
  ++at;

  while (at < lines.size() && lines[at].tokens[0] == "arrow") {
    const Line& l = lines[at];
    if (l.tokens.size() != 4) fail(l.number, "arrow lines read 'arrow <name> <src> <tgt>'");
    Arrow ar;
    ar.name = l.tokens[1];
    int src = parse_count(l.tokens[2], l.number, "vertex");
    int tgt = parse_count(l.tokens[3], l.number, "vertex");
    if (src < 1 || src > q.vertex_count || tgt < 1 || tgt > q.vertex_count)
      fail(l.number, "arrow endpoint outside 1.." + std::to_string(q.vertex_count));
    ar.source = src - 1;
    ar.target = tgt - 1;
    for (const Arrow& seen : q.arrows)
      if (seen.name == ar.name) fail(l.number, "duplicate arrow name '" + ar.name + "'");
    q.arrows.push_back(ar);
    ++at;
  }

  std::vector<std::vector<int>> relations;
  while (at < lines.size() && lines[at].tokens[0] == "relation") {
    const Line& l = lines[at];
    if (l.tokens.size() < 3) fail(l.number, "relations need at least two arrows");
    std::vector<int> rel;
    for (std::size_t k = 1; k < l.tokens.size(); ++k) {
      bool found = false;
      for (std::size_t i = 0; i < q.arrows.size(); ++i) {
        if (q.arrows[i].name == l.tokens[k]) {
          rel.push_back(int(i));
          found = true;
          break;
        }
      }
      if (!found) fail(l.number, "unknown arrow '" + l.tokens[k] + "'");
    }
    for (std::size_t k = 0; k + 1 < rel.size(); ++k) {
      if (q.arrows[rel[k]].target != q.arrows[rel[k + 1]].source)
        fail(l.number, "relation is not composable at '" + l.tokens[k + 1] + " " +
                           l.tokens[k + 2] + "'");
    }
    relations.push_back(std::move(rel));
    ++at;
  }

  if (at < lines.size())
    fail(lines[at].number, "unexpected line '" + lines[at].tokens[0] + "'");
  return build_monomial_algebra(field, std::move(q), std::move(relations));
}

NamedModule parse_module_text(const std::string& text, const AlgebraPtr& a) {
  std::vector<Line> lines = tokenize(text);
  if (lines.empty()) throw ParseError("empty module description");
  int nv = a->vertex_count();

  const Line& head = lines[0];
  if (head.tokens[0] == "simple" || head.tokens[0] == "proj" ||
      head.tokens[0] == "inj") {
    if (head.tokens.size() != 2) fail(head.number, "builtin takes one vertex index");
    int i = parse_count(head.tokens[1], head.number, "vertex");
    if (i < 1 || i > nv)
      fail(head.number, "vertex outside 1.." + std::to_string(nv));
    if (lines.size() > 1) fail(lines[1].number, "unexpected content after a builtin");
    NamedModule nm;
    nm.name = head.tokens[0] + "_" + std::to_string(i);
    if (head.tokens[0] == "simple") nm.rep = simple(a, i - 1);
    else if (head.tokens[0] == "proj") nm.rep = indecomposable_projective(a, i - 1);
    else nm.rep = indecomposable_injective(a, i - 1);
    return nm;
  }

  if (head.tokens[0] != "module" || head.tokens.size() != 2)
    fail(head.number, "module files start with 'module <name>'");
  NamedModule nm;
  nm.name = head.tokens[1];

  if (lines.size() < 2 || lines[1].tokens[0] != "dim")
    fail(head.number, "expected a 'dim' line after the module header");
  const Line& dl = lines[1];
  if (int(dl.tokens.size()) != nv + 1)
    fail(dl.number, "dim needs exactly " + std::to_string(nv) + " entries");
  std::vector<int> dims;
  for (int v = 0; v < nv; ++v)
    dims.push_back(parse_count(dl.tokens[v + 1], dl.number, "dimension"));

  const Field& f = a->field();
  std::vector<Matrix> maps;
  std::vector<int> map_line(a->arrow_count(), 0);
  for (int k = 0; k < a->arrow_count(); ++k) {
    const Arrow& ar = a->quiver().arrows[k];
    maps.emplace_back(f, dims[ar.target], dims[ar.source]);
  }
  for (std::size_t at = 2; at < lines.size(); ++at) {
    const Line& l = lines[at];
    if (l.tokens[0] != "map") fail(l.number, "unexpected line '" + l.tokens[0] + "'");
    if (l.tokens.size() < 3) fail(l.number, "map lines read 'map <arrow> <entries>'");
    auto idx = a->arrow_index(l.tokens[1]);
    if (!idx) fail(l.number, "unknown arrow '" + l.tokens[1] + "'");
    if (map_line[*idx] != 0)
      fail(l.number, "second map for arrow '" + l.tokens[1] + "'");
    map_line[*idx] = l.number;
    const Arrow& ar = a->quiver().arrows[*idx];
    int rows = dims[ar.target];
    int cols = dims[ar.source];
    if (l.tokens.size() == 3 && l.tokens[2] == "zero") continue;
    if (rows == 0 || cols == 0)
      fail(l.number, "arrow '" + ar.name + "' has an empty shape here; write "
                     "'zero' or omit the line");
    std::vector<std::vector<long long>> entries(1);
    for (std::size_t k = 2; k < l.tokens.size(); ++k) {
      if (l.tokens[k] == ";") entries.emplace_back();
      else entries.back().push_back(parse_int(l.tokens[k], l.number));
    }
    if (int(entries.size()) != rows)
      fail(l.number, "expected " + std::to_string(rows) + " rows for arrow '" +
                         ar.name + "', got " + std::to_string(entries.size()));
    Matrix m(f, rows, cols);
    for (int i = 0; i < rows; ++i) {
      if (int(entries[i].size()) != cols)
        fail(l.number, "row " + std::to_string(i + 1) + " for arrow '" + ar.name +
                           "' needs " + std::to_string(cols) + " entries");
      for (int j = 0; j < cols; ++j) m(i, j) = f.reduce(entries[i][j]);
    }
    maps[*idx] = std::move(m);
  }

  Representation rep;
  rep.algebra = a;
  rep.dims = std::move(dims);
  rep.arrow_maps = std::move(maps);
  if (auto bad = check_module(rep)) {
    int line = head.number;
    if (!a->relations()[bad->relation_index].empty()) {
      int first_arrow = a->relations()[bad->relation_index].front();
      if (map_line[first_arrow] != 0) line = map_line[first_arrow];
    }
    fail(line, "relation '" + bad->relation_name + "' has a nonzero composite");
  }
  nm.rep = std::move(rep);
  return nm;
}

std::string write_algebra_file(const AlgebraPtr& a) {
  std::ostringstream out;
  out << "field p=" << a->field().modulus() << "\n";
  out << "vertices " << a->vertex_count() << "\n";
  for (const Arrow& ar : a->quiver().arrows)
    out << "arrow " << ar.name << " " << ar.source + 1 << " " << ar.target + 1
        << "\n";
  for (const auto& rel : a->relations()) {
    out << "relation";
    for (int k : rel) out << " " << a->quiver().arrows[k].name;
    out << "\n";
  }
  return out.str();
}

std::string write_module_file(const std::string& name, const Representation& m) {
  std::ostringstream out;
  out << "module " << name << "\n";
  out << "dim";
  for (int d : m.dims) out << " " << d;
  out << "\n";
  const AlgebraPtr& a = m.algebra;
  for (int k = 0; k < a->arrow_count(); ++k) {
    const Matrix& mat = m.arrow_maps[k];
    if (mat.rows() == 0 || mat.cols() == 0 || mat.is_zero()) continue;
    out << "map " << a->quiver().arrows[k].name;
    for (int i = 0; i < int(mat.rows()); ++i) {
      if (i > 0) out << " ;";
      for (int j = 0; j < int(mat.cols()); ++j) out << " " << mat(i, j);
    }
    out << "\n";
  }
  return out.str();
}

}  // namespace gor
