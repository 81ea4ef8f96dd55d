#include "algebra.hpp"

#include <deque>
#include <set>
#include <string>

namespace gor {

std::optional<int> MonomialAlgebra::path_index(int source,
                                               const std::vector<int>& arrows) const {
  auto it = path_lookup_.find({source, arrows});
  if (it == path_lookup_.end()) return std::nullopt;
  return it->second;
}

std::optional<int> MonomialAlgebra::arrow_index(const std::string& name) const {
  for (std::size_t i = 0; i < quiver_.arrows.size(); ++i)
    if (quiver_.arrows[i].name == name) return int(i);
  return std::nullopt;
}

AlgebraPtr build_monomial_algebra(Field f, Quiver q,
                                  std::vector<std::vector<int>> relations,
                                  std::size_t path_cap) {
  if (q.vertex_count <= 0) throw ParseError("quiver needs at least one vertex");
  std::set<std::string> names;
  for (const auto& ar : q.arrows) {
    if (ar.source < 0 || ar.source >= q.vertex_count || ar.target < 0 ||
        ar.target >= q.vertex_count)
      throw ParseError("arrow " + ar.name + " has an endpoint out of range");
    if (!names.insert(ar.name).second)
      throw ParseError("duplicate arrow name " + ar.name);
  }
  for (const auto& rel : relations) {
    if (rel.size() < 2) throw ParseError("relation shorter than two arrows");
    for (std::size_t k = 0; k < rel.size(); ++k) {
      if (rel[k] < 0 || rel[k] >= int(q.arrows.size()))
        throw ParseError("relation refers to an unknown arrow");
      if (k + 1 < rel.size() &&
          q.arrows[rel[k]].target != q.arrows[rel[k + 1]].source)
        throw ParseError("relation is not a composable path");
    }
  }

  auto alg = std::shared_ptr<MonomialAlgebra>(new MonomialAlgebra());
  alg->field_ = f;
  alg->quiver_ = q;
  alg->relations_ = relations;

  // A candidate with a forbidden subword would have been rejected earlier
  // unless the forbidden subword ends at the freshly appended arrow, so only
  // suffixes need checking.
  auto suffix_hits_relation = [&](const std::vector<int>& word) {
    for (const auto& rel : relations) {
      if (word.size() < rel.size()) continue;
      bool eq = true;
      for (std::size_t k = 0; k < rel.size(); ++k)
        if (word[word.size() - rel.size() + k] != rel[k]) { eq = false; break; }
      if (eq) return true;
    }
    return false;
  };

  std::deque<int> queue;
  auto add_path = [&](Path p) {
    if (alg->paths_.size() >= path_cap)
      throw InfiniteDimensionalError(
          "path basis exceeds cap of " + std::to_string(path_cap) +
          "; the algebra is infinite-dimensional or the cap is too low");
    int id = int(alg->paths_.size());
    alg->path_lookup_[{p.source, p.arrows}] = id;
    alg->paths_.push_back(std::move(p));
    queue.push_back(id);
  };

  for (int v = 0; v < q.vertex_count; ++v) add_path({v, v, {}});
  while (!queue.empty()) {
    int id = queue.front();
    queue.pop_front();
    for (std::size_t a = 0; a < q.arrows.size(); ++a) {
      Path p = alg->paths_[id];  // copy: add_path may reallocate
      if (q.arrows[a].source != p.target) continue;
      std::vector<int> word = p.arrows;
      word.push_back(int(a));
      if (suffix_hits_relation(word)) continue;
      add_path({p.source, q.arrows[a].target, std::move(word)});
    }
  }

  alg->paths_from_.assign(q.vertex_count,
                          std::vector<std::vector<int>>(q.vertex_count));
  for (std::size_t i = 0; i < alg->paths_.size(); ++i)
    alg->paths_from_[alg->paths_[i].source][alg->paths_[i].target].push_back(int(i));
  return alg;
}

AlgebraPtr cyclic_nakayama(int n, Field f) {
  if (n < 2) throw ParseError("cyclic Nakayama algebra needs n >= 2");
  Quiver q;
  q.vertex_count = n;
  for (int i = 0; i < n; ++i)
    q.arrows.push_back({"a" + std::to_string(i + 1), i, (i + 1) % n});
  std::vector<std::vector<int>> rels;
  for (int i = 0; i < n; ++i) rels.push_back({i, (i + 1) % n});
  return build_monomial_algebra(f, q, rels);
}

AlgebraPtr opposite(const AlgebraPtr& a) {
  Quiver q;
  q.vertex_count = a->vertex_count();
  for (const auto& ar : a->quiver().arrows)
    q.arrows.push_back({ar.name, ar.target, ar.source});
  std::vector<std::vector<int>> rels;
  for (const auto& rel : a->relations())
    rels.push_back(std::vector<int>(rel.rbegin(), rel.rend()));
  return build_monomial_algebra(a->field(), q, rels);
}

bool is_cyclic_nakayama_presentation(const MonomialAlgebra& a) {
  int n = a.vertex_count();
  if (n < 2 || a.arrow_count() != n) return false;
  std::vector<int> out(n, -1), in(n, -1);
  for (int k = 0; k < n; ++k) {
    const Arrow& ar = a.quiver().arrows[k];
    if (out[ar.source] != -1 || in[ar.target] != -1) return false;
    out[ar.source] = k;
    in[ar.target] = k;
  }
  // Single cycle: following successors from vertex 0 visits every vertex.
  int v = 0;
  for (int step = 0; step < n; ++step) v = a.quiver().arrows[out[v]].target;
  if (v != 0) return false;
  std::vector<int> seen;
  int w = 0;
  for (int step = 0; step < n; ++step) {
    seen.push_back(w);
    w = a.quiver().arrows[out[w]].target;
  }
  std::set<int> uniq(seen.begin(), seen.end());
  if (int(uniq.size()) != n) return false;
  // Relations are exactly the n length-2 paths.
  if (a.relations().size() != std::size_t(n)) return false;
  std::set<std::vector<int>> want, have;
  for (int k = 0; k < n; ++k) {
    int next = out[a.quiver().arrows[k].target];
    want.insert({k, next});
  }
  for (const auto& rel : a.relations()) have.insert(rel);
  return want == have;
}

bool algebra_equal(const AlgebraPtr& a, const AlgebraPtr& b) {
  if (a == b) return true;
  if (!a || !b) return false;
  return a->same_presentation(*b);
}

}  // namespace gor
