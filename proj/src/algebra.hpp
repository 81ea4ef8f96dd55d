/* Finite-dimensional monomial bound-quiver algebras kQ/I over GF(p).
 *
 * Vertices are 0-based internally and 1-based in files and reports.  A path
 * stores its arrows in traversal order: the relation "a b" means traverse a,
 * then b.  The zero relations all have path length >= 2, so the nonzero paths
 * form a basis of the algebra that is closed under subpaths. */
#pragma once
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "fieldmat.hpp"

namespace gor {

struct Arrow {
  std::string name;
  int source = 0;
  int target = 0;
  bool operator==(const Arrow&) const = default;
};

struct Quiver {
  int vertex_count = 0;
  std::vector<Arrow> arrows;
  bool operator==(const Quiver&) const = default;
};

struct Path {
  int source = 0;
  int target = 0;
  std::vector<int> arrows;  // arrow indices, traversal order; empty = e_source
};

class MonomialAlgebra;
using AlgebraPtr = std::shared_ptr<const MonomialAlgebra>;

class MonomialAlgebra {
 public:
  static constexpr std::size_t kDefaultPathCap = 10000;

  const Field& field() const { return field_; }
  const Quiver& quiver() const { return quiver_; }
  int vertex_count() const { return quiver_.vertex_count; }
  int arrow_count() const { return int(quiver_.arrows.size()); }
  const std::vector<std::vector<int>>& relations() const { return relations_; }
  const std::vector<Path>& path_basis() const { return paths_; }
  int dimension() const { return int(paths_.size()); }

  // paths_from()[v][w] lists indices into path_basis() of the paths v -> w,
  // in the global enumeration order (by length, then discovery).
  const std::vector<std::vector<std::vector<int>>>& paths_from() const {
    return paths_from_;
  }

  std::optional<int> path_index(int source, const std::vector<int>& arrows) const;

  std::optional<int> arrow_index(const std::string& name) const;

  bool same_presentation(const MonomialAlgebra& other) const {
    return field_ == other.field_ && quiver_ == other.quiver_ &&
           relations_ == other.relations_;
  }

  friend AlgebraPtr build_monomial_algebra(Field f, Quiver q,
                                           std::vector<std::vector<int>> relations,
                                           std::size_t path_cap);
  friend bool is_self_injective(const AlgebraPtr& a);

 private:
  MonomialAlgebra() : field_(2) {}

  Field field_;
  Quiver quiver_;
  std::vector<std::vector<int>> relations_;
  std::vector<Path> paths_;
  std::vector<std::vector<std::vector<int>>> paths_from_;
  std::map<std::pair<int, std::vector<int>>, int> path_lookup_;
  // memo for is_self_injective; single-threaded use
  mutable std::optional<bool> self_injective_;
};

/* Validates the presentation (composable relations of length >= 2, arrow
 * endpoints in range, distinct arrow names) and enumerates the path basis
 * breadth-first; throws InfiniteDimensionalError past path_cap paths. */
AlgebraPtr build_monomial_algebra(Field f, Quiver q,
                                  std::vector<std::vector<int>> relations,
                                  std::size_t path_cap = MonomialAlgebra::kDefaultPathCap);

/* The self-injective Nakayama algebra with cyclic quiver on n >= 2 vertices,
 * arrows a1: 1 -> 2, ..., an: n -> 1, and all length-2 paths as relations.
 * Dimension 2n. */
AlgebraPtr cyclic_nakayama(int n, Field f);

/* Same arrow names and order with sources and targets swapped; each relation
 * reversed.  Applying it twice reproduces the presentation exactly. */
AlgebraPtr opposite(const AlgebraPtr& a);

/* True iff the indecomposable projectives and injectives match up to a
 * bijection on vertices, each pair certified by an isomorphism witness. */
bool is_self_injective(const AlgebraPtr& a);

/* Structural test: cyclic quiver on >= 2 vertices with every length-2 path a
 * relation (any orientation). */
bool is_cyclic_nakayama_presentation(const MonomialAlgebra& a);

bool algebra_equal(const AlgebraPtr& a, const AlgebraPtr& b);

}  // namespace gor
