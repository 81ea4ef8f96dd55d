/* Finite-dimensional representations of a monomial bound-quiver algebra:
 * one GF(p) space per vertex, one matrix per arrow (shape dims[target] x
 * dims[source]), morphisms as vertexwise maps commuting with the arrow
 * actions.  Everything is exact; no floating point anywhere. */
#pragma once
#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "algebra.hpp"

namespace gor {

inline constexpr std::uint64_t kDefaultSeed = 0xC0FFEE;

struct Representation {
  AlgebraPtr algebra;
  std::vector<int> dims;           // one entry per vertex
  std::vector<Matrix> arrow_maps;  // one entry per arrow

  int total_dim() const;
  bool is_zero() const { return total_dim() == 0; }
};

struct Morphism {
  Representation source;
  Representation target;
  std::vector<Matrix> vertex_maps;  // shape target.dims[v] x source.dims[v]
};

struct RelationViolation {
  int relation_index;
  std::string relation_name;  // arrow names in traversal order
};

// Shape check plus the zero-relations check; reports the first violation.
std::optional<RelationViolation> check_module(const Representation& m);

// Validating constructors; internal construction sites use them throughout,
// so a malformed value indicates a library bug (InternalError).
Representation make_representation(AlgebraPtr a, std::vector<int> dims,
                                   std::vector<Matrix> arrow_maps);
Representation zero_representation(AlgebraPtr a);
Representation simple(AlgebraPtr a, int vertex);
Representation indecomposable_projective(AlgebraPtr a, int vertex);
Representation indecomposable_injective(AlgebraPtr a, int vertex);

Morphism make_morphism(Representation source, Representation target,
                       std::vector<Matrix> vertex_maps);
Morphism identity_morphism(const Representation& m);
Morphism zero_morphism(const Representation& source, const Representation& target);
Morphism compose(const Morphism& g, const Morphism& f);  // g after f
Morphism add(const Morphism& f, const Morphism& g);
Morphism scale(std::uint32_t c, const Morphism& f);
bool is_invertible(const Morphism& f);
Morphism inverse_morphism(const Morphism& f);
bool is_zero(const Morphism& f);

bool rep_equal(const Representation& a, const Representation& b);

// Applies the arrows of path p in traversal order to a column block.
Matrix apply_path(const Representation& m, const Path& p, const Matrix& block);

struct DirectSum {
  Representation sum;
  std::vector<Morphism> injections;
  std::vector<Morphism> projections;
  // offsets[part][vertex]: starting coordinate of the part inside the sum
  std::vector<std::vector<int>> offsets;
};
DirectSum direct_sum(AlgebraPtr a, const std::vector<Representation>& parts);

struct HomSpace {
  Representation source;
  Representation target;
  std::vector<Morphism> basis;
  int dim() const { return int(basis.size()); }
};
// Basis of Hom(M, N) as the nullspace of the commuting-square system.
HomSpace hom_basis(const Representation& m, const Representation& n);

// Coordinates of a morphism in the ambient product of vertex map spaces
// (vertices in order, each map row-major).
std::vector<std::uint32_t> flatten_morphism(const Morphism& f);

struct SubObject {
  Representation sub;
  Morphism inclusion;
};
SubObject kernel(const Morphism& f);

struct ImageCokernel {
  Representation image;
  Morphism image_inclusion;  // image -> target
  Morphism factor;           // source -> image
  Representation cokernel;
  Morphism cokernel_projection;  // target -> cokernel
};
ImageCokernel image_and_cokernel(const Morphism& f);

struct IsoOptions {
  std::uint64_t seed = kDefaultSeed;
  int random_trials = 64;
  // Exhaustive search runs only when p^dim(Hom) fits this power-of-two budget.
  double exhaust_log2_budget = 20.0;
};

struct IsoResult {
  bool isomorphic = false;
  // Positive answers always carry a verified witness; a negative answer is
  // certified only if the coefficient space was exhausted (a dimension-vector
  // mismatch counts as exhausted).
  bool certified = false;
  std::optional<Morphism> witness;
};
IsoResult is_isomorphic(const Representation& m, const Representation& n,
                        const IsoOptions& opt = {});

/* k-linear dual as a representation of the opposite algebra: same dimension
 * vector, transposed arrow maps.  target_algebra must present opposite(M's
 * algebra); passing the original algebra to the dual of a dual restores a
 * representation over it. */
Representation dual(const Representation& m, const AlgebraPtr& target_algebra);
Representation dual(const Representation& m);

/* Splits off indecomposable projective summands until none remains.  A copy
 * of P_v splits off iff some basis pair f in Hom(P_v, M), g in Hom(M, P_v)
 * has g*f invertible; End(P_v) is local, so the basis-pair test is complete. */
struct StripResult {
  Representation stable_part;
  std::vector<int> projective_vertices;  // split order, 0-based
  Representation projective_part;        // direct sum in split order
  Morphism assemble;     // stable + projective_part -> M, an isomorphism
  Morphism disassemble;  // its inverse
};
StripResult strip_projective_summands(const Representation& m);

/* Seeded random representation with total dimension <= max_total.  Arrow maps
 * are drawn uniformly from the subspace allowed by the relations that become
 * fully determined at each arrow (falls back to rejection sampling, then to
 * the zero map, when a relation meets the same arrow twice). */
Representation random_representation(AlgebraPtr a, int max_total,
                                     std::mt19937_64& rng);

}  // namespace gor
