/* Minimal projective resolutions, syzygies, Ext groups, and injective
 * coresolutions via duality.  Covers lift a basis of the top, so kernels sit
 * inside the radical and minimality holds degree by degree. */
#pragma once
#include <optional>

#include "rep.hpp"

namespace gor {

struct RadicalTop {
  Representation radical;
  Morphism radical_inclusion;  // radical -> M
  Representation top;          // semisimple: all arrow maps zero
  Morphism top_quotient;       // M -> top
  // vertexwise right inverses of the quotient (not module maps)
  std::vector<Matrix> top_section;
};
RadicalTop radical_and_top(const Representation& m);

struct Cover {
  std::vector<int> vertices;  // multiset of projective labels, ascending
  Representation proj;
  Morphism cover;  // proj -> M, surjective, iso on tops
};
Cover projective_cover(const Representation& m);

// First syzygy: kernel of the projective cover, included into the cover.
SubObject syzygy(const Representation& m);

struct ResolutionTerm {
  std::vector<int> vertices;
  Representation proj;
  Morphism cover;     // proj -> (M at degree 0, else the previous syzygy)
  Morphism boundary;  // degree 0: proj -> M; degree t: proj -> term t-1
};

/* Lazily extended minimal resolution.  Terms stop at the first zero syzygy;
 * degrees past that point are zero. */
class Resolution {
 public:
  explicit Resolution(Representation m);

  const Representation& module() const { return module_; }
  void extend(int horizon);

  bool finite() const { return complete_; }
  int projective_dimension() const;  // valid once finite()
  int term_count() const { return int(terms_.size()); }
  const ResolutionTerm& term(int t) const { return terms_[t]; }

  // Zero representation past the end of a finite resolution.
  Representation term_proj(int t);
  // Boundary P_t -> P_{t-1} for t >= 1; nullopt when either side is past the end.
  std::optional<Morphism> boundary(int t);

  Representation syzygy_rep(int j);           // Omega^j, j >= 0
  const Morphism& syzygy_inclusion(int j);    // Omega^j -> P_{j-1}, j >= 1
  const Morphism& cover_map(int t);           // cover of degree t

  std::vector<int> dims_sequence(int horizon);

 private:
  void step();

  Representation module_;
  std::vector<ResolutionTerm> terms_;
  std::vector<Representation> syzygies_;   // Omega^1, Omega^2, ...
  std::vector<Morphism> syzygy_incl_;      // Omega^j -> P_{j-1}
  bool complete_ = false;
};

// dim Ext^i(M, N) as cohomology of Hom(P_*, N); i >= 1.
int ext_dim_on(Resolution& res, const Representation& n, int i);
int ext_dim(const Representation& m, const Representation& n, int i);

// Smallest degree j in 1..h with Ext^j(M, A) != 0 against the regular module.
std::optional<int> first_ext_nonvanishing_against_regular(Resolution& res, int h);
bool ext_vanishes_against_regular(const Representation& m, int h);

/* Injective coresolution of M, computed as the minimal projective resolution
 * of the dual module over the opposite algebra.  Term labels name injectives
 * of the original algebra. */
struct Coresolution {
  AlgebraPtr op;
  Representation dual_module;
  Resolution res;

  Representation cosyzygy(int j, const AlgebraPtr& original);
};
Coresolution injective_coresolution(const Representation& m, int horizon);

enum class ComplexityClass {
  finite_projective_dimension,
  bounded_periodic,
  growth,
  inconclusive,
};

struct ComplexityEstimate {
  std::vector<int> dims_sequence;
  ComplexityClass classification = ComplexityClass::inconclusive;
  bool certified = false;
  int period = 0;       // bounded_periodic: syzygy at period_from + period
  int period_from = 0;  //   is certified isomorphic to the one at period_from
  double growth_exponent = 0.0;
};
// horizon >= 4 required.
ComplexityEstimate complexity_estimate(const Representation& m, int horizon,
                                       const IsoOptions& opt = {});

const char* complexity_class_name(ComplexityClass c);

}  // namespace gor
