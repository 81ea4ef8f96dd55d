// Shared fixtures and independent cross-check utilities for the unit tests.
#pragma once
#include <algorithm>
#include <cstdint>
#include <numeric>
#include <random>
#include <string>
#include <vector>

#include "algebra.hpp"
#include "fieldmat.hpp"
#include "rep.hpp"

namespace gt {

using namespace gor;

inline Matrix mk(Field f, const std::vector<std::vector<std::uint32_t>>& r) {
  return Matrix::from_rows(f, r);
}

inline Matrix random_matrix(Field f, std::size_t r, std::size_t c,
                            std::mt19937_64& g) {
  Matrix m(f, r, c);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j)
      m(i, j) = std::uint32_t(g() % f.modulus());
  return m;
}

/* Determinant by signed permutation expansion.  Deliberately independent of
 * the elimination routines it cross-checks; only usable for small n. */
inline std::uint32_t det_permutation(const Matrix& a) {
  const Field f = a.field();
  const std::size_t n = a.rows();
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::uint32_t plus = 0, minus = 0;
  do {
    int inv = 0;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j)
        if (perm[i] > perm[j]) ++inv;
    std::uint32_t term = 1;
    for (std::size_t i = 0; i < n; ++i) term = f.mul(term, a(i, perm[i]));
    if (inv % 2 == 0)
      plus = f.add(plus, term);
    else
      minus = f.add(minus, term);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return f.sub(plus, minus);
}

inline AlgebraPtr C(int n, std::uint32_t p) {
  return cyclic_nakayama(n, Field(p));
}

// Linear quiver 1 -> 2 -> ... -> n with arrows a1..a(n-1); relations are
// given as lists of arrow indices.
inline AlgebraPtr linear(int n, std::uint32_t p,
                         std::vector<std::vector<int>> rels = {}) {
  Quiver q;
  q.vertex_count = n;
  for (int i = 0; i + 1 < n; ++i)
    q.arrows.push_back({"a" + std::to_string(i + 1), i, i + 1});
  return build_monomial_algebra(Field(p), q, std::move(rels));
}

// Local algebra k<x,y> modulo all length-2 words; radical square zero,
// not self-injective, syzygies double in size.
inline AlgebraPtr two_loop(std::uint32_t p) {
  Quiver q;
  q.vertex_count = 1;
  q.arrows.push_back({"x", 0, 0});
  q.arrows.push_back({"y", 0, 0});
  return build_monomial_algebra(Field(p), q,
                                {{0, 0}, {0, 1}, {1, 0}, {1, 1}});
}

// k[x]/(x^2) as a one-vertex quiver with a loop.
inline AlgebraPtr dual_numbers(std::uint32_t p) {
  Quiver q;
  q.vertex_count = 1;
  q.arrows.push_back({"x", 0, 0});
  return build_monomial_algebra(Field(p), q, {{0, 0}});
}

/* Disjoint union of a 3-cycle with radical square zero (vertices 0..2) and
 * an arrow 3 -> 4.  Not self-injective, yet modules supported on the cycle
 * component still have periodic resolutions. */
inline AlgebraPtr cycle_plus_arrow(std::uint32_t p) {
  Quiver q;
  q.vertex_count = 5;
  q.arrows.push_back({"a1", 0, 1});
  q.arrows.push_back({"a2", 1, 2});
  q.arrows.push_back({"a3", 2, 0});
  q.arrows.push_back({"b", 3, 4});
  return build_monomial_algebra(Field(p), q, {{0, 1}, {1, 2}, {2, 0}});
}

// Total rank of a morphism: sum of the vertexwise matrix ranks.
inline int mrank(const Morphism& f) {
  int s = 0;
  for (const Matrix& m : f.vertex_maps) s += int(rank(m));
  return s;
}

inline bool morphism_equal(const Morphism& f, const Morphism& g) {
  return f.vertex_maps == g.vertex_maps;
}

}  // namespace gt
