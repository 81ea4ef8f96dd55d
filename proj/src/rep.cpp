#include "rep.hpp"

#include <algorithm>
#include <cmath>
#include <set>

namespace gor {

namespace {

void require_algebra(const AlgebraPtr& a, const AlgebraPtr& b, const char* what) {
  if (!algebra_equal(a, b))
    throw ComputeError(std::string(what) + ": operands over different algebras");
}

std::string relation_name(const MonomialAlgebra& a, const std::vector<int>& rel) {
  std::string s;
  for (std::size_t k = 0; k < rel.size(); ++k) {
    if (k) s += ' ';
    s += a.quiver().arrows[rel[k]].name;
  }
  return s;
}

Matrix relation_composite(const Representation& m, const std::vector<int>& rel) {
  const auto& arrows = m.algebra->quiver().arrows;
  Matrix c = Matrix::identity(m.algebra->field(), m.dims[arrows[rel[0]].source]);
  for (int a : rel) c = mul(m.arrow_maps[a], c);
  return c;
}

}  // namespace

int Representation::total_dim() const {
  int t = 0;
  for (int d : dims) t += d;
  return t;
}

std::optional<RelationViolation> check_module(const Representation& m) {
  const MonomialAlgebra& a = *m.algebra;
  if (int(m.dims.size()) != a.vertex_count() ||
      int(m.arrow_maps.size()) != a.arrow_count())
    throw InternalError("representation has wrong dims/maps arity");
  for (int d : m.dims)
    if (d < 0) throw InternalError("negative vertex dimension");
  for (int k = 0; k < a.arrow_count(); ++k) {
    const Arrow& ar = a.quiver().arrows[k];
    const Matrix& f = m.arrow_maps[k];
    if (!(f.field() == a.field()) || int(f.rows()) != m.dims[ar.target] ||
        int(f.cols()) != m.dims[ar.source])
      throw InternalError("arrow map " + ar.name + " has the wrong shape");
  }
  for (std::size_t r = 0; r < a.relations().size(); ++r)
    if (!relation_composite(m, a.relations()[r]).is_zero())
      return RelationViolation{int(r), relation_name(a, a.relations()[r])};
  return std::nullopt;
}

Representation make_representation(AlgebraPtr a, std::vector<int> dims,
                                   std::vector<Matrix> arrow_maps) {
  Representation m{std::move(a), std::move(dims), std::move(arrow_maps)};
  if (auto v = check_module(m))
    throw InternalError("relation " + v->relation_name +
                        " does not act as zero on a constructed representation");
  return m;
}

Representation zero_representation(AlgebraPtr a) {
  std::vector<int> dims(a->vertex_count(), 0);
  std::vector<Matrix> maps;
  for (const auto& ar : a->quiver().arrows)
    maps.emplace_back(a->field(), 0, 0), (void)ar;
  return make_representation(a, std::move(dims), std::move(maps));
}

Representation simple(AlgebraPtr a, int vertex) {
  if (vertex < 0 || vertex >= a->vertex_count())
    throw ComputeError("simple: vertex out of range");
  std::vector<int> dims(a->vertex_count(), 0);
  dims[vertex] = 1;
  std::vector<Matrix> maps;
  for (const auto& ar : a->quiver().arrows)
    maps.emplace_back(a->field(), dims[ar.target], dims[ar.source]);
  return make_representation(a, std::move(dims), std::move(maps));
}

Representation indecomposable_projective(AlgebraPtr a, int vertex) {
  if (vertex < 0 || vertex >= a->vertex_count())
    throw ComputeError("projective: vertex out of range");
  const auto& from = a->paths_from()[vertex];
  std::vector<int> dims(a->vertex_count());
  // position of a path id inside its vertex component
  std::map<int, int> pos;
  for (int w = 0; w < a->vertex_count(); ++w) {
    dims[w] = int(from[w].size());
    for (std::size_t j = 0; j < from[w].size(); ++j) pos[from[w][j]] = int(j);
  }
  std::vector<Matrix> maps;
  for (int k = 0; k < a->arrow_count(); ++k) {
    const Arrow& ar = a->quiver().arrows[k];
    Matrix f(a->field(), dims[ar.target], dims[ar.source]);
    for (std::size_t j = 0; j < from[ar.source].size(); ++j) {
      const Path& p = a->path_basis()[from[ar.source][j]];
      std::vector<int> word = p.arrows;
      word.push_back(k);
      if (auto id = a->path_index(vertex, word)) f(pos[*id], j) = 1;
    }
    maps.push_back(std::move(f));
  }
  return make_representation(a, std::move(dims), std::move(maps));
}

Representation indecomposable_injective(AlgebraPtr a, int vertex) {
  AlgebraPtr op = opposite(a);
  return dual(indecomposable_projective(op, vertex), a);
}

Morphism make_morphism(Representation source, Representation target,
                       std::vector<Matrix> vertex_maps) {
  require_algebra(source.algebra, target.algebra, "morphism");
  const MonomialAlgebra& alg = *source.algebra;
  if (int(vertex_maps.size()) != alg.vertex_count())
    throw InternalError("morphism has wrong vertex map arity");
  for (int v = 0; v < alg.vertex_count(); ++v)
    if (int(vertex_maps[v].rows()) != target.dims[v] ||
        int(vertex_maps[v].cols()) != source.dims[v])
      throw InternalError("morphism vertex map has the wrong shape");
  for (int k = 0; k < alg.arrow_count(); ++k) {
    const Arrow& ar = alg.quiver().arrows[k];
    if (!(mul(target.arrow_maps[k], vertex_maps[ar.source]) ==
          mul(vertex_maps[ar.target], source.arrow_maps[k])))
      throw InternalError("morphism does not commute with arrow " + ar.name);
  }
  return Morphism{std::move(source), std::move(target), std::move(vertex_maps)};
}

Morphism identity_morphism(const Representation& m) {
  std::vector<Matrix> maps;
  for (int d : m.dims) maps.push_back(Matrix::identity(m.algebra->field(), d));
  return make_morphism(m, m, std::move(maps));
}

Morphism zero_morphism(const Representation& source, const Representation& target) {
  require_algebra(source.algebra, target.algebra, "zero morphism");
  std::vector<Matrix> maps;
  for (int v = 0; v < source.algebra->vertex_count(); ++v)
    maps.emplace_back(source.algebra->field(), target.dims[v], source.dims[v]);
  return make_morphism(source, target, std::move(maps));
}

Morphism compose(const Morphism& g, const Morphism& f) {
  if (!rep_equal(f.target, g.source))
    throw InternalError("compose: middle representations differ");
  std::vector<Matrix> maps;
  for (std::size_t v = 0; v < f.vertex_maps.size(); ++v)
    maps.push_back(mul(g.vertex_maps[v], f.vertex_maps[v]));
  return make_morphism(f.source, g.target, std::move(maps));
}

Morphism add(const Morphism& f, const Morphism& g) {
  if (!rep_equal(f.source, g.source) || !rep_equal(f.target, g.target))
    throw InternalError("add: morphisms between different representations");
  std::vector<Matrix> maps;
  for (std::size_t v = 0; v < f.vertex_maps.size(); ++v)
    maps.push_back(add(f.vertex_maps[v], g.vertex_maps[v]));
  return make_morphism(f.source, f.target, std::move(maps));
}

Morphism scale(std::uint32_t c, const Morphism& f) {
  std::vector<Matrix> maps;
  for (const auto& m : f.vertex_maps) maps.push_back(scale(c, m));
  return make_morphism(f.source, f.target, std::move(maps));
}

bool is_invertible(const Morphism& f) {
  if (f.source.dims != f.target.dims) return false;
  for (const auto& m : f.vertex_maps)
    if (!is_invertible(m)) return false;
  return true;
}

Morphism inverse_morphism(const Morphism& f) {
  if (!is_invertible(f)) throw ComputeError("morphism is not invertible");
  std::vector<Matrix> maps;
  for (const auto& m : f.vertex_maps) maps.push_back(inverse(m));
  return make_morphism(f.target, f.source, std::move(maps));
}

bool is_zero(const Morphism& f) {
  for (const auto& m : f.vertex_maps)
    if (!m.is_zero()) return false;
  return true;
}

bool rep_equal(const Representation& a, const Representation& b) {
  return algebra_equal(a.algebra, b.algebra) && a.dims == b.dims &&
         a.arrow_maps == b.arrow_maps;
}

Matrix apply_path(const Representation& m, const Path& p, const Matrix& block) {
  Matrix x = block;
  for (int a : p.arrows) x = mul(m.arrow_maps[a], x);
  return x;
}

DirectSum direct_sum(AlgebraPtr a, const std::vector<Representation>& parts) {
  for (const auto& p : parts) require_algebra(a, p.algebra, "direct sum");
  int nv = a->vertex_count();
  std::vector<int> dims(nv, 0);
  std::vector<std::vector<int>> offsets(parts.size(), std::vector<int>(nv, 0));
  for (std::size_t p = 0; p < parts.size(); ++p)
    for (int v = 0; v < nv; ++v) {
      offsets[p][v] = dims[v];
      dims[v] += parts[p].dims[v];
    }
  std::vector<Matrix> maps;
  for (int k = 0; k < a->arrow_count(); ++k) {
    std::vector<Matrix> blocks;
    for (const auto& p : parts) blocks.push_back(p.arrow_maps[k]);
    maps.push_back(block_diag(a->field(), blocks));
  }
  DirectSum ds;
  ds.sum = make_representation(a, dims, std::move(maps));
  ds.offsets = offsets;
  for (std::size_t p = 0; p < parts.size(); ++p) {
    std::vector<Matrix> inj, prj;
    for (int v = 0; v < nv; ++v) {
      Matrix i(a->field(), dims[v], parts[p].dims[v]);
      Matrix q(a->field(), parts[p].dims[v], dims[v]);
      for (int j = 0; j < parts[p].dims[v]; ++j) {
        i(offsets[p][v] + j, j) = 1;
        q(j, offsets[p][v] + j) = 1;
      }
      inj.push_back(std::move(i));
      prj.push_back(std::move(q));
    }
    ds.injections.push_back(make_morphism(parts[p], ds.sum, std::move(inj)));
    ds.projections.push_back(make_morphism(ds.sum, parts[p], std::move(prj)));
  }
  return ds;
}

namespace {

// Coordinates of the morphism space: vertices in order, each map row-major.
std::vector<std::size_t> hom_offsets(const Representation& m,
                                     const Representation& n) {
  std::vector<std::size_t> off(m.dims.size() + 1, 0);
  for (std::size_t v = 0; v < m.dims.size(); ++v)
    off[v + 1] = off[v] + std::size_t(n.dims[v]) * m.dims[v];
  return off;
}

Morphism unflatten_morphism(const Representation& m, const Representation& n,
                            const std::vector<std::uint32_t>& x) {
  auto off = hom_offsets(m, n);
  std::vector<Matrix> maps;
  for (std::size_t v = 0; v < m.dims.size(); ++v) {
    Matrix f(m.algebra->field(), n.dims[v], m.dims[v]);
    for (int i = 0; i < n.dims[v]; ++i)
      for (int j = 0; j < m.dims[v]; ++j)
        f(i, j) = x[off[v] + std::size_t(i) * m.dims[v] + j];
    maps.push_back(std::move(f));
  }
  return make_morphism(m, n, std::move(maps));
}

}  // namespace

std::vector<std::uint32_t> flatten_morphism(const Morphism& f) {
  auto off = hom_offsets(f.source, f.target);
  std::vector<std::uint32_t> x(off.back(), 0);
  for (std::size_t v = 0; v < f.vertex_maps.size(); ++v)
    for (std::size_t i = 0; i < f.vertex_maps[v].rows(); ++i)
      for (std::size_t j = 0; j < f.vertex_maps[v].cols(); ++j)
        x[off[v] + i * f.vertex_maps[v].cols() + j] = f.vertex_maps[v](i, j);
  return x;
}

HomSpace hom_basis(const Representation& m, const Representation& n) {
  require_algebra(m.algebra, n.algebra, "hom space");
  const MonomialAlgebra& alg = *m.algebra;
  Field f = alg.field();
  auto off = hom_offsets(m, n);
  std::size_t unknowns = off.back();
  std::size_t rows = 0;
  for (int k = 0; k < alg.arrow_count(); ++k) {
    const Arrow& ar = alg.quiver().arrows[k];
    rows += std::size_t(n.dims[ar.target]) * m.dims[ar.source];
  }
  Matrix sys(f, rows, unknowns);
  std::size_t row = 0;
  for (int k = 0; k < alg.arrow_count(); ++k) {
    const Arrow& ar = alg.quiver().arrows[k];
    int s = ar.source, t = ar.target;
    const Matrix& nm = n.arrow_maps[k];
    const Matrix& mm = m.arrow_maps[k];
    for (int r = 0; r < n.dims[t]; ++r)
      for (int c = 0; c < m.dims[s]; ++c) {
        // (N_a f_s - f_t M_a)(r, c) = 0
        for (int j = 0; j < n.dims[s]; ++j) {
          std::size_t idx = off[s] + std::size_t(j) * m.dims[s] + c;
          sys(row, idx) = f.add(sys(row, idx), nm(r, j));
        }
        for (int i = 0; i < m.dims[t]; ++i) {
          std::size_t idx = off[t] + std::size_t(r) * m.dims[t] + i;
          sys(row, idx) = f.sub(sys(row, idx), mm(i, c));
        }
        ++row;
      }
  }
  Matrix basis = nullspace_basis(sys);
  HomSpace h{m, n, {}};
  for (std::size_t j = 0; j < basis.cols(); ++j)
    h.basis.push_back(unflatten_morphism(m, n, basis.column(j)));
  return h;
}

SubObject kernel(const Morphism& f) {
  const Representation& m = f.source;
  std::vector<Matrix> incl;
  std::vector<int> dims;
  for (std::size_t v = 0; v < f.vertex_maps.size(); ++v) {
    incl.push_back(nullspace_basis(f.vertex_maps[v]));
    dims.push_back(int(incl.back().cols()));
  }
  std::vector<Matrix> maps;
  for (int k = 0; k < m.algebra->arrow_count(); ++k) {
    const Arrow& ar = m.algebra->quiver().arrows[k];
    auto x = solve(incl[ar.target], mul(m.arrow_maps[k], incl[ar.source]));
    if (!x) throw InternalError("kernel is not closed under the arrow action");
    maps.push_back(*x);
  }
  SubObject s;
  s.sub = make_representation(m.algebra, dims, std::move(maps));
  s.inclusion = make_morphism(s.sub, m, std::move(incl));
  return s;
}

ImageCokernel image_and_cokernel(const Morphism& f) {
  const Representation& n = f.target;
  std::vector<Matrix> incl, fact, proj;
  std::vector<int> idims, cdims;
  std::vector<Matrix> complement;
  for (std::size_t v = 0; v < f.vertex_maps.size(); ++v) {
    Matrix b = column_space_basis(f.vertex_maps[v]);
    auto ext = extend_to_basis(b);
    auto fv = solve(b, f.vertex_maps[v]);
    if (!fv) throw InternalError("image basis does not span the image");
    incl.push_back(b);
    fact.push_back(*fv);
    complement.push_back(ext.complement);
    proj.push_back(ext.quotient);
    idims.push_back(int(b.cols()));
    cdims.push_back(int(ext.quotient.rows()));
  }
  std::vector<Matrix> imaps, cmaps;
  for (int k = 0; k < n.algebra->arrow_count(); ++k) {
    const Arrow& ar = n.algebra->quiver().arrows[k];
    auto x = solve(incl[ar.target], mul(n.arrow_maps[k], incl[ar.source]));
    if (!x) throw InternalError("image is not closed under the arrow action");
    imaps.push_back(*x);
    cmaps.push_back(mul(proj[ar.target],
                        mul(n.arrow_maps[k], complement[ar.source])));
  }
  ImageCokernel r;
  r.image = make_representation(n.algebra, idims, std::move(imaps));
  r.image_inclusion = make_morphism(r.image, n, std::move(incl));
  r.factor = make_morphism(f.source, r.image, std::move(fact));
  r.cokernel = make_representation(n.algebra, cdims, std::move(cmaps));
  r.cokernel_projection = make_morphism(n, r.cokernel, std::move(proj));
  return r;
}

namespace {

std::optional<Morphism> combination_if_invertible(
    const HomSpace& h, const std::vector<std::uint32_t>& coeff) {
  Field f = h.source.algebra->field();
  std::vector<Matrix> maps;
  for (int v = 0; v < h.source.algebra->vertex_count(); ++v)
    maps.emplace_back(f, h.target.dims[v], h.source.dims[v]);
  for (std::size_t b = 0; b < h.basis.size(); ++b) {
    if (coeff[b] == 0) continue;
    for (std::size_t v = 0; v < maps.size(); ++v)
      maps[v] = add(maps[v], scale(coeff[b], h.basis[b].vertex_maps[v]));
  }
  for (const auto& m : maps)
    if (!is_invertible(m)) return std::nullopt;
  return make_morphism(h.source, h.target, std::move(maps));
}

}  // namespace

IsoResult is_isomorphic(const Representation& m, const Representation& n,
                        const IsoOptions& opt) {
  require_algebra(m.algebra, n.algebra, "isomorphism test");
  if (m.dims != n.dims) return {false, true, std::nullopt};
  HomSpace h = hom_basis(m, n);
  std::size_t hd = h.basis.size();
  std::uint32_t p = m.algebra->field().modulus();

  std::vector<std::uint32_t> coeff(hd, 0);
  // single basis elements and pairwise sums
  for (std::size_t i = 0; i < hd; ++i) {
    std::fill(coeff.begin(), coeff.end(), 0);
    coeff[i] = 1;
    if (auto w = combination_if_invertible(h, coeff))
      return {true, true, std::move(w)};
  }
  for (std::size_t i = 0; i < hd; ++i)
    for (std::size_t j = i + 1; j < hd; ++j) {
      std::fill(coeff.begin(), coeff.end(), 0);
      coeff[i] = 1;
      coeff[j] = 1;
      if (auto w = combination_if_invertible(h, coeff))
        return {true, true, std::move(w)};
    }
  // seeded random combinations
  std::mt19937_64 rng(opt.seed);
  std::uniform_int_distribution<std::uint32_t> dist(0, p - 1);
  for (int t = 0; t < opt.random_trials; ++t) {
    for (auto& c : coeff) c = dist(rng);
    if (auto w = combination_if_invertible(h, coeff))
      return {true, true, std::move(w)};
  }
  // exhaustive coefficient enumeration when the space is small enough
  if (double(hd) * std::log2(double(p)) <= opt.exhaust_log2_budget) {
    std::fill(coeff.begin(), coeff.end(), 0);
    for (;;) {
      if (auto w = combination_if_invertible(h, coeff))
        return {true, true, std::move(w)};
      std::size_t k = 0;
      while (k < hd) {
        if (++coeff[k] < p) break;
        coeff[k] = 0;
        ++k;
      }
      if (k == hd) break;
    }
    return {false, true, std::nullopt};
  }
  return {false, false, std::nullopt};
}

Representation dual(const Representation& m, const AlgebraPtr& target_algebra) {
  AlgebraPtr op = opposite(m.algebra);
  if (!algebra_equal(op, target_algebra))
    throw ComputeError("dual: target algebra is not the opposite algebra");
  std::vector<Matrix> maps;
  for (const auto& f : m.arrow_maps) maps.push_back(transpose(f));
  return make_representation(target_algebra, m.dims, std::move(maps));
}

Representation dual(const Representation& m) {
  return dual(m, opposite(m.algebra));
}

StripResult strip_projective_summands(const Representation& m) {
  AlgebraPtr a = m.algebra;
  std::vector<Representation> projectives;
  for (int v = 0; v < a->vertex_count(); ++v)
    projectives.push_back(indecomposable_projective(a, v));

  Representation cur = m;
  Morphism incl = identity_morphism(m);   // cur -> m, split mono
  Morphism proj = identity_morphism(m);   // m -> cur, with proj . incl = id
  std::vector<int> split_vertices;
  std::vector<Morphism> sections;     // P_v -> m
  std::vector<Morphism> retractions;  // m -> P_v

  for (;;) {
    bool any = false;
    for (int v = 0; v < a->vertex_count(); ++v) {
      for (;;) {
        if (cur.total_dim() < projectives[v].total_dim()) break;
        HomSpace in = hom_basis(projectives[v], cur);
        HomSpace out = hom_basis(cur, projectives[v]);
        const Morphism* ff = nullptr;
        const Morphism* gg = nullptr;
        for (const auto& f : in.basis) {
          for (const auto& g : out.basis)
            if (is_invertible(compose(g, f))) { ff = &f; gg = &g; break; }
          if (ff) break;
        }
        if (!ff) break;
        Morphism u = compose(*ff, inverse_morphism(compose(*gg, *ff)));
        SubObject ker = kernel(*gg);
        // pi: cur -> ker with  incl_ker . pi = id - u . g
        Morphism e = compose(u, *gg);
        std::vector<Matrix> pim;
        for (int w = 0; w < a->vertex_count(); ++w) {
          Matrix rest = sub(Matrix::identity(a->field(), cur.dims[w]),
                            e.vertex_maps[w]);
          auto x = solve(ker.inclusion.vertex_maps[w], rest);
          if (!x) throw InternalError("splitting complement does not project");
          pim.push_back(*x);
        }
        Morphism pi = make_morphism(cur, ker.sub, std::move(pim));
        split_vertices.push_back(v);
        sections.push_back(compose(incl, u));
        retractions.push_back(compose(*gg, proj));
        incl = compose(incl, ker.inclusion);
        proj = compose(pi, proj);
        cur = ker.sub;
        any = true;
      }
    }
    if (!any) break;
  }

  StripResult r;
  r.stable_part = cur;
  r.projective_vertices = split_vertices;
  std::vector<Representation> parts;
  for (int v : split_vertices) parts.push_back(projectives[v]);
  r.projective_part = direct_sum(a, parts).sum;

  DirectSum ds = direct_sum(a, {r.stable_part, r.projective_part});
  std::vector<Matrix> amaps, dmaps;
  for (int w = 0; w < a->vertex_count(); ++w) {
    Matrix am = incl.vertex_maps[w];
    Matrix dm = proj.vertex_maps[w];
    for (std::size_t s = 0; s < sections.size(); ++s) {
      am = hstack(am, sections[s].vertex_maps[w]);
      dm = vstack(dm, retractions[s].vertex_maps[w]);
    }
    amaps.push_back(std::move(am));
    dmaps.push_back(std::move(dm));
  }
  r.assemble = make_morphism(ds.sum, m, std::move(amaps));
  r.disassemble = make_morphism(m, ds.sum, std::move(dmaps));
  for (int w = 0; w < a->vertex_count(); ++w) {
    Matrix id = Matrix::identity(a->field(), m.dims[w]);
    if (!(mul(r.assemble.vertex_maps[w], r.disassemble.vertex_maps[w]) == id))
      throw InternalError("strip witness is not an isomorphism");
  }
  return r;
}

Representation random_representation(AlgebraPtr a, int max_total,
                                     std::mt19937_64& rng) {
  int nv = a->vertex_count();
  std::vector<int> dims(nv, 0);
  std::uniform_int_distribution<int> ddist(0, std::max(1, max_total / 2));
  for (;;) {
    int total = 0;
    for (int v = 0; v < nv; ++v) {
      dims[v] = ddist(rng);
      total += dims[v];
    }
    if (total <= max_total) break;
  }

  Field f = a->field();
  std::uniform_int_distribution<std::uint32_t> cdist(0, f.modulus() - 1);
  std::vector<Matrix> maps;
  for (int k = 0; k < a->arrow_count(); ++k) {
    const Arrow& ar = a->quiver().arrows[k];
    maps.emplace_back(f, dims[ar.target], dims[ar.source]);
  }

  auto random_fill = [&](Matrix& x) {
    for (std::size_t i = 0; i < x.rows(); ++i)
      for (std::size_t j = 0; j < x.cols(); ++j) x(i, j) = cdist(rng);
  };

  Representation m{a, dims, maps};
  for (int k = 0; k < a->arrow_count(); ++k) {
    const Arrow& ar = a->quiver().arrows[k];
    int rows = dims[ar.target], cols = dims[ar.source];
    // relations that close exactly when arrow k is assigned
    std::vector<const std::vector<int>*> pending;
    bool linear = true;
    for (const auto& rel : a->relations()) {
      int mx = *std::max_element(rel.begin(), rel.end());
      if (mx != k) continue;
      pending.push_back(&rel);
      if (std::count(rel.begin(), rel.end(), k) != 1) linear = false;
    }
    if (pending.empty()) {
      random_fill(m.arrow_maps[k]);
      continue;
    }
    if (linear && rows * cols > 0) {
      // stack the constraints L X R = 0; unknown X is rows x cols
      std::vector<Matrix> blocks;
      for (const auto* relp : pending) {
        const auto& rel = *relp;
        std::size_t idx = 0;
        while (rel[idx] != k) ++idx;
        // earlier arrows apply first: start from the relation's source vertex
        int rel_src = a->quiver().arrows[rel[0]].source;
        Matrix rmat = Matrix::identity(f, std::size_t(dims[rel_src]));
        for (std::size_t t = 0; t < idx; ++t)
          rmat = mul(m.arrow_maps[rel[t]], rmat);
        Matrix lmat = Matrix::identity(f, rows);
        for (std::size_t t = idx + 1; t < rel.size(); ++t)
          lmat = mul(m.arrow_maps[rel[t]], lmat);
        Matrix c(f, lmat.rows() * rmat.cols(), std::size_t(rows) * cols);
        for (std::size_t i = 0; i < lmat.rows(); ++i)
          for (std::size_t j = 0; j < rmat.cols(); ++j)
            for (int u = 0; u < rows; ++u)
              for (int w = 0; w < cols; ++w)
                c(i * rmat.cols() + j, std::size_t(u) * cols + w) =
                    f.mul(lmat(i, u), rmat(w, j));
        blocks.push_back(std::move(c));
      }
      Matrix sys = blocks[0];
      for (std::size_t b = 1; b < blocks.size(); ++b) sys = vstack(sys, blocks[b]);
      Matrix basis = nullspace_basis(sys);
      std::vector<std::uint32_t> x(std::size_t(rows) * cols, 0);
      for (std::size_t b = 0; b < basis.cols(); ++b) {
        std::uint32_t c = cdist(rng);
        if (c == 0) continue;
        for (std::size_t i = 0; i < x.size(); ++i)
          x[i] = f.add(x[i], f.mul(c, basis(i, b)));
      }
      for (int i = 0; i < rows; ++i)
        for (int j = 0; j < cols; ++j)
          m.arrow_maps[k](i, j) = x[std::size_t(i) * cols + j];
      continue;
    }
    bool placed = false;
    for (int attempt = 0; attempt < 200 && !placed; ++attempt) {
      random_fill(m.arrow_maps[k]);
      placed = true;
      for (const auto* relp : pending)
        if (!relation_composite(m, *relp).is_zero()) { placed = false; break; }
    }
    if (!placed) m.arrow_maps[k] = Matrix(f, rows, cols);
  }
  return make_representation(a, m.dims, m.arrow_maps);
}

bool is_self_injective(const AlgebraPtr& a) {
  if (a->self_injective_) return *a->self_injective_;
  int n = a->vertex_count();
  std::vector<Representation> projs, injs;
  for (int v = 0; v < n; ++v) {
    projs.push_back(indecomposable_projective(a, v));
    injs.push_back(indecomposable_injective(a, v));
  }
  std::vector<std::vector<int>> cand(n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (is_isomorphic(projs[i], injs[j]).isomorphic) cand[i].push_back(j);
  // perfect matching by backtracking; quivers here are small
  std::vector<int> used(n, 0);
  std::vector<int> pick(n, -1);
  auto match = [&](auto&& self, int i) -> bool {
    if (i == n) return true;
    for (int j : cand[i]) {
      if (used[j]) continue;
      used[j] = 1;
      pick[i] = j;
      if (self(self, i + 1)) return true;
      used[j] = 0;
    }
    return false;
  };
  a->self_injective_ = match(match, 0);
  return *a->self_injective_;
}

}  // namespace gor
