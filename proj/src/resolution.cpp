#include "resolution.hpp"

#include <cmath>

namespace gor {

RadicalTop radical_and_top(const Representation& m) {
  const AlgebraPtr& a = m.algebra;
  Field f = a->field();
  int nv = a->vertex_count();
  std::vector<Matrix> incl;
  std::vector<int> rdims, tdims;
  std::vector<Matrix> qmaps, sections;
  for (int v = 0; v < nv; ++v) {
    Matrix cols(f, m.dims[v], 0);
    for (int k = 0; k < a->arrow_count(); ++k)
      if (a->quiver().arrows[k].target == v)
        cols = hstack(cols, m.arrow_maps[k]);
    Matrix b = column_space_basis(cols);
    auto ext = extend_to_basis(b);
    incl.push_back(b);
    rdims.push_back(int(b.cols()));
    tdims.push_back(int(ext.quotient.rows()));
    qmaps.push_back(ext.quotient);
    sections.push_back(ext.complement);
  }
  std::vector<Matrix> rmaps, tmaps;
  for (int k = 0; k < a->arrow_count(); ++k) {
    const Arrow& ar = a->quiver().arrows[k];
    auto x = solve(incl[ar.target], mul(m.arrow_maps[k], incl[ar.source]));
    if (!x) throw InternalError("radical is not closed under the arrow action");
    rmaps.push_back(*x);
    // arrows land in the radical, so the induced map on tops vanishes
    Matrix t = mul(qmaps[ar.target], mul(m.arrow_maps[k], sections[ar.source]));
    if (!t.is_zero())
      throw InternalError("top has a nonzero induced arrow action");
    tmaps.push_back(std::move(t));
  }
  RadicalTop r;
  r.radical = make_representation(a, rdims, std::move(rmaps));
  r.radical_inclusion = make_morphism(r.radical, m, std::move(incl));
  r.top = make_representation(a, tdims, std::move(tmaps));
  r.top_quotient = make_morphism(m, r.top, qmaps);
  r.top_section = sections;
  return r;
}

Cover projective_cover(const Representation& m) {
  const AlgebraPtr& a = m.algebra;
  Field f = a->field();
  int nv = a->vertex_count();
  RadicalTop rt = radical_and_top(m);

  Cover c;
  std::vector<Representation> parts;
  std::vector<std::vector<Matrix>> part_maps;  // per part, per vertex block of the cover
  for (int v = 0; v < nv; ++v) {
    for (int j = 0; j < rt.top.dims[v]; ++j) {
      Representation p = indecomposable_projective(a, v);
      // generator: a lift of the j-th top basis vector at v
      Matrix gen(f, m.dims[v], 1);
      for (int i = 0; i < m.dims[v]; ++i) gen(i, 0) = rt.top_section[v](i, j);
      std::vector<Matrix> blocks;
      for (int w = 0; w < nv; ++w) {
        Matrix blk(f, m.dims[w], p.dims[w]);
        const auto& ids = a->paths_from()[v][w];
        for (std::size_t col = 0; col < ids.size(); ++col) {
          Matrix img = apply_path(m, a->path_basis()[ids[col]], gen);
          for (int i = 0; i < m.dims[w]; ++i) blk(i, col) = img(i, 0);
        }
        blocks.push_back(std::move(blk));
      }
      c.vertices.push_back(v);
      parts.push_back(std::move(p));
      part_maps.push_back(std::move(blocks));
    }
  }
  DirectSum ds = direct_sum(a, parts);
  c.proj = ds.sum;
  std::vector<Matrix> cover_maps;
  for (int w = 0; w < nv; ++w) {
    Matrix cm(f, m.dims[w], 0);
    for (std::size_t p = 0; p < parts.size(); ++p)
      cm = hstack(cm, part_maps[p][w]);
    cover_maps.push_back(std::move(cm));
  }
  c.cover = make_morphism(c.proj, m, std::move(cover_maps));
  for (int w = 0; w < nv; ++w) {
    if (int(rank(c.cover.vertex_maps[w])) != m.dims[w])
      throw InternalError("projective cover is not surjective");
    // minimality: the cover induces an isomorphism on tops
    if (int(rank(mul(rt.top_quotient.vertex_maps[w], c.cover.vertex_maps[w]))) !=
        rt.top.dims[w])
      throw InternalError("projective cover is not minimal");
  }
  return c;
}

SubObject syzygy(const Representation& m) {
  return kernel(projective_cover(m).cover);
}

Resolution::Resolution(Representation m) : module_(std::move(m)) {
  if (module_.total_dim() == 0) complete_ = true;
}

void Resolution::step() {
  int t = int(terms_.size());
  const Representation& target = t == 0 ? module_ : syzygies_[t - 1];
  Cover c = projective_cover(target);
  SubObject k = kernel(c.cover);
  ResolutionTerm term;
  term.vertices = c.vertices;
  term.proj = c.proj;
  term.cover = c.cover;
  term.boundary = t == 0 ? c.cover : compose(syzygy_incl_[t - 1], c.cover);
  terms_.push_back(std::move(term));
  syzygies_.push_back(k.sub);
  syzygy_incl_.push_back(k.inclusion);
  if (k.sub.total_dim() == 0) complete_ = true;
}

void Resolution::extend(int horizon) {
  while (!complete_ && int(terms_.size()) <= horizon) step();
}

int Resolution::projective_dimension() const {
  if (!complete_) throw ComputeError("resolution not known to be finite");
  return terms_.empty() ? 0 : int(terms_.size()) - 1;
}

Representation Resolution::term_proj(int t) {
  if (t < 0) throw ComputeError("negative resolution degree");
  extend(t);
  if (t < int(terms_.size())) return terms_[t].proj;
  return zero_representation(module_.algebra);
}

std::optional<Morphism> Resolution::boundary(int t) {
  if (t < 1) throw ComputeError("boundary degree must be >= 1");
  extend(t);
  if (t < int(terms_.size())) return terms_[t].boundary;
  return std::nullopt;
}

Representation Resolution::syzygy_rep(int j) {
  if (j < 0) throw ComputeError("negative syzygy degree");
  if (j == 0) return module_;
  extend(j - 1);
  if (j - 1 < int(syzygies_.size())) return syzygies_[j - 1];
  return zero_representation(module_.algebra);
}

const Morphism& Resolution::syzygy_inclusion(int j) {
  if (j < 1) throw ComputeError("syzygy inclusion needs degree >= 1");
  extend(j - 1);
  if (j - 1 >= int(syzygy_incl_.size()))
    throw ComputeError("syzygy inclusion past the end of a finite resolution");
  return syzygy_incl_[j - 1];
}

const Morphism& Resolution::cover_map(int t) {
  extend(t);
  if (t >= int(terms_.size()))
    throw ComputeError("cover past the end of a finite resolution");
  return terms_[t].cover;
}

std::vector<int> Resolution::dims_sequence(int horizon) {
  extend(horizon);
  std::vector<int> d;
  for (int t = 0; t <= horizon && t < int(terms_.size()); ++t)
    d.push_back(terms_[t].proj.total_dim());
  return d;
}

int ext_dim_on(Resolution& res, const Representation& n, int i) {
  if (i < 1) throw ComputeError("Ext degree must be >= 1");
  if (!algebra_equal(res.module().algebra, n.algebra))
    throw ComputeError("Ext: modules over different algebras");
  res.extend(i + 1);
  Representation p_i = res.term_proj(i);
  if (p_i.total_dim() == 0) return 0;
  HomSpace h_i = hom_basis(p_i, n);
  Field f = n.algebra->field();

  std::size_t r2 = 0;
  if (auto d = res.boundary(i + 1)) {
    std::vector<std::vector<std::uint32_t>> cols;
    for (const auto& phi : h_i.basis)
      cols.push_back(flatten_morphism(compose(phi, *d)));
    std::size_t amb = cols.empty() ? 0 : cols[0].size();
    r2 = rank(Matrix::from_columns(f, amb, cols));
  }
  std::size_t r1 = 0;
  {
    Representation p_prev = res.term_proj(i - 1);
    if (p_prev.total_dim() > 0) {
      auto d = res.boundary(i);
      if (d) {
        HomSpace h_prev = hom_basis(p_prev, n);
        std::vector<std::vector<std::uint32_t>> cols;
        for (const auto& psi : h_prev.basis)
          cols.push_back(flatten_morphism(compose(psi, *d)));
        std::size_t amb = cols.empty() ? 0 : cols[0].size();
        r1 = rank(Matrix::from_columns(f, amb, cols));
      }
    }
  }
  int ext = int(h_i.basis.size()) - int(r2) - int(r1);
  if (ext < 0) throw InternalError("negative Ext dimension");
  return ext;
}

int ext_dim(const Representation& m, const Representation& n, int i) {
  Resolution res(m);
  return ext_dim_on(res, n, i);
}

std::optional<int> first_ext_nonvanishing_against_regular(Resolution& res, int h) {
  const AlgebraPtr& a = res.module().algebra;
  std::vector<Representation> projs;
  for (int v = 0; v < a->vertex_count(); ++v)
    projs.push_back(indecomposable_projective(a, v));
  Representation regular = direct_sum(a, projs).sum;
  for (int j = 1; j <= h; ++j)
    if (ext_dim_on(res, regular, j) != 0) return j;
  return std::nullopt;
}

bool ext_vanishes_against_regular(const Representation& m, int h) {
  Resolution res(m);
  return !first_ext_nonvanishing_against_regular(res, h).has_value();
}

Coresolution injective_coresolution(const Representation& m, int horizon) {
  AlgebraPtr op = opposite(m.algebra);
  Representation d = dual(m, op);
  Coresolution c{op, d, Resolution(d)};
  c.res.extend(horizon);
  return c;
}

Representation Coresolution::cosyzygy(int j, const AlgebraPtr& original) {
  return dual(res.syzygy_rep(j), original);
}

ComplexityEstimate complexity_estimate(const Representation& m, int horizon,
                                       const IsoOptions& opt) {
  if (horizon < 4) throw ComputeError("complexity estimate needs horizon >= 4");
  Resolution res(m);
  res.extend(horizon);
  ComplexityEstimate e;
  e.dims_sequence = res.dims_sequence(horizon);
  if (res.finite() && res.term_count() <= horizon + 1) {
    e.classification = ComplexityClass::finite_projective_dimension;
    e.certified = true;
    return e;
  }
  for (int d = 1; d <= horizon; ++d)
    for (int d2 = 0; d2 < d; ++d2) {
      IsoResult iso = is_isomorphic(res.syzygy_rep(d), res.syzygy_rep(d2), opt);
      if (iso.isomorphic) {
        e.classification = ComplexityClass::bounded_periodic;
        e.certified = true;
        e.period = d - d2;
        e.period_from = d2;
        return e;
      }
    }
  // least-squares slope of log dim against log degree, degrees 1..horizon
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  int cnt = 0;
  for (int t = 1; t < int(e.dims_sequence.size()); ++t) {
    double x = std::log(double(t));
    double y = std::log(double(e.dims_sequence[t]));
    sx += x; sy += y; sxx += x * x; sxy += x * y;
    ++cnt;
  }
  double denom = cnt * sxx - sx * sx;
  double slope = denom == 0 ? 0.0 : (cnt * sxy - sx * sy) / denom;
  e.growth_exponent = slope;
  e.classification = slope >= 0.25 ? ComplexityClass::growth
                                   : ComplexityClass::inconclusive;
  e.certified = false;
  return e;
}

const char* complexity_class_name(ComplexityClass c) {
  switch (c) {
    case ComplexityClass::finite_projective_dimension:
      return "finite_projective_dimension";
    case ComplexityClass::bounded_periodic:
      return "bounded_periodic";
    case ComplexityClass::growth:
      return "growth";
    case ComplexityClass::inconclusive:
      return "inconclusive";
  }
  return "inconclusive";
}

}  // namespace gor
