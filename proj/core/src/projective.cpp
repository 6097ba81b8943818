#include "morphdet/projective.hpp"

#include "morphdet/error.hpp"

namespace morphdet {

namespace {

// Offset of summand i's block inside the vertex-x space of ⊕ P(vertices).
std::size_t projective_block_offset(const BoundQuiverAlgebra& alg, const std::vector<std::size_t>& vertices,
                                    std::size_t i, std::size_t x) {
  std::size_t off = 0;
  for (std::size_t k = 0; k < i; ++k) off += alg.paths_between(vertices[k], x).size();
  return off;
}

std::size_t injective_block_offset(const BoundQuiverAlgebra& alg, const std::vector<std::size_t>& vertices,
                                   std::size_t i, std::size_t x) {
  std::size_t off = 0;
  for (std::size_t k = 0; k < i; ++k) off += alg.paths_between(x, vertices[k]).size();
  return off;
}

}  // namespace

Representation indec_projective(const AlgebraPtr& algebra, std::size_t v) {
  const auto& alg = *algebra;
  if (v >= alg.vertex_count()) throw InputError("indec_projective: unknown vertex");
  std::vector<std::size_t> dims(alg.vertex_count());
  for (std::size_t w = 0; w < dims.size(); ++w) dims[w] = alg.paths_between(v, w).size();
  std::vector<Matrix> maps;
  for (std::size_t a = 0; a < alg.arrow_count(); ++a) {
    const auto& arrow = alg.quiver().arrow(a);
    Matrix m(alg.field(), dims[arrow.target], dims[arrow.source]);
    const auto& cols = alg.paths_between(v, arrow.source);
    for (std::size_t c = 0; c < cols.size(); ++c) {
      Path p = alg.path(cols[c]);
      p.arrows.push_back(a);
      p.target = arrow.target;
      if (auto idx = alg.find(p)) m(alg.local_index(*idx), c) = 1;
    }
    maps.push_back(std::move(m));
  }
  return make_unchecked(algebra, std::move(dims), std::move(maps));
}

Representation indec_injective(const AlgebraPtr& algebra, std::size_t v) {
  const auto& alg = *algebra;
  if (v >= alg.vertex_count()) throw InputError("indec_injective: unknown vertex");
  std::vector<std::size_t> dims(alg.vertex_count());
  for (std::size_t w = 0; w < dims.size(); ++w) dims[w] = alg.paths_between(w, v).size();
  std::vector<Matrix> maps;
  for (std::size_t a = 0; a < alg.arrow_count(); ++a) {
    const auto& arrow = alg.quiver().arrow(a);
    Matrix m(alg.field(), dims[arrow.target], dims[arrow.source]);
    // Row q (path target -> v), column s (path source -> v): 1 iff s = a·q.
    const auto& rows = alg.paths_between(arrow.target, v);
    for (std::size_t r = 0; r < rows.size(); ++r) {
      Path s = alg.path(rows[r]);
      s.arrows.insert(s.arrows.begin(), a);
      s.source = arrow.source;
      if (auto idx = alg.find(s)) m(r, alg.local_index(*idx)) = 1;
    }
    maps.push_back(std::move(m));
  }
  return make_unchecked(algebra, std::move(dims), std::move(maps));
}

Representation regular_module(const AlgebraPtr& algebra) {
  std::vector<std::size_t> all(algebra->vertex_count());
  for (std::size_t v = 0; v < all.size(); ++v) all[v] = v;
  return projective_sum(algebra, all).module;
}

ProjectiveModule projective_sum(const AlgebraPtr& algebra, std::vector<std::size_t> vertices) {
  std::vector<Representation> parts;
  for (auto v : vertices) parts.push_back(indec_projective(algebra, v));
  return {direct_sum_module(parts, algebra), std::move(vertices)};
}

InjectiveModule injective_sum(const AlgebraPtr& algebra, std::vector<std::size_t> vertices) {
  std::vector<Representation> parts;
  for (auto v : vertices) parts.push_back(indec_injective(algebra, v));
  return {direct_sum_module(parts, algebra), std::move(vertices)};
}

std::size_t projective_top_index(const ProjectiveModule& p, std::size_t i) {
  const auto& alg = *p.module.algebra();
  const auto v = p.summands.at(i);
  return projective_block_offset(alg, p.summands, i, v) + alg.local_index(alg.trivial_path(v));
}

std::size_t injective_socle_index(const InjectiveModule& q, std::size_t i) {
  const auto& alg = *q.module.algebra();
  const auto v = q.summands.at(i);
  return injective_block_offset(alg, q.summands, i, v) + alg.local_index(alg.trivial_path(v));
}

RepMorphism map_from_projective(const ProjectiveModule& p, const Representation& m,
                                const std::vector<std::vector<Residue>>& elements) {
  const auto& alg = *m.algebra();
  if (elements.size() != p.summands.size()) throw std::invalid_argument("map_from_projective: element count");
  std::vector<Matrix> maps;
  for (std::size_t x = 0; x < alg.vertex_count(); ++x) maps.emplace_back(alg.field(), m.dim(x), p.module.dim(x));
  for (std::size_t i = 0; i < p.summands.size(); ++i) {
    const auto v = p.summands[i];
    if (elements[i].size() != m.dim(v)) throw std::invalid_argument("map_from_projective: element length");
    const auto elem = Matrix::column_vector(alg.field(), elements[i]);
    for (std::size_t x = 0; x < alg.vertex_count(); ++x) {
      const auto off = projective_block_offset(alg, p.summands, i, x);
      const auto& paths = alg.paths_between(v, x);
      for (std::size_t c = 0; c < paths.size(); ++c) {
        const auto image = m.path_map(alg.path(paths[c])) * elem;
        for (std::size_t r = 0; r < m.dim(x); ++r) maps[x](r, off + c) = image(r, 0);
      }
    }
  }
  return RepMorphism::unchecked(p.module, m, std::move(maps));
}

ProjectiveMap projective_map_of(const RepMorphism& f, const ProjectiveModule& domain,
                                const ProjectiveModule& codomain) {
  if (!(f.source() == domain.module) || !(f.target() == codomain.module))
    throw PreconditionError("morphism is not between the recorded projective decompositions");
  const auto& alg = *f.source().algebra();
  ProjectiveMap out{f.source().algebra(), domain.summands, codomain.summands, {}};
  out.components.assign(codomain.summands.size(),
                        std::vector<std::vector<Residue>>(domain.summands.size(),
                                                          std::vector<Residue>(alg.dimension(), 0)));
  for (std::size_t i = 0; i < domain.summands.size(); ++i) {
    const auto v = domain.summands[i];
    const auto col = projective_top_index(domain, i);
    for (std::size_t j = 0; j < codomain.summands.size(); ++j) {
      const auto w = codomain.summands[j];
      const auto off = projective_block_offset(alg, codomain.summands, j, v);
      const auto& paths = alg.paths_between(w, v);
      for (std::size_t k = 0; k < paths.size(); ++k) out.components[j][i][paths[k]] = f.map(v)(off + k, col);
    }
  }
  return out;
}

RepMorphism realize(const ProjectiveMap& f) {
  const auto& alg = *f.algebra;
  const auto field = alg.field();
  auto dom = projective_sum(f.algebra, f.domain);
  auto cod = projective_sum(f.algebra, f.codomain);
  std::vector<Matrix> maps;
  for (std::size_t x = 0; x < alg.vertex_count(); ++x) {
    Matrix m(field, cod.module.dim(x), dom.module.dim(x));
    for (std::size_t i = 0; i < f.domain.size(); ++i) {
      const auto coff = projective_block_offset(alg, f.domain, i, x);
      const auto& cols = alg.paths_between(f.domain[i], x);
      for (std::size_t j = 0; j < f.codomain.size(); ++j) {
        const auto roff = projective_block_offset(alg, f.codomain, j, x);
        const auto& coeffs = f.components[j][i];
        for (auto q : alg.paths_between(f.codomain[j], f.domain[i])) {
          if (coeffs[q] == 0) continue;
          for (std::size_t c = 0; c < cols.size(); ++c)
            if (auto qp = alg.concatenate(q, cols[c]))
              m(roff + alg.local_index(*qp), coff + c) = field.add(m(roff + alg.local_index(*qp), coff + c), coeffs[q]);
        }
      }
    }
    maps.push_back(std::move(m));
  }
  return RepMorphism::unchecked(dom.module, cod.module, std::move(maps));
}

RepMorphism nakayama(const ProjectiveMap& f) {
  const auto& alg = *f.algebra;
  const auto field = alg.field();
  auto dom = injective_sum(f.algebra, f.domain);
  auto cod = injective_sum(f.algebra, f.codomain);
  std::vector<Matrix> maps;
  for (std::size_t x = 0; x < alg.vertex_count(); ++x) {
    Matrix m(field, cod.module.dim(x), dom.module.dim(x));
    for (std::size_t i = 0; i < f.domain.size(); ++i) {
      const auto coff = injective_block_offset(alg, f.domain, i, x);
      for (std::size_t j = 0; j < f.codomain.size(); ++j) {
        const auto roff = injective_block_offset(alg, f.codomain, j, x);
        const auto& coeffs = f.components[j][i];
        const auto& rows = alg.paths_between(x, f.codomain[j]);
        // Entry (r, s) accumulates c_q whenever s = r·q.
        for (auto q : alg.paths_between(f.codomain[j], f.domain[i])) {
          if (coeffs[q] == 0) continue;
          for (std::size_t r = 0; r < rows.size(); ++r)
            if (auto rq = alg.concatenate(rows[r], q))
              m(roff + r, coff + alg.local_index(*rq)) = field.add(m(roff + r, coff + alg.local_index(*rq)), coeffs[q]);
        }
      }
    }
    maps.push_back(std::move(m));
  }
  return RepMorphism::unchecked(dom.module, cod.module, std::move(maps));
}

ProjectiveMap dual(const ProjectiveMap& f, const AlgebraPtr& opposite) {
  const auto& alg = *f.algebra;
  if (!(*alg.opposite() == *opposite)) throw InternalError("dual: algebra is not the opposite");
  ProjectiveMap out{opposite, f.codomain, f.domain, {}};
  out.components.assign(f.domain.size(), std::vector<std::vector<Residue>>(
                                             f.codomain.size(), std::vector<Residue>(opposite->dimension(), 0)));
  for (std::size_t j = 0; j < f.codomain.size(); ++j)
    for (std::size_t i = 0; i < f.domain.size(); ++i)
      for (auto q : alg.paths_between(f.codomain[j], f.domain[i]))
        if (auto c = f.components[j][i][q]; c != 0) out.components[i][j][alg.reversed_path_index(q, *opposite)] = c;
  return out;
}

RepMorphism nakayama_on_projective_morphism(const RepMorphism& f, const ProjectiveModule& domain,
                                            const ProjectiveModule& codomain) {
  return nakayama(projective_map_of(f, domain, codomain));
}

Residue nakayama_trace(const RepMorphism& g, const ProjectiveModule& p, const InjectiveModule& q) {
  if (p.summands != q.summands) throw std::invalid_argument("nakayama_trace: summand lists differ");
  const auto& field = g.source().field();
  Residue t = 0;
  for (std::size_t i = 0; i < p.summands.size(); ++i)
    t = field.add(t, g.map(p.summands[i])(injective_socle_index(q, i), projective_top_index(p, i)));
  return t;
}

}  // namespace morphdet
