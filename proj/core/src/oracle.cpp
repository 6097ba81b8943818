#include "morphdet/oracle.hpp"

#include <cmath>
#include <map>
#include <random>

#include "morphdet/error.hpp"

namespace morphdet {

namespace {

bool satisfies_relations(const Representation& m) {
  const auto& alg = *m.algebra();
  for (const auto& rel : alg.relations()) {
    Path p{alg.quiver().arrow(rel.front()).source, alg.quiver().arrow(rel.back()).target, rel};
    if (!m.path_map(p).is_zero()) return false;
  }
  return true;
}

}  // namespace

std::vector<Representation> enumerate_test_modules(const AlgebraPtr& algebra, const std::vector<std::size_t>& max_dims,
                                                   std::size_t cap) {
  const auto& alg = *algebra;
  const auto field = alg.field();
  const auto p = static_cast<double>(field.modulus());
  if (max_dims.size() != alg.vertex_count()) throw InputError("dimension bounds must cover every vertex");

  std::vector<std::vector<std::size_t>> dim_vectors{{}};
  for (auto bound : max_dims) {
    std::vector<std::vector<std::size_t>> next;
    for (const auto& prefix : dim_vectors)
      for (std::size_t d = 0; d <= bound; ++d) {
        auto v = prefix;
        v.push_back(d);
        next.push_back(std::move(v));
      }
    dim_vectors = std::move(next);
  }
  double total = 0;
  for (const auto& dims : dim_vectors) {
    double entries = 0;
    for (const auto& a : alg.quiver().arrows()) entries += static_cast<double>(dims[a.source] * dims[a.target]);
    total += std::pow(p, entries);
  }
  if (total > static_cast<double>(cap))
    throw PreconditionError("too many modules to enumerate (" + std::to_string(static_cast<long long>(total)) +
                            " assignments); use smaller dimension bounds");

  std::vector<Representation> classes;
  std::map<std::vector<std::size_t>, std::vector<std::size_t>> buckets;
  for (const auto& dims : dim_vectors) {
    std::vector<std::size_t> sizes;
    std::size_t entries = 0;
    for (const auto& a : alg.quiver().arrows()) {
      sizes.push_back(dims[a.source] * dims[a.target]);
      entries += sizes.back();
    }
    std::vector<Residue> digits(entries, 0);
    for (;;) {
      std::vector<Matrix> maps;
      std::size_t off = 0;
      for (std::size_t ai = 0; ai < alg.arrow_count(); ++ai) {
        const auto& a = alg.quiver().arrow(ai);
        maps.emplace_back(field, dims[a.target], dims[a.source],
                          std::vector<Residue>(digits.begin() + static_cast<std::ptrdiff_t>(off),
                                               digits.begin() + static_cast<std::ptrdiff_t>(off + sizes[ai])));
        off += sizes[ai];
      }
      auto m = make_unchecked(algebra, dims, std::move(maps));
      if (satisfies_relations(m)) {
        auto key = fingerprint(m);
        auto& bucket = buckets[key];
        bool seen = false;
        for (auto idx : bucket)
          if (is_isomorphic(classes[idx], m)) {
            seen = true;
            break;
          }
        if (!seen) {
          bucket.push_back(classes.size());
          classes.push_back(std::move(m));
        }
      }
      std::size_t i = 0;
      while (i < digits.size() && ++digits[i] == field.modulus()) digits[i++] = 0;
      if (i == digits.size()) break;
    }
  }
  return classes;
}

std::optional<RepMorphism> refute_determination(const RepMorphism& a, const Representation& c,
                                                const std::vector<Representation>& family) {
  const auto& y = a.target();
  const auto& field = y.field();
  HomSpace cy(c, y);
  HomSpace cx(c, a.source());
  // H = Im Hom(C, a) in Hom(C, Y)-coordinates.
  Matrix h(field, cy.dim(), cx.dim());
  for (std::size_t i = 0; i < cx.dim(); ++i) {
    const auto v = cy.coordinates(compose(a, cx[i]));
    for (std::size_t r = 0; r < cy.dim(); ++r) h(r, i) = v[r];
  }
  const auto hq = quotient_map(canonical_span(h), cy.dim()).projection;
  for (const auto& member : family) {
    const auto xp = member.rebind(y.algebra());
    HomSpace xy(xp, y);
    if (xy.dim() == 0) continue;
    HomSpace cxp(c, xp);
    HomSpace xpx(xp, a.source());
    // Condition (2) is linear in α': α'∘φ_k ∈ H for every basis φ_k of Hom(C, X').
    Matrix cond(field, 0, xy.dim());
    for (const auto& phi : cxp.basis()) {
      Matrix block(field, cy.dim(), xy.dim());
      for (std::size_t j = 0; j < xy.dim(); ++j) {
        const auto v = cy.coordinates(compose(xy[j], phi));
        for (std::size_t r = 0; r < cy.dim(); ++r) block(r, j) = v[r];
      }
      cond = vstack(cond, hq * block);
    }
    const auto admissible = cond.rows() == 0 ? Matrix::identity(field, xy.dim()) : kernel_basis(cond);
    // Morphisms X' -> Y factoring through a.
    Matrix factoring(field, xy.dim(), xpx.dim());
    for (std::size_t i = 0; i < xpx.dim(); ++i) {
      const auto v = xy.coordinates(compose(a, xpx[i]));
      for (std::size_t r = 0; r < xy.dim(); ++r) factoring(r, i) = v[r];
    }
    for (std::size_t k = 0; k < admissible.cols(); ++k) {
      const auto alpha = admissible.column(k);
      if (!in_span(factoring, alpha)) return xy.element(alpha);
    }
  }
  return std::nullopt;
}

Representation random_representation(const AlgebraPtr& algebra, const std::vector<std::size_t>& dims,
                                     std::uint64_t seed) {
  const auto& alg = *algebra;
  if (!alg.relations().empty()) throw PreconditionError("random_representation requires an algebra without relations");
  if (dims.size() != alg.vertex_count()) throw InputError("dimension vector has the wrong length");
  std::mt19937_64 rng(seed);
  const auto p = alg.field().modulus();
  std::vector<Matrix> maps;
  for (const auto& a : alg.quiver().arrows()) {
    Matrix m(alg.field(), dims[a.target], dims[a.source]);
    for (std::size_t r = 0; r < m.rows(); ++r)
      for (std::size_t c = 0; c < m.cols(); ++c) m(r, c) = static_cast<Residue>(rng() % p);
    maps.push_back(std::move(m));
  }
  return Representation(algebra, dims, std::move(maps));
}

RepMorphism random_morphism(const Representation& m, const Representation& n, std::uint64_t seed) {
  HomSpace h(m, n);
  std::mt19937_64 rng(seed);
  std::vector<Residue> c(h.dim());
  for (auto& v : c) v = static_cast<Residue>(rng() % m.field().modulus());
  return h.element(c);
}

}  // namespace morphdet
