#pragma once

#include <algorithm>
#include <array>
#include <cstddef>
#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "strathom/quiver.hpp"
#include "strathom/strat.hpp"

namespace strathom::gen {

/// Seeded generators for property tests.
class Rng {
 public:
  explicit Rng(std::uint32_t seed) : g_(seed) {}
  std::size_t below(std::size_t n) { return n ? g_() % n : 0; }
  long small(long lo, long hi) { return lo + static_cast<long>(g_() % static_cast<std::uint32_t>(hi - lo + 1)); }
  bool coin(unsigned num = 1, unsigned den = 2) { return g_() % den < num; }
  std::mt19937& raw() { return g_; }

 private:
  std::mt19937 g_;
};

struct RandomQuiver {
  QuiverPresentation quiver;
  std::vector<std::vector<std::size_t>> arrow_count;  // [s][t]
};

/// Acyclic quiver on 2..max_vertices vertices, arrows only from i to j > i.
/// Zero relations of length two are added with probability rel_prob/4.
inline RandomQuiver random_acyclic_quiver(Rng& r, std::size_t max_vertices = 4, std::size_t max_arrows = 5,
                                          unsigned rel_prob = 0) {
  RandomQuiver out;
  const std::size_t n = 2 + r.below(max_vertices - 1);
  std::vector<std::string> vs;
  for (std::size_t i = 0; i < n; ++i) vs.push_back(std::to_string(i + 1));
  out.arrow_count.assign(n, std::vector<std::size_t>(n, 0));
  std::vector<std::array<std::string, 3>> arrows;
  const std::size_t na = 1 + r.below(max_arrows);
  for (std::size_t k = 0; k < na; ++k) {
    std::size_t s = r.below(n - 1);
    std::size_t t = s + 1 + r.below(n - 1 - s);
    arrows.push_back({"x" + std::to_string(k + 1), vs[s], vs[t]});
    ++out.arrow_count[s][t];
  }
  std::vector<std::string> rels;
  for (const auto& a : arrows)
    for (const auto& b : arrows)
      if (a[2] == b[1] && r.coin(rel_prob, 4)) rels.push_back(b[0] + "*" + a[0]);
  out.quiver = make_quiver(vs, arrows, rels);
  return out;
}

template <class K>
Mat<K> random_matrix(Rng& r, std::size_t rows, std::size_t cols, long lo = -2, long hi = 2) {
  Mat<K> m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = K::from_int(r.small(lo, hi));
  return m;
}

/// Random representation of a quiver without relations.
template <class K>
ModulePtr<K> random_representation(Rng& r, const AlgebraPtr<K>& a, std::size_t max_dim = 2) {
  const auto& q = a->quiver()->presentation;
  std::vector<std::size_t> dims;
  for (std::size_t v = 0; v < q.vertices.size(); ++v) dims.push_back(r.below(max_dim + 1));
  std::vector<Mat<K>> mats;
  for (const auto& ar : q.arrows) mats.push_back(random_matrix<K>(r, dims[ar.target], dims[ar.source]));
  return quiver_module(a, dims, mats);
}

/// Quotient of an indecomposable projective by the submodule generated by
/// a few random vectors; valid under any relations.
template <class K>
ModulePtr<K> random_quotient_of_projective(Rng& r, const AlgebraPtr<K>& a) {
  auto p = indec_projective(a, r.below(a->idempotents().size()));
  auto rad = radical_subspace(*p);
  std::vector<Vec<K>> gens;
  const std::size_t k = rad.dim() ? r.below(3) : 0;
  for (std::size_t i = 0; i < k; ++i) {
    auto v = zero_vec<K>(p->dim());
    for (const auto& b : rad.basis()) axpy(v, K::from_int(r.small(-1, 1)), b);
    gens.push_back(v);
  }
  return quotient_module(p, generated_subspace(*p, gens)).module;
}

/// Random module: a simple, a projective, a quotient of a projective, or
/// (without relations) a random representation.
template <class K>
ModulePtr<K> random_module(Rng& r, const AlgebraPtr<K>& a, bool hereditary) {
  switch (r.below(hereditary ? 4 : 3)) {
    case 0: return simple_module(a, r.below(a->idempotents().size()));
    case 1: return indec_projective(a, r.below(a->idempotents().size()));
    case 2: return random_quotient_of_projective(r, a);
    default: return random_representation(r, a);
  }
}

/// Sum of a random nonempty proper subset of the vertex idempotents.
template <class K>
Vec<K> random_vertex_idempotent(Rng& r, const Algebra<K>& a) {
  const std::size_t n = a.idempotents().size();
  std::size_t mask = 1 + r.below((std::size_t{1} << n) - 2);
  auto e = a.zero();
  for (std::size_t v = 0; v < n; ++v)
    if (mask >> v & 1) e = e + a.idempotents()[v];
  return e;
}

/// A -> A/I for I generated by random vertex idempotents and arrows.
template <class K>
RingHom<K> random_quotient_map(Rng& r, const AlgebraPtr<K>& a) {
  while (true) {
    std::vector<Vec<K>> gens;
    const auto& q = a->quiver()->presentation;
    for (std::size_t v = 0; v < q.vertices.size(); ++v)
      if (r.coin(1, 4)) gens.push_back(a->idempotents()[v]);
    for (const auto& ar : q.arrows)
      if (r.coin(1, 3)) gens.push_back(element(*a, ar.name));
    auto i = ideal_generated(a, gens);
    if (i.contains(a->unit())) continue;
    return quotient_by_ideal(a, i).projection;
  }
}

template <class K>
Vec<K> basis_coords(const std::vector<Vec<K>>& basis, const Subspace<K>&, const Vec<K>& z) {
  auto c = solve(Mat<K>::from_rows(basis, z.size()).transpose(), z);
  if (!c) throw DomainError("vector outside the span");
  return *c;
}

/// Inclusion of the subalgebra spanned by `basis` (closed under products and
/// containing the unit); labels are the target's element strings.
template <class K>
RingHom<K> subalgebra_inclusion(const AlgebraPtr<K>& b, const std::vector<Vec<K>>& basis,
                                const std::vector<Vec<K>>& idempotents) {
  Subspace<K> s = Subspace<K>::span(basis, b->dim());
  if (s.dim() != basis.size()) throw DomainError("subalgebra basis is not independent");
  std::vector<std::string> labels;
  for (const auto& x : basis) labels.push_back(b->element_to_string(x));
  std::vector<Vec<K>> table;
  for (const auto& x : basis)
    for (const auto& y : basis) {
      auto z = b->mul(x, y);
      if (!s.contains(z)) throw DomainError("span is not closed under products");
      table.push_back(basis_coords(basis, s, z));
    }
  typename Algebra<K>::Extras ex;
  if (!idempotents.empty()) {
    std::vector<Vec<K>> idem;
    for (const auto& e : idempotents) idem.push_back(basis_coords(basis, s, e));
    ex.idempotents = std::move(idem);
  }
  auto a = make_algebra<K>(labels, table, basis_coords(basis, s, b->unit()), ex);
  return RingHom<K>(a, b, Mat<K>::from_rows(basis, b->dim()));
}

/// Incidence algebra of a random connected order on {0..n-1} refining the
/// natural order, with its inclusion into M_n.
template <class K>
RingHom<K> random_incidence_inclusion(Rng& r, std::size_t n) {
  auto m = matrix_algebra<K>(n);
  std::vector<std::vector<bool>> le(n, std::vector<bool>(n, false));
  while (true) {
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) le[i][j] = i == j || (i < j && r.coin());
    // connected comparability graph
    std::vector<bool> seen(n, false);
    std::vector<std::size_t> stack{0};
    seen[0] = true;
    while (!stack.empty()) {
      auto i = stack.back();
      stack.pop_back();
      for (std::size_t j = 0; j < n; ++j)
        if (!seen[j] && (le[i][j] || le[j][i])) seen[j] = true, stack.push_back(j);
    }
    if (std::all_of(seen.begin(), seen.end(), [](bool b) { return b; })) break;
  }
  // transitive closure
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        if (le[i][k] && le[k][j]) le[i][j] = true;
  std::vector<Vec<K>> basis, idem;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (le[i][j]) basis.push_back(m->basis(i * n + j));
  for (std::size_t i = 0; i < n; ++i) idem.push_back(m->basis(i * n + i));
  return subalgebra_inclusion(m, basis, idem);
}

/// Subalgebra of b generated by random basis elements and idempotents.
template <class K>
RingHom<K> random_subalgebra_inclusion(Rng& r, const AlgebraPtr<K>& b) {
  std::vector<Vec<K>> gens;
  for (std::size_t i = 0; i < b->dim(); ++i)
    if (r.coin(1, 3)) gens.push_back(b->basis(i));
  if (r.coin()) {
    auto x = b->zero();
    for (std::size_t i = 0; i < b->dim(); ++i) x[i] = K::from_int(r.small(-1, 1));
    gens.push_back(x);
  }
  // closure under products, starting from the unit
  Subspace<K> s(b->dim());
  std::vector<Vec<K>> frontier{b->unit()};
  s.extend(b->unit());
  for (const auto& g : gens)
    if (s.extend(g)) frontier.push_back(g);
  while (!frontier.empty()) {
    std::vector<Vec<K>> next;
    for (const auto& x : frontier)
      for (const auto& y : s.basis()) {
        for (auto z : {b->mul(x, y), b->mul(y, x)})
          if (s.extend(z)) next.push_back(z);
      }
    frontier = std::move(next);
  }
  return subalgebra_inclusion(b, s.basis(), {});
}

}  // namespace strathom::gen
