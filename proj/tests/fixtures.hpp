#pragma once

#include <algorithm>
#include <string>
#include <vector>

#include "strathom/strathom.hpp"

namespace fixtures {

using namespace strathom;
using Q = Rational;

inline QuiverPresentation counterexample_quiver() {
  return make_quiver({"1", "2", "3"},
                     {{"alpha", "1", "2"}, {"beta", "2", "3"}, {"gamma", "2", "3"}, {"delta", "3", "1"}},
                     {"beta*alpha", "alpha*delta", "delta*gamma"});
}

inline QuiverPresentation kronecker_quiver() { return make_quiver({"1", "2"}, {{"a", "2", "1"}, {"b", "2", "1"}}, {}); }

template <class K = Q>
AlgebraPtr<K> counterexample() {
  return from_quiver<K>(counterexample_quiver());
}

template <class K = Q>
AlgebraPtr<K> kronecker() {
  return from_quiver<K>(kronecker_quiver());
}

/// Preprojective Kronecker module with dimension vector (i, i+1).
template <class K>
ModulePtr<K> preprojective(const AlgebraPtr<K>& k, std::size_t i) {
  Mat<K> a(i, i + 1), b(i, i + 1);
  for (std::size_t r = 0; r < i; ++r) {
    a(r, r) = K::from_int(1);
    b(r, r + 1) = K::from_int(1);
  }
  return quiver_module(k, {i, i + 1}, {a, b});
}

/// Inclusion of upper triangular 2x2 matrices into M_2.
template <class K = Q>
RingHom<K> triangular_inclusion() {
  auto m2 = matrix_algebra<K>(2);
  auto t2 = upper_triangular_algebra<K>(2);
  Mat<K> inc(t2->dim(), m2->dim());
  for (std::size_t i = 0; i < t2->dim(); ++i)
    for (std::size_t j = 0; j < m2->dim(); ++j)
      if (m2->labels()[j] == t2->labels()[i]) inc(i, j) = K::from_int(1);
  return RingHom<K>(t2, m2, inc);
}

/// A -> End(T0) for the tilting coresolution 0 -> A -> T0 -> T1 -> 0 of {P_i, P_j}.
template <class K = Q>
RingHom<K> kronecker_lift(std::size_t i, std::size_t j) {
  auto k = kronecker<K>();
  auto t = is_classical_tilting<K>({preprojective(k, i), preprojective(k, j)}, k);
  if (!t.coresolution) throw PreconditionError("no coresolution");
  return lift_through_approximation(t.coresolution->inclusion).map;
}

template <class K>
Vec<K> sum_of(const Algebra<K>& a, const std::vector<std::string>& labels) {
  auto v = a.zero();
  for (const auto& l : labels) v = v + element(a, l);
  return v;
}

/// Euler form of an acyclic quiver on dimension vectors.
inline long euler_form(const QuiverPresentation& q, const std::vector<std::size_t>& x, const std::vector<std::size_t>& y) {
  long f = 0;
  for (std::size_t v = 0; v < x.size(); ++v) f += static_cast<long>(x[v] * y[v]);
  for (const auto& a : q.arrows) f -= static_cast<long>(x[a.target] * y[a.source]);
  return f;
}

// Paths in traversal order avoiding every relation as a contiguous subpath.
inline std::size_t enumerate_paths(const QuiverPresentation& q, std::size_t max_len, std::size_t& longest) {
  auto killed = [&](const std::vector<std::size_t>& p) {
    for (const auto& r : q.relations) {
      if (r.size() > p.size()) continue;
      for (std::size_t s = 0; s + r.size() <= p.size(); ++s)
        if (std::equal(r.begin(), r.end(), p.begin() + static_cast<long>(s))) return true;
    }
    return false;
  };
  std::size_t count = q.vertices.size();
  longest = 0;
  std::vector<std::vector<std::size_t>> layer;
  for (std::size_t a = 0; a < q.arrows.size(); ++a) layer.push_back({a});
  for (std::size_t len = 1; len <= max_len && !layer.empty(); ++len) {
    std::vector<std::vector<std::size_t>> next;
    for (const auto& p : layer) {
      if (killed(p)) continue;
      ++count;
      longest = len;
      for (std::size_t b = 0; b < q.arrows.size(); ++b)
        if (q.arrows[b].source == q.arrows[p.back()].target) {
          auto np = p;
          np.push_back(b);
          next.push_back(np);
        }
    }
    layer = std::move(next);
  }
  return count;
}

}  // namespace fixtures
