#pragma once

#include <algorithm>
#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "strathom/bimodule.hpp"
#include "strathom/errors.hpp"
#include "strathom/module.hpp"

namespace strathom {

inline constexpr std::size_t kDefaultCutoff = 16;

/// Minimal projective resolution  ... -> P_1 -> P_0 -> M -> 0.
/// P_n = e_{v_1}A + ... + e_{v_r}A (vertices[n]). The differential is
/// recorded by generator images: images[n][j][k] in e_{v_k} A e_{w_j} is the
/// k-th component of d_n(e_{w_j}) for n >= 1. aug[j] is the image in M of
/// the j-th generator of P_0.
template <class K>
struct ProjResolution {
  ModulePtr<K> module;
  std::vector<std::vector<std::size_t>> vertices;
  std::vector<ModulePtr<K>> terms;
  std::vector<Mat<K>> maps;  // maps[0]: P_0 -> M, maps[n]: P_n -> P_{n-1}
  std::vector<Vec<K>> aug;
  std::vector<std::vector<std::vector<Vec<K>>>> images;
  bool complete = false;
  bool minimal = true;

  /// Number of computed terms P_0 .. P_{size-1}.
  std::size_t size() const { return terms.size(); }
  /// Projective dimension when complete.
  std::size_t length() const { return terms.empty() ? 0 : terms.size() - 1; }
};

namespace detail {

/// Generators of the submodule S of N (basis rows in N coordinates) whose
/// images form a basis of the top of S, each lying in N e_v for its vertex.
template <class K>
std::pair<std::vector<std::size_t>, std::vector<Vec<K>>> top_generators(const Module<K>& n,
                                                                        const std::vector<Vec<K>>& s) {
  const auto& a = *n.algebra();
  std::vector<Vec<K>> rad_rows;
  for (const auto& r : a.radical().basis()) {
    auto rr = n.rho_elem(r);
    for (const auto& v : s) rad_rows.push_back(rr.apply(v));
  }
  Subspace<K> covered = Subspace<K>::span(rad_rows, n.dim());
  std::vector<std::size_t> verts;
  std::vector<Vec<K>> gens;
  std::vector<Mat<K>> basis_action;
  for (std::size_t i = 0; i < a.dim(); ++i) basis_action.push_back(n.rho(i));
  for (std::size_t v = 0; v < a.idempotents().size() && covered.dim() < s.size(); ++v) {
    auto re = n.rho_elem(a.idempotents()[v]);
    std::vector<Vec<K>> sev;
    for (const auto& x : s) sev.push_back(re.apply(x));
    Subspace<K> block = Subspace<K>::span(sev, n.dim());
    for (const auto& c : block.basis()) {
      if (covered.contains(c)) continue;
      verts.push_back(v);
      gens.push_back(c);
      for (const auto& b : basis_action) covered.extend(b.apply(c));
    }
  }
  if (covered.dim() != s.size()) throw ConsistencyError("top generators do not generate the module");
  return {verts, gens};
}

/// Rows: images of the basis of P = sum e_{v_k}A under e_{v_k} -> gens[k].
template <class K>
Mat<K> cover_matrix(const Module<K>& n, const Module<K>& p, const std::vector<std::size_t>& verts,
                    const std::vector<Vec<K>>& gens) {
  const auto& a = *n.algebra();
  Mat<K> m(p.dim(), n.dim());
  std::size_t off = 0;
  for (std::size_t k = 0; k < verts.size(); ++k) {
    const auto& e = a.idempotents()[verts[k]];
    std::vector<Vec<K>> rows;
    for (std::size_t i = 0; i < a.dim(); ++i) rows.push_back(a.mul(e, a.basis(i)));
    Subspace<K> pb = Subspace<K>::span(rows, a.dim());
    for (const auto& b : pb.basis()) m.set_row(off++, n.rho_elem(b).apply(gens[k]));
  }
  return m;
}

/// Splits a vector of P = sum e_{v_k}A into its components in A.
template <class K>
std::vector<Vec<K>> components(const Algebra<K>& a, const std::vector<std::size_t>& verts, const Vec<K>& x) {
  std::vector<Vec<K>> out;
  std::size_t off = 0;
  for (auto v : verts) {
    const auto& e = a.idempotents()[v];
    std::vector<Vec<K>> rows;
    for (std::size_t i = 0; i < a.dim(); ++i) rows.push_back(a.mul(e, a.basis(i)));
    Subspace<K> pb = Subspace<K>::span(rows, a.dim());
    auto c = a.zero();
    for (std::size_t i = 0; i < pb.dim(); ++i) axpy(c, x[off + i], pb.basis()[i]);
    out.push_back(std::move(c));
    off += pb.dim();
  }
  return out;
}

}  // namespace detail

/// Computes P_0 .. P_n with n < cutoff + 1 terms at most; complete when the
/// last syzygy vanished.
template <class K>
ProjResolution<K> min_proj_resolution(const ModulePtr<K>& m, std::size_t cutoff = kDefaultCutoff) {
  const auto& a = m->algebra();
  if (!a->has_idempotents()) throw PreconditionError("min_proj_resolution needs primitive idempotents");
  ProjResolution<K> res;
  res.module = m;
  if (m->dim() == 0) {
    res.complete = true;
    return res;
  }
  ModulePtr<K> cur = m;
  std::vector<Vec<K>> sub;
  for (std::size_t i = 0; i < m->dim(); ++i) sub.push_back(unit_vec<K>(m->dim(), i));
  for (std::size_t n = 0; n <= cutoff; ++n) {
    auto [verts, gens] = detail::top_generators(*cur, sub);
    auto p = projective_sum(a, verts);
    auto d = detail::cover_matrix(*cur, *p, verts, gens);
    if (n == 0) {
      res.aug = gens;
    } else {
      std::vector<std::vector<Vec<K>>> imgs;
      for (const auto& g : gens) imgs.push_back(detail::components(*a, res.vertices.back(), g));
      res.images.push_back(std::move(imgs));
    }
    if (n == 0) res.images.emplace_back();
    res.vertices.push_back(verts);
    res.terms.push_back(p);
    res.maps.push_back(d);
    auto ker = left_kernel(d);
    if (ker.rows() == 0) {
      res.complete = true;
      return res;
    }
    cur = p;
    sub = Subspace<K>(ker).basis();
  }
  return res;
}

/// Projective dimension, or nullopt when the resolution is not complete
/// within the cutoff.
template <class K>
std::optional<std::size_t> pd(const ModulePtr<K>& m, std::size_t cutoff = kDefaultCutoff) {
  auto r = min_proj_resolution(m, cutoff);
  if (!r.complete) return std::nullopt;
  return r.length();
}

namespace detail {

template <class K>
std::vector<Subspace<K>> vertex_pieces_right(const Module<K>& n) {
  std::vector<Subspace<K>> out;
  for (const auto& e : n.algebra()->idempotents())
    out.push_back(n.dim() ? Subspace<K>(n.rho_elem(e)) : Subspace<K>(0));
  return out;
}

template <class K>
std::vector<Subspace<K>> vertex_pieces_left(const Bimodule<K>& n) {
  std::vector<Subspace<K>> out;
  for (const auto& e : n.left()->idempotents())
    out.push_back(n.dim() ? Subspace<K>(n.lambda_elem(e)) : Subspace<K>(0));
  return out;
}

/// Hom(P_n, N) -> Hom(P_{n+1}, N): (y_k) -> (sum_k y_k x_kj)_j on N e_v pieces.
template <class K>
Mat<K> ext_coboundary(const ProjResolution<K>& r, std::size_t n, const Module<K>& nm,
                      const std::vector<Subspace<K>>& pieces) {
  const auto& vs = r.vertices[n];
  const auto& ws = r.vertices[n + 1];
  std::size_t rows = 0, cols = 0;
  for (auto v : vs) rows += pieces[v].dim();
  for (auto w : ws) cols += pieces[w].dim();
  Mat<K> m(rows, cols);
  std::size_t ro = 0;
  for (std::size_t k = 0; k < vs.size(); ++k) {
    for (const auto& y : pieces[vs[k]].basis()) {
      std::size_t co = 0;
      for (std::size_t j = 0; j < ws.size(); ++j) {
        const auto& x = r.images[n + 1][j][k];
        if (!is_zero(x)) {
          auto c = pieces[ws[j]].coords(nm.rho_elem(x).apply(y));
          for (std::size_t t = 0; t < c.size(); ++t) m(ro, co + t) = c[t];
        }
        co += pieces[ws[j]].dim();
      }
      ++ro;
    }
  }
  return m;
}

/// P_n (x) N -> P_{n-1} (x) N on e_v N pieces.
template <class K>
Mat<K> tor_boundary(const ProjResolution<K>& r, std::size_t n, const Bimodule<K>& nm,
                    const std::vector<Subspace<K>>& pieces) {
  const auto& ws = r.vertices[n];
  const auto& vs = r.vertices[n - 1];
  std::size_t rows = 0, cols = 0;
  for (auto w : ws) rows += pieces[w].dim();
  for (auto v : vs) cols += pieces[v].dim();
  Mat<K> m(rows, cols);
  std::size_t ro = 0;
  for (std::size_t j = 0; j < ws.size(); ++j) {
    for (const auto& y : pieces[ws[j]].basis()) {
      std::size_t co = 0;
      for (std::size_t k = 0; k < vs.size(); ++k) {
        const auto& x = r.images[n][j][k];
        if (!is_zero(x)) {
          auto c = pieces[vs[k]].coords(nm.lambda_elem(x).apply(y));
          for (std::size_t t = 0; t < c.size(); ++t) m(ro, co + t) = c[t];
        }
        co += pieces[vs[k]].dim();
      }
      ++ro;
    }
  }
  return m;
}

template <class K>
std::size_t piece_dim(const std::vector<std::size_t>& vs, const std::vector<Subspace<K>>& pieces) {
  std::size_t d = 0;
  for (auto v : vs) d += pieces[v].dim();
  return d;
}

template <class K>
std::size_t safe_rank(const Mat<K>& m) {
  return m.rows() == 0 || m.cols() == 0 ? 0 : rank(m);
}

}  // namespace detail

/// dim Ext^deg from a resolution computed at least to degree deg + 1.
template <class K>
std::size_t ext_dim_from(const ProjResolution<K>& r, const Module<K>& n, std::size_t deg) {
  if (deg >= r.size()) {
    if (r.complete) return 0;
    throw IncompleteError("resolution truncated before degree " + std::to_string(deg));
  }
  if (deg + 1 >= r.size() && !r.complete)
    throw IncompleteError("resolution truncated before degree " + std::to_string(deg + 1));
  auto pieces = detail::vertex_pieces_right(n);
  std::size_t c = detail::piece_dim(r.vertices[deg], pieces);
  std::size_t out_rank = deg + 1 < r.size() ? detail::safe_rank(detail::ext_coboundary(r, deg, n, pieces)) : 0;
  std::size_t in_rank = deg > 0 ? detail::safe_rank(detail::ext_coboundary(r, deg - 1, n, pieces)) : 0;
  return c - out_rank - in_rank;
}

template <class K>
std::size_t ext_dim(const ModulePtr<K>& m, const ModulePtr<K>& n, std::size_t deg, std::size_t cutoff = kDefaultCutoff) {
  check_same_algebra(*m, *n, "ext_dim");
  if (deg > cutoff) throw IncompleteError("degree " + std::to_string(deg) + " exceeds the cutoff " + std::to_string(cutoff));
  return ext_dim_from(min_proj_resolution(m, deg + 1), *n, deg);
}

/// dim Tor_deg(M, N) for N a left module (any bimodule with left algebra A).
template <class K>
std::size_t tor_dim_from(const ProjResolution<K>& r, const Bimodule<K>& n, std::size_t deg) {
  if (deg >= r.size()) {
    if (r.complete) return 0;
    throw IncompleteError("resolution truncated before degree " + std::to_string(deg));
  }
  if (deg + 1 >= r.size() && !r.complete)
    throw IncompleteError("resolution truncated before degree " + std::to_string(deg + 1));
  auto pieces = detail::vertex_pieces_left(n);
  std::size_t c = detail::piece_dim(r.vertices[deg], pieces);
  std::size_t out_rank = deg > 0 ? detail::safe_rank(detail::tor_boundary(r, deg, n, pieces)) : 0;
  std::size_t in_rank = deg + 1 < r.size() ? detail::safe_rank(detail::tor_boundary(r, deg + 1, n, pieces)) : 0;
  return c - out_rank - in_rank;
}

template <class K>
std::size_t tor_dim(const ModulePtr<K>& m, const Bimodule<K>& n, std::size_t deg, std::size_t cutoff = kDefaultCutoff) {
  if (!same_algebra(*m->algebra(), *n.left())) throw DomainError("tor_dim: algebras do not match");
  if (deg > cutoff) throw IncompleteError("degree " + std::to_string(deg) + " exceeds the cutoff " + std::to_string(cutoff));
  return tor_dim_from(min_proj_resolution(m, deg + 1), n, deg);
}

/// Global dimension as the largest pd of a simple; nullopt when some simple
/// has no complete resolution within the cutoff.
template <class K>
std::optional<std::size_t> gldim(const AlgebraPtr<K>& a, std::size_t cutoff = kDefaultCutoff) {
  std::size_t g = 0;
  for (const auto& s : simple_modules(a)) {
    auto p = pd(s, cutoff);
    if (!p) return std::nullopt;
    g = std::max(g, *p);
  }
  return g;
}

}  // namespace strathom
