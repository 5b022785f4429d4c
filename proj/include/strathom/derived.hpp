#pragma once

#include <algorithm>
#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "strathom/errors.hpp"
#include "strathom/module.hpp"
#include "strathom/resolution.hpp"

namespace strathom {

/// Cochain complex X^lo -> ... -> X^hi, d^n: X^n -> X^{n+1} on row vectors.
template <class K>
struct Complex {
  AlgebraPtr<K> algebra;
  int lo = 0;
  std::vector<ModulePtr<K>> terms;
  std::vector<Mat<K>> d;  // d[i]: terms[i] -> terms[i+1]

  int hi() const { return lo + static_cast<int>(terms.size()) - 1; }
  bool in_range(int n) const { return n >= lo && n <= hi(); }
  std::size_t dim_at(int n) const { return in_range(n) ? terms[n - lo]->dim() : 0; }
  ModulePtr<K> at(int n) const { return in_range(n) ? terms[n - lo] : zero_module(algebra); }
  /// d^n as a dim_at(n) x dim_at(n+1) matrix (zero outside the range).
  Mat<K> diff(int n) const {
    if (in_range(n) && in_range(n + 1)) return d[n - lo];
    return Mat<K>(dim_at(n), dim_at(n + 1));
  }

  void check() const {
    if (d.size() + 1 != terms.size() && !(terms.empty() && d.empty())) throw DomainError("complex: wrong number of differentials");
    for (std::size_t i = 0; i < d.size(); ++i) {
      ModuleMap<K>(terms[i], terms[i + 1], d[i]);
      if (i + 1 < d.size() && !(d[i] * d[i + 1]).is_zero()) throw DomainError("complex: d o d != 0");
    }
  }
};

template <class K>
Complex<K> make_complex(const AlgebraPtr<K>& a, int lo, std::vector<ModulePtr<K>> terms, std::vector<Mat<K>> d) {
  Complex<K> c{a, lo, std::move(terms), std::move(d)};
  c.check();
  return c;
}

/// m concentrated in degree deg.
template <class K>
Complex<K> stalk(const ModulePtr<K>& m, int deg) {
  return Complex<K>{m->algebra(), deg, {m}, {}};
}

/// X[k]^n = X^{n+k}, d_{X[k]} = (-1)^k d_X.
template <class K>
Complex<K> shift(const Complex<K>& x, int k) {
  Complex<K> y = x;
  y.lo = x.lo - k;
  if (k % 2 != 0)
    for (auto& m : y.d) m = -m;
  return y;
}

template <class K>
std::size_t homology_dim(const Complex<K>& x, int n) {
  auto din = x.diff(n - 1), dout = x.diff(n);
  return x.dim_at(n) - detail::safe_rank(dout) - detail::safe_rank(din);
}

/// f^n: X^n -> Y^n.
template <class K>
struct ChainMap {
  Complex<K> source;
  Complex<K> target;
  int lo = 0;
  std::vector<Mat<K>> maps;

  Mat<K> at(int n) const {
    int i = n - lo;
    if (i >= 0 && i < static_cast<int>(maps.size())) return maps[i];
    return Mat<K>(source.dim_at(n), target.dim_at(n));
  }

  void check() const {
    for (int n = std::min(source.lo, target.lo) - 1; n <= std::max(source.hi(), target.hi()); ++n)
      if (source.diff(n) * at(n + 1) != at(n) * target.diff(n)) throw DomainError("chain map does not commute with d");
  }
};

/// Cone^n = X^{n+1} + Y^n with d(x, y) = (-x d_X, x f + y d_Y).
template <class K>
struct Cone {
  Complex<K> complex;
  ChainMap<K> from_target;  // Y -> cone
};

template <class K>
Cone<K> cone(const ChainMap<K>& f) {
  const auto& x = f.source;
  const auto& y = f.target;
  int lo = std::min(x.lo - 1, y.lo), hi = std::max(x.hi() - 1, y.hi());
  Complex<K> c{x.algebra, lo, {}, {}};
  for (int n = lo; n <= hi; ++n) c.terms.push_back(direct_sum<K>({x.at(n + 1), y.at(n)}).module);
  for (int n = lo; n < hi; ++n) {
    std::size_t x1 = x.dim_at(n + 1), y0 = y.dim_at(n), x2 = x.dim_at(n + 2), y1 = y.dim_at(n + 1);
    Mat<K> m(x1 + y0, x2 + y1);
    m.set_block(0, 0, -x.diff(n + 1));
    m.set_block(0, x2, f.at(n + 1));
    m.set_block(x1, x2, y.diff(n));
    c.d.push_back(std::move(m));
  }
  ChainMap<K> inc{y, c, y.lo, {}};
  for (int n = y.lo; n <= y.hi(); ++n) {
    Mat<K> m(y.dim_at(n), c.dim_at(n));
    m.set_block(0, x.dim_at(n + 1), Mat<K>::identity(y.dim_at(n)));
    inc.maps.push_back(std::move(m));
  }
  return {std::move(c), std::move(inc)};
}

/// Two-term complex A -> B_A in degrees -1, 0 for a ring map f, i.e. the cone
/// of stalk(A) -> stalk(B_A).
template <class K>
Complex<K> ring_map_cone(const RingHom<K>& f) {
  auto a = regular_module(f.source());
  auto b = restrict_along(f, regular_module(f.target()));
  ChainMap<K> m{stalk(a, 0), stalk(b, 0), 0, {f.matrix()}};
  return cone(m).complex;
}

/// P projective with a quasi-isomorphism p: P -> X.
template <class K>
struct ProjReplacement {
  Complex<K> p;
  ChainMap<K> quasi_iso;
  std::vector<std::vector<std::size_t>> vertices;  // per degree of p, from p.lo
};

/// Builds P from the top degree down: with C = cone(p) known above degree n,
/// P^n covers the cycles Z^n of C^n = P^{n+1} + X^n modulo the boundaries
/// coming from X^{n-1}; the cover sigma = (sigma1, sigma2) gives
/// d_P^n = -sigma1 and p^n = sigma2.
template <class K>
ProjReplacement<K> proj_resolve_complex(const Complex<K>& x, std::size_t cutoff = kDefaultCutoff) {
  const auto& a = x.algebra;
  if (!a->has_idempotents()) throw PreconditionError("proj_resolve_complex needs primitive idempotents");
  const int hi = x.hi();
  const int floor = x.lo - static_cast<int>(cutoff) - (hi - x.lo) - 1;
  std::vector<ModulePtr<K>> ps;                    // P^n for n = hi, hi-1, ...
  std::vector<std::vector<std::size_t>> verts;
  std::vector<Mat<K>> dps;                         // d_P^n: P^n -> P^{n+1}
  std::vector<Mat<K>> pmaps;                       // p^n: P^n -> X^n
  ModulePtr<K> p_next = zero_module(a), p_next2 = zero_module(a);
  Mat<K> dp_next(0, 0), pmap_next(0, x.dim_at(hi + 1));
  int n = hi;
  for (;; --n) {
    if (n < floor) throw IncompleteError("projective replacement does not terminate within the cutoff");
    auto xn = x.at(n);
    auto cn = direct_sum<K>({p_next, xn}).module;
    const std::size_t pd1 = p_next->dim(), xd = xn->dim();
    // d_C^n: P^{n+1} + X^n -> P^{n+2} + X^{n+1}
    const std::size_t p2 = p_next2->dim(), x1 = x.dim_at(n + 1);
    Mat<K> dc(pd1 + xd, p2 + x1);
    if (pd1 && p2) dc.set_block(0, 0, -dp_next);
    if (pd1 && x1) dc.set_block(0, p2, pmap_next);
    if (xd && x1) dc.set_block(pd1, p2, x.diff(n));
    std::vector<Vec<K>> z;
    if (dc.cols() == 0) {
      for (std::size_t i = 0; i < cn->dim(); ++i) z.push_back(unit_vec<K>(cn->dim(), i));
    } else if (dc.rows() > 0) {
      z = Subspace<K>(left_kernel(dc)).basis();
    }
    // boundaries from X^{n-1}
    std::vector<Vec<K>> w;
    auto dx = x.diff(n - 1);
    for (std::size_t i = 0; i < dx.rows(); ++i) {
      auto v = zero_vec<K>(cn->dim());
      for (std::size_t j = 0; j < xd; ++j) v[pd1 + j] = dx(i, j);
      w.push_back(std::move(v));
    }
    std::vector<std::size_t> vs;
    std::vector<Vec<K>> gens;
    if (!z.empty()) {
      Subspace<K> covered = Subspace<K>::span(w, cn->dim());
      for (const auto& r : a->radical().basis()) {
        auto rr = cn->rho_elem(r);
        for (const auto& v : z) covered.extend(rr.apply(v));
      }
      for (std::size_t v = 0; v < a->idempotents().size() && covered.dim() < z.size(); ++v) {
        auto re = cn->rho_elem(a->idempotents()[v]);
        std::vector<Vec<K>> zev;
        for (const auto& y : z) zev.push_back(re.apply(y));
        Subspace<K> block = Subspace<K>::span(zev, cn->dim());
        for (const auto& c : block.basis()) {
          if (covered.contains(c)) continue;
          vs.push_back(v);
          gens.push_back(c);
          for (std::size_t i = 0; i < a->dim(); ++i) covered.extend(cn->rho(i).apply(c));
        }
      }
    }
    if (gens.empty() && n < x.lo) break;
    auto pn = projective_sum(a, vs);
    Mat<K> sigma = gens.empty() ? Mat<K>(0, cn->dim()) : detail::cover_matrix(*cn, *pn, vs, gens);
    Mat<K> dpn = -sigma.block(0, 0, sigma.rows(), pd1);
    Mat<K> pn_map = sigma.block(0, pd1, sigma.rows(), xd);
    ps.push_back(pn);
    verts.push_back(vs);
    dps.push_back(dpn);
    pmaps.push_back(pn_map);
    p_next2 = p_next;
    p_next = pn;
    dp_next = dpn;
    pmap_next = pn_map;
  }
  // assemble in increasing degree; trim zero terms at the top
  const int plo = n + 1;
  std::reverse(ps.begin(), ps.end());
  std::reverse(verts.begin(), verts.end());
  std::reverse(dps.begin(), dps.end());
  std::reverse(pmaps.begin(), pmaps.end());
  while (!ps.empty() && ps.back()->dim() == 0) {
    ps.pop_back();
    verts.pop_back();
    dps.pop_back();
    pmaps.pop_back();
  }
  ProjReplacement<K> out;
  out.p = Complex<K>{a, plo, ps, {}};
  for (std::size_t i = 0; i + 1 < ps.size(); ++i) out.p.d.push_back(dps[i]);
  out.vertices = verts;
  out.quasi_iso = ChainMap<K>{out.p, x, plo, pmaps};
  return out;
}

namespace detail {

/// Chain maps P -> Y[n] as flattened vectors over the degrees of P, with
/// the null-homotopic ones. Block k stores f^k: P^k -> Y^{k+n}.
template <class K>
struct ChainMapSpace {
  int lo = 0;
  std::vector<std::size_t> rows, cols, offset;
  std::vector<Vec<K>> cycles;      // basis of chain maps
  Subspace<K> boundaries;          // null-homotopic maps
  std::size_t total = 0;

  Mat<K> block(const Vec<K>& v, std::size_t k) const {
    Mat<K> m(rows[k], cols[k]);
    for (std::size_t i = 0; i < rows[k]; ++i)
      for (std::size_t j = 0; j < cols[k]; ++j) m(i, j) = v[offset[k] + i * cols[k] + j];
    return m;
  }
};

template <class K>
ChainMapSpace<K> chain_map_space(const Complex<K>& p, const Complex<K>& y, int n) {
  ChainMapSpace<K> s;
  s.lo = p.lo;
  const std::size_t np = p.terms.size();
  s.offset.push_back(0);
  std::vector<std::vector<Mat<K>>> homs(np);
  for (std::size_t k = 0; k < np; ++k) {
    int deg = p.lo + static_cast<int>(k);
    s.rows.push_back(p.dim_at(deg));
    s.cols.push_back(y.dim_at(deg + n));
    s.offset.push_back(s.offset.back() + s.rows.back() * s.cols.back());
    if (s.rows.back() && s.cols.back()) homs[k] = hom_basis(*p.at(deg), *y.at(deg + n));
  }
  s.total = s.offset.back();
  const K sign = K::from_int(n % 2 == 0 ? 1 : -1);
  // unknown (k, i) contributes d_P^{k-1} F to eq block k-1 and -F d' to eq block k
  std::vector<std::size_t> eoff{0};
  for (std::size_t k = 0; k < np; ++k) {
    int deg = p.lo + static_cast<int>(k);
    eoff.push_back(eoff.back() + p.dim_at(deg) * y.dim_at(deg + n + 1));
  }
  // equations also at degree p.lo - 1 (P^{lo-1} = 0, so nothing) and for the top (target y^{hi+n+1})
  const std::size_t neq = eoff.back();
  std::vector<Vec<K>> contrib;
  std::vector<Vec<K>> as_flat;
  for (std::size_t k = 0; k < np; ++k) {
    int deg = p.lo + static_cast<int>(k);
    for (const auto& f : homs[k]) {
      auto v = zero_vec<K>(neq);
      // - F d_{Y[n]}^{deg}: P^k -> Y^{deg+n+1}
      auto rhs = f * (y.diff(deg + n) * sign);
      for (std::size_t i = 0; i < rhs.rows(); ++i)
        for (std::size_t j = 0; j < rhs.cols(); ++j) v[eoff[k] + i * rhs.cols() + j] -= rhs(i, j);
      if (k > 0) {
        auto lhs = p.diff(deg - 1) * f;  // P^{k-1} -> Y^{deg+n}
        for (std::size_t i = 0; i < lhs.rows(); ++i)
          for (std::size_t j = 0; j < lhs.cols(); ++j) v[eoff[k - 1] + i * lhs.cols() + j] += lhs(i, j);
      }
      contrib.push_back(std::move(v));
      auto fl = zero_vec<K>(s.total);
      for (std::size_t i = 0; i < f.rows(); ++i)
        for (std::size_t j = 0; j < f.cols(); ++j) fl[s.offset[k] + i * f.cols() + j] = f(i, j);
      as_flat.push_back(std::move(fl));
    }
  }
  if (!contrib.empty()) {
    Mat<K> sol = neq ? left_kernel(Mat<K>::from_rows(contrib, neq)) : Mat<K>::identity(contrib.size());
    for (std::size_t r = 0; r < sol.rows(); ++r) {
      auto v = zero_vec<K>(s.total);
      for (std::size_t i = 0; i < contrib.size(); ++i)
        if (!sol(r, i).is_zero()) axpy(v, sol(r, i), as_flat[i]);
      s.cycles.push_back(std::move(v));
    }
  }
  // homotopies h^k: P^k -> Y^{deg+n-1}; f^k = d_P^k h^{k+1} + h^k d_{Y[n]}^{k-1}
  std::vector<Vec<K>> nulls;
  for (std::size_t k = 0; k < np; ++k) {
    int deg = p.lo + static_cast<int>(k);
    if (!p.dim_at(deg) || !y.dim_at(deg + n - 1)) continue;
    for (const auto& h : hom_basis(*p.at(deg), *y.at(deg + n - 1))) {
      auto v = zero_vec<K>(s.total);
      auto self = h * (y.diff(deg + n - 1) * sign);  // P^k -> Y^{deg+n}
      for (std::size_t i = 0; i < self.rows(); ++i)
        for (std::size_t j = 0; j < self.cols(); ++j) v[s.offset[k] + i * self.cols() + j] += self(i, j);
      if (k > 0) {
        auto below = p.diff(deg - 1) * h;  // P^{k-1} -> Y^{deg+n-1}
        for (std::size_t i = 0; i < below.rows(); ++i)
          for (std::size_t j = 0; j < below.cols(); ++j) v[s.offset[k - 1] + i * below.cols() + j] += below(i, j);
      }
      nulls.push_back(std::move(v));
    }
  }
  s.boundaries = Subspace<K>::span(nulls, s.total);
  return s;
}

}  // namespace detail

/// dim Hom_D(X, Y[n]) = chain maps P(X) -> Y[n] modulo homotopy.
template <class K>
std::size_t derived_hom_dim_from(const ProjReplacement<K>& px, const Complex<K>& y, int n) {
  if (px.p.terms.empty() || y.terms.empty()) return 0;
  auto s = detail::chain_map_space(px.p, y, n);
  return s.cycles.size() - s.boundaries.dim();
}

template <class K>
std::size_t derived_hom_dim(const Complex<K>& x, const Complex<K>& y, int n, std::size_t cutoff = kDefaultCutoff) {
  return derived_hom_dim_from(proj_resolve_complex(x, cutoff), y, n);
}

template <class K>
struct ExceptionalReport {
  bool exceptional = false;
  std::vector<int> offending;
  int window_lo = 0, window_hi = 0;
};

/// Hom(X, X[n]) can be nonzero only for n in [lo(X) - hi(P), hi(X) - lo(P)].
template <class K>
ExceptionalReport<K> is_exceptional(const Complex<K>& x, std::size_t cutoff = kDefaultCutoff) {
  auto px = proj_resolve_complex(x, cutoff);
  ExceptionalReport<K> r;
  r.window_lo = x.lo - px.p.hi();
  r.window_hi = x.hi() - px.p.lo;
  for (int n = r.window_lo; n <= r.window_hi; ++n)
    if (n != 0 && derived_hom_dim_from(px, x, n) != 0) r.offending.push_back(n);
  r.exceptional = r.offending.empty();
  return r;
}

/// End_D(X) on the projective replacement, with coordinates of classes.
template <class K>
struct DerivedEnd {
  AlgebraPtr<K> algebra;
  ProjReplacement<K> replacement;
  detail::ChainMapSpace<K> space;
  std::vector<Vec<K>> reps;  // representative chain maps of the basis
  QuotientSpace<K> quotient{Subspace<K>{}};
  Mat<K> rep_coords;         // rows: quotient coordinates of reps

  Vec<K> class_coords(const Vec<K>& chain_map) const {
    auto c = solve(rep_coords.transpose(), quotient.coords(chain_map));
    if (!c) throw ConsistencyError("not a chain map class");
    return *c;
  }
};

template <class K>
DerivedEnd<K> derived_end_algebra(const Complex<K>& x, std::size_t cutoff = kDefaultCutoff) {
  DerivedEnd<K> out;
  out.replacement = proj_resolve_complex(x, cutoff);
  const auto& p = out.replacement.p;
  if (p.terms.empty()) throw PreconditionError("degenerate cone: the complex is acyclic, its endomorphism ring is zero");
  out.space = detail::chain_map_space(p, p, 0);
  const auto& s = out.space;
  out.quotient = QuotientSpace<K>(s.boundaries);
  Subspace<K> seen(out.quotient.dim());
  std::vector<Vec<K>> qc;
  for (const auto& z : s.cycles) {
    auto c = out.quotient.coords(z);
    if (seen.extend(c)) {
      out.reps.push_back(z);
      qc.push_back(std::move(c));
    }
  }
  const std::size_t m = out.reps.size();
  if (m == 0) throw PreconditionError("degenerate cone: the complex is contractible, its endomorphism ring is zero");
  out.rep_coords = Mat<K>::from_rows(qc, out.quotient.dim());
  auto compose_flat = [&](const Vec<K>& f, const Vec<K>& g) {  // f after g
    auto v = zero_vec<K>(s.total);
    for (std::size_t k = 0; k < s.rows.size(); ++k) {
      auto c = s.block(g, k) * s.block(f, k);
      for (std::size_t i = 0; i < c.rows(); ++i)
        for (std::size_t j = 0; j < c.cols(); ++j) v[s.offset[k] + i * c.cols() + j] = c(i, j);
    }
    return v;
  };
  std::vector<Vec<K>> table;
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j) table.push_back(out.class_coords(compose_flat(out.reps[i], out.reps[j])));
  auto id = zero_vec<K>(s.total);
  for (std::size_t k = 0; k < s.rows.size(); ++k)
    for (std::size_t i = 0; i < s.rows[k]; ++i) id[s.offset[k] + i * s.cols[k] + i] = K::from_int(1);
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < m; ++i) labels.push_back("c" + std::to_string(i + 1));
  out.algebra = make_algebra<K>(std::move(labels), std::move(table), out.class_coords(id));
  return out;
}

}  // namespace strathom
