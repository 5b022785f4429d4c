#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "strathom/algebra.hpp"
#include "strathom/bimodule.hpp"
#include "strathom/module.hpp"

namespace strathom {

// ---- isomorphism and simplicity ------------------------------------------

enum class IsoVerdict { yes, no, undetermined };

inline const char* to_string(IsoVerdict v) {
  switch (v) {
    case IsoVerdict::yes: return "yes";
    case IsoVerdict::no: return "no";
    default: return "undetermined";
  }
}

template <class K>
struct IsoResult {
  IsoVerdict verdict = IsoVerdict::undetermined;
  std::optional<Mat<K>> witness;  // invertible intertwiner m -> n
  std::string reason;
};

inline constexpr std::uint32_t kDefaultSeed = 20240611;
inline constexpr std::size_t kDefaultTrials = 32;

template <class K>
IsoResult<K> is_isomorphic(const ModulePtr<K>& m, const ModulePtr<K>& n, std::uint32_t seed = kDefaultSeed,
                           std::size_t trials = kDefaultTrials) {
  check_same_algebra(*m, *n, "is_isomorphic");
  const std::size_t d = m->dim();
  if (d != n->dim()) return {IsoVerdict::no, std::nullopt, "dimensions differ"};
  if (d == 0) return {IsoVerdict::yes, Mat<K>(0, 0), "both zero"};
  if (m->algebra()->has_idempotents() && m->dimension_vector() != n->dimension_vector())
    return {IsoVerdict::no, std::nullopt, "dimension vectors differ"};
  auto h = hom_basis(*m, *n);
  if (h.empty()) return {IsoVerdict::no, std::nullopt, "Hom(M,N) = 0"};
  auto mm = hom_dim(*m, *m);
  if (mm != h.size() || mm != hom_dim(*n, *m) || mm != hom_dim(*n, *n))
    return {IsoVerdict::no, std::nullopt, "Hom dimensions differ"};
  auto combo = [&](const std::vector<long>& c) {
    Mat<K> f(d, d);
    for (std::size_t i = 0; i < h.size(); ++i)
      if (c[i] != 0) f += h[i] * K::from_int(c[i]);
    return f;
  };
  std::mt19937 gen(seed);
  std::vector<long> c(h.size());
  for (std::size_t t = 0; t < trials; ++t) {
    for (auto& x : c) x = static_cast<long>(gen() % 19) - 9;
    auto f = combo(c);
    if (rank(f) == d) return {IsoVerdict::yes, f, "random combination is invertible"};
  }
  if (h.size() <= 4) {
    std::size_t total = 1;
    for (std::size_t i = 0; i < h.size(); ++i) total *= 5;
    for (std::size_t code = 0; code < total; ++code) {
      std::size_t r = code;
      for (auto& x : c) {
        x = static_cast<long>(r % 5) - 2;
        r /= 5;
      }
      auto f = combo(c);
      if (rank(f) == d) return {IsoVerdict::yes, f, "grid combination is invertible"};
    }
    // det is a polynomial of degree <= d in each coefficient; a grid of 5
    // distinct values then detects any nonzero one
    bool grid_distinct = K::characteristic() == 0 || K::characteristic() >= 5;
    if (d < 5 && grid_distinct) return {IsoVerdict::no, std::nullopt, "no invertible element on the exhaustive grid"};
  }
  return {IsoVerdict::undetermined, std::nullopt, "no invertible element found"};
}

/// Burnside: the image of A in End_k(M) is all of it.
template <class K>
bool is_absolutely_simple(const Module<K>& m) {
  const std::size_t d = m.dim();
  if (d == 0) return false;
  std::vector<Vec<K>> rows;
  for (std::size_t j = 0; j < m.algebra()->dim(); ++j) rows.push_back(flatten(m.rho(j)));
  return rank(Mat<K>::from_rows(rows, d * d)) == d * d;
}

// ---- endomorphism algebras -----------------------------------------------

template <class K>
struct EndAlgebra {
  AlgebraPtr<K> algebra;
  ModulePtr<K> module;
  std::vector<Mat<K>> maps;  // basis element i acts on the module by maps[i]
  Subspace<K> space;         // flattened maps, rref; coordinates read at pivots

  Vec<K> coords(const Mat<K>& f) const { return space.coords(flatten(f)); }
  Mat<K> map_of(const Vec<K>& x) const {
    Mat<K> f(module->dim(), module->dim());
    for (std::size_t i = 0; i < x.size(); ++i)
      if (!x[i].is_zero()) f += maps[i] * x[i];
    return f;
  }
};

/// End_A(M) with product f.g = f after g (matrix G F on row vectors).
/// Optional endomorphisms that form a complete set of primitive orthogonal
/// idempotents are recorded on the algebra.
template <class K>
EndAlgebra<K> endomorphism_algebra(const ModulePtr<K>& m, const std::vector<Mat<K>>& idempotent_maps = {}) {
  const std::size_t d = m->dim();
  if (d == 0) throw PreconditionError("endomorphism_algebra of the zero module is the zero ring");
  auto hb = hom_basis(*m, *m);
  std::vector<Vec<K>> flat;
  for (const auto& f : hb) flat.push_back(flatten(f));
  EndAlgebra<K> out;
  out.module = m;
  out.space = Subspace<K>::span(flat, d * d);
  for (const auto& r : out.space.basis()) out.maps.push_back(unflatten(r, d, d));
  const std::size_t n = out.maps.size();
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < n; ++i) labels.push_back("f" + std::to_string(i + 1));
  std::vector<Vec<K>> table;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) table.push_back(out.coords(out.maps[j] * out.maps[i]));
  typename Algebra<K>::Extras ex;
  if (!idempotent_maps.empty()) {
    std::vector<Vec<K>> idem;
    for (const auto& e : idempotent_maps) idem.push_back(out.coords(e));
    ex.idempotents = std::move(idem);
  }
  out.algebra = make_algebra<K>(std::move(labels), std::move(table), out.coords(Mat<K>::identity(d)), std::move(ex));
  return out;
}

/// End(M) is local with residue field k (split case); implies indecomposable.
template <class K>
bool is_absolutely_indecomposable(const ModulePtr<K>& m) {
  if (m->dim() == 0) return false;
  auto e = endomorphism_algebra(m);
  return e.algebra->radical().dim() + 1 == e.algebra->dim();
}

/// Primitive idempotent endomorphisms of m from an isomorphism
/// m = c_1^{k_1} + ... found by searching multiplicity vectors over the
/// candidate indecomposables. Returns the multiplicities too.
template <class K>
struct Decomposition {
  std::vector<std::size_t> multiplicities;
  std::vector<Mat<K>> idempotents;
  std::vector<std::size_t> summand_of;  // candidate index of each idempotent
};

template <class K>
std::optional<Decomposition<K>> decompose(const ModulePtr<K>& m, const std::vector<ModulePtr<K>>& candidates,
                                          std::uint32_t seed = kDefaultSeed) {
  const std::size_t d = m->dim();
  std::vector<std::size_t> mult(candidates.size(), 0);
  std::optional<Decomposition<K>> found;
  auto try_vec = [&]() {
    std::vector<ModulePtr<K>> parts;
    std::vector<std::size_t> owner;
    for (std::size_t i = 0; i < candidates.size(); ++i)
      for (std::size_t k = 0; k < mult[i]; ++k) parts.push_back(candidates[i]), owner.push_back(i);
    if (parts.empty()) return false;
    auto sum = direct_sum(parts);
    auto iso = is_isomorphic(sum.module, m, seed);
    if (iso.verdict != IsoVerdict::yes) return false;
    const auto& phi = *iso.witness;  // sum -> m
    auto phi_inv = inverse(phi);
    Decomposition<K> dec{mult, {}, owner};
    for (std::size_t k = 0; k < parts.size(); ++k) {
      auto pk = sum.projections[k].matrix * sum.inclusions[k].matrix;
      dec.idempotents.push_back(phi_inv * pk * phi);
    }
    found = std::move(dec);
    return true;
  };
  std::function<bool(std::size_t, std::size_t)> rec = [&](std::size_t i, std::size_t left) -> bool {
    if (i == candidates.size()) return left == 0 && try_vec();
    const auto cd = candidates[i]->dim();
    for (std::size_t k = 0; cd > 0 ? k * cd <= left : k == 0; ++k) {
      mult[i] = k;
      if (rec(i + 1, left - k * cd)) return true;
    }
    mult[i] = 0;
    return false;
  };
  if (d > 0) rec(0, d);
  return found;
}

/// Splits m into indecomposable summands by Fitting decompositions along
/// endomorphisms that are neither nilpotent nor invertible. Each summand is
/// returned as a basis (rows in m coordinates) with its projection.
template <class K>
struct SplitResult {
  std::vector<Mat<K>> bases;
  std::vector<Mat<K>> idempotents;
};

namespace detail {

template <class K>
std::optional<Mat<K>> splitting_endomorphism(const std::vector<Mat<K>>& hb, std::size_t d, std::mt19937& gen,
                                             std::size_t trials) {
  auto splits = [&](const Mat<K>& f) {
    Mat<K> p = f;
    for (std::size_t k = 1; k < d; k *= 2) p = p * p;
    auto r = rank(p);
    return r > 0 && r < d;
  };
  const std::vector<long> shifts{0, 1, -1, 2, -2};
  for (const auto& f : hb)
    for (long c : shifts) {
      auto g = f - Mat<K>::identity(d) * K::from_int(c);
      if (splits(g)) return g;
    }
  for (std::size_t t = 0; t < trials; ++t) {
    Mat<K> f(d, d);
    for (const auto& h : hb) f += h * K::from_int(static_cast<long>(gen() % 7) - 3);
    const auto& h = hb[gen() % hb.size()];
    for (const auto& g : {f, f * h, h * f})
      if (splits(g)) return g;
  }
  return std::nullopt;
}

}  // namespace detail

template <class K>
SplitResult<K> split_module(const ModulePtr<K>& m, std::uint32_t seed = kDefaultSeed, std::size_t trials = 64) {
  SplitResult<K> out;
  const std::size_t n = m->dim();
  if (n == 0) return out;
  std::mt19937 gen(seed);
  std::vector<Mat<K>> todo{Mat<K>::identity(n)};
  while (!todo.empty()) {
    auto u = todo.back();
    todo.pop_back();
    auto sub = submodule(m, Subspace<K>(u));
    const auto& bu = sub.inclusion.matrix;
    if (is_absolutely_indecomposable(sub.module)) {
      out.bases.push_back(bu);
      continue;
    }
    auto hb = hom_basis(*sub.module, *sub.module);
    auto f = detail::splitting_endomorphism(hb, bu.rows(), gen, trials);
    if (!f) throw IncompleteError("split_module: no splitting endomorphism found");
    Mat<K> p = *f;
    for (std::size_t k = 1; k < bu.rows(); k *= 2) p = p * p;
    auto ker = left_kernel(p);
    auto im = Subspace<K>(p).basis();
    todo.push_back(ker * bu);
    todo.push_back(Mat<K>::from_rows(im, bu.rows()) * bu);
  }
  // projections from the change of basis S = [X_1; ...; X_r]
  auto s = out.bases[0];
  for (std::size_t i = 1; i < out.bases.size(); ++i) s = vstack(s, out.bases[i]);
  auto s_inv = inverse(s);
  std::size_t off = 0;
  for (const auto& x : out.bases) {
    Mat<K> dsel(n, n);
    for (std::size_t i = 0; i < x.rows(); ++i) dsel(off + i, off + i) = K::from_int(1);
    out.idempotents.push_back(s_inv * dsel * s);
    off += x.rows();
  }
  return out;
}

// ---- module-level recollement functors -----------------------------------

enum class StratFunctor { i_star, i_shriek, j_shriek, j_lower, j_star };

inline const char* to_string(StratFunctor f) {
  switch (f) {
    case StratFunctor::i_star: return "i_star";
    case StratFunctor::i_shriek: return "i_shriek";
    case StratFunctor::j_shriek: return "j_shriek";
    case StratFunctor::j_lower: return "j_lower";
    default: return "j_star";
  }
}

/// The algebras around an idempotent e: eAe, A/AeA and the relevant
/// bimodules eA, Ae.
template <class K>
struct StratContext {
  AlgebraPtr<K> a;
  Vec<K> e;
  CornerResult<K> corner;
  IdealBasis<K> ideal;
  std::optional<QuotientResult<K>> quotient;  // absent when AeA = A
  BimodulePtr<K> ea;                          // eAe - A
  ModulePtr<K> ae_right;                      // Ae as a right eAe-module
  std::vector<Mat<K>> ae_left;                // left A-action on Ae
};

template <class K>
StratContext<K> strat_context(const AlgebraPtr<K>& a, const Vec<K>& e) {
  if (!a->is_idempotent(e)) throw PreconditionError("e is not idempotent");
  StratContext<K> s{a, e, corner(a, e), ideal_generated(a, {e}), std::nullopt, nullptr, nullptr, {}};
  if (!s.ideal.contains(a->unit())) s.quotient = quotient_by_ideal(a, s.ideal);
  const auto& c = s.corner.algebra;
  const auto& inc = s.corner.inclusion;
  // eA with the rref basis of {e b_i}
  std::vector<Vec<K>> rows;
  for (std::size_t i = 0; i < a->dim(); ++i) rows.push_back(a->mul(e, a->basis(i)));
  Subspace<K> ea = Subspace<K>::span(rows, a->dim());
  rows.clear();
  for (std::size_t i = 0; i < a->dim(); ++i) rows.push_back(a->mul(a->basis(i), e));
  Subspace<K> ae = Subspace<K>::span(rows, a->dim());
  auto act = [&](const Subspace<K>& sp, auto&& f) {
    Mat<K> m(sp.dim(), sp.dim());
    for (std::size_t i = 0; i < sp.dim(); ++i) m.set_row(i, sp.coords(f(sp.basis()[i])));
    return m;
  };
  std::vector<Mat<K>> lam, rho;
  for (std::size_t i = 0; i < c->dim(); ++i) {
    auto x = inc.row(i);
    lam.push_back(act(ea, [&](const Vec<K>& y) { return a->mul(x, y); }));
  }
  for (std::size_t j = 0; j < a->dim(); ++j) {
    auto b = a->basis(j);
    rho.push_back(act(ea, [&](const Vec<K>& y) { return a->mul(y, b); }));
  }
  s.ea = make_bimodule<K>(c, a, ea.dim(), std::move(lam), std::move(rho), false);
  std::vector<Mat<K>> ae_rho;
  for (std::size_t i = 0; i < c->dim(); ++i) {
    auto x = inc.row(i);
    ae_rho.push_back(act(ae, [&](const Vec<K>& y) { return a->mul(y, x); }));
  }
  s.ae_right = make_module<K>(c, ae.dim(), std::move(ae_rho), false);
  for (std::size_t j = 0; j < a->dim(); ++j) {
    auto b = a->basis(j);
    s.ae_left.push_back(act(ae, [&](const Vec<K>& y) { return a->mul(b, y); }));
  }
  return s;
}

/// A module killed by AeA as a module over A/AeA.
template <class K>
ModulePtr<K> descend(const StratContext<K>& s, const ModulePtr<K>& m) {
  const auto& q = *s.quotient;
  const auto& b = q.algebra;
  // lift of the quotient basis: parent basis elements at the complement columns
  QuotientSpace<K> qs(s.ideal.space);
  std::vector<Mat<K>> rho;
  for (std::size_t i = 0; i < b->dim(); ++i) rho.push_back(m->rho_elem(qs.lift(b->basis(i))));
  return make_module<K>(b, m->dim(), std::move(rho), false);
}

/// M / M.AeA over A/AeA.
template <class K>
ModulePtr<K> i_star(const StratContext<K>& s, const ModulePtr<K>& m) {
  if (!s.quotient) throw PreconditionError("AeA = A: the quotient A/AeA is the zero ring");
  std::vector<Vec<K>> rows;
  for (const auto& x : s.ideal.space.basis()) {
    auto r = m->rho_elem(x);
    for (std::size_t i = 0; i < m->dim(); ++i) rows.push_back(r.row(i));
  }
  auto q = quotient_module(m, Subspace<K>::span(rows, m->dim())).module;
  return descend(s, q);
}

/// {m : m.AeA = 0} over A/AeA.
template <class K>
ModulePtr<K> i_shriek(const StratContext<K>& s, const ModulePtr<K>& m) {
  if (!s.quotient) throw PreconditionError("AeA = A: the quotient A/AeA is the zero ring");
  Mat<K> big(m->dim(), 0);
  for (const auto& x : s.ideal.space.basis()) big = hstack(big, m->rho_elem(x));
  Subspace<K> ann = big.cols() ? Subspace<K>(left_kernel(big)) : Subspace<K>(Mat<K>::identity(m->dim()));
  if (ann.dim() == 0) return zero_module(s.quotient->algebra);
  return descend(s, submodule(m, ann).module);
}

/// M e over eAe.
template <class K>
ModulePtr<K> j_shriek(const StratContext<K>& s, const ModulePtr<K>& m) {
  if (!same_algebra(*m->algebra(), *s.a)) throw DomainError("j_shriek expects a module over A");
  if (m->dim() == 0) return zero_module(s.corner.algebra);
  Subspace<K> me(m->rho_elem(s.e));
  if (me.dim() == 0) return zero_module(s.corner.algebra);
  std::vector<Mat<K>> rho;
  for (std::size_t i = 0; i < s.corner.algebra->dim(); ++i) {
    auto r = m->rho_elem(s.corner.inclusion.row(i));
    Mat<K> x(me.dim(), me.dim());
    for (std::size_t k = 0; k < me.dim(); ++k) x.set_row(k, me.coords(r.apply(me.basis()[k])));
    rho.push_back(std::move(x));
  }
  return make_module<K>(s.corner.algebra, me.dim(), std::move(rho), false);
}

/// X (x)_{eAe} eA over A.
template <class K>
ModulePtr<K> j_lower(const StratContext<K>& s, const ModulePtr<K>& x) {
  if (!same_algebra(*x->algebra(), *s.corner.algebra)) throw DomainError("j_lower expects a module over eAe");
  return tensor_over(*x, *s.ea).module;
}

/// Hom_{eAe}(Ae, X) over A, (f.a)(y) = f(a y).
template <class K>
ModulePtr<K> j_star(const StratContext<K>& s, const ModulePtr<K>& x) {
  if (!same_algebra(*x->algebra(), *s.corner.algebra)) throw DomainError("j_star expects a module over eAe");
  auto hb = hom_basis(*s.ae_right, *x);
  if (hb.empty()) return zero_module(s.a);
  const std::size_t d = s.ae_right->dim() * x->dim();
  std::vector<Vec<K>> flat;
  for (const auto& f : hb) flat.push_back(flatten(f));
  Subspace<K> sp = Subspace<K>::span(flat, d);
  std::vector<Mat<K>> rho;
  for (std::size_t j = 0; j < s.a->dim(); ++j) {
    Mat<K> r(sp.dim(), sp.dim());
    for (std::size_t k = 0; k < sp.dim(); ++k) {
      auto f = unflatten(sp.basis()[k], s.ae_right->dim(), x->dim());
      r.set_row(k, sp.coords(flatten(s.ae_left[j] * f)));
    }
    rho.push_back(std::move(r));
  }
  return make_module<K>(s.a, sp.dim(), std::move(rho), false);
}

template <class K>
ModulePtr<K> strat_functor(const StratContext<K>& s, StratFunctor which, const ModulePtr<K>& m) {
  switch (which) {
    case StratFunctor::i_star: return i_star(s, m);
    case StratFunctor::i_shriek: return i_shriek(s, m);
    case StratFunctor::j_shriek: return j_shriek(s, m);
    case StratFunctor::j_lower: return j_lower(s, m);
    default: return j_star(s, m);
  }
}

template <class K>
ModulePtr<K> strat_functor(const AlgebraPtr<K>& a, const Vec<K>& e, StratFunctor which, const ModulePtr<K>& m) {
  return strat_functor(strat_context(a, e), which, m);
}

}  // namespace strathom
