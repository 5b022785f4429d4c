#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "strathom/functors.hpp"
#include "strathom/module.hpp"
#include "strathom/resolution.hpp"

namespace strathom {

enum class Verdict { yes, no, inconclusive };

inline const char* to_string(Verdict v) {
  switch (v) {
    case Verdict::yes: return "yes";
    case Verdict::no: return "no";
    default: return "inconclusive";
  }
}

/// 0 -> A -> T0 -> T1 -> 0 with T0, T1 in add(T).
template <class K>
struct Coresolution {
  ModuleMap<K> inclusion;                // A_A -> T0
  ModulePtr<K> t1;
  std::vector<std::size_t> t0_mult, t1_mult;  // multiplicities of the summands
};

template <class K>
struct TiltingReport {
  Verdict verdict = Verdict::inconclusive;
  std::string reason;
  std::vector<std::size_t> pds;                   // only filled when all are <= 1
  std::vector<std::vector<std::size_t>> ext1;     // ext1[i][j] = dim Ext^1(T_i, T_j)
  std::optional<Coresolution<K>> coresolution;
};

namespace detail {

/// Sum of the images of all radical maps T_i -> T_j inside T_j.
template <class K>
Subspace<K> radical_image(const std::vector<ModulePtr<K>>& ts, std::size_t j) {
  const auto& tj = *ts[j];
  std::vector<Vec<K>> rows;
  for (std::size_t i = 0; i < ts.size(); ++i) {
    auto hb = hom_basis(*ts[i], tj);
    std::vector<Mat<K>> rad;
    if (i != j) {
      rad = hb;
    } else {
      auto e = endomorphism_algebra(ts[j]);
      for (const auto& r : e.algebra->radical().basis()) rad.push_back(e.map_of(r));
    }
    for (const auto& f : rad)
      for (std::size_t r = 0; r < f.rows(); ++r) rows.push_back(f.row(r));
  }
  return Subspace<K>::span(rows, tj.dim());
}

}  // namespace detail

/// Checks whether m lies in add(ts); returns multiplicities.
template <class K>
std::optional<std::vector<std::size_t>> add_multiplicities(const ModulePtr<K>& m, const std::vector<ModulePtr<K>>& ts) {
  if (m->dim() == 0) return std::vector<std::size_t>(ts.size(), 0);
  auto d = decompose(m, ts);
  if (!d) return std::nullopt;
  return d->multiplicities;
}

/// Given an injective A-map A_A -> T0 with T0 in add(ts), checks T0/A in add(ts).
template <class K>
std::optional<Coresolution<K>> check_coresolution(const ModuleMap<K>& inc, const std::vector<ModulePtr<K>>& ts) {
  if (rank(inc.matrix) != inc.source->dim()) return std::nullopt;
  auto t0 = add_multiplicities(inc.target, ts);
  if (!t0) return std::nullopt;
  auto q = cokernel_module(inc);
  auto t1 = add_multiplicities(q.module, ts);
  if (!t1) return std::nullopt;
  return Coresolution<K>{inc, q.module, *t0, *t1};
}

/// Classical tilting test for T = T_1 + ... + T_r given by pairwise
/// non-isomorphic indecomposable summands: pd <= 1, Ext^1(T, T) = 0, and the
/// cokernel of a minimal left add(T)-approximation of A_A lies in add(T).
template <class K>
TiltingReport<K> is_classical_tilting(const std::vector<ModulePtr<K>>& ts, const AlgebraPtr<K>& a) {
  TiltingReport<K> rep;
  if (ts.empty()) {
    rep.verdict = Verdict::no;
    rep.reason = "T is zero";
    return rep;
  }
  for (const auto& t : ts) {
    if (!same_algebra(*t->algebra(), *a)) throw DomainError("is_classical_tilting: summand over a different algebra");
    if (!is_absolutely_indecomposable(t)) throw PreconditionError("is_classical_tilting: summands must be indecomposable");
  }
  for (std::size_t i = 0; i < ts.size(); ++i)
    for (std::size_t j = i + 1; j < ts.size(); ++j) {
      auto v = is_isomorphic(ts[i], ts[j]).verdict;
      if (v == IsoVerdict::yes) throw PreconditionError("is_classical_tilting: summands must be pairwise non-isomorphic");
      if (v == IsoVerdict::undetermined) {
        rep.reason = "could not decide whether two summands are isomorphic";
        return rep;
      }
    }
  for (std::size_t i = 0; i < ts.size(); ++i) {
    auto p = pd(ts[i], 1);
    if (!p) {
      rep.verdict = Verdict::no;
      rep.reason = "summand " + std::to_string(i) + " has projective dimension > 1";
      return rep;
    }
    rep.pds.push_back(*p);
  }
  std::vector<ProjResolution<K>> res;
  for (const auto& t : ts) res.push_back(min_proj_resolution(t, 2));
  bool ext_ok = true;
  for (std::size_t i = 0; i < ts.size(); ++i) {
    rep.ext1.emplace_back();
    for (std::size_t j = 0; j < ts.size(); ++j) {
      auto e = ext_dim_from(res[i], *ts[j], 1);
      rep.ext1[i].push_back(e);
      if (e) ext_ok = false;
    }
  }
  if (!ext_ok) {
    rep.verdict = Verdict::no;
    rep.reason = "Ext^1(T, T) != 0";
    return rep;
  }
  // minimal left add(T)-approximation: 1 -> generators of T_j modulo radical images
  auto reg = regular_module(a);
  std::vector<ModulePtr<K>> parts;
  std::vector<Vec<K>> gens;
  for (std::size_t j = 0; j < ts.size(); ++j) {
    auto f = detail::radical_image(ts, j);
    for (auto c : f.complement_columns()) {
      parts.push_back(ts[j]);
      gens.push_back(unit_vec<K>(ts[j]->dim(), c));
    }
  }
  auto t0 = direct_sum(parts);
  Mat<K> m(a->dim(), t0.module->dim());
  for (std::size_t i = 0; i < a->dim(); ++i) {
    std::size_t off = 0;
    for (std::size_t k = 0; k < parts.size(); ++k) {
      auto img = parts[k]->rho(i).apply(gens[k]);
      for (std::size_t c = 0; c < img.size(); ++c) m(i, off + c) = img[c];
      off += parts[k]->dim();
    }
  }
  ModuleMap<K> inc(reg, t0.module, std::move(m));
  if (rank(inc.matrix) != a->dim()) {
    rep.verdict = Verdict::no;
    rep.reason = "A is not cogenerated by T";
    return rep;
  }
  rep.coresolution = check_coresolution(inc, ts);
  if (!rep.coresolution) {
    rep.verdict = Verdict::no;
    rep.reason = "cokernel of the add(T)-approximation of A is not in add(T)";
    return rep;
  }
  rep.verdict = Verdict::yes;
  rep.reason = "pd <= 1, Ext^1 = 0 and 0 -> A -> T0 -> T1 -> 0 exists";
  return rep;
}

}  // namespace strathom
