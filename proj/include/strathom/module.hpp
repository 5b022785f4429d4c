#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "strathom/algebra.hpp"
#include "strathom/errors.hpp"
#include "strathom/matrix.hpp"

namespace strathom {

template <class K>
class Module;
template <class K>
using ModulePtr = std::shared_ptr<const Module<K>>;

/// Finite-dimensional right module: v . b_j = v * rho(j) on row vectors,
/// so rho(xy) = rho(x) rho(y).
template <class K>
class Module {
 public:
  /// Basis adapted to the primitive idempotents: rows of S are a basis of
  /// M e_1, then M e_2, ... In these coordinates idempotents act blockwise.
  struct Adapted {
    std::vector<std::size_t> offset;  // block v occupies [offset[v], offset[v+1])
    Mat<K> s, s_inv;
    std::vector<Mat<K>> gens;  // S rho(g) S^-1 for the non-idempotent generators
    std::size_t block_size(std::size_t v) const { return offset[v + 1] - offset[v]; }
  };

  Module(AlgebraPtr<K> a, std::size_t dim, std::vector<Mat<K>> rho, bool verify = true)
      : a_(std::move(a)), d_(dim), rho_(std::move(rho)) {
    if (rho_.size() != a_->dim()) throw DomainError("module needs one action matrix per basis element");
    for (const auto& m : rho_)
      if (m.rows() != d_ || m.cols() != d_) throw DomainError("action matrix has wrong shape");
    if (verify) check();
  }

  const AlgebraPtr<K>& algebra() const { return a_; }
  std::size_t dim() const { return d_; }
  const Mat<K>& rho(std::size_t j) const { return rho_[j]; }
  const std::vector<Mat<K>>& action() const { return rho_; }
  Mat<K> rho_elem(const Vec<K>& x) const {
    Mat<K> m(d_, d_);
    for (std::size_t j = 0; j < x.size(); ++j)
      if (!x[j].is_zero()) m += rho_[j] * x[j];
    return m;
  }
  Vec<K> act(const Vec<K>& v, const Vec<K>& x) const { return rho_elem(x).apply(v); }

  /// Vertex list when this is literally  e_{v_1}A + ... + e_{v_r}A with the
  /// rref basis of each summand (see projective_sum).
  const std::optional<std::vector<std::size_t>>& projective_vertices() const { return proj_; }
  void mark_projective(std::vector<std::size_t> vs) { proj_ = std::move(vs); }

  const std::string& name() const { return name_; }
  void set_name(std::string n) { name_ = std::move(n); }

  const Adapted& adapted() const {
    if (!adapted_) adapted_ = std::make_shared<Adapted>(build_adapted());
    return *adapted_;
  }

  /// Dimension of M e_v for each primitive idempotent.
  std::vector<std::size_t> dimension_vector() const {
    const auto& ad = adapted();
    std::vector<std::size_t> out;
    for (std::size_t v = 0; v + 1 < ad.offset.size(); ++v) out.push_back(ad.block_size(v));
    return out;
  }

 private:
  void check() const {
    if (rho_elem(a_->unit()) != Mat<K>::identity(d_)) throw DomainError("unit does not act as the identity");
    // rho(b_i g) = rho(b_i) rho(g) for generators g implies multiplicativity
    for (const auto& g : a_->generators()) {
      auto rg = rho_elem(g);
      for (std::size_t i = 0; i < a_->dim(); ++i)
        if (rho_[i] * rg != rho_elem(a_->mul(a_->basis(i), g)))
          throw DomainError("action is not multiplicative at basis element " + a_->labels()[i]);
    }
  }

  Adapted build_adapted() const {
    Adapted ad;
    ad.offset.push_back(0);
    std::vector<Vec<K>> rows;
    if (a_->has_idempotents()) {
      for (const auto& e : a_->idempotents()) {
        Subspace<K> img(rho_elem(e));
        for (const auto& r : img.basis()) rows.push_back(r);
        ad.offset.push_back(rows.size());
      }
    } else {
      for (std::size_t i = 0; i < d_; ++i) rows.push_back(unit_vec<K>(d_, i));
      ad.offset.push_back(d_);
    }
    ad.s = Mat<K>::from_rows(rows, d_);
    ad.s_inv = d_ ? inverse(ad.s) : Mat<K>();
    for (const auto& g : a_->non_idempotent_generators()) ad.gens.push_back(d_ ? ad.s * rho_elem(g) * ad.s_inv : Mat<K>());
    return ad;
  }

  AlgebraPtr<K> a_;
  std::size_t d_;
  std::vector<Mat<K>> rho_;
  std::optional<std::vector<std::size_t>> proj_;
  std::string name_;
  mutable std::shared_ptr<Adapted> adapted_;
};

template <class K>
ModulePtr<K> make_module(AlgebraPtr<K> a, std::size_t dim, std::vector<Mat<K>> rho, bool verify = true) {
  return std::make_shared<const Module<K>>(std::move(a), dim, std::move(rho), verify);
}

template <class K>
void check_same_algebra(const Module<K>& m, const Module<K>& n, const char* what) {
  if (!same_algebra(*m.algebra(), *n.algebra())) throw DomainError(std::string(what) + ": modules over different algebras");
}

/// Intertwiner f: source -> target, v -> v * matrix.
template <class K>
struct ModuleMap {
  ModulePtr<K> source;
  ModulePtr<K> target;
  Mat<K> matrix;

  ModuleMap(ModulePtr<K> s, ModulePtr<K> t, Mat<K> m, bool verify = true)
      : source(std::move(s)), target(std::move(t)), matrix(std::move(m)) {
    if (matrix.rows() != source->dim() || matrix.cols() != target->dim()) throw DomainError("module map has wrong shape");
    if (verify) {
      check_same_algebra(*source, *target, "module map");
      for (const auto& g : source->algebra()->generators())
        if (source->rho_elem(g) * matrix != matrix * target->rho_elem(g))
          throw DomainError("matrix does not intertwine the actions");
    }
  }

  Vec<K> apply(const Vec<K>& v) const { return matrix.apply(v); }
  std::size_t rank() const { return strathom::rank(matrix); }
};

/// g after f.
template <class K>
ModuleMap<K> compose(const ModuleMap<K>& g, const ModuleMap<K>& f) {
  if (f.target->dim() != g.source->dim()) throw DomainError("compose: modules do not match");
  return ModuleMap<K>(f.source, g.target, f.matrix * g.matrix, false);
}

template <class K>
ModuleMap<K> identity_map(const ModulePtr<K>& m) {
  return ModuleMap<K>(m, m, Mat<K>::identity(m->dim()), false);
}

template <class K>
ModulePtr<K> zero_module(const AlgebraPtr<K>& a) {
  return make_module<K>(a, 0, std::vector<Mat<K>>(a->dim(), Mat<K>(0, 0)), false);
}

/// Module from the action of selected elements (typically generators);
/// the action on the remaining basis is forced by multiplicativity.
template <class K>
ModulePtr<K> module_from_action(const AlgebraPtr<K>& a, std::size_t dim,
                                const std::vector<std::pair<Vec<K>, Mat<K>>>& given) {
  const std::size_t n = a->dim();
  std::vector<Vec<K>> elems{a->unit()};
  std::vector<Mat<K>> mats{Mat<K>::identity(dim)};
  Subspace<K> span(n);
  span.extend(a->unit());
  std::vector<std::size_t> frontier{0};
  while (!frontier.empty() && span.dim() < n) {
    std::vector<std::size_t> next;
    for (auto idx : frontier)
      for (const auto& [g, gm] : given) {
        auto x = a->mul(elems[idx], g);
        if (!span.extend(x)) continue;
        elems.push_back(x);
        mats.push_back(mats[idx] * gm);
        next.push_back(elems.size() - 1);
      }
    frontier = std::move(next);
  }
  if (span.dim() < n) throw DomainError("given elements do not generate the algebra");
  // express each basis element in the word elements
  auto e = Mat<K>::from_rows(elems, n).transpose();
  std::vector<Mat<K>> rho;
  for (std::size_t j = 0; j < n; ++j) {
    auto c = solve(e, a->basis(j));
    Mat<K> r(dim, dim);
    for (std::size_t i = 0; i < c->size(); ++i)
      if (!(*c)[i].is_zero()) r += mats[i] * (*c)[i];
    rho.push_back(std::move(r));
  }
  auto m = make_module<K>(a, dim, std::move(rho));
  for (const auto& [g, gm] : given)
    if (m->rho_elem(g) != gm) throw DomainError("given action is not multiplicative");
  return m;
}

/// Representation of a path algebra: dims per vertex and, for each arrow
/// a: s -> t, a dims[t] x dims[s] matrix (a acts M_t -> M_s on rows).
template <class K>
ModulePtr<K> quiver_module(const AlgebraPtr<K>& a, const std::vector<std::size_t>& dims,
                           const std::vector<Mat<K>>& arrow_mats) {
  const auto* q = a->quiver();
  if (!q) throw PreconditionError("quiver_module: algebra has no quiver presentation");
  const auto& pres = q->presentation;
  if (dims.size() != pres.vertices.size()) throw DomainError("quiver_module: one dimension per vertex expected");
  if (arrow_mats.size() != pres.arrows.size()) throw DomainError("quiver_module: one matrix per arrow expected");
  std::vector<std::size_t> off{0};
  for (auto d : dims) off.push_back(off.back() + d);
  const std::size_t d = off.back();
  std::vector<Mat<K>> arrow_rho;
  for (std::size_t k = 0; k < pres.arrows.size(); ++k) {
    const auto& ar = pres.arrows[k];
    const auto& m = arrow_mats[k];
    if (m.rows() != dims[ar.target] || m.cols() != dims[ar.source])
      throw DomainError("arrow " + ar.name + " needs a " + std::to_string(dims[ar.target]) + "x" +
                        std::to_string(dims[ar.source]) + " matrix");
    Mat<K> r(d, d);
    r.set_block(off[ar.target], off[ar.source], m);
    arrow_rho.push_back(std::move(r));
  }
  std::vector<Mat<K>> rho;
  for (std::size_t i = 0; i < a->dim(); ++i) {
    const auto& path = q->paths[i];
    Mat<K> r(d, d);
    if (path.empty()) {
      auto v = q->source[i];
      for (std::size_t j = off[v]; j < off[v + 1]; ++j) r(j, j) = K::from_int(1);
    } else {
      r = arrow_rho[path.back()];
      for (std::size_t k = path.size() - 1; k-- > 0;) r = r * arrow_rho[path[k]];
    }
    rho.push_back(std::move(r));
  }
  try {
    return make_module<K>(a, d, std::move(rho));
  } catch (const DomainError& e) {
    throw DomainError(std::string("representation violates a relation: ") + e.what());
  }
}

template <class K>
ModulePtr<K> regular_module(const AlgebraPtr<K>& a) {
  std::vector<Mat<K>> rho;
  for (std::size_t j = 0; j < a->dim(); ++j) rho.push_back(a->right_mult(j));
  return make_module<K>(a, a->dim(), std::move(rho), false);
}

template <class K>
struct SubmoduleResult {
  ModulePtr<K> module;
  ModuleMap<K> inclusion;
};

template <class K>
struct QuotientModuleResult {
  ModulePtr<K> module;
  ModuleMap<K> projection;
};

/// Smallest submodule containing the given vectors.
template <class K>
Subspace<K> generated_subspace(const Module<K>& m, const std::vector<Vec<K>>& vs) {
  Subspace<K> s(m.dim());
  std::vector<Vec<K>> frontier;
  for (const auto& v : vs)
    if (s.extend(v)) frontier.push_back(v);
  std::vector<Mat<K>> gens;
  for (const auto& g : m.algebra()->generators()) gens.push_back(m.rho_elem(g));
  while (!frontier.empty()) {
    std::vector<Vec<K>> next;
    for (const auto& v : frontier)
      for (const auto& g : gens) {
        auto w = g.apply(v);
        if (s.extend(w)) next.push_back(std::move(w));
      }
    frontier = std::move(next);
  }
  return s;
}

template <class K>
SubmoduleResult<K> submodule(const ModulePtr<K>& m, const Subspace<K>& w) {
  const auto& bs = w.basis();
  std::vector<Mat<K>> rho;
  for (std::size_t j = 0; j < m->algebra()->dim(); ++j) {
    Mat<K> r(bs.size(), bs.size());
    for (std::size_t i = 0; i < bs.size(); ++i) {
      auto img = m->rho(j).apply(bs[i]);
      if (!w.contains(img)) throw DomainError("subspace is not a submodule");
      r.set_row(i, w.coords(img));
    }
    rho.push_back(std::move(r));
  }
  auto sub = make_module<K>(m->algebra(), bs.size(), std::move(rho), false);
  return {sub, ModuleMap<K>(sub, m, Mat<K>::from_rows(bs, m->dim()), false)};
}

template <class K>
QuotientModuleResult<K> quotient_module(const ModulePtr<K>& m, const Subspace<K>& w) {
  QuotientSpace<K> q(w);
  std::vector<Mat<K>> rho;
  for (std::size_t j = 0; j < m->algebra()->dim(); ++j) {
    Mat<K> r(q.dim(), q.dim());
    for (std::size_t i = 0; i < q.dim(); ++i) r.set_row(i, q.coords(m->rho(j).row(q.complement()[i])));
    rho.push_back(std::move(r));
  }
  for (const auto& b : w.basis())
    for (std::size_t j = 0; j < m->algebra()->dim(); ++j)
      if (!w.contains(m->rho(j).apply(b))) throw DomainError("subspace is not a submodule");
  auto quo = make_module<K>(m->algebra(), q.dim(), std::move(rho), false);
  Mat<K> p(m->dim(), q.dim());
  for (std::size_t i = 0; i < m->dim(); ++i) p.set_row(i, q.coords(unit_vec<K>(m->dim(), i)));
  return {quo, ModuleMap<K>(m, quo, std::move(p), false)};
}

template <class K>
SubmoduleResult<K> kernel_module(const ModuleMap<K>& f) {
  return submodule(f.source, Subspace<K>(left_kernel(f.matrix)));
}

template <class K>
SubmoduleResult<K> image_module(const ModuleMap<K>& f) {
  return submodule(f.target, Subspace<K>(f.matrix));
}

template <class K>
QuotientModuleResult<K> cokernel_module(const ModuleMap<K>& f) {
  return quotient_module(f.target, Subspace<K>(f.matrix.rows() ? f.matrix : Mat<K>(0, f.target->dim())));
}

template <class K>
struct DirectSum {
  ModulePtr<K> module;
  std::vector<ModuleMap<K>> inclusions;
  std::vector<ModuleMap<K>> projections;
};

template <class K>
DirectSum<K> direct_sum(const std::vector<ModulePtr<K>>& ms) {
  if (ms.empty()) throw PreconditionError("direct_sum of an empty list");
  const auto& a = ms.front()->algebra();
  std::size_t d = 0;
  bool proj = true;
  std::vector<std::size_t> pv;
  for (const auto& m : ms) {
    check_same_algebra(*ms.front(), *m, "direct_sum");
    d += m->dim();
    if (m->projective_vertices()) {
      pv.insert(pv.end(), m->projective_vertices()->begin(), m->projective_vertices()->end());
    } else if (m->dim() > 0) {
      proj = false;
    }
  }
  std::vector<Mat<K>> rho;
  for (std::size_t j = 0; j < a->dim(); ++j) {
    std::vector<Mat<K>> blocks;
    for (const auto& m : ms) blocks.push_back(m->rho(j));
    rho.push_back(block_diag(blocks));
  }
  auto sum = std::make_shared<Module<K>>(a, d, std::move(rho), false);
  if (proj) sum->mark_projective(std::move(pv));
  DirectSum<K> out{sum, {}, {}};
  std::size_t off = 0;
  for (const auto& m : ms) {
    Mat<K> inc(m->dim(), d), pr(d, m->dim());
    for (std::size_t i = 0; i < m->dim(); ++i) inc(i, off + i) = pr(off + i, i) = K::from_int(1);
    out.inclusions.emplace_back(m, sum, std::move(inc), false);
    out.projections.emplace_back(sum, m, std::move(pr), false);
    off += m->dim();
  }
  return out;
}

template <class K>
ModulePtr<K> power(const ModulePtr<K>& m, std::size_t k) {
  if (k == 0) return zero_module(m->algebra());
  return direct_sum(std::vector<ModulePtr<K>>(k, m)).module;
}

/// e A for an idempotent e, on the rref basis of {e b_i}.
template <class K>
ModulePtr<K> projective_module(const AlgebraPtr<K>& a, const Vec<K>& e) {
  if (!a->is_idempotent(e)) throw PreconditionError("projective_module: element is not idempotent");
  std::vector<Vec<K>> rows;
  for (std::size_t i = 0; i < a->dim(); ++i) rows.push_back(a->mul(e, a->basis(i)));
  auto sub = submodule(regular_module(a), Subspace<K>::span(rows, a->dim())).module;
  return sub;
}

/// P_v = e_v A for a primitive idempotent.
template <class K>
ModulePtr<K> indec_projective(const AlgebraPtr<K>& a, std::size_t v) {
  auto p = projective_module(a, a->idempotents().at(v));
  auto m = std::make_shared<Module<K>>(*p);
  m->mark_projective({v});
  return m;
}

template <class K>
std::vector<ModulePtr<K>> indec_projectives(const AlgebraPtr<K>& a) {
  std::vector<ModulePtr<K>> out;
  for (std::size_t v = 0; v < a->idempotents().size(); ++v) out.push_back(indec_projective(a, v));
  return out;
}

/// e_{v_1}A + ... + e_{v_r}A.
template <class K>
ModulePtr<K> projective_sum(const AlgebraPtr<K>& a, const std::vector<std::size_t>& vs) {
  if (vs.empty()) {
    auto z = std::make_shared<Module<K>>(*zero_module(a));
    z->mark_projective({});
    return z;
  }
  std::vector<ModulePtr<K>> ps;
  for (auto v : vs) ps.push_back(indec_projective(a, v));
  return direct_sum(ps).module;
}

/// M rad(A).
template <class K>
Subspace<K> radical_subspace(const Module<K>& m) {
  std::vector<Vec<K>> rows;
  for (const auto& r : m.algebra()->radical().basis()) {
    auto rr = m.rho_elem(r);
    for (std::size_t i = 0; i < m.dim(); ++i) rows.push_back(rr.row(i));
  }
  return Subspace<K>::span(rows, m.dim());
}

template <class K>
QuotientModuleResult<K> top(const ModulePtr<K>& m) {
  return quotient_module(m, radical_subspace(*m));
}

template <class K>
ModulePtr<K> restrict_along(const RingHom<K>& f, const ModulePtr<K>& m) {
  if (!same_algebra(*f.target(), *m->algebra())) throw DomainError("restrict_along: module is not over the target");
  std::vector<Mat<K>> rho;
  for (std::size_t i = 0; i < f.source()->dim(); ++i) rho.push_back(m->rho_elem(f.image_of_basis(i)));
  return make_module<K>(f.source(), m->dim(), std::move(rho), false);
}

/// Basis of Hom_A(m, n) as matrices (m.dim x n.dim).
template <class K>
std::vector<Mat<K>> hom_basis(const Module<K>& m, const Module<K>& n) {
  check_same_algebra(m, n, "hom_space");
  const std::size_t dm = m.dim(), dn = n.dim();
  if (dm == 0 || dn == 0) return {};
  if (m.projective_vertices() && m.algebra()->has_idempotents()) {
    // Hom(e_v A, N) = N e_v: a map is fixed by the image of the generator e_v
    const auto& a = *m.algebra();
    const auto& vs = *m.projective_vertices();
    std::vector<Mat<K>> out;
    std::size_t off = 0;
    for (std::size_t k = 0; k < vs.size(); ++k) {
      const auto& e = a.idempotents()[vs[k]];
      Subspace<K> ne(n.rho_elem(e));
      std::vector<Vec<K>> pbasis;
      for (std::size_t i = 0; i < a.dim(); ++i) pbasis.push_back(a.mul(e, a.basis(i)));
      Subspace<K> p = Subspace<K>::span(pbasis, a.dim());
      for (const auto& y : ne.basis()) {
        Mat<K> f(dm, dn);
        for (std::size_t i = 0; i < p.dim(); ++i) f.set_row(off + i, n.rho_elem(p.basis()[i]).apply(y));
        out.push_back(std::move(f));
      }
      off += p.dim();
    }
    return out;
  }
  const auto& am = m.adapted();
  const auto& an = n.adapted();
  const std::size_t nb = am.offset.size() - 1;
  // unknown F'(k, l) for k, l in the same block
  std::vector<std::size_t> ublock(nb + 1, 0);
  for (std::size_t v = 0; v < nb; ++v) ublock[v + 1] = ublock[v] + am.block_size(v) * an.block_size(v);
  const std::size_t nu = ublock[nb];
  if (nu == 0) return {};
  std::vector<std::size_t> bm(dm), bn(dn);
  for (std::size_t v = 0; v < nb; ++v) {
    for (std::size_t i = am.offset[v]; i < am.offset[v + 1]; ++i) bm[i] = v;
    for (std::size_t i = an.offset[v]; i < an.offset[v + 1]; ++i) bn[i] = v;
  }
  auto unk = [&](std::size_t k, std::size_t l) {
    auto v = bm[k];
    return ublock[v] + (k - am.offset[v]) * an.block_size(v) + (l - an.offset[v]);
  };
  std::vector<Vec<K>> eqs;
  for (std::size_t g = 0; g < am.gens.size(); ++g) {
    const auto& rm = am.gens[g];
    const auto& rn = an.gens[g];
    for (std::size_t i = 0; i < dm; ++i)
      for (std::size_t l = 0; l < dn; ++l) {
        auto row = zero_vec<K>(nu);
        bool any = false;
        auto vl = bn[l];
        for (std::size_t k = am.offset[vl]; k < am.offset[vl + 1]; ++k)
          if (!rm(i, k).is_zero()) row[unk(k, l)] += rm(i, k), any = true;
        auto vi = bm[i];
        for (std::size_t k = an.offset[vi]; k < an.offset[vi + 1]; ++k)
          if (!rn(k, l).is_zero()) row[unk(i, k)] -= rn(k, l), any = true;
        if (any && !is_zero(row)) eqs.push_back(std::move(row));
      }
  }
  Mat<K> sol = eqs.empty() ? Mat<K>::identity(nu) : kernel_basis(Mat<K>::from_rows(eqs, nu));
  std::vector<Mat<K>> out;
  for (std::size_t c = 0; c < sol.cols(); ++c) {
    Mat<K> fp(dm, dn);
    for (std::size_t k = 0; k < dm; ++k)
      for (std::size_t l = an.offset[bm[k]]; l < an.offset[bm[k] + 1]; ++l) fp(k, l) = sol(unk(k, l), c);
    out.push_back(am.s_inv * fp * an.s);
  }
  return out;
}

template <class K>
std::vector<ModuleMap<K>> hom_space(const ModulePtr<K>& m, const ModulePtr<K>& n) {
  std::vector<ModuleMap<K>> out;
  for (auto& f : hom_basis(*m, *n)) out.emplace_back(m, n, std::move(f), false);
  return out;
}

template <class K>
std::size_t hom_dim(const Module<K>& m, const Module<K>& n) {
  return hom_basis(m, n).size();
}

/// Simple modules: tops of the indecomposable projectives, with isomorphic
/// tops (non-basic algebras) listed once. Two simples are isomorphic iff
/// Hom between them is nonzero.
template <class K>
std::vector<ModulePtr<K>> simple_modules(const AlgebraPtr<K>& a) {
  if (!a->has_idempotents())
    throw PreconditionError("simple_modules needs primitive idempotents; supply candidate simples and check them with is_absolutely_simple");
  std::vector<ModulePtr<K>> out;
  for (std::size_t v = 0; v < a->idempotents().size(); ++v) {
    auto s = top(indec_projective(a, v)).module;
    bool dup = false;
    for (const auto& t : out)
      if (hom_dim(*t, *s) > 0) dup = true;
    if (!dup) out.push_back(s);
  }
  return out;
}

/// Top of P_v.
template <class K>
ModulePtr<K> simple_module(const AlgebraPtr<K>& a, std::size_t v) {
  return top(indec_projective(a, v)).module;
}

}  // namespace strathom
