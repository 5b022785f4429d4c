#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "strathom/bimodule.hpp"
#include "strathom/certificate.hpp"
#include "strathom/derived.hpp"
#include "strathom/functors.hpp"
#include "strathom/quiver.hpp"
#include "strathom/resolution.hpp"
#include "strathom/tilting.hpp"

namespace strathom {

/// B as a right A-module and as an A-B-bimodule via f.
template <class K>
ModulePtr<K> target_as_source_module(const RingHom<K>& f) {
  return restrict_along(f, regular_module(f.target()));
}

template <class K>
BimodulePtr<K> target_as_bimodule(const RingHom<K>& f) {
  return restrict_bimodule(regular_bimodule(f.target()), &f, static_cast<const RingHom<K>*>(nullptr));
}

template <class K>
IdealBasis<K> kernel_ideal(const RingHom<K>& f) {
  return IdealBasis<K>{f.source(), Subspace<K>(left_kernel(f.matrix()))};
}

/// Coker(f) (x)_A B = 0.
template <class K>
Certificate check_ring_epi(const RingHom<K>& f) {
  Certificate c;
  auto b = target_as_source_module(f);
  auto coker = cokernel_module(ModuleMap<K>(regular_module(f.source()), b, f.matrix()));
  auto t = tensor_over(*coker.module, *target_as_bimodule(f));
  c.record("dim Coker(f)", static_cast<std::int64_t>(coker.module->dim()));
  c.record("dim Coker(f) (x)_A B", static_cast<std::int64_t>(t.dim));
  c.is_ring_epi = t.dim == 0;
  return c;
}

/// Tor_i^A(B, B) for i >= 1. Tor_i vanishes above pd(B_A), so a finite
/// resolution of B_A within the cutoff makes the certificate complete.
template <class K>
Certificate check_homological_epi(const RingHom<K>& f, std::size_t cutoff = kDefaultCutoff) {
  Certificate c = check_ring_epi(f);
  if (!*c.is_ring_epi) {
    c.is_homological_epi = false;
    return c;
  }
  auto b = target_as_source_module(f);
  auto bb = target_as_bimodule(f);
  auto res = min_proj_resolution(b, cutoff + 1);
  std::size_t top = res.complete ? res.length() : cutoff;
  if (res.complete) c.record("pd B_A", static_cast<std::int64_t>(res.length()));
  bool vanish = true;
  for (std::size_t i = 1; i <= top; ++i) {
    auto t = tor_dim_from(res, *bb, i);
    c.record("Tor_" + std::to_string(i) + "(B,B)", static_cast<std::int64_t>(t));
    if (t) vanish = false;
  }
  c.tor_checked_to = top;
  if (auto g = gldim(f.source(), cutoff)) c.record("gldim A", static_cast<std::int64_t>(*g));
  c.is_homological_epi = vanish;
  if (vanish && !res.complete) {
    c.complete = false;
    c.note("B_A has no projective resolution of length <= " + std::to_string(cutoff) + "; Tor checked up to the cutoff only");
  }
  return c;
}

template <class K>
struct SurjectivityReport {
  bool by_rank = false;
  std::optional<bool> by_simples;  // ring epi and every simple B-module restricts to a simple
  bool theorem_applies = false;    // ring epi with basic target
  bool complete = true;
  std::vector<std::string> trace;
  Certificate certificate;
};

/// Two answers: rank of f, and ring epi + simples restricting to simples.
template <class K>
SurjectivityReport<K> check_surjectivity(const RingHom<K>& f) {
  SurjectivityReport<K> r;
  r.by_rank = f.surjective();
  r.trace.push_back("rank f = " + std::to_string(f.rank()) + ", dim B = " + std::to_string(f.target()->dim()));
  r.certificate = check_ring_epi(f);
  const bool epi = *r.certificate.is_ring_epi;
  r.trace.push_back(std::string("ring epimorphism: ") + (epi ? "yes" : "no"));
  r.certificate.record("rank f", static_cast<std::int64_t>(f.rank()));
  if (!f.target()->has_idempotents()) {
    r.complete = false;
    r.trace.push_back("simple B-modules unavailable; rank answer only");
    r.certificate.is_surjective = r.by_rank;
    r.certificate.complete = false;
    return r;
  }
  bool all_simple = true;
  auto simples = simple_modules(f.target());
  for (std::size_t i = 0; i < simples.size(); ++i) {
    auto res = restrict_along(f, simples[i]);
    bool s = is_absolutely_simple(*res);
    r.trace.push_back("simple " + std::to_string(i) + " (dim " + std::to_string(res->dim()) + ") restricts to " +
                      (s ? "a simple" : "a non-simple") + " A-module");
    if (!s) all_simple = false;
  }
  r.by_simples = epi && all_simple;
  r.theorem_applies = epi && is_basic_split(f.target());
  if (r.theorem_applies) r.trace.push_back("ring epi onto a basic algebra: surjectivity is forced");
  if (*r.by_simples != r.by_rank)
    throw ConsistencyError("surjectivity: rank and simple-module answers disagree");
  if (r.theorem_applies && !r.by_rank) throw ConsistencyError("surjectivity: ring epi onto a basic algebra is not surjective");
  r.certificate.is_surjective = r.by_rank;
  return r;
}

/// I^2 = I, cross-checked against Tor_1(B, B) = 0.
template <class K>
Certificate check_kernel_idempotent(const RingHom<K>& f) {
  if (!f.surjective()) throw PreconditionError("check_kernel_idempotent: map is not surjective");
  Certificate c;
  auto i = kernel_ideal(f);
  auto i2 = ideal_product(i, i);
  c.record("dim Ker f", static_cast<std::int64_t>(i.dim()));
  c.record("dim Ker f^2", static_cast<std::int64_t>(i2.dim()));
  bool idem = i2.dim() == i.dim();
  auto res = min_proj_resolution(target_as_source_module(f), 2);
  auto t1 = tor_dim_from(res, *target_as_bimodule(f), 1);
  c.record("Tor_1(B,B)", static_cast<std::int64_t>(t1));
  if (idem != (t1 == 0)) throw ConsistencyError("kernel idempotent but Tor_1(B,B) != 0, or conversely");
  c.kernel_idempotent = idem;
  return c;
}

/// e = sum of the primitive idempotents lying in I, tested for AeA = I.
/// Any e_S with A e_S A = I has S inside that set and is dominated by it, so
/// this single test decides the whole subset family.
template <class K>
std::optional<Vec<K>> find_idempotent_generator(const IdealBasis<K>& i) {
  const auto& a = i.parent;
  if (!a->has_idempotents()) throw PreconditionError("find_idempotent_generator needs primitive idempotents");
  auto e = a->zero();
  for (const auto& v : a->idempotents())
    if (i.contains(v)) e = e + v;
  if (ideal_generated(a, {e}).space == i.space) return e;
  return std::nullopt;
}

/// The corner as a Kronecker algebra: two orthogonal idempotents summing to
/// 1 with a 2-dimensional space between them and nothing else. Returns the
/// isomorphism from the Kronecker path algebra when the structure matches.
template <class K>
std::optional<RingHom<K>> match_kronecker(const AlgebraPtr<K>& c) {
  if (c->dim() != 4 || !c->has_idempotents() || c->idempotents().size() != 2) return std::nullopt;
  auto kq = make_quiver({"1", "2"}, {{"a", "2", "1"}, {"b", "2", "1"}}, {});
  auto kr = from_quiver<K>(kq);
  const auto& f = c->idempotents();
  auto piece = [&](std::size_t x, std::size_t y) {
    std::vector<Vec<K>> rows;
    for (std::size_t i = 0; i < c->dim(); ++i) rows.push_back(c->mul(c->mul(f[x], c->basis(i)), f[y]));
    return Subspace<K>::span(rows, c->dim());
  };
  for (std::size_t x = 0; x < 2; ++x) {
    std::size_t y = 1 - x;
    auto mid = piece(x, y);
    if (mid.dim() != 2 || piece(y, x).dim() != 0 || piece(x, x).dim() != 1 || piece(y, y).dim() != 1) continue;
    // a, b in e_1 K e_2: vertex 1 -> f[x], vertex 2 -> f[y]
    Mat<K> m(kr->dim(), c->dim());
    for (std::size_t i = 0; i < kr->dim(); ++i) {
      const auto& lab = kr->labels()[i];
      Vec<K> img = lab == "e1" ? f[x] : lab == "e2" ? f[y] : lab == "a" ? mid.basis()[0] : mid.basis()[1];
      m.set_row(i, img);
    }
    try {
      RingHom<K> h(kr, c, std::move(m));
      if (h.surjective()) return h;
    } catch (const DomainError&) {
    }
  }
  return std::nullopt;
}

template <class K>
struct StratifyingReport {
  Certificate certificate;
  IdealBasis<K> ideal;
  std::optional<QuotientResult<K>> quotient;
  std::optional<CornerResult<K>> corner;
  bool corner_is_kronecker = false;
};

/// A -> A/AeA as a homological epimorphism.
template <class K>
StratifyingReport<K> check_stratifying_ideal(const AlgebraPtr<K>& a, const Vec<K>& e, std::size_t cutoff = kDefaultCutoff) {
  if (!a->is_idempotent(e)) throw PreconditionError("check_stratifying_ideal: element is not idempotent");
  StratifyingReport<K> r{Certificate{}, ideal_generated(a, {e}), std::nullopt, std::nullopt, false};
  if (r.ideal.contains(a->unit())) throw PreconditionError("check_stratifying_ideal: AeA = A, the quotient is the zero ring");
  r.quotient = quotient_by_ideal(a, r.ideal);
  auto& c = r.certificate;
  c.record("dim A", static_cast<std::int64_t>(a->dim()));
  c.record("dim AeA", static_cast<std::int64_t>(r.ideal.dim()));
  c.record("dim A/AeA", static_cast<std::int64_t>(r.quotient->algebra->dim()));
  if (!is_zero(e)) {
    r.corner = corner(a, e);
    c.record("dim eAe", static_cast<std::int64_t>(r.corner->algebra->dim()));
    r.corner_is_kronecker = match_kronecker(r.corner->algebra).has_value();
    if (r.corner_is_kronecker) c.note("eAe is isomorphic to the Kronecker algebra");
  }
  c.merge(check_homological_epi(r.quotient->projection, cutoff));
  c.is_surjective = true;
  c.kernel_stratifying = *c.is_homological_epi && c.complete;
  c.merge(check_kernel_idempotent(r.quotient->projection));
  c.idempotent_generator = a->element_to_string(e);
  return r;
}

/// For an injective A-map i: A_A -> T0 with Hom(T0/A, T0) = 0, the ring map
/// A -> End(T0) sending a to the unique g with i g = (left mult by a) i.
template <class K>
struct LiftedEndomorphisms {
  EndAlgebra<K> end;
  RingHom<K> map;
};

template <class K>
LiftedEndomorphisms<K> lift_through_approximation(const ModuleMap<K>& inc) {
  const auto& a = inc.source->algebra();
  if (inc.source->dim() != a->dim()) throw PreconditionError("lift_through_approximation: source must be A_A");
  auto end = endomorphism_algebra(inc.target);
  std::vector<Vec<K>> cols;
  for (const auto& g : end.maps) cols.push_back(flatten(inc.matrix * g));
  Mat<K> sys = Mat<K>::from_rows(cols, a->dim() * inc.target->dim()).transpose();
  if (rank(sys) != cols.size()) throw PreconditionError("lift_through_approximation: lifts are not unique");
  Mat<K> m(a->dim(), end.algebra->dim());
  for (std::size_t i = 0; i < a->dim(); ++i) {
    auto rhs = flatten(a->left_mult_elem(a->basis(i)) * inc.matrix);
    auto c = solve(sys, rhs);
    if (!c) throw PreconditionError("lift_through_approximation: left multiplication does not lift");
    m.set_row(i, *c);
  }
  return {end, RingHom<K>(a, end.algebra, std::move(m))};
}

template <class K>
struct ConstructionOneResult {
  ModulePtr<K> b_module;         // B_A
  ModulePtr<K> quotient;         // B/A
  ModulePtr<K> t;                // B + B/A
  std::vector<std::size_t> summand_part;  // 0: inside B, 1: inside B/A, per primitive idempotent
  EndAlgebra<K> a_prime;
  Vec<K> e;                      // projection onto B/A
  std::optional<RingHom<K>> lambda_prime;  // A' -> B
  StratifyingReport<K> stratifying;
  Certificate checks;
};

/// T = B + B/A is tilting, A' = End(T), and A' -> A'/A'eA' = B.
template <class K>
ConstructionOneResult<K> construction_one(const RingHom<K>& lambda, std::size_t cutoff = kDefaultCutoff,
                                          std::uint32_t seed = kDefaultSeed) {
  const auto& a = lambda.source();
  const auto& b = lambda.target();
  if (!lambda.injective()) throw PreconditionError("construction_one: not-injective: the map has a kernel");
  auto epi = check_ring_epi(lambda);
  if (!*epi.is_ring_epi) throw PreconditionError("construction_one: not-epi: Coker (x)_A B != 0");
  ConstructionOneResult<K> r;
  r.checks.merge(epi);
  r.b_module = target_as_source_module(lambda);
  auto res = min_proj_resolution(r.b_module, 2);
  if (!res.complete || res.length() > 1) throw PreconditionError("construction_one: pd-too-big: pd B_A > 1");
  auto t1 = tor_dim_from(res, *target_as_bimodule(lambda), 1);
  if (t1 != 0) throw PreconditionError("construction_one: tor1-nonzero: Tor_1(B,B) != 0");
  r.checks.record("pd B_A", static_cast<std::int64_t>(res.length()));
  r.checks.record("Tor_1(B,B)", 0);
  ModuleMap<K> inc(regular_module(a), r.b_module, lambda.matrix());
  r.quotient = cokernel_module(inc).module;
  auto tsum = direct_sum<K>({r.b_module, r.quotient});
  r.t = tsum.module;
  // tilting: pd T <= 1, Ext^1(T,T) = 0, and 0 -> A -> B -> B/A -> 0
  auto tres = min_proj_resolution(r.t, 2);
  if (!tres.complete || tres.length() > 1) throw ConsistencyError("construction_one: pd T > 1");
  auto ext = ext_dim_from(tres, *r.t, 1);
  r.checks.record("Ext^1(T,T)", static_cast<std::int64_t>(ext));
  if (ext != 0) throw ConsistencyError("construction_one: Ext^1(T,T) != 0");
  auto hq = hom_dim(*r.quotient, *r.b_module);
  r.checks.record("Hom(B/A,B)", static_cast<std::int64_t>(hq));
  if (hq != 0) throw ConsistencyError("construction_one: Hom(B/A,B) != 0");
  // primitive idempotents of End(T) from splittings of both parts
  std::vector<Mat<K>> idem;
  const std::size_t nb = r.b_module->dim(), nq = r.quotient->dim();
  for (std::size_t part = 0; part < 2; ++part) {
    auto sp = split_module(part == 0 ? r.b_module : r.quotient, seed);
    for (const auto& p : sp.idempotents) {
      idem.push_back(part == 0 ? block_diag<K>({p, Mat<K>(nq, nq)}) : block_diag<K>({Mat<K>(nb, nb), p}));
      r.summand_part.push_back(part);
    }
  }
  r.a_prime = endomorphism_algebra(r.t, idem);
  const auto& ap = r.a_prime.algebra;
  r.checks.record("dim A'", static_cast<std::int64_t>(ap->dim()));
  r.e = r.a_prime.coords(block_diag<K>({Mat<K>(nb, nb), Mat<K>::identity(nq)}));
  auto one_minus_e = ap->unit() - r.e;
  // with f.g = f after g the vanishing corner Hom(B/A, B) is (1-e)A'e
  for (std::size_t i = 0; i < ap->dim(); ++i)
    if (!is_zero(ap->mul(ap->mul(one_minus_e, ap->basis(i)), r.e)))
      throw ConsistencyError("construction_one: Hom(B/A,B) corner of A' is nonzero");
  r.stratifying = check_stratifying_ideal(ap, r.e, cutoff);
  const auto& quo = *r.stratifying.quotient;
  // B -> A'/A'eA' via left multiplications on the B summand
  Mat<K> theta(b->dim(), quo.algebra->dim());
  for (std::size_t i = 0; i < b->dim(); ++i) {
    auto lb = block_diag<K>({b->left_mult_elem(b->basis(i)), Mat<K>(nq, nq)});
    theta.set_row(i, quo.projection.apply(r.a_prime.coords(lb)));
  }
  if (theta.rows() != theta.cols() || rank(theta) != b->dim())
    throw ConsistencyError("construction_one: B -> A'/A'eA' is not bijective");
  RingHom<K> theta_hom(b, quo.algebra, theta);
  r.lambda_prime = RingHom<K>(ap, b, quo.projection.matrix() * inverse(theta));
  r.checks.record("dim A'eA'", static_cast<std::int64_t>(r.stratifying.ideal.dim()));
  if (r.stratifying.ideal.dim() + b->dim() != ap->dim()) throw ConsistencyError("construction_one: dim A'eA' != dim A' - dim B");
  auto lp = check_homological_epi(*r.lambda_prime, cutoff);
  lp.is_surjective = r.lambda_prime->surjective();
  lp.merge(check_kernel_idempotent(*r.lambda_prime));
  lp.kernel_stratifying = r.stratifying.certificate.kernel_stratifying;
  lp.idempotent_generator = ap->element_to_string(r.e);
  r.checks.merge(lp);
  return r;
}

template <class K>
struct ConstructionTwoOptions {
  bool follow_ups = false;  // mu homological, pd of C as left A-module, stratifying kernel
};

template <class K>
struct ConstructionTwoResult {
  Complex<K> cone;
  DerivedEnd<K> end;
  AlgebraPtr<K> c;
  std::optional<RingHom<K>> mu;
  std::size_t kernel_dim = 0, coker_dim = 0, hom_ba_dim = 0, ext1_ba_dim = 0;
  bool neg_ext_vanishes = false, tor1_vanishes = false;
  std::optional<std::size_t> end_quotient_dim;  // dim End_A(B/A) when f is injective
  Certificate checks;
};

namespace detail {

/// Flattened chain map P -> K given blockwise as products.
template <class K>
Vec<K> flat_blocks(const ChainMapSpace<K>& s, const std::vector<Mat<K>>& blocks) {
  auto v = zero_vec<K>(s.total);
  for (std::size_t k = 0; k < blocks.size(); ++k)
    for (std::size_t i = 0; i < blocks[k].rows(); ++i)
      for (std::size_t j = 0; j < blocks[k].cols(); ++j) v[s.offset[k] + i * blocks[k].cols() + j] = blocks[k](i, j);
  return v;
}

}  // namespace detail

/// mu: A -> End_D(K_f) for the cone K_f of A -> B_A.
template <class K>
ConstructionTwoResult<K> construction_two(const RingHom<K>& f, std::size_t cutoff = kDefaultCutoff,
                                          ConstructionTwoOptions<K> opts = {}) {
  const auto& a = f.source();
  const auto& b = f.target();
  ConstructionTwoResult<K> r;
  auto epi = check_ring_epi(f);
  if (!*epi.is_ring_epi) throw PreconditionError("construction_two: not-epi: Coker (x)_A B != 0");
  r.checks.merge(epi);
  r.cone = ring_map_cone(f);
  auto px = proj_resolve_complex(r.cone, cutoff);
  auto neg = derived_hom_dim_from(px, r.cone, -1);
  r.checks.record("Hom(K,K[-1])", static_cast<std::int64_t>(neg));
  r.neg_ext_vanishes = neg == 0;
  auto bmod = target_as_source_module(f);
  auto bres = min_proj_resolution(bmod, cutoff);
  auto t1 = tor_dim_from(bres, *target_as_bimodule(f), 1);
  r.checks.record("Tor_1(B,B)", static_cast<std::int64_t>(t1));
  r.tor1_vanishes = t1 == 0;
  if (!r.neg_ext_vanishes) throw PreconditionError("construction_two: neg-ext-nonzero: Hom(K_f, K_f[-1]) != 0");
  if (!r.tor1_vanishes) throw PreconditionError("construction_two: tor1-nonzero: Tor_1(B,B) != 0");
  r.end = derived_end_algebra(r.cone, cutoff);
  r.c = r.end.algebra;
  r.checks.record("dim C", static_cast<std::int64_t>(r.c->dim()));
  // lift (a, f(a)) through p: P -> K up to homotopy
  const auto& p = r.end.replacement.p;
  const auto& pmap = r.end.replacement.quasi_iso;
  auto pk = detail::chain_map_space(p, r.cone, 0);
  QuotientSpace<K> qpk(pk.boundaries);
  const auto& cyc = r.end.space.cycles;
  std::vector<Vec<K>> cols;
  for (const auto& z : cyc) {
    std::vector<Mat<K>> blocks;
    for (std::size_t k = 0; k < p.terms.size(); ++k) {
      int deg = p.lo + static_cast<int>(k);
      blocks.push_back(r.end.space.block(z, k) * pmap.at(deg));
    }
    cols.push_back(qpk.coords(detail::flat_blocks(pk, blocks)));
  }
  Mat<K> sys = Mat<K>::from_rows(cols, qpk.dim()).transpose();
  Mat<K> mu(a->dim(), r.c->dim());
  for (std::size_t i = 0; i < a->dim(); ++i) {
    Mat<K> phi_m1 = a->left_mult_elem(a->basis(i));
    Mat<K> phi_0 = b->left_mult_elem(f.image_of_basis(i));
    std::vector<Mat<K>> blocks;
    for (std::size_t k = 0; k < p.terms.size(); ++k) {
      int deg = p.lo + static_cast<int>(k);
      Mat<K> phi = deg == -1 ? phi_m1 : deg == 0 ? phi_0 : Mat<K>(r.cone.dim_at(deg), r.cone.dim_at(deg));
      blocks.push_back(pmap.at(deg) * phi);
    }
    auto c = solve(sys, qpk.coords(detail::flat_blocks(pk, blocks)));
    if (!c) throw ConsistencyError("construction_two: (a, f(a)) does not lift to the projective replacement");
    auto psi = zero_vec<K>(r.end.space.total);
    for (std::size_t j = 0; j < cyc.size(); ++j)
      if (!(*c)[j].is_zero()) axpy(psi, (*c)[j], cyc[j]);
    mu.set_row(i, r.end.class_coords(psi));
  }
  r.mu = RingHom<K>(a, r.c, mu);
  const std::size_t rk = r.mu->rank();
  r.kernel_dim = a->dim() - rk;
  r.coker_dim = r.c->dim() - rk;
  r.checks.record("dim Ker mu", static_cast<std::int64_t>(r.kernel_dim));
  r.checks.record("dim Coker mu", static_cast<std::int64_t>(r.coker_dim));
  // Ker mu = Hom_A(B, A) through g -> g(1)
  auto areg = regular_module(a);
  auto hb = hom_basis(*bmod, *areg);
  r.hom_ba_dim = hb.size();
  std::vector<Vec<K>> g1;
  for (const auto& g : hb) {
    auto v = g.apply(b->unit());
    if (!is_zero(r.mu->apply(v))) throw ConsistencyError("construction_two: g(1) is not in Ker mu");
    g1.push_back(std::move(v));
  }
  if (Subspace<K>::span(g1, a->dim()).dim() != hb.size() || hb.size() != r.kernel_dim)
    throw ConsistencyError("construction_two: Ker mu != Hom_A(B,A)");
  r.ext1_ba_dim = ext_dim(bmod, areg, 1, cutoff);
  r.checks.record("Hom_A(B,A)", static_cast<std::int64_t>(r.hom_ba_dim));
  r.checks.record("Ext^1_A(B,A)", static_cast<std::int64_t>(r.ext1_ba_dim));
  if (r.ext1_ba_dim != r.coker_dim) throw ConsistencyError("construction_two: Coker mu != Ext^1_A(B,A)");
  if (f.injective()) {
    auto q = cokernel_module(ModuleMap<K>(areg, bmod, f.matrix())).module;
    r.end_quotient_dim = q->dim() ? hom_dim(*q, *q) : 0;
    r.checks.record("dim End_A(B/A)", static_cast<std::int64_t>(*r.end_quotient_dim));
    if (*r.end_quotient_dim != r.c->dim()) throw ConsistencyError("construction_two: dim C != dim End_A(B/A)");
  }
  if (opts.follow_ups) {
    auto h = check_homological_epi(*r.mu, cutoff);
    r.checks.is_ring_epi = h.is_ring_epi;
    r.checks.is_homological_epi = h.is_homological_epi;
    r.checks.tor_checked_to = h.tor_checked_to;
    r.checks.complete = r.checks.complete && h.complete;
    auto aop = opposite(a);
    std::vector<Mat<K>> act;
    for (std::size_t i = 0; i < a->dim(); ++i) act.push_back(r.c->left_mult_elem(r.mu->image_of_basis(i)));
    auto cl = make_module<K>(aop, r.c->dim(), std::move(act));
    if (auto d = pd(cl, cutoff)) r.checks.record("pd _A C", static_cast<std::int64_t>(*d));
    auto ker = kernel_ideal(*r.mu);
    if (auto e = find_idempotent_generator(ker); e && ker.dim() < a->dim()) {
      auto s = check_stratifying_ideal(a, *e, cutoff);
      r.checks.kernel_stratifying = s.certificate.kernel_stratifying;
      r.checks.idempotent_generator = a->element_to_string(*e);
    } else if (ker.dim() < a->dim()) {
      r.checks.kernel_stratifying = false;
      r.checks.note("Ker mu is not generated by a sum of the given primitive idempotents");
    }
  }
  return r;
}

}  // namespace strathom
