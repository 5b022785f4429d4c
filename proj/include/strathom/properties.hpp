#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "strathom/derived.hpp"
#include "strathom/random.hpp"
#include "strathom/strat.hpp"

namespace strathom::props {

struct PropertyReport {
  std::string name;
  std::size_t instances = 0;  // instances satisfying the hypotheses
  std::size_t skipped = 0;    // generated but outside the hypotheses
  std::vector<std::string> failures;
  std::vector<std::pair<std::string, std::size_t>> tallies;

  bool ok() const { return failures.empty(); }
  void fail(std::size_t trial, const std::string& msg) {
    if (failures.size() < 8) failures.push_back("trial " + std::to_string(trial) + ": " + msg);
    else if (failures.size() == 8) failures.push_back("...");
  }
  void tally(const std::string& k) {
    for (auto& [n, c] : tallies)
      if (n == k) {
        ++c;
        return;
      }
    tallies.emplace_back(k, 1);
  }
  std::size_t count(const std::string& k) const {
    for (const auto& [n, c] : tallies)
      if (n == k) return c;
    return 0;
  }
};

namespace detail {

enum class Outcome { counted, skipped };

/// Runs body until `count` instances satisfied the hypotheses.
template <class Body>
PropertyReport run(const std::string& name, std::size_t count, std::uint32_t seed, Body body) {
  PropertyReport rep;
  rep.name = name;
  gen::Rng rng(seed);
  const std::size_t max_trials = 40 * count + 40;
  for (std::size_t t = 0; t < max_trials && rep.instances < count; ++t) {
    try {
      if (body(rng, rep, t) == Outcome::counted) ++rep.instances;
      else ++rep.skipped;
    } catch (const PreconditionError&) {
      ++rep.skipped;
    } catch (const IncompleteError&) {
      ++rep.skipped;
    } catch (const std::exception& e) {
      ++rep.instances;
      rep.fail(t, e.what());
    }
  }
  if (rep.instances < count)
    rep.fail(max_trials, "only " + std::to_string(rep.instances) + " of " + std::to_string(count) + " instances satisfied the hypotheses");
  return rep;
}

template <class K>
AlgebraPtr<K> random_bound_quiver_algebra(gen::Rng& r, unsigned rel_prob = 2) {
  return from_quiver<K>(gen::random_acyclic_quiver(r, 4, 5, rel_prob).quiver);
}

}  // namespace detail

/// Surjective A -> B with kernel I: Tor_1^A(B, B) = 0 iff I = I^2.
template <class K>
PropertyReport idempotent_kernel(std::size_t count, std::uint32_t seed) {
  return detail::run("idempotent-kernel", count, seed, [](gen::Rng& r, PropertyReport& rep, std::size_t t) {
    auto a = detail::random_bound_quiver_algebra<K>(r);
    auto f = gen::random_quotient_map(r, a);
    auto i = kernel_ideal(f);
    const bool idem = ideal_product(i, i).dim() == i.dim();
    const bool tor = tor_dim(target_as_source_module(f), *target_as_bimodule(f), 1) == 0;
    if (idem != tor) rep.fail(t, "I = I^2 is " + std::to_string(idem) + " but Tor_1 = 0 is " + std::to_string(tor));
    auto c = check_kernel_idempotent(f);
    if (c.kernel_idempotent != idem) rep.fail(t, "certificate disagrees with I^2");
    rep.tally(idem ? "idempotent" : "not idempotent");
    return detail::Outcome::counted;
  });
}

/// Ring epis: surjective iff every simple of the target restricts to a
/// simple. Mixes quotient maps, incidence algebras inside M_n and proper
/// subalgebras of basic algebras.
template <class K>
PropertyReport surjective_iff_simples(std::size_t count, std::uint32_t seed) {
  return detail::run("surjective-iff-simples", count, seed, [](gen::Rng& r, PropertyReport& rep, std::size_t t) {
    std::optional<RingHom<K>> f;
    switch (r.below(3)) {
      case 0: f = gen::random_quotient_map(r, detail::random_bound_quiver_algebra<K>(r)); break;
      case 1: f = gen::random_incidence_inclusion<K>(r, 2 + r.below(2)); break;
      default: {
        auto b = detail::random_bound_quiver_algebra<K>(r);
        f = gen::random_subalgebra_inclusion(r, b);
      }
    }
    if (!*check_ring_epi(*f).is_ring_epi) return detail::Outcome::skipped;
    bool simples = true;
    for (const auto& s : simple_modules(f->target()))
      simples = simples && is_absolutely_simple(*restrict_along(*f, s));
    if (simples != f->surjective())
      rep.fail(t, std::string("surjective = ") + (f->surjective() ? "yes" : "no") + ", simples restrict to simples = " +
                      (simples ? "yes" : "no"));
    auto rpt = check_surjectivity(*f);
    if (rpt.by_simples != simples || rpt.by_rank != f->surjective()) rep.fail(t, "report disagrees with the direct check");
    rep.tally(f->surjective() ? "surjective" : "not surjective");
    return detail::Outcome::counted;
  });
}

/// mu: A -> End(K_f) has kernel Hom_A(B, A) and cokernel Ext^1_A(B, A);
/// for injective f its target has the dimension of End_A(B/A).
template <class K>
PropertyReport cone_endomorphisms(std::size_t count, std::uint32_t seed, std::size_t cutoff = kDefaultCutoff) {
  return detail::run("cone-endomorphisms", count, seed, [cutoff](gen::Rng& r, PropertyReport& rep, std::size_t t) {
    std::optional<RingHom<K>> f;
    if (r.coin(2, 3)) f = gen::random_incidence_inclusion<K>(r, 2 + r.below(2));
    else f = gen::random_quotient_map(r, detail::random_bound_quiver_algebra<K>(r));
    auto res = construction_two(*f, cutoff);
    auto bmod = target_as_source_module(*f);
    auto areg = regular_module(f->source());
    const std::size_t hom = hom_dim(*bmod, *areg);
    const std::size_t ext = ext_dim(bmod, areg, 1, cutoff);
    const std::size_t rk = rank(res.mu->matrix());
    if (f->source()->dim() - rk != hom) rep.fail(t, "dim Ker mu != dim Hom_A(B,A)");
    if (res.c->dim() - rk != ext) rep.fail(t, "dim Coker mu != dim Ext^1_A(B,A)");
    if (f->injective()) {
      auto q = cokernel_module(ModuleMap<K>(areg, bmod, f->matrix())).module;
      if ((q->dim() ? hom_dim(*q, *q) : 0) != res.c->dim()) rep.fail(t, "dim C != dim End_A(B/A)");
    }
    rep.tally(f->injective() ? "injective" : "surjective");
    return detail::Outcome::counted;
  });
}

/// Hom adjunctions of j_lower -| j_shriek -| j_star and i_star -| i -| i_shriek,
/// with j_shriek j_lower = j_shriek j_star = 1.
template <class K>
PropertyReport recollement_adjunctions(std::size_t count, std::uint32_t seed) {
  return detail::run("recollement-adjunctions", count, seed, [](gen::Rng& r, PropertyReport& rep, std::size_t t) {
    auto a = detail::random_bound_quiver_algebra<K>(r);
    auto s = strat_context(a, gen::random_vertex_idempotent(r, *a));
    if (!s.quotient) return detail::Outcome::skipped;
    const bool hered = a->quiver()->presentation.relations.empty();
    auto m = gen::random_module(r, a, hered);
    auto m2 = gen::random_module(r, a, hered);
    auto x = j_shriek(s, m2);
    if (x->dim() == 0) x = simple_modules(s.corner.algebra)[r.below(s.corner.algebra->idempotents().size())];
    auto y = i_star(s, gen::random_module(r, a, hered));
    if (y->dim() == 0) y = simple_modules(s.quotient->algebra)[r.below(s.quotient->algebra->idempotents().size())];
    auto infl = restrict_along(s.quotient->projection, y);
    auto check = [&](std::size_t l, std::size_t rr, const char* what) {
      if (l != rr) rep.fail(t, std::string(what) + ": " + std::to_string(l) + " != " + std::to_string(rr));
    };
    check(hom_dim(*j_lower(s, x), *m), hom_dim(*x, *j_shriek(s, m)), "j_lower -| j_shriek");
    check(hom_dim(*j_shriek(s, m), *x), hom_dim(*m, *j_star(s, x)), "j_shriek -| j_star");
    check(hom_dim(*i_star(s, m), *y), hom_dim(*m, *infl), "i_star -| i");
    check(hom_dim(*infl, *m), hom_dim(*y, *i_shriek(s, m)), "i -| i_shriek");
    check(j_shriek(s, j_lower(s, x))->dim(), x->dim(), "j_shriek j_lower");
    check(j_shriek(s, j_star(s, x))->dim(), x->dim(), "j_shriek j_star");
    return detail::Outcome::counted;
  });
}

/// dim Ext^1(S_i, S_j) is the number of arrows j -> i.
template <class K>
PropertyReport ext1_counts_arrows(std::size_t count, std::uint32_t seed) {
  return detail::run("ext1-counts-arrows", count, seed, [](gen::Rng& r, PropertyReport& rep, std::size_t t) {
    auto q = gen::random_acyclic_quiver(r, 4, 5, 2);
    auto a = from_quiver<K>(q.quiver);
    auto ss = simple_modules(a);
    for (std::size_t i = 0; i < ss.size(); ++i) {
      auto res = min_proj_resolution(ss[i], 2);
      for (std::size_t j = 0; j < ss.size(); ++j) {
        auto e = ext_dim_from(res, *ss[j], 1);
        if (e != q.arrow_count[j][i])
          rep.fail(t, "Ext^1(S" + std::to_string(i + 1) + ",S" + std::to_string(j + 1) + ") = " + std::to_string(e) +
                          ", arrows = " + std::to_string(q.arrow_count[j][i]));
      }
    }
    return detail::Outcome::counted;
  });
}

/// Hom_D(M[p], N[q][n]) = Ext^{n+q-p}(M, N) for stalk complexes.
template <class K>
PropertyReport derived_hom_of_stalks(std::size_t count, std::uint32_t seed, std::size_t cutoff = kDefaultCutoff) {
  return detail::run("derived-hom-of-stalks", count, seed, [cutoff](gen::Rng& r, PropertyReport& rep, std::size_t t) {
    auto a = detail::random_bound_quiver_algebra<K>(r);
    const bool hered = a->quiver()->presentation.relations.empty();
    auto m = gen::random_module(r, a, hered);
    auto n = gen::random_module(r, a, hered);
    if (m->dim() == 0 || n->dim() == 0) return detail::Outcome::skipped;
    const int p = static_cast<int>(r.below(3)) - 1, q = static_cast<int>(r.below(3)) - 1;
    const int k = static_cast<int>(r.below(4));
    const int shift = k + p - q;
    auto d = derived_hom_dim(stalk(m, -p), stalk(n, -q), shift, cutoff);
    auto e = ext_dim(m, n, static_cast<std::size_t>(k), cutoff);
    if (d != e) rep.fail(t, "derived " + std::to_string(d) + " != Ext^" + std::to_string(k) + " " + std::to_string(e));
    return detail::Outcome::counted;
  });
}

/// For path algebras of acyclic quivers: dim Hom - dim Ext^1 is the Euler
/// form of the dimension vectors and Ext^2 vanishes.
template <class K>
PropertyReport euler_form(std::size_t count, std::uint32_t seed) {
  return detail::run("euler-form", count, seed, [](gen::Rng& r, PropertyReport& rep, std::size_t t) {
    auto q = gen::random_acyclic_quiver(r, 4, 5, 0);
    auto a = from_quiver<K>(q.quiver);
    auto m = gen::random_representation(r, a, 2);
    auto n = gen::random_representation(r, a, 2);
    if (m->dim() == 0 || n->dim() == 0) return detail::Outcome::skipped;
    auto x = m->dimension_vector(), y = n->dimension_vector();
    long form = 0;
    for (std::size_t v = 0; v < x.size(); ++v) form += static_cast<long>(x[v] * y[v]);
    for (const auto& ar : q.quiver.arrows) form -= static_cast<long>(x[ar.target] * y[ar.source]);
    auto res = min_proj_resolution(m, 3);
    const long h = static_cast<long>(hom_dim(*m, *n));
    const long e1 = static_cast<long>(ext_dim_from(res, *n, 1));
    if (h - e1 != form) rep.fail(t, "Hom - Ext^1 = " + std::to_string(h - e1) + ", Euler form = " + std::to_string(form));
    if (ext_dim_from(res, *n, 2) != 0) rep.fail(t, "Ext^2 != 0 over a hereditary algebra");
    return detail::Outcome::counted;
  });
}

struct Named {
  const char* name;
  std::function<PropertyReport(std::size_t, std::uint32_t)> run;
};

template <class K>
std::vector<Named> all() {
  return {
      {"idempotent-kernel", [](std::size_t c, std::uint32_t s) { return idempotent_kernel<K>(c, s); }},
      {"surjective-iff-simples", [](std::size_t c, std::uint32_t s) { return surjective_iff_simples<K>(c, s); }},
      {"cone-endomorphisms", [](std::size_t c, std::uint32_t s) { return cone_endomorphisms<K>(c, s); }},
      {"recollement-adjunctions", [](std::size_t c, std::uint32_t s) { return recollement_adjunctions<K>(c, s); }},
      {"ext1-counts-arrows", [](std::size_t c, std::uint32_t s) { return ext1_counts_arrows<K>(c, s); }},
      {"derived-hom-of-stalks", [](std::size_t c, std::uint32_t s) { return derived_hom_of_stalks<K>(c, s); }},
      {"euler-form", [](std::size_t c, std::uint32_t s) { return euler_form<K>(c, s); }},
  };
}

}  // namespace strathom::props
