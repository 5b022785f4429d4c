#include <gtest/gtest.h>

#include "fixtures.hpp"

using namespace fixtures;

TEST(Resolution, SimpleOneOfCounterexample) {
  auto a = counterexample();
  auto s = simple_modules(a);
  auto r = min_proj_resolution(s[0]);
  ASSERT_TRUE(r.complete);
  // 0 -> P2 -> P3 -> P1 -> S1 -> 0
  ASSERT_EQ(r.vertices.size(), 3u);
  EXPECT_EQ(r.vertices[0], (std::vector<std::size_t>{0}));
  EXPECT_EQ(r.vertices[1], (std::vector<std::size_t>{2}));
  EXPECT_EQ(r.vertices[2], (std::vector<std::size_t>{1}));
  EXPECT_EQ(pd(s[0]), std::optional<std::size_t>(2));
}

TEST(Resolution, MapsComposeToZero) {
  auto a = counterexample();
  for (const auto& s : simple_modules(a)) {
    auto r = min_proj_resolution(s);
    for (std::size_t n = 1; n < r.maps.size(); ++n) EXPECT_TRUE((r.maps[n] * r.maps[n - 1]).is_zero());
    EXPECT_EQ(rank(r.maps[0]), s->dim());
  }
}

TEST(Resolution, GlobalDimensionIsFinite) {
  auto a = counterexample();
  auto g = gldim(a);
  ASSERT_TRUE(g.has_value());
  std::size_t worst = 0;
  for (const auto& s : simple_modules(a)) worst = std::max(worst, *pd(s));
  EXPECT_EQ(*g, worst);
  EXPECT_EQ(*g, 4u);
}

TEST(Resolution, CutoffGivesIncompleteResolution) {
  auto a = counterexample();
  auto r = min_proj_resolution(simple_modules(a)[1], 1);
  EXPECT_FALSE(r.complete);
  EXPECT_FALSE(pd(simple_modules(a)[1], 1).has_value());
}

TEST(Ext, FirstExtBetweenSimplesCountsArrows) {
  auto a = counterexample();
  auto q = counterexample_quiver();
  auto s = simple_modules(a);
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j) {
      std::size_t arrows = 0;
      for (const auto& ar : q.arrows) arrows += ar.source == j && ar.target == i;
      EXPECT_EQ(ext_dim(s[i], s[j], 1), arrows) << i << " " << j;
    }
}

TEST(Ext, ProjectivesHaveNoHigherExt) {
  auto a = counterexample();
  for (const auto& p : indec_projectives(a))
    for (const auto& s : simple_modules(a)) EXPECT_EQ(ext_dim(p, s, 1), 0u);
}

TEST(Ext, KroneckerEulerForm) {
  auto k = kronecker();
  auto q = kronecker_quiver();
  for (std::size_t i = 1; i <= 3; ++i)
    for (std::size_t j = 0; j <= 3; ++j) {
      auto pi = preprojective(k, i), pj = preprojective(k, j);
      if (pj->dim() == 0) continue;
      const long h = static_cast<long>(hom_dim(*pi, *pj));
      const long e = static_cast<long>(ext_dim(pi, pj, 1));
      EXPECT_EQ(h - e, euler_form(q, pi->dimension_vector(), pj->dimension_vector()));
      EXPECT_EQ(ext_dim(pi, pj, 2), 0u);
    }
}

TEST(Tor, TensorWithRegularBimodule) {
  auto a = counterexample();
  auto reg = regular_bimodule(a);
  EXPECT_EQ(tensor_dim(*regular_module(a), *reg), a->dim());
  for (const auto& s : simple_modules(a)) {
    EXPECT_EQ(tensor_dim(*s, *reg), 1u);
    EXPECT_EQ(tor_dim(s, *reg, 1), 0u);
  }
}

TEST(Tor, QuotientByStratifyingIdealHasNoHigherTor) {
  auto a = counterexample();
  auto i = ideal_generated(a, {sum_of(*a, {"e2", "e3"})});
  auto qr = quotient_by_ideal(a, i);
  auto bm = restrict_along(qr.projection, regular_module(qr.algebra));
  auto bb = restrict_bimodule(regular_bimodule(qr.algebra), &qr.projection, &qr.projection);
  EXPECT_EQ(tor_dim(bm, *bb, 0), 1u);
  for (std::size_t d = 1; d <= 4; ++d) EXPECT_EQ(tor_dim(bm, *bb, d), 0u) << d;
}

TEST(Tor, KroneckerModOneArrowHasTorOne) {
  auto k = kronecker();
  auto qa = quotient_by_ideal(k, ideal_generated(k, {element(*k, "a")}));
  auto bm = restrict_along(qa.projection, regular_module(qa.algebra));
  auto bb = restrict_bimodule(regular_bimodule(qa.algebra), &qa.projection, &qa.projection);
  EXPECT_GT(tor_dim(bm, *bb, 1), 0u);
}

TEST(Derived, StalkHomEqualsExt) {
  auto a = counterexample();
  auto s = simple_modules(a);
  std::vector<ModulePtr<Q>> ms{s[0], s[1], s[2], indec_projective(a, 0)};
  for (const auto& m : ms)
    for (const auto& n : ms)
      for (int k = 0; k <= 3; ++k) {
        EXPECT_EQ(derived_hom_dim(stalk(m, 0), stalk(n, 0), k), ext_dim(m, n, static_cast<std::size_t>(k)));
        EXPECT_EQ(derived_hom_dim(stalk(m, 0), stalk(n, 0), -1 - k), 0u);
      }
}

TEST(Derived, ShiftMovesDegrees) {
  auto a = counterexample();
  auto s = simple_modules(a);
  // stalk(M, -p) vs stalk(N, -q) at n = k + p - q is Ext^k
  for (int k = 0; k <= 2; ++k) EXPECT_EQ(derived_hom_dim(stalk(s[0], -2), stalk(s[2], 0), k + 2), ext_dim(s[0], s[2], static_cast<std::size_t>(k)));
  auto x = shift(stalk(s[1], 0), 1);
  EXPECT_EQ(x.lo, -1);
  EXPECT_EQ(homology_dim(x, -1), 1u);
}

TEST(Derived, ExceptionalObjects) {
  auto k = kronecker();
  for (const auto& s : simple_modules(k)) EXPECT_TRUE(is_exceptional(stalk(s, 0)).exceptional);
  for (std::size_t i = 1; i <= 3; ++i) EXPECT_TRUE(is_exceptional(stalk(preprojective(k, i), 0)).exceptional);
  // Ext^1(P3, P1) != 0
  auto m = direct_sum<Q>({preprojective(k, 1), preprojective(k, 3)}).module;
  auto r = is_exceptional(stalk(m, 0));
  EXPECT_FALSE(r.exceptional);
  EXPECT_EQ(r.offending, (std::vector<int>{1}));
}

TEST(Derived, EndomorphismAlgebraOfRegularStalk) {
  auto a = counterexample();
  EXPECT_EQ(derived_end_algebra(stalk(regular_module(a), 0)).algebra->dim(), a->dim());
}

TEST(Derived, ConeOfRingMapHasExpectedHomology) {
  auto l = triangular_inclusion();
  auto c = ring_map_cone(l);
  EXPECT_EQ(homology_dim(c, -1), 0u);
  EXPECT_EQ(homology_dim(c, 0), 1u);
}

TEST(Tilting, KroneckerCoresolutionMultiplicities) {
  auto k = kronecker();
  auto t12 = is_classical_tilting<Q>({preprojective(k, 1), preprojective(k, 2)}, k);
  ASSERT_EQ(t12.verdict, Verdict::yes);
  ASSERT_TRUE(t12.coresolution.has_value());
  EXPECT_EQ(t12.coresolution->t0_mult, (std::vector<std::size_t>{3, 0}));
  EXPECT_EQ(t12.coresolution->t1_mult, (std::vector<std::size_t>{0, 1}));
  auto t23 = is_classical_tilting<Q>({preprojective(k, 2), preprojective(k, 3)}, k);
  ASSERT_EQ(t23.verdict, Verdict::yes);
  EXPECT_EQ(t23.coresolution->t0_mult, (std::vector<std::size_t>{5, 0}));
  EXPECT_EQ(t23.coresolution->t1_mult, (std::vector<std::size_t>{0, 3}));
}

TEST(Tilting, RejectsNonTilting) {
  auto k = kronecker();
  EXPECT_EQ(is_classical_tilting<Q>({preprojective(k, 1), preprojective(k, 3)}, k).verdict, Verdict::no);
  EXPECT_EQ(is_classical_tilting<Q>({preprojective(k, 1)}, k).verdict, Verdict::no);
  auto a = counterexample();
  // pd S1 = 2
  EXPECT_EQ(is_classical_tilting<Q>({simple_modules(a)[0]}, a).verdict, Verdict::no);
}

TEST(Functors, RecollementPiecesOfCounterexample) {
  auto a = counterexample();
  auto s = strat_context(a, sum_of(*a, {"e2", "e3"}));
  EXPECT_EQ(s.corner.algebra->dim(), 4u);
  ASSERT_TRUE(s.quotient.has_value());
  EXPECT_EQ(s.quotient->algebra->dim(), 1u);
  auto p1 = indec_projective(a, 0);
  // i_star(P1) = P1 / P1 e A = top of P1
  EXPECT_EQ(i_star(s, p1)->dim(), 1u);
  // j_shriek(M) = Me
  std::vector<Vec<Q>> ae;
  for (std::size_t i = 0; i < a->dim(); ++i) ae.push_back(a->mul(a->basis(i), s.e));
  EXPECT_EQ(j_shriek(s, regular_module(a))->dim(), Subspace<Q>::span(ae, a->dim()).dim());
  auto y = j_shriek(s, indec_projective(a, 1));
  EXPECT_EQ(hom_dim(*j_lower(s, y), *p1), hom_dim(*y, *j_shriek(s, p1)));
  EXPECT_EQ(hom_dim(*p1, *j_star(s, y)), hom_dim(*j_shriek(s, p1), *y));
}

TEST(Functors, RejectsNonIdempotent) {
  auto a = counterexample();
  EXPECT_THROW(strat_context(a, element(*a, "alpha")), PreconditionError);
}
