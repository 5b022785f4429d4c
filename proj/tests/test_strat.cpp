#include <gtest/gtest.h>

#include "fixtures.hpp"

using namespace fixtures;

TEST(Certificates, CounterexampleIdealIsStratifying) {
  auto a = counterexample();
  auto r = check_stratifying_ideal(a, sum_of(*a, {"e2", "e3"}));
  EXPECT_TRUE(r.certificate.complete);
  EXPECT_EQ(r.certificate.kernel_stratifying, std::optional<bool>(true));
  EXPECT_EQ(r.certificate.is_homological_epi, std::optional<bool>(true));
  EXPECT_TRUE(r.corner_is_kronecker);
  ASSERT_TRUE(r.quotient.has_value());
  // A/AeA is S1 as a right A-module
  auto q = restrict_along(r.quotient->projection, regular_module(r.quotient->algebra));
  EXPECT_EQ(is_isomorphic(q, simple_modules(a)[0]).verdict, IsoVerdict::yes);
}

TEST(Certificates, OtherIdempotentsOfCounterexample) {
  auto a = counterexample();
  EXPECT_THROW(check_stratifying_ideal(a, a->unit()), PreconditionError);
  auto r = check_stratifying_ideal(a, sum_of(*a, {"e1"}));
  EXPECT_TRUE(r.certificate.complete);
  EXPECT_FALSE(r.corner_is_kronecker);
}

TEST(Certificates, RingEpiOnDiagonal) {
  auto k = ground_field<Q>();
  auto kk = product_algebra(k, k);
  Mat<Q> d(1, 2);
  d(0, 0) = Q(1);
  d(0, 1) = Q(1);
  auto c = check_ring_epi(RingHom<Q>(k, kk.algebra, d));
  EXPECT_EQ(c.is_ring_epi, std::optional<bool>(false));
  EXPECT_EQ(check_ring_epi(identity_hom(kk.algebra)).is_ring_epi, std::optional<bool>(true));
}

TEST(Certificates, TriangularInclusionIsNonSurjectiveHomologicalEpi) {
  auto l = triangular_inclusion();
  auto h = check_homological_epi(l);
  EXPECT_EQ(h.is_ring_epi, std::optional<bool>(true));
  EXPECT_EQ(h.is_homological_epi, std::optional<bool>(true));
  auto s = check_surjectivity(l);
  EXPECT_EQ(s.certificate.is_surjective, std::optional<bool>(false));
  EXPECT_FALSE(s.trace.empty());
}

TEST(Certificates, ProductProjectionHasIdempotentKernel) {
  auto p = product_algebra(matrix_algebra<Q>(2), matrix_algebra<Q>(3));
  auto c = check_kernel_idempotent(p.first);
  EXPECT_EQ(c.kernel_idempotent, std::optional<bool>(true));
  auto g = find_idempotent_generator(kernel_ideal(p.first));
  ASSERT_TRUE(g.has_value());
  EXPECT_TRUE(is_zero(p.first.apply(*g)));
  EXPECT_EQ(p.second.apply(*g), p.second.target()->unit());
}

TEST(Certificates, KroneckerModArrowKernelIsNotIdempotent) {
  auto k = kronecker();
  auto qa = quotient_by_ideal(k, ideal_generated(k, {element(*k, "a")}));
  auto c = check_kernel_idempotent(qa.projection);
  EXPECT_EQ(c.kernel_idempotent, std::optional<bool>(false));
  EXPECT_GT(c.witness("Tor_1(B,B)").value_or(0), 0);
  EXPECT_LT(*c.witness("dim Ker f^2"), *c.witness("dim Ker f"));
  EXPECT_EQ(check_homological_epi(qa.projection).is_homological_epi, std::optional<bool>(false));
  EXPECT_FALSE(find_idempotent_generator(kernel_ideal(qa.projection)).has_value());
}

TEST(Certificates, JsonCarriesFlagsAndWitnesses) {
  Certificate c;
  c.is_ring_epi = true;
  c.record("dim", 3);
  c.note("n");
  auto j = to_json(c);
  EXPECT_EQ(j["is_ring_epi"], true);
  EXPECT_TRUE(j.contains("witnesses"));
  Certificate d;
  d.complete = false;
  d.is_surjective = false;
  c.merge(d);
  EXPECT_FALSE(c.complete);
  EXPECT_EQ(c.is_surjective, std::optional<bool>(false));
}

TEST(Constructions, OneRejectsBadInput) {
  auto k = kronecker();
  auto qa = quotient_by_ideal(k, ideal_generated(k, {element(*k, "a")}));
  EXPECT_THROW(construction_one(qa.projection), PreconditionError);
  auto kk = product_algebra(ground_field<Q>(), ground_field<Q>());
  Mat<Q> d(1, 2);
  d(0, 0) = Q(1);
  d(0, 1) = Q(1);
  EXPECT_THROW(construction_one(RingHom<Q>(ground_field<Q>(), kk.algebra, d)), PreconditionError);
}

TEST(Constructions, OneOnTriangularInclusion) {
  auto r = construction_one(triangular_inclusion());
  EXPECT_EQ(r.a_prime.algebra->dim(), 7u);
  EXPECT_EQ(r.b_module->dim(), 4u);
  EXPECT_EQ(r.quotient->dim(), 1u);
  ASSERT_TRUE(r.lambda_prime.has_value());
  EXPECT_TRUE(r.lambda_prime->surjective());
  EXPECT_EQ(r.checks.is_homological_epi, std::optional<bool>(true));
}

TEST(Constructions, OneIsSeedIndependent) {
  auto l = triangular_inclusion();
  for (std::uint32_t s : {1u, 2u, 77u}) {
    auto r = construction_one(l, kDefaultCutoff, s);
    EXPECT_EQ(r.a_prime.algebra->dim(), 7u);
    EXPECT_EQ(r.checks.kernel_stratifying, std::optional<bool>(true));
  }
}

TEST(Constructions, TwoOnKroneckerLifts) {
  auto c1 = construction_two(kronecker_lift(1, 2));
  EXPECT_EQ(c1.c->dim(), 1u);
  EXPECT_EQ(c1.kernel_dim, 3u);
  EXPECT_EQ(c1.coker_dim, 0u);
  auto c2 = construction_two(kronecker_lift(2, 3));
  EXPECT_EQ(c2.c->dim(), 9u);
  EXPECT_EQ(c2.kernel_dim, 0u);
  EXPECT_EQ(c2.coker_dim, 5u);
  EXPECT_EQ(c2.ext1_ba_dim, 5u);
}

TEST(Constructions, TwoRejectsIdentity) {
  try {
    construction_two(identity_hom(kronecker()));
    FAIL() << "no exception";
  } catch (const PreconditionError& e) {
    EXPECT_NE(std::string(e.what()).find("degenerate cone"), std::string::npos);
  }
}

TEST(Constructions, LiftedEndomorphismsOfKronecker) {
  auto l1 = kronecker_lift(1, 2);
  EXPECT_EQ(l1.target()->dim(), 9u);
  EXPECT_TRUE(l1.injective());
  auto l2 = kronecker_lift(2, 3);
  EXPECT_EQ(l2.target()->dim(), 25u);
}
