#include <gtest/gtest.h>

#include "minext/minext.hpp"
#include "oracle.hpp"

using namespace minext;

namespace {

ElementSet set_of(std::vector<Index> v) { return ElementSet::from_unsorted(std::move(v)); }

bool bijective_ring_map(const FiniteRing& a, const FiniteRing& b, const std::vector<Index>& f) {
  if (a.order() != b.order() || f[a.one()] != b.one()) return false;
  std::set<Index> seen(f.begin(), f.end());
  if (seen.size() != a.order()) return false;
  for (Index x = 0; x < a.order(); ++x)
    for (Index y = 0; y < a.order(); ++y)
      if (f[a.add(x, y)] != b.add(f[x], f[y]) || f[a.mul(x, y)] != b.mul(f[x], f[y])) return false;
  return true;
}

}  // namespace

TEST(Extensions, FieldRingOverFieldIsProduct) {
  const auto x = ideal_extension(*catalog_rrng("ideal_as_rrng(gf(2),1)"));
  const auto p = catalog_ring("product(gf(2),gf(2))");
  // (r, i) -> (r, r + i)
  std::vector<Index> f(4);
  for (Index r = 0; r < 2; ++r)
    for (Index i = 0; i < 2; ++i) f[x.pair(r, i)] = r * 2 + (r ^ i);
  EXPECT_TRUE(bijective_ring_map(*x.ring, *p, f));
}

TEST(Extensions, SquareZeroOverFieldIsDualNumbers) {
  for (const auto& x : {ideal_extension(*catalog_rrng("zero_bimodule(gf(2),0)")),
                        trivial_extension(*catalog_rrng("zero_bimodule(gf(2),0)"))}) {
    const FiniteRing& e = *x.ring;
    ASSERT_EQ(e.order(), 4u);
    int nilpotent = 0, idempotent = 0;
    for (Index a = 0; a < 4; ++a) {
      nilpotent += a && e.mul(a, a) == 0;
      idempotent += e.mul(a, a) == a;
    }
    EXPECT_EQ(nilpotent, 1);
    EXPECT_EQ(idempotent, 2);
    EXPECT_TRUE(e.commutative());
  }
}

TEST(Extensions, MinimalOverBase) {
  EXPECT_EQ(ideal_extension(*catalog_rrng("ideal_as_rrng(zmod(4),2)")).ring->order(), 8u);
  EXPECT_TRUE(is_maximal_subring(ideal_extension(*catalog_rrng("ideal_as_rrng(zmod(4),2)")).base_embedding));
  const auto m2 = trivial_extension(*catalog_rrng("zero_bimodule(mat(2,2),0)"));
  EXPECT_EQ(m2.ring->order(), 256u);
  EXPECT_TRUE(is_maximal_subring(m2.base_embedding));
  EXPECT_FALSE(is_maximal_subring(ideal_extension(*catalog_rrng("as_rrng(gf(2),gf(4))")).base_embedding));
}

TEST(Extensions, TwistedTrivialExtensionIsNoncommutative) {
  const auto x = trivial_extension(*catalog_rrng("twisted_field(4,1)"));
  const FiniteRing& e = *x.ring;
  EXPECT_EQ(e.order(), 16u);
  EXPECT_FALSE(e.commutative());
  // F_4 coordinates (1, x): x is element 1
  const Index m = x.pair(0, 2), a = x.pair(1, 0);
  EXPECT_NE(e.mul(m, a), e.mul(a, m));
}

TEST(Extensions, TrivialExtensionNeedsZeroProduct) {
  try {
    trivial_extension(*catalog_rrng("regular(gf(2))"));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::nonzero_square);
  }
}

TEST(Extensions, SubringsOverBase) {
  for (auto [spec, count] : std::vector<std::pair<const char*, std::size_t>>{
           {"ideal_as_rrng(gf(2),1)", 2}, {"ideal_as_rrng(zmod(4),2)", 2}, {"as_rrng(gf(2),gf(4))", 3}}) {
    const auto x = ideal_extension(*catalog_rrng(spec));
    const auto c = subrings_over(x);
    EXPECT_EQ(c.pairs.size(), count) << spec;
    EXPECT_TRUE(c.bijective) << spec;
    EXPECT_TRUE(c.order_preserving) << spec;
  }
}

TEST(Extensions, IdealsFromHoms) {
  const auto x = ideal_extension(*catalog_rrng("ideal_as_rrng(gf(2),1)"));
  EXPECT_EQ(i_phi(x, {0, 0}), x.ideal);
  EXPECT_EQ(i_phi(x, {0, 1}), set_of({0, x.pair(1, 1)}));
  EXPECT_TRUE(is_ideal(*x.ring, i_phi(x, {0, 1})));
  const auto z = ideal_extension(*catalog_rrng("ideal_as_rrng(zmod(4),2)"));
  EXPECT_EQ(i_phi(z, {0, 2}), set_of({0, z.pair(2, 1)}));
  EXPECT_TRUE(is_ideal(*z.ring, i_phi(z, {0, 2})));
}

TEST(Extensions, IdealFamilies) {
  for (const char* spec : {"ideal_as_rrng(gf(2),1)", "regular(mat(2,2))"}) {
    const auto x = ideal_extension(*catalog_rrng(spec));
    const auto recs = classify_ideals(x);
    std::map<IdealKind, int> kinds;
    for (const auto& r : recs) ++kinds[r.kind];
    EXPECT_EQ(recs.size(), 4u) << spec;
    EXPECT_EQ(kinds[IdealKind::type1], 1) << spec;
    EXPECT_EQ(kinds[IdealKind::type2], 2) << spec;
    EXPECT_EQ(kinds[IdealKind::type3], 1) << spec;
    std::set<ElementSet> described;
    for (const auto& [k, s] : describe_ideal_families(x)) described.insert(s);
    std::set<ElementSet> found;
    for (const auto& r : recs) found.insert(r.members);
    EXPECT_EQ(described, found) << spec;
  }
  const auto small = ideal_extension(*catalog_rrng("ideal_as_rrng(gf(2),1)"));
  EXPECT_EQ(classify_ideals(small).size(), oracle::ideals(*small.ring).size());
  try {
    classify_ideals(ideal_extension(*catalog_rrng("zero_bimodule(gf(2),0)")));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::precondition_violated);
  }
}

TEST(Extensions, Centrality) {
  EXPECT_TRUE(is_central_extension(*catalog_embedding("embed(gf(2),gf(4))")));
  EXPECT_FALSE(is_central_extension(*catalog_embedding("regular_embed(4,2)")));
  const auto tw = catalog_embedding("trivial_extension(twisted_field(4,1))");
  EXPECT_FALSE(is_central_extension(*tw));
  EXPECT_EQ(centralizer(*tw->big, tw->image()).size(), 4u);
}

TEST(Extensions, BrauerConditions) {
  const auto f2f2 = catalog_ring("product(gf(2),gf(2))");
  auto rep = brauer_report(*f2f2, set_of({0, 2}));
  EXPECT_TRUE(rep.meets_center && rep.has_central_idempotent && rep.direct_summand);
  EXPECT_EQ(rep.idempotent, Index(2));

  const auto m2 = catalog_ring("mat(2,2)");
  rep = brauer_report(*m2, ElementSet::all(16));
  EXPECT_TRUE(rep.meets_center && rep.has_central_idempotent && rep.direct_summand);
  EXPECT_EQ(rep.idempotent, m2->one());
}

TEST(Extensions, BrauerConditionsOnMatrixIdealExtension) {
  // E(M_2(F_2), M_2(F_2)) is M_2(F_2) x M_2(F_2), so the ideal 0 + I is a
  // direct factor with central idempotent (1, -1)
  const auto x = ideal_extension(*catalog_rrng("regular(mat(2,2))"));
  const FiniteRing& e = *x.ring;
  EXPECT_FALSE(oracle::prime(e));
  std::vector<Index> z;
  for (Index a = 0; a < e.order(); ++a) {
    bool central = true;
    for (std::size_t b = 0; b < e.rank() && central; ++b) central = e.mul(a, e.basis(b)) == e.mul(e.basis(b), a);
    if (central && x.ideal.contains(a) && a) z.push_back(a);
  }
  ASSERT_EQ(z.size(), 1u);
  const auto rep = brauer_report(e, x.ideal);
  EXPECT_TRUE(rep.meets_center);
  EXPECT_TRUE(rep.has_central_idempotent);
  EXPECT_TRUE(rep.direct_summand);
  EXPECT_EQ(rep.idempotent, z.front());
}

TEST(Extensions, RecoverIdealExtension) {
  const auto diag = catalog_embedding("diagonal(gf(2))");
  // product coordinates (a, b): 0 x F_2 is {0, 1}
  auto rec = recover_ideal_extension(*diag, set_of({0, 1}));
  EXPECT_TRUE(r_isomorphic(rec.rrng, *catalog_rrng("ideal_as_rrng(gf(2),1)")));
  EXPECT_TRUE(bijective_ring_map(*diag->big, *rec.extension.ring, rec.iso));

  const auto dual = ideal_extension(*catalog_rrng("zero_bimodule(gf(2),0)"));
  rec = recover_ideal_extension(dual.base_embedding, dual.ideal);
  EXPECT_TRUE(rec.rrng.zero_product());
  EXPECT_TRUE(r_isomorphic(rec.rrng, *catalog_rrng("zero_bimodule(gf(2),0)")));

  const auto f4 = catalog_embedding("embed(gf(2),gf(4))");
  for (Index a = 1; a < 4; ++a) {
    try {
      recover_ideal_extension(*f4, close(*f4->big, std::vector<Index>{a}, ClosureMode::ideal));
      FAIL();
    } catch (const Error& e) {
      EXPECT_EQ(e.code(), Errc::no_such_ideal);
    }
  }
}
