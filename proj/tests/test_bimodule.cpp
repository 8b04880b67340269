#include <gtest/gtest.h>

#include "minext/minext.hpp"
#include "oracle.hpp"

using namespace minext;

namespace {

std::vector<Index> table(const BilinearTable& t) {
  std::vector<Index> out;
  for (std::size_t i = 0; i < t.left().rank(); ++i)
    for (std::size_t j = 0; j < t.right().rank(); ++j) out.push_back(t.basis_value(i, j));
  return out;
}

std::set<std::vector<Index>> hom_values(const RRng& a, const RRng& b, bool multiplicative = true) {
  HomOptions o;
  o.multiplicative = multiplicative;
  std::set<std::vector<Index>> out;
  for (const auto& h : enumerate_rhoms(a, b, o)) out.insert(h.values);
  return out;
}

}  // namespace

TEST(Bimodule, ValidRRngs) {
  const auto zero = catalog_rrng("zero_bimodule(gf(2),0)");
  EXPECT_TRUE(zero->zero_product());
  EXPECT_NO_THROW(validate_rrng(*zero));
  const auto ideal = catalog_rrng("ideal_as_rrng(zmod(4),2)");
  EXPECT_EQ(ideal->order(), 2u);
  EXPECT_NO_THROW(validate_rrng(*ideal));
}

TEST(Bimodule, CorruptedActionRejected) {
  const auto m = catalog_rrng("regular(zmod(4))");
  auto left = table(m->left_table());
  left[0] = 2;  // 1 . x = 2x
  try {
    make_rrng(m->base_ptr(), m->rng(), left, table(m->right_table()));
    FAIL() << "corrupted action accepted";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::axiom_violation);
  }
}

TEST(Bimodule, Annihilators) {
  const auto z4 = annihilators(*catalog_rrng("ideal_as_rrng(zmod(4),2)"));
  EXPECT_EQ(z4.two_sided.members(), (std::vector<Index>{0, 2}));
  EXPECT_EQ(z4.left, z4.two_sided);
  EXPECT_EQ(z4.right, z4.two_sided);
  EXPECT_TRUE(annihilators(*catalog_rrng("zero_bimodule(gf(2),0)")).two_sided.is_zero());
  EXPECT_TRUE(annihilators(*catalog_rrng("ideal_as_rrng(gf(2),1)")).two_sided.is_zero());
  EXPECT_TRUE(annihilators(*catalog_rrng("regular(mat(2,2))")).two_sided.is_zero());
  EXPECT_TRUE(annihilators(*catalog_rrng("regular(tri(2,2))")).two_sided.is_zero());
}

TEST(Bimodule, Minimality) {
  EXPECT_TRUE(is_minimal_rrng(*catalog_rrng("zero_bimodule(gf(2),0)")));
  EXPECT_FALSE(is_minimal_rrng(*catalog_rrng("as_rrng(gf(2),gf(4))")));
  EXPECT_EQ(rsubrngs(*catalog_rrng("as_rrng(gf(2),gf(4))")).size(), 3u);
  EXPECT_TRUE(is_minimal_rrng(*catalog_rrng("regular(mat(2,2))")));
  EXPECT_TRUE(is_minimal_rrng(*catalog_rrng("twisted_field(4,1)")));
}

TEST(Bimodule, HomSets) {
  const auto f2 = catalog_ring("gf(2)");
  const RRng base = regular_rrng(f2);
  EXPECT_EQ(hom_values(*catalog_rrng("zero_bimodule(gf(2),0)"), base), (std::set<std::vector<Index>>{{0, 0}}));
  EXPECT_EQ(hom_values(*catalog_rrng("ideal_as_rrng(gf(2),1)"), base),
            (std::set<std::vector<Index>>{{0, 0}, {0, 1}}));
  const auto ideal = catalog_rrng("ideal_as_rrng(zmod(4),2)");
  EXPECT_EQ(hom_values(*ideal, regular_rrng(ideal->base_ptr())), (std::set<std::vector<Index>>{{0, 0}, {0, 2}}));
}

TEST(Bimodule, HomSetsAgainstFunctionScan) {
  for (const char* a : {"zero_bimodule(gf(4),0)", "twisted_field(4,1)", "regular(gf(4))"})
    for (const char* b : {"zero_bimodule(gf(4),0)", "twisted_field(4,1)", "regular(gf(4))"})
      for (bool mult : {true, false}) {
        const auto x = catalog_rrng(a), y = catalog_rrng(b);
        EXPECT_EQ(hom_values(*x, *y, mult), brute::rhoms(*x, *y, mult)) << a << " -> " << b;
      }
}

TEST(Bimodule, Isomorphism) {
  const auto zero = catalog_rrng("zero_bimodule(gf(2),0)");
  const auto one = catalog_rrng("ideal_as_rrng(gf(2),1)");
  EXPECT_TRUE(r_isomorphic(*zero, *zero));
  EXPECT_FALSE(r_isomorphic(*zero, *one));
  const auto twisted = catalog_rrng("twisted_field(4,1)");
  EXPECT_FALSE(r_isomorphic(*twisted, *catalog_rrng("regular(gf(4))")));
  EXPECT_FALSE(bimodule_isomorphic(*twisted, *catalog_rrng("zero_bimodule(gf(4),0)")));
  EXPECT_FALSE(has_nonzero_rhom(*twisted, *catalog_rrng("zero_bimodule(gf(4),0)"), false));
}

TEST(Bimodule, ThreeTypes) {
  EXPECT_EQ(rrng_type(*catalog_rrng("zero_bimodule(gf(2),0)")), RrngType::T1);
  EXPECT_EQ(rrng_type(*catalog_rrng("ideal_as_rrng(gf(2),1)")), RrngType::T3);
  EXPECT_EQ(rrng_type(*catalog_rrng("regular(mat(2,2))")), RrngType::T3);
  EXPECT_EQ(rrng_type(*catalog_rrng("ideal_as_rrng(zmod(4),2)")), RrngType::T1);
}

TEST(Bimodule, MinimalAnnihilatorsArePrime) {
  for (const auto& spec : suites::minimal_corpus()) {
    const auto m = catalog_rrng(spec);
    const auto ann = annihilators(*m);
    const FiniteRing& r = m->base();
    const auto qr = quotient_ring(r, ann.right), ql = quotient_ring(r, ann.left), qt = quotient_ring(r, ann.two_sided);
    EXPECT_TRUE(oracle::prime(*qr.ring)) << spec;
    EXPECT_TRUE(oracle::prime(*ql.ring)) << spec;
    EXPECT_TRUE(oracle::semiprime(*qt.ring)) << spec;
    if (!m->zero_product()) {
      EXPECT_EQ(ann.left, ann.right) << spec;
      EXPECT_EQ(ann.left, ann.two_sided) << spec;
    }
  }
}
