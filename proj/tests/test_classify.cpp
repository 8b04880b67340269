#include <gtest/gtest.h>

#include "minext/minext.hpp"
#include "oracle.hpp"

using namespace minext;

namespace {

ExtTag tag_of(const char* spec) { return classify_minimal_extension(*catalog_embedding(spec)).tag; }

Errc refusal(auto&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "no refusal";
  return Errc::parse_error;
}

}  // namespace

TEST(Classify, DecisionTree) {
  EXPECT_EQ(decide_tag(std::nullopt, true), ExtTag::P);
  EXPECT_EQ(decide_tag(RrngType::T1, true), ExtTag::N);
  EXPECT_EQ(decide_tag(RrngType::T3, false), ExtTag::SI);
  EXPECT_EQ(decide_tag(RrngType::T2, true), ExtTag::PI);
  EXPECT_EQ(decide_tag(RrngType::T2, false), ExtTag::SR);
}

TEST(Classify, Examples) {
  EXPECT_EQ(tag_of("embed(gf(2),gf(4))"), ExtTag::P);
  EXPECT_EQ(tag_of("regular_embed(4,2)"), ExtTag::P);
  const auto diag = classify_minimal_extension(*catalog_embedding("diagonal(gf(2))"));
  EXPECT_EQ(diag.tag, ExtTag::SI);
  ASSERT_TRUE(diag.prime_ideal);
  EXPECT_TRUE(diag.prime_ideal->is_zero());
  EXPECT_TRUE(r_isomorphic(*diag.witness, *catalog_rrng("ideal_as_rrng(gf(2),1)")));

  const auto dual = classify_minimal_extension(*catalog_embedding("ideal_extension(zero_bimodule(gf(2),0))"));
  EXPECT_EQ(dual.tag, ExtTag::N);
  EXPECT_EQ(dual.witness->order(), 2u);

  EXPECT_EQ(tag_of("trivial_extension(twisted_field(4,1))"), ExtTag::N);
  EXPECT_EQ(tag_of("diagonal(mat(2,2))"), ExtTag::SI);
}

TEST(Classify, Refusals) {
  EXPECT_EQ(refusal([] { tag_of("tri_in_mat(2,2)"); }), Errc::not_prime_base);
  EXPECT_EQ(refusal([] { tag_of("embed(gf(2),mat(2,2))"); }), Errc::not_minimal_extension);
  EXPECT_EQ(refusal([] { classify_central(*catalog_embedding("trivial_extension(twisted_field(4,1))")); }),
            Errc::not_central);
}

TEST(Classify, SideConditions) {
  for (const auto& spec : suites::extension_corpus()) {
    const auto e = catalog_embedding(spec);
    if (e->big->order() > 64 || !oracle::prime(*e->small) || !is_maximal_subring(*e)) continue;
    const auto t = classify_minimal_extension(*e);
    const bool prime = oracle::prime(*e->big), semiprime = oracle::semiprime(*e->big);
    switch (t.tag) {
      case ExtTag::P:
      case ExtTag::PI: EXPECT_TRUE(prime) << spec; break;
      case ExtTag::SR:
      case ExtTag::SI: EXPECT_TRUE(semiprime && !prime) << spec; break;
      case ExtTag::N: EXPECT_FALSE(semiprime) << spec; break;
    }
  }
}

TEST(Classify, CentralModels) {
  const auto diag = classify_central(*catalog_embedding("diagonal(gf(2))"));
  EXPECT_EQ(diag.tag, ExtTag::SI);
  EXPECT_TRUE(diag.maximal_ideal->is_zero());
  EXPECT_EQ(diag.model->big->order(), 4u);

  const auto dual = classify_central(*catalog_embedding("ideal_extension(zero_bimodule(gf(2),0))"));
  EXPECT_EQ(dual.tag, ExtTag::N);
  EXPECT_TRUE(dual.maximal_ideal->is_zero());

  EXPECT_EQ(classify_central(*catalog_embedding("embed(gf(2),gf(4))")).tag, ExtTag::P);

  const auto f4 = classify_central(*catalog_embedding("diagonal(gf(4))"));
  EXPECT_EQ(f4.tag, ExtTag::SI);
  EXPECT_EQ(f4.model->big->order(), 16u);
  EXPECT_EQ(f4.iso.size(), 16u);
}

TEST(Classify, StableUnderRelabeling) {
  for (const char* spec : {"diagonal(gf(2))", "ideal_extension(zero_bimodule(gf(3),0))",
                           "ideal_extension(regular(gf(4)))", "trivial_extension(twisted_field(4,1))"}) {
    const auto e = catalog_embedding(spec);
    const auto t = classify_minimal_extension(*e);
    for (std::uint32_t seed = 1; seed <= 5; ++seed) {
      const auto shuffled = shuffled_presentation(*e, seed);
      ASSERT_TRUE(find_r_isomorphism(*e, shuffled)) << spec;
      const auto u = classify_minimal_extension(shuffled);
      EXPECT_EQ(u.tag, t.tag) << spec;
      EXPECT_EQ(t.witness.has_value(), u.witness.has_value()) << spec;
      if (t.witness) EXPECT_TRUE(bimodule_isomorphic(*t.witness, *u.witness)) << spec;
    }
  }
}
