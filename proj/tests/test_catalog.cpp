#include <gtest/gtest.h>

#include "minext/minext.hpp"

using namespace minext;

TEST(Catalog, TriangularInsideMatrices) {
  const auto e = catalog_embedding("tri_in_mat(2,2)");
  EXPECT_EQ(e->small->order(), 8u);
  EXPECT_EQ(e->big->order(), 16u);
  EXPECT_TRUE(is_maximal_subring(*e));
}

TEST(Catalog, TwistedField) {
  const auto m = catalog_rrng("twisted_field(4,1)");
  EXPECT_TRUE(m->zero_product());
  EXPECT_TRUE(is_minimal_rrng(*m));
  const auto plain = catalog_rrng("zero_bimodule(gf(4),0)");
  EXPECT_FALSE(has_nonzero_rhom(*m, *plain, false));
  EXPECT_FALSE(bimodule_isomorphic(*m, *plain));
  // F_4 coordinates (1, x): m . x = m x^2 = m (x + 1)
  EXPECT_EQ(m->ract(2, 1), Index(3));
  EXPECT_EQ(m->lact(1, 2), Index(1));
}

TEST(Catalog, BergmanLevelOne) {
  const auto obj = catalog_make("bergman_level(1,2)");
  const auto& b = *std::get<std::shared_ptr<const BergmanLevel>>(obj);
  DenseMatrix e(4, 2);
  e(0, 0) = e(2, 2) = 1;
  EXPECT_EQ(b.idempotent, e);
  EXPECT_TRUE(bergman_violations(b).empty());
  EXPECT_TRUE(bergman_violations(make_bergman_level(2, 2)).empty());
}

TEST(Catalog, BadParams) {
  for (const char* spec : {"gf(6)", "zmod(1)", "mat(0,2)", "gf(2", "nosuch(2)", "regular_embed(4,3)"}) {
    try {
      catalog_make(spec);
      ADD_FAILURE() << spec;
    } catch (const Error& e) {
      EXPECT_TRUE(e.code() == Errc::bad_params || e.code() == Errc::unknown_constructor ||
                  e.code() == Errc::parse_error) << spec << ": " << e.what();
    }
  }
  try {
    catalog_make("nosuch(2)");
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::unknown_constructor);
  }
}

TEST(Catalog, Orders) {
  EXPECT_EQ(catalog_ring("gf(8)")->order(), 8u);
  EXPECT_EQ(catalog_ring("gf(9)")->order(), 9u);
  EXPECT_EQ(catalog_ring("mat(2,3)")->order(), 81u);
  EXPECT_EQ(catalog_ring("product(zmod(4),gf(3))")->order(), 12u);
  EXPECT_EQ(catalog_embedding("regular_embed(9,3)")->big->order(), 81u);
  EXPECT_EQ(catalog_entries().size(), 18u);
}
