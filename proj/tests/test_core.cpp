#include <gtest/gtest.h>

#include "minext/minext.hpp"
#include "oracle.hpp"

using namespace minext;

namespace {

Errc code_of(auto&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "no error thrown";
  return Errc::parse_error;
}

}  // namespace

TEST(Core, CyclicRingOfOrderFour) {
  FiniteRng z4(CarrierGroup({4}), {1});
  EXPECT_EQ(z4.order(), 4u);
  EXPECT_EQ(z4.mul(2, 2), 0u);
  EXPECT_EQ(z4.mul(3, 3), 1u);
  EXPECT_EQ(z4.add(3, 2), 1u);
  ASSERT_TRUE(find_unity(z4));
  EXPECT_EQ(*find_unity(z4), 1u);
}

TEST(Core, FieldOfFourFromItsTable) {
  // basis (1, x), x^2 = x + 1; element = 2*c_1 + c_x
  FiniteRng f4(CarrierGroup({2, 2}), {2, 1, 1, 3});
  const Index one = 2, x = 1;
  EXPECT_EQ(f4.mul(x, x), f4.add(x, one));
  // x generates the multiplicative group of order 3
  EXPECT_EQ(f4.mul(f4.mul(x, x), x), one);
  for (Index a = 1; a < 4; ++a) {
    int inverses = 0;
    for (Index b = 0; b < 4; ++b) inverses += f4.mul(a, b) == one;
    EXPECT_EQ(inverses, 1) << a;
    for (Index b = 0; b < 4; ++b) EXPECT_EQ(f4.mul(a, b), f4.mul(b, a));
  }
}

TEST(Core, NonAssociativeTableRejected) {
  // e0 e1 = e1, e1 e2 = e2, everything else 0: (e0 e1) e2 = e2 but e0 (e1 e2) = 0
  const Index e1 = 2, e2 = 1;
  std::vector<Index> sc(9, 0);
  sc[0 * 3 + 1] = e1;
  sc[1 * 3 + 2] = e2;
  EXPECT_EQ(code_of([&] { FiniteRng(CarrierGroup({2, 2, 2}), sc); }), Errc::non_associative);
}

TEST(Core, ShapeAndTorsionErrors) {
  EXPECT_EQ(code_of([] { FiniteRng(CarrierGroup({2, 2}), {1, 0, 0}); }), Errc::dimension_mismatch);
  // e0 has order 2, so e0 * e0 = e1 of order 4 is impossible
  EXPECT_EQ(code_of([] { FiniteRng(CarrierGroup({2, 4}), {1, 0, 0, 1}); }), Errc::torsion_mismatch);
}

TEST(Core, Unity) {
  FiniteRng zero(CarrierGroup({2}), {0});
  EXPECT_FALSE(find_unity(zero));
  EXPECT_EQ(code_of([&] { FiniteRing::with_found_unity(zero); }), Errc::not_unital);
  const auto m2 = catalog_ring("mat(2,2)");
  // e11 e12 e21 e22 row-major, first coordinate most significant
  EXPECT_EQ(m2->one(), 8u + 1u);
  EXPECT_EQ(*find_unity(*m2), m2->one());
}

TEST(Core, ProductWithZeroAndFullAssociativity) {
  for (const char* spec : {"zmod(4)", "zmod(6)", "gf(4)", "gf(8)", "gf(9)", "tri(2,2)", "mat(2,2)", "tri(2,3)",
                           "product(gf(2),zmod(4))", "product(gf(2),gf(2),gf(2))"}) {
    const auto r = catalog_ring(spec);
    const std::size_t n = r->order();
    ASSERT_LE(n, 64u) << spec;
    for (Index a = 0; a < n; ++a) {
      EXPECT_EQ(r->mul(a, 0), 0u);
      EXPECT_EQ(r->mul(0, a), 0u);
      for (Index b = 0; b < n; ++b)
        for (Index c = 0; c < n; ++c) ASSERT_EQ(r->mul(r->mul(a, b), c), r->mul(a, r->mul(b, c))) << spec;
    }
  }
}

TEST(Core, ErrorCarriesCode) {
  const Error e(Errc::bad_params, "gf(6)");
  EXPECT_EQ(e.code(), Errc::bad_params);
  EXPECT_EQ(std::string(e.what()), "bad-params: gf(6)");
  EXPECT_EQ(e.message(), "gf(6)");
}
