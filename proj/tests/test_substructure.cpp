#include <gtest/gtest.h>

#include "minext/minext.hpp"
#include "oracle.hpp"

using namespace minext;

namespace {

// M_2(F_2) coordinates (e11, e12, e21, e22), first most significant
constexpr Index e11 = 8, e12 = 4, e21 = 2, e22 = 1;

ElementSet set_of(std::vector<Index> v) { return ElementSet::from_unsorted(std::move(v)); }

std::set<std::vector<Index>> as_set(const std::vector<ElementSet>& v) {
  std::set<std::vector<Index>> out;
  for (const auto& s : v) out.insert(s.members());
  return out;
}

}  // namespace

TEST(Substructure, Closure) {
  const auto m2 = catalog_ring("mat(2,2)");
  std::vector<Index> seed;
  for (Index x = 0; x < 16; ++x)
    if (!(x & e21)) seed.push_back(x);
  seed.push_back(e21);
  EXPECT_EQ(close(*m2, seed, ClosureMode::subrng).size(), 16u);

  const std::vector<Index> idem = {e11};
  EXPECT_EQ(close(*m2, idem, ClosureMode::subrng).members(), (std::vector<Index>{0, e11}));

  const auto z4 = catalog_ring("zmod(4)");
  const std::vector<Index> one = {1};
  EXPECT_EQ(close(*z4, one, ClosureMode::subrng).size(), 4u);
  EXPECT_EQ(close(*z4, std::vector<Index>{2}, ClosureMode::ideal).members(), (std::vector<Index>{0, 2}));
}

TEST(Substructure, IdealsAgainstSubsetScan) {
  const auto m2 = catalog_ring("mat(2,2)");
  EXPECT_EQ(enumerate_ideals(*m2).size(), 2u);
  const auto z4 = catalog_ring("zmod(4)");
  EXPECT_EQ(as_set(enumerate_ideals(*z4)), (std::set<std::vector<Index>>{{0}, {0, 2}, {0, 1, 2, 3}}));
  const auto t2 = catalog_ring("tri(2,2)");
  EXPECT_EQ(enumerate_ideals(*t2).size(), 5u);
  for (const char* spec : {"zmod(4)", "zmod(8)", "zmod(12)", "gf(4)", "gf(9)", "tri(2,2)", "mat(2,2)",
                           "product(gf(2),gf(2))", "product(gf(2),zmod(4))", "product(gf(2),gf(2),gf(2))"}) {
    const auto r = catalog_ring(spec);
    EXPECT_EQ(as_set(enumerate_ideals(*r)), oracle::ideals(*r)) << spec;
  }
}

TEST(Substructure, PrimeAndSemiprime) {
  EXPECT_TRUE(is_prime(*catalog_ring("mat(2,2)")));
  EXPECT_TRUE(is_semiprime(*catalog_ring("mat(2,2)")));
  EXPECT_FALSE(is_semiprime(*catalog_ring("tri(2,2)")));
  const auto f2f2 = catalog_ring("product(gf(2),gf(2))");
  EXPECT_TRUE(is_semiprime(*f2f2));
  EXPECT_FALSE(is_prime(*f2f2));
}

TEST(Substructure, PrimalityAgreesWithIdealProducts) {
  for (const char* spec : {"zmod(4)", "zmod(6)", "zmod(8)", "zmod(9)", "gf(4)", "gf(8)", "tri(2,2)", "mat(2,2)",
                           "product(gf(2),gf(2))", "product(gf(3),gf(3))", "product(gf(2),zmod(4))", "tri(2,3)"}) {
    const auto r = catalog_ring(spec);
    ASSERT_LE(r->order(), 64u);
    const auto ideals = enumerate_ideals(*r);
    bool prime = true, semiprime = true;
    for (const auto& a : ideals)
      for (const auto& b : ideals) {
        if (a.is_zero() || b.is_zero()) continue;
        bool zero = true;
        for (auto x : a)
          for (auto y : b) zero = zero && r->mul(x, y) == 0;
        if (zero) prime = false;
        if (zero && a == b) semiprime = false;
      }
    EXPECT_EQ(is_prime(*r), prime) << spec;
    EXPECT_EQ(is_semiprime(*r), semiprime) << spec;
    EXPECT_EQ(is_prime(*r), oracle::prime(*r)) << spec;
    EXPECT_EQ(is_semiprime(*r), oracle::semiprime(*r)) << spec;
  }
}

TEST(Substructure, PrimeRadical) {
  EXPECT_EQ(prime_radical(*catalog_ring("zmod(4)")).members(), (std::vector<Index>{0, 2}));
  // tri(2,2) coordinates (e11, e12, e22)
  EXPECT_EQ(prime_radical(*catalog_ring("tri(2,2)")).members(), (std::vector<Index>{0, 2}));
  EXPECT_TRUE(prime_radical(*catalog_ring("mat(2,2)")).is_zero());
}

TEST(Substructure, LittleIdeal) {
  EXPECT_EQ(little_ideal(*catalog_ring("mat(2,2)"))->size(), 16u);
  EXPECT_EQ(little_ideal(*catalog_ring("zmod(4)"))->members(), (std::vector<Index>{0, 2}));
  EXPECT_FALSE(little_ideal(*catalog_ring("product(gf(2),gf(2))")));
}

TEST(Substructure, Centralizer) {
  const auto m2 = catalog_ring("mat(2,2)");
  EXPECT_EQ(center(*m2).members(), (std::vector<Index>{0, e11 + e22}));
  EXPECT_EQ(centralizer(*m2, ElementSet::zero()).size(), 16u);
  const auto f4 = catalog_embedding("regular_embed(4,2)");
  EXPECT_EQ(centralizer(*f4->big, f4->image()), f4->image());
  // independent scan
  std::vector<Index> scan;
  for (Index x = 0; x < 16; ++x) {
    bool ok = true;
    for (auto y : f4->image()) ok = ok && f4->big->mul(x, y) == f4->big->mul(y, x);
    if (ok) scan.push_back(x);
  }
  EXPECT_EQ(scan, f4->image().members());
}

TEST(Substructure, MaximalSubrings) {
  EXPECT_TRUE(is_maximal_subring(*catalog_embedding("tri_in_mat(2,2)")));
  EXPECT_FALSE(is_maximal_subring(*catalog_embedding("embed(gf(2),mat(2,2))")));
  const auto f4 = catalog_embedding("regular_embed(4,2)");
  EXPECT_TRUE(is_maximal_subring(*f4));
  // every element outside F_4 generates M_2(F_2) together with it
  int outside = 0;
  for (Index s = 0; s < 16; ++s) {
    if (f4->image().contains(s)) continue;
    ++outside;
    std::vector<Index> seed = f4->image().members();
    seed.push_back(s);
    EXPECT_EQ(close(*f4->big, seed, ClosureMode::subrng).size(), 16u);
  }
  EXPECT_EQ(outside, 12);
}

TEST(Substructure, QuotientAndIdealCheck) {
  const auto z8 = catalog_ring("zmod(8)");
  const Quotient q = quotient_ring(*z8, set_of({0, 4}));
  EXPECT_EQ(q.ring->order(), 4u);
  EXPECT_TRUE(is_rng_hom(*z8, *q.ring, q.project));
  EXPECT_TRUE(is_ideal(*z8, set_of({0, 2, 4, 6})));
  EXPECT_FALSE(is_ideal(*z8, set_of({0, 1})));
}

TEST(Substructure, OrderCap) {
  Caps tiny;
  tiny.closure = 8;
  try {
    enumerate_ideals(*catalog_ring("mat(2,2)"), tiny);
    FAIL() << "cap not enforced";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::order_cap_exceeded);
  }
}
