#include <gtest/gtest.h>

#include <fstream>

#include "minext/minext.hpp"

using namespace minext;

namespace {

std::string parse_error(const std::string& text) {
  try {
    parse_document_text(text, "t.ring");
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::parse_error);
    return e.message();
  }
  ADD_FAILURE() << "accepted:\n" << text;
  return {};
}

const char* f4_text =
    "# F_4\n"
    "ring F4\n"
    "carrier 2 2\n"
    "unity 1 0\n"
    "mul 0 0 = 1 0\n"
    "mul 0 1 = 0 1\n"
    "mul 1 0 = 0 1\n"
    "mul 1 1 = 1 1\n"
    "end\n";

}  // namespace

TEST(Io, ParseRing) {
  const auto doc = parse_document_text(f4_text);
  ASSERT_EQ(doc.rings.size(), 1u);
  EXPECT_EQ(doc.rings[0].name, "F4");
  EXPECT_TRUE(doc.rings[0].ring->same_presentation(*catalog_ring("gf(4)")));
}

TEST(Io, RoundTrip) {
  for (const char* spec : {"gf(4)", "zmod(12)", "tri(2,3)", "mat(2,2)"}) {
    const auto r = catalog_ring(spec);
    const std::string text = emit_ring(*r, "R");
    const auto doc = parse_document_text(text);
    EXPECT_TRUE(doc.rings.at(0).ring->same_presentation(*r)) << spec;
    EXPECT_EQ(emit_ring(*doc.rings[0].ring, "R"), text);
  }
  for (const char* spec : {"twisted_field(4,1)", "ideal_as_rrng(zmod(4),2)", "regular(mat(2,2))"}) {
    const auto m = catalog_rrng(spec);
    const std::string text = emit_rrng(*m, "I");
    const auto doc = parse_document_text(text);
    const RRng& back = *doc.rrngs.at(0).rrng;
    EXPECT_EQ(emit_rrng(back, "I"), text) << spec;
    EXPECT_TRUE(r_isomorphic(back, *m)) << spec;
  }
}

TEST(Io, CatalogRingRef) {
  const auto doc = parse_document_text(
      "rrng I over catalog:gf(2)\n"
      "carrier 2\n"
      "mul 0 0 = 0\n"
      "lact 0 0 = 1\n"
      "ract 0 0 = 1\n"
      "end\n");
  ASSERT_EQ(doc.rrngs.size(), 1u);
  EXPECT_TRUE(doc.rrngs[0].rrng->zero_product());
}

TEST(Io, Diagnostics) {
  std::string t = f4_text;
  EXPECT_NE(parse_error(t.replace(t.find("mul 1 0"), 14, "")).find("'mul 1 0' is missing"), std::string::npos);
  EXPECT_NE(parse_error("ring A\ncarrier 2\nunity 1\nmul 0 0 = 1\n").find("unterminated"), std::string::npos);
  EXPECT_NE(parse_error("ring A\ncarrier 2\nunity 1\nmul 0 0 = 1\nmul 0 0 = 1\nend\n").find("duplicate"),
            std::string::npos);
  EXPECT_NE(parse_error("ring A\ncarrier 2\nunity 1\nmul 0 1 = 1\nend\n").find("range"), std::string::npos);
  EXPECT_NE(parse_error("ring A\ncarrier 2\nunity 1\nmul 0 0 = 1 0\nend\n").find("arity"), std::string::npos);
  EXPECT_NE(parse_error("rrng I over B\ncarrier 2\nend\n").find("unresolved-ref"), std::string::npos);
  EXPECT_NE(parse_error("frobnicate\n").find("t.ring:1:"), std::string::npos);
  // axiom failures surface at the block's first line
  const std::string msg = parse_error("\nring A\ncarrier 2\nunity 0\nmul 0 0 = 1\nend\n");
  EXPECT_EQ(msg.rfind("t.ring:2:", 0), 0u) << msg;
}
