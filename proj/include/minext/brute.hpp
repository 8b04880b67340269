#pragma once

/**
 * @file brute.hpp
 * @brief Slow reference computations used to cross-check the search engines.
 *
 * Nothing here shares code with the basis-driven searches: every map is
 * built one element at a time and every axiom is checked on elements.
 */

#include <algorithm>
#include <array>
#include <cstdint>
#include <set>
#include <vector>

#include "minext/bimodule.hpp"

namespace minext::brute {

/// All maps I -> J satisfying additivity, R-linearity on both sides for
/// every r in R, and (optionally) multiplicativity, each checked on all
/// element pairs.  Equivalent to filtering all |J|^|I| functions: a partial
/// assignment is abandoned only once an axiom involving assigned elements
/// already fails.
inline std::set<std::vector<Index>> rhoms(const RRng& source, const RRng& target, bool multiplicative) {
  const FiniteRng& i = source.rng();
  const FiniteRng& j = target.rng();
  const FiniteRing& r = source.base();
  const std::size_t n = i.order();

  // constraint f(a) op f(b) == f(c), filed under max(a, b, c)
  struct Constraint {
    int kind;  // 0 add, 1 mul, 2 left action by r, 3 right action by r
    Index a, b, c;
  };
  // actions name r in slot a; only the element slots decide the filing
  std::vector<std::vector<Constraint>> at(n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      at[std::max({a, b, std::size_t(i.add(Index(a), Index(b)))})].push_back({0, Index(a), Index(b), i.add(Index(a), Index(b))});
      if (multiplicative)
        at[std::max({a, b, std::size_t(i.mul(Index(a), Index(b)))})].push_back({1, Index(a), Index(b), i.mul(Index(a), Index(b))});
    }
  for (std::size_t x = 0; x < r.order(); ++x)
    for (std::size_t a = 0; a < n; ++a) {
      const Index la = source.lact(Index(x), Index(a)), ra = source.ract(Index(a), Index(x));
      at[std::max<std::size_t>(a, la)].push_back({2, Index(x), Index(a), la});
      at[std::max<std::size_t>(a, ra)].push_back({3, Index(x), Index(a), ra});
    }

  std::set<std::vector<Index>> out;
  std::vector<Index> f(n, 0);
  auto holds = [&](const Constraint& k) {
    switch (k.kind) {
      case 0: return j.add(f[k.a], f[k.b]) == f[k.c];
      case 1: return j.mul(f[k.a], f[k.b]) == f[k.c];
      case 2: return target.lact(k.a, f[k.b]) == f[k.c];
      default: return target.ract(f[k.b], k.a) == f[k.c];
    }
  };
  auto go = [&](auto&& self, std::size_t x) -> void {
    if (x == n) {
      out.insert(f);
      return;
    }
    for (std::size_t v = 0; v < j.order(); ++v) {
      f[x] = static_cast<Index>(v);
      bool ok = true;
      for (const auto& k : at[x])
        if (!(ok = holds(k))) break;
      if (ok) self(self, x + 1);
    }
    f[x] = 0;
  };
  go(go, 0);
  return out;
}

/// A ring of order 4 and characteristic 2 as raw tables on {0,1,2,3},
/// with element a = 2*a0 + a1 over the basis (2, 1).
struct Table4 {
  std::array<std::array<std::uint8_t, 4>, 4> mul{};
  std::uint8_t one = 0;
};

/// Every unital associative ring on (Z/2)^2, up to isomorphism.  Each such
/// ring contains F_2 = {0, 1} unitally, and the index is 2, so each is a
/// minimal extension of F_2.
inline std::vector<Table4> order4_char2_rings() {
  auto add = [](unsigned a, unsigned b) { return a ^ b; };
  std::vector<Table4> rings;
  for (unsigned code = 0; code < 256; ++code) {
    // basis products u*u, u*v, v*u, v*v with u = 2, v = 1
    const unsigned uu = code & 3, uv = (code >> 2) & 3, vu = (code >> 4) & 3, vv = (code >> 6) & 3;
    Table4 t;
    for (unsigned a = 0; a < 4; ++a)
      for (unsigned b = 0; b < 4; ++b) {
        unsigned p = 0;
        if ((a & 2) && (b & 2)) p = add(p, uu);
        if ((a & 2) && (b & 1)) p = add(p, uv);
        if ((a & 1) && (b & 2)) p = add(p, vu);
        if ((a & 1) && (b & 1)) p = add(p, vv);
        t.mul[a][b] = static_cast<std::uint8_t>(p);
      }
    bool assoc = true;
    for (unsigned a = 0; a < 4 && assoc; ++a)
      for (unsigned b = 0; b < 4 && assoc; ++b)
        for (unsigned c = 0; c < 4 && assoc; ++c) assoc = t.mul[t.mul[a][b]][c] == t.mul[a][t.mul[b][c]];
    if (!assoc) continue;
    int unity = -1;
    for (unsigned e = 0; e < 4 && unity < 0; ++e) {
      bool ok = true;
      for (unsigned a = 0; a < 4; ++a) ok = ok && t.mul[e][a] == a && t.mul[a][e] == a;
      if (ok) unity = static_cast<int>(e);
    }
    if (unity < 0) continue;
    t.one = static_cast<std::uint8_t>(unity);
    rings.push_back(t);
  }

  // the six additive automorphisms of (Z/2)^2
  std::vector<std::array<std::uint8_t, 4>> perms;
  for (unsigned x = 1; x < 4; ++x)
    for (unsigned y = 1; y < 4; ++y)
      if (x != y) perms.push_back({0, std::uint8_t(y), std::uint8_t(x), std::uint8_t(x ^ y)});
  auto isomorphic = [&](const Table4& s, const Table4& t) {
    for (const auto& p : perms) {
      bool ok = true;
      for (unsigned a = 0; a < 4 && ok; ++a)
        for (unsigned b = 0; b < 4 && ok; ++b) ok = p[s.mul[a][b]] == t.mul[p[a]][p[b]];
      if (ok) return true;
    }
    return false;
  };
  std::vector<Table4> classes;
  for (const auto& t : rings)
    if (std::none_of(classes.begin(), classes.end(), [&](const Table4& c) { return isomorphic(c, t); }))
      classes.push_back(t);
  return classes;
}

/// Named invariants that tell the three order-4 classes apart.
struct Order4Profile {
  int nilpotents = 0;   // nonzero a with a^2 = 0
  int idempotents = 0;  // a with a^2 = a
  bool field = false;   // every nonzero element invertible
};

inline Order4Profile profile(const Table4& t) {
  Order4Profile p;
  int units = 0;
  for (unsigned a = 0; a < 4; ++a) {
    if (a && t.mul[a][a] == 0) ++p.nilpotents;
    if (t.mul[a][a] == a) ++p.idempotents;
    for (unsigned b = 0; b < 4; ++b)
      if (t.mul[a][b] == t.one) {
        ++units;
        break;
      }
  }
  p.field = units == 3;
  return p;
}

}  // namespace minext::brute
