#pragma once

// Element-level reference computations for the tests.  They only use the
// add/mul tables of a ring and never call the search engines.

#include <cstdint>
#include <set>
#include <vector>

#include "minext/minext.hpp"

namespace oracle {

using minext::FiniteRing;
using minext::FiniteRng;
using minext::Index;

/// Every subset closed under + and negation, found by scanning all 2^n
/// subsets containing 0.  Only for n <= 16.
inline std::vector<std::vector<char>> additive_subgroups(const FiniteRng& s) {
  const std::size_t n = s.order();
  std::vector<std::vector<char>> out;
  for (std::uint32_t bits = 0; bits < (1u << (n - 1)); ++bits) {
    std::vector<char> m(n, 0);
    m[0] = 1;
    for (std::size_t x = 1; x < n; ++x) m[x] = (bits >> (x - 1)) & 1;
    bool ok = true;
    for (std::size_t a = 0; a < n && ok; ++a)
      for (std::size_t b = 0; b < n && ok; ++b)
        if (m[a] && m[b] && !m[s.add(Index(a), Index(b))]) ok = false;
    if (ok) out.push_back(std::move(m));
  }
  return out;
}

inline bool absorbs(const FiniteRng& s, const std::vector<char>& m, bool left, bool right) {
  for (std::size_t r = 0; r < s.order(); ++r)
    for (std::size_t x = 0; x < s.order(); ++x)
      if (m[x] && ((left && !m[s.mul(Index(r), Index(x))]) || (right && !m[s.mul(Index(x), Index(r))])))
        return false;
  return true;
}

inline std::set<std::vector<Index>> ideals(const FiniteRng& s) {
  std::set<std::vector<Index>> out;
  for (const auto& m : additive_subgroups(s))
    if (absorbs(s, m, true, true)) {
      std::vector<Index> v;
      for (std::size_t x = 0; x < m.size(); ++x)
        if (m[x]) v.push_back(Index(x));
      out.insert(v);
    }
  return out;
}

/// aSb = 0 implies a = 0 or b = 0, checked on all pairs.
inline bool prime(const FiniteRing& s) {
  const std::size_t n = s.order();
  for (std::size_t a = 1; a < n; ++a)
    for (std::size_t b = 1; b < n; ++b) {
      bool all_zero = true;
      for (std::size_t x = 0; x < n && all_zero; ++x)
        all_zero = s.mul(s.mul(Index(a), Index(x)), Index(b)) == 0;
      if (all_zero) return false;
    }
  return true;
}

/// aSa = 0 implies a = 0.
inline bool semiprime(const FiniteRing& s) {
  const std::size_t n = s.order();
  for (std::size_t a = 1; a < n; ++a) {
    bool all_zero = true;
    for (std::size_t x = 0; x < n && all_zero; ++x) all_zero = s.mul(s.mul(Index(a), Index(x)), Index(a)) == 0;
    if (all_zero) return false;
  }
  return true;
}

inline std::vector<Index> members(const minext::ElementSet& e) { return e.members(); }

}  // namespace oracle
