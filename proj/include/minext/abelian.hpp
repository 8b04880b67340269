#pragma once

/**
 * @file abelian.hpp
 * @brief Cyclic decomposition of subquotients of a carrier group.
 *
 * Given subgroups sub <= ambient of a rng's additive group, finds
 * representatives g_1..g_m with ambient/sub = (+) <g_i + sub>.  Each
 * p-primary part is split greedily: pick an element of maximal order t
 * modulo the current span, write t*x as a combination of the generators
 * chosen so far and subtract (c_i / t) g_i so the chosen lift has exact
 * order t.  Maximality of t guarantees t | c_i.
 */

#include <cstdint>
#include <vector>

#include "minext/core.hpp"
#include "minext/element_set.hpp"

namespace minext {

struct GroupBasis {
  std::vector<Index> generators;        // representatives in the ambient carrier
  std::vector<std::uint32_t> orders;    // order of each generator modulo sub
  std::vector<Index> local;             // ambient index -> index in CarrierGroup(orders), npos outside

  CarrierGroup carrier() const { return CarrierGroup(orders); }
};

namespace detail {

inline std::vector<std::uint32_t> prime_factors(std::uint64_t n) {
  std::vector<std::uint32_t> ps;
  for (std::uint64_t p = 2; p * p <= n; ++p) {
    if (n % p) continue;
    ps.push_back(static_cast<std::uint32_t>(p));
    while (n % p == 0) n /= p;
  }
  if (n > 1) ps.push_back(static_cast<std::uint32_t>(n));
  return ps;
}

inline bool is_power_of(std::uint64_t t, std::uint32_t p) {
  while (t % p == 0) t /= p;
  return t == 1;
}

}  // namespace detail

inline GroupBasis decompose(const FiniteRng& ring, const ElementSet& ambient, const ElementSet& sub) {
  const std::size_t n = ring.order();
  const auto sub_mask = sub.mask(n);

  auto order_mod = [&](Index x, const std::vector<char>& span) {
    std::uint64_t t = 1;
    Index y = x;
    while (!span[y]) {
      y = ring.add(y, x);
      ++t;
    }
    return t;
  };

  GroupBasis out;
  const std::size_t index_of_quotient = ambient.size() / sub.size();
  for (auto p : detail::prime_factors(index_of_quotient)) {
    std::vector<Index> part;  // elements whose order modulo sub is a power of p
    for (auto x : ambient)
      if (detail::is_power_of(order_mod(x, sub_mask), p)) part.push_back(x);

    std::vector<Index> gens;
    std::vector<std::uint32_t> ords;
    std::vector<char> span = sub_mask;
    std::vector<std::vector<std::uint32_t>> coef(n);  // coefficients w.r.t. gens; empty = zero
    std::vector<Index> members(sub.begin(), sub.end());

    while (true) {
      Index best = npos;
      std::uint64_t best_t = 1;
      for (auto x : part) {
        if (span[x]) continue;
        const auto t = order_mod(x, span);
        if (t > best_t) {
          best_t = t;
          best = x;
        }
      }
      if (best == npos) break;

      Index y = ring.scale(best_t, best);
      const auto& c = coef[y];
      Index lift = best;
      for (std::size_t i = 0; i < c.size(); ++i) {
        if (c[i] % best_t != 0) throw std::logic_error("decompose: lift divisibility failed");
        lift = ring.sub(lift, ring.scale(c[i] / best_t, gens[i]));
      }
      gens.push_back(lift);
      ords.push_back(static_cast<std::uint32_t>(best_t));

      const std::size_t m = members.size();
      const std::size_t g = gens.size();
      Index step = lift;
      for (std::uint32_t k = 1; k < best_t; ++k) {
        for (std::size_t i = 0; i < m; ++i) {
          const Index z = ring.add(members[i], step);
          auto cz = coef[members[i]];
          cz.resize(g, 0);
          cz[g - 1] = k;
          coef[z] = std::move(cz);
          span[z] = 1;
          members.push_back(z);
        }
        step = ring.add(step, lift);
      }
    }
    out.generators.insert(out.generators.end(), gens.begin(), gens.end());
    out.orders.insert(out.orders.end(), ords.begin(), ords.end());
  }

  // local coordinates for every ambient element
  const CarrierGroup quotient(out.orders);
  out.local.assign(n, npos);
  std::vector<Index> members;
  for (auto s : sub) {
    out.local[s] = 0;
    members.push_back(s);
  }
  for (std::size_t i = 0; i < out.generators.size(); ++i) {
    const std::size_t m = members.size();
    Index step = out.generators[i];
    for (std::uint32_t k = 1; k < out.orders[i]; ++k) {
      for (std::size_t j = 0; j < m; ++j) {
        const Index z = ring.add(members[j], step);
        out.local[z] = static_cast<Index>(out.local[members[j]] + k * quotient.stride(i));
        members.push_back(z);
      }
      step = ring.add(step, out.generators[i]);
    }
  }
  for (auto x : ambient) {
    if (out.local[x] == npos) throw std::logic_error("decompose: ambient is not spanned");
  }
  return out;
}

}  // namespace minext
