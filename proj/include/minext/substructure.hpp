#pragma once

/**
 * @file substructure.hpp
 * @brief Subrngs, ideals, radicals, centralizers and embedded subrings.
 *
 * Everything here is exact enumeration over the element indices of a
 * finite rng.  Closures are grown as additive spans; because products are
 * biadditive, a span is closed under a product as soon as the products of
 * its generators land in it, so the worklist only ever touches generators.
 */

#include <memory>
#include <set>
#include <span>
#include <string>
#include <vector>

#include "minext/abelian.hpp"
#include "minext/core.hpp"
#include "minext/element_set.hpp"
#include "minext/search.hpp"

namespace minext {

enum class ClosureMode { subrng, ideal, left_ideal, right_ideal };

inline Span close_span(const FiniteRng& s, std::span<const Index> seed, ClosureMode mode, const Caps& caps = {}) {
  require_order(s.order(), caps.closure, "close");
  const std::size_t k = s.rank();
  return close_with(s, seed, [&](Index g, std::span<const Index> done, auto&& emit) {
    switch (mode) {
      case ClosureMode::subrng:
        for (auto h : done) {
          emit(s.mul(g, h));
          emit(s.mul(h, g));
        }
        break;
      case ClosureMode::ideal:
        for (std::size_t i = 0; i < k; ++i) {
          emit(s.mul(s.basis(i), g));
          emit(s.mul(g, s.basis(i)));
        }
        break;
      case ClosureMode::left_ideal:
        for (std::size_t i = 0; i < k; ++i) emit(s.mul(s.basis(i), g));
        break;
      case ClosureMode::right_ideal:
        for (std::size_t i = 0; i < k; ++i) emit(s.mul(g, s.basis(i)));
        break;
    }
  });
}

inline ElementSet close(const FiniteRng& s, std::span<const Index> seed, ClosureMode mode, const Caps& caps = {}) {
  return close_span(s, seed, mode, caps).set();
}

inline ElementSet close(const FiniteRng& s, const ElementSet& seed, ClosureMode mode, const Caps& caps = {}) {
  return close(s, std::span<const Index>(seed.members()), mode, caps);
}

inline bool is_subgroup(const FiniteRng& s, const ElementSet& set) {
  if (!set.contains(0)) return false;
  Span span(s);
  for (auto x : set) span.adjoin(x);
  return span.size() == set.size();
}

inline bool is_subrng(const FiniteRng& s, const ElementSet& set) {
  if (!is_subgroup(s, set)) return false;
  const auto gens = span_generators(s, set);
  for (auto a : gens)
    for (auto b : gens)
      if (!set.contains(s.mul(a, b))) return false;
  return true;
}

inline bool is_ideal(const FiniteRng& s, const ElementSet& set) {
  if (!is_subgroup(s, set)) return false;
  for (auto g : span_generators(s, set)) {
    for (std::size_t i = 0; i < s.rank(); ++i) {
      if (!set.contains(s.mul(s.basis(i), g)) || !set.contains(s.mul(g, s.basis(i)))) return false;
    }
  }
  return true;
}

/// Additive span of a union; the sum of two ideals.
inline ElementSet sum_of(const FiniteRng& s, const ElementSet& a, const ElementSet& b) {
  Span span(s);
  for (auto x : a) span.adjoin(x);
  for (auto x : b) span.adjoin(x);
  return span.set();
}

/// All two-sided ideals, as the pairwise-sum fixpoint of the principal
/// ideals, in canonical order.
inline std::vector<ElementSet> enumerate_ideals(const FiniteRng& s, const Caps& caps = {}) {
  require_order(s.order(), caps.closure, "enumerate_ideals");
  std::set<ElementSet> found;
  for (std::size_t a = 0; a < s.order(); ++a) {
    const Index x = static_cast<Index>(a);
    found.insert(close(s, std::span<const Index>(&x, 1), ClosureMode::ideal, caps));
  }
  std::vector<ElementSet> list(found.begin(), found.end());
  for (std::size_t i = 0; i < list.size(); ++i) {
    for (std::size_t j = 0; j < i; ++j) {
      auto sum = sum_of(s, list[i], list[j]);
      if (found.insert(sum).second) list.push_back(std::move(sum));
    }
  }
  return {found.begin(), found.end()};
}

struct Cosets {
  std::vector<Index> id;               // element -> coset number
  std::vector<Index> representatives;  // coset number -> least element
};

/// Cosets of an additive subgroup, numbered by least representative.
inline Cosets cosets(const FiniteRng& s, const ElementSet& sub) {
  Cosets c;
  c.id.assign(s.order(), npos);
  for (std::size_t x = 0; x < s.order(); ++x) {
    if (c.id[x] != npos) continue;
    const Index n = static_cast<Index>(c.representatives.size());
    c.representatives.push_back(static_cast<Index>(x));
    for (auto q : sub) c.id[s.add(static_cast<Index>(x), q)] = n;
  }
  return c;
}

/// Q proper, and aSb in Q forces a or b into Q.  Only coset representatives
/// and basis elements of S are examined.
inline bool is_prime_ideal(const FiniteRing& s, const ElementSet& q) {
  if (q.size() == s.order()) return false;
  const auto c = cosets(s, q);
  const std::size_t k = s.rank();
  std::vector<Index> reps(c.representatives.begin() + 1, c.representatives.end());
  for (auto a : reps) {
    std::vector<Index> ae(k);
    for (std::size_t i = 0; i < k; ++i) ae[i] = s.mul(a, s.basis(i));
    for (auto b : reps) {
      bool escapes = false;
      for (std::size_t i = 0; i < k && !escapes; ++i) escapes = c.id[s.mul(ae[i], b)] != 0;
      if (!escapes) return false;
    }
  }
  return true;
}

inline bool is_semiprime_ideal(const FiniteRing& s, const ElementSet& q) {
  const auto c = cosets(s, q);
  const std::size_t k = s.rank();
  for (std::size_t r = 1; r < c.representatives.size(); ++r) {
    const Index a = c.representatives[r];
    bool escapes = false;
    for (std::size_t i = 0; i < k && !escapes; ++i) escapes = c.id[s.mul(s.mul(a, s.basis(i)), a)] != 0;
    if (!escapes) return false;
  }
  return true;
}

/// No nonzero a, b with aSb = 0.
inline bool is_prime(const FiniteRing& s) { return is_prime_ideal(s, ElementSet::zero()); }

/// No nonzero a with aSa = 0.
inline bool is_semiprime(const FiniteRing& s) { return is_semiprime_ideal(s, ElementSet::zero()); }

inline bool is_simple(const FiniteRing& s, const Caps& caps = {}) {
  return s.order() > 1 && enumerate_ideals(s, caps).size() == 2;
}

inline bool is_maximal_ideal(const FiniteRing& s, const ElementSet& m, const std::vector<ElementSet>& ideals) {
  if (m.size() == s.order()) return false;
  for (const auto& j : ideals)
    if (m.subset_of(j) && j.size() > m.size() && j.size() < s.order()) return false;
  return true;
}

inline ElementSet intersect_all(std::size_t order, const std::vector<ElementSet>& sets) {
  ElementSet acc = ElementSet::all(order);
  for (const auto& s : sets) acc = intersect(acc, s);
  return acc;
}

/// Intersection of the ideals with prime quotient.
inline ElementSet prime_radical(const FiniteRing& s, const Caps& caps = {}) {
  std::vector<ElementSet> primes;
  for (auto& q : enumerate_ideals(s, caps))
    if (is_prime_ideal(s, q)) primes.push_back(std::move(q));
  return intersect_all(s.order(), primes);
}

/// Least nonzero ideal, present exactly when s is subdirectly irreducible.
inline std::optional<ElementSet> little_ideal(const FiniteRing& s, const Caps& caps = {}) {
  std::vector<ElementSet> nonzero;
  for (auto& q : enumerate_ideals(s, caps))
    if (!q.is_zero()) nonzero.push_back(std::move(q));
  if (nonzero.empty()) return std::nullopt;
  auto least = intersect_all(s.order(), nonzero);
  if (least.is_zero()) return std::nullopt;
  return least;
}

inline ElementSet centralizer(const FiniteRng& s, const ElementSet& x, const Caps& caps = {}) {
  require_order(s.order(), caps.full, "centralizer");
  const auto gens = span_generators(s, x);
  std::vector<Index> out;
  for (std::size_t a = 0; a < s.order(); ++a) {
    const Index y = static_cast<Index>(a);
    bool commutes = true;
    for (std::size_t i = 0; i < gens.size() && commutes; ++i) commutes = s.mul(y, gens[i]) == s.mul(gens[i], y);
    if (commutes) out.push_back(y);
  }
  return ElementSet::from_unsorted(std::move(out));
}

inline ElementSet center(const FiniteRng& s, const Caps& caps = {}) {
  std::vector<Index> basis;
  for (std::size_t i = 0; i < s.rank(); ++i) basis.push_back(s.basis(i));
  return centralizer(s, ElementSet::from_unsorted(std::move(basis)), caps);
}

/// Additive and multiplicative on enough pairs to force it everywhere.
inline bool is_rng_hom(const FiniteRng& src, const FiniteRng& dst, const std::vector<Index>& f) {
  if (f.size() != src.order()) return false;
  for (std::size_t a = 0; a < src.order(); ++a)
    for (std::size_t i = 0; i < src.rank(); ++i)
      if (f[src.add(static_cast<Index>(a), src.basis(i))] != dst.add(f[a], f[src.basis(i)])) return false;
  for (std::size_t i = 0; i < src.rank(); ++i)
    for (std::size_t j = 0; j < src.rank(); ++j)
      if (f[src.basis_product(i, j)] != dst.mul(f[src.basis(i)], f[src.basis(j)])) return false;
  return f[0] == 0;
}

struct Quotient {
  std::shared_ptr<const FiniteRing> ring;
  std::vector<Index> project;          // ambient element -> quotient element
  std::vector<Index> representative;   // quotient element -> least ambient preimage
};

/// s/z as a ring on a decomposed carrier.  z must be an ideal.
inline Quotient quotient_ring(const FiniteRing& s, const ElementSet& z) {
  if (!is_ideal(s, z)) throw Error(Errc::precondition_violated, "quotient by a non-ideal");
  const auto basis = decompose(s, ElementSet::all(s.order()), z);
  const std::size_t m = basis.generators.size();
  std::vector<Index> products(m * m);
  for (std::size_t a = 0; a < m; ++a)
    for (std::size_t b = 0; b < m; ++b) products[a * m + b] = basis.local[s.mul(basis.generators[a], basis.generators[b])];
  Quotient q;
  FiniteRng rng(basis.carrier(), std::move(products));
  q.ring = std::make_shared<const FiniteRing>(std::move(rng), basis.local[s.one()]);
  q.project = basis.local;
  q.representative.assign(q.ring->order(), npos);
  for (std::size_t x = 0; x < s.order(); ++x)
    if (q.representative[q.project[x]] == npos) q.representative[q.project[x]] = static_cast<Index>(x);
  return q;
}

struct SubRng {
  FiniteRng rng;
  std::vector<Index> into;   // local element -> ambient element
  std::vector<Index> local;  // ambient element -> local element, npos outside
};

/// A subrng h of s presented on its own decomposed carrier.
inline SubRng induced_rng(const FiniteRng& s, const ElementSet& h) {
  if (!is_subrng(s, h)) throw Error(Errc::precondition_violated, "induced_rng: set is not a subrng");
  const auto basis = decompose(s, h, ElementSet::zero());
  const std::size_t m = basis.generators.size();
  std::vector<Index> products(m * m);
  for (std::size_t a = 0; a < m; ++a)
    for (std::size_t b = 0; b < m; ++b) products[a * m + b] = basis.local[s.mul(basis.generators[a], basis.generators[b])];
  SubRng out{FiniteRng(basis.carrier(), std::move(products)), {}, basis.local};
  out.into.assign(out.rng.order(), npos);
  for (auto x : h) out.into[basis.local[x]] = x;
  return out;
}

/// small -> big, additive, multiplicative, injective and unital.
struct EmbeddedSubring {
  std::shared_ptr<const FiniteRing> big;
  std::shared_ptr<const FiniteRing> small;
  std::vector<Index> map;

  ElementSet image() const { return ElementSet::from_unsorted(map); }
  std::vector<Index> basis_images() const {
    std::vector<Index> out;
    for (std::size_t i = 0; i < small->rank(); ++i) out.push_back(map[small->basis(i)]);
    return out;
  }
};

inline EmbeddedSubring make_embedding(std::shared_ptr<const FiniteRing> big, std::shared_ptr<const FiniteRing> small,
                                      const std::vector<Index>& basis_images) {
  if (basis_images.size() != small->rank()) throw Error(Errc::dimension_mismatch, "embedding needs one image per basis element");
  for (std::size_t i = 0; i < basis_images.size(); ++i) {
    if (basis_images[i] >= big->order()) throw Error(Errc::dimension_mismatch, "embedding image out of range");
    if (big->scale(small->carrier().factor(i), basis_images[i]) != 0)
      throw Error(Errc::not_a_hom, "image of e" + std::to_string(i) + " has incompatible additive order");
  }
  EmbeddedSubring e{big, small, linear_table(small->carrier(), *big, basis_images)};
  if (!is_rng_hom(*small, *big, e.map)) throw Error(Errc::not_a_hom, "embedding is not multiplicative");
  if (e.map[small->one()] != big->one()) throw Error(Errc::not_a_hom, "embedding does not preserve unity");
  if (!injective_table(e.map, big->order())) throw Error(Errc::not_a_hom, "embedding is not injective");
  return e;
}

struct RingHomQuery {
  bool unital = true;
  bool injective = false;
  bool bijective = false;
  std::vector<std::pair<Index, Index>> fixed;  // source element -> required image
  std::size_t limit = 1;
};

/// Ring homomorphisms src -> dst as full value tables, canonical order.
inline std::vector<std::vector<Index>> find_ring_homs(const FiniteRing& src, const FiniteRing& dst,
                                                      const RingHomQuery& query) {
  const std::size_t k = src.rank();
  std::vector<std::vector<Index>> candidates(k);
  for (std::size_t i = 0; i < k; ++i) candidates[i] = elements_killed_by(dst, src.carrier().factor(i));

  struct Rule {
    Index source;    // element whose image is evaluated
    Index expected;  // npos: compare with a product of two basis images
    std::size_t a = 0, b = 0;
  };
  std::vector<std::vector<Rule>> rules(k);
  auto depth_of = [&](Index x, std::size_t floor) {
    const long t = top_support(src.carrier(), x);
    return std::max<long>(static_cast<long>(floor), t);
  };
  for (std::size_t a = 0; a < k; ++a)
    for (std::size_t b = 0; b < k; ++b) {
      const Index p = src.basis_product(a, b);
      rules[static_cast<std::size_t>(depth_of(p, std::max(a, b)))].push_back({p, npos, a, b});
    }
  if (query.unital && k > 0) rules[static_cast<std::size_t>(depth_of(src.one(), 0))].push_back({src.one(), dst.one()});
  for (auto [x, y] : query.fixed) rules[static_cast<std::size_t>(depth_of(x, 0))].push_back({x, y});

  std::vector<std::vector<Index>> out;
  if (query.bijective && src.order() != dst.order()) return out;
  search_basis_images(
      candidates,
      [&](std::size_t depth, const std::vector<Index>& img) {
        for (const auto& r : rules[depth]) {
          const Index lhs = apply_linear(src.carrier(), dst, img, r.source);
          const Index rhs = r.expected == npos ? dst.mul(img[r.a], img[r.b]) : r.expected;
          if (lhs != rhs) return false;
        }
        return true;
      },
      [&](const std::vector<Index>& img) {
        auto table = linear_table(src.carrier(), dst, img);
        if (query.unital && k == 0 && dst.one() != 0) return true;
        if ((query.injective || query.bijective) && !injective_table(table, dst.order())) return true;
        out.push_back(std::move(table));
        return out.size() < query.limit;
      });
  return out;
}

/// The embedding small -> big.  Tries the coordinate-prefix map first (how
/// extensions built here lay out their carriers), then canonical search.
inline std::optional<EmbeddedSubring> find_embedding(std::shared_ptr<const FiniteRing> small,
                                                     std::shared_ptr<const FiniteRing> big) {
  if (big->rank() >= small->rank()) {
    std::vector<Index> prefix;
    bool fits = true;
    for (std::size_t i = 0; i < small->rank(); ++i) {
      fits = fits && small->carrier().factor(i) == big->carrier().factor(i);
      prefix.push_back(big->basis(i));
    }
    if (fits) {
      try {
        return make_embedding(big, small, prefix);
      } catch (const Error&) {
      }
    }
  }
  RingHomQuery q;
  q.injective = true;
  auto homs = find_ring_homs(*small, *big, q);
  if (homs.empty()) return std::nullopt;
  EmbeddedSubring e{big, small, std::move(homs.front())};
  return e;
}

/// image(small) is a proper subring and adjoining any outside element
/// generates all of big.  Elements of one coset of the image generate the
/// same subring, so one representative per coset is tried.
inline bool is_maximal_subring(const EmbeddedSubring& emb, const Caps& caps = {}) {
  const FiniteRing& big = *emb.big;
  require_order(big.order(), caps.closure, "is_maximal_subring");
  const auto image = emb.image();
  if (image.size() == big.order()) return false;
  auto seeds = emb.basis_images();
  seeds.push_back(big.one());
  seeds.push_back(0);
  std::vector<char> tried = image.mask(big.order());
  for (std::size_t s = 0; s < big.order(); ++s) {
    if (tried[s]) continue;
    seeds.back() = static_cast<Index>(s);
    if (close_span(big, seeds, ClosureMode::subrng, caps).size() != big.order()) return false;
    for (auto t : image) tried[big.add(static_cast<Index>(s), t)] = 1;
  }
  return true;
}

}  // namespace minext
