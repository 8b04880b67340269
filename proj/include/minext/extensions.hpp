#pragma once

/**
 * @file extensions.hpp
 * @brief Ideal extensions E(R,I), trivial extensions, and their ideal theory.
 *
 * E(R,I) lives on the carrier of R followed by the carrier of I, so the
 * element (r, i) has index r * |I| + i and both embeddings are coordinate
 * projections.
 */

#include <map>
#include <memory>
#include <optional>
#include <set>
#include <vector>

#include "minext/bimodule.hpp"
#include "minext/substructure.hpp"

namespace minext {

struct IdealExtension {
  std::shared_ptr<const FiniteRing> ring;
  EmbeddedSubring base_embedding;
  ElementSet ideal;  // 0 + I
  RRng source;
  bool trivial = false;

  std::size_t ideal_order() const { return source.order(); }
  Index pair(Index r, Index i) const { return static_cast<Index>(r * ideal_order() + i); }
  Index base_part(Index e) const { return static_cast<Index>(e / ideal_order()); }
  Index ideal_part(Index e) const { return static_cast<Index>(e % ideal_order()); }
  const FiniteRing& base() const { return source.base(); }
};

inline IdealExtension ideal_extension(const RRng& m, const Caps& caps = {}) {
  const FiniteRing& r = m.base();
  const FiniteRng& i = m.rng();
  const CarrierGroup carrier = concat(r.carrier(), i.carrier());
  require_order(carrier.order(), caps.full, "ideal_extension");
  const std::size_t kr = r.rank(), ki = i.rank(), k = kr + ki, ni = i.order();
  auto pair = [&](Index a, Index b) { return static_cast<Index>(a * ni + b); };
  std::vector<Index> sc(k * k);
  for (std::size_t a = 0; a < k; ++a)
    for (std::size_t b = 0; b < k; ++b) {
      Index v;
      if (a < kr && b < kr) v = pair(r.basis_product(a, b), 0);
      else if (a < kr) v = pair(0, m.lact(r.basis(a), i.basis(b - kr)));
      else if (b < kr) v = pair(0, m.ract(i.basis(a - kr), r.basis(b)));
      else v = pair(0, i.basis_product(a - kr, b - kr));
      sc[a * k + b] = v;
    }
  IdealExtension x;
  x.source = m;
  x.ring = std::make_shared<const FiniteRing>(FiniteRng(carrier, std::move(sc)), pair(r.one(), 0));
  std::vector<Index> images;
  for (std::size_t a = 0; a < kr; ++a) images.push_back(x.ring->basis(a));
  x.base_embedding = make_embedding(x.ring, m.base_ptr(), images);
  std::vector<Index> ideal(ni);
  for (std::size_t j = 0; j < ni; ++j) ideal[j] = static_cast<Index>(j);
  x.ideal = ElementSet::from_unsorted(std::move(ideal));
  x.trivial = m.zero_product();
  return x;
}

/// R with a bimodule M of zero internal product.
inline IdealExtension trivial_extension(const RRng& m, const Caps& caps = {}) {
  if (!m.zero_product()) throw Error(Errc::nonzero_square, "trivial extension needs M^2 = 0");
  return ideal_extension(m, caps);
}

/// Subrings of big containing the image of small, in canonical order.
inline std::vector<ElementSet> subrings_containing(const EmbeddedSubring& emb, const Caps& caps = {}) {
  const FiniteRing& big = *emb.big;
  auto base_seeds = emb.basis_images();
  base_seeds.push_back(big.one());
  const ElementSet bottom = close(big, base_seeds, ClosureMode::subrng, caps);
  std::set<ElementSet> found{bottom};
  std::vector<char> tried = bottom.mask(big.order());
  for (std::size_t s = 0; s < big.order(); ++s) {
    if (tried[s]) continue;
    auto seeds = base_seeds;
    seeds.push_back(static_cast<Index>(s));
    found.insert(close(big, seeds, ClosureMode::subrng, caps));
    for (auto t : bottom) tried[big.add(static_cast<Index>(s), t)] = 1;
  }
  std::vector<ElementSet> list(found.begin(), found.end());
  for (std::size_t a = 0; a < list.size(); ++a)
    for (std::size_t b = 0; b < a; ++b) {
      auto seeds = span_generators(big, list[a]);
      const auto more = span_generators(big, list[b]);
      seeds.insert(seeds.end(), more.begin(), more.end());
      auto join = close(big, seeds, ClosureMode::subrng, caps);
      if (found.insert(join).second) list.push_back(std::move(join));
    }
  return {found.begin(), found.end()};
}

struct SubringCorrespondence {
  std::vector<std::pair<ElementSet, ElementSet>> pairs;  // subring of E over R, R-subrng of I
  bool bijective = false;
  bool order_preserving = false;
};

/// Pairs every subring of E over R with its projection to I, and checks the
/// pairing against the independently enumerated R-subrngs of I.
inline SubringCorrespondence subrings_over(const IdealExtension& x, const Caps& caps = {}) {
  SubringCorrespondence c;
  const auto over = subrings_containing(x.base_embedding, caps);
  const auto rsubs = rsubrngs(x.source, caps);
  std::set<ElementSet> projected;
  for (const auto& s : over) {
    std::vector<Index> proj;
    for (auto e : s) proj.push_back(x.ideal_part(e));
    auto k = ElementSet::from_unsorted(std::move(proj));
    projected.insert(k);
    c.pairs.emplace_back(s, std::move(k));
  }
  // E(R,K) built from each R-subrng K must be one of the subrings found
  std::set<ElementSet> built;
  for (const auto& k : rsubs) {
    std::vector<Index> members;
    for (std::size_t r = 0; r < x.base().order(); ++r)
      for (auto i : k) members.push_back(x.pair(static_cast<Index>(r), i));
    built.insert(ElementSet::from_unsorted(std::move(members)));
  }
  const std::set<ElementSet> over_set(over.begin(), over.end());
  c.bijective = projected.size() == over.size() && built == over_set &&
                std::set<ElementSet>(rsubs.begin(), rsubs.end()) == projected;
  c.order_preserving = true;
  for (const auto& [s1, k1] : c.pairs)
    for (const auto& [s2, k2] : c.pairs)
      if (s1.subset_of(s2) != k1.subset_of(k2)) c.order_preserving = false;
  return c;
}

/// Whether `values` (a map I -> target) is an R-homomorphism.
inline bool is_rhom(const RRng& source, const RRng& target, const std::vector<Index>& values, bool multiplicative = true) {
  const FiniteRng& i = source.rng();
  const FiniteRng& j = target.rng();
  const FiniteRing& r = source.base();
  if (values.size() != i.order()) return false;
  std::vector<Index> img;
  for (std::size_t q = 0; q < i.rank(); ++q) img.push_back(values[i.basis(q)]);
  for (std::size_t q = 0; q < i.rank(); ++q)
    if (j.scale(i.carrier().factor(q), img[q]) != 0) return false;
  if (linear_table(i.carrier(), j, img) != values) return false;
  for (std::size_t q = 0; q < i.rank(); ++q)
    for (std::size_t a = 0; a < r.rank(); ++a) {
      if (values[source.lact(r.basis(a), i.basis(q))] != target.lact(r.basis(a), img[q])) return false;
      if (values[source.ract(i.basis(q), r.basis(a))] != target.ract(img[q], r.basis(a))) return false;
    }
  if (multiplicative)
    for (std::size_t p = 0; p < i.rank(); ++p)
      for (std::size_t q = 0; q < i.rank(); ++q)
        if (values[i.basis_product(p, q)] != j.mul(img[p], img[q])) return false;
  return true;
}

/// {(phi(i), -i)} for phi in Hom_R(I, R), given as a table I -> R.
inline ElementSet i_phi(const IdealExtension& x, const std::vector<Index>& phi) {
  const RRng target = regular_rrng(x.source.base_ptr());
  if (!is_rhom(x.source, target, phi)) throw Error(Errc::not_a_hom, "i_phi: map is not an R-homomorphism I -> R");
  std::vector<Index> members;
  for (std::size_t i = 0; i < x.ideal_order(); ++i)
    members.push_back(x.pair(phi[i], x.source.rng().neg(static_cast<Index>(i))));
  return ElementSet::from_unsorted(std::move(members));
}

enum class IdealKind { type1, type2, type3 };

struct IdealRecord {
  ElementSet members;
  IdealKind kind;
  ElementSet a;                 // type1/type2: the ideal A of R
  ElementSet z;                 // type3: the ideal Z of R
  std::vector<Index> phi;       // type3: table I -> R/Z on the carrier of quotient_rrng(R, Z)
};

namespace detail {

inline void require_minimal_nonsquare(const IdealExtension& x, const Caps& caps) {
  if (x.source.order() == 1) throw Error(Errc::precondition_violated, "I = 0");
  if (x.source.zero_product()) throw Error(Errc::precondition_violated, "I^2 = 0");
  if (!is_minimal_rrng(x.source, caps)) throw Error(Errc::precondition_violated, "I is not a minimal R-rng");
}

}  // namespace detail

/// Assigns every ideal of E(R,I) its family.  I must be minimal with I^2 != 0.
inline std::vector<IdealRecord> classify_ideals(const IdealExtension& x, const Caps& caps = {}) {
  detail::require_minimal_nonsquare(x, caps);
  const FiniteRing& r = x.base();
  const FiniteRng& i = x.source.rng();
  std::vector<IdealRecord> out;
  for (auto& k : enumerate_ideals(*x.ring, caps)) {
    IdealRecord rec{k, IdealKind::type1, {}, {}, {}};
    bool inside_base = true, contains_i = true;
    for (auto e : k) inside_base = inside_base && x.ideal_part(e) == 0;
    for (auto e : x.ideal) contains_i = contains_i && k.contains(e);
    if (inside_base || contains_i) {
      std::vector<Index> a;
      for (auto e : k) a.push_back(x.base_part(e));
      rec.a = ElementSet::from_unsorted(std::move(a));
      rec.kind = inside_base ? IdealKind::type1 : IdealKind::type2;
    } else {
      rec.kind = IdealKind::type3;
      std::vector<Index> z;
      for (auto e : k)
        if (x.ideal_part(e) == 0) z.push_back(x.base_part(e));
      rec.z = ElementSet::from_unsorted(std::move(z));
      const Quotient q = quotient_ring(r, rec.z);
      rec.phi.assign(i.order(), npos);
      for (auto e : k) rec.phi[i.neg(x.ideal_part(e))] = q.project[x.base_part(e)];
    }
    out.push_back(std::move(rec));
  }
  return out;
}

/// The three families built from R-side data alone: A inside ann_R(I),
/// arbitrary A, and (Z, phi) with Z inside ann_R(I) and phi nonzero.
inline std::vector<std::pair<IdealKind, ElementSet>> describe_ideal_families(const IdealExtension& x,
                                                                           const Caps& caps = {}) {
  detail::require_minimal_nonsquare(x, caps);
  const auto& rptr = x.source.base_ptr();
  const FiniteRing& r = *rptr;
  const std::size_t ni = x.ideal_order();
  const ElementSet ann = annihilators(x.source).two_sided;
  std::vector<std::pair<IdealKind, ElementSet>> out;
  const auto ideals_r = enumerate_ideals(r, caps);
  for (const auto& a : ideals_r) {
    if (a.subset_of(ann)) {
      std::vector<Index> m;
      for (auto v : a) m.push_back(x.pair(v, 0));
      out.emplace_back(IdealKind::type1, ElementSet::from_unsorted(std::move(m)));
    }
    std::vector<Index> m;
    for (auto v : a)
      for (std::size_t j = 0; j < ni; ++j) m.push_back(x.pair(v, static_cast<Index>(j)));
    out.emplace_back(IdealKind::type2, ElementSet::from_unsorted(std::move(m)));
  }
  for (const auto& z : ideals_r) {
    if (!z.subset_of(ann)) continue;
    const Quotient q = quotient_ring(r, z);
    const RRng target = quotient_rrng(rptr, z);
    for (const auto& phi : enumerate_rhoms(x.source, target, {}, caps)) {
      if (phi.is_zero()) continue;
      std::vector<Index> m;
      for (std::size_t a = 0; a < r.order(); ++a)
        for (std::size_t j = 0; j < ni; ++j)
          if (q.project[a] == phi.values[j])
            m.push_back(x.pair(static_cast<Index>(a), x.source.rng().neg(static_cast<Index>(j))));
      out.emplace_back(IdealKind::type3, ElementSet::from_unsorted(std::move(m)));
    }
  }
  return out;
}

/// big is generated as a left module over the image of small by the
/// centralizer of that image.
inline bool is_central_extension(const EmbeddedSubring& emb, const Caps& caps = {}) {
  const FiniteRing& big = *emb.big;
  require_order(big.order(), caps.closure, "is_central_extension");
  const ElementSet c = centralizer(big, emb.image(), caps);
  const auto seeds = span_generators(big, c);
  const auto acting = emb.basis_images();
  const Span span = close_with(big, seeds, [&](Index g, std::span<const Index>, auto&& emit) {
    for (auto s : acting) emit(big.mul(s, g));
  });
  return span.size() == big.order();
}

/// C_I(R): elements of I commuting with the action of R.
inline ElementSet centralizer_in(const RRng& m) {
  std::vector<Index> out;
  for (std::size_t x = 0; x < m.order(); ++x) {
    bool ok = true;
    for (std::size_t a = 0; a < m.base().rank() && ok; ++a)
      ok = m.lact(m.base().basis(a), static_cast<Index>(x)) == m.ract(static_cast<Index>(x), m.base().basis(a));
    if (ok) out.push_back(static_cast<Index>(x));
  }
  return ElementSet::from_unsorted(std::move(out));
}

struct BrauerReport {
  bool meets_center = false;         // I and Z(R) share a nonzero element
  bool has_central_idempotent = false;
  bool direct_summand = false;       // R = I (+) J for an ideal J
  std::optional<Index> idempotent;
};

inline BrauerReport brauer_report(const FiniteRing& r, const ElementSet& i, const Caps& caps = {}) {
  if (!is_ideal(r, i) || i.is_zero()) throw Error(Errc::precondition_violated, "brauer_report: not a nonzero ideal");
  const auto ideals = enumerate_ideals(r, caps);
  for (const auto& j : ideals)
    if (!j.is_zero() && j.subset_of(i) && j.size() < i.size())
      throw Error(Errc::precondition_violated, "brauer_report: ideal is not minimal");
  const auto gens = span_generators(r, i);
  bool square_zero = true;
  for (auto a : gens)
    for (auto b : gens) square_zero = square_zero && r.mul(a, b) == 0;
  if (square_zero) throw Error(Errc::precondition_violated, "brauer_report: I^2 = 0");

  BrauerReport rep;
  const ElementSet z = center(r, caps);
  rep.meets_center = !intersect(i, z).is_zero();
  for (auto e : i) {
    if (e != 0 && z.contains(e) && r.mul(e, e) == e) {
      rep.has_central_idempotent = true;
      rep.idempotent = e;
      break;
    }
  }
  for (const auto& j : ideals)
    if (intersect(i, j).is_zero() && i.size() * j.size() == r.order()) rep.direct_summand = true;
  return rep;
}

struct RecoveredExtension {
  RRng rrng;
  IdealExtension extension;
  std::vector<Index> iso;  // big -> extension.ring, fixing R
};

/// Given S over R and a nonzero ideal J of S with R + J = S directly,
/// presents J as an R-rng and S as E(R, J).
inline RecoveredExtension recover_ideal_extension(const EmbeddedSubring& emb, const ElementSet& j,
                                                  const Caps& caps = {}) {
  const FiniteRing& big = *emb.big;
  const FiniteRing& small = *emb.small;
  if (!is_ideal(big, j)) throw Error(Errc::no_such_ideal, "J is not an ideal");
  if (j.is_zero()) throw Error(Errc::no_such_ideal, "J is zero");
  if (!intersect(j, emb.image()).is_zero()) throw Error(Errc::no_such_ideal, "J meets R nontrivially");
  if (j.size() * small.order() != big.order()) throw Error(Errc::no_such_ideal, "R + J is not all of S");

  const SubRng sub = induced_rng(big, j);
  const std::size_t kr = small.rank(), kj = sub.rng.rank();
  std::vector<Index> left(kr * kj), right(kj * kr);
  for (std::size_t a = 0; a < kr; ++a)
    for (std::size_t b = 0; b < kj; ++b) {
      const Index ra = emb.map[small.basis(a)];
      const Index g = sub.into[sub.rng.basis(b)];
      left[a * kj + b] = sub.local[big.mul(ra, g)];
      right[b * kr + a] = sub.local[big.mul(g, ra)];
    }
  RRng m = make_rrng(emb.small, sub.rng, std::move(left), std::move(right));
  IdealExtension x = ideal_extension(m, caps);
  std::vector<Index> iso(big.order(), npos);
  for (std::size_t r = 0; r < small.order(); ++r)
    for (auto v : j) iso[big.add(emb.map[r], v)] = x.pair(static_cast<Index>(r), sub.local[v]);
  if (!is_rng_hom(big, *x.ring, iso) || !injective_table(iso, x.ring->order()))
    throw std::logic_error("recover_ideal_extension: decomposition is not a ring isomorphism");
  return {std::move(m), std::move(x), std::move(iso)};
}

/// A ring isomorphism a.big -> b.big carrying a's copy of R onto b's copy,
/// compatibly with the two embeddings.
inline std::optional<std::vector<Index>> find_r_isomorphism(const EmbeddedSubring& a, const EmbeddedSubring& b) {
  if (a.big->order() != b.big->order() || a.small->order() != b.small->order()) return std::nullopt;
  RingHomQuery q;
  q.bijective = true;
  for (std::size_t i = 0; i < a.small->rank(); ++i)
    q.fixed.emplace_back(a.map[a.small->basis(i)], b.map[b.small->basis(i)]);
  auto homs = find_ring_homs(*a.big, *b.big, q);
  if (homs.empty()) return std::nullopt;
  return std::move(homs.front());
}

}  // namespace minext
