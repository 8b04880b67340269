#pragma once

/**
 * @file classify.hpp
 * @brief Five-way classification of minimal extensions of prime rings.
 *
 *   P   prime, every nonzero ideal meets R
 *   PI  prime ideal extension E(R,I)
 *   SR  semiprime, not prime, ann_R(I) != 0 and Hom_R(I, R/ann) = 0
 *   SI  semiprime, not prime, I a minimal ideal of a prime quotient of R
 *   N   not semiprime, R with a square-zero simple bimodule adjoined
 */

#include <memory>
#include <optional>
#include <numeric>
#include <random>
#include <string>
#include <vector>

#include "minext/bimodule.hpp"
#include "minext/catalog.hpp"
#include "minext/extensions.hpp"
#include "minext/substructure.hpp"

namespace minext {

enum class ExtTag { P, PI, SR, SI, N };

inline const char* tag_name(ExtTag t) {
  switch (t) {
    case ExtTag::P: return "P";
    case ExtTag::PI: return "PI";
    case ExtTag::SR: return "SR";
    case ExtTag::SI: return "SI";
    case ExtTag::N: return "N";
  }
  return "?";
}

struct ExtensionType {
  ExtTag tag = ExtTag::P;
  std::optional<RRng> witness;          // I for PI, SR, SI; M for N
  std::optional<ElementSet> prime_ideal;  // P = ann_R(I) for SI
  std::optional<ElementSet> ideal;      // the ideal of big the witness was read from
  std::vector<Index> iso;               // big -> E(R, witness)
};

/// The decision tree once the ideal-extension data is known.  `type` is
/// empty when no nonzero ideal of the extension meets R trivially.
inline ExtTag decide_tag(std::optional<RrngType> type, bool ann_zero) {
  if (!type) return ExtTag::P;
  switch (*type) {
    case RrngType::T1: return ExtTag::N;
    case RrngType::T3: return ExtTag::SI;
    case RrngType::T2: return ann_zero ? ExtTag::PI : ExtTag::SR;
  }
  return ExtTag::P;
}

/// Canonically least nonzero ideal of big meeting the image of small in 0.
inline std::optional<ElementSet> least_trivial_ideal(const EmbeddedSubring& emb, const Caps& caps = {}) {
  const auto image = emb.image();
  for (auto& j : enumerate_ideals(*emb.big, caps))
    if (!j.is_zero() && intersect(j, image).is_zero()) return std::move(j);
  return std::nullopt;
}

inline ExtensionType classify_minimal_extension(const EmbeddedSubring& emb, const Caps& caps = {}) {
  if (!is_prime(*emb.small)) throw Error(Errc::not_prime_base, "the base ring is not prime");
  if (!is_maximal_subring(emb, caps)) throw Error(Errc::not_minimal_extension, "the base is not a maximal subring");
  ExtensionType out;
  auto j = least_trivial_ideal(emb, caps);
  if (!j) return out;
  auto rec = recover_ideal_extension(emb, *j, caps);
  const auto ann = annihilators(rec.rrng).two_sided;
  out.tag = decide_tag(rrng_type(rec.rrng, caps), ann.is_zero());
  if (out.tag == ExtTag::SI) out.prime_ideal = ann;
  out.ideal = std::move(*j);
  out.iso = std::move(rec.iso);
  out.witness = std::move(rec.rrng);
  return out;
}

struct CentralClassification {
  ExtTag tag = ExtTag::P;
  std::optional<ElementSet> maximal_ideal;   // M for SI and N
  std::shared_ptr<const EmbeddedSubring> model;  // R x R/M or R with R/M adjoined
  std::vector<Index> iso;                    // big -> model.big, fixing R
};

/// Central minimal extensions of a prime ring: P, R x R/M, or R with the
/// bimodule R/M adjoined, M maximal.  The returned isomorphism is checked.
inline CentralClassification classify_central(const EmbeddedSubring& emb, const Caps& caps = {}) {
  if (!is_central_extension(emb, caps)) throw Error(Errc::not_central, "the extension is not central");
  const ExtensionType t = classify_minimal_extension(emb, caps);
  CentralClassification c;
  c.tag = t.tag;
  if (t.tag == ExtTag::P) return c;
  if (t.tag != ExtTag::SI && t.tag != ExtTag::N)
    throw std::logic_error("classify_central: central extension of type " + std::string(tag_name(t.tag)));

  const auto& rptr = emb.small;
  const FiniteRing& r = *rptr;
  const RRng& m = *t.witness;
  const ElementSet maximal = annihilators(m).two_sided;
  c.maximal_ideal = maximal;
  const Quotient q = quotient_ring(r, maximal);
  const std::size_t ni = m.order();

  // psi: I -> R/M, an R-isomorphism (SI) or bimodule isomorphism (N)
  const RRng target = quotient_rrng(rptr, maximal, t.tag == ExtTag::N);
  HomOptions o;
  o.bijective_only = true;
  o.limit = 1;
  o.multiplicative = t.tag == ExtTag::SI;
  const auto psi = enumerate_rhoms(m, target, o, caps);
  if (psi.empty()) throw std::logic_error("classify_central: I is not isomorphic to R/ann_R(I)");

  std::vector<Index> from_e(static_cast<std::size_t>(r.order() * ni));
  if (t.tag == ExtTag::SI) {
    // (r, i) -> (r, r + psi(i)) in R x R/M, R sitting inside diagonally
    auto big = detail::product_ring({rptr, q.ring});
    std::vector<Index> images;
    for (std::size_t a = 0; a < r.rank(); ++a)
      images.push_back(static_cast<Index>(r.basis(a) * q.ring->order() + q.project[r.basis(a)]));
    c.model = std::make_shared<const EmbeddedSubring>(make_embedding(big, rptr, images));
    for (std::size_t x = 0; x < r.order(); ++x)
      for (std::size_t i = 0; i < ni; ++i)
        from_e[x * ni + i] =
            static_cast<Index>(x * q.ring->order() + q.ring->add(q.project[x], psi.front().values[i]));
  } else {
    const IdealExtension model = trivial_extension(target, caps);
    c.model = std::make_shared<const EmbeddedSubring>(model.base_embedding);
    for (std::size_t x = 0; x < r.order(); ++x)
      for (std::size_t i = 0; i < ni; ++i)
        from_e[x * ni + i] = model.pair(static_cast<Index>(x), psi.front().values[i]);
  }
  c.iso.resize(emb.big->order());
  for (std::size_t s = 0; s < c.iso.size(); ++s) c.iso[s] = from_e[t.iso[s]];

  const auto& model_big = *c.model->big;
  bool ok = is_rng_hom(*emb.big, model_big, c.iso) && injective_table(c.iso, model_big.order());
  for (std::size_t x = 0; x < r.order() && ok; ++x) ok = c.iso[emb.map[x]] == c.model->map[x];
  if (!ok) throw std::logic_error("classify_central: model isomorphism failed verification");
  return c;
}

/// The same extension on a different carrier basis: b'_j = b_j plus a random
/// combination of earlier basis elements of compatible order.  The copy of
/// R is carried along, so the result is R-isomorphic to the input.
inline EmbeddedSubring shuffled_presentation(const EmbeddedSubring& emb, std::uint32_t seed) {
  const FiniteRing& big = *emb.big;
  const CarrierGroup& g = big.carrier();
  const std::size_t k = g.rank();
  std::mt19937 rng(seed);
  std::vector<Index> new_basis(k);
  for (std::size_t j = 0; j < k; ++j) {
    Index b = g.basis(j);
    for (std::size_t i = 0; i < j; ++i) {
      const std::uint32_t step = g.factor(i) / std::gcd(g.factor(i), g.factor(j));
      const std::uint32_t choices = g.factor(i) / step;
      const std::uint32_t c = std::uniform_int_distribution<std::uint32_t>(0, choices - 1)(rng) * step;
      b = g.add(b, g.scale(c, g.basis(i)));
    }
    new_basis[j] = b;
  }
  const auto to_old = linear_table(g, big, new_basis);
  std::vector<Index> to_new(big.order(), npos);
  for (std::size_t x = 0; x < to_old.size(); ++x) to_new[to_old[x]] = static_cast<Index>(x);
  std::vector<Index> sc(k * k);
  for (std::size_t a = 0; a < k; ++a)
    for (std::size_t b = 0; b < k; ++b) sc[a * k + b] = to_new[big.mul(new_basis[a], new_basis[b])];
  auto shuffled = std::make_shared<const FiniteRing>(FiniteRng(g, std::move(sc)), to_new[big.one()]);
  std::vector<Index> images;
  for (std::size_t a = 0; a < emb.small->rank(); ++a) images.push_back(to_new[emb.map[emb.small->basis(a)]]);
  return make_embedding(shuffled, emb.small, images);
}

}  // namespace minext
