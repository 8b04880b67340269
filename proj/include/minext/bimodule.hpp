#pragma once

/**
 * @file bimodule.hpp
 * @brief R-rngs: rngs with a compatible unital (R,R)-bimodule structure.
 */

#include <memory>
#include <set>
#include <string>
#include <vector>

#include "minext/abelian.hpp"
#include "minext/core.hpp"
#include "minext/element_set.hpp"
#include "minext/search.hpp"
#include "minext/substructure.hpp"

namespace minext {

class RRng {
 public:
  RRng() = default;

  /// `left` is the row-major k_R x k_I table r_a * x_j, `right` the
  /// k_I x k_R table x_j * r_a.  Only shapes and torsion are checked here;
  /// validate_rrng checks the axioms.
  RRng(std::shared_ptr<const FiniteRing> base, FiniteRng rng, std::vector<Index> left, std::vector<Index> right)
      : base_(std::move(base)), rng_(std::move(rng)),
        left_(base_->carrier(), rng_.carrier(), rng_.carrier(), std::move(left)),
        right_(rng_.carrier(), base_->carrier(), rng_.carrier(), std::move(right)) {}

  const FiniteRing& base() const { return *base_; }
  const std::shared_ptr<const FiniteRing>& base_ptr() const { return base_; }
  const FiniteRng& rng() const { return rng_; }
  std::size_t order() const { return rng_.order(); }
  std::size_t rank() const { return rng_.rank(); }

  Index lact(Index r, Index x) const { return left_(r, x); }
  Index ract(Index x, Index r) const { return right_(x, r); }
  const BilinearTable& left_table() const { return left_; }
  const BilinearTable& right_table() const { return right_; }

  bool zero_product() const { return rng_.square_zero(); }

 private:
  std::shared_ptr<const FiniteRing> base_;
  FiniteRng rng_;
  BilinearTable left_, right_;
};

namespace detail {

inline std::string tuple_str(std::initializer_list<std::pair<char, std::size_t>> parts) {
  std::string s = "(";
  bool first = true;
  for (auto [tag, i] : parts) {
    if (!first) s += ", ";
    first = false;
    s += tag;
    s += std::to_string(i);
  }
  return s + ")";
}

}  // namespace detail

/// Checks every axiom on basis tuples and throws axiom_violation naming the
/// first failure.  Returns the argument unchanged.
inline const RRng& validate_rrng(const RRng& m) {
  const FiniteRing& r = m.base();
  const FiniteRng& i = m.rng();
  const std::size_t kr = r.rank(), ki = i.rank();
  auto fail = [](const char* axiom, const std::string& where) {
    throw Error(Errc::axiom_violation, std::string(axiom) + " at " + where);
  };
  for (std::size_t j = 0; j < ki; ++j) {
    const Index x = i.basis(j);
    if (m.lact(r.one(), x) != x) fail("unital-left", detail::tuple_str({{'x', j}}));
    if (m.ract(x, r.one()) != x) fail("unital-right", detail::tuple_str({{'x', j}}));
  }
  for (std::size_t a = 0; a < kr; ++a) {
    const Index ra = r.basis(a);
    for (std::size_t b = 0; b < kr; ++b) {
      const Index rb = r.basis(b), rab = r.basis_product(a, b);
      for (std::size_t j = 0; j < ki; ++j) {
        const Index x = i.basis(j);
        if (m.lact(rab, x) != m.lact(ra, m.lact(rb, x)))
          fail("left-assoc", detail::tuple_str({{'r', a}, {'r', b}, {'x', j}}));
        if (m.ract(x, rab) != m.ract(m.ract(x, ra), rb))
          fail("right-assoc", detail::tuple_str({{'x', j}, {'r', a}, {'r', b}}));
        if (m.ract(m.lact(ra, x), rb) != m.lact(ra, m.ract(x, rb)))
          fail("bimodule", detail::tuple_str({{'r', a}, {'x', j}, {'r', b}}));
      }
    }
    for (std::size_t p = 0; p < ki; ++p) {
      const Index x = i.basis(p);
      for (std::size_t q = 0; q < ki; ++q) {
        const Index y = i.basis(q), xy = i.basis_product(p, q);
        if (m.lact(ra, xy) != i.mul(m.lact(ra, x), y))
          fail("compat-left", detail::tuple_str({{'r', a}, {'x', p}, {'x', q}}));
        if (i.mul(x, m.lact(ra, y)) != i.mul(m.ract(x, ra), y))
          fail("compat-middle", detail::tuple_str({{'x', p}, {'r', a}, {'x', q}}));
        if (m.ract(xy, ra) != i.mul(x, m.ract(y, ra)))
          fail("compat-right", detail::tuple_str({{'x', p}, {'x', q}, {'r', a}}));
      }
    }
  }
  return m;
}

inline RRng make_rrng(std::shared_ptr<const FiniteRing> base, FiniteRng rng, std::vector<Index> left,
                      std::vector<Index> right) {
  RRng m(std::move(base), std::move(rng), std::move(left), std::move(right));
  validate_rrng(m);
  return m;
}

/// R acting on itself by multiplication.
inline RRng regular_rrng(std::shared_ptr<const FiniteRing> r) {
  const auto sc = r->structure_constants();
  FiniteRng rng = *r;
  return RRng(std::move(r), std::move(rng), sc, sc);
}

/// R/Z as an R-rng, acting through the quotient map.  With `zero_product`
/// the internal product is replaced by zero, giving the bimodule R/Z.
inline RRng quotient_rrng(std::shared_ptr<const FiniteRing> r, const ElementSet& z, bool zero_product = false) {
  const Quotient q = quotient_ring(*r, z);
  const std::size_t kr = r->rank(), kq = q.ring->rank();
  std::vector<Index> left(kr * kq), right(kq * kr);
  for (std::size_t a = 0; a < kr; ++a)
    for (std::size_t b = 0; b < kq; ++b) {
      const Index rep = q.representative[q.ring->basis(b)];
      left[a * kq + b] = q.project[r->mul(r->basis(a), rep)];
      right[b * kr + a] = q.project[r->mul(rep, r->basis(a))];
    }
  std::vector<Index> products = q.ring->structure_constants();
  if (zero_product) std::fill(products.begin(), products.end(), 0);
  FiniteRng rng(q.ring->carrier(), std::move(products));
  return RRng(std::move(r), std::move(rng), std::move(left), std::move(right));
}

struct InducedRRng {
  RRng rrng;
  std::vector<Index> into;  // local element -> element of the ambient R-rng
};

/// An R-subrng K of m, presented on its own carrier.
inline InducedRRng induced_rrng(const RRng& m, const ElementSet& k) {
  const SubRng sub = induced_rng(m.rng(), k);
  const std::size_t kr = m.base().rank(), kk = sub.rng.rank();
  std::vector<Index> left(kr * kk), right(kk * kr);
  for (std::size_t a = 0; a < kr; ++a)
    for (std::size_t b = 0; b < kk; ++b) {
      const Index g = sub.into[sub.rng.basis(b)];
      const Index l = sub.local[m.lact(m.base().basis(a), g)];
      const Index rr = sub.local[m.ract(g, m.base().basis(a))];
      if (l == npos || rr == npos) throw Error(Errc::precondition_violated, "induced_rrng: set is not R-stable");
      left[a * kk + b] = l;
      right[b * kr + a] = rr;
    }
  return {RRng(m.base_ptr(), sub.rng, std::move(left), std::move(right)), sub.into};
}

struct AnnihilatorTriple {
  ElementSet right;      // {r : I r = 0}
  ElementSet left;       // {r : r I = 0}
  ElementSet two_sided;
};

inline AnnihilatorTriple annihilators(const RRng& m) {
  const FiniteRing& r = m.base();
  std::vector<Index> right, left;
  for (std::size_t s = 0; s < r.order(); ++s) {
    const Index x = static_cast<Index>(s);
    bool kills_right = true, kills_left = true;
    for (std::size_t j = 0; j < m.rank(); ++j) {
      kills_right = kills_right && m.ract(m.rng().basis(j), x) == 0;
      kills_left = kills_left && m.lact(x, m.rng().basis(j)) == 0;
    }
    if (kills_right) right.push_back(x);
    if (kills_left) left.push_back(x);
  }
  AnnihilatorTriple t{ElementSet::from_unsorted(right), ElementSet::from_unsorted(left), {}};
  t.two_sided = intersect(t.right, t.left);
  return t;
}

/// Smallest R-subrng containing the seeds.
inline Span rsub_close(const RRng& m, std::span<const Index> seed, const Caps& caps = {}) {
  require_order(m.order(), caps.closure, "rsub_close");
  const FiniteRng& i = m.rng();
  const FiniteRing& r = m.base();
  return close_with(i, seed, [&](Index g, std::span<const Index> done, auto&& emit) {
    for (auto h : done) {
      emit(i.mul(g, h));
      emit(i.mul(h, g));
    }
    for (std::size_t a = 0; a < r.rank(); ++a) {
      emit(m.lact(r.basis(a), g));
      emit(m.ract(g, r.basis(a)));
    }
  });
}

inline bool is_rsubrng(const RRng& m, const ElementSet& k) {
  if (!is_subrng(m.rng(), k)) return false;
  for (auto g : span_generators(m.rng(), k))
    for (std::size_t a = 0; a < m.base().rank(); ++a)
      if (!k.contains(m.lact(m.base().basis(a), g)) || !k.contains(m.ract(g, m.base().basis(a)))) return false;
  return true;
}

inline bool is_minimal_rrng(const RRng& m, const Caps& caps = {}) {
  if (m.order() == 1) throw Error(Errc::zero_rng, "a minimal R-rng must be nonzero");
  for (std::size_t x = 1; x < m.order(); ++x) {
    const Index seed = static_cast<Index>(x);
    if (rsub_close(m, std::span<const Index>(&seed, 1), caps).size() != m.order()) return false;
  }
  return true;
}

/// Every R-subrng, in canonical order.
inline std::vector<ElementSet> rsubrngs(const RRng& m, const Caps& caps = {}) {
  std::set<ElementSet> found;
  for (std::size_t x = 0; x < m.order(); ++x) {
    const Index seed = static_cast<Index>(x);
    found.insert(rsub_close(m, std::span<const Index>(&seed, 1), caps).set());
  }
  std::vector<ElementSet> list(found.begin(), found.end());
  for (std::size_t a = 0; a < list.size(); ++a)
    for (std::size_t b = 0; b < a; ++b) {
      auto seeds = span_generators(m.rng(), list[a]);
      const auto more = span_generators(m.rng(), list[b]);
      seeds.insert(seeds.end(), more.begin(), more.end());
      auto join = rsub_close(m, seeds, caps).set();
      if (found.insert(join).second) list.push_back(std::move(join));
    }
  return {found.begin(), found.end()};
}

struct HomOptions {
  bool multiplicative = true;   // false: bimodule homomorphisms
  bool bijective_only = false;
  std::size_t limit = static_cast<std::size_t>(-1);
};

struct RHom {
  std::vector<Index> basis_images;
  std::vector<Index> values;  // full table, source element -> target element

  bool is_zero() const {
    for (auto v : values)
      if (v) return false;
    return true;
  }
  bool injective(std::size_t target_order) const { return injective_table(values, target_order); }
};

inline bool same_base(const RRng& a, const RRng& b) {
  return a.base_ptr() == b.base_ptr() || a.base().same_presentation(b.base());
}

/// Hom_R(source, target), in canonical search order.
inline std::vector<RHom> enumerate_rhoms(const RRng& source, const RRng& target, const HomOptions& opts = {},
                                         const Caps& caps = {}) {
  if (!same_base(source, target)) throw Error(Errc::precondition_violated, "R-rngs over different rings");
  require_order(source.order(), caps.full, "enumerate_rhoms");
  require_order(target.order(), caps.full, "enumerate_rhoms");
  std::vector<RHom> out;
  if (opts.bijective_only && source.order() != target.order()) return out;

  const FiniteRng& i = source.rng();
  const FiniteRng& j = target.rng();
  const FiniteRing& r = source.base();
  const std::size_t k = i.rank();

  enum class Kind { left, right, mul };
  struct Rule {
    Kind kind;
    Index source;  // phi(source) must equal ...
    std::size_t a, b;
  };
  std::vector<std::vector<Rule>> rules(std::max<std::size_t>(k, 1));
  auto depth = [&](Index x, std::size_t floor) {
    return static_cast<std::size_t>(std::max<long>(static_cast<long>(floor), top_support(i.carrier(), x)));
  };
  for (std::size_t q = 0; q < k; ++q)
    for (std::size_t a = 0; a < r.rank(); ++a) {
      const Index l = source.lact(r.basis(a), i.basis(q));
      const Index rr = source.ract(i.basis(q), r.basis(a));
      rules[depth(l, q)].push_back({Kind::left, l, a, q});
      rules[depth(rr, q)].push_back({Kind::right, rr, q, a});
    }
  if (opts.multiplicative)
    for (std::size_t p = 0; p < k; ++p)
      for (std::size_t q = 0; q < k; ++q) {
        const Index pq = i.basis_product(p, q);
        rules[depth(pq, std::max(p, q))].push_back({Kind::mul, pq, p, q});
      }

  std::vector<std::vector<Index>> candidates(k);
  for (std::size_t q = 0; q < k; ++q) candidates[q] = elements_killed_by(j, i.carrier().factor(q));

  search_basis_images(
      candidates,
      [&](std::size_t d, const std::vector<Index>& img) {
        for (const auto& rule : rules[d]) {
          Index want = 0;
          switch (rule.kind) {
            case Kind::left: want = target.lact(r.basis(rule.a), img[rule.b]); break;
            case Kind::right: want = target.ract(img[rule.a], r.basis(rule.b)); break;
            case Kind::mul: want = j.mul(img[rule.a], img[rule.b]); break;
          }
          if (apply_linear(i.carrier(), j, img, rule.source) != want) return false;
        }
        return true;
      },
      [&](const std::vector<Index>& img) {
        RHom h{img, linear_table(i.carrier(), j, img)};
        if (opts.bijective_only && !h.injective(j.order())) return true;
        out.push_back(std::move(h));
        return out.size() < opts.limit;
      });
  return out;
}

inline bool has_nonzero_rhom(const RRng& source, const RRng& target, bool multiplicative = true,
                             const Caps& caps = {}) {
  HomOptions o;
  o.multiplicative = multiplicative;
  o.limit = 2;
  for (const auto& h : enumerate_rhoms(source, target, o, caps))
    if (!h.is_zero()) return true;
  return false;
}

/// The first R-isomorphism in canonical order, if any.
inline std::optional<RHom> r_isomorphism(const RRng& a, const RRng& b, const Caps& caps = {}) {
  HomOptions o;
  o.bijective_only = true;
  o.limit = 1;
  auto homs = enumerate_rhoms(a, b, o, caps);
  if (homs.empty()) return std::nullopt;
  return homs.front();
}

inline bool r_isomorphic(const RRng& a, const RRng& b, const Caps& caps = {}) {
  return r_isomorphism(a, b, caps).has_value();
}

/// Isomorphic as (R,R)-bimodules, ignoring the internal products.
inline bool bimodule_isomorphic(const RRng& a, const RRng& b, const Caps& caps = {}) {
  HomOptions o;
  o.multiplicative = false;
  o.bijective_only = true;
  o.limit = 1;
  return !enumerate_rhoms(a, b, o, caps).empty();
}

enum class RrngType { T1, T2, T3 };

inline const char* rrng_type_name(RrngType t) {
  switch (t) {
    case RrngType::T1: return "T1";
    case RrngType::T2: return "T2";
    case RrngType::T3: return "T3";
  }
  return "?";
}

/// T1: I^2 = 0.  T3: Hom_R(I, R/ann_R(I)) != 0.  T2: neither.
inline RrngType rrng_type(const RRng& m, const Caps& caps = {}) {
  if (!is_minimal_rrng(m, caps)) throw Error(Errc::not_minimal, "rrng_type needs a minimal R-rng");
  if (m.zero_product()) return RrngType::T1;
  const auto quotient = quotient_rrng(m.base_ptr(), annihilators(m).two_sided);
  return has_nonzero_rhom(m, quotient, true, caps) ? RrngType::T3 : RrngType::T2;
}

}  // namespace minext
