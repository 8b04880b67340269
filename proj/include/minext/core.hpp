#pragma once

/**
 * @file core.hpp
 * @brief Finite rngs and rings presented by structure constants.
 *
 * The additive group of a finite rng is written in explicit cyclic-factor
 * form Z/d_1 x ... x Z/d_k.  Elements are addressed by their canonical
 * mixed-radix index, the first coordinate being the most significant, so
 * index order coincides with lexicographic order on coordinate vectors.
 *
 * Multiplication is the bilinear extension of a k x k table of basis
 * products.  Associativity on basis triples is necessary and sufficient
 * for associativity of the whole rng, which is what construction checks.
 */

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <numeric>
#include <optional>
#include <span>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace minext {

using Index = std::uint32_t;
using Coords = std::vector<std::uint32_t>;

inline constexpr Index npos = static_cast<Index>(-1);

enum class Errc {
  dimension_mismatch,
  torsion_mismatch,
  non_associative,
  not_unital,
  order_cap_exceeded,
  axiom_violation,
  zero_rng,
  not_a_hom,
  precondition_violated,
  nonzero_square,
  no_such_ideal,
  not_minimal,
  not_prime_base,
  not_minimal_extension,
  not_central,
  unknown_suite,
  unknown_constructor,
  bad_params,
  parse_error,
};

inline const char* errc_name(Errc e) {
  switch (e) {
    case Errc::dimension_mismatch: return "dimension-mismatch";
    case Errc::torsion_mismatch: return "torsion-mismatch";
    case Errc::non_associative: return "non-associative";
    case Errc::not_unital: return "not-unital";
    case Errc::order_cap_exceeded: return "order-cap-exceeded";
    case Errc::axiom_violation: return "axiom-violation";
    case Errc::zero_rng: return "zero-rng";
    case Errc::not_a_hom: return "not-a-hom";
    case Errc::precondition_violated: return "precondition-violated";
    case Errc::nonzero_square: return "nonzero-square";
    case Errc::no_such_ideal: return "no-such-ideal";
    case Errc::not_minimal: return "not-minimal";
    case Errc::not_prime_base: return "not-prime-base";
    case Errc::not_minimal_extension: return "not-minimal-extension";
    case Errc::not_central: return "not-central";
    case Errc::unknown_suite: return "unknown-suite";
    case Errc::unknown_constructor: return "unknown-constructor";
    case Errc::bad_params: return "bad-params";
    case Errc::parse_error: return "parse-error";
  }
  return "unknown";
}

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code), message_(what) {}

  Errc code() const noexcept { return code_; }
  /// The message without the error-code prefix.
  const std::string& message() const noexcept { return message_; }

 private:
  Errc code_;
  std::string message_;
};

/// Enumeration limits.  `closure` bounds operations that build subsets by
/// closure; `full` bounds operations that merely scan every element.
struct Caps {
  std::size_t closure = 4096;
  std::size_t full = 65536;
};

inline void require_order(std::size_t order, std::size_t cap, const char* what) {
  if (order > cap) {
    throw Error(Errc::order_cap_exceeded,
                std::string(what) + ": order " + std::to_string(order) + " exceeds cap " +
                    std::to_string(cap));
  }
}

class CarrierGroup {
 public:
  CarrierGroup() : order_(1) {}

  explicit CarrierGroup(std::vector<std::uint32_t> orders) : orders_(std::move(orders)) {
    std::uint64_t total = 1;
    for (auto d : orders_) {
      if (d < 2) throw Error(Errc::dimension_mismatch, "cyclic factor orders must be >= 2");
      total *= d;
      if (total > 0xFFFFFFFFull) throw Error(Errc::order_cap_exceeded, "carrier order exceeds 2^32");
    }
    order_ = static_cast<std::size_t>(total);
    strides_.assign(orders_.size(), 1);
    for (std::size_t i = orders_.size(); i-- > 1;) strides_[i - 1] = strides_[i] * orders_[i];
  }

  std::size_t rank() const { return orders_.size(); }
  std::size_t order() const { return order_; }
  const std::vector<std::uint32_t>& orders() const { return orders_; }
  std::uint32_t factor(std::size_t i) const { return orders_[i]; }
  std::size_t stride(std::size_t i) const { return strides_[i]; }

  std::uint32_t coordinate(Index a, std::size_t i) const {
    return static_cast<std::uint32_t>((a / strides_[i]) % orders_[i]);
  }

  Coords coords(Index a) const {
    Coords c(orders_.size());
    for (std::size_t i = orders_.size(); i-- > 0;) {
      c[i] = a % orders_[i];
      a /= orders_[i];
    }
    return c;
  }

  /// Coordinates are reduced modulo their factor orders.
  Index index(std::span<const std::uint32_t> c) const {
    if (c.size() != orders_.size()) throw Error(Errc::dimension_mismatch, "coordinate vector has wrong length");
    std::size_t idx = 0;
    for (std::size_t i = 0; i < orders_.size(); ++i) idx = idx * orders_[i] + c[i] % orders_[i];
    return static_cast<Index>(idx);
  }

  Index basis(std::size_t i) const { return static_cast<Index>(strides_[i]); }

  Index add(Index a, Index b) const {
    std::size_t out = 0, place = 1;
    for (std::size_t i = orders_.size(); i-- > 0;) {
      const std::uint32_t d = orders_[i];
      std::uint32_t s = a % d + b % d;
      if (s >= d) s -= d;
      out += s * place;
      place *= d;
      a /= d;
      b /= d;
    }
    return static_cast<Index>(out);
  }

  Index neg(Index a) const {
    std::size_t out = 0, place = 1;
    for (std::size_t i = orders_.size(); i-- > 0;) {
      const std::uint32_t d = orders_[i];
      const std::uint32_t x = a % d;
      out += (x == 0 ? 0 : d - x) * place;
      place *= d;
      a /= d;
    }
    return static_cast<Index>(out);
  }

  /// Integer multiple c*a, computed coordinatewise.
  Index scale(std::uint64_t c, Index a) const {
    std::size_t out = 0, place = 1;
    for (std::size_t i = orders_.size(); i-- > 0;) {
      const std::uint32_t d = orders_[i];
      out += static_cast<std::size_t>((c % d) * (a % d) % d) * place;
      place *= d;
      a /= d;
    }
    return static_cast<Index>(out);
  }

  /// Additive order of a.
  std::uint64_t element_order(Index a) const {
    std::uint64_t o = 1;
    for (std::size_t i = 0; i < orders_.size(); ++i) {
      const std::uint32_t d = orders_[i];
      const std::uint32_t x = coordinate(a, i);
      const std::uint64_t oi = d / std::gcd(d, x);
      o = std::lcm(o, oi);
    }
    return o;
  }

  bool operator==(const CarrierGroup& other) const { return orders_ == other.orders_; }

 private:
  std::vector<std::uint32_t> orders_;
  std::vector<std::size_t> strides_;
  std::size_t order_ = 1;
};

inline CarrierGroup concat(const CarrierGroup& a, const CarrierGroup& b) {
  auto orders = a.orders();
  orders.insert(orders.end(), b.orders().begin(), b.orders().end());
  return CarrierGroup(std::move(orders));
}

/// A biadditive map left x right -> target given by its values on basis
/// pairs.  Small instances keep a full lookup table.
class BilinearTable {
 public:
  static constexpr std::size_t table_limit = 1u << 20;

  BilinearTable() = default;

  BilinearTable(CarrierGroup left, CarrierGroup right, CarrierGroup target, std::vector<Index> basis_values)
      : left_(std::move(left)), right_(std::move(right)), target_(std::move(target)),
        values_(std::move(basis_values)) {
    const std::size_t kl = left_.rank(), kr = right_.rank();
    if (values_.size() != kl * kr) {
      throw Error(Errc::dimension_mismatch, "table has " + std::to_string(values_.size()) + " entries, expected " +
                                                std::to_string(kl * kr));
    }
    for (std::size_t i = 0; i < kl; ++i) {
      for (std::size_t j = 0; j < kr; ++j) {
        const Index v = values_[i * kr + j];
        if (v >= target_.order()) {
          throw Error(Errc::dimension_mismatch, "entry (" + std::to_string(i) + "," + std::to_string(j) +
                                                    ") is not an element of the target carrier");
        }
        const std::uint32_t g = std::gcd(left_.factor(i), right_.factor(j));
        if (target_.scale(g, v) != 0) {
          throw Error(Errc::torsion_mismatch, "entry (" + std::to_string(i) + "," + std::to_string(j) +
                                                  ") is not annihilated by gcd of the factor orders");
        }
      }
    }
    if (left_.order() * right_.order() <= table_limit && target_.order() <= 65536) build_table();
  }

  const CarrierGroup& left() const { return left_; }
  const CarrierGroup& right() const { return right_; }
  const CarrierGroup& target() const { return target_; }

  Index basis_value(std::size_t i, std::size_t j) const { return values_[i * right_.rank() + j]; }
  const std::vector<Index>& basis_values() const { return values_; }

  Index operator()(Index a, Index b) const {
    if (!table_.empty()) return table_[static_cast<std::size_t>(a) * right_.order() + b];
    return evaluate(a, b);
  }

  /// Value on (a, e_j) for every right basis element e_j.
  std::vector<Index> row_images(Index a) const {
    const std::size_t kl = left_.rank(), kr = right_.rank();
    std::vector<Index> img(kr, 0);
    for (std::size_t i = 0; i < kl; ++i) {
      const std::uint32_t ai = left_.coordinate(a, i);
      if (ai == 0) continue;
      for (std::size_t j = 0; j < kr; ++j) img[j] = target_.add(img[j], target_.scale(ai, values_[i * kr + j]));
    }
    return img;
  }

 private:
  Index evaluate(Index a, Index b) const {
    const auto img = row_images(a);
    Index out = 0;
    for (std::size_t j = 0; j < right_.rank(); ++j) {
      const std::uint32_t bj = right_.coordinate(b, j);
      if (bj != 0) out = target_.add(out, target_.scale(bj, img[j]));
    }
    return out;
  }

  // Walking b through index order bumps a suffix of its coordinates by one
  // (mod the factor), so each step adds a suffix sum of the row images.
  void build_table() {
    const std::size_t nl = left_.order(), nr = right_.order(), kr = right_.rank();
    table_.assign(nl * nr, 0);
    std::vector<Index> suffix(kr + 1, 0);
    for (std::size_t a = 0; a < nl; ++a) {
      const auto img = row_images(static_cast<Index>(a));
      suffix[kr] = 0;
      for (std::size_t j = kr; j-- > 0;) suffix[j] = target_.add(suffix[j + 1], img[j]);
      Index cur = 0;
      std::uint16_t* row = table_.data() + a * nr;
      row[0] = 0;
      for (std::size_t b = 1; b < nr; ++b) {
        // first coordinate (from the left) that changed: the lowest j with stride | b
        std::size_t j = kr;
        while (j > 0 && b % right_.stride(j - 1) == 0) --j;
        cur = target_.add(cur, suffix[j]);
        row[b] = static_cast<std::uint16_t>(cur);
      }
    }
  }

  CarrierGroup left_, right_, target_;
  std::vector<Index> values_;
  std::vector<std::uint16_t> table_;
};

class FiniteRng {
 public:
  static constexpr std::size_t add_table_limit = 1024;

  FiniteRng() : mul_(CarrierGroup(), CarrierGroup(), CarrierGroup(), {}) {}

  /// `products` is the row-major k x k table of basis products e_i * e_j.
  /// Throws dimension_mismatch, torsion_mismatch or non_associative.
  FiniteRng(CarrierGroup carrier, std::vector<Index> products)
      : carrier_(carrier), mul_(carrier, carrier, carrier, std::move(products)) {
    const std::size_t k = carrier_.rank();
    for (std::size_t i = 0; i < k; ++i) {
      for (std::size_t j = 0; j < k; ++j) {
        const Index ij = mul_.basis_value(i, j);
        for (std::size_t l = 0; l < k; ++l) {
          const Index lhs = mul_(ij, carrier_.basis(l));
          const Index rhs = mul_(carrier_.basis(i), mul_.basis_value(j, l));
          if (lhs != rhs) {
            throw Error(Errc::non_associative, "(e" + std::to_string(i) + " e" + std::to_string(j) + ") e" +
                                                   std::to_string(l) + " != e" + std::to_string(i) + " (e" +
                                                   std::to_string(j) + " e" + std::to_string(l) + ")");
          }
        }
      }
    }
    const std::size_t n = carrier_.order();
    if (n <= add_table_limit) {
      add_.resize(n * n);
      for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b)
          add_[a * n + b] = static_cast<std::uint16_t>(carrier_.add(static_cast<Index>(a), static_cast<Index>(b)));
    }
    neg_.resize(n);
    for (std::size_t a = 0; a < n; ++a) neg_[a] = carrier_.neg(static_cast<Index>(a));
  }

  /// Builds from coordinate vectors; validates lengths and ranges.
  static FiniteRng from_coords(CarrierGroup carrier, const std::vector<std::vector<Coords>>& table) {
    const std::size_t k = carrier.rank();
    if (table.size() != k) throw Error(Errc::dimension_mismatch, "structure table needs " + std::to_string(k) + " rows");
    std::vector<Index> flat;
    flat.reserve(k * k);
    for (std::size_t i = 0; i < k; ++i) {
      if (table[i].size() != k) throw Error(Errc::dimension_mismatch, "row " + std::to_string(i) + " has wrong length");
      for (std::size_t j = 0; j < k; ++j) {
        const Coords& c = table[i][j];
        if (c.size() != k) throw Error(Errc::dimension_mismatch, "entry has wrong rank");
        for (std::size_t l = 0; l < k; ++l)
          if (c[l] >= carrier.factor(l)) throw Error(Errc::dimension_mismatch, "coordinate out of range");
        flat.push_back(carrier.index(c));
      }
    }
    return FiniteRng(std::move(carrier), std::move(flat));
  }

  const CarrierGroup& carrier() const { return carrier_; }
  std::size_t order() const { return carrier_.order(); }
  std::size_t rank() const { return carrier_.rank(); }
  Index basis(std::size_t i) const { return carrier_.basis(i); }
  Index basis_product(std::size_t i, std::size_t j) const { return mul_.basis_value(i, j); }
  const std::vector<Index>& structure_constants() const { return mul_.basis_values(); }

  Index zero() const { return 0; }

  Index add(Index a, Index b) const {
    if (!add_.empty()) return add_[static_cast<std::size_t>(a) * order() + b];
    return carrier_.add(a, b);
  }
  Index neg(Index a) const { return neg_[a]; }
  Index sub(Index a, Index b) const { return add(a, neg(b)); }
  Index scale(std::uint64_t c, Index a) const { return carrier_.scale(c, a); }
  Index mul(Index a, Index b) const { return mul_(a, b); }

  Coords coords(Index a) const { return carrier_.coords(a); }
  Index index(std::span<const std::uint32_t> c) const { return carrier_.index(c); }

  bool square_zero() const {
    return std::all_of(structure_constants().begin(), structure_constants().end(), [](Index v) { return v == 0; });
  }

  bool commutative() const {
    for (std::size_t i = 0; i < rank(); ++i)
      for (std::size_t j = i + 1; j < rank(); ++j)
        if (basis_product(i, j) != basis_product(j, i)) return false;
    return true;
  }

  bool same_presentation(const FiniteRng& other) const {
    return carrier_ == other.carrier_ && structure_constants() == other.structure_constants();
  }

 private:
  CarrierGroup carrier_;
  BilinearTable mul_;
  std::vector<std::uint16_t> add_;
  std::vector<Index> neg_;
};

/// u with u*e_i = e_i*u = e_i for every basis element, if any.
inline std::optional<Index> find_unity(const FiniteRng& s) {
  const std::size_t n = s.order(), k = s.rank();
  for (std::size_t u = 0; u < n; ++u) {
    bool ok = true;
    for (std::size_t i = 0; i < k && ok; ++i) {
      const Index e = s.basis(i);
      ok = s.mul(static_cast<Index>(u), e) == e && s.mul(e, static_cast<Index>(u)) == e;
    }
    if (ok) return static_cast<Index>(u);
  }
  return std::nullopt;
}

class FiniteRing : public FiniteRng {
 public:
  FiniteRing() = default;

  FiniteRing(FiniteRng rng, Index unity) : FiniteRng(std::move(rng)), one_(unity) {
    if (unity >= order()) throw Error(Errc::dimension_mismatch, "unity is not an element of the carrier");
    for (std::size_t i = 0; i < rank(); ++i) {
      const Index e = basis(i);
      if (mul(unity, e) != e || mul(e, unity) != e) {
        throw Error(Errc::not_unital, "declared unity fails on basis element e" + std::to_string(i));
      }
    }
  }

  static FiniteRing with_found_unity(FiniteRng rng) {
    auto u = find_unity(rng);
    if (!u) throw Error(Errc::not_unital, "rng has no identity element");
    return FiniteRing(std::move(rng), *u);
  }

  Index one() const { return one_; }

  bool same_presentation(const FiniteRing& other) const {
    return FiniteRng::same_presentation(other) && one_ == other.one_;
  }

 private:
  Index one_ = 0;
};

inline std::string format_coords(const Coords& c) {
  std::ostringstream os;
  for (std::size_t i = 0; i < c.size(); ++i) os << (i ? " " : "") << c[i];
  return os.str();
}

}  // namespace minext
