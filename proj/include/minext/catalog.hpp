#pragma once

/**
 * @file catalog.hpp
 * @brief Named constructors for rings, R-rngs and embeddings.
 *
 * A spec is `name(arg, ...)` where each argument is a decimal integer or
 * another spec, e.g. `ideal_as_rrng(zmod(4), 2)` or `embed(gf(2), gf(4))`.
 * Element arguments are canonical indices in the named ring.
 */

#include <cctype>
#include <map>
#include <memory>
#include <mutex>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "minext/bimodule.hpp"
#include "minext/extensions.hpp"
#include "minext/matrix.hpp"
#include "minext/substructure.hpp"

namespace minext {

struct CatalogSpec;

struct CatalogArg {
  bool is_number = true;
  long number = 0;
  std::shared_ptr<CatalogSpec> spec;
};

struct CatalogSpec {
  std::string name;
  std::vector<CatalogArg> args;

  std::string str() const {
    std::string s = name + "(";
    for (std::size_t i = 0; i < args.size(); ++i) {
      if (i) s += ",";
      s += args[i].is_number ? std::to_string(args[i].number) : args[i].spec->str();
    }
    return s + ")";
  }
};

namespace detail {

class SpecParser {
 public:
  explicit SpecParser(std::string_view text) : s_(text) {}

  CatalogSpec parse() {
    auto spec = parse_spec();
    skip();
    if (pos_ != s_.size()) fail("trailing characters");
    return spec;
  }

 private:
  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  [[noreturn]] void fail(const std::string& what) const {
    throw Error(Errc::parse_error, "catalog spec '" + std::string(s_) + "' at column " + std::to_string(pos_ + 1) + ": " + what);
  }

  CatalogSpec parse_spec() {
    skip();
    const std::size_t start = pos_;
    while (pos_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_')) ++pos_;
    if (start == pos_) fail("expected a constructor name");
    CatalogSpec spec{std::string(s_.substr(start, pos_ - start)), {}};
    skip();
    if (pos_ == s_.size() || s_[pos_] != '(') return spec;
    ++pos_;
    skip();
    if (pos_ < s_.size() && s_[pos_] == ')') {
      ++pos_;
      return spec;
    }
    while (true) {
      skip();
      CatalogArg arg;
      if (pos_ < s_.size() && (std::isdigit(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '-')) {
        const std::size_t b = pos_;
        if (s_[pos_] == '-') ++pos_;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
        if (pos_ - b > 12) fail("number too long");
        arg.number = std::stol(std::string(s_.substr(b, pos_ - b)));
      } else {
        arg.is_number = false;
        arg.spec = std::make_shared<CatalogSpec>(parse_spec());
      }
      spec.args.push_back(std::move(arg));
      skip();
      if (pos_ < s_.size() && s_[pos_] == ',') {
        ++pos_;
        continue;
      }
      if (pos_ < s_.size() && s_[pos_] == ')') {
        ++pos_;
        return spec;
      }
      fail("expected ',' or ')'");
    }
  }

  std::string_view s_;
  std::size_t pos_ = 0;
};

}  // namespace detail

inline CatalogSpec parse_catalog_spec(std::string_view text) { return detail::SpecParser(text).parse(); }

/// The maps f_n, g_n and the idempotent E_n at one finite level:
/// f_n(A) = A (x) I_2, g_n(A) = A (x) e_11, E_n = I (x) e_11, all in
/// M_{2^{n+1}}(F_p).
struct BergmanLevel {
  std::size_t n = 1;
  std::uint32_t p = 2;
  DenseMatrix idempotent;

  std::size_t domain_size() const { return std::size_t{1} << n; }
  DenseMatrix f(const DenseMatrix& a) const { return kron(a, DenseMatrix::identity(2, p)); }
  DenseMatrix g(const DenseMatrix& a) const { return kron(a, DenseMatrix::unit(2, p, 0, 0)); }
  std::vector<DenseMatrix> domain_basis() const {
    std::vector<DenseMatrix> out;
    for (std::size_t i = 0; i < domain_size(); ++i)
      for (std::size_t j = 0; j < domain_size(); ++j) out.push_back(DenseMatrix::unit(domain_size(), p, i, j));
    return out;
  }
};

inline BergmanLevel make_bergman_level(std::size_t n, std::uint32_t p) {
  BergmanLevel b;
  b.n = n;
  b.p = p;
  b.idempotent = kron(DenseMatrix::identity(std::size_t{1} << n, p), DenseMatrix::unit(2, p, 0, 0));
  return b;
}

/// Every identity of the level checked on all basis pairs; returns the
/// failures as readable strings.
inline std::vector<std::string> bergman_violations(const BergmanLevel& b) {
  std::vector<std::string> bad;
  const auto basis = b.domain_basis();
  const std::size_t big = 2 * b.domain_size();
  const DenseMatrix& e = b.idempotent;
  auto name = [&](std::size_t k) {
    return "e" + std::to_string(k / b.domain_size() + 1) + std::to_string(k % b.domain_size() + 1);
  };
  if (b.f(DenseMatrix::identity(b.domain_size(), b.p)) != DenseMatrix::identity(big, b.p)) bad.push_back("f(1) != 1");
  if (e * e != e) bad.push_back("E not idempotent");
  for (std::size_t x = 0; x < basis.size(); ++x) {
    const auto fa = b.f(basis[x]), ga = b.g(basis[x]);
    if (fa.is_zero()) bad.push_back("f kills " + name(x));
    if (!(fa * e == e * fa && e * fa == e * fa * e)) bad.push_back("f(A)E = Ef(A) = Ef(A)E fails at " + name(x));
    if (ga != e * fa * e) bad.push_back("g(A) != E f(A) E at " + name(x));
    for (std::size_t y = 0; y < basis.size(); ++y) {
      const auto ab = basis[x] * basis[y];
      const auto fb = b.f(basis[y]), gb = b.g(basis[y]);
      const auto gab = b.g(ab);
      if (b.f(ab) != fa * fb) bad.push_back("f(AB) != f(A)f(B) at " + name(x) + "," + name(y));
      if (!(gab == fa * gb && gab == ga * gb && gab == ga * fb))
        bad.push_back("g(AB) = f(A)g(B) = g(A)g(B) = g(A)f(B) fails at " + name(x) + "," + name(y));
    }
  }
  return bad;
}

using CatalogObject = std::variant<std::shared_ptr<const FiniteRing>, std::shared_ptr<const RRng>,
                                   std::shared_ptr<const EmbeddedSubring>, std::shared_ptr<const BergmanLevel>>;

struct CatalogEntry {
  const char* signature;
  const char* description;
};

inline const std::vector<CatalogEntry>& catalog_entries() {
  static const std::vector<CatalogEntry> entries = {
      {"zmod(n)", "ring Z/n"},
      {"gf(q)", "finite field, q prime or q in {4, 8, 9}"},
      {"mat(n,q)", "n x n matrices over gf(q), basis e_ij (x) field basis, row-major"},
      {"tri(n,q)", "upper triangular n x n matrices over gf(q)"},
      {"product(R,...)", "direct product of rings"},
      {"regular(R)", "R as an R-rng over itself"},
      {"ideal_as_rrng(R,g)", "the ideal RgR with actions inherited from R"},
      {"quotient_rrng(R,g)", "R/RgR as an R-rng"},
      {"zero_bimodule(R,g)", "the bimodule R/RgR with zero product"},
      {"twisted_field(q,e)", "gf(q) bimodule, a.m = am, m.a = m sigma^e(a), zero product"},
      {"as_rrng(R,S)", "a ring S containing R, as an R-rng"},
      {"embed(R,S)", "the first unital embedding of R into S"},
      {"regular_embed(q,p)", "gf(q) into M_m(gf(p)) by left multiplication, m = [gf(q):gf(p)]"},
      {"tri_in_mat(n,q)", "tri(n,q) inside mat(n,q)"},
      {"diagonal(R)", "R inside R x R diagonally"},
      {"ideal_extension(M)", "R inside E(R,M) for an R-rng M"},
      {"trivial_extension(M)", "R inside the trivial extension by a zero-product R-rng M"},
      {"bergman_level(n,p)", "maps f_n, g_n and idempotent E_n into M_{2^{n+1}}(gf(p))"},
  };
  return entries;
}

namespace detail {

struct FieldData {
  std::uint32_t p = 2;
  std::vector<std::uint32_t> modulus;  // low coefficients of the monic modulus
  std::size_t degree() const { return modulus.empty() ? 1 : modulus.size(); }
};

inline bool is_prime(long n) {
  if (n < 2) return false;
  for (long d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

inline FieldData field_data(long q) {
  if (q >= 2 && q <= 65521 && is_prime(q)) return {static_cast<std::uint32_t>(q), {}};
  if (q == 4) return {2, {1, 1}};     // x^2 + x + 1
  if (q == 8) return {2, {1, 1, 0}};  // x^3 + x + 1
  if (q == 9) return {3, {1, 0}};     // x^2 + 1
  throw Error(Errc::bad_params, "gf(" + std::to_string(q) + "): not a prime or one of 4, 8, 9");
}

/// Product of x^s and x^t reduced modulo the field polynomial, as
/// coefficients of 1, x, ..., x^{m-1}.
inline std::vector<std::uint32_t> monomial_product(const FieldData& f, std::size_t s, std::size_t t) {
  const std::size_t m = f.degree();
  std::vector<std::uint32_t> c(2 * m, 0);
  c[s + t] = 1;
  for (std::size_t d = 2 * m - 1; d >= m; --d) {
    const std::uint32_t lead = c[d];
    if (!lead) continue;
    c[d] = 0;
    for (std::size_t i = 0; i < m; ++i) c[d - m + i] = (c[d - m + i] + f.p - (lead * f.modulus[i]) % f.p) % f.p;
  }
  c.resize(m);
  return c;
}

inline std::shared_ptr<const FiniteRing> cyclic_ring(long n) {
  if (n < 2 || n > 65536) throw Error(Errc::bad_params, "zmod(n) needs 2 <= n <= 65536");
  CarrierGroup c({static_cast<std::uint32_t>(n)});
  return std::make_shared<const FiniteRing>(FiniteRng(c, {1}), 1);
}

/// Matrices over gf(q) supported on `positions` (which must span a
/// subring), basis ordered by position then field basis.
inline std::shared_ptr<const FiniteRing> matrix_ring(std::size_t n, long q,
                                                     const std::vector<std::pair<std::size_t, std::size_t>>& positions) {
  const FieldData f = field_data(q);
  const std::size_t m = f.degree(), k = positions.size() * m;
  std::map<std::pair<std::size_t, std::size_t>, std::size_t> slot;
  for (std::size_t i = 0; i < positions.size(); ++i) slot[positions[i]] = i;
  const CarrierGroup carrier(std::vector<std::uint32_t>(k, f.p));
  if (carrier.order() > 65536) throw Error(Errc::bad_params, "matrix ring order exceeds 65536");
  std::vector<Index> sc(k * k, 0);
  for (std::size_t a = 0; a < k; ++a)
    for (std::size_t b = 0; b < k; ++b) {
      const auto [i, j] = positions[a / m];
      const auto [u, v] = positions[b / m];
      if (j != u) continue;
      const auto it = slot.find({i, v});
      if (it == slot.end()) throw Error(Errc::bad_params, "matrix positions are not closed under products");
      Coords c(k, 0);
      const auto prod = monomial_product(f, a % m, b % m);
      for (std::size_t t = 0; t < m; ++t) c[it->second * m + t] = prod[t];
      sc[a * k + b] = carrier.index(c);
    }
  Coords one(k, 0);
  for (std::size_t i = 0; i < n; ++i) {
    const auto it = slot.find({i, i});
    if (it == slot.end()) throw Error(Errc::bad_params, "matrix positions miss the diagonal");
    one[it->second * m] = 1;
  }
  return std::make_shared<const FiniteRing>(FiniteRng(carrier, std::move(sc)), carrier.index(one));
}

inline std::vector<std::pair<std::size_t, std::size_t>> full_positions(std::size_t n) {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) out.emplace_back(i, j);
  return out;
}

inline std::vector<std::pair<std::size_t, std::size_t>> upper_positions(std::size_t n) {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j) out.emplace_back(i, j);
  return out;
}

inline std::shared_ptr<const FiniteRing> product_ring(const std::vector<std::shared_ptr<const FiniteRing>>& rings) {
  std::vector<std::uint32_t> orders;
  std::size_t k = 0;
  for (const auto& r : rings) {
    orders.insert(orders.end(), r->carrier().orders().begin(), r->carrier().orders().end());
    k += r->rank();
  }
  const CarrierGroup carrier(orders);
  if (carrier.order() > 65536) throw Error(Errc::bad_params, "product order exceeds 65536");
  std::vector<Index> sc(k * k, 0);
  Coords one;
  std::size_t offset = 0;
  for (const auto& r : rings) {
    for (std::size_t a = 0; a < r->rank(); ++a)
      for (std::size_t b = 0; b < r->rank(); ++b) {
        Coords c(k, 0);
        const auto local = r->coords(r->basis_product(a, b));
        std::copy(local.begin(), local.end(), c.begin() + static_cast<long>(offset));
        sc[(offset + a) * k + offset + b] = carrier.index(c);
      }
    const auto u = r->coords(r->one());
    one.insert(one.end(), u.begin(), u.end());
    offset += r->rank();
  }
  return std::make_shared<const FiniteRing>(FiniteRng(carrier, std::move(sc)), carrier.index(one));
}

}  // namespace detail

class Catalog {
 public:
  static Catalog& instance() {
    static Catalog c;
    return c;
  }

  CatalogObject make(const CatalogSpec& spec) {
    const std::string key = spec.str();
    std::lock_guard<std::recursive_mutex> lock(mutex_);
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;
    CatalogObject obj = build(spec);
    memo_.emplace(key, obj);
    return obj;
  }

  CatalogObject make(std::string_view text) { return make(parse_catalog_spec(text)); }

  std::shared_ptr<const FiniteRing> ring(std::string_view text) { return as_ring(make(text), std::string(text)); }
  std::shared_ptr<const RRng> rrng(std::string_view text) { return as_rrng(make(text), std::string(text)); }
  std::shared_ptr<const EmbeddedSubring> embedding(std::string_view text) {
    return as_embedding(make(text), std::string(text));
  }

  static std::shared_ptr<const FiniteRing> as_ring(const CatalogObject& o, const std::string& what) {
    if (auto p = std::get_if<std::shared_ptr<const FiniteRing>>(&o)) return *p;
    throw Error(Errc::bad_params, what + " is not a ring");
  }
  static std::shared_ptr<const RRng> as_rrng(const CatalogObject& o, const std::string& what) {
    if (auto p = std::get_if<std::shared_ptr<const RRng>>(&o)) return *p;
    throw Error(Errc::bad_params, what + " is not an R-rng");
  }
  static std::shared_ptr<const EmbeddedSubring> as_embedding(const CatalogObject& o, const std::string& what) {
    if (auto p = std::get_if<std::shared_ptr<const EmbeddedSubring>>(&o)) return *p;
    throw Error(Errc::bad_params, what + " is not an embedding");
  }

 private:
  Catalog() = default;

  CatalogObject build(const CatalogSpec& spec) {
    const auto& a = spec.args;
    auto arity = [&](std::size_t n) {
      if (a.size() != n)
        throw Error(Errc::bad_params, spec.name + " takes " + std::to_string(n) + " argument(s), got " +
                                          std::to_string(a.size()));
    };
    auto num = [&](std::size_t i) {
      if (!a[i].is_number) throw Error(Errc::bad_params, spec.name + ": argument " + std::to_string(i + 1) + " must be a number");
      return a[i].number;
    };
    auto sub = [&](std::size_t i) {
      if (a[i].is_number) throw Error(Errc::bad_params, spec.name + ": argument " + std::to_string(i + 1) + " must be a spec");
      return make(*a[i].spec);
    };
    auto ring_arg = [&](std::size_t i) { return as_ring(sub(i), a[i].spec->str()); };
    auto element_arg = [&](std::size_t i, const FiniteRing& r) {
      const long g = num(i);
      if (g < 0 || static_cast<std::size_t>(g) >= r.order())
        throw Error(Errc::bad_params, spec.name + ": element " + std::to_string(g) + " out of range");
      return static_cast<Index>(g);
    };
    auto dimension = [&](std::size_t i) {
      const long n = num(i);
      if (n < 1 || n > 16) throw Error(Errc::bad_params, spec.name + ": dimension must be in 1..16");
      return static_cast<std::size_t>(n);
    };
    const std::string& name = spec.name;

    if (name == "zmod") {
      arity(1);
      return detail::cyclic_ring(num(0));
    }
    if (name == "gf") {
      arity(1);
      return detail::matrix_ring(1, num(0), {{0, 0}});
    }
    if (name == "mat") {
      arity(2);
      const auto n = dimension(0);
      return detail::matrix_ring(n, num(1), detail::full_positions(n));
    }
    if (name == "tri") {
      arity(2);
      const auto n = dimension(0);
      return detail::matrix_ring(n, num(1), detail::upper_positions(n));
    }
    if (name == "product") {
      if (a.empty()) throw Error(Errc::bad_params, "product needs at least one ring");
      std::vector<std::shared_ptr<const FiniteRing>> rings;
      for (std::size_t i = 0; i < a.size(); ++i) rings.push_back(ring_arg(i));
      return detail::product_ring(rings);
    }
    if (name == "regular") {
      arity(1);
      return std::make_shared<const RRng>(regular_rrng(ring_arg(0)));
    }
    if (name == "ideal_as_rrng") {
      arity(2);
      auto r = ring_arg(0);
      const Index g = element_arg(1, *r);
      const auto ideal = close(*r, std::span<const Index>(&g, 1), ClosureMode::ideal);
      if (ideal.is_zero()) throw Error(Errc::bad_params, "ideal_as_rrng: the ideal is zero");
      return std::make_shared<const RRng>(induced_rrng(regular_rrng(r), ideal).rrng);
    }
    if (name == "quotient_rrng" || name == "zero_bimodule") {
      arity(2);
      auto r = ring_arg(0);
      const Index g = element_arg(1, *r);
      const auto ideal = close(*r, std::span<const Index>(&g, 1), ClosureMode::ideal);
      if (ideal.size() == r->order()) throw Error(Errc::bad_params, name + ": the quotient is zero");
      return std::make_shared<const RRng>(quotient_rrng(r, ideal, name == "zero_bimodule"));
    }
    if (name == "twisted_field") {
      arity(2);
      auto r = make(CatalogSpec{"gf", {CatalogArg{true, num(0), nullptr}}});
      auto field = as_ring(r, "gf");
      const long e = num(1);
      if (e < 0) throw Error(Errc::bad_params, "twisted_field: negative power");
      const std::uint32_t p = field->carrier().factor(0);
      auto frob = [&](Index x) {
        for (long t = 0; t < e; ++t) {
          Index y = field->one();
          for (std::uint32_t s = 0; s < p; ++s) y = field->mul(y, x);
          x = y;
        }
        return x;
      };
      const std::size_t k = field->rank();
      std::vector<Index> right(k * k);
      for (std::size_t j = 0; j < k; ++j)
        for (std::size_t b = 0; b < k; ++b) right[j * k + b] = field->mul(field->basis(j), frob(field->basis(b)));
      FiniteRng zero(field->carrier(), std::vector<Index>(k * k, 0));
      return std::make_shared<const RRng>(make_rrng(field, std::move(zero), field->structure_constants(), right));
    }
    if (name == "as_rrng") {
      arity(2);
      auto r = ring_arg(0);
      auto s = ring_arg(1);
      auto emb = find_embedding(r, s);
      if (!emb) throw Error(Errc::bad_params, "as_rrng: no unital embedding");
      const std::size_t kr = r->rank(), ks = s->rank();
      std::vector<Index> left(kr * ks), right(ks * kr);
      for (std::size_t x = 0; x < kr; ++x)
        for (std::size_t y = 0; y < ks; ++y) {
          left[x * ks + y] = s->mul(emb->map[r->basis(x)], s->basis(y));
          right[y * kr + x] = s->mul(s->basis(y), emb->map[r->basis(x)]);
        }
      FiniteRng rng = *s;
      return std::make_shared<const RRng>(make_rrng(r, std::move(rng), std::move(left), std::move(right)));
    }
    if (name == "embed") {
      arity(2);
      auto emb = find_embedding(ring_arg(0), ring_arg(1));
      if (!emb) throw Error(Errc::bad_params, "embed: no unital embedding of " + a[0].spec->str() + " into " + a[1].spec->str());
      return std::make_shared<const EmbeddedSubring>(std::move(*emb));
    }
    if (name == "regular_embed") {
      arity(2);
      const long qk = num(0), p = num(1);
      if (!detail::is_prime(p) || detail::field_data(qk).p != static_cast<std::uint32_t>(p))
        throw Error(Errc::bad_params, "regular_embed(q,p): p must be the characteristic of gf(q)");
      auto k = ring_arg_of("gf", qk);
      const std::size_t m = k->rank();
      auto big = detail::matrix_ring(m, p, detail::full_positions(m));
      std::vector<Index> images;
      for (std::size_t s = 0; s < m; ++s) {
        Coords c(m * m, 0);
        for (std::size_t l = 0; l < m; ++l) {
          const auto col = k->coords(k->mul(k->basis(s), k->basis(l)));
          for (std::size_t i = 0; i < m; ++i) c[i * m + l] = col[i];
        }
        images.push_back(big->index(c));
      }
      return std::make_shared<const EmbeddedSubring>(make_embedding(big, k, images));
    }
    if (name == "tri_in_mat") {
      arity(2);
      const auto n = dimension(0);
      auto small = detail::matrix_ring(n, num(1), detail::upper_positions(n));
      auto big = detail::matrix_ring(n, num(1), detail::full_positions(n));
      const std::size_t m = detail::field_data(num(1)).degree();
      std::vector<Index> images;
      for (auto [i, j] : detail::upper_positions(n))
        for (std::size_t t = 0; t < m; ++t) images.push_back(big->basis((i * n + j) * m + t));
      return std::make_shared<const EmbeddedSubring>(make_embedding(big, small, images));
    }
    if (name == "diagonal") {
      arity(1);
      auto r = ring_arg(0);
      auto big = detail::product_ring({r, r});
      std::vector<Index> images;
      for (std::size_t i = 0; i < r->rank(); ++i)
        images.push_back(static_cast<Index>(r->basis(i) * r->order() + r->basis(i)));
      return std::make_shared<const EmbeddedSubring>(make_embedding(big, r, images));
    }
    if (name == "ideal_extension" || name == "trivial_extension") {
      arity(1);
      auto m = as_rrng(sub(0), a[0].spec->str());
      auto x = name == "ideal_extension" ? ideal_extension(*m) : trivial_extension(*m);
      return std::make_shared<const EmbeddedSubring>(x.base_embedding);
    }
    if (name == "bergman_level") {
      arity(2);
      const long n = num(0), p = num(1);
      if (n < 1 || n > 3) throw Error(Errc::bad_params, "bergman_level: n must be in 1..3");
      if (!detail::is_prime(p)) throw Error(Errc::bad_params, "bergman_level: p must be prime");
      return std::make_shared<const BergmanLevel>(make_bergman_level(static_cast<std::size_t>(n), static_cast<std::uint32_t>(p)));
    }
    throw Error(Errc::unknown_constructor, "no catalog constructor named '" + name + "'");
  }

  std::shared_ptr<const FiniteRing> ring_arg_of(const char* name, long n) {
    return as_ring(make(CatalogSpec{name, {CatalogArg{true, n, nullptr}}}), name);
  }

  std::recursive_mutex mutex_;
  std::map<std::string, CatalogObject> memo_;
};

inline CatalogObject catalog_make(std::string_view text) { return Catalog::instance().make(text); }
inline std::shared_ptr<const FiniteRing> catalog_ring(std::string_view text) { return Catalog::instance().ring(text); }
inline std::shared_ptr<const RRng> catalog_rrng(std::string_view text) { return Catalog::instance().rrng(text); }
inline std::shared_ptr<const EmbeddedSubring> catalog_embedding(std::string_view text) {
  return Catalog::instance().embedding(text);
}

}  // namespace minext
