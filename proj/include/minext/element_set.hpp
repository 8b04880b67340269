#pragma once

#include <algorithm>
#include <compare>
#include <deque>
#include <span>
#include <sstream>
#include <string>
#include <vector>

#include "minext/core.hpp"

namespace minext {

/// A sorted set of canonical element indices of some ambient rng.
/// Ordering is canonical: by cardinality, then lexicographically.
class ElementSet {
 public:
  ElementSet() = default;

  static ElementSet from_unsorted(std::vector<Index> members) {
    std::sort(members.begin(), members.end());
    members.erase(std::unique(members.begin(), members.end()), members.end());
    ElementSet s;
    s.members_ = std::move(members);
    return s;
  }

  static ElementSet from_mask(const std::vector<char>& mask) {
    ElementSet s;
    for (std::size_t i = 0; i < mask.size(); ++i)
      if (mask[i]) s.members_.push_back(static_cast<Index>(i));
    return s;
  }

  static ElementSet all(std::size_t n) {
    ElementSet s;
    s.members_.resize(n);
    for (std::size_t i = 0; i < n; ++i) s.members_[i] = static_cast<Index>(i);
    return s;
  }

  static ElementSet zero() { return from_unsorted({0}); }

  std::size_t size() const { return members_.size(); }
  bool empty() const { return members_.empty(); }
  bool is_zero() const { return members_.size() == 1 && members_[0] == 0; }
  const std::vector<Index>& members() const { return members_; }
  auto begin() const { return members_.begin(); }
  auto end() const { return members_.end(); }

  bool contains(Index x) const { return std::binary_search(members_.begin(), members_.end(), x); }

  bool subset_of(const ElementSet& other) const {
    return std::includes(other.members_.begin(), other.members_.end(), members_.begin(), members_.end());
  }

  std::vector<char> mask(std::size_t n) const {
    std::vector<char> m(n, 0);
    for (auto x : members_) m[x] = 1;
    return m;
  }

  friend ElementSet intersect(const ElementSet& a, const ElementSet& b) {
    ElementSet out;
    std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out.members_));
    return out;
  }

  friend bool operator==(const ElementSet& a, const ElementSet& b) { return a.members_ == b.members_; }

  friend std::strong_ordering operator<=>(const ElementSet& a, const ElementSet& b) {
    if (auto c = a.size() <=> b.size(); c != 0) return c;
    return std::lexicographical_compare_three_way(a.begin(), a.end(), b.begin(), b.end());
  }

  std::string str() const {
    std::ostringstream os;
    os << '{';
    for (std::size_t i = 0; i < members_.size(); ++i) os << (i ? " " : "") << members_[i];
    os << '}';
    return os.str();
  }

 private:
  std::vector<Index> members_;
};

/// An additive subgroup grown by adjoining elements one at a time.
class Span {
 public:
  explicit Span(const FiniteRng& ring) : ring_(&ring), mask_(ring.order(), 0) {
    mask_[0] = 1;
    members_.push_back(0);
  }

  /// Returns false when g already lies in the span.
  bool adjoin(Index g) {
    if (mask_[g]) return false;
    generators_.push_back(g);
    const std::size_t m = members_.size();
    Index t = g;
    do {
      for (std::size_t i = 0; i < m; ++i) {
        const Index x = ring_->add(members_[i], t);
        mask_[x] = 1;
        members_.push_back(x);
      }
      t = ring_->add(t, g);
    } while (!mask_[t]);
    return true;
  }

  bool contains(Index x) const { return mask_[x] != 0; }
  std::size_t size() const { return members_.size(); }
  const std::vector<Index>& generators() const { return generators_; }
  const std::vector<char>& mask() const { return mask_; }
  ElementSet set() const { return ElementSet::from_mask(mask_); }

 private:
  const FiniteRng* ring_;
  std::vector<char> mask_;
  std::vector<Index> members_;
  std::vector<Index> generators_;
};

/// Additive span of seeds closed under the products emitted by `expand`.
/// `expand(g, processed, emit)` is called once per new generator g, with
/// `processed` listing every generator handled so far (g included).  By
/// biadditivity, checking generator pairs is enough.
template <class Expand>
Span close_with(const FiniteRng& ring, std::span<const Index> seeds, Expand&& expand) {
  Span span(ring);
  std::deque<Index> queue;
  for (auto s : seeds)
    if (span.adjoin(s)) queue.push_back(s);
  std::vector<Index> processed;
  auto emit = [&](Index x) {
    if (span.adjoin(x)) queue.push_back(x);
  };
  while (!queue.empty()) {
    const Index g = queue.front();
    queue.pop_front();
    processed.push_back(g);
    expand(g, std::span<const Index>(processed), emit);
  }
  return span;
}

/// Additive generators of a subset's span.
inline std::vector<Index> span_generators(const FiniteRng& ring, const ElementSet& set) {
  Span span(ring);
  for (auto x : set) span.adjoin(x);
  return span.generators();
}

}  // namespace minext
