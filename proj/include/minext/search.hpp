#pragma once

#include <cstddef>
#include <vector>

#include "minext/core.hpp"

namespace minext {

/// Depth-first enumeration of basis-image assignments in canonical order
/// (lexicographic in the candidate lists).  `check(depth, images)` runs
/// after images[depth] is assigned and may prune; `leaf(images)` sees each
/// full assignment and returns false to stop the search.
template <class Check, class Leaf>
void search_basis_images(const std::vector<std::vector<Index>>& candidates, Check&& check, Leaf&& leaf) {
  const std::size_t k = candidates.size();
  std::vector<Index> images(k, 0);
  if (k == 0) {
    leaf(images);
    return;
  }
  std::vector<std::size_t> pos(k, 0);
  std::size_t depth = 0;
  while (true) {
    if (pos[depth] == candidates[depth].size()) {
      if (depth == 0) return;
      pos[depth] = 0;
      --depth;
      ++pos[depth];
      continue;
    }
    images[depth] = candidates[depth][pos[depth]];
    if (!check(depth, images)) {
      ++pos[depth];
      continue;
    }
    if (depth + 1 == k) {
      if (!leaf(images)) return;
      ++pos[depth];
    } else {
      ++depth;
    }
  }
}

/// Constraint bucketing: a constraint whose evaluation involves basis
/// images up to `depth` is checked as soon as that image is assigned.
template <class Constraint>
struct DepthBuckets {
  explicit DepthBuckets(std::size_t k) : at(k) {}
  void add(std::size_t depth, Constraint c) { at[depth].push_back(std::move(c)); }
  std::vector<std::vector<Constraint>> at;
};

/// Largest basis index with a nonzero coordinate in x, or -1 for zero.
inline long top_support(const CarrierGroup& g, Index x) {
  for (std::size_t i = g.rank(); i-- > 0;)
    if (g.coordinate(x, i) != 0) return static_cast<long>(i);
  return -1;
}

/// Evaluates the additive map with the given basis images at x.
template <class Target>
Index apply_linear(const CarrierGroup& source, const Target& target, const std::vector<Index>& images, Index x) {
  Index out = 0;
  for (std::size_t i = 0; i < source.rank(); ++i) {
    const std::uint32_t c = source.coordinate(x, i);
    if (c != 0) out = target.add(out, target.scale(c, images[i]));
  }
  return out;
}

/// Full value table of the additive map with the given basis images.
template <class Target>
std::vector<Index> linear_table(const CarrierGroup& source, const Target& target, const std::vector<Index>& images) {
  std::vector<Index> values(source.order(), 0);
  for (std::size_t x = 0; x < values.size(); ++x) values[x] = apply_linear(source, target, images, static_cast<Index>(x));
  return values;
}

/// Elements of `target` annihilated by d, in index order.
template <class Target>
std::vector<Index> elements_killed_by(const Target& target, std::uint32_t d) {
  std::vector<Index> out;
  for (std::size_t y = 0; y < target.order(); ++y)
    if (target.scale(d, static_cast<Index>(y)) == 0) out.push_back(static_cast<Index>(y));
  return out;
}

inline bool injective_table(const std::vector<Index>& values, std::size_t target_order) {
  std::vector<char> seen(target_order, 0);
  for (auto v : values) {
    if (seen[v]) return false;
    seen[v] = 1;
  }
  return true;
}

}  // namespace minext
