#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "graver/vector.hpp"

namespace graver {

/// Index over stored vectors keyed by sign pattern.
///
/// The index is a ternary trie: level j branches on the sign of entry j
/// (0, +, -), and each leaf is the bucket of all stored vectors sharing that
/// sign pattern. A query for s only descends into branches whose sign is 0
/// or equal to sign(s_j), so it visits exactly the buckets whose pattern is
/// dominated by the pattern of s. Magnitudes are compared in the buckets.
///
/// The index stores ids only; callers pass the backing store to queries.
template <Scalar T>
class ReducerIndex {
 public:
  explicit ReducerIndex(std::size_t n) : n_(n) { nodes_.emplace_back(); }

  std::size_t dimension() const noexcept { return n_; }

  void insert(std::uint32_t id, const IntVector<T>& v) {
    std::int32_t node = 0;
    for (std::size_t j = 0; j < n_; ++j) {
      const int branch = branch_of(v[j]);
      std::int32_t next = nodes_[node].child[branch];
      if (next < 0) {
        next = static_cast<std::int32_t>(nodes_.size());
        nodes_.emplace_back();
        nodes_[node].child[branch] = next;
      }
      node = next;
    }
    if (nodes_[node].bucket < 0) {
      nodes_[node].bucket = static_cast<std::int32_t>(buckets_.size());
      buckets_.emplace_back();
    }
    buckets_[nodes_[node].bucket].push_back(id);
  }

  /// Some stored vector g with g ⊑ s, ignoring `skip`. Stops at the first hit.
  std::optional<std::uint32_t> find_any(
      const IntVector<T>& s, std::span<const IntVector<T>> store,
      std::optional<std::uint32_t> skip = std::nullopt) const {
    std::optional<std::uint32_t> found;
    search(s, store, [&](std::uint32_t id) {
      if (skip && id == *skip) return false;
      found = id;
      return true;
    });
    return found;
  }

  /// The smallest id g with g ⊑ s.
  std::optional<std::uint32_t> find_min_id(
      const IntVector<T>& s, std::span<const IntVector<T>> store) const {
    std::optional<std::uint32_t> found;
    search(s, store, [&](std::uint32_t id) {
      if (!found || id < *found) found = id;
      return false;
    });
    return found;
  }

  std::size_t bucket_count() const noexcept { return buckets_.size(); }

 private:
  struct Node {
    std::array<std::int32_t, 3> child{-1, -1, -1};
    std::int32_t bucket = -1;
  };

  static int branch_of(const T& x) { return x == 0 ? 0 : (x > 0 ? 1 : 2); }

  // Calls visit(id) for every stored g ⊑ s until visit returns true.
  template <class Visit>
  void search(const IntVector<T>& s, std::span<const IntVector<T>> store,
              Visit&& visit) const {
    if (s.size() != n_)
      throw DimensionError("reducer query has wrong length");
    struct Frame {
      std::int32_t node;
      std::size_t depth;
    };
    std::vector<Frame> stack;
    stack.push_back({0, 0});
    while (!stack.empty()) {
      const Frame f = stack.back();
      stack.pop_back();
      const Node& node = nodes_[f.node];
      if (f.depth == n_) {
        if (node.bucket < 0) continue;
        for (std::uint32_t id : buckets_[node.bucket]) {
          if (magnitude_fits(store[id], s) && visit(id)) return;
        }
        continue;
      }
      const int branch = branch_of(s[f.depth]);
      if (branch != 0 && node.child[branch] >= 0)
        stack.push_back({node.child[branch], f.depth + 1});
      if (node.child[0] >= 0) stack.push_back({node.child[0], f.depth + 1});
    }
  }

  // Signs are already compatible when this is called.
  static bool magnitude_fits(const IntVector<T>& g, const IntVector<T>& s) {
    for (std::size_t j = 0; j < g.size(); ++j) {
      const T& a = g[j];
      if (a > 0) {
        if (a > s[j]) return false;
      } else if (a < 0) {
        if (a < s[j]) return false;
      }
    }
    return true;
  }

  std::size_t n_;
  std::vector<Node> nodes_;
  std::vector<std::vector<std::uint32_t>> buckets_;
};

}  // namespace graver
