#pragma once

#include <cstddef>
#include <deque>
#include <set>
#include <unordered_set>
#include <utility>
#include <vector>

#include "graver/vector.hpp"

namespace graver {

/// Critical-pair set with FIFO selection. Zero and previously enqueued
/// vectors are dropped on push.
template <Scalar T>
class FifoPairQueue {
 public:
  bool push(IntVector<T> v) {
    if (v.is_zero()) return false;
    if (!seen_.insert(v).second) return false;
    pending_.push_back(std::move(v));
    return true;
  }

  bool empty() const noexcept { return pending_.empty(); }
  std::size_t size() const noexcept { return pending_.size(); }
  std::size_t total_enqueued() const noexcept { return seen_.size(); }

  IntVector<T> pop() {
    IntVector<T> v = std::move(pending_.front());
    pending_.pop_front();
    return v;
  }

 private:
  std::deque<IntVector<T>> pending_;
  std::unordered_set<IntVector<T>, IntVectorHash<T>> seen_;
};

/// Critical-pair set ordered by (norm, lexicographic vector). Zero and
/// previously enqueued vectors are dropped on push.
template <Scalar T>
class NormPairQueue {
 public:
  struct Entry {
    T norm;
    IntVector<T> vector;

    friend bool operator<(const Entry& a, const Entry& b) {
      if (a.norm != b.norm) return a.norm < b.norm;
      return a.vector < b.vector;
    }
  };

  bool push(IntVector<T> v, T norm) {
    if (v.is_zero()) return false;
    if (!seen_.insert(v).second) return false;
    pending_.insert(Entry{std::move(norm), std::move(v)});
    return true;
  }

  bool was_enqueued(const IntVector<T>& v) const { return seen_.contains(v); }

  bool empty() const noexcept { return pending_.empty(); }
  std::size_t size() const noexcept { return pending_.size(); }
  std::size_t total_enqueued() const noexcept { return seen_.size(); }

  Entry pop() {
    auto node = pending_.extract(pending_.begin());
    return std::move(node.value());
  }

  /// Removes and returns every entry sharing the current smallest norm, in
  /// lexicographic order.
  std::vector<Entry> pop_level() {
    std::vector<Entry> level;
    if (pending_.empty()) return level;
    const T norm = pending_.begin()->norm;
    while (!pending_.empty() && pending_.begin()->norm == norm)
      level.push_back(pop());
    return level;
  }

 private:
  std::set<Entry> pending_;
  std::unordered_set<IntVector<T>, IntVectorHash<T>> seen_;
};

}  // namespace graver
