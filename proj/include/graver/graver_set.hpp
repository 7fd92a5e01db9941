#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <exception>
#include <mutex>
#include <optional>
#include <span>
#include <thread>
#include <unordered_map>
#include <vector>

#include "graver/reducer_index.hpp"
#include "graver/vector.hpp"

namespace graver {

/// Deduplicated vector set in insertion order, with a sign-pattern index
/// for ⊑-reducer lookups.
template <Scalar T>
class GraverSet {
 public:
  explicit GraverSet(std::size_t n) : n_(n), index_(n) {}

  std::size_t dimension() const noexcept { return n_; }
  std::size_t size() const noexcept { return vectors_.size(); }
  bool empty() const noexcept { return vectors_.empty(); }

  const IntVector<T>& operator[](std::size_t i) const { return vectors_[i]; }
  std::span<const IntVector<T>> vectors() const noexcept { return vectors_; }
  auto begin() const noexcept { return vectors_.begin(); }
  auto end() const noexcept { return vectors_.end(); }

  /// Appends v unless already present. Returns whether it was added.
  bool insert(const IntVector<T>& v) {
    if (v.size() != n_) throw DimensionError("GraverSet: wrong vector length");
    const auto id = static_cast<std::uint32_t>(vectors_.size());
    if (!lookup_.emplace(v, id).second) return false;
    vectors_.push_back(v);
    index_.insert(id, v);
    return true;
  }

  bool contains(const IntVector<T>& v) const { return lookup_.contains(v); }

  std::optional<std::uint32_t> id_of(const IntVector<T>& v) const {
    auto it = lookup_.find(v);
    if (it == lookup_.end()) return std::nullopt;
    return it->second;
  }

  /// Any element g with g ⊑ s (excluding `skip`).
  std::optional<std::uint32_t> find_reducer(
      const IntVector<T>& s,
      std::optional<std::uint32_t> skip = std::nullopt) const {
    return index_.find_any(s, vectors_, skip);
  }

  /// The earliest-inserted element g with g ⊑ s.
  std::optional<std::uint32_t> find_first_reducer(const IntVector<T>& s) const {
    return index_.find_min_id(s, vectors_);
  }

  bool closed_under_negation() const {
    return std::all_of(vectors_.begin(), vectors_.end(),
                       [&](const IntVector<T>& v) { return contains(-v); });
  }

  /// Elements sorted lexicographically.
  std::vector<IntVector<T>> sorted() const {
    std::vector<IntVector<T>> out(vectors_.begin(), vectors_.end());
    std::sort(out.begin(), out.end());
    return out;
  }

 private:
  std::size_t n_;
  std::vector<IntVector<T>> vectors_;
  std::unordered_map<IntVector<T>, std::uint32_t, IntVectorHash<T>> lookup_;
  ReducerIndex<T> index_;
};

struct EngineOptions {
  /// Worker threads for read-only batch work. Output never depends on it.
  unsigned threads = 1;
  /// Largest orbit (and group) the symmetric engines may enumerate.
  std::size_t orbit_cap = 10'000'000;
};

/// Optional run record used by tests to check the algorithms' invariants.
template <Scalar T>
struct EngineTrace {
  /// Vectors (or orbit representatives) added to G after the input set,
  /// in order of addition.
  std::vector<IntVector<T>> added;
  /// Norm key of every element popped from the pair queue (fast engines).
  std::vector<T> popped_norms;
  std::size_t pairs_enqueued = 0;
  std::size_t reductions = 0;
};

namespace detail {

// Runs body(i) for i in [0, count) on up to `threads` threads. body must
// only write to per-index state.
template <class Body>
void parallel_for(std::size_t count, unsigned threads, Body&& body) {
  if (threads <= 1 || count < 2 * static_cast<std::size_t>(threads)) {
    for (std::size_t i = 0; i < count; ++i) body(i);
    return;
  }
  const std::size_t workers = std::min<std::size_t>(threads, count);
  std::vector<std::thread> pool;
  pool.reserve(workers);
  std::exception_ptr failure;
  std::mutex failure_mutex;
  for (std::size_t w = 0; w < workers; ++w) {
    pool.emplace_back([&, w] {
      try {
        for (std::size_t i = w; i < count; i += workers) body(i);
      } catch (...) {
        std::lock_guard lock(failure_mutex);
        if (!failure) failure = std::current_exception();
      }
    });
  }
  for (auto& t : pool) t.join();
  if (failure) std::rethrow_exception(failure);
}

}  // namespace detail

}  // namespace graver
