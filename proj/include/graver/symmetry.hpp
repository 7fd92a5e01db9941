#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <deque>
#include <functional>
#include <optional>
#include <set>
#include <string>
#include <unordered_set>
#include <utility>
#include <vector>

#include "graver/errors.hpp"
#include "graver/lattice.hpp"
#include "graver/vector.hpp"

namespace graver {

/// A bijection on {0, ..., n-1}. Acts on vectors by (σv)_j = v_{σ(j)}.
/// Files use 1-based images; conversion happens in io.
class Permutation {
 public:
  Permutation() = default;

  explicit Permutation(std::vector<std::uint32_t> images)
      : images_(std::move(images)) {
    std::vector<bool> hit(images_.size(), false);
    for (auto i : images_) {
      if (i >= images_.size() || hit[i])
        throw ValidationError("permutation images are not a bijection");
      hit[i] = true;
    }
  }

  static Permutation identity(std::size_t n) {
    std::vector<std::uint32_t> im(n);
    for (std::size_t j = 0; j < n; ++j) im[j] = static_cast<std::uint32_t>(j);
    return Permutation(std::move(im));
  }

  std::size_t degree() const noexcept { return images_.size(); }
  std::uint32_t operator[](std::size_t j) const { return images_[j]; }
  const std::vector<std::uint32_t>& images() const noexcept { return images_; }

  bool is_identity() const {
    for (std::size_t j = 0; j < images_.size(); ++j)
      if (images_[j] != j) return false;
    return true;
  }

  Permutation inverse() const {
    std::vector<std::uint32_t> inv(images_.size());
    for (std::size_t j = 0; j < images_.size(); ++j)
      inv[images_[j]] = static_cast<std::uint32_t>(j);
    return Permutation(std::move(inv));
  }

  /// (a ∘ b)(j) = a(b(j)). apply(b, apply(a, v)) == apply(a ∘ b, v).
  friend Permutation compose(const Permutation& a, const Permutation& b) {
    if (a.degree() != b.degree())
      throw DimensionError("compose: permutation degree mismatch");
    std::vector<std::uint32_t> im(a.degree());
    for (std::size_t j = 0; j < im.size(); ++j) im[j] = a[b[j]];
    return Permutation(std::move(im));
  }

  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend bool operator<(const Permutation& a, const Permutation& b) {
    return a.images_ < b.images_;
  }

 private:
  std::vector<std::uint32_t> images_;
};

struct PermutationHash {
  std::size_t operator()(const Permutation& p) const noexcept {
    std::size_t h = 0xcbf29ce484222325ULL;
    for (auto x : p.images()) h = (h ^ x) * 0x100000001b3ULL;
    return h;
  }
};

/// Group generated by permutations of {0, ..., n-1}. An empty generator list
/// means the trivial group.
class PermutationGroup {
 public:
  PermutationGroup() = default;
  PermutationGroup(std::size_t n, std::vector<Permutation> generators)
      : n_(n), generators_(std::move(generators)) {
    for (const auto& g : generators_)
      if (g.degree() != n_)
        throw DimensionError("group generator of degree " +
                             std::to_string(g.degree()) + ", expected " +
                             std::to_string(n_));
  }

  static PermutationGroup trivial(std::size_t n) { return {n, {}}; }

  std::size_t degree() const noexcept { return n_; }
  const std::vector<Permutation>& generators() const noexcept {
    return generators_;
  }

 private:
  std::size_t n_ = 0;
  std::vector<Permutation> generators_;
};

inline constexpr std::size_t kDefaultOrbitCap = 10'000'000;

template <Scalar T>
IntVector<T> apply(const Permutation& sigma, const IntVector<T>& v) {
  if (sigma.degree() != v.size())
    throw DimensionError("apply: permutation degree " +
                         std::to_string(sigma.degree()) + " vs vector length " +
                         std::to_string(v.size()));
  IntVector<T> w(v.size());
  for (std::size_t j = 0; j < v.size(); ++j) w[j] = v[sigma[j]];
  return w;
}

/// Orbit of v in breadth-first order from v.
template <Scalar T>
std::vector<IntVector<T>> orbit(const IntVector<T>& v,
                                const PermutationGroup& group,
                                std::size_t cap = kDefaultOrbitCap) {
  if (group.degree() != v.size())
    throw DimensionError("orbit: group degree does not match vector length");
  std::unordered_set<IntVector<T>, IntVectorHash<T>> seen{v};
  std::vector<IntVector<T>> out{v};
  for (std::size_t head = 0; head < out.size(); ++head) {
    for (const auto& g : group.generators()) {
      IntVector<T> w = apply(g, out[head]);
      if (seen.insert(w).second) {
        if (out.size() >= cap)
          throw ResourceError("orbit exceeds the cap of " + std::to_string(cap) +
                              " elements");
        out.push_back(std::move(w));
      }
    }
  }
  return out;
}

template <Scalar T>
struct OrbitRecord {
  IntVector<T> canonical;  ///< lexicographically smallest member
  std::size_t size = 0;
  std::optional<T> min_prefix_norm;  ///< set when a prefix length is given
};

template <Scalar T>
OrbitRecord<T> canonical_rep(const IntVector<T>& v, const PermutationGroup& group,
                             std::optional<std::size_t> prefix = std::nullopt,
                             std::size_t cap = kDefaultOrbitCap) {
  const auto members = orbit(v, group, cap);
  OrbitRecord<T> rec{*std::min_element(members.begin(), members.end()),
                     members.size(), std::nullopt};
  if (prefix) {
    T best = prefix_norm(members.front(), *prefix);
    for (const auto& w : members) best = std::min(best, prefix_norm(w, *prefix));
    rec.min_prefix_norm = best;
  }
  return rec;
}

/// Every element of the group, starting with the identity, in BFS order
/// over the generators.
inline std::vector<Permutation> group_elements(const PermutationGroup& group,
                                               std::size_t cap = kDefaultOrbitCap) {
  std::unordered_set<Permutation, PermutationHash> seen;
  std::vector<Permutation> out{Permutation::identity(group.degree())};
  seen.insert(out.front());
  for (std::size_t head = 0; head < out.size(); ++head) {
    for (const auto& g : group.generators()) {
      Permutation p = compose(g, out[head]);
      if (seen.insert(p).second) {
        if (out.size() >= cap)
          throw ResourceError("group order exceeds the cap of " +
                              std::to_string(cap));
        out.push_back(std::move(p));
      }
    }
  }
  return out;
}

inline std::size_t group_order(const PermutationGroup& group,
                               std::size_t cap = kDefaultOrbitCap) {
  return group_elements(group, cap).size();
}

/// True iff every group generator maps every lattice generator into the
/// lattice. Group and basis must use the same coordinates.
template <Scalar T>
bool verify_invariance(const PermutationGroup& group,
                       const LatticeBasis<T>& basis) {
  if (group.degree() != basis.ambient_dimension())
    throw DimensionError("verify_invariance: group degree does not match "
                         "lattice dimension");
  for (const auto& sigma : group.generators())
    for (const auto& g : basis.generators())
      if (!member(apply(sigma, g), basis)) return false;
  return true;
}

/// The group expressed in the working coordinates of `basis`.
template <Scalar T>
PermutationGroup to_working(const PermutationGroup& group,
                            const LatticeBasis<T>& basis) {
  const auto& p = basis.column_perm();
  const std::size_t n = p.size();
  if (group.degree() != n)
    throw DimensionError("group degree does not match lattice dimension");
  std::vector<std::uint32_t> pinv(n);
  for (std::size_t j = 0; j < n; ++j) pinv[p[j]] = static_cast<std::uint32_t>(j);
  std::vector<Permutation> gens;
  for (const auto& sigma : group.generators()) {
    std::vector<std::uint32_t> im(n);
    for (std::size_t j = 0; j < n; ++j) im[j] = pinv[sigma[p[j]]];
    gens.emplace_back(std::move(im));
  }
  return PermutationGroup(n, std::move(gens));
}

/// Orbit computations against the explicit element list of a group.
///
/// Used in the engines' hot loop: one pass over the elements gives the
/// lexicographically smallest orbit member (with early exit per element) and
/// the orbit norm min ‖π(σv)‖₁ over the distinct images of the first
/// `prefix` coordinates.
template <Scalar T>
class Canonicalizer {
 public:
  Canonicalizer(const PermutationGroup& group, std::size_t prefix,
                std::size_t cap = kDefaultOrbitCap)
      : n_(group.degree()), prefix_(prefix) {
    if (prefix_ > n_) throw DimensionError("Canonicalizer: prefix too long");
    const auto elements = group_elements(group, cap);
    order_ = elements.size();
    images_.reserve(order_ * n_);
    std::set<std::vector<std::uint32_t>> prefix_sets;
    for (const auto& p : elements) {
      images_.insert(images_.end(), p.images().begin(), p.images().end());
      std::vector<std::uint32_t> s(p.images().begin(),
                                   p.images().begin() + prefix_);
      std::sort(s.begin(), s.end());
      prefix_sets.insert(std::move(s));
    }
    for (const auto& s : prefix_sets)
      prefix_images_.insert(prefix_images_.end(), s.begin(), s.end());
    prefix_set_count_ = prefix_sets.size();
  }

  std::size_t group_order() const noexcept { return order_; }
  std::size_t degree() const noexcept { return n_; }

  IntVector<T> canonical(const IntVector<T>& v) const {
    check(v);
    IntVector<T> best = v;
    for (std::size_t e = 1; e < order_; ++e) {
      const std::uint32_t* p = images_.data() + e * n_;
      std::size_t k = 0;
      while (k < n_ && v[p[k]] == best[k]) ++k;
      if (k < n_ && v[p[k]] < best[k])
        for (; k < n_; ++k) best[k] = v[p[k]];
    }
    return best;
  }

  /// min over the orbit of the L1 norm of the first `prefix` entries.
  T orbit_norm(const IntVector<T>& v) const {
    check(v);
    std::vector<T> a(n_);
    for (std::size_t j = 0; j < n_; ++j) a[j] = ScalarOps<T>::abs(v[j]);
    std::optional<T> best;
    for (std::size_t s = 0; s < prefix_set_count_; ++s) {
      const std::uint32_t* idx = prefix_images_.data() + s * prefix_;
      T sum(0);
      for (std::size_t k = 0; k < prefix_; ++k)
        sum = ScalarOps<T>::add(sum, a[idx[k]]);
      if (!best || sum < *best) best = sum;
    }
    return best.value_or(T(0));
  }

  /// Lexicographically smallest member among those attaining the orbit norm.
  IntVector<T> min_norm_member(const IntVector<T>& v) const {
    check(v);
    std::optional<T> best_norm;
    IntVector<T> best;
    IntVector<T> w(n_);
    for (std::size_t e = 0; e < order_; ++e) {
      const std::uint32_t* p = images_.data() + e * n_;
      T norm(0);
      for (std::size_t k = 0; k < prefix_; ++k)
        norm = ScalarOps<T>::add(norm, ScalarOps<T>::abs(v[p[k]]));
      if (best_norm && norm > *best_norm) continue;
      for (std::size_t k = 0; k < n_; ++k) w[k] = v[p[k]];
      if (!best_norm || norm < *best_norm || w < best) {
        best_norm = norm;
        best = w;
      }
    }
    return best;
  }

  /// Distinct orbit members in element-list order (v first).
  std::vector<IntVector<T>> orbit(const IntVector<T>& v) const {
    check(v);
    std::unordered_set<IntVector<T>, IntVectorHash<T>> seen;
    std::vector<IntVector<T>> out;
    IntVector<T> w(n_);
    for (std::size_t e = 0; e < order_; ++e) {
      const std::uint32_t* p = images_.data() + e * n_;
      for (std::size_t k = 0; k < n_; ++k) w[k] = v[p[k]];
      if (seen.insert(w).second) out.push_back(w);
    }
    return out;
  }

 private:
  void check(const IntVector<T>& v) const {
    if (v.size() != n_)
      throw DimensionError("Canonicalizer: vector length does not match "
                           "group degree");
  }

  std::size_t n_;
  std::size_t prefix_;
  std::size_t order_ = 0;
  std::vector<std::uint32_t> images_;
  std::vector<std::uint32_t> prefix_images_;
  std::size_t prefix_set_count_ = 0;
};

}  // namespace graver
