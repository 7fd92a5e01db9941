#pragma once

#include <cstddef>
#include <span>
#include <utility>
#include <vector>

#include "graver/graver_set.hpp"
#include "graver/symmetry.hpp"

namespace graver {

/// Result of a symmetric completion: G = orb(G^sym) and G^sym itself.
template <Scalar T>
struct SymmetricResult {
  GraverSet<T> expanded;
  std::vector<IntVector<T>> representatives;
};

namespace detail {

// G^sym together with its materialized orbit expansion. Orbits are stored
// contiguously in the expansion, in order of their representatives.
template <Scalar T>
class OrbitStore {
 public:
  OrbitStore(std::size_t n, const Canonicalizer<T>& canon)
      : canon_(canon), expanded_(n) {}

  const GraverSet<T>& expanded() const noexcept { return expanded_; }
  const std::vector<IntVector<T>>& representatives() const noexcept {
    return reps_;
  }
  std::size_t orbit_size(std::size_t i) const {
    return ranges_[i].second - ranges_[i].first;
  }
  std::span<const IntVector<T>> orbit_of(std::size_t i) const {
    return expanded_.vectors().subspan(ranges_[i].first, orbit_size(i));
  }

  /// Adds the orbit of `rep` (a canonical form). Returns false if that orbit
  /// is already present.
  bool add(const IntVector<T>& rep) {
    if (expanded_.contains(rep)) return false;
    const std::size_t first = expanded_.size();
    for (const auto& w : canon_.orbit(rep)) expanded_.insert(w);
    reps_.push_back(rep);
    ranges_.emplace_back(first, expanded_.size());
    return true;
  }

  /// Sums whose orbits are exactly the orbits of {f' + g : f' ∈ orb(f),
  /// g ∈ orb(reps[i])} with f the newest representative. Uses whichever of
  /// the two orbits is smaller; ties go to the orbit of reps[i].
  std::vector<IntVector<T>> pair_sums(std::size_t i) const {
    const std::size_t last = reps_.size() - 1;
    const IntVector<T>& f = reps_[last];
    std::vector<IntVector<T>> sums;
    if (orbit_size(last) < orbit_size(i)) {
      const IntVector<T>& g = reps_[i];
      sums.reserve(orbit_size(last));
      for (const auto& fp : orbit_of(last)) sums.push_back(fp + g);
    } else {
      sums.reserve(orbit_size(i));
      for (const auto& gp : orbit_of(i)) sums.push_back(f + gp);
    }
    return sums;
  }

 private:
  const Canonicalizer<T>& canon_;
  GraverSet<T> expanded_;
  std::vector<IntVector<T>> reps_;
  std::vector<std::pair<std::size_t, std::size_t>> ranges_;
};

}  // namespace detail
}  // namespace graver
