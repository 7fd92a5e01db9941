#pragma once

#include <algorithm>
#include <cstddef>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "graver/errors.hpp"
#include "graver/fast.hpp"
#include "graver/lattice.hpp"
#include "graver/pottier.hpp"
#include "graver/sym_fast.hpp"
#include "graver/sym_pottier.hpp"
#include "graver/symmetry.hpp"

namespace graver {

enum class Algorithm { pottier, fast };

inline const char* algorithm_name(Algorithm a) {
  return a == Algorithm::pottier ? "pottier" : "fast";
}

/// Orbits of a sign-closed vector set under G x {±1}.
template <Scalar T>
struct OrbitSummary {
  /// canonical_sign of the lex-smallest member of orb(v) ∪ orb(-v), sorted.
  std::vector<IntVector<T>> representatives;
  /// Number of vectors up to sign in each orbit, parallel to representatives.
  std::vector<std::size_t> orbit_sizes;
  /// Number of orbits under G alone on the signed set.
  std::size_t signed_orbits = 0;
  std::size_t group_order = 1;
};

/// Groups `vectors` (taken up to sign) into orbits. Throws ValidationError
/// if the set is not a union of orbits.
template <Scalar T>
OrbitSummary<T> summarize_orbits(const std::vector<IntVector<T>>& vectors,
                                 const PermutationGroup& group,
                                 std::size_t cap = kDefaultOrbitCap) {
  const Canonicalizer<T> canon(group, 0, cap);
  std::set<IntVector<T>> pending;
  for (const auto& v : vectors) {
    if (v.size() != group.degree())
      throw DimensionError("vector length does not match group degree");
    if (!v.is_zero()) pending.insert(canonical_sign(v));
  }
  OrbitSummary<T> out;
  out.group_order = canon.group_order();
  std::vector<std::pair<IntVector<T>, std::size_t>> found;
  while (!pending.empty()) {
    const IntVector<T> v = *pending.begin();
    std::set<IntVector<T>> members;
    bool contains_negative = false;
    for (const auto& w : canon.orbit(v)) {
      members.insert(canonical_sign(w));
      if (w == -v) contains_negative = true;
    }
    for (const auto& w : members) {
      if (pending.erase(w) == 0)
        throw ValidationError("vector set is not closed under the group");
    }
    out.signed_orbits += contains_negative ? 1 : 2;
    const IntVector<T> a = canon.canonical(v), b = canon.canonical(-v);
    found.emplace_back(canonical_sign(std::min(a, b)), members.size());
  }
  std::sort(found.begin(), found.end());
  for (auto& [rep, size] : found) {
    out.representatives.push_back(std::move(rep));
    out.orbit_sizes.push_back(size);
  }
  return out;
}

template <Scalar T>
struct GraverResult {
  std::size_t dimension = 0;
  /// Graver basis with both signs, original coordinates, sorted.
  std::vector<IntVector<T>> signed_basis;
  /// One vector per ± pair, first nonzero entry positive, sorted.
  std::vector<IntVector<T>> up_to_sign;
  /// Present when a group was supplied.
  std::optional<OrbitSummary<T>> orbits;
};

namespace detail {

template <Scalar T>
GraverResult<T> finish_result(const GraverSet<T>& G, std::size_t n,
                              const LatticeBasis<T>* pivoted) {
  GraverResult<T> out;
  out.dimension = n;
  std::set<IntVector<T>> both, half;
  for (const auto& v : G) {
    if (v.is_zero()) continue;
    IntVector<T> w = pivoted ? pivoted->to_original(v) : v;
    half.insert(canonical_sign(w));
    both.insert(-w);
    both.insert(std::move(w));
  }
  out.signed_basis.assign(both.begin(), both.end());
  out.up_to_sign.assign(half.begin(), half.end());
  return out;
}

}  // namespace detail

/// Graver basis of `lattice` (original coordinates). When `group` is given
/// it must leave the lattice invariant; the symmetric engines are used and
/// the orbit summary is filled in.
template <Scalar T>
GraverResult<T> compute_graver(const LatticeBasis<T>& lattice, Algorithm algorithm,
                               const PermutationGroup* group = nullptr,
                               const EngineOptions& options = {}) {
  const std::size_t n = lattice.ambient_dimension();
  if (group) {
    if (group->degree() != n)
      throw DimensionError("symmetry degree " + std::to_string(group->degree()) +
                           " does not match dimension " + std::to_string(n));
    if (!verify_invariance(*group, lattice))
      throw ValidationError("the symmetry group does not preserve the lattice");
  }
  GraverResult<T> out;
  if (lattice.rank() == 0) {
    out.dimension = n;
  } else if (algorithm == Algorithm::pottier) {
    const auto& gens = lattice.generators();
    if (group) {
      auto r = sym_pottier<T>(gens, *group, options);
      out = detail::finish_result(extract_minimal(r.expanded), n,
                                  static_cast<const LatticeBasis<T>*>(nullptr));
    } else {
      out = detail::finish_result(extract_minimal(pottier_graver<T>(gens, n)), n,
                                  static_cast<const LatticeBasis<T>*>(nullptr));
    }
  } else {
    const LatticeBasis<T> working = preprocess(lattice);
    const InputSetFbar<T> fbar = minimal_projected_generators(working);
    if (group) {
      const PermutationGroup wg = to_working(*group, working);
      auto r = sym_fast_graver(fbar, wg, working, options);
      out = detail::finish_result(r.expanded, n, &working);
    } else {
      out = detail::finish_result(fast_graver(fbar, working, options), n, &working);
    }
  }
  if (group) out.orbits = summarize_orbits(out.up_to_sign, *group, options.orbit_cap);
  return out;
}

}  // namespace graver
