#pragma once

#include <cstddef>
#include <unordered_set>
#include <vector>

#include "graver/fast.hpp"
#include "graver/lattice.hpp"
#include "graver/orbit_store.hpp"
#include "graver/pair_queue.hpp"
#include "graver/symmetry.hpp"

namespace graver {

/// Norm-ordered completion over orbit representatives.
///
/// Pairs are keyed by (orbit norm, canonical form), where the orbit norm is
/// the smallest prefix norm over the orbit. There is no orthant filter. The
/// group must act on the working coordinates of `basis` and leave the
/// lattice invariant. The result's expansion is exactly the Graver basis.
template <Scalar T>
SymmetricResult<T> sym_fast_graver(const InputSetFbar<T>& fbar,
                                   const PermutationGroup& group,
                                   const LatticeBasis<T>& basis,
                                   const EngineOptions& options = {},
                                   EngineTrace<T>* trace = nullptr) {
  if (!basis.pivoted())
    throw DomainError("sym_fast_graver requires a pivoted basis");
  const std::size_t n = basis.ambient_dimension();
  if (group.degree() != n)
    throw DimensionError("sym_fast_graver: group degree does not match");
  const Canonicalizer<T> canon(group, basis.rank(), options.orbit_cap);
  detail::OrbitStore<T> store(n, canon);
  NormPairQueue<T> C;

  // rep must be a canonical form.
  auto add_rep = [&](const IntVector<T>& rep) {
    if (!store.add(rep)) return;
    for (std::size_t i = 0; i < store.representatives().size(); ++i) {
      auto sums = store.pair_sums(i);
      std::vector<IntVector<T>> keys(sums.size());
      detail::parallel_for(sums.size(), options.threads, [&](std::size_t k) {
        if (!sums[k].is_zero()) keys[k] = canon.canonical(sums[k]);
      });
      // Norms are computed only for canonical forms not seen before.
      std::vector<std::size_t> fresh;
      std::unordered_set<IntVector<T>, IntVectorHash<T>> batch;
      for (std::size_t k = 0; k < keys.size(); ++k) {
        if (keys[k].empty() || C.was_enqueued(keys[k])) continue;
        if (batch.insert(keys[k]).second) fresh.push_back(k);
      }
      std::vector<T> norms(fresh.size());
      detail::parallel_for(fresh.size(), options.threads, [&](std::size_t k) {
        norms[k] = canon.orbit_norm(keys[fresh[k]]);
      });
      for (std::size_t k = 0; k < fresh.size(); ++k)
        C.push(std::move(keys[fresh[k]]), std::move(norms[k]));
    }
  };

  for (const auto& f : fbar.vectors) {
    if (f.size() != n) throw DimensionError("sym_fast_graver: wrong length");
    if (!f.is_zero()) add_rep(canon.canonical(f));
  }

  while (!C.empty()) {
    auto entry = C.pop();
    if (trace) {
      trace->popped_norms.push_back(entry.norm);
      ++trace->reductions;
    }
    // Tested on the canonical form; every orbit member gives the same answer.
    if (store.expanded().find_reducer(entry.vector)) continue;
    if (trace) trace->added.push_back(entry.vector);
    add_rep(entry.vector);
  }
  if (trace) trace->pairs_enqueued = C.total_enqueued();
  return {store.expanded(), store.representatives()};
}

}  // namespace graver
