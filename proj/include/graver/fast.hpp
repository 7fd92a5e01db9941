#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "graver/graver_set.hpp"
#include "graver/lattice.hpp"
#include "graver/pair_queue.hpp"

namespace graver {

/// One-shot normal form: 0 if some g in G conforms to s, otherwise s.
/// Only meaningful inside the norm-ordered completions.
template <Scalar T>
IntVector<T> fast_normal_form(const IntVector<T>& s, const GraverSet<T>& G) {
  if (s.size() != G.dimension())
    throw DimensionError("fast_normal_form: wrong vector length");
  if (G.find_reducer(s)) return IntVector<T>(s.size());
  return s;
}

/// Norm-ordered completion from the input set F̄ of a pivoted lattice.
///
/// Pairs are formed only when the projections lie in a common closed
/// orthant, and the pair of smallest prefix norm is reduced first. Every
/// vector added to G is ⊑-minimal, so the result is exactly the Graver basis.
///
/// Pairs of equal norm are reduced as one batch (in parallel when
/// options.threads > 1) and inserted in lexicographic order.
template <Scalar T>
GraverSet<T> fast_graver(const InputSetFbar<T>& fbar,
                         const LatticeBasis<T>& basis,
                         const EngineOptions& options = {},
                         EngineTrace<T>* trace = nullptr) {
  if (!basis.pivoted()) throw DomainError("fast_graver requires a pivoted basis");
  const std::size_t n = basis.ambient_dimension();
  const std::size_t d = basis.rank();
  GraverSet<T> G(n);
  NormPairQueue<T> C;

  auto add = [&](const IntVector<T>& f) {
    if (f.is_zero() || !G.insert(f)) return;
    for (std::size_t i = 0; i < G.size(); ++i) {
      const auto& g = G[i];
      if (!same_orthant_prefix(f, g, d)) continue;
      IntVector<T> sum = f + g;
      T norm = prefix_norm(sum, d);
      C.push(std::move(sum), std::move(norm));
    }
  };

  for (const auto& f : fbar.vectors) {
    if (f.size() != n) throw DimensionError("fast_graver: wrong length");
    add(f);
  }

  while (!C.empty()) {
    auto level = C.pop_level();
    std::vector<char> reducible(level.size(), 0);
    detail::parallel_for(level.size(), options.threads, [&](std::size_t k) {
      reducible[k] = G.find_reducer(level[k].vector).has_value() ? 1 : 0;
    });
    for (std::size_t k = 0; k < level.size(); ++k) {
      if (trace) {
        trace->popped_norms.push_back(level[k].norm);
        ++trace->reductions;
      }
      if (reducible[k]) continue;
      if (trace) trace->added.push_back(level[k].vector);
      add(level[k].vector);
    }
  }
  if (trace) trace->pairs_enqueued = C.total_enqueued();
  return G;
}

}  // namespace graver
