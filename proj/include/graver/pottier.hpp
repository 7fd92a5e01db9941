#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "graver/graver_set.hpp"
#include "graver/pair_queue.hpp"
#include "graver/vector.hpp"

namespace graver {

/// Iterated normal form: while some g in G conforms to s, subtract it. The
/// earliest-inserted conforming g is used at each step. If `chain` is given,
/// the ids of the subtracted elements are appended to it.
template <Scalar T>
IntVector<T> normal_form(IntVector<T> s, const GraverSet<T>& G,
                         std::vector<std::uint32_t>* chain = nullptr) {
  if (s.size() != G.dimension())
    throw DimensionError("normal_form: wrong vector length");
  while (!s.is_zero()) {
    auto id = G.find_first_reducer(s);
    if (!id) break;
    if (G[*id].is_zero())
      throw DomainError("normal_form: reducer set contains the zero vector");
    s -= G[*id];
    if (chain) chain->push_back(*id);
  }
  return s;
}

/// Pottier's completion. Input: a generating set F of a lattice in Z^n.
/// Output: a set G containing the Graver basis; extract_minimal(G) is the
/// Graver basis itself.
template <Scalar T>
GraverSet<T> pottier_graver(std::span<const IntVector<T>> F, std::size_t n,
                            EngineTrace<T>* trace = nullptr) {
  GraverSet<T> G(n);
  FifoPairQueue<T> C;

  auto add = [&](const IntVector<T>& f) {
    if (f.is_zero() || !G.insert(f)) return;
    // G already contains f here, so f + f is among the pairs.
    for (std::size_t i = 0; i < G.size(); ++i) C.push(f + G[i]);
  };

  for (const auto& f : F) {
    if (f.size() != n) throw DimensionError("pottier_graver: wrong length");
    add(f);
    add(-f);
  }

  while (!C.empty()) {
    IntVector<T> f = normal_form(C.pop(), G);
    if (trace) ++trace->reductions;
    if (!f.is_zero()) {
      if (trace) trace->added.push_back(f);
      add(f);
    }
  }
  if (trace) trace->pairs_enqueued = C.total_enqueued();
  return G;
}

/// The ⊑-minimal nonzero elements of G, in G's order.
template <Scalar T>
GraverSet<T> extract_minimal(const GraverSet<T>& G) {
  if (G.contains(IntVector<T>(G.dimension()))) {
    GraverSet<T> nonzero(G.dimension());
    for (const auto& v : G)
      if (!v.is_zero()) nonzero.insert(v);
    return extract_minimal(nonzero);
  }
  GraverSet<T> out(G.dimension());
  for (std::size_t i = 0; i < G.size(); ++i) {
    const auto& v = G[i];
    if (v.is_zero()) continue;
    if (!G.find_reducer(v, static_cast<std::uint32_t>(i))) out.insert(v);
  }
  return out;
}

}  // namespace graver
