#pragma once

#include <algorithm>
#include <cstddef>
#include <string>
#include <vector>

#include "graver/errors.hpp"
#include "graver/graver_set.hpp"
#include "graver/lattice.hpp"
#include "graver/vector.hpp"

// Brute-force certification, kept independent of the completion engines:
// only IntVector, ⊑ and lattice membership are used.

namespace graver {

inline constexpr std::size_t kDefaultBoxCap = 100'000'000;

namespace detail {

inline std::size_t saturating_size(const BigInt& x) {
  if (x > BigInt(static_cast<std::size_t>(-1))) return static_cast<std::size_t>(-1);
  return static_cast<std::size_t>(x);
}

inline std::size_t saturating_mul(std::size_t a, std::size_t b) {
  if (a != 0 && b > static_cast<std::size_t>(-1) / a)
    return static_cast<std::size_t>(-1);
  return a * b;
}

// Odometer over the integer box lo[i] <= x[i] <= hi[i]. visit returns true
// to stop early; the function returns whether it stopped early.
template <Scalar T, class Visit>
bool for_each_box_point(const std::vector<T>& lo, const std::vector<T>& hi,
                        Visit&& visit) {
  std::vector<T> x = lo;
  const std::size_t k = x.size();
  for (;;) {
    if (visit(x)) return true;
    std::size_t i = 0;
    while (i < k) {
      if (x[i] < hi[i]) {
        x[i] = ScalarOps<T>::add(x[i], T(1));
        break;
      }
      x[i] = lo[i];
      ++i;
    }
    if (i == k) return false;
  }
}

}  // namespace detail

/// True iff v is a ⊑-minimal nonzero element of the lattice.
///
/// Every u ⊑ v lies in the box between 0 and v. Points of the box are
/// enumerated on the pivot coordinates; the remaining coordinates of a
/// lattice point are determined by those, so each box point yields at most
/// one candidate u, which is checked for u ⊑ v.
template <Scalar T>
bool is_graver_element(const IntVector<T>& v, const LatticeBasis<T>& basis,
                       std::size_t box_cap = kDefaultBoxCap) {
  if (v.is_zero()) throw DomainError("is_graver_element: zero vector");
  if (!member(v, basis))
    throw MembershipError("is_graver_element: vector is not in the lattice");
  const auto& pivots = basis.pivot_columns();
  std::vector<T> lo, hi;
  std::size_t volume = 1;
  for (auto col : pivots) {
    const T& x = v[col];
    lo.push_back(x < 0 ? x : T(0));
    hi.push_back(x > 0 ? x : T(0));
    volume = detail::saturating_mul(
        volume, detail::saturating_size(BigInt(ScalarOps<T>::abs(x)) + 1));
    if (volume > box_cap)
      throw ResourceError("conformal box exceeds the cap of " +
                          std::to_string(box_cap) + " points");
  }
  const bool witness = detail::for_each_box_point(lo, hi, [&](const std::vector<T>& w) {
    auto c = basis.solve_pivot_coefficients(w);
    if (!c) return false;
    const IntVector<T> u = basis.combine(*c);
    return !u.is_zero() && u != v && conforms(u, v);
  });
  return !witness;
}

/// All Graver elements with max-norm at most `bound`, by exhaustive search
/// over lattice points with pivot coordinates in [-bound, bound].
template <Scalar T>
GraverSet<T> brute_force_graver(const LatticeBasis<T>& basis, const T& bound,
                                std::size_t box_cap = kDefaultBoxCap) {
  const std::size_t n = basis.ambient_dimension();
  const std::size_t d = basis.rank();
  GraverSet<T> out(n);
  if (bound <= 0 || d == 0) return out;
  const std::size_t side =
      detail::saturating_size(BigInt(bound) * 2 + 1);
  std::size_t volume = 1;
  for (std::size_t i = 0; i < d; ++i) {
    volume = detail::saturating_mul(volume, side);
    if (volume > box_cap)
      throw ResourceError("brute-force search space exceeds the cap of " +
                          std::to_string(box_cap) + " points");
  }
  std::vector<T> lo(d, ScalarOps<T>::neg(bound)), hi(d, bound);
  std::vector<IntVector<T>> found;
  detail::for_each_box_point(lo, hi, [&](const std::vector<T>& w) {
    auto c = basis.solve_pivot_coefficients(w);
    if (!c) return false;
    IntVector<T> v = basis.combine(*c);
    if (v.is_zero() || max_norm(v) > bound) return false;
    if (is_graver_element(v, basis, box_cap)) found.push_back(std::move(v));
    return false;
  });
  std::sort(found.begin(), found.end());
  for (const auto& v : found) out.insert(v);
  return out;
}

}  // namespace graver
