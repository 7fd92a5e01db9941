#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <algorithm>
#include <cstdint>
#include <optional>
#include <random>
#include <set>
#include <vector>

#include "graver/graver.hpp"

namespace testing_support {

using graver::BigInt;
using graver::IntVector;
using graver::LatticeBasis;
using graver::PermutationGroup;
using V = IntVector<std::int64_t>;
using Rational = boost::multiprecision::cpp_rational;

inline V vec(std::initializer_list<std::int64_t> xs) {
  return V(std::vector<std::int64_t>(xs));
}

// The 15 Graver elements of 3x3 tables, one of each sign pair, in the
// order and signs of the published list.
inline std::vector<V> known_3x3_graver() {
  return {
      vec({1, -1, 0, -1, 1, 0, 0, 0, 0}),  vec({0, 0, 0, 1, 0, -1, -1, 0, 1}),
      vec({1, 0, -1, -1, 0, 1, 0, 0, 0}),  vec({1, -1, 0, 0, 0, 0, -1, 1, 0}),
      vec({0, 0, 0, 1, -1, 0, -1, 1, 0}),  vec({1, -1, 0, -1, 0, 1, 0, 1, -1}),
      vec({0, -1, 1, 1, 0, -1, -1, 1, 0}), vec({1, -1, 0, 0, 1, -1, -1, 0, 1}),
      vec({1, 0, -1, 0, 0, 0, -1, 0, 1}),  vec({0, -1, 1, 0, 1, -1, 0, 0, 0}),
      vec({0, 1, -1, 1, -1, 0, -1, 0, 1}), vec({0, 0, 0, 0, 1, -1, 0, -1, 1}),
      vec({0, -1, 1, 0, 0, 0, 0, 1, -1}),  vec({1, 0, -1, 0, -1, 1, -1, 1, 0}),
      vec({1, 0, -1, -1, 1, 0, 0, -1, 1}),
  };
}

inline std::vector<V> known_3x3_representatives() {
  return {vec({1, -1, 0, -1, 1, 0, 0, 0, 0}), vec({1, -1, 0, -1, 0, 1, 0, 1, -1})};
}

// Row and column sums of 3x3 tables, written out by hand.
inline graver::IntMatrix<std::int64_t> reference_a3x3() {
  return graver::IntMatrix<std::int64_t>(
      {vec({1, 1, 1, 0, 0, 0, 0, 0, 0}), vec({0, 0, 0, 1, 1, 1, 0, 0, 0}),
       vec({0, 0, 0, 0, 0, 0, 1, 1, 1}), vec({1, 0, 0, 1, 0, 0, 1, 0, 0}),
       vec({0, 1, 0, 0, 1, 0, 0, 1, 0}), vec({0, 0, 1, 0, 0, 1, 0, 0, 1})},
      9);
}

template <class Range>
std::set<V> up_to_sign(const Range& vs) {
  std::set<V> out;
  for (const auto& v : vs)
    if (!v.is_zero()) out.insert(graver::canonical_sign(v));
  return out;
}

// The published list with canonical_sign applied (some listed vectors start
// with a negative entry).
inline std::set<V> known_3x3_up_to_sign() { return up_to_sign(known_3x3_graver()); }

// Rank over Q by Gaussian elimination on cpp_rational.
inline std::size_t rational_rank(const std::vector<V>& rows) {
  if (rows.empty()) return 0;
  const std::size_t n = rows.front().size();
  std::vector<std::vector<Rational>> m;
  for (const auto& r : rows) {
    std::vector<Rational> row;
    for (auto x : r) row.emplace_back(x);
    m.push_back(std::move(row));
  }
  std::size_t rank = 0;
  for (std::size_t c = 0; c < n && rank < m.size(); ++c) {
    std::size_t p = rank;
    while (p < m.size() && m[p][c] == 0) ++p;
    if (p == m.size()) continue;
    std::swap(m[p], m[rank]);
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (i == rank || m[i][c] == 0) continue;
      const Rational f = m[i][c] / m[rank][c];
      for (std::size_t j = 0; j < n; ++j) m[i][j] -= f * m[rank][j];
    }
    ++rank;
  }
  return rank;
}

// Lattice membership for a linearly independent generator list by solving
// over Q and testing integrality of the coefficients.
class NaiveLattice {
 public:
  explicit NaiveLattice(std::vector<V> basis) : basis_(std::move(basis)) {}

  bool contains(const V& v) const {
    const std::size_t d = basis_.size();
    const std::size_t n = v.size();
    // Augmented system B^T c = v, n equations in d unknowns.
    std::vector<std::vector<Rational>> m(n, std::vector<Rational>(d + 1));
    for (std::size_t j = 0; j < n; ++j) {
      for (std::size_t i = 0; i < d; ++i) m[j][i] = basis_[i][j];
      m[j][d] = v[j];
    }
    std::size_t row = 0;
    std::vector<std::size_t> pivot_col;
    for (std::size_t c = 0; c < d && row < n; ++c) {
      std::size_t p = row;
      while (p < n && m[p][c] == 0) ++p;
      if (p == n) continue;
      std::swap(m[p], m[row]);
      for (std::size_t i = 0; i < n; ++i) {
        if (i == row || m[i][c] == 0) continue;
        const Rational f = m[i][c] / m[row][c];
        for (std::size_t j = 0; j <= d; ++j) m[i][j] -= f * m[row][j];
      }
      pivot_col.push_back(c);
      ++row;
    }
    for (std::size_t i = row; i < n; ++i)
      if (m[i][d] != 0) return false;
    for (std::size_t i = 0; i < row; ++i) {
      const Rational c = m[i][d] / m[i][pivot_col[i]];
      if (boost::multiprecision::denominator(c) != 1) return false;
    }
    return true;
  }

 private:
  std::vector<V> basis_;
};

// Graver elements with max-norm <= bound by scanning the whole box
// [-bound, bound]^n; only usable for tiny n and bound.
inline std::set<V> naive_graver(const NaiveLattice& lattice, std::size_t n,
                                std::int64_t bound) {
  std::vector<V> points;
  V x(n);
  for (auto& e : x) e = -bound;
  for (;;) {
    if (!x.is_zero() && lattice.contains(x)) points.push_back(x);
    std::size_t i = 0;
    while (i < n && x[i] == bound) x[i++] = -bound;
    if (i == n) break;
    ++x[i];
  }
  std::set<V> out;
  for (const auto& v : points) {
    bool minimal = true;
    for (const auto& u : points)
      if (u != v && graver::conforms(u, v)) {
        minimal = false;
        break;
      }
    if (minimal) out.insert(graver::canonical_sign(v));
  }
  return out;
}

struct Instance {
  std::vector<V> generators;
  std::size_t n = 0;
  // Coordinate transpositions that preserve the lattice (possibly none).
  PermutationGroup group = PermutationGroup::trivial(1);
};

inline PermutationGroup invariant_transpositions(const LatticeBasis<std::int64_t>& L) {
  const std::size_t n = L.ambient_dimension();
  std::vector<graver::Permutation> gens;
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = a + 1; b < n; ++b) {
      std::vector<std::uint32_t> im(n);
      for (std::size_t j = 0; j < n; ++j) im[j] = static_cast<std::uint32_t>(j);
      std::swap(im[a], im[b]);
      graver::Permutation p(std::move(im));
      if (graver::verify_invariance(PermutationGroup(n, {p}), L)) gens.push_back(p);
    }
  return PermutationGroup(n, std::move(gens));
}

// Random linearly independent generators: rank <= 3, n <= 7, entries in
// {-2..2}. Every fourth instance is instead generated by the orbit of one
// random vector under a coordinate reflection or a cyclic shift; cyclic
// instances use a periodic vector so that the rank stays <= 3.
inline Instance random_instance(std::mt19937_64& rng, std::size_t index) {
  std::uniform_int_distribution<int> entry(-2, 2);
  Instance inst;
  if (index % 4 == 3) {
    const bool cyclic = index % 8 == 7;
    std::vector<std::size_t> cyclic_dims{3, 4, 6};
    std::uniform_int_distribution<std::size_t> pick(0, 2), dim(3, 7);
    inst.n = cyclic ? cyclic_dims[pick(rng)] : dim(rng);
    std::vector<std::uint32_t> im(inst.n);
    for (std::size_t j = 0; j < inst.n; ++j)
      im[j] = static_cast<std::uint32_t>(cyclic ? (j + 1) % inst.n : inst.n - 1 - j);
    const graver::Permutation sigma(im);
    const std::size_t period = cyclic ? (inst.n % 3 == 0 ? 3 : 2) : inst.n;
    for (;;) {
      V v(inst.n);
      for (std::size_t j = 0; j < inst.n; ++j) v[j] = j < period ? entry(rng) : v[j - period];
      std::vector<V> orbit;
      V w = v;
      for (std::size_t k = 0; k < inst.n; ++k) {
        orbit.push_back(w);
        w = graver::apply(sigma, w);
      }
      const std::size_t r = rational_rank(orbit);
      if (r == 0 || r > 3) continue;
      inst.generators = orbit;
      inst.group = PermutationGroup(inst.n, {sigma});
      return inst;
    }
  }
  std::uniform_int_distribution<std::size_t> dim(2, 7);
  inst.n = dim(rng);
  std::uniform_int_distribution<std::size_t> rk(1, std::min<std::size_t>(3, inst.n));
  const std::size_t d = rk(rng);
  for (;;) {
    inst.generators.assign(d, V(inst.n));
    for (auto& g : inst.generators)
      for (auto& e : g) e = entry(rng);
    if (rational_rank(inst.generators) == d) break;
  }
  const auto L = LatticeBasis<std::int64_t>::from_generators(inst.generators, inst.n);
  inst.group = invariant_transpositions(L);
  return inst;
}

}  // namespace testing_support
