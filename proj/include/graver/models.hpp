#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "graver/errors.hpp"
#include "graver/lattice.hpp"
#include "graver/symmetry.hpp"

namespace graver {

inline constexpr std::size_t kMaxTableCells = 1'000'000;

namespace detail {

inline std::size_t table_cells(const std::vector<std::size_t>& dims) {
  if (dims.size() < 2)
    throw ValidationError("a table needs at least two axes");
  std::size_t n = 1;
  for (auto k : dims) {
    if (k < 2) throw ValidationError("every table axis needs length >= 2");
    n *= k;
    if (n > kMaxTableCells)
      throw ResourceError("table has more than " +
                          std::to_string(kMaxTableCells) + " cells");
  }
  return n;
}

// Row-major strides, last axis fastest.
inline std::vector<std::size_t> table_strides(const std::vector<std::size_t>& dims) {
  std::vector<std::size_t> stride(dims.size(), 1);
  for (std::size_t a = dims.size() - 1; a-- > 0;)
    stride[a] = stride[a + 1] * dims[a + 1];
  return stride;
}

inline std::vector<std::size_t> cell_tuple(std::size_t cell,
                                           const std::vector<std::size_t>& dims) {
  std::vector<std::size_t> idx(dims.size());
  for (std::size_t a = dims.size(); a-- > 0;) {
    idx[a] = cell % dims[a];
    cell /= dims[a];
  }
  return idx;
}

template <class Map>
Permutation cell_permutation(const std::vector<std::size_t>& dims,
                             std::size_t n, Map&& map_tuple) {
  const auto stride = table_strides(dims);
  std::vector<std::uint32_t> im(n);
  for (std::size_t cell = 0; cell < n; ++cell) {
    auto idx = map_tuple(cell_tuple(cell, dims));
    std::size_t target = 0;
    for (std::size_t a = 0; a < dims.size(); ++a) target += idx[a] * stride[a];
    im[cell] = static_cast<std::uint32_t>(target);
  }
  return Permutation(std::move(im));
}

}  // namespace detail

/// Constraint matrix of k1 x ... x km tables whose sums along every
/// axis-parallel line vanish. Cells are numbered row-major (last index
/// fastest). Lines along the last axis come first, then the next-to-last
/// axis, and so on; within an axis, lines follow row-major order of the
/// fixed indices. For 3x3 this gives the six row and column sums.
template <Scalar T>
IntMatrix<T> table_matrix(const std::vector<std::size_t>& dims) {
  const std::size_t n = detail::table_cells(dims);
  const auto stride = detail::table_strides(dims);
  IntMatrix<T> A;
  A.cols = n;
  for (std::size_t a = dims.size(); a-- > 0;) {
    for (std::size_t cell = 0; cell < n; ++cell) {
      if ((cell / stride[a]) % dims[a] != 0) continue;
      IntVector<T> row(n);
      for (std::size_t i = 0; i < dims[a]; ++i) row[cell + i * stride[a]] = T(1);
      A.rows.push_back(std::move(row));
    }
  }
  return A;
}

/// Symmetries of the table lattice acting on cell indices: a transposition
/// and a full cycle of the labels of each axis, and swaps of adjacent axes
/// of equal length.
inline PermutationGroup table_group(const std::vector<std::size_t>& dims) {
  const std::size_t n = detail::table_cells(dims);
  const std::size_t m = dims.size();
  std::vector<Permutation> gens;
  auto add = [&](Permutation p) {
    if (p.is_identity()) return;
    for (const auto& q : gens)
      if (q == p) return;
    gens.push_back(std::move(p));
  };
  for (std::size_t a = 0; a < m; ++a) {
    const std::size_t k = dims[a];
    add(detail::cell_permutation(dims, n, [&](std::vector<std::size_t> idx) {
      if (idx[a] < 2) idx[a] = 1 - idx[a];
      return idx;
    }));
    add(detail::cell_permutation(dims, n, [&](std::vector<std::size_t> idx) {
      idx[a] = (idx[a] + 1) % k;
      return idx;
    }));
  }
  std::map<std::size_t, std::vector<std::size_t>> axes_by_length;
  for (std::size_t a = 0; a < m; ++a) axes_by_length[dims[a]].push_back(a);
  for (const auto& [length, axes] : axes_by_length) {
    for (std::size_t t = 0; t + 1 < axes.size(); ++t) {
      const std::size_t a = axes[t], b = axes[t + 1];
      add(detail::cell_permutation(dims, n, [&](std::vector<std::size_t> idx) {
        std::swap(idx[a], idx[b]);
        return idx;
      }));
    }
  }
  return PermutationGroup(n, std::move(gens));
}

}  // namespace graver
