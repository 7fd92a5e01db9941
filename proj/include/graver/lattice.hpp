#pragma once

#include <algorithm>
#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "graver/errors.hpp"
#include "graver/pottier.hpp"
#include "graver/vector.hpp"

namespace graver {

/// Dense integer matrix stored as rows of equal length.
template <Scalar T>
struct IntMatrix {
  std::size_t cols = 0;
  std::vector<IntVector<T>> rows;

  IntMatrix() = default;
  IntMatrix(std::size_t r, std::size_t c) : cols(c), rows(r, IntVector<T>(c)) {}
  IntMatrix(std::vector<IntVector<T>> r, std::size_t c)
      : cols(c), rows(std::move(r)) {
    for (const auto& row : rows)
      if (row.size() != cols)
        throw DimensionError("matrix row of length " +
                             std::to_string(row.size()) + ", expected " +
                             std::to_string(cols));
  }

  std::size_t num_rows() const noexcept { return rows.size(); }
  std::size_t num_cols() const noexcept { return cols; }
  const T& operator()(std::size_t i, std::size_t j) const { return rows[i][j]; }
  T& operator()(std::size_t i, std::size_t j) { return rows[i][j]; }

  friend bool operator==(const IntMatrix&, const IntMatrix&) = default;
};

template <Scalar To, Scalar From>
IntMatrix<To> matrix_cast(const IntMatrix<From>& m) {
  std::vector<IntVector<To>> rows;
  rows.reserve(m.num_rows());
  for (const auto& r : m.rows) rows.push_back(vector_cast<To>(r));
  return IntMatrix<To>(std::move(rows), m.cols);
}

template <Scalar T>
IntVector<T> mat_vec(const IntMatrix<T>& A, const IntVector<T>& v) {
  if (v.size() != A.cols) throw DimensionError("mat_vec: length mismatch");
  IntVector<T> out(A.num_rows());
  for (std::size_t i = 0; i < A.num_rows(); ++i) {
    T acc(0);
    for (std::size_t j = 0; j < A.cols; ++j)
      if (A(i, j) != 0 && v[j] != 0)
        acc = ScalarOps<T>::add(acc, ScalarOps<T>::mul(A(i, j), v[j]));
    out[i] = acc;
  }
  return out;
}

namespace detail {

template <Scalar T>
T floor_div(const T& a, const T& b) {
  T q = a / b;
  if (q * b != a && ((a < 0) != (b < 0))) q = ScalarOps<T>::sub(q, T(1));
  return q;
}

// target -= q * src
template <Scalar T>
void row_sub_multiple(IntVector<T>& target, const T& q, const IntVector<T>& src) {
  if (q == 0) return;
  for (std::size_t j = 0; j < target.size(); ++j)
    if (src[j] != 0)
      target[j] = ScalarOps<T>::sub(target[j], ScalarOps<T>::mul(q, src[j]));
}

// Row-style Hermite normal form by unimodular row operations. Afterwards the
// first r rows are in echelon form with positive pivots and entries above
// each pivot reduced into [0, pivot); the remaining rows are zero. The same
// operations are applied to *transform when given. Returns the pivot columns.
template <Scalar T>
std::vector<std::size_t> hermite_rows(std::vector<IntVector<T>>& rows,
                                      std::size_t cols,
                                      std::vector<IntVector<T>>* transform) {
  const std::size_t m = rows.size();
  auto swap_rows = [&](std::size_t a, std::size_t b) {
    if (a == b) return;
    std::swap(rows[a], rows[b]);
    if (transform) std::swap((*transform)[a], (*transform)[b]);
  };
  auto sub_multiple = [&](std::size_t target, const T& q, std::size_t src) {
    row_sub_multiple(rows[target], q, rows[src]);
    if (transform) row_sub_multiple((*transform)[target], q, (*transform)[src]);
  };

  std::vector<std::size_t> pivots;
  std::size_t k = 0;
  for (std::size_t c = 0; c < cols && k < m; ++c) {
    bool have_pivot = false;
    for (;;) {
      std::optional<std::size_t> best;
      for (std::size_t i = k; i < m; ++i) {
        if (rows[i][c] == 0) continue;
        if (!best || ScalarOps<T>::abs(rows[i][c]) <
                         ScalarOps<T>::abs(rows[*best][c]))
          best = i;
      }
      if (!best) break;
      have_pivot = true;
      swap_rows(k, *best);
      bool cleared = true;
      for (std::size_t i = k + 1; i < m; ++i) {
        if (rows[i][c] == 0) continue;
        sub_multiple(i, T(rows[i][c] / rows[k][c]), k);
        if (rows[i][c] != 0) cleared = false;
      }
      if (cleared) break;
    }
    if (!have_pivot) continue;
    if (rows[k][c] < 0) {
      rows[k] = -rows[k];
      if (transform) (*transform)[k] = -(*transform)[k];
    }
    for (std::size_t i = 0; i < k; ++i)
      if (rows[i][c] != 0) sub_multiple(i, floor_div(rows[i][c], rows[k][c]), k);
    pivots.push_back(c);
    ++k;
  }
  return pivots;
}

}  // namespace detail

/// Rational rank of a set of integer rows.
template <Scalar T>
std::size_t rank_of(std::vector<IntVector<T>> rows, std::size_t cols) {
  return detail::hermite_rows<T>(rows, cols, nullptr).size();
}

/// A lattice in Z^n given by d independent generators.
///
/// Generators are kept in Hermite normal form, which fixes a deterministic
/// basis and makes membership a triangular solve. Coordinates are "working"
/// coordinates; column_perm()[j] is the original coordinate of working
/// coordinate j.
template <Scalar T>
class LatticeBasis {
 public:
  LatticeBasis() = default;

  /// Lattice generated by an arbitrary (possibly redundant) generating set.
  static LatticeBasis from_generators(std::vector<IntVector<T>> generators,
                                      std::size_t n) {
    std::vector<std::size_t> identity(n);
    for (std::size_t j = 0; j < n; ++j) identity[j] = j;
    return LatticeBasis(std::move(generators), n, std::move(identity), false);
  }

  std::size_t ambient_dimension() const noexcept { return n_; }
  std::size_t rank() const noexcept { return generators_.size(); }
  const std::vector<IntVector<T>>& generators() const noexcept {
    return generators_;
  }
  const std::vector<std::size_t>& column_perm() const noexcept {
    return column_perm_;
  }
  bool pivoted() const noexcept { return pivoted_; }
  /// Pivot column of each generator; 0..d-1 once pivoted.
  const std::vector<std::size_t>& pivot_columns() const noexcept {
    return pivots_;
  }

  /// Integer coefficients c with (c·B) restricted to the pivot columns equal
  /// to `pivot_values`, or nullopt if no integral solution exists.
  std::optional<std::vector<T>> solve_pivot_coefficients(
      std::span<const T> pivot_values) const {
    const std::size_t d = rank();
    if (pivot_values.size() != d)
      throw DimensionError("solve: expected " + std::to_string(d) + " values");
    std::vector<T> c(d, T(0));
    for (std::size_t i = 0; i < d; ++i) {
      const std::size_t col = pivots_[i];
      T rhs = pivot_values[i];
      for (std::size_t k = 0; k < i; ++k)
        if (c[k] != 0 && generators_[k][col] != 0)
          rhs = ScalarOps<T>::sub(rhs,
                                  ScalarOps<T>::mul(c[k], generators_[k][col]));
      const T& p = generators_[i][col];
      if (rhs % p != 0) return std::nullopt;
      c[i] = rhs / p;
    }
    return c;
  }

  IntVector<T> combine(std::span<const T> coefficients) const {
    IntVector<T> v(n_);
    for (std::size_t i = 0; i < coefficients.size(); ++i)
      if (coefficients[i] != 0)
        detail::row_sub_multiple(v, ScalarOps<T>::neg(coefficients[i]),
                                 generators_[i]);
    return v;
  }

  /// Maps a working-coordinate vector to original coordinates.
  IntVector<T> to_original(const IntVector<T>& working) const {
    if (working.size() != n_) throw DimensionError("to_original: wrong length");
    IntVector<T> out(n_);
    for (std::size_t j = 0; j < n_; ++j) out[column_perm_[j]] = working[j];
    return out;
  }

  IntVector<T> to_working(const IntVector<T>& original) const {
    if (original.size() != n_) throw DimensionError("to_working: wrong length");
    IntVector<T> out(n_);
    for (std::size_t j = 0; j < n_; ++j) out[j] = original[column_perm_[j]];
    return out;
  }

  /// Same lattice with coordinates reordered so that the first d working
  /// coordinates are the pivot columns.
  LatticeBasis pivot_to_front() const {
    const std::size_t d = rank();
    if (d == 0) throw DomainError("preprocess requires a lattice of rank >= 1");
    std::vector<std::size_t> order(pivots_.begin(), pivots_.end());
    std::vector<bool> is_pivot(n_, false);
    for (auto p : pivots_) is_pivot[p] = true;
    for (std::size_t j = 0; j < n_; ++j)
      if (!is_pivot[j]) order.push_back(j);
    std::vector<std::size_t> perm(n_);
    for (std::size_t j = 0; j < n_; ++j) perm[j] = column_perm_[order[j]];
    std::vector<IntVector<T>> gens;
    gens.reserve(d);
    for (const auto& g : generators_) {
      IntVector<T> h(n_);
      for (std::size_t j = 0; j < n_; ++j) h[j] = g[order[j]];
      gens.push_back(std::move(h));
    }
    return LatticeBasis(std::move(gens), n_, std::move(perm), true);
  }

 private:
  LatticeBasis(std::vector<IntVector<T>> generators, std::size_t n,
               std::vector<std::size_t> column_perm, bool pivoted)
      : n_(n), column_perm_(std::move(column_perm)), pivoted_(pivoted) {
    for (const auto& g : generators)
      if (g.size() != n)
        throw DimensionError("generator of length " + std::to_string(g.size()) +
                             " in a lattice of dimension " + std::to_string(n));
    pivots_ = detail::hermite_rows<T>(generators, n, nullptr);
    generators.resize(pivots_.size());
    generators_ = std::move(generators);
    if (pivoted_) {
      for (std::size_t i = 0; i < pivots_.size(); ++i)
        if (pivots_[i] != i)
          throw DomainError("pivot block of a preprocessed basis is singular");
    }
  }

  std::size_t n_ = 0;
  std::vector<IntVector<T>> generators_;
  std::vector<std::size_t> pivots_;
  std::vector<std::size_t> column_perm_;
  bool pivoted_ = false;
};

/// Saturated integer kernel ker(A) ∩ Z^n. Unimodular row reduction of A^T
/// with the transformation tracked; the rows of the transformation that map
/// to zero span the kernel.
template <Scalar T>
LatticeBasis<T> kernel_lattice(const IntMatrix<T>& A) {
  const std::size_t n = A.num_cols();
  if (n == 0) throw DimensionError("kernel_lattice: matrix has no columns");
  const std::size_t m = A.num_rows();
  std::vector<IntVector<T>> at(n, IntVector<T>(m));
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < n; ++j) at[j][i] = A(i, j);
  std::vector<IntVector<T>> u(n, IntVector<T>(n));
  for (std::size_t j = 0; j < n; ++j) u[j][j] = T(1);
  const std::size_t r = detail::hermite_rows<T>(at, m, &u).size();
  std::vector<IntVector<T>> kernel(u.begin() + static_cast<std::ptrdiff_t>(r),
                                   u.end());
  return LatticeBasis<T>::from_generators(std::move(kernel), n);
}

/// Reorders coordinates so the first d coordinates are injective on the
/// lattice. Pivots are the first linearly independent columns, left to right.
template <Scalar T>
LatticeBasis<T> preprocess(const LatticeBasis<T>& basis) {
  return basis.pivot_to_front();
}

/// First d entries of a working-coordinate vector.
template <Scalar T>
IntVector<T> project(const IntVector<T>& v, const LatticeBasis<T>& basis) {
  if (!basis.pivoted()) throw DomainError("project requires a pivoted basis");
  if (v.size() != basis.ambient_dimension())
    throw DimensionError("project: wrong vector length");
  const std::size_t d = basis.rank();
  return IntVector<T>(std::vector<T>(v.begin(), v.begin() + d));
}

/// The unique lattice vector whose projection is w.
template <Scalar T>
IntVector<T> lift(const IntVector<T>& w, const LatticeBasis<T>& basis) {
  if (!basis.pivoted()) throw DomainError("lift requires a pivoted basis");
  if (w.size() != basis.rank()) throw DimensionError("lift: wrong length");
  auto c = basis.solve_pivot_coefficients(w.entries());
  if (!c) throw MembershipError("vector is not in the projected lattice");
  return basis.combine(*c);
}

template <Scalar T>
bool member(const IntVector<T>& v, const LatticeBasis<T>& basis) {
  if (v.size() != basis.ambient_dimension())
    throw DimensionError("member: wrong vector length");
  std::vector<T> pivot_values;
  pivot_values.reserve(basis.rank());
  for (auto col : basis.pivot_columns()) pivot_values.push_back(v[col]);
  auto c = basis.solve_pivot_coefficients(pivot_values);
  return c && basis.combine(*c) == v;
}

/// Lifts of the ⊑-minimal nonzero vectors of the projected lattice π(Λ).
/// Closed under negation; π of the set is the Graver basis of π(Λ).
template <Scalar T>
struct InputSetFbar {
  std::vector<IntVector<T>> vectors;
};

template <Scalar T>
InputSetFbar<T> minimal_projected_generators(const LatticeBasis<T>& basis) {
  if (!basis.pivoted())
    throw DomainError("minimal_projected_generators requires a pivoted basis");
  const std::size_t d = basis.rank();
  std::vector<IntVector<T>> projected;
  projected.reserve(d);
  for (const auto& g : basis.generators()) projected.push_back(project(g, basis));
  const GraverSet<T> minimal =
      extract_minimal(pottier_graver<T>(projected, d));
  InputSetFbar<T> fbar;
  fbar.vectors.reserve(minimal.size());
  for (const auto& w : minimal) fbar.vectors.push_back(lift(w, basis));
  return fbar;
}

}  // namespace graver
