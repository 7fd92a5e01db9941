#pragma once

#include <algorithm>
#include <cstddef>
#include <functional>
#include <initializer_list>
#include <ostream>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "graver/errors.hpp"
#include "graver/scalar.hpp"

namespace graver {

/// Dense exact integer vector. All vectors taking part in one computation
/// share the same length; mixing lengths raises DimensionError.
template <Scalar T>
class IntVector {
 public:
  using value_type = T;

  IntVector() = default;
  explicit IntVector(std::size_t n) : entries_(n, T(0)) {}
  IntVector(std::initializer_list<T> init) : entries_(init) {}
  explicit IntVector(std::vector<T> entries) : entries_(std::move(entries)) {}

  std::size_t size() const noexcept { return entries_.size(); }
  bool empty() const noexcept { return entries_.empty(); }

  const T& operator[](std::size_t j) const { return entries_[j]; }
  T& operator[](std::size_t j) { return entries_[j]; }

  auto begin() const noexcept { return entries_.begin(); }
  auto end() const noexcept { return entries_.end(); }
  auto begin() noexcept { return entries_.begin(); }
  auto end() noexcept { return entries_.end(); }

  std::span<const T> entries() const noexcept { return entries_; }

  bool is_zero() const {
    return std::all_of(entries_.begin(), entries_.end(),
                       [](const T& x) { return x == 0; });
  }

  IntVector operator-() const {
    IntVector r(size());
    for (std::size_t j = 0; j < size(); ++j)
      r.entries_[j] = ScalarOps<T>::neg(entries_[j]);
    return r;
  }

  IntVector& operator+=(const IntVector& other) {
    require_same_size(other);
    for (std::size_t j = 0; j < size(); ++j)
      entries_[j] = ScalarOps<T>::add(entries_[j], other.entries_[j]);
    return *this;
  }

  IntVector& operator-=(const IntVector& other) {
    require_same_size(other);
    for (std::size_t j = 0; j < size(); ++j)
      entries_[j] = ScalarOps<T>::sub(entries_[j], other.entries_[j]);
    return *this;
  }

  IntVector& operator*=(const T& k) {
    for (auto& x : entries_) x = ScalarOps<T>::mul(x, k);
    return *this;
  }

  friend IntVector operator+(IntVector a, const IntVector& b) { return a += b; }
  friend IntVector operator-(IntVector a, const IntVector& b) { return a -= b; }
  friend IntVector operator*(IntVector a, const T& k) { return a *= k; }
  friend IntVector operator*(const T& k, IntVector a) { return a *= k; }

  friend bool operator==(const IntVector&, const IntVector&) = default;

  // Lexicographic order on entries; fixes tie-breaks and output order.
  friend bool operator<(const IntVector& a, const IntVector& b) {
    return std::lexicographical_compare(a.begin(), a.end(), b.begin(),
                                        b.end());
  }
  friend bool operator>(const IntVector& a, const IntVector& b) { return b < a; }
  friend bool operator<=(const IntVector& a, const IntVector& b) {
    return !(b < a);
  }
  friend bool operator>=(const IntVector& a, const IntVector& b) {
    return !(a < b);
  }

  friend std::ostream& operator<<(std::ostream& os, const IntVector& v) {
    os << '(';
    for (std::size_t j = 0; j < v.size(); ++j) {
      if (j) os << ',';
      os << v[j];
    }
    return os << ')';
  }

  void require_same_size(const IntVector& other) const {
    if (other.size() != size())
      throw DimensionError("vector length mismatch: " +
                           std::to_string(size()) + " vs " +
                           std::to_string(other.size()));
  }

 private:
  std::vector<T> entries_;
};

template <Scalar T>
struct IntVectorHash {
  std::size_t operator()(const IntVector<T>& v) const noexcept {
    std::size_t h = 0xcbf29ce484222325ULL;
    std::hash<T> hasher;
    for (const auto& x : v) {
      h ^= hasher(x) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    }
    return h;
  }
};

/// u ⊑ v: same closed orthant and |u_j| <= |v_j| in every component.
template <Scalar T>
bool conforms(const IntVector<T>& u, const IntVector<T>& v) {
  u.require_same_size(v);
  for (std::size_t j = 0; j < u.size(); ++j) {
    const T& a = u[j];
    const T& b = v[j];
    if (a == 0) continue;
    if (a > 0) {
      if (b < a) return false;
    } else {
      if (b > a) return false;
    }
  }
  return true;
}

/// Returns (v+, v-) with v = v+ - v- and both nonnegative.
template <Scalar T>
std::pair<IntVector<T>, IntVector<T>> pos_neg_split(const IntVector<T>& v) {
  IntVector<T> pos(v.size()), neg(v.size());
  for (std::size_t j = 0; j < v.size(); ++j) {
    if (v[j] > 0)
      pos[j] = v[j];
    else if (v[j] < 0)
      neg[j] = ScalarOps<T>::neg(v[j]);
  }
  return {std::move(pos), std::move(neg)};
}

namespace detail {
inline void require_prefix(std::size_t d, std::size_t n) {
  if (d < 1 || d > n)
    throw DimensionError("prefix length " + std::to_string(d) +
                         " out of range for vectors of length " +
                         std::to_string(n));
}
}  // namespace detail

/// L1 norm of the first d entries.
template <Scalar T>
T prefix_norm(const IntVector<T>& v, std::size_t d) {
  detail::require_prefix(d, v.size());
  T sum(0);
  for (std::size_t j = 0; j < d; ++j)
    sum = ScalarOps<T>::add(sum, ScalarOps<T>::abs(v[j]));
  return sum;
}

/// True iff the first d entries of u and v never have strictly opposite
/// signs (closed orthant).
template <Scalar T>
bool same_orthant_prefix(const IntVector<T>& u, const IntVector<T>& v,
                         std::size_t d) {
  u.require_same_size(v);
  detail::require_prefix(d, u.size());
  for (std::size_t j = 0; j < d; ++j)
    if ((u[j] > 0 && v[j] < 0) || (u[j] < 0 && v[j] > 0)) return false;
  return true;
}

template <Scalar T>
T l1_norm(const IntVector<T>& v) {
  T sum(0);
  for (const auto& x : v) sum = ScalarOps<T>::add(sum, ScalarOps<T>::abs(x));
  return sum;
}

template <Scalar T>
T max_norm(const IntVector<T>& v) {
  T m(0);
  for (const auto& x : v) {
    T a = ScalarOps<T>::abs(x);
    if (a > m) m = a;
  }
  return m;
}

/// Flips v so its first nonzero entry is positive.
template <Scalar T>
IntVector<T> canonical_sign(const IntVector<T>& v) {
  for (const auto& x : v) {
    if (x > 0) return v;
    if (x < 0) return -v;
  }
  throw DomainError("canonical_sign of the zero vector");
}

template <Scalar To, Scalar From>
IntVector<To> vector_cast(const IntVector<From>& v) {
  std::vector<To> out;
  out.reserve(v.size());
  for (const auto& x : v) out.push_back(scalar_cast<To>(x));
  return IntVector<To>(std::move(out));
}

}  // namespace graver
