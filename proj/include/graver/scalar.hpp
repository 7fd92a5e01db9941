#pragma once

#include <concepts>
#include <cstdint>
#include <functional>
#include <limits>
#include <string>
#include <type_traits>

#include <boost/multiprecision/cpp_int.hpp>

#include "graver/errors.hpp"

namespace graver {

using BigInt = boost::multiprecision::cpp_int;

template <class T>
concept Scalar = std::same_as<T, BigInt> ||
                 (std::signed_integral<T> && !std::same_as<T, bool>);

// Exact arithmetic on the supported scalar types. Fixed-width integers
// throw OverflowError instead of wrapping; BigInt never overflows.
template <class T>
struct ScalarOps;

template <class T>
  requires std::signed_integral<T>
struct ScalarOps<T> {
  static constexpr bool is_fixed_width = true;

  static T add(T a, T b) {
    T r;
    if (__builtin_add_overflow(a, b, &r)) overflow("addition");
    return r;
  }
  static T sub(T a, T b) {
    T r;
    if (__builtin_sub_overflow(a, b, &r)) overflow("subtraction");
    return r;
  }
  static T mul(T a, T b) {
    T r;
    if (__builtin_mul_overflow(a, b, &r)) overflow("multiplication");
    return r;
  }
  static T neg(T a) {
    if (a == std::numeric_limits<T>::min()) overflow("negation");
    return -a;
  }
  static T abs(T a) { return a < 0 ? neg(a) : a; }

  [[noreturn]] static void overflow(const char* op) {
    throw OverflowError(std::string("fixed-width integer overflow in ") + op);
  }
};

template <>
struct ScalarOps<BigInt> {
  static constexpr bool is_fixed_width = false;

  static BigInt add(const BigInt& a, const BigInt& b) { return a + b; }
  static BigInt sub(const BigInt& a, const BigInt& b) { return a - b; }
  static BigInt mul(const BigInt& a, const BigInt& b) { return a * b; }
  static BigInt neg(const BigInt& a) { return -a; }
  static BigInt abs(const BigInt& a) { return a < 0 ? BigInt(-a) : a; }
};

/// Converts between scalar types, throwing OverflowError if the value does
/// not fit the target.
template <Scalar To, Scalar From>
To scalar_cast(const From& x) {
  if constexpr (std::same_as<To, From>) {
    return x;
  } else if constexpr (std::same_as<To, BigInt>) {
    return BigInt(x);
  } else if constexpr (std::same_as<From, BigInt>) {
    if (x > BigInt(std::numeric_limits<To>::max()) ||
        x < BigInt(std::numeric_limits<To>::min()))
      throw OverflowError("value " + x.str() + " does not fit a " +
                          std::to_string(sizeof(To) * 8) + "-bit integer");
    return static_cast<To>(x);
  } else {
    if (!std::in_range<To>(x))
      throw OverflowError("value " + std::to_string(x) +
                          " does not fit the target integer type");
    return static_cast<To>(x);
  }
}

template <Scalar T>
std::string to_string(const T& x) {
  if constexpr (std::same_as<T, BigInt>)
    return x.str();
  else
    return std::to_string(x);
}

template <Scalar T>
int sign(const T& x) {
  return x > 0 ? 1 : (x < 0 ? -1 : 0);
}

}  // namespace graver
