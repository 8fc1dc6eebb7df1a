#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <type_traits>

#include <boost/multiprecision/gmp.hpp>

namespace mflow {

// Exact arithmetic without expression templates so generic code sees a plain
// value type.
using Rational = boost::multiprecision::number<boost::multiprecision::gmp_rational,
                                               boost::multiprecision::et_off>;

template <class T>
inline constexpr bool is_exact_v = std::is_same_v<T, Rational>;

template <class T>
concept Scalar = std::is_same_v<T, double> || std::is_same_v<T, Rational>;

enum class NumericMode { Rational, Float };

// Absolute tolerance used for comparisons. Exact mode compares exactly.
template <Scalar T>
inline T default_tolerance() {
  if constexpr (is_exact_v<T>) {
    return T(0);
  } else {
    return 1e-9;
  }
}

// Threshold for internal pivoting and residual tests, tighter than the
// verification tolerance so round-off does not flip verdicts.
template <Scalar T>
inline T kernel_tolerance(const T& tol) {
  if constexpr (is_exact_v<T>) {
    return T(0);
  } else {
    return tol * 1e-3;
  }
}

inline double abs_value(double x) { return x < 0 ? -x : x; }
inline Rational abs_value(const Rational& x) { return x < 0 ? Rational(-x) : x; }

inline double to_double(double x) { return x; }
double to_double(const Rational& x);

// Exact conversion: every finite double is a dyadic rational.
Rational to_rational(double x);
inline Rational to_rational(const Rational& x) { return x; }

template <Scalar T>
T from_rational(const Rational& r) {
  if constexpr (is_exact_v<T>) {
    return r;
  } else {
    return to_double(r);
  }
}

template <Scalar T>
T convert(const Rational& r) {
  return from_rational<T>(r);
}
template <Scalar T>
T convert(double x) {
  if constexpr (is_exact_v<T>) {
    return to_rational(x);
  } else {
    return x;
  }
}

Rational floor_of(const Rational& x);
double floor_of(double x);

bool is_integer(const Rational& x);
bool is_integer(double x);

// "p/q", "p", decimal "0.25", "-1.5e-3". Throws std::invalid_argument.
Rational parse_rational(std::string_view text);

std::string format_number(const Rational& x);
std::string format_number(double x);

}  // namespace mflow
