//
// hsforce - Copyright 2026 The hsforce Authors
// SPDX-License-Identifier: Apache-2.0
//

#ifndef HSFORCE_SCALAR_HPP_
#define HSFORCE_SCALAR_HPP_

#include <algorithm>
#include <cmath>
#include <concepts>
#include <cstdint>
#include <string>
#include <string_view>
#include <type_traits>

#include <boost/multiprecision/gmp.hpp>
#include <boost/multiprecision/eigen.hpp>
#include <Eigen/Dense>

namespace hsforce {

// Expression templates are disabled so that `auto` and Eigen's own
// expression machinery never capture dangling GMP temporaries.
using Rational = boost::multiprecision::number<
    boost::multiprecision::gmp_rational, boost::multiprecision::et_off>;
using Integer = boost::multiprecision::number<
    boost::multiprecision::gmp_int, boost::multiprecision::et_off>;

using Index = Eigen::Index;

template <class T>
concept ExactScalar = std::same_as<T, Rational>;

template <class T>
concept FloatScalar = std::same_as<T, double>;

template <class T>
concept Scalar = ExactScalar<T> || FloatScalar<T>;

enum class Mode { kExact, kFloat };

template <Scalar T>
inline constexpr Mode mode_of = ExactScalar<T> ? Mode::kExact : Mode::kFloat;

std::string_view to_string(Mode mode) noexcept;
Mode parse_mode(std::string_view text);

template <Scalar T>
using Vector = Eigen::Matrix<T, Eigen::Dynamic, 1>;
template <Scalar T>
using Matrix = Eigen::Matrix<T, Eigen::Dynamic, Eigen::Dynamic>;

/// Relative tolerance for Float-mode predicates. Exact-mode predicates
/// ignore it.
struct Tolerance {
  double rel = 1e-9;
};

inline bool is_negligible(double value, double scale, Tolerance tol) {
  return std::abs(value) <= tol.rel * scale;
}

inline bool is_negligible(const Rational &value, const Rational & /*scale*/,
                          Tolerance /*tol*/) {
  return value == 0;
}

inline bool approx_equal(double a, double b, Tolerance tol) {
  return std::abs(a - b) <= tol.rel * std::max(std::abs(a), std::abs(b));
}

inline bool approx_equal(const Rational &a, const Rational &b,
                         Tolerance /*tol*/) {
  return a == b;
}

// Strict order that treats tolerance-equal values as equal.
inline bool definitely_less(double a, double b, Tolerance tol) {
  return a < b && !approx_equal(a, b, tol);
}

inline bool definitely_less(const Rational &a, const Rational &b,
                            Tolerance /*tol*/) {
  return a < b;
}

inline double to_double(double x) { return x; }
inline double to_double(const Rational &x) { return x.convert_to<double>(); }

template <Scalar T>
T from_double(double x) {
  return T(x);
}

/// Integer floor; exact for rationals. Throws kOverflow outside int64.
std::int64_t floor_to_int(double x);
std::int64_t floor_to_int(const Rational &x);

/// Parses "p/q", a signed integer, or a finite decimal ("0.125", "-3e-2")
/// into the exact rational it denotes.
Rational parse_rational(std::string_view text);

/// "p/q", or "p" when the denominator is 1.
std::string format_rational(const Rational &x);

/// Shortest decimal that round-trips to the same double.
std::string format_double(double x);

inline std::string format_scalar(double x) { return format_double(x); }
inline std::string format_scalar(const Rational &x) {
  return format_rational(x);
}

template <Scalar T>
T parse_scalar(std::string_view text) {
  if constexpr (ExactScalar<T>) {
    return parse_rational(text);
  } else {
    return to_double(parse_rational(text));
  }
}

template <Scalar T>
Vector<T> to_vector(std::initializer_list<T> values) {
  Vector<T> v(static_cast<Index>(values.size()));
  Index i = 0;
  for (const auto &x: values)
    v[i++] = x;
  return v;
}

inline Vector<Rational> to_exact(const Eigen::VectorXd &v) {
  return v.cast<Rational>();
}

inline Eigen::VectorXd to_float(const Vector<Rational> &v) {
  Eigen::VectorXd out(v.size());
  for (Index i = 0; i < v.size(); ++i)
    out[i] = to_double(v[i]);
  return out;
}

/// splitmix64 step; used to derive independent sub-seeds from a run seed.
constexpr std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t stream) {
  std::uint64_t z = seed + 0x9E3779B97F4A7C15ULL * (stream + 1);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

}  // namespace hsforce

#endif  // HSFORCE_SCALAR_HPP_
