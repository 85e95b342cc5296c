#pragma once

#include <cmath>
#include <compare>
#include <optional>
#include <string>
#include <string_view>

#include "maxtimes/errors.hpp"
#include "maxtimes/format.hpp"
#include "maxtimes/radical.hpp"
#include "maxtimes/rational.hpp"

namespace maxtimes {

// Scalar realizations of the max-times semiring over the nonnegative reals.
// Addition is max, multiplication is the usual product, zero annihilates,
// and every nonzero value has a multiplicative inverse.
//
// Three realizations are provided:
//   rational  exact, fails root extraction when the root is irrational
//   radical   exact, closed under the root extraction the solvers need
//   double    approximate, comparisons use a fixed relative tolerance
template <class S>
struct scalar_traits;

// Relative tolerance for float-mode equality and threshold comparisons.
inline constexpr double kFloatRelTol = 1e-9;

namespace detail {

// Shared implementation for the two exact realizations.
template <class S>
struct exact_scalar_base {
  static constexpr bool exact = true;

  static S zero() { return S(0); }
  static S one() { return S(1); }
  static bool is_zero(const S& a) { return a.is_zero(); }
  static S mul(const S& a, const S& b) { return a * b; }
  static S div(const S& a, const S& b) { return a / b; }
  static S inverse(const S& a) { return a.inverse(); }
  static bool less(const S& a, const S& b) { return a < b; }
  static bool eq(const S& a, const S& b) { return a == b; }
  static bool geq(const S& a, const S& b) { return !(a < b); }
  static S pow(const S& a, unsigned long e) { return a.pow(e); }
  static std::optional<S> root(const S& a, unsigned long k) {
    return a.root(k);
  }
  static double to_double(const S& a) { return a.to_double(); }
  static std::string str(const S& a) { return a.str(); }
  static bool valid(const S&) { return true; }

  // a^(1/ka) versus b^(1/kb), decided exactly by cross powers.
  static std::strong_ordering compare_root(const S& a, unsigned long ka,
                                           const S& b, unsigned long kb) {
    const S lhs = scalar_traits<S>::pow(a, kb);
    const S rhs = scalar_traits<S>::pow(b, ka);
    return lhs <=> rhs;
  }
};

}  // namespace detail

template <>
struct scalar_traits<rational> : detail::exact_scalar_base<rational> {
  static const char* name() { return "rational"; }
  static rational from_mpq(const mpq_class& q) { return rational(q); }
  static rational parse(std::string_view text) {
    return rational::parse(text);
  }
  // Roots must exist in the rationals; irrational roots are unrepresentable.
  static std::optional<rational> extend_root(const rational& a,
                                             unsigned long k) {
    return a.root(k);
  }
};

template <>
struct scalar_traits<radical> : detail::exact_scalar_base<radical> {
  static const char* name() { return "radical"; }
  static radical from_mpq(const mpq_class& q) {
    return radical(rational(q));
  }
  static radical parse(std::string_view text) {
    return radical(rational::parse(text));
  }
  // Any root of a rational value is representable exactly.
  static std::optional<radical> extend_root(const radical& a,
                                            unsigned long k) {
    if (a.is_rational()) return radical::nth_root(a.rational_value(), k);
    return a.root(k);
  }
};

template <>
struct scalar_traits<double> {
  static constexpr bool exact = false;

  static const char* name() { return "float"; }
  static double zero() { return 0.0; }
  static double one() { return 1.0; }
  static bool is_zero(double a) { return a == 0.0; }
  static double mul(double a, double b) { return a * b; }
  static double div(double a, double b) {
    if (b == 0.0) throw invalid_input_error("float: division by zero");
    return a / b;
  }
  static double inverse(double a) {
    if (a == 0.0) throw invalid_input_error("float: inverse of zero");
    return 1.0 / a;
  }
  static bool less(double a, double b) { return a < b; }
  static bool eq(double a, double b) {
    return a == b || std::abs(a - b) <= kFloatRelTol * std::max(a, b);
  }
  // a >= b up to relative slack, so thresholds keep borderline entries.
  static bool geq(double a, double b) { return a >= b * (1.0 - kFloatRelTol); }
  static double pow(double a, unsigned long e) {
    return std::pow(a, static_cast<double>(e));
  }
  static std::optional<double> root(double a, unsigned long k) {
    if (k == 0) throw invalid_input_error("float: zeroth root");
    return std::pow(a, 1.0 / static_cast<double>(k));
  }
  static std::optional<double> extend_root(double a, unsigned long k) {
    return root(a, k);
  }
  static double from_mpq(const mpq_class& q) { return q.get_d(); }
  static double parse(std::string_view text) {
    return rational::parse(text).to_double();
  }
  static double to_double(double a) { return a; }
  static std::string str(double a) {
    return detail::shortest_double_string(a);
  }
  static bool valid(double a) { return std::isfinite(a) && a >= 0.0; }

  // Compared through logarithms: magnitudes may overflow a cross power.
  static std::strong_ordering compare_root(double a, unsigned long ka,
                                           double b, unsigned long kb) {
    if (a == 0.0 || b == 0.0) {
      if (a == b) return std::strong_ordering::equal;
      return a == 0.0 ? std::strong_ordering::less
                      : std::strong_ordering::greater;
    }
    const double lhs = std::log(a) / static_cast<double>(ka);
    const double rhs = std::log(b) / static_cast<double>(kb);
    if (lhs < rhs) return std::strong_ordering::less;
    if (lhs > rhs) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
  }
};

template <class S>
concept semiring_scalar = requires(const S& a, const S& b) {
  { scalar_traits<S>::zero() } -> std::same_as<S>;
  { scalar_traits<S>::one() } -> std::same_as<S>;
  { scalar_traits<S>::is_zero(a) } -> std::same_as<bool>;
  { scalar_traits<S>::mul(a, b) } -> std::same_as<S>;
  { scalar_traits<S>::less(a, b) } -> std::same_as<bool>;
};

// max of two scalars, i.e. semiring addition.
template <semiring_scalar S>
S tropical_add(const S& a, const S& b) {
  return scalar_traits<S>::less(a, b) ? b : a;
}

}  // namespace maxtimes
