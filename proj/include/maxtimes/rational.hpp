#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstddef>
#include <optional>
#include <string>
#include <string_view>

#include "maxtimes/errors.hpp"

namespace maxtimes {

// Arbitrary-precision nonnegative rational. Arithmetic is exact and closed
// under the operations used by the max-times semiring: max, product, and
// inverse of a nonzero value. Negative values are rejected at construction.
class rational {
 public:
  rational() : v_(0) {}

  rational(int n) : rational(static_cast<long>(n)) {}

  rational(long n) : v_(check_sign(mpq_class(n))) {}

  rational(unsigned long n) : v_(mpq_class(n)) {}

  rational(long num, long den) {
    if (den == 0) throw invalid_input_error("rational: zero denominator");
    mpq_class q(num, den);
    q.canonicalize();  // must precede the sign check: sgn ignores the sign
                       // of a non-canonical denominator
    v_ = check_sign(q);
  }

  explicit rational(const mpq_class& q) : v_(q) {
    v_.canonicalize();  // mpq equality assumes canonical operands
    check_sign(v_);
  }

  // Parses "3", "4/6" (canonicalized to 2/3), or a plain decimal such as
  // "0.25" or "25e-2". Signs are rejected: values must be nonnegative.
  static rational parse(std::string_view text);

  const mpq_class& raw() const { return v_; }

  bool is_zero() const { return sgn(v_) == 0; }

  rational inverse() const {
    if (is_zero()) throw invalid_input_error("rational: inverse of zero");
    return rational(mpq_class(1) / v_);
  }

  rational pow(unsigned long e) const {
    mpq_class r;
    mpz_pow_ui(r.get_num_mpz_t(), v_.get_num_mpz_t(), e);
    mpz_pow_ui(r.get_den_mpz_t(), v_.get_den_mpz_t(), e);
    return rational(r);
  }

  // Exact k-th root when one exists in the rationals.
  std::optional<rational> root(unsigned long k) const {
    if (k == 0) throw invalid_input_error("rational: zeroth root");
    if (k == 1 || is_zero() || v_ == 1) return *this;
    mpq_class r;
    int num_exact =
        mpz_root(r.get_num_mpz_t(), v_.get_num_mpz_t(), k);
    int den_exact =
        mpz_root(r.get_den_mpz_t(), v_.get_den_mpz_t(), k);
    if (!num_exact || !den_exact) return std::nullopt;
    return rational(r);
  }

  double to_double() const { return v_.get_d(); }

  // "p/q", or "p" when the denominator is 1.
  std::string str() const { return v_.get_str(); }

  friend rational operator*(const rational& a, const rational& b) {
    return rational(mpq_class(a.v_ * b.v_));
  }

  friend rational operator/(const rational& a, const rational& b) {
    if (b.is_zero()) throw invalid_input_error("rational: division by zero");
    return rational(mpq_class(a.v_ / b.v_));
  }

  rational& operator*=(const rational& b) {
    v_ *= b.v_;
    return *this;
  }

  friend bool operator==(const rational& a, const rational& b) {
    return a.v_ == b.v_;
  }

  friend std::strong_ordering operator<=>(const rational& a,
                                          const rational& b) {
    int c = cmp(a.v_, b.v_);
    if (c < 0) return std::strong_ordering::less;
    if (c > 0) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
  }

 private:
  static mpq_class check_sign(const mpq_class& q) {
    if (sgn(q) < 0) throw invalid_input_error("rational: negative value");
    return q;
  }

  mpq_class v_;
};

namespace detail {

inline bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s)
    if (c < '0' || c > '9') return false;
  return true;
}

}  // namespace detail

inline rational rational::parse(std::string_view text) {
  // Trim ASCII whitespace: tokens may arrive padded from CSV cells.
  while (!text.empty() && (text.front() == ' ' || text.front() == '\t'))
    text.remove_prefix(1);
  while (!text.empty() && (text.back() == ' ' || text.back() == '\t'))
    text.remove_suffix(1);
  if (text.empty()) throw parse_error("empty numeric token");
  const std::string token(text);

  if (auto slash = text.find('/'); slash != std::string_view::npos) {
    std::string_view num = text.substr(0, slash);
    std::string_view den = text.substr(slash + 1);
    if (!detail::all_digits(num) || !detail::all_digits(den))
      throw parse_error("malformed fraction '" + token + "'");
    // Base 10 explicitly: the default base 0 would read leading zeros as octal.
    mpq_class q(std::string(num) + "/" + std::string(den), 10);
    if (q.get_den() == 0) throw parse_error("zero denominator in '" + token + "'");
    q.canonicalize();
    return rational(q);
  }

  // [digits][.digits][(e|E)[+-]digits], at least one digit overall.
  std::string_view mantissa = text;
  long exp10 = 0;
  if (auto e = text.find_first_of("eE"); e != std::string_view::npos) {
    std::string_view exp = text.substr(e + 1);
    mantissa = text.substr(0, e);
    bool neg = false;
    if (!exp.empty() && (exp.front() == '+' || exp.front() == '-')) {
      neg = exp.front() == '-';
      exp.remove_prefix(1);
    }
    if (!detail::all_digits(exp) || exp.size() > 6)
      throw parse_error("malformed exponent in '" + token + "'");
    for (char c : exp) exp10 = exp10 * 10 + (c - '0');
    if (neg) exp10 = -exp10;
  }
  std::string digits;
  if (auto dot = mantissa.find('.'); dot != std::string_view::npos) {
    std::string_view whole = mantissa.substr(0, dot);
    std::string_view frac = mantissa.substr(dot + 1);
    if (!whole.empty() && !detail::all_digits(whole))
      throw parse_error("malformed number '" + token + "'");
    if (!frac.empty() && !detail::all_digits(frac))
      throw parse_error("malformed number '" + token + "'");
    if (whole.empty() && frac.empty())
      throw parse_error("malformed number '" + token + "'");
    digits = std::string(whole) + std::string(frac);
    exp10 -= static_cast<long>(frac.size());
  } else {
    if (!detail::all_digits(mantissa))
      throw parse_error("malformed number '" + token + "'");
    digits = std::string(mantissa);
  }
  if (digits.empty()) throw parse_error("malformed number '" + token + "'");

  mpq_class q(mpz_class(digits, 10), 1);
  mpz_class scale;
  mpz_ui_pow_ui(scale.get_mpz_t(), 10,
                static_cast<unsigned long>(exp10 < 0 ? -exp10 : exp10));
  if (exp10 < 0)
    q /= scale;
  else
    q *= scale;
  q.canonicalize();
  return rational(q);
}

}  // namespace maxtimes
