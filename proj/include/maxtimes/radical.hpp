#pragma once

#include <compare>
#include <cstdio>
#include <cmath>
#include <memory>
#include <optional>
#include <string>
#include <utility>

#include "maxtimes/errors.hpp"
#include "maxtimes/rational.hpp"

namespace maxtimes {

// Exact nonnegative scalar of the form c * rho^e, where c is rational,
// rho = base^(1/root) is a fixed (possibly irrational) positive root, and
// e is an integer with 0 <= e < root. Because the max-times semiring never
// adds values, every quantity derived from a rational matrix and one root
// stays in this form, so products, inverses, and order comparisons remain
// exact even when the root is irrational. Comparisons clear the root by
// raising both sides to integer powers.
//
// Plain rationals embed as e == 0 with no root attached. Values carrying
// two different irrational roots can be compared but not multiplied.
class radical {
  struct root_ctx {
    rational base;       // positive, not a perfect d-th power for any d | root, d > 1
    unsigned long root;  // >= 2
  };

 public:
  radical() = default;

  radical(int n) : coeff_(n) {}

  radical(const rational& value) : coeff_(value) {}

  radical(long num, long den) : coeff_(num, den) {}

  // Exact k-th root of a nonnegative rational. The root is reduced first:
  // the largest exact d-th root with d | k is split off, so the attached
  // base is never itself a perfect power and purely rational results carry
  // no root at all (e.g. nth_root(8, 3) == 2, nth_root(64, 4) == 8^(1/2)).
  static radical nth_root(const rational& value, unsigned long k) {
    if (k == 0) throw invalid_input_error("radical: zeroth root");
    if (k == 1 || value.is_zero() || value == rational(1))
      return radical(value);
    rational reduced = value;
    unsigned long remaining = k;
    for (unsigned long d = k; d >= 2; --d) {
      if (k % d != 0) continue;
      if (auto r = value.root(d)) {
        reduced = *r;
        remaining = k / d;
        break;
      }
    }
    if (remaining == 1) return radical(reduced);
    radical out;
    out.coeff_ = rational(1);
    out.exp_ = 1;
    out.ctx_ = std::make_shared<const root_ctx>(root_ctx{reduced, remaining});
    return out;
  }

  bool is_zero() const { return coeff_.is_zero(); }

  bool is_rational() const { return exp_ == 0; }

  // The rational value; only meaningful when is_rational().
  const rational& rational_value() const {
    if (!is_rational())
      throw invalid_input_error("radical: value is irrational");
    return coeff_;
  }

  radical inverse() const {
    if (is_zero()) throw invalid_input_error("radical: inverse of zero");
    radical out;
    out.coeff_ = coeff_.inverse();
    if (exp_ != 0) {
      // 1 / (c * rho^e) = (1/(c*base)) * rho^(root-e)
      out.coeff_ = out.coeff_ / ctx_->base;
      out.exp_ = static_cast<long>(ctx_->root) - exp_;
      out.ctx_ = ctx_;
    }
    return out;
  }

  radical pow(unsigned long e) const {
    if (e == 0) return radical(rational(1));
    radical out;
    out.coeff_ = coeff_.pow(e);
    if (exp_ != 0 && !coeff_.is_zero()) {
      unsigned long total = static_cast<unsigned long>(exp_) * e;
      out.coeff_ *= ctx_->base.pow(total / ctx_->root);
      out.exp_ = static_cast<long>(total % ctx_->root);
      if (out.exp_ != 0) out.ctx_ = ctx_;
    }
    return out;
  }

  // Exact k-th root when one exists in this representation.
  std::optional<radical> root(unsigned long k) const {
    if (k == 0) throw invalid_input_error("radical: zeroth root");
    if (exp_ == 0) {
      radical r = nth_root(coeff_, k);
      return r;
    }
    if (exp_ % static_cast<long>(k) != 0) return std::nullopt;
    auto c = coeff_.root(k);
    if (!c) return std::nullopt;
    radical out;
    out.coeff_ = *c;
    out.exp_ = exp_ / static_cast<long>(k);
    out.ctx_ = ctx_;
    return out;
  }

  double to_double() const {
    double v = coeff_.to_double();
    if (exp_ != 0)
      v *= std::pow(ctx_->base.to_double(),
                    static_cast<double>(exp_) / static_cast<double>(ctx_->root));
    return v;
  }

  // Exact fraction string when the value is rational, otherwise a decimal
  // approximation with enough digits to round-trip a double.
  std::string str() const {
    if (is_rational()) return coeff_.str();
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", to_double());
    return buf;
  }

  friend radical operator*(const radical& a, const radical& b) {
    if (a.is_zero() || b.is_zero()) return radical();
    radical out;
    out.coeff_ = a.coeff_ * b.coeff_;
    if (a.exp_ == 0 && b.exp_ == 0) return out;
    if (a.exp_ != 0 && b.exp_ != 0 && !same_root(a, b))
      throw invalid_input_error("radical: product of two different roots");
    const auto& ctx = a.exp_ != 0 ? a.ctx_ : b.ctx_;
    long e = a.exp_ + b.exp_;
    if (e >= static_cast<long>(ctx->root)) {
      out.coeff_ *= ctx->base;
      e -= static_cast<long>(ctx->root);
    }
    out.exp_ = e;
    if (e != 0) out.ctx_ = ctx;
    return out;
  }

  friend radical operator/(const radical& a, const radical& b) {
    return a * b.inverse();
  }

  radical& operator*=(const radical& b) { return *this = *this * b; }

  friend bool operator==(const radical& a, const radical& b) {
    return (a <=> b) == std::strong_ordering::equal;
  }

  friend std::strong_ordering operator<=>(const radical& a, const radical& b) {
    if (a.is_zero() || b.is_zero()) {
      if (a.is_zero() && b.is_zero()) return std::strong_ordering::equal;
      return a.is_zero() ? std::strong_ordering::less
                         : std::strong_ordering::greater;
    }
    if (a.exp_ == 0 && b.exp_ == 0) return a.coeff_ <=> b.coeff_;
    if (a.exp_ == b.exp_ && (a.exp_ == 0 || same_root(a, b)))
      return a.coeff_ <=> b.coeff_;
    if (a.exp_ == 0 || b.exp_ == 0 || same_root(a, b)) {
      // Raise both sides to the root's power: rho^e becomes base^e.
      const auto& ctx = a.exp_ != 0 ? a.ctx_ : b.ctx_;
      rational lhs = a.coeff_.pow(ctx->root);
      if (a.exp_ != 0) lhs *= ctx->base.pow(static_cast<unsigned long>(a.exp_));
      rational rhs = b.coeff_.pow(ctx->root);
      if (b.exp_ != 0) rhs *= ctx->base.pow(static_cast<unsigned long>(b.exp_));
      return lhs <=> rhs;
    }
    // Distinct roots: raise to the product of both root indices.
    unsigned long k = a.ctx_->root * b.ctx_->root;
    rational lhs = a.coeff_.pow(k) * a.ctx_->base.pow(
                       static_cast<unsigned long>(a.exp_) * b.ctx_->root);
    rational rhs = b.coeff_.pow(k) * b.ctx_->base.pow(
                       static_cast<unsigned long>(b.exp_) * a.ctx_->root);
    return lhs <=> rhs;
  }

 private:
  static bool same_root(const radical& a, const radical& b) {
    return a.ctx_ == b.ctx_ ||
           (a.ctx_->root == b.ctx_->root && a.ctx_->base == b.ctx_->base);
  }

  rational coeff_;                      // nonnegative
  long exp_ = 0;                        // 0 <= exp_ < ctx_->root; 0 iff !ctx_
  std::shared_ptr<const root_ctx> ctx_;
};

}  // namespace maxtimes
