// Copyright 2026 The cuntzalg Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <string>
#include <string_view>

#include "cuntz/rational.hpp"

namespace cuntz {

/// Gaussian rational re + im*i.
class Scalar {
 public:
  constexpr Scalar() = default;
  constexpr Scalar(Rational re) : re_(re) {}  // NOLINT(google-explicit-constructor)
  constexpr Scalar(std::int64_t re) : re_(re) {}  // NOLINT(google-explicit-constructor)
  constexpr Scalar(Rational re, Rational im) : re_(re), im_(im) {}

  static Scalar i() { return {Rational(0), Rational(1)}; }

  const Rational& re() const { return re_; }
  const Rational& im() const { return im_; }

  bool is_zero() const { return re_.is_zero() && im_.is_zero(); }
  bool is_real() const { return im_.is_zero(); }
  bool is_one() const { return im_.is_zero() && re_ == Rational(1); }

  Scalar conj() const { return {re_, -im_}; }
  /// |z|^2, always rational.
  Rational norm2() const { return re_ * re_ + im_ * im_; }

  Scalar operator-() const { return {-re_, -im_}; }
  Scalar& operator+=(const Scalar& o) {
    re_ += o.re_;
    im_ += o.im_;
    return *this;
  }
  Scalar& operator-=(const Scalar& o) {
    re_ -= o.re_;
    im_ -= o.im_;
    return *this;
  }
  Scalar& operator*=(const Scalar& o);
  Scalar& operator/=(const Scalar& o);

  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
  friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }
  friend bool operator==(const Scalar&, const Scalar&) = default;

  /// Text form used by the element grammar: "p/q" when real, "(a+bi)" otherwise.
  std::string to_string() const;

 private:
  Rational re_;
  Rational im_;
};

}  // namespace cuntz
