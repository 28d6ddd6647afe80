// Copyright 2026 The cuntzalg Authors
// SPDX-License-Identifier: Apache-2.0

#include "cuntz/scalar.hpp"

namespace cuntz {

Scalar& Scalar::operator*=(const Scalar& o) {
  if (im_.is_zero() && o.im_.is_zero()) {
    re_ *= o.re_;
    return *this;
  }
  Rational r = re_ * o.re_ - im_ * o.im_;
  Rational i = re_ * o.im_ + im_ * o.re_;
  re_ = r;
  im_ = i;
  return *this;
}

Scalar& Scalar::operator/=(const Scalar& o) {
  if (o.is_zero()) throw std::domain_error("scalar division by zero");
  if (o.im_.is_zero()) {
    re_ /= o.re_;
    im_ /= o.re_;
    return *this;
  }
  Rational n = o.norm2();
  *this *= o.conj();
  re_ /= n;
  im_ /= n;
  return *this;
}

std::string Scalar::to_string() const {
  if (im_.is_zero()) return re_.to_string();
  std::string s = "(" + re_.to_string();
  s += im_.sign() < 0 ? "-" : "+";
  s += im_.abs().to_string() + "i)";
  return s;
}

}  // namespace cuntz
