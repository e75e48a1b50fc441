#pragma once

#include <complex>
#include <string>
#include <vector>

#include "powsum/bigint.hpp"

namespace powsum {

// An element of Z[zeta_n] for prime n, stored on the power basis
// 1, zeta, ..., zeta^(n-2). The missing top power folds down through
// zeta^(n-1) = -(1 + zeta + ... + zeta^(n-2)), which keeps every element
// in exactly one coefficient vector of length n-1. For n = 2 the ring is
// plain Z (zeta = -1) and vectors have length 1.
class CycInt {
 public:
  CycInt() : order_(2), coeffs_(1, BigInt(0)) {}

  // Folds an arbitrary coefficient list (length <= n, entries indexing
  // powers zeta^0..) into canonical form.
  static CycInt make(unsigned order, std::vector<BigInt> raw);
  static CycInt zero(unsigned order);
  static CycInt one(unsigned order) { return from_int(order, 1); }
  static CycInt zeta(unsigned order);
  static CycInt zeta_pow(unsigned order, unsigned long e);
  static CycInt from_int(unsigned order, BigInt v);

  unsigned order() const { return order_; }
  const std::vector<BigInt>& coeffs() const { return coeffs_; }
  bool is_zero() const;
  bool is_rational() const;  // all coefficients above the constant vanish

  CycInt operator+(const CycInt& o) const;
  CycInt operator-(const CycInt& o) const;
  CycInt operator*(const CycInt& o) const;
  CycInt operator-() const;
  bool operator==(const CycInt& o) const;
  bool operator!=(const CycInt& o) const { return !(*this == o); }

  CycInt pow(unsigned long e) const;

  // Galois action zeta -> zeta^j, 1 <= j <= n-1.
  CycInt conjugate(unsigned j) const;

  std::complex<double> to_complex() const;

  std::string str(bool with_order = true) const;

  // Accepts what str() produces, plus loose variants ("2*z^2", "z - 1").
  // The literal's own "(n=N)" suffix wins; otherwise fallback_order is
  // used, and its absence everywhere is an error.
  static CycInt parse(const std::string& text, unsigned fallback_order = 0);

 private:
  CycInt(unsigned order, std::vector<BigInt> canonical)
      : order_(order), coeffs_(std::move(canonical)) {}

  unsigned order_;
  std::vector<BigInt> coeffs_;  // length order_ - 1
};

// Exact quotient a / b in Z[zeta_n]; throws std::domain_error when b is
// zero or does not divide a. Clears the denominator by the product of
// its Galois conjugates, reducing to division by the integer norm.
CycInt exact_div(const CycInt& a, const CycInt& b);

// Throws std::invalid_argument naming the smallest factor when n is not
// prime (or is < 2).
void require_prime_order(unsigned n);

}  // namespace powsum
