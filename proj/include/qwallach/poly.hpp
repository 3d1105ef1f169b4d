#pragma once

// Univariate polynomials over the integers, Z[q].
//
// Coefficients are GMP integers stored densely in ascending degree order.
// The representation is always normalized (no trailing zero coefficients),
// so structural equality is polynomial equality.

#include <gmpxx.h>

#include <cstddef>
#include <string>
#include <vector>

namespace qwallach {

using BigInt = mpz_class;

class Poly {
 public:
  Poly() = default;
  Poly(long c);  // NOLINT(google-explicit-constructor): constants convert freely
  Poly(const BigInt& c);  // NOLINT(google-explicit-constructor)
  explicit Poly(std::vector<BigInt> coeffs);

  /// c * q^degree
  static Poly monomial(const BigInt& c, std::size_t degree);
  /// The indeterminate q.
  static Poly q() { return monomial(1, 1); }

  bool is_zero() const { return coeffs_.empty(); }
  /// Degree, or -1 for the zero polynomial.
  long degree() const { return static_cast<long>(coeffs_.size()) - 1; }
  const std::vector<BigInt>& coeffs() const { return coeffs_; }
  /// Coefficient of q^i; zero beyond the degree.
  BigInt coeff(std::size_t i) const;

  Poly& operator+=(const Poly& rhs);
  Poly& operator-=(const Poly& rhs);
  Poly& operator*=(const Poly& rhs);
  Poly operator-() const;

  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(const Poly& a, const Poly& b);
  friend bool operator==(const Poly&, const Poly&) = default;

  /// Exact Horner evaluation at q = x.
  BigInt eval(const BigInt& x) const;

  /// "a0 + a1*q + a2*q^2" with zero terms omitted; "0" for the zero polynomial.
  std::string to_string() const;

 private:
  void normalize();

  std::vector<BigInt> coeffs_;
};

/// The q-integer [k]_q = 1 + q + ... + q^(k-1); [0]_q = 0.
Poly q_int(unsigned k);

inline BigInt eval(const Poly& p, const BigInt& x) { return p.eval(x); }

}  // namespace qwallach
