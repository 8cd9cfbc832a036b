#pragma once

#include <string>
#include <utility>
#include <vector>

#include "qkzlab/rational.hpp"

namespace qkzlab {

/// Dense univariate polynomial over Rat; coefficient i multiplies z^i.
/// Trailing zero coefficients are never stored, so the zero polynomial has
/// no coefficients and degree -1.
class Poly {
 public:
  Poly() = default;
  Poly(Rat constant);  // NOLINT(google-explicit-constructor)
  explicit Poly(std::vector<Rat> coeffs);

  static Poly variable();
  /// c * z^k
  static Poly monomial(Rat c, int k);

  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  const std::vector<Rat>& coeffs() const { return coeffs_; }
  /// Coefficient of z^i (zero past the degree).
  Rat coeff(int i) const;
  Rat leading() const;

  Rat eval(const Rat& a) const;
  Poly derivative() const;
  /// p(a + b*x) as a polynomial in x.
  Poly compose_linear(const Rat& a, const Rat& b) const;

  Poly operator-() const;
  Poly& operator+=(const Poly& rhs);
  Poly& operator-=(const Poly& rhs);
  Poly& operator*=(const Poly& rhs);
  Poly& operator*=(const Rat& c);

  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(const Poly& a, const Poly& b);
  friend Poly operator*(Poly a, const Rat& c) { return a *= c; }
  friend bool operator==(const Poly& a, const Poly& b) = default;

  std::string to_string(const std::string& var = "z") const;

 private:
  void trim();
  std::vector<Rat> coeffs_;
};

/// Euclidean division; throws std::domain_error when the divisor is zero.
std::pair<Poly, Poly> divmod(const Poly& num, const Poly& den);
/// Monic greatest common divisor (zero when both inputs are zero).
Poly gcd(const Poly& a, const Poly& b);

}  // namespace qkzlab
