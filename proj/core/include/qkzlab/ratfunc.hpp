#pragma once

#include <string>

#include "qkzlab/poly.hpp"
#include "qkzlab/rational.hpp"

namespace qkzlab {

/// Reduced quotient num/den of polynomials over Rat. The canonical form
/// (coprime parts, monic denominator) is restored after every operation, so
/// structural equality is mathematical equality.
class RatFunc {
 public:
  RatFunc() : den_(Rat(1)) {}
  template <std::integral I>
  RatFunc(I value) : RatFunc(Rat(value)) {}  // NOLINT(google-explicit-constructor)
  RatFunc(Rat constant);                      // NOLINT(google-explicit-constructor)
  RatFunc(Poly p);                            // NOLINT(google-explicit-constructor)
  /// Throws std::domain_error when den is zero.
  RatFunc(Poly num, Poly den);

  static RatFunc variable() { return RatFunc(Poly::variable()); }

  const Poly& num() const { return num_; }
  const Poly& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }

  /// Exact value at a; throws PoleEncountered when den(a) == 0.
  Rat eval(const Rat& a) const;
  /// Quotient-rule derivative, reduced.
  RatFunc derivative() const;
  /// F(z + c).
  RatFunc shift(const Rat& c) const;

  RatFunc operator-() const;
  RatFunc& operator+=(const RatFunc& rhs);
  RatFunc& operator-=(const RatFunc& rhs);
  RatFunc& operator*=(const RatFunc& rhs);
  /// Throws NotInvertible on division by the zero function.
  RatFunc& operator/=(const RatFunc& rhs);

  friend RatFunc operator+(RatFunc a, const RatFunc& b) { return a += b; }
  friend RatFunc operator-(RatFunc a, const RatFunc& b) { return a -= b; }
  friend RatFunc operator*(RatFunc a, const RatFunc& b) { return a *= b; }
  friend RatFunc operator/(RatFunc a, const RatFunc& b) { return a /= b; }
  friend bool operator==(const RatFunc& a, const RatFunc& b) = default;

  std::string to_string(const std::string& var = "z") const;

 private:
  void canonicalize();
  Poly num_;
  Poly den_;
};

RatFunc ratfunc_derivative(const RatFunc& f);
Rat ratfunc_eval(const RatFunc& f, const Rat& a);

inline bool is_zero(const RatFunc& f) { return f.is_zero(); }
inline bool is_unit(const RatFunc& f) { return !f.is_zero(); }
RatFunc inverse(const RatFunc& f);
inline std::string to_string(const RatFunc& f) { return f.to_string(); }

}  // namespace qkzlab
