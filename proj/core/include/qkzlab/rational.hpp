#pragma once

// Exact rational scalars backed by GMP.

#include <gmpxx.h>

#include <compare>
#include <concepts>
#include <iosfwd>
#include <string>
#include <string_view>

namespace qkzlab {

/// Arbitrary-precision rational number, always in lowest terms with a
/// positive denominator.
class Rat {
 public:
  Rat() = default;

  template <std::integral I>
  Rat(I value) : q_(static_cast<long>(value)) {}  // NOLINT(google-explicit-constructor)

  Rat(long num, long den);
  explicit Rat(mpq_class q);

  /// Parses "p", "-p", "p/q" (whitespace around the value is ignored).
  /// Throws ConfigError on malformed input or a zero denominator.
  static Rat parse(std::string_view text);

  mpz_class numerator() const { return q_.get_num(); }
  mpz_class denominator() const { return q_.get_den(); }
  const mpq_class& raw() const { return q_; }

  bool is_zero() const { return sgn(q_) == 0; }
  bool is_integer() const { return q_.get_den() == 1; }
  int sign() const { return sgn(q_); }

  /// "p/q", or "p" when the denominator is one.
  std::string to_string() const;

  Rat operator-() const { return Rat(mpq_class(-q_)); }
  Rat& operator+=(const Rat& rhs);
  Rat& operator-=(const Rat& rhs);
  Rat& operator*=(const Rat& rhs);
  /// Throws std::domain_error on division by zero.
  Rat& operator/=(const Rat& rhs);

  friend Rat operator+(Rat lhs, const Rat& rhs) { return lhs += rhs; }
  friend Rat operator-(Rat lhs, const Rat& rhs) { return lhs -= rhs; }
  friend Rat operator*(Rat lhs, const Rat& rhs) { return lhs *= rhs; }
  friend Rat operator/(Rat lhs, const Rat& rhs) { return lhs /= rhs; }

  friend bool operator==(const Rat& a, const Rat& b) { return a.q_ == b.q_; }
  friend std::strong_ordering operator<=>(const Rat& a, const Rat& b) {
    const int c = cmp(a.q_, b.q_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

 private:
  mpq_class q_;
};

Rat pow(const Rat& base, unsigned exponent);
Rat factorial(unsigned n);

std::ostream& operator<<(std::ostream& os, const Rat& r);

// Scalar-ring hooks shared with the polynomial, series and matrix templates.
inline bool is_zero(const Rat& r) { return r.is_zero(); }
inline bool is_unit(const Rat& r) { return !r.is_zero(); }
Rat inverse(const Rat& r);
inline std::string to_string(const Rat& r) { return r.to_string(); }

}  // namespace qkzlab
