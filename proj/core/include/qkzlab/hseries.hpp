#pragma once

// Truncated power series in the deformation parameter hbar.

#include <algorithm>
#include <climits>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "qkzlab/errors.hpp"
#include "qkzlab/ratfunc.hpp"
#include "qkzlab/rational.hpp"

namespace qkzlab {

/// Power series sum_m c_m hbar^m with coefficients in C (Rat or RatFunc).
///
/// The series carries a truncation order N: coefficients of hbar^0..hbar^N
/// are known, the remainder is O(hbar^{N+1}). A series whose order is
/// kExact is a polynomial in hbar known exactly; constants converted from C
/// are exact. Binary operations truncate to the smaller order of the two
/// operands, and equality compares the coefficients both sides know.
template <class C>
class HSeries {
 public:
  static constexpr int kExact = INT_MAX;

  HSeries() = default;
  HSeries(C constant) : coeffs_{std::move(constant)} { trim(); }  // NOLINT(google-explicit-constructor)
  template <std::integral I>
  HSeries(I constant) : HSeries(C(constant)) {}  // NOLINT(google-explicit-constructor)
  HSeries(std::vector<C> coeffs, int order) : coeffs_(std::move(coeffs)), order_(order) {
    if (order_ < 0) throw std::invalid_argument("HSeries: negative truncation order");
    truncate_storage();
    trim();
  }

  /// hbar itself, known to the given order.
  static HSeries hbar(int order = kExact) { return HSeries({C(0), C(1)}, order); }

  int order() const { return order_; }
  bool is_exact() const { return order_ == kExact; }
  /// Highest stored power (-1 for the zero series).
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  const std::vector<C>& coeffs() const { return coeffs_; }
  C coeff(int m) const {
    if (m < 0 || m >= static_cast<int>(coeffs_.size())) return C(0);
    return coeffs_[static_cast<std::size_t>(m)];
  }

  HSeries truncated(int order) const {
    HSeries r = *this;
    r.order_ = std::min(order_, order);
    r.truncate_storage();
    return r;
  }

  HSeries operator-() const {
    HSeries r = *this;
    for (auto& c : r.coeffs_) c = -c;
    return r;
  }

  HSeries& operator+=(const HSeries& rhs) {
    order_ = std::min(order_, rhs.order_);
    if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size(), C(0));
    for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] += rhs.coeffs_[i];
    truncate_storage();
    trim();
    return *this;
  }
  HSeries& operator-=(const HSeries& rhs) { return *this += -rhs; }
  HSeries& operator*=(const HSeries& rhs) { return *this = *this * rhs; }

  friend HSeries operator+(HSeries a, const HSeries& b) { return a += b; }
  friend HSeries operator-(HSeries a, const HSeries& b) { return a -= b; }
  friend HSeries operator*(const HSeries& a, const HSeries& b) {
    HSeries r;
    r.order_ = std::min(a.order_, b.order_);
    if (a.coeffs_.empty() || b.coeffs_.empty()) return r;
    std::size_t len = a.coeffs_.size() + b.coeffs_.size() - 1;
    if (r.order_ != kExact) len = std::min(len, static_cast<std::size_t>(r.order_) + 1);
    r.coeffs_.assign(len, C(0));
    for (std::size_t i = 0; i < a.coeffs_.size() && i < len; ++i) {
      if (is_zero(a.coeffs_[i])) continue;
      for (std::size_t j = 0; j < b.coeffs_.size() && i + j < len; ++j) {
        if (is_zero(b.coeffs_[j])) continue;
        r.coeffs_[i + j] += a.coeffs_[i] * b.coeffs_[j];
      }
    }
    r.trim();
    return r;
  }

  /// Equal through the smaller of the two truncation orders.
  friend bool operator==(const HSeries& a, const HSeries& b) {
    const int known = std::min(a.order_, b.order_);
    const int top = std::max(a.degree(), b.degree());
    for (int m = 0; m <= top && m <= known; ++m) {
      if (a.coeff(m) != b.coeff(m)) return false;
    }
    return true;
  }

  std::string to_string() const {
    std::string out;
    for (std::size_t m = 0; m < coeffs_.size(); ++m) {
      if (is_zero(coeffs_[m])) continue;
      if (!out.empty()) out += " + ";
      out += "(" + qkzlab::to_string(coeffs_[m]) + ")";
      if (m > 0) out += "*h" + (m > 1 ? "^" + std::to_string(m) : std::string());
    }
    if (out.empty()) out = "0";
    if (!is_exact()) out += " + O(h^" + std::to_string(order_ + 1) + ")";
    return out;
  }

 private:
  void truncate_storage() {
    if (order_ != kExact && coeffs_.size() > static_cast<std::size_t>(order_) + 1) {
      coeffs_.resize(static_cast<std::size_t>(order_) + 1);
    }
  }
  void trim() {
    while (!coeffs_.empty() && is_zero(coeffs_.back())) coeffs_.pop_back();
  }

  std::vector<C> coeffs_;
  int order_ = kExact;
};

template <class C>
bool is_zero(const HSeries<C>& s) {
  return s.degree() < 0;
}

/// A series is a unit iff its constant coefficient is.
template <class C>
bool is_unit(const HSeries<C>& s) {
  return is_unit(s.coeff(0));
}

/// Multiplicative inverse through the series' own order. An exact series is
/// invertible only when it is a constant (otherwise the inverse has
/// infinitely many terms); truncate it first.
template <class C>
HSeries<C> inverse(const HSeries<C>& s) {
  if (!is_unit(s)) throw NotInvertible("series with non-invertible constant term");
  const C c0inv = inverse(s.coeff(0));
  if (s.degree() == 0) return HSeries<C>({c0inv}, s.order());
  if (s.is_exact()) throw std::domain_error("inverse of a non-constant exact series needs a truncation order");
  const int n = s.order();
  std::vector<C> b(static_cast<std::size_t>(n) + 1, C(0));
  b[0] = c0inv;
  for (int m = 1; m <= n; ++m) {
    C acc(0);
    for (int k = 1; k <= m && k <= s.degree(); ++k) acc += s.coeff(k) * b[static_cast<std::size_t>(m - k)];
    b[static_cast<std::size_t>(m)] = -(c0inv * acc);
  }
  return HSeries<C>(std::move(b), n);
}

/// exp(s) = sum_{m<=N} s^m/m!, for s without constant term.
template <class C>
HSeries<C> hseries_exp(const HSeries<C>& s) {
  if (!is_zero(s.coeff(0))) throw NonNilpotentConstantTerm("exp of a series with nonzero constant term");
  if (is_zero(s)) return HSeries<C>({C(1)}, s.order());
  if (s.is_exact()) throw std::domain_error("exp of a nonzero exact series needs a truncation order");
  // e' = s' e, i.e. m e_m = sum_k k s_k e_{m-k}.
  const int n = s.order();
  std::vector<C> e(static_cast<std::size_t>(n) + 1, C(0));
  e[0] = C(1);
  for (int m = 1; m <= n; ++m) {
    C acc(0);
    for (int k = 1; k <= m && k <= s.degree(); ++k) {
      acc += C(Rat(k)) * s.coeff(k) * e[static_cast<std::size_t>(m - k)];
    }
    e[static_cast<std::size_t>(m)] = acc * C(Rat(1, m));
  }
  return HSeries<C>(std::move(e), n);
}

template <class C>
std::string to_string(const HSeries<C>& s) {
  return s.to_string();
}

/// A spectral argument base + hbar_coeff * hbar, e.g. z_{ij} + hbar(k+2).
struct Spectral {
  Rat base;
  Rat hbar_coeff;

  Spectral() = default;
  Spectral(Rat b) : base(std::move(b)) {}  // NOLINT(google-explicit-constructor)
  Spectral(Rat b, Rat h) : base(std::move(b)), hbar_coeff(std::move(h)) {}

  /// Value at a numeric hbar.
  Rat at(const Rat& hbar) const { return base + hbar_coeff * hbar; }
  /// The exact polynomial base + hbar_coeff*hbar.
  HSeries<Rat> series() const { return HSeries<Rat>({base, hbar_coeff}, HSeries<Rat>::kExact); }

  Spectral operator-() const { return {-base, -hbar_coeff}; }
  friend Spectral operator+(const Spectral& a, const Spectral& b) {
    return {a.base + b.base, a.hbar_coeff + b.hbar_coeff};
  }
  friend Spectral operator-(const Spectral& a, const Spectral& b) {
    return {a.base - b.base, a.hbar_coeff - b.hbar_coeff};
  }
  friend bool operator==(const Spectral& a, const Spectral& b) = default;

  std::string to_string() const;
};

/// Taylor expansion of F(a + b*hbar) through hbar^N.
/// Throws PoleEncountered when den(F)(a) == 0.
HSeries<Rat> shift_in_hbar(const RatFunc& f, const Rat& a, const Rat& b, int order);

/// F(z + b*hbar) = sum_m F^(m)(z) (b hbar)^m / m! with z kept symbolic.
HSeries<RatFunc> taylor_in_hbar(const RatFunc& f, const Rat& b, int order);

/// Substitutes z = a + b*hbar into a series whose coefficients are rational
/// functions of z and re-expands in hbar.
HSeries<Rat> substitute(const HSeries<RatFunc>& s, const Spectral& arg, int order);

/// s(z + b*hbar) with z kept symbolic.
HSeries<RatFunc> shift_argument(const HSeries<RatFunc>& s, const Rat& b, int order);

}  // namespace qkzlab
