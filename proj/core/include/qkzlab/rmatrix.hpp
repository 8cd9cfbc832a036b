#pragma once

// The rational sl2 R-matrix and its local identities.

#include <string>
#include <vector>

#include "qkzlab/check_report.hpp"
#include "qkzlab/errors.hpp"
#include "qkzlab/hseries.hpp"
#include "qkzlab/ratfunc.hpp"
#include "qkzlab/rational.hpp"
#include "qkzlab/tensor_mat.hpp"

namespace qkzlab {

/// Bare: (zI + hP)/(z + h) at a numeric hbar.
/// Normalized: the bare matrix times the scalar exp(g(z)), as a series in a
/// formal hbar truncated at `order`.
class RMode {
 public:
  static RMode bare() { return RMode(false, 0); }
  /// Throws ConfigError unless order >= 1.
  static RMode normalized(int order);

  bool is_bare() const { return !normalized_; }
  bool is_normalized() const { return normalized_; }
  int order() const { return order_; }
  std::string name() const { return normalized_ ? "normalized" : "bare"; }

  friend bool operator==(const RMode&, const RMode&) = default;

 private:
  RMode(bool normalized, int order) : normalized_(normalized), order_(order) {}
  bool normalized_;
  int order_;
};

/// Permutation v_a⊗v_b -> v_b⊗v_a.
TensorMat<Rat> perm_p();
/// Q = P^{t2} = e e^T with e = v1⊗v1 + v2⊗v2.
TensorMat<Rat> q_matrix();

template <class S>
TensorMat<S> lift(const TensorMat<Rat>& m) {
  return m.map([](const Rat& x) { return S(x); });
}

/// (z I + hbar P)/(z + hbar) over any scalar ring with the usual hooks.
/// Throws PoleEncountered when z + hbar is not invertible.
template <class S>
TensorMat<S> bare_r(const S& z, const S& hbar) {
  const S den = z + hbar;
  if (!is_unit(den)) throw PoleEncountered("bare R-matrix pole: z + hbar = 0");
  const S inv = inverse(den);
  TensorMat<S> out = lift<S>(TensorMat<Rat>::identity(2)) * (z * inv);
  out += lift<S>(perm_p()) * (hbar * inv);
  return out;
}

/// Maclaurin coefficients T_0..T_{count-1} of tanh x = sum_k T_k x^{2k+1}.
std::vector<Rat> tanh_coefficients(int count);

/// g(z) = sum_k T_k (hbar/2)^{2k+1} (2k)! z^{-2k-1}, through hbar^order.
HSeries<RatFunc> scalar_factor_exponent(int order);

/// R(a + b hbar) with the scalar normalization, through hbar^order.
/// Throws PoleEncountered when a = 0.
TensorMat<HSeries<Rat>> normalized_r(const Spectral& arg, int order);

/// R(z + b hbar) with z symbolic, normalized, through hbar^order.
TensorMat<HSeries<RatFunc>> normalized_r_symbolic(const Rat& b, int order);

/// Evaluates the bare R-matrix at a numeric hbar.
struct BareR {
  using Scalar = Rat;
  Rat hbar;

  TensorMat<Rat> operator()(const Spectral& arg) const;
  RMode mode() const { return RMode::bare(); }
};

/// Evaluates the normalized R-matrix as an hbar-series.
struct NormalizedR {
  using Scalar = HSeries<Rat>;
  int order;

  TensorMat<HSeries<Rat>> operator()(const Spectral& arg) const { return normalized_r(arg, order); }
  RMode mode() const { return RMode::normalized(order); }
};

/// R^{(12)}(u-v) R^{(13)}(u) R^{(23)}(v) = R^{(23)}(v) R^{(13)}(u) R^{(12)}(u-v).
/// The hbar argument is ignored in normalized mode.
CheckReport ybe_check(const RMode& mode, const Rat& u, const Rat& v, const Rat& hbar);

/// R(z) R^{(21)}(-z) = c(z) I; the scalar c is reported in notes["scalar"].
CheckReport unitarity_check(const RMode& mode, const Rat& z, const Rat& hbar);

/// (R(z+2hbar)^{-1})^{t2} = (R(z)^{t2})^{-1}, normalized through hbar^order.
CheckReport crossing_check(int order, const Rat& z);

/// The same comparison for the bare matrix at a numeric hbar. It fails; the
/// two sides differ by the scalar notes["ratio"] = right/left.
CheckReport crossing_check_bare(const Rat& z, const Rat& hbar);

}  // namespace qkzlab
