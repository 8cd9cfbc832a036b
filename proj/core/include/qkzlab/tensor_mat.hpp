#pragma once

// Dense operators on V^{⊗n}, V = span(v1, v2).

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "qkzlab/errors.hpp"

namespace qkzlab {

/// Square matrix of side 2^n over the scalar ring S, stored row-major.
///
/// Basis vectors v_{a1}⊗...⊗v_{an} are numbered with leg 1 as the most
/// significant bit: index = sum_l (a_l - 1) * 2^{n-l}. For two legs the
/// order is (11, 12, 21, 22).
template <class S>
class TensorMat {
 public:
  TensorMat() = default;
  explicit TensorMat(int n_legs) : n_(n_legs), dim_(std::size_t{1} << n_legs), data_(dim_ * dim_, S(0)) {
    if (n_legs < 1) throw BadLegIndex("TensorMat needs at least one leg");
  }

  static TensorMat identity(int n_legs) {
    TensorMat m(n_legs);
    for (std::size_t i = 0; i < m.dim_; ++i) m(i, i) = S(1);
    return m;
  }

  int n_legs() const { return n_; }
  std::size_t dim() const { return dim_; }

  S& operator()(std::size_t r, std::size_t c) { return data_[r * dim_ + c]; }
  const S& operator()(std::size_t r, std::size_t c) const { return data_[r * dim_ + c]; }

  /// Applies f to every entry.
  template <class F>
  auto map(F f) const {
    using T = decltype(f(data_[0]));
    TensorMat<T> out(n_);
    for (std::size_t r = 0; r < dim_; ++r) {
      for (std::size_t c = 0; c < dim_; ++c) out(r, c) = f((*this)(r, c));
    }
    return out;
  }

  TensorMat& operator+=(const TensorMat& rhs) {
    check_same(rhs);
    for (std::size_t k = 0; k < data_.size(); ++k) data_[k] += rhs.data_[k];
    return *this;
  }
  TensorMat& operator-=(const TensorMat& rhs) {
    check_same(rhs);
    for (std::size_t k = 0; k < data_.size(); ++k) data_[k] -= rhs.data_[k];
    return *this;
  }
  TensorMat& operator*=(const S& c) {
    for (auto& x : data_) x = x * c;
    return *this;
  }

  friend TensorMat operator+(TensorMat a, const TensorMat& b) { return a += b; }
  friend TensorMat operator-(TensorMat a, const TensorMat& b) { return a -= b; }
  friend TensorMat operator*(TensorMat a, const S& c) { return a *= c; }
  friend TensorMat operator*(const S& c, TensorMat a) {
    for (auto& x : a.data_) x = c * x;
    return a;
  }

  friend TensorMat operator*(const TensorMat& a, const TensorMat& b) {
    a.check_same(b);
    TensorMat out(a.n_);
    const std::size_t d = a.dim_;
    for (std::size_t i = 0; i < d; ++i) {
      for (std::size_t k = 0; k < d; ++k) {
        const S& aik = a(i, k);
        if (is_zero(aik)) continue;
        for (std::size_t j = 0; j < d; ++j) {
          const S& bkj = b(k, j);
          if (is_zero(bkj)) continue;
          out(i, j) += aik * bkj;
        }
      }
    }
    return out;
  }

  friend bool operator==(const TensorMat& a, const TensorMat& b) {
    if (a.n_ != b.n_) return false;
    for (std::size_t k = 0; k < a.data_.size(); ++k) {
      if (!(a.data_[k] == b.data_[k])) return false;
    }
    return true;
  }

  std::vector<S> apply(const std::vector<S>& v) const {
    if (v.size() != dim_) throw std::invalid_argument("vector length does not match operator dimension");
    std::vector<S> out(dim_, S(0));
    for (std::size_t r = 0; r < dim_; ++r) {
      for (std::size_t c = 0; c < dim_; ++c) {
        if (is_zero((*this)(r, c)) || is_zero(v[c])) continue;
        out[r] += (*this)(r, c) * v[c];
      }
    }
    return out;
  }

  TensorMat transpose() const {
    TensorMat out(n_);
    for (std::size_t r = 0; r < dim_; ++r) {
      for (std::size_t c = 0; c < dim_; ++c) out(c, r) = (*this)(r, c);
    }
    return out;
  }

 private:
  void check_same(const TensorMat& rhs) const {
    if (n_ != rhs.n_) throw BadLegIndex("operators act on different numbers of legs");
  }

  int n_ = 0;
  std::size_t dim_ = 0;
  std::vector<S> data_;
};

inline void check_leg(int leg, int n_legs) {
  if (leg < 1 || leg > n_legs) {
    throw BadLegIndex("leg " + std::to_string(leg) + " outside 1.." + std::to_string(n_legs));
  }
}

/// Bit of basis index `idx` that carries leg `leg` (0 = v1, 1 = v2).
inline std::size_t leg_bit(int leg, int n_legs) { return std::size_t{1} << (n_legs - leg); }

/// Two-leg operator m placed on legs (i, j) of V^{⊗n}; the first tensor slot
/// of m acts on leg i, the second on leg j, identity elsewhere.
template <class S>
TensorMat<S> embed(const TensorMat<S>& m, int n, int i, int j) {
  if (m.n_legs() != 2) throw BadLegIndex("embed expects a two-leg operator");
  check_leg(i, n);
  check_leg(j, n);
  if (i == j) throw BadLegIndex("embed needs two distinct legs");
  const std::size_t bi = leg_bit(i, n);
  const std::size_t bj = leg_bit(j, n);
  const std::size_t mask = bi | bj;
  TensorMat<S> out(n);
  for (std::size_t r = 0; r < out.dim(); ++r) {
    const std::size_t rest = r & ~mask;
    const std::size_t mr = ((r & bi) ? 2 : 0) | ((r & bj) ? 1 : 0);
    for (std::size_t mc = 0; mc < 4; ++mc) {
      const S& x = m(mr, mc);
      if (is_zero(x)) continue;
      const std::size_t c = rest | ((mc & 2) ? bi : 0) | ((mc & 1) ? bj : 0);
      out(r, c) = x;
    }
  }
  return out;
}

/// Transposes the row and column indices of one leg.
template <class S>
TensorMat<S> partial_transpose(const TensorMat<S>& m, int leg) {
  check_leg(leg, m.n_legs());
  const std::size_t b = leg_bit(leg, m.n_legs());
  TensorMat<S> out(m.n_legs());
  for (std::size_t r = 0; r < m.dim(); ++r) {
    for (std::size_t c = 0; c < m.dim(); ++c) {
      // Swap the leg's bit between row and column.
      const std::size_t r2 = (r & ~b) | (c & b);
      const std::size_t c2 = (c & ~b) | (r & b);
      out(r2, c2) = m(r, c);
    }
  }
  return out;
}

/// Exact inverse by Gauss-Jordan elimination. A pivot must be a unit of S
/// (for series: invertible constant term). Throws SingularOperator.
template <class S>
TensorMat<S> inverse(const TensorMat<S>& m) {
  const std::size_t d = m.dim();
  TensorMat<S> a = m;
  TensorMat<S> inv = TensorMat<S>::identity(m.n_legs());
  for (std::size_t col = 0; col < d; ++col) {
    std::size_t piv = d;
    for (std::size_t r = col; r < d; ++r) {
      if (is_unit(a(r, col))) {
        piv = r;
        break;
      }
    }
    if (piv == d) throw SingularOperator("no invertible pivot in column " + std::to_string(col));
    if (piv != col) {
      for (std::size_t c = 0; c < d; ++c) {
        std::swap(a(piv, c), a(col, c));
        std::swap(inv(piv, c), inv(col, c));
      }
    }
    const S p = inverse(a(col, col));
    for (std::size_t c = 0; c < d; ++c) {
      if (!is_zero(a(col, c))) a(col, c) = a(col, c) * p;
      if (!is_zero(inv(col, c))) inv(col, c) = inv(col, c) * p;
    }
    for (std::size_t r = 0; r < d; ++r) {
      if (r == col || is_zero(a(r, col))) continue;
      const S f = a(r, col);
      for (std::size_t c = 0; c < d; ++c) {
        if (!is_zero(a(col, c))) a(r, c) -= f * a(col, c);
        if (!is_zero(inv(col, c))) inv(r, c) -= f * inv(col, c);
      }
    }
  }
  return inv;
}

template <class S>
bool is_identity(const TensorMat<S>& m) {
  return m == TensorMat<S>::identity(m.n_legs());
}

}  // namespace qkzlab
