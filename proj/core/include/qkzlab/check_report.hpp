#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>

#include "qkzlab/hseries.hpp"
#include "qkzlab/rational.hpp"
#include "qkzlab/tensor_mat.hpp"

namespace qkzlab {

/// First nonzero entry of a difference of the two sides of an identity.
struct Residual {
  std::string value;
  std::size_t row = 0;
  std::size_t col = 0;
  std::optional<int> hbar_power;

  friend bool operator==(const Residual&, const Residual&) = default;
};

/// Outcome of one identity check. Serializes to JSON via to_json().
struct CheckReport {
  std::string identity;
  std::string mode;  // "bare" or "normalized"
  std::optional<int> order;
  std::map<std::string, std::string> params;
  bool pass = false;
  std::optional<Residual> residual;
  std::map<std::string, std::string> notes;
  std::map<std::string, bool> flags;

  friend bool operator==(const CheckReport&, const CheckReport&) = default;
};

/// Compact JSON (sorted keys). Rationals are strings.
std::string to_json(const CheckReport& report, int indent = -1);
/// Throws ConfigError when the text is not a report.
CheckReport report_from_json(const std::string& text);

inline std::optional<Residual> first_residual(const TensorMat<Rat>& diff) {
  for (std::size_t r = 0; r < diff.dim(); ++r) {
    for (std::size_t c = 0; c < diff.dim(); ++c) {
      if (!diff(r, c).is_zero()) return Residual{diff(r, c).to_string(), r, c, std::nullopt};
    }
  }
  return std::nullopt;
}

/// Lowest nonzero hbar power wins; within it, the first entry in row-major order.
template <class C>
std::optional<Residual> first_residual(const TensorMat<HSeries<C>>& diff) {
  int known = HSeries<C>::kExact;
  int top = -1;
  for (std::size_t r = 0; r < diff.dim(); ++r) {
    for (std::size_t c = 0; c < diff.dim(); ++c) {
      known = std::min(known, diff(r, c).order());
      top = std::max(top, diff(r, c).degree());
    }
  }
  for (int m = 0; m <= top && m <= known; ++m) {
    for (std::size_t r = 0; r < diff.dim(); ++r) {
      for (std::size_t c = 0; c < diff.dim(); ++c) {
        const C x = diff(r, c).coeff(m);
        if (!is_zero(x)) return Residual{to_string(x), r, c, m};
      }
    }
  }
  return std::nullopt;
}

}  // namespace qkzlab
