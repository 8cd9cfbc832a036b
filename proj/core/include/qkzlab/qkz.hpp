#pragma once

// qKZ difference operators A_i(z) and their discrete flatness.

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "qkzlab/check_report.hpp"
#include "qkzlab/hseries.hpp"
#include "qkzlab/rmatrix.hpp"
#include "qkzlab/tensor_mat.hpp"

namespace qkzlab {

/// A path step: z -> z + sign * eta * delta_i.
struct PathStep {
  int i = 1;
  int sign = 1;
  friend bool operator==(const PathStep&, const PathStep&) = default;
};

using LatticePath = std::vector<PathStep>;

/// Raised by transport when a step cannot be taken; `step` is its 0-based index.
class PathPoleEncountered : public PoleEncountered {
 public:
  PathPoleEncountered(std::size_t step, const std::string& what)
      : PoleEncountered("step " + std::to_string(step) + ": " + what), step_(step) {}
  std::size_t step() const { return step_; }

 private:
  std::size_t step_;
};

/// Configuration of the qKZ connection: points z_1..z_n, level k, hbar and
/// the R-matrix mode. Points are a + b*hbar so that lattice shifts by the
/// step eta = hbar (k + 2) stay exact in the formal-hbar mode.
class QkzSystem {
 public:
  /// Bare mode requires a numeric hbar; normalized mode ignores it.
  /// Throws ConfigError on fewer than two points, a missing hbar or
  /// coinciding points.
  QkzSystem(std::vector<Spectral> points, Rat level, RMode mode, std::optional<Rat> hbar = std::nullopt);

  int n() const { return static_cast<int>(points_.size()); }
  const std::vector<Spectral>& points() const { return points_; }
  const Spectral& point(int i) const;
  const Rat& level() const { return level_; }
  const RMode& mode() const { return mode_; }
  const std::optional<Rat>& hbar() const { return hbar_; }

  /// eta = hbar (k + 2), as a spectral value with zero base.
  Spectral step() const { return Spectral(Rat(0), level_ + Rat(2)); }
  /// True at k = -2, where the shifts vanish.
  bool degenerate_step() const { return level_ == Rat(-2); }

  /// The system at z + sign * eta * delta_i.
  QkzSystem shifted(int i, int sign = 1) const;
  /// The system with every point translated by c.
  QkzSystem translated(const Rat& c) const;

  /// Test hook: in A_op, the factor R^{(op, partner)} is replaced by I.
  QkzSystem with_identity_factor(int op, int partner) const;
  std::optional<std::pair<int, int>> identity_factor() const { return identity_factor_; }

  BareR bare_source() const;
  NormalizedR normalized_source() const { return NormalizedR{mode_.order()}; }

  /// Parameter map for reports.
  std::map<std::string, std::string> describe() const;

 private:
  void validate() const;

  std::vector<Spectral> points_;
  Rat level_;
  RMode mode_;
  std::optional<Rat> hbar_;
  std::optional<std::pair<int, int>> identity_factor_;
};

/// A_i = R^{(i,i-1)}(z_{i,i-1} + eta) ... R^{(i,1)}(z_{i,1} + eta)
///       R^{(i,n)}(z_{i,n}) ... R^{(i,i+1)}(z_{i,i+1}).
/// Throws PoleEncountered naming the failing factor, BadLegIndex.
template <class Source>
TensorMat<typename Source::Scalar> build_A(const QkzSystem& sys, const Source& r, int i);

TensorMat<Rat> build_A_bare(const QkzSystem& sys, int i);
TensorMat<HSeries<Rat>> build_A_normalized(const QkzSystem& sys, int i);

/// A_j(z + eta delta_i) A_i(z) = A_i(z + eta delta_j) A_j(z).
CheckReport flatness_check(const QkzSystem& sys, int i, int j);

/// A_i(z)^{-1} A_j(z + eta delta_i)^{-1} A_i(z + eta delta_j) A_j(z).
template <class Source>
TensorMat<typename Source::Scalar> plaquette_monodromy(const QkzSystem& sys, const Source& r, int i, int j);

template <class S>
struct TransportResult {
  std::vector<S> vector;
  QkzSystem system;
};

/// Forward steps apply A_i(z); backward steps apply A_i(z - eta delta_i)^{-1}.
/// Throws PathPoleEncountered (with the step index) or SingularOperator.
template <class Source>
TransportResult<typename Source::Scalar> transport(const QkzSystem& sys, const Source& r, const LatticePath& path,
                                                   std::vector<typename Source::Scalar> v);

}  // namespace qkzlab
