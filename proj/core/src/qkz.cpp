#include "qkzlab/qkz.hpp"

#include <algorithm>

namespace qkzlab {

QkzSystem::QkzSystem(std::vector<Spectral> points, Rat level, RMode mode, std::optional<Rat> hbar)
    : points_(std::move(points)), level_(std::move(level)), mode_(mode), hbar_(std::move(hbar)) {
  validate();
}

void QkzSystem::validate() const {
  if (points_.size() < 2) throw ConfigError("a qKZ system needs at least two points");
  if (mode_.is_bare() && !hbar_) throw ConfigError("bare mode needs a numeric hbar");
  if (hbar_ && hbar_->is_zero() && mode_.is_bare()) throw ConfigError("hbar must be nonzero");
  for (std::size_t a = 0; a < points_.size(); ++a) {
    for (std::size_t b = a + 1; b < points_.size(); ++b) {
      // In normalized mode two points with equal base put the argument of
      // the scalar factor at its pole.
      const bool same = mode_.is_bare() ? points_[a].at(*hbar_) == points_[b].at(*hbar_)
                                        : points_[a].base == points_[b].base;
      if (same) throw ConfigError("points must be pairwise distinct");
    }
  }
}

const Spectral& QkzSystem::point(int i) const {
  check_leg(i, n());
  return points_[static_cast<std::size_t>(i - 1)];
}

QkzSystem QkzSystem::shifted(int i, int sign) const {
  check_leg(i, n());
  QkzSystem out = *this;
  Spectral& p = out.points_[static_cast<std::size_t>(i - 1)];
  p = sign >= 0 ? p + step() : p - step();
  out.validate();
  return out;
}

QkzSystem QkzSystem::translated(const Rat& c) const {
  QkzSystem out = *this;
  for (auto& p : out.points_) p.base += c;
  return out;
}

QkzSystem QkzSystem::with_identity_factor(int op, int partner) const {
  check_leg(op, n());
  check_leg(partner, n());
  QkzSystem out = *this;
  out.identity_factor_ = std::make_pair(op, partner);
  return out;
}

BareR QkzSystem::bare_source() const {
  if (!hbar_) throw ConfigError("bare mode needs a numeric hbar");
  return BareR{*hbar_};
}

std::map<std::string, std::string> QkzSystem::describe() const {
  std::map<std::string, std::string> out;
  out["n"] = std::to_string(n());
  out["level"] = level_.to_string();
  if (hbar_ && mode_.is_bare()) out["hbar"] = hbar_->to_string();
  std::string pts;
  for (const auto& p : points_) pts += (pts.empty() ? "" : ", ") + p.to_string();
  out["points"] = "[" + pts + "]";
  return out;
}

template <class Source>
TensorMat<typename Source::Scalar> build_A(const QkzSystem& sys, const Source& r, int i) {
  using S = typename Source::Scalar;
  const int n = sys.n();
  check_leg(i, n);
  TensorMat<S> out = TensorMat<S>::identity(n);
  auto factor = [&](int j, const Spectral& arg) {
    if (sys.identity_factor() == std::make_pair(i, j)) return;
    try {
      out = out * embed(r(arg), n, i, j);
    } catch (const PoleEncountered& e) {
      throw PoleEncountered("A_" + std::to_string(i) + " factor R^(" + std::to_string(i) + "," + std::to_string(j) +
                            ")(" + arg.to_string() + "): " + e.what());
    }
  };
  for (int j = i - 1; j >= 1; --j) factor(j, sys.point(i) - sys.point(j) + sys.step());
  for (int j = n; j > i; --j) factor(j, sys.point(i) - sys.point(j));
  return out;
}

template TensorMat<Rat> build_A(const QkzSystem&, const BareR&, int);
template TensorMat<HSeries<Rat>> build_A(const QkzSystem&, const NormalizedR&, int);

TensorMat<Rat> build_A_bare(const QkzSystem& sys, int i) { return build_A(sys, sys.bare_source(), i); }

TensorMat<HSeries<Rat>> build_A_normalized(const QkzSystem& sys, int i) {
  return build_A(sys, sys.normalized_source(), i);
}

namespace {

template <class Source>
std::optional<Residual> flatness_residual(const QkzSystem& sys, const Source& r, int i, int j) {
  const auto lhs = build_A(sys.shifted(i), r, j) * build_A(sys, r, i);
  const auto rhs = build_A(sys.shifted(j), r, i) * build_A(sys, r, j);
  return first_residual(lhs - rhs);
}

}  // namespace

CheckReport flatness_check(const QkzSystem& sys, int i, int j) {
  check_leg(i, sys.n());
  check_leg(j, sys.n());
  if (i == j) throw BadLegIndex("flatness_check needs i != j");
  CheckReport rep;
  rep.identity = "flatness";
  rep.mode = sys.mode().name();
  rep.params = sys.describe();
  rep.params["i"] = std::to_string(i);
  rep.params["j"] = std::to_string(j);
  if (sys.mode().is_normalized()) {
    rep.order = sys.mode().order();
    rep.residual = flatness_residual(sys, sys.normalized_source(), i, j);
  } else {
    rep.residual = flatness_residual(sys, sys.bare_source(), i, j);
  }
  rep.pass = !rep.residual.has_value();
  rep.flags["degenerate_step"] = sys.degenerate_step();
  return rep;
}

template <class Source>
TensorMat<typename Source::Scalar> plaquette_monodromy(const QkzSystem& sys, const Source& r, int i, int j) {
  if (i == j) throw BadLegIndex("plaquette_monodromy needs i != j");
  return inverse(build_A(sys, r, i)) * inverse(build_A(sys.shifted(i), r, j)) * build_A(sys.shifted(j), r, i) *
         build_A(sys, r, j);
}

template TensorMat<Rat> plaquette_monodromy(const QkzSystem&, const BareR&, int, int);
template TensorMat<HSeries<Rat>> plaquette_monodromy(const QkzSystem&, const NormalizedR&, int, int);

template <class Source>
TransportResult<typename Source::Scalar> transport(const QkzSystem& sys, const Source& r, const LatticePath& path,
                                                   std::vector<typename Source::Scalar> v) {
  const std::size_t dim = std::size_t{1} << sys.n();
  if (v.size() != dim) {
    throw ConfigError("vector has length " + std::to_string(v.size()) + ", expected " + std::to_string(dim));
  }
  QkzSystem cur = sys;
  for (std::size_t s = 0; s < path.size(); ++s) {
    const PathStep& st = path[s];
    if (st.sign != 1 && st.sign != -1) throw ConfigError("path step sign must be +1 or -1");
    check_leg(st.i, cur.n());
    try {
      if (st.sign > 0) {
        v = build_A(cur, r, st.i).apply(v);
        cur = cur.shifted(st.i, 1);
      } else {
        QkzSystem prev = cur.shifted(st.i, -1);
        v = inverse(build_A(prev, r, st.i)).apply(v);
        cur = std::move(prev);
      }
    } catch (const PoleEncountered& e) {
      throw PathPoleEncountered(s, e.what());
    } catch (const ConfigError& e) {
      throw PathPoleEncountered(s, e.what());
    }
  }
  return {std::move(v), std::move(cur)};
}

template TransportResult<Rat> transport(const QkzSystem&, const BareR&, const LatticePath&, std::vector<Rat>);
template TransportResult<HSeries<Rat>> transport(const QkzSystem&, const NormalizedR&, const LatticePath&,
                                                 std::vector<HSeries<Rat>>);

}  // namespace qkzlab
