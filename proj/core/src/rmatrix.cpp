#include "qkzlab/rmatrix.hpp"

namespace qkzlab {

namespace {

using Series = HSeries<Rat>;

std::string mode_tag(const RMode& mode) { return mode.name(); }

/// hbar-series of the bare matrix at z = a + b hbar.
TensorMat<Series> bare_series(const Spectral& arg, int order) {
  if (arg.base.is_zero()) throw PoleEncountered("R-matrix pole: argument " + arg.to_string() + " has zero base");
  const Series z = arg.series();
  const Series h = Series::hbar();
  const Series inv = inverse((z + h).truncated(order));
  TensorMat<Series> out = lift<Series>(TensorMat<Rat>::identity(2)) * (z * inv);
  out += lift<Series>(perm_p()) * (h * inv);
  return out;
}

template <class Source>
CheckReport ybe_with(const Source& r, const Rat& u, const Rat& v) {
  const auto r12 = embed(r(Spectral(u - v)), 3, 1, 2);
  const auto r13 = embed(r(Spectral(u)), 3, 1, 3);
  const auto r23 = embed(r(Spectral(v)), 3, 2, 3);
  const auto lhs = r12 * r13 * r23;
  const auto rhs = r23 * r13 * r12;
  CheckReport rep;
  rep.identity = "ybe";
  rep.residual = first_residual(lhs - rhs);
  rep.pass = !rep.residual.has_value();
  return rep;
}

}  // namespace

RMode RMode::normalized(int order) {
  if (order < 1) throw ConfigError("normalized mode needs truncation order >= 1");
  return RMode(true, order);
}

TensorMat<Rat> perm_p() {
  TensorMat<Rat> p(2);
  p(0, 0) = 1;
  p(1, 2) = 1;
  p(2, 1) = 1;
  p(3, 3) = 1;
  return p;
}

TensorMat<Rat> q_matrix() {
  TensorMat<Rat> q(2);
  for (std::size_t r : {0u, 3u}) {
    for (std::size_t c : {0u, 3u}) q(r, c) = 1;
  }
  return q;
}

std::vector<Rat> tanh_coefficients(int count) {
  if (count <= 0) return {};
  const std::size_t len = 2 * static_cast<std::size_t>(count);
  std::vector<Rat> sinh_c(len), cosh_c(len), tanh_c(len);
  for (std::size_t m = 0; m < len; ++m) {
    const Rat inv_fact = inverse(factorial(static_cast<unsigned>(m)));
    (m % 2 ? sinh_c : cosh_c)[m] = inv_fact;
  }
  // cosh * tanh = sinh, cosh_0 = 1.
  for (std::size_t m = 0; m < len; ++m) {
    Rat acc = sinh_c[m];
    for (std::size_t k = 1; k <= m; ++k) acc -= cosh_c[k] * tanh_c[m - k];
    tanh_c[m] = acc;
  }
  std::vector<Rat> out;
  for (int k = 0; k < count; ++k) out.push_back(tanh_c[2 * static_cast<std::size_t>(k) + 1]);
  return out;
}

HSeries<RatFunc> scalar_factor_exponent(int order) {
  if (order < 1) throw std::invalid_argument("scalar_factor_exponent: order must be >= 1");
  const int count = (order + 1) / 2;
  const std::vector<Rat> t = tanh_coefficients(count);
  std::vector<RatFunc> coeffs(static_cast<std::size_t>(order) + 1);
  for (int k = 0; k < count; ++k) {
    const int p = 2 * k + 1;
    const Rat c = t[static_cast<std::size_t>(k)] * pow(Rat(1, 2), static_cast<unsigned>(p)) *
                  factorial(static_cast<unsigned>(2 * k));
    coeffs[static_cast<std::size_t>(p)] = RatFunc(Poly(c), Poly::monomial(Rat(1), p));
  }
  return HSeries<RatFunc>(std::move(coeffs), order);
}

TensorMat<Series> normalized_r(const Spectral& arg, int order) {
  if (order < 1) throw ConfigError("normalized R needs truncation order >= 1");
  TensorMat<Series> m = bare_series(arg, order);
  const Series scalar = hseries_exp(substitute(scalar_factor_exponent(order), arg, order));
  return m * scalar;
}

TensorMat<HSeries<RatFunc>> normalized_r_symbolic(const Rat& b, int order) {
  if (order < 1) throw ConfigError("normalized R needs truncation order >= 1");
  using SR = HSeries<RatFunc>;
  const SR z({RatFunc::variable(), RatFunc(b)}, SR::kExact);
  const SR h = SR::hbar();
  const SR inv = inverse((z + h).truncated(order));
  TensorMat<SR> out = lift<SR>(TensorMat<Rat>::identity(2)) * (z * inv);
  out += lift<SR>(perm_p()) * (h * inv);
  const SR g = shift_argument(scalar_factor_exponent(order), b, order);
  return out * hseries_exp(g);
}

TensorMat<Rat> BareR::operator()(const Spectral& arg) const {
  const Rat z = arg.at(hbar);
  if ((z + hbar).is_zero()) {
    throw PoleEncountered("bare R-matrix pole at argument " + z.to_string() + " (hbar = " + hbar.to_string() + ")");
  }
  return bare_r(z, hbar);
}

CheckReport ybe_check(const RMode& mode, const Rat& u, const Rat& v, const Rat& hbar) {
  CheckReport rep = mode.is_bare() ? ybe_with(BareR{hbar}, u, v) : ybe_with(NormalizedR{mode.order()}, u, v);
  rep.mode = mode_tag(mode);
  if (mode.is_normalized()) rep.order = mode.order();
  rep.params = {{"u", u.to_string()}, {"v", v.to_string()}};
  if (mode.is_bare()) rep.params["hbar"] = hbar.to_string();
  return rep;
}

CheckReport unitarity_check(const RMode& mode, const Rat& z, const Rat& hbar) {
  CheckReport rep;
  rep.identity = "unitarity";
  rep.mode = mode_tag(mode);
  rep.params = {{"z", z.to_string()}};
  const TensorMat<Rat> p = perm_p();
  if (mode.is_bare()) {
    rep.params["hbar"] = hbar.to_string();
    const BareR r{hbar};
    const TensorMat<Rat> prod = r(Spectral(z)) * (p * r(Spectral(-z)) * p);
    const Rat c = prod(0, 0);
    rep.residual = first_residual(prod - TensorMat<Rat>::identity(2) * c);
    rep.notes["scalar"] = c.to_string();
    rep.flags["scalar_is_one"] = c == Rat(1);
  } else {
    rep.order = mode.order();
    const NormalizedR r{mode.order()};
    const TensorMat<Series> ps = lift<Series>(p);
    const TensorMat<Series> prod = r(Spectral(z)) * (ps * r(Spectral(-z)) * ps);
    const Series c = prod(0, 0);
    rep.residual = first_residual(prod - lift<Series>(TensorMat<Rat>::identity(2)) * c);
    rep.notes["scalar"] = c.to_string();
    rep.flags["scalar_is_one"] = c == Series(1).truncated(mode.order());
  }
  rep.pass = !rep.residual.has_value();
  return rep;
}

CheckReport crossing_check(int order, const Rat& z) {
  const NormalizedR r{order};
  const auto left = partial_transpose(inverse(r(Spectral(z, 2))), 2);
  const auto right = inverse(partial_transpose(r(Spectral(z)), 2));
  CheckReport rep;
  rep.identity = "crossing";
  rep.mode = "normalized";
  rep.order = order;
  rep.params = {{"z", z.to_string()}};
  rep.residual = first_residual(left - right);
  rep.pass = !rep.residual.has_value();
  return rep;
}

CheckReport crossing_check_bare(const Rat& z, const Rat& hbar) {
  const BareR r{hbar};
  const auto left = partial_transpose(inverse(r(Spectral(z, 2))), 2);
  const auto right = inverse(partial_transpose(r(Spectral(z)), 2));
  CheckReport rep;
  rep.identity = "crossing";
  rep.mode = "bare";
  rep.params = {{"z", z.to_string()}, {"hbar", hbar.to_string()}};
  rep.residual = first_residual(left - right);
  rep.pass = !rep.residual.has_value();
  // Both sides are combinations of I and Q; locate a proportionality constant.
  for (std::size_t k = 0; k < 4; ++k) {
    if (left(k, k).is_zero()) continue;
    const Rat ratio = right(k, k) / left(k, k);
    rep.flags["proportional"] = right == left * ratio;
    rep.notes["ratio"] = ratio.to_string();
    break;
  }
  return rep;
}

}  // namespace qkzlab
