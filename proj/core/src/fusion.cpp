#include "qkzlab/fusion.hpp"

namespace qkzlab {

namespace {

using Series = HSeries<Rat>;

template <class Source>
TensorMat<typename Source::Scalar> decorated(const LFactor& f, const Source& r) {
  switch (f.decoration) {
    case Decoration::Plain:
      return r(f.arg);
    case Decoration::PartialTranspose:
      return partial_transpose(r(f.arg), 2);
    case Decoration::InversePartialTranspose:
      return eval_L_plus_dual(f.arg, r);
  }
  throw std::logic_error("unknown decoration");
}

Spectral level_shift(const QkzSystem& sys) { return Spectral(Rat(0), sys.level()); }

}  // namespace

template <class Source>
TensorMat<typename Source::Scalar> evaluate(const EvalLOperator& op, const Source& r) {
  using S = typename Source::Scalar;
  TensorMat<S> out = TensorMat<S>::identity(op.n + 1);
  for (const LFactor& f : op.factors) {
    check_leg(f.leg, op.n);
    out = out * embed(decorated(f, r), op.n + 1, 1, f.leg + 1);
  }
  return out;
}

template TensorMat<Rat> evaluate(const EvalLOperator&, const BareR&);
template TensorMat<Series> evaluate(const EvalLOperator&, const NormalizedR&);

EvalLOperator iz_L_plus(const QkzSystem& sys, const Spectral& t) {
  EvalLOperator op;
  op.kind = LKind::Plus;
  op.n = sys.n();
  for (int j = 1; j <= sys.n(); ++j) op.factors.push_back({j, t - sys.point(j), Decoration::Plain});
  return op;
}

EvalLOperator iz_L_minus_dual(const QkzSystem& sys, int i, const Spectral& t_i) {
  check_leg(i, sys.n());
  EvalLOperator op;
  op.kind = LKind::MinusDual;
  op.n = sys.n();
  op.minus_slot = i;
  for (int j = 1; j <= sys.n(); ++j) {
    if (j == i) continue;
    Spectral arg = t_i + sys.point(i) - sys.point(j);
    if (j > i) arg = arg - level_shift(sys);
    op.factors.push_back({j, arg, Decoration::InversePartialTranspose});
  }
  return op;
}

template <class Source>
TensorMat<typename Source::Scalar> iz_L_minus_dual_image(const QkzSystem& sys, int i, const Spectral& t_i,
                                                         const Source& r) {
  check_leg(i, sys.n());
  EvalLOperator op;
  op.kind = LKind::MinusDual;
  op.n = sys.n();
  op.minus_slot = i;
  const Spectral two_hbar(Rat(0), Rat(2));
  for (int j = i - 1; j >= 1; --j) {
    op.factors.push_back({j, t_i + sys.point(i) - sys.point(j) + two_hbar, Decoration::PartialTranspose});
  }
  for (int j = sys.n(); j > i; --j) {
    op.factors.push_back({j, t_i + sys.point(i) - sys.point(j) - level_shift(sys), Decoration::PartialTranspose});
  }
  return evaluate(op, r);
}

template TensorMat<Rat> iz_L_minus_dual_image(const QkzSystem&, int, const Spectral&, const BareR&);
template TensorMat<Series> iz_L_minus_dual_image(const QkzSystem&, int, const Spectral&, const NormalizedR&);

template <class S>
TensorMat<S> contract_aux(const TensorMat<S>& m, int i) {
  const int n = m.n_legs() - 1;
  check_leg(i, n);
  const std::size_t bi = leg_bit(i, n);
  const std::size_t aux = std::size_t{1} << n;
  TensorMat<S> out(n);
  auto at = [&](std::size_t r, std::size_t c, std::size_t beta_r, std::size_t beta_c) -> const S& {
    const std::size_t mr = ((r & bi) ? aux : 0) | (r & ~bi) | (beta_r ? bi : 0);
    const std::size_t mc = ((c & bi) ? aux : 0) | (c & ~bi) | (beta_c ? bi : 0);
    return m(mr, mc);
  };
  for (std::size_t r = 0; r < out.dim(); ++r) {
    for (std::size_t c = 0; c < out.dim(); ++c) {
      const S& x = at(r, c, 0, 0);
      if (!(at(r, c, 1, 1) == x) || !is_zero(at(r, c, 0, 1)) || !is_zero(at(r, c, 1, 0))) {
        throw BadLegIndex("contract_aux: operator acts on quantum leg " + std::to_string(i));
      }
      out(r, c) = x;
    }
  }
  return out;
}

template TensorMat<Rat> contract_aux(const TensorMat<Rat>&, int);
template TensorMat<Series> contract_aux(const TensorMat<Series>&, int);

template <class Source>
TensorMat<typename Source::Scalar> connection_from_image(const QkzSystem& sys, int i, const Source& r) {
  const auto image = iz_L_minus_dual_image(sys, i, level_shift(sys), r);
  return contract_aux(partial_transpose(image, 1), i).transpose();
}

template TensorMat<Rat> connection_from_image(const QkzSystem&, int, const BareR&);
template TensorMat<Series> connection_from_image(const QkzSystem&, int, const NormalizedR&);

template <class Source>
TensorMat<typename Source::Scalar> connection_from_fusion(const QkzSystem& sys, int i, const Source& r) {
  using S = typename Source::Scalar;
  const int n = sys.n();
  check_leg(i, n);
  const Spectral t = level_shift(sys);
  TensorMat<S> m = TensorMat<S>::identity(n + 1);
  for (int j = i - 1; j >= 1; --j) {
    const auto d = eval_L_plus_dual(t + sys.point(i) - sys.point(j), r);
    // Dual-basis partner of d: sum y'x' ⊗ x''y'' = Id.
    const auto tilde = partial_transpose(inverse(partial_transpose(d, 2)), 2);
    m = m * embed(tilde, n + 1, 1, j + 1);
  }
  for (int j = n; j > i; --j) {
    const auto d = eval_L_plus_dual(t + sys.point(i) - sys.point(j) - level_shift(sys), r);
    m = m * embed(inverse(d), n + 1, 1, j + 1);
  }
  return contract_aux(partial_transpose(m, 1), i).transpose();
}

template TensorMat<Rat> connection_from_fusion(const QkzSystem&, int, const BareR&);
template TensorMat<Series> connection_from_fusion(const QkzSystem&, int, const NormalizedR&);

CheckReport fusion_crosscheck(const QkzSystem& sys, int i) {
  CheckReport rep;
  rep.identity = "fusion_crosscheck";
  rep.mode = sys.mode().name();
  rep.params = sys.describe();
  rep.params["i"] = std::to_string(i);
  if (sys.mode().is_normalized()) {
    rep.order = sys.mode().order();
    const auto r = sys.normalized_source();
    const auto a = build_A(sys, r, i);
    const auto image_res = first_residual(connection_from_image(sys, i, r) - a);
    const auto chain_res = first_residual(connection_from_fusion(sys, i, r) - a);
    rep.flags["image_matches"] = !image_res;
    rep.flags["dual_chain_matches"] = !chain_res;
    rep.notes["dual_chain_scalar"] = "1";
    rep.residual = image_res ? image_res : chain_res;
    rep.pass = !image_res && !chain_res;
    return rep;
  }
  const auto r = sys.bare_source();
  const Rat& h = *sys.hbar();
  const auto a = build_A(sys, r, i);
  const auto image_res = first_residual(connection_from_image(sys, i, r) - a);
  Rat predicted(1);
  for (int j = 1; j < i; ++j) {
    const Rat w = (sys.point(i) - sys.point(j) + level_shift(sys)).at(h);
    predicted *= w * (w + h + h) / ((w + h) * (w + h));
  }
  const auto chain = connection_from_fusion(sys, i, r);
  const auto chain_res = first_residual(chain - a * predicted);
  rep.flags["image_matches"] = !image_res;
  rep.flags["dual_chain_matches"] = chain == a;
  rep.flags["dual_chain_matches_up_to_predicted_scalar"] = !chain_res;
  rep.notes["dual_chain_scalar"] = predicted.to_string();
  rep.residual = image_res ? image_res : chain_res;
  rep.pass = !image_res && !chain_res;
  return rep;
}

std::string to_string(RllRelation rel) {
  switch (rel) {
    case RllRelation::PlusPlus:
      return "PlusPlus";
    case RllRelation::MinusPlus:
      return "MinusPlus";
    case RllRelation::MinusMinus:
      return "MinusMinus";
  }
  return "?";
}

RllRelation parse_relation(const std::string& text) {
  if (text == "PlusPlus" || text == "++") return RllRelation::PlusPlus;
  if (text == "MinusPlus" || text == "-+") return RllRelation::MinusPlus;
  if (text == "MinusMinus" || text == "--") return RllRelation::MinusMinus;
  throw ConfigError("unknown relation '" + text + "' (expected PlusPlus, MinusPlus or MinusMinus)");
}

namespace {

template <class Source>
std::optional<Residual> rll_residual(const RllSample& s, const Source& r) {
  using S = typename Source::Scalar;
  const int n = static_cast<int>(s.sites.size());
  const int legs = n + 2;
  auto chain = [&](int aux, const Rat& z) {
    TensorMat<S> out = TensorMat<S>::identity(legs);
    for (int j = 0; j < n; ++j) {
      const Spectral arg(z - s.sites[static_cast<std::size_t>(j)]);
      const auto x = s.realization == Realization::Plain ? r(arg) : eval_L_plus_dual(arg, r);
      out = out * embed(x, legs, aux, j + 3);
    }
    return out;
  };
  const auto l1 = chain(1, s.z);
  const auto l2 = chain(2, s.zp);
  const auto r_left = embed(r(Spectral(s.z - s.zp)), legs, 1, 2);
  // Only the mixed relation carries the central shift.
  const Rat k = s.relation == RllRelation::MinusPlus ? s.level : Rat(0);
  const auto r_right = embed(r(Spectral(s.z - s.zp, k)), legs, 1, 2);
  const auto lhs = r_left * l1 * l2;
  const auto rhs = s.misorder ? l1 * l2 * r_right : l2 * l1 * r_right;
  return first_residual(lhs - rhs);
}

}  // namespace

CheckReport rll_sample_check(const RllSample& sample, const RMode& mode) {
  if (sample.sites.empty()) throw ConfigError("rll sample needs at least one site");
  CheckReport rep;
  rep.identity = "rll";
  rep.mode = mode.name();
  rep.params["relation"] = to_string(sample.relation);
  rep.params["realization"] = sample.realization == Realization::Plain ? "plain" : "dual";
  rep.params["z"] = sample.z.to_string();
  rep.params["zp"] = sample.zp.to_string();
  rep.params["level"] = sample.level.to_string();
  std::string sites;
  for (const auto& w : sample.sites) sites += (sites.empty() ? "" : ", ") + w.to_string();
  rep.params["sites"] = "[" + sites + "]";
  rep.flags["misorder"] = sample.misorder;
  if (mode.is_bare()) {
    rep.params["hbar"] = sample.hbar.to_string();
    rep.residual = rll_residual(sample, BareR{sample.hbar});
  } else {
    rep.order = mode.order();
    rep.residual = rll_residual(sample, NormalizedR{mode.order()});
  }
  rep.pass = !rep.residual.has_value();
  return rep;
}

template <class S>
TensorMat<S> qdet_operator(const TensorMat<S>& l_t, const TensorMat<S>& l_s) {
  const int n = l_t.n_legs() - 1;
  if (n < 1 || l_s.n_legs() != l_t.n_legs()) throw BadLegIndex("qdet_operator needs matching L-operators with a quantum leg");
  const std::size_t d = std::size_t{1} << n;
  auto block = [&](const TensorMat<S>& l, std::size_t a, std::size_t b) {
    TensorMat<S> out(n);
    for (std::size_t r = 0; r < d; ++r) {
      for (std::size_t c = 0; c < d; ++c) out(r, c) = l(a * d + r, b * d + c);
    }
    return out;
  };
  return block(l_t, 0, 0) * block(l_s, 1, 1) - block(l_t, 0, 1) * block(l_s, 1, 0);
}

template TensorMat<Rat> qdet_operator(const TensorMat<Rat>&, const TensorMat<Rat>&);
template TensorMat<Series> qdet_operator(const TensorMat<Series>&, const TensorMat<Series>&);
template TensorMat<RatFunc> qdet_operator(const TensorMat<RatFunc>&, const TensorMat<RatFunc>&);
template TensorMat<HSeries<RatFunc>> qdet_operator(const TensorMat<HSeries<RatFunc>>&,
                                                   const TensorMat<HSeries<RatFunc>>&);

namespace {

/// The scalar c of an operator that must equal c I.
template <class S>
S scalar_part(const TensorMat<S>& m, const char* what) {
  const S c = m(0, 0);
  const TensorMat<S> id = TensorMat<S>::identity(m.n_legs());
  if (!(m == id * c)) throw std::logic_error(std::string(what) + ": quantum determinant is not scalar");
  return c;
}

}  // namespace

Rat qdet_bare(const Rat& t, const Rat& hbar) {
  const BareR r{hbar};
  return scalar_part(qdet_operator(r(Spectral(t)), r(Spectral(t - hbar))), "qdet_bare");
}

HSeries<Rat> qdet_normalized(const Spectral& t, int order) {
  const NormalizedR r{order};
  return scalar_part(qdet_operator(r(t), r(t - Spectral(Rat(0), Rat(1)))), "qdet_normalized");
}

RatFunc qdet_bare_symbolic(const Rat& hbar) {
  const RatFunc t = RatFunc::variable();
  const RatFunc h(hbar);
  return scalar_part(qdet_operator(bare_r(t, h), bare_r(t - h, h)), "qdet_bare_symbolic");
}

HSeries<RatFunc> qdet_normalized_symbolic(int order) {
  return scalar_part(qdet_operator(normalized_r_symbolic(Rat(0), order), normalized_r_symbolic(Rat(-1), order)),
                     "qdet_normalized_symbolic");
}

namespace {

template <class Source>
std::optional<Residual> multiplicativity_residual(const Rat& t, const std::vector<Rat>& sites, const Source& r,
                                                  const Spectral& shift) {
  using S = typename Source::Scalar;
  const int n = static_cast<int>(sites.size());
  auto chain = [&](const Spectral& tt) {
    TensorMat<S> out = TensorMat<S>::identity(n + 1);
    for (int j = 0; j < n; ++j) out = out * embed(r(tt - Spectral(sites[static_cast<std::size_t>(j)])), n + 1, 1, j + 2);
    return out;
  };
  const Spectral t0(t);
  const TensorMat<S> det = qdet_operator(chain(t0), chain(t0 - shift));
  S prod(1);
  for (const Rat& w : sites) {
    prod = prod * scalar_part(qdet_operator(r(t0 - Spectral(w)), r(t0 - Spectral(w) - shift)), "multiplicativity");
  }
  return first_residual(det - TensorMat<S>::identity(n) * prod);
}

}  // namespace

CheckReport qdet_check(const RMode& mode, const Rat& hbar) {
  CheckReport rep;
  rep.identity = "qdet";
  rep.mode = mode.name();
  if (mode.is_bare()) {
    rep.params["hbar"] = hbar.to_string();
    const RatFunc t = RatFunc::variable();
    const RatFunc got = qdet_bare_symbolic(hbar);
    rep.notes["qdet"] = got.to_string();
    if (got != (t - RatFunc(hbar)) / t) rep.residual = Residual{got.to_string(), 0, 0, std::nullopt};
  } else {
    rep.order = mode.order();
    const auto got = qdet_normalized_symbolic(mode.order());
    rep.notes["qdet"] = to_string(got);
    for (int m = 0; m <= mode.order(); ++m) {
      const RatFunc want = m == 0 ? RatFunc(1) : RatFunc(0);
      if (got.coeff(m) != want) {
        rep.residual = Residual{got.coeff(m).to_string(), 0, 0, m};
        break;
      }
    }
  }
  rep.pass = !rep.residual.has_value();
  return rep;
}

CheckReport qdet_multiplicativity_check(const Rat& t, const std::vector<Rat>& sites, const RMode& mode,
                                        const Rat& hbar) {
  if (sites.empty()) throw ConfigError("qdet multiplicativity needs at least one factor");
  CheckReport rep;
  rep.identity = "qdet_multiplicativity";
  rep.mode = mode.name();
  rep.params["t"] = t.to_string();
  std::string s;
  for (const auto& w : sites) s += (s.empty() ? "" : ", ") + w.to_string();
  rep.params["sites"] = "[" + s + "]";
  if (mode.is_bare()) {
    rep.params["hbar"] = hbar.to_string();
    rep.residual = multiplicativity_residual(t, sites, BareR{hbar}, Spectral(hbar));
  } else {
    rep.order = mode.order();
    rep.residual = multiplicativity_residual(t, sites, NormalizedR{mode.order()}, Spectral(Rat(0), Rat(1)));
  }
  rep.pass = !rep.residual.has_value();
  return rep;
}

}  // namespace qkzlab
