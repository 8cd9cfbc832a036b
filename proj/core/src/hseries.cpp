#include "qkzlab/hseries.hpp"

namespace qkzlab {

std::string Spectral::to_string() const {
  if (hbar_coeff.is_zero()) return base.to_string();
  return base.to_string() + (hbar_coeff.sign() < 0 ? " - " : " + ") +
         (hbar_coeff.sign() < 0 ? -hbar_coeff : hbar_coeff).to_string() + "*hbar";
}

HSeries<Rat> shift_in_hbar(const RatFunc& f, const Rat& a, const Rat& b, int order) {
  if (order < 0) throw std::invalid_argument("shift_in_hbar: negative order");
  if (f.den().eval(a).is_zero()) {
    throw PoleEncountered("shift_in_hbar: pole at base point " + a.to_string());
  }
  const Poly num = f.num().compose_linear(a, b);
  const Poly den = f.den().compose_linear(a, b);
  const HSeries<Rat> n(num.coeffs(), order);
  const HSeries<Rat> d(den.coeffs(), order);
  return n * inverse(d);
}

HSeries<RatFunc> taylor_in_hbar(const RatFunc& f, const Rat& b, int order) {
  if (order < 0) throw std::invalid_argument("taylor_in_hbar: negative order");
  std::vector<RatFunc> coeffs;
  coeffs.reserve(static_cast<std::size_t>(order) + 1);
  RatFunc deriv = f;
  Rat scale(1);  // b^m / m!
  for (int m = 0; m <= order; ++m) {
    coeffs.push_back(deriv * RatFunc(scale));
    deriv = deriv.derivative();
    scale = scale * b / Rat(m + 1);
  }
  return HSeries<RatFunc>(std::move(coeffs), order);
}

HSeries<Rat> substitute(const HSeries<RatFunc>& s, const Spectral& arg, int order) {
  const int n = std::min(order, s.order());
  HSeries<Rat> out(std::vector<Rat>{}, n);
  for (int j = 0; j <= n && j <= s.degree(); ++j) {
    if (s.coeff(j).is_zero()) continue;
    std::vector<Rat> shifted = shift_in_hbar(s.coeff(j), arg.base, arg.hbar_coeff, n - j).coeffs();
    shifted.insert(shifted.begin(), static_cast<std::size_t>(j), Rat(0));
    out += HSeries<Rat>(std::move(shifted), n);
  }
  return out;
}

HSeries<RatFunc> shift_argument(const HSeries<RatFunc>& s, const Rat& b, int order) {
  const int n = std::min(order, s.order());
  HSeries<RatFunc> out(std::vector<RatFunc>{}, n);
  for (int j = 0; j <= n && j <= s.degree(); ++j) {
    if (s.coeff(j).is_zero()) continue;
    std::vector<RatFunc> shifted = taylor_in_hbar(s.coeff(j), b, n - j).coeffs();
    shifted.insert(shifted.begin(), static_cast<std::size_t>(j), RatFunc());
    out += HSeries<RatFunc>(std::move(shifted), n);
  }
  return out;
}

}  // namespace qkzlab
