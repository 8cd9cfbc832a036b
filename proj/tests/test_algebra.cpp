#include <gtest/gtest.h>

#include "qkzlab/hseries.hpp"
#include "qkzlab/poly.hpp"
#include "qkzlab/random.hpp"
#include "qkzlab/ratfunc.hpp"
#include "qkzlab/rational.hpp"

using namespace qkzlab;

namespace {

const RatFunc z = RatFunc::variable();

RatFunc random_ratfunc(Lcg& rng) {
  std::vector<Rat> num(static_cast<std::size_t>(rng.uniform(1, 3)));
  std::vector<Rat> den(static_cast<std::size_t>(rng.uniform(1, 3)));
  for (auto& c : num) c = rng.rational(20);
  for (auto& c : den) c = rng.rational(20);
  den.back() = rng.nonzero_rational(20);
  return RatFunc(Poly(num), Poly(den));
}

HSeries<Rat> random_series(Lcg& rng, int order) {
  std::vector<Rat> c(static_cast<std::size_t>(order) + 1);
  for (auto& x : c) x = rng.rational(50);
  return HSeries<Rat>(c, order);
}

// Oracle for shift_in_hbar: sum_m F^(m)(a) (b hbar)^m / m!.
HSeries<Rat> taylor_oracle(const RatFunc& f, const Rat& a, const Rat& b, int order) {
  std::vector<Rat> c;
  RatFunc d = f;
  for (int m = 0; m <= order; ++m) {
    c.push_back(d.eval(a) * pow(b, static_cast<unsigned>(m)) / factorial(static_cast<unsigned>(m)));
    d = d.derivative();
  }
  return HSeries<Rat>(c, order);
}

}  // namespace

TEST(Rat, ParseAndPrint) {
  EXPECT_EQ(Rat::parse("6/4").to_string(), "3/2");
  EXPECT_EQ(Rat::parse(" -7 ").to_string(), "-7");
  EXPECT_EQ(Rat::parse("0/5").to_string(), "0");
  EXPECT_EQ(Rat(3, -6).to_string(), "-1/2");
  EXPECT_THROW(Rat::parse("1/0"), ConfigError);
  EXPECT_THROW(Rat::parse("abc"), ConfigError);
  EXPECT_THROW(Rat::parse(""), ConfigError);
}

TEST(Rat, FieldAxiomsOnRandomValues) {
  Lcg rng(11);
  for (int t = 0; t < 300; ++t) {
    const Rat a = rng.rational(), b = rng.rational(), c = rng.rational();
    EXPECT_EQ((a + b) + c, a + (b + c));
    EXPECT_EQ((a * b) * c, a * (b * c));
    EXPECT_EQ(a + b, b + a);
    EXPECT_EQ(a * b, b * a);
    EXPECT_EQ(a * (b + c), a * b + a * c);
    if (!a.is_zero()) EXPECT_EQ(a * inverse(a), Rat(1));
    // Lowest terms with positive denominator.
    EXPECT_GT(a.denominator(), 0);
    EXPECT_EQ(gcd(a.numerator(), a.denominator()), 1);
  }
  EXPECT_THROW(Rat(1) / Rat(0), std::domain_error);
  EXPECT_THROW(inverse(Rat(0)), NotInvertible);
}

TEST(Poly, DegreeIsAdditive) {
  Lcg rng(3);
  for (int t = 0; t < 100; ++t) {
    std::vector<Rat> a(static_cast<std::size_t>(rng.uniform(1, 5))), b(static_cast<std::size_t>(rng.uniform(1, 5)));
    for (auto& x : a) x = rng.rational(30);
    for (auto& x : b) x = rng.rational(30);
    a.back() = rng.nonzero_rational(30);
    b.back() = rng.nonzero_rational(30);
    const Poly p(a), q(b);
    EXPECT_EQ((p * q).degree(), p.degree() + q.degree());
    const auto [quot, rem] = divmod(p, q);
    EXPECT_EQ(quot * q + rem, p);
    EXPECT_LT(rem.degree(), q.degree());
  }
}

TEST(Poly, ComposeLinear) {
  const Poly p(std::vector<Rat>{1, 2, 3});  // 1 + 2x + 3x^2
  const Poly c = p.compose_linear(Rat(1), Rat(2));
  for (int x = -3; x <= 3; ++x) EXPECT_EQ(c.eval(Rat(x)), p.eval(Rat(1) + Rat(2) * Rat(x)));
}

TEST(RatFunc, EvalExamples) {
  EXPECT_EQ(ratfunc_eval(RatFunc(1) / (z + RatFunc(1)), Rat(1)), Rat(1, 2));
  EXPECT_EQ(ratfunc_eval((z - RatFunc(1)) / z, Rat(1)), Rat(0));
  EXPECT_THROW(ratfunc_eval(z / (z + RatFunc(1)), Rat(-1)), PoleEncountered);
}

TEST(RatFunc, CanonicalForm) {
  const RatFunc f = (z * z - RatFunc(1)) / (RatFunc(2) * z - RatFunc(2));  // (z+1)/2
  EXPECT_EQ(f.den(), Poly(Rat(1)));
  EXPECT_EQ(f, (z + RatFunc(1)) / RatFunc(2));
  const RatFunc g = RatFunc(Poly(std::vector<Rat>{1}), Poly(std::vector<Rat>{0, 3}));
  EXPECT_EQ(g.den().leading(), Rat(1));
  EXPECT_THROW(RatFunc(Poly(Rat(1)), Poly()), std::domain_error);
  EXPECT_THROW(RatFunc(1) / RatFunc(), NotInvertible);
}

TEST(RatFunc, DerivativeExamples) {
  EXPECT_EQ(ratfunc_derivative(z * z), RatFunc(2) * z);
  EXPECT_EQ(ratfunc_derivative(RatFunc(1) / z), RatFunc(-1) / (z * z));
  const RatFunc zp1 = z + RatFunc(1);
  EXPECT_EQ(ratfunc_derivative(z / zp1), RatFunc(1) / (zp1 * zp1));
}

TEST(RatFunc, EvalIsMultiplicative) {
  Lcg rng(5);
  int checked = 0;
  while (checked < 100) {
    const RatFunc f = random_ratfunc(rng), g = random_ratfunc(rng);
    const Rat a = rng.rational(40);
    if (f.den().eval(a).is_zero() || g.den().eval(a).is_zero()) continue;
    EXPECT_EQ((f * g).eval(a), f.eval(a) * g.eval(a));
    EXPECT_EQ((f + g).eval(a), f.eval(a) + g.eval(a));
    EXPECT_EQ(f.eval(a), f.num().eval(a) / f.den().eval(a));
    ++checked;
  }
}

TEST(HSeries, ExpExamples) {
  const auto e = hseries_exp(HSeries<Rat>::hbar(3));
  EXPECT_EQ(e, HSeries<Rat>({1, 1, Rat(1, 2), Rat(1, 6)}, 3));
  EXPECT_EQ(e.order(), 3);
  EXPECT_EQ(hseries_exp(HSeries<Rat>(std::vector<Rat>{}, 4)), HSeries<Rat>(1));
  EXPECT_THROW(hseries_exp(HSeries<Rat>({1, 1}, 2)), NonNilpotentConstantTerm);

  // hbar/(2z) at N = 2: 1 + hbar/(2z) + hbar^2/(8z^2).
  const HSeries<RatFunc> s({RatFunc(0), RatFunc(1) / (RatFunc(2) * z)}, 2);
  const HSeries<RatFunc> expect({RatFunc(1), RatFunc(1) / (RatFunc(2) * z), RatFunc(1) / (RatFunc(8) * z * z)}, 2);
  EXPECT_EQ(hseries_exp(s), expect);
}

TEST(HSeries, ExpMatchesPowerSumAndInverse) {
  Lcg rng(17);
  for (int t = 0; t < 30; ++t) {
    const int n = static_cast<int>(rng.uniform(1, 6));
    HSeries<Rat> s = random_series(rng, n) - HSeries<Rat>(rng.rational(50));
    s = s - HSeries<Rat>(s.coeff(0));
    // Oracle: sum_m s^m / m!.
    HSeries<Rat> acc(1), term(1);
    for (int m = 1; m <= n; ++m) {
      term = term * s * HSeries<Rat>(Rat(1, m));
      acc += term;
    }
    EXPECT_EQ(hseries_exp(s), acc.truncated(n));
    EXPECT_EQ(hseries_exp(s) * hseries_exp(-s), HSeries<Rat>(1).truncated(n));
  }
}

TEST(HSeries, InverseProperty) {
  Lcg rng(23);
  for (int t = 0; t < 50; ++t) {
    const int n = static_cast<int>(rng.uniform(1, 8));
    HSeries<Rat> s = random_series(rng, n);
    if (s.coeff(0).is_zero()) s += HSeries<Rat>(1);
    const HSeries<Rat> p = s * inverse(s);
    EXPECT_EQ(p.order(), n);
    EXPECT_EQ(p.coeff(0), Rat(1));
    for (int m = 1; m <= n; ++m) EXPECT_TRUE(p.coeff(m).is_zero());
  }
  EXPECT_THROW(inverse(HSeries<Rat>({0, 1}, 3)), NotInvertible);
}

TEST(HSeries, MixedOrderTruncatesToMinimum) {
  const HSeries<Rat> a({1, 1, 1, 1}, 3), b({1, 1}, 1);
  EXPECT_EQ((a + b).order(), 1);
  EXPECT_EQ((a * b).order(), 1);
  EXPECT_EQ((a * b).degree(), 1);
  EXPECT_EQ((a * HSeries<Rat>(2)).order(), 3);
}

TEST(ShiftInHbar, Examples) {
  EXPECT_EQ(shift_in_hbar(z, Rat(2), Rat(3), 5), HSeries<Rat>({2, 3}, 5));
  EXPECT_EQ(shift_in_hbar(RatFunc(1) / z, Rat(1), Rat(1), 2), HSeries<Rat>({1, -1, 1}, 2));
  EXPECT_EQ(shift_in_hbar(RatFunc(1) / (z + RatFunc(1)), Rat(1), Rat(-1), 2),
            HSeries<Rat>({Rat(1, 2), Rat(1, 4), Rat(1, 8)}, 2));
  EXPECT_THROW(shift_in_hbar(RatFunc(1) / z, Rat(0), Rat(1), 2), PoleEncountered);
}

TEST(ShiftInHbar, MatchesDerivativeOracleAndIsMultiplicative) {
  Lcg rng(29);
  int checked = 0;
  while (checked < 60) {
    const RatFunc f = random_ratfunc(rng), g = random_ratfunc(rng);
    const Rat a = rng.rational(30), b = rng.rational(30);
    if (f.den().eval(a).is_zero() || g.den().eval(a).is_zero()) continue;
    const int n = static_cast<int>(rng.uniform(0, 5));
    const auto sf = shift_in_hbar(f, a, b, n);
    EXPECT_EQ(sf, taylor_oracle(f, a, b, n));
    EXPECT_EQ(shift_in_hbar(f, a, Rat(0), n), HSeries<Rat>(f.eval(a)).truncated(n));
    EXPECT_EQ(sf * shift_in_hbar(g, a, b, n), shift_in_hbar(f * g, a, b, n));
    ++checked;
  }
}

TEST(ShiftInHbar, SymbolicTaylorAgreesAfterSubstitution) {
  Lcg rng(31);
  int checked = 0;
  while (checked < 30) {
    const RatFunc f = random_ratfunc(rng);
    const Rat a = rng.rational(30), b = rng.rational(10), c = rng.rational(10);
    if (f.den().eval(a).is_zero()) continue;
    // f(z + b hbar) at z = a + c hbar equals f(a + (b + c) hbar).
    const auto sym = taylor_in_hbar(f, b, 4);
    EXPECT_EQ(substitute(sym, Spectral(a, c), 4), shift_in_hbar(f, a, b + c, 4));
    ++checked;
  }
}
