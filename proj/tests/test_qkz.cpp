#include <gtest/gtest.h>

#include "qkzlab/qkz.hpp"
#include "qkzlab/random.hpp"

using namespace qkzlab;

namespace {

using Series = HSeries<Rat>;

// Random bare system with pole-free operators along short lattice moves.
QkzSystem random_bare_system(Lcg& rng, int n) {
  for (;;) {
    std::vector<Spectral> pts;
    for (int i = 0; i < n; ++i) pts.push_back(rng.rational(100));
    const Rat h = rng.nonzero_rational(20), k = rng.rational(20);
    try {
      QkzSystem sys(pts, k, RMode::bare(), h);
      for (int i = 1; i <= n; ++i) {
        (void)build_A_bare(sys, i);
        for (int j = 1; j <= n; ++j) {
          if (j == i) continue;
          (void)build_A_bare(sys.shifted(j), i);
          (void)build_A_bare(sys.shifted(j).shifted(i), j);
          (void)build_A_bare(sys.shifted(i, -1), i);
        }
      }
      return sys;
    } catch (const Error&) {
    }
  }
}

std::vector<Rat> random_vector(Lcg& rng, int n) {
  std::vector<Rat> v(std::size_t{1} << n);
  for (auto& x : v) x = rng.rational(50);
  return v;
}

}  // namespace

TEST(BuildA, TwoPoints) {
  const Rat h(1, 3);
  const QkzSystem sys({Rat(0), Rat(5)}, Rat(1), RMode::bare(), h);
  EXPECT_EQ(build_A_bare(sys, 1), bare_r(Rat(-5), h));
  // eta = 3h; A_2 = R^{(21)}(z_21 + eta) = P R(5 + 1) P.
  const auto p = perm_p();
  EXPECT_EQ(build_A_bare(sys, 2), p * bare_r(Rat(6), h) * p);
}

TEST(BuildA, ThreePointsHandComposed) {
  const QkzSystem sys({Rat(0), Rat(5), Rat(9)}, Rat(0), RMode::bare(), Rat(1));
  // A_2 = R^{(21)}(7) R^{(23)}(-4).
  const auto p = perm_p();
  const auto r21 = embed(p * bare_r(Rat(7), Rat(1)) * p, 3, 1, 2);
  const auto r23 = embed(bare_r(Rat(-4), Rat(1)), 3, 2, 3);
  EXPECT_EQ(build_A_bare(sys, 2), r21 * r23);
  EXPECT_EQ(build_A_bare(sys, 2), embed(bare_r(Rat(7), Rat(1)), 3, 2, 1) * r23);
}

TEST(BuildA, PoleAndConfigErrors) {
  EXPECT_THROW(QkzSystem({Rat(1), Rat(1)}, Rat(0), RMode::bare(), Rat(1)), ConfigError);
  EXPECT_THROW(QkzSystem({Rat(1)}, Rat(0), RMode::bare(), Rat(1)), ConfigError);
  EXPECT_THROW(QkzSystem({Rat(1), Rat(2)}, Rat(0), RMode::bare()), ConfigError);
  // z_12 = -1 = -hbar.
  const QkzSystem sys({Rat(0), Rat(1)}, Rat(0), RMode::bare(), Rat(1));
  EXPECT_THROW(build_A_bare(sys, 1), PoleEncountered);
  EXPECT_THROW(build_A_bare(sys, 3), BadLegIndex);
}

TEST(BuildA, InverseIsReversedProductOfInverses) {
  Lcg rng(71);
  for (int t = 0; t < 5; ++t) {
    const QkzSystem sys = random_bare_system(rng, 3);
    const auto r = sys.bare_source();
    const int n = 3;
    for (int i = 1; i <= n; ++i) {
      TensorMat<Rat> inv = TensorMat<Rat>::identity(n);
      for (int j = i + 1; j <= n; ++j) inv = inv * embed(inverse(r(sys.point(i) - sys.point(j))), n, i, j);
      for (int j = 1; j < i; ++j) {
        inv = inv * embed(inverse(r(sys.point(i) - sys.point(j) + sys.step())), n, i, j);
      }
      EXPECT_EQ(inverse(build_A_bare(sys, i)), inv);
    }
  }
}

TEST(BuildA, TranslationInvariant) {
  Lcg rng(73);
  for (int t = 0; t < 5; ++t) {
    const QkzSystem sys = random_bare_system(rng, 3);
    const QkzSystem moved = sys.translated(rng.rational());
    for (int i = 1; i <= 3; ++i) EXPECT_EQ(build_A_bare(sys, i), build_A_bare(moved, i));
  }
}

TEST(Flatness, TwoPointsReducesToUnitarity) {
  const QkzSystem sys({Rat(2), Rat(-3)}, Rat(5, 2), RMode::bare(), Rat(1, 2));
  const auto lhs = build_A_bare(sys.shifted(1), 2) * build_A_bare(sys, 1);
  EXPECT_EQ(lhs, TensorMat<Rat>::identity(2));
  EXPECT_TRUE(flatness_check(sys, 1, 2).pass);
}

TEST(Flatness, ThreePointsExample) {
  const QkzSystem sys({Rat(0), Rat(7), Rat(17)}, Rat(1), RMode::bare(), Rat(1));
  for (int i = 1; i <= 3; ++i) {
    for (int j = 1; j <= 3; ++j) {
      if (i != j) EXPECT_TRUE(flatness_check(sys, i, j).pass) << i << j;
    }
  }
}

TEST(Flatness, DegenerateStep) {
  const QkzSystem sys({Rat(0), Rat(7), Rat(17)}, Rat(-2), RMode::bare(), Rat(1));
  const auto rep = flatness_check(sys, 1, 3);
  EXPECT_TRUE(rep.pass);
  EXPECT_TRUE(rep.flags.at("degenerate_step"));
  EXPECT_EQ(build_A_bare(sys, 1) * build_A_bare(sys, 2), build_A_bare(sys, 2) * build_A_bare(sys, 1));
}

TEST(Flatness, RandomBare) {
  Lcg rng(79);
  for (int n = 2; n <= 4; ++n) {
    for (int t = 0; t < 4; ++t) {
      const QkzSystem sys = random_bare_system(rng, n);
      for (int i = 1; i <= n; ++i) {
        for (int j = i + 1; j <= n; ++j) EXPECT_TRUE(flatness_check(sys, i, j).pass);
      }
    }
  }
}

TEST(Flatness, NormalizedThroughOrderFour) {
  const QkzSystem sys({Rat(0), Rat(3), Rat(-5, 2)}, Rat(1, 3), RMode::normalized(4));
  for (int i = 1; i <= 3; ++i) {
    for (int j = i + 1; j <= 3; ++j) {
      const auto rep = flatness_check(sys, i, j);
      EXPECT_TRUE(rep.pass);
      EXPECT_EQ(rep.order, 4);
    }
  }
}

TEST(Flatness, CorruptedOperatorFails) {
  const QkzSystem sys({Rat(0), Rat(7), Rat(17)}, Rat(1), RMode::bare(), Rat(1));
  const auto bad = sys.with_identity_factor(2, 3);
  EXPECT_FALSE(flatness_check(bad, 2, 3).pass);
  const auto mono = plaquette_monodromy(bad, bad.bare_source(), 2, 3);
  EXPECT_FALSE(is_identity(mono));
}

TEST(Monodromy, IdentityForRandomSystems) {
  Lcg rng(83);
  for (int t = 0; t < 4; ++t) {
    const QkzSystem sys = random_bare_system(rng, 3);
    EXPECT_TRUE(is_identity(plaquette_monodromy(sys, sys.bare_source(), 1, 3)));
  }
  const QkzSystem flat({Rat(0), Rat(7), Rat(17)}, Rat(-2), RMode::bare(), Rat(1));
  EXPECT_TRUE(is_identity(plaquette_monodromy(flat, flat.bare_source(), 1, 2)));
}

TEST(Transport, EmptyAndBackAndForth) {
  Lcg rng(89);
  const QkzSystem sys = random_bare_system(rng, 3);
  const auto v = random_vector(rng, 3);
  const auto r = sys.bare_source();
  const auto same = transport(sys, r, {}, v);
  EXPECT_EQ(same.vector, v);
  EXPECT_EQ(same.system.points(), sys.points());
  const auto back = transport(sys, r, {{2, 1}, {2, -1}}, v);
  EXPECT_EQ(back.vector, v);
  EXPECT_EQ(back.system.points(), sys.points());
}

TEST(Transport, SquareLoopAndConcatenation) {
  Lcg rng(97);
  for (int t = 0; t < 4; ++t) {
    const QkzSystem sys = random_bare_system(rng, 3);
    const auto v = random_vector(rng, 3);
    const auto r = sys.bare_source();
    const LatticePath loop{{1, 1}, {3, 1}, {1, -1}, {3, -1}};
    const auto res = transport(sys, r, loop, v);
    EXPECT_EQ(res.vector, v);
    const auto half = transport(sys, r, {{1, 1}, {3, 1}}, v);
    const auto rest = transport(half.system, r, {{1, -1}, {3, -1}}, half.vector);
    EXPECT_EQ(rest.vector, res.vector);
  }
}

TEST(Transport, PoleReportsStepIndex) {
  // eta = 2: after one step z = (2, 3) and A_1 needs R(z_12) = R(-1) = R(-hbar).
  const QkzSystem sys({Rat(0), Rat(3)}, Rat(0), RMode::bare(), Rat(1));
  const std::vector<Rat> v(4, Rat(1));
  try {
    (void)transport(sys, sys.bare_source(), {{1, 1}, {1, 1}}, v);
    FAIL() << "expected a pole";
  } catch (const PathPoleEncountered& e) {
    EXPECT_EQ(e.step(), 1u);
  }
}

TEST(Transport, NormalizedLoop) {
  const QkzSystem sys({Rat(0), Rat(3), Rat(-5, 2)}, Rat(1, 3), RMode::normalized(3));
  std::vector<Series> v{1, 2, 3, 4, 5, 6, 7, 8};
  const auto res = transport(sys, sys.normalized_source(), {{1, 1}, {2, 1}, {1, -1}, {2, -1}}, v);
  for (std::size_t k = 0; k < v.size(); ++k) EXPECT_EQ(res.vector[k], v[k]);
}
