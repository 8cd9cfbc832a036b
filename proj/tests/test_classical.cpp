#include <gtest/gtest.h>

#include "qkzlab/classical.hpp"

using namespace qkzlab;

namespace {

using Mat2 = std::array<std::array<Rat, 2>, 2>;

Mat2 mat_mul(const Mat2& a, const Mat2& b) {
  Mat2 out{};
  for (int i = 0; i < 2; ++i) {
    for (int j = 0; j < 2; ++j) {
      for (int k = 0; k < 2; ++k) out[i][j] += a[i][k] * b[k][j];
    }
  }
  return out;
}

// Classical part of L(z) = R(z - w) on one site: l_ab[m] acts as
// s_m w^m (E_ba - delta_ab/2), with s_m = -1 for the L^- modes.
Mat2 eval_rep(const Gen& g, const Rat& w) {
  Mat2 out{};
  const Rat scale = (g.mode >= 0 ? Rat(1) : Rat(-1)) *
                    (g.mode >= 0 ? pow(w, static_cast<unsigned>(g.mode)) : inverse(pow(w, static_cast<unsigned>(-g.mode))));
  out[g.beta - 1][g.alpha - 1] += scale;
  if (g.alpha == g.beta) {
    out[0][0] -= scale / Rat(2);
    out[1][1] -= scale / Rat(2);
  }
  return out;
}

// K acts as zero in the evaluation representation.
Mat2 eval_rep(const BilinearExpr& e, const Rat& w) {
  Mat2 out{};
  const BilinearExpr lin = e.linear_part();
  for (const auto& [word, c] : lin.terms()) {
    const Mat2 g = eval_rep(word[0].gen, w);
    for (int i = 0; i < 2; ++i) {
      for (int j = 0; j < 2; ++j) out[i][j] += c * g[i][j];
    }
  }
  return out;
}

}  // namespace

TEST(Symbols, GeneratorText) {
  const Gen g{1, 2, -3};
  EXPECT_EQ(g.to_string(), "l(1,2)[-3]");
  EXPECT_EQ(Gen::parse("l(1,2)[-3]"), g);
  EXPECT_THROW(Gen::parse("l(3,1)[0]"), ConfigError);
  EXPECT_THROW(Gen::parse("x"), ConfigError);
}

TEST(Symbols, BilinearExprArithmetic) {
  const auto x = BilinearExpr::generator(Gen{1, 1, 1});
  const auto y = BilinearExpr::generator(Gen{2, 2, 1});
  EXPECT_EQ((x - y).to_string(), "l(1,1)[1] - l(2,2)[1]");
  EXPECT_EQ((y - x).to_string(), "-l(1,1)[1] + l(2,2)[1]");
  EXPECT_EQ(BilinearExpr::central(Rat(1, 2)).to_string(), "1/2*K");
  EXPECT_EQ(BilinearExpr{}.to_string(), "0");
  EXPECT_TRUE((x - x).is_zero());
  const auto xy = x * y - y * x;
  EXPECT_EQ(xy.part(2), xy);
  EXPECT_THROW(xy * x, Error);
  for (const auto& e : {x - y, BilinearExpr::central(Rat(-3)) + x * Rat(2, 5), xy, BilinearExpr::constant(Rat(7))}) {
    EXPECT_EQ(BilinearExpr::parse(e.to_string()), e) << e.to_string();
  }
}

TEST(ExpandRll, PlusPlusExample) {
  const auto t = expand_rll(RllRelation::PlusPlus, 2);
  // Derived from R = I + hbar (P - I/2)/w: the sign is fixed by R L1 L2 = L2 L1 R.
  EXPECT_EQ(t.bracket(Gen{1, 2, 0}, Gen{2, 1, 1})->to_string(), "-l(1,1)[1] + l(2,2)[1]");
  for (int m = 0; m <= 2; ++m) {
    for (int n = 0; n <= 2; ++n) EXPECT_TRUE(t.bracket(Gen{1, 1, m}, Gen{1, 1, n})->is_zero());
  }
  // [l11[2], l12[1]] needs l12[3].
  EXPECT_TRUE(t.is_unknown(Gen{1, 1, 2}, Gen{1, 2, 1}));
  EXPECT_FALSE(t.bracket(Gen{1, 1, 2}, Gen{1, 2, 1}).has_value());
  EXPECT_THROW(expand_rll(RllRelation::PlusPlus, 0), ConfigError);
}

TEST(ExpandRll, AntisymmetryAndModeAdditivity) {
  const auto t = expand_all(2);
  for (const auto& [k, v] : t.entries()) {
    EXPECT_EQ(*t.bracket(k.second, k.first), -v);
    for (const auto& g : v.generators()) EXPECT_EQ(g.mode, k.first.mode + k.second.mode);
    if (!v.central_coeff().is_zero()) EXPECT_EQ(k.first.mode + k.second.mode, 0);
  }
}

TEST(ExpandRll, EvaluationRepresentationOracle) {
  for (auto rel : {RllRelation::PlusPlus, RllRelation::MinusMinus, RllRelation::MinusPlus}) {
    const auto t = expand_rll(rel, 2);
    ASSERT_FALSE(t.entries().empty());
    for (const Rat& w : {Rat(2), Rat(1, 3), Rat(-5)}) {
      for (const auto& [k, v] : t.entries()) {
        const Mat2 a = eval_rep(k.first, w), b = eval_rep(k.second, w);
        const Mat2 ab = mat_mul(a, b), ba = mat_mul(b, a);
        const Mat2 want = eval_rep(v, w);
        for (int i = 0; i < 2; ++i) {
          for (int j = 0; j < 2; ++j) EXPECT_EQ(ab[i][j] - ba[i][j], want[i][j]) << k.first.to_string() << k.second.to_string();
        }
      }
    }
  }
}

TEST(CompareLoopAlgebra, UnmixedRelations) {
  for (int m = 2; m <= 3; ++m) {
    for (auto rel : {RllRelation::PlusPlus, RllRelation::MinusMinus}) {
      const auto rep = compare_loop_algebra(expand_rll(rel, m));
      EXPECT_TRUE(rep.pass) << to_json(rep);
      EXPECT_FALSE(rep.flags.at("central_form_fitted"));
    }
  }
}

TEST(CompareLoopAlgebra, MixedRelationCentralTerm) {
  const auto t = expand_rll(RllRelation::MinusPlus, 2);
  const auto rep = compare_loop_algebra(t);
  EXPECT_TRUE(rep.pass) << to_json(rep);
  EXPECT_TRUE(rep.flags.at("central_on_m_plus_n_zero_only"));
  EXPECT_EQ(rep.notes.at("central_trace"), "1");
  EXPECT_EQ(rep.notes.at("central_trace_trace"), "-1/2");
  EXPECT_EQ(rep.notes.at("central_killing_relative"), "1/4");
  // Residue oracle: kappa(E21, E12) res(t^m d t^{-m}) with s_m s_n = -1 gives m.
  for (int m = -2; m <= -1; ++m) {
    EXPECT_EQ(t.bracket(Gen{1, 2, m}, Gen{2, 1, -m})->central_coeff(), Rat(m));
    EXPECT_TRUE(t.bracket(Gen{1, 2, m}, Gen{2, 1, -m + 1})->central_coeff().is_zero());
  }
}

TEST(CompareLoopAlgebra, BareExpansionCentralForm) {
  const auto rep = compare_loop_algebra(expand_rll(RllRelation::MinusPlus, 2, RExpansion::Bare));
  EXPECT_TRUE(rep.pass) << to_json(rep);
  EXPECT_EQ(rep.notes.at("central_trace"), "1");
  EXPECT_EQ(rep.notes.at("central_trace_trace"), "-1");
}

TEST(CompareLoopAlgebra, FullTablesAtCutoffThree) {
  for (auto e : {RExpansion::Normalized, RExpansion::Bare}) {
    const auto rep = compare_loop_algebra(expand_all(3, e));
    EXPECT_TRUE(rep.pass) << to_json(rep);
  }
}

TEST(CompareLoopAlgebra, CorruptedEntryIsReported) {
  auto t = expand_rll(RllRelation::PlusPlus, 2);
  const Gen a{1, 2, 0}, b{2, 1, 1};
  t.set(a, b, -*t.bracket(a, b));
  const auto rep = compare_loop_algebra(t);
  EXPECT_FALSE(rep.pass);
  EXPECT_EQ(rep.notes.at("mismatches"), "1");
  EXPECT_EQ(rep.notes.at("mismatch_a"), a.to_string());
  EXPECT_EQ(rep.notes.at("mismatch_b"), b.to_string());
}

TEST(Jacobi, HoldsInTheWindow) {
  for (int m = 2; m <= 3; ++m) {
    const auto rep = jacobi_check(expand_all(m));
    EXPECT_TRUE(rep.pass) << to_json(rep);
    EXPECT_GT(std::stoi(rep.notes.at("triples_checked")), 100);
  }
}

TEST(Jacobi, CorruptedCentralTermFails) {
  auto t = expand_all(2);
  const Gen a{1, 2, -1}, b{2, 1, 1};
  t.set(a, b, *t.bracket(a, b) + BilinearExpr::central(Rat(1)));
  EXPECT_FALSE(jacobi_check(t).pass);
}

TEST(BracketTable, JsonRoundTrip) {
  const auto t = expand_all(2);
  const auto back = BracketTable::from_json(t.to_json());
  EXPECT_EQ(back, t);
  EXPECT_NE(t.to_json().find(R"("a":"l(1,2)[0]","b":"l(2,1)[1]","bracket":"-l(1,1)[1] + l(2,2)[1]")"),
            std::string::npos);
  EXPECT_THROW(BracketTable::from_json("{}"), ConfigError);
}
