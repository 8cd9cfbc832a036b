#pragma once

// Order-hbar^2 content of the RLL relations over a free algebra with
// truncated Fourier modes.

#include <compare>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "qkzlab/check_report.hpp"
#include "qkzlab/fusion.hpp"
#include "qkzlab/rational.hpp"

namespace qkzlab {

/// Mode generator l_{alpha beta}[mode]. Modes >= 0 come from L^+, modes < 0
/// from L^-.
struct Gen {
  int alpha = 1;
  int beta = 1;
  int mode = 0;

  /// "l(1,2)[0]"
  std::string to_string() const;
  /// Throws ConfigError on anything but the to_string() form.
  static Gen parse(const std::string& text);

  friend auto operator<=>(const Gen&, const Gen&) = default;
};

/// A generator or the central symbol K. Generators sort before K.
struct Symbol {
  bool central = false;
  Gen gen;

  static Symbol K() { return {true, {}}; }
  static Symbol of(const Gen& g) { return {false, g}; }
  std::string to_string() const { return central ? "K" : gen.to_string(); }

  friend auto operator<=>(const Symbol&, const Symbol&) = default;
};

/// Ordered product of at most two symbols; the empty word is 1.
using Word = std::vector<Symbol>;

/// Rational combination of words of length <= 2, zero coefficients pruned.
class BilinearExpr {
 public:
  static constexpr std::size_t kMaxLength = 2;

  BilinearExpr() = default;
  static BilinearExpr constant(const Rat& c);
  static BilinearExpr generator(const Gen& g, const Rat& c = Rat(1));
  static BilinearExpr central(const Rat& c = Rat(1));

  void add(const Word& w, const Rat& c);
  Rat coeff(const Word& w) const;
  const std::map<Word, Rat>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  /// Terms of the given word length only.
  BilinearExpr part(std::size_t length) const;
  /// Coefficient of K (a one-letter central word).
  Rat central_coeff() const { return coeff({Symbol::K()}); }
  /// The single-generator terms.
  BilinearExpr linear_part() const;
  /// Every generator appearing in the expression.
  std::vector<Gen> generators() const;

  BilinearExpr operator-() const;
  BilinearExpr& operator+=(const BilinearExpr& rhs);
  BilinearExpr& operator-=(const BilinearExpr& rhs);
  BilinearExpr& operator*=(const Rat& c);
  friend BilinearExpr operator+(BilinearExpr a, const BilinearExpr& b) { return a += b; }
  friend BilinearExpr operator-(BilinearExpr a, const BilinearExpr& b) { return a -= b; }
  friend BilinearExpr operator*(BilinearExpr a, const Rat& c) { return a *= c; }
  /// Word concatenation. Throws Error when a product word is longer than two.
  friend BilinearExpr operator*(const BilinearExpr& a, const BilinearExpr& b);
  friend bool operator==(const BilinearExpr&, const BilinearExpr&) = default;

  /// "l(1,1)[1] - l(2,2)[1]", "1/2*K", "0".
  std::string to_string() const;
  /// Inverse of to_string() for expressions without quadratic words.
  static BilinearExpr parse(const std::string& text);

 private:
  std::map<Word, Rat> terms_;
};

/// Which expansion of R enters the relations. Normalized is the R of the
/// algebra; bare drops the scalar factor (its first-order term is (P - I)/w).
enum class RExpansion { Normalized, Bare };
std::string to_string(RExpansion e);

/// Commutators [a, b] keyed by the unordered pair; the stored pair is ordered
/// (a < b) and the value is [a, b], so antisymmetry holds by construction.
class BracketTable {
 public:
  int cutoff = 0;
  std::vector<RllRelation> relations;
  RExpansion expansion = RExpansion::Normalized;

  /// Stores [a, b] = value (or [b, a] = -value when b < a).
  void set(const Gen& a, const Gen& b, const BilinearExpr& value);
  void mark_unknown(const Gen& a, const Gen& b);
  /// [a, b] when known.
  std::optional<BilinearExpr> bracket(const Gen& a, const Gen& b) const;
  bool is_unknown(const Gen& a, const Gen& b) const;

  const std::map<std::pair<Gen, Gen>, BilinearExpr>& entries() const { return entries_; }
  const std::map<std::pair<Gen, Gen>, bool>& unknown() const { return unknown_; }
  std::map<std::pair<Gen, Gen>, BilinearExpr>& mutable_entries() { return entries_; }

  /// Entries of other are added; conflicting values throw Error.
  void merge(const BracketTable& other);

  /// {"cutoff", "entries": [{"a", "b", "bracket"}], "expansion", "relations", "unknown": [{"a", "b"}]}
  std::string to_json(int indent = -1) const;
  static BracketTable from_json(const std::string& text);

  friend bool operator==(const BracketTable&, const BracketTable&) = default;

 private:
  std::map<std::pair<Gen, Gen>, BilinearExpr> entries_;
  std::map<std::pair<Gen, Gen>, bool> unknown_;
};

/// Extracts [l_{ab}[m], l_{cd}[n]] from the hbar^2 coefficient of
/// R^{(12)}(z - z') L^{(1)}(z) L^{(2)}(z') - L^{(2)}(z') L^{(1)}(z) R^{(12)}(z - z' [+ hbar K])
/// with L^+(z) = I + hbar sum_{k>=0} l[k] z^{-k-1}, L^-(z) = I + hbar sum_{k<0} l[k] z^{-k-1},
/// and 1/(z - z') expanded for |z| > |z'| (PlusPlus) or |z'| > |z| (MinusMinus,
/// MinusPlus). Mode pairs (m, n) range over |m|, |n| <= M with m on L^{(1)}
/// and n on L^{(2)}; entries whose result needs a mode beyond M are unknown.
/// Also asserts that the hbar^0 and hbar^1 coefficients vanish, that the
/// scalar hbar^2 terms of R cancel, that every other coefficient in the
/// window vanishes and that both orderings of a pair agree; a violation
/// throws Error. Throws ConfigError when M < 1.
BracketTable expand_rll(RllRelation relation, int cutoff, RExpansion expansion = RExpansion::Normalized);

/// The PlusPlus, MinusMinus and MinusPlus tables merged.
BracketTable expand_all(int cutoff, RExpansion expansion = RExpansion::Normalized);

/// Invariant form on gl2 read off the central terms:
/// kappa(X, Y) = trace * tr(XY) + trace_trace * tr(X) tr(Y).
struct CentralForm {
  Rat trace;
  Rat trace_trace;
};

/// Compares every known entry with the gl2 loop bracket pulled back along
/// l_{ab}[m] -> s_m E_{ba} t^m (s_m = 1 for m >= 0, -1 for m < 0):
/// [X, Y] = s_m s_n (pullback of [E_{ba}, E_{dc}] t^{m+n} + kappa(E_{ba}, E_{dc}) res(t^m d t^n) K).
/// kappa is fitted from the central terms at m = -1 and reported in the
/// notes together with its value relative to the Killing form 4 tr(XY).
/// The first mismatching entry is reported as the residual.
CheckReport compare_loop_algebra(const BracketTable& table);

/// The fitted central form, if the table has mixed entries at m = -1.
std::optional<CentralForm> fit_central_form(const BracketTable& table);

/// Jacobi identity on every generator triple whose brackets are all known.
/// notes["triples_checked"] counts the triples that were evaluated.
CheckReport jacobi_check(const BracketTable& table);

}  // namespace qkzlab
