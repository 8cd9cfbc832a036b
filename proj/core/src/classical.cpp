#include "qkzlab/classical.hpp"

#include <array>
#include <nlohmann/json.hpp>
#include <regex>
#include <set>
#include <sstream>

#include "qkzlab/rmatrix.hpp"

namespace qkzlab {

// ---------------------------------------------------------------- symbols

std::string Gen::to_string() const {
  return "l(" + std::to_string(alpha) + "," + std::to_string(beta) + ")[" + std::to_string(mode) + "]";
}

Gen Gen::parse(const std::string& text) {
  static const std::regex re(R"(l\(([12]),([12])\)\[(-?[0-9]+)\])");
  std::smatch m;
  if (!std::regex_match(text, m, re)) throw ConfigError("bad generator '" + text + "'");
  return Gen{std::stoi(m[1]), std::stoi(m[2]), std::stoi(m[3])};
}

BilinearExpr BilinearExpr::constant(const Rat& c) {
  BilinearExpr e;
  e.add({}, c);
  return e;
}

BilinearExpr BilinearExpr::generator(const Gen& g, const Rat& c) {
  BilinearExpr e;
  e.add({Symbol::of(g)}, c);
  return e;
}

BilinearExpr BilinearExpr::central(const Rat& c) {
  BilinearExpr e;
  e.add({Symbol::K()}, c);
  return e;
}

void BilinearExpr::add(const Word& w, const Rat& c) {
  if (w.size() > kMaxLength) throw Error("word longer than two letters");
  if (c.is_zero()) return;
  auto it = terms_.find(w);
  if (it == terms_.end()) {
    terms_.emplace(w, c);
    return;
  }
  it->second += c;
  if (it->second.is_zero()) terms_.erase(it);
}

Rat BilinearExpr::coeff(const Word& w) const {
  auto it = terms_.find(w);
  return it == terms_.end() ? Rat(0) : it->second;
}

BilinearExpr BilinearExpr::part(std::size_t length) const {
  BilinearExpr out;
  for (const auto& [w, c] : terms_) {
    if (w.size() == length) out.terms_.emplace(w, c);
  }
  return out;
}

BilinearExpr BilinearExpr::linear_part() const {
  BilinearExpr out;
  for (const auto& [w, c] : terms_) {
    if (w.size() == 1 && !w[0].central) out.terms_.emplace(w, c);
  }
  return out;
}

std::vector<Gen> BilinearExpr::generators() const {
  std::set<Gen> seen;
  for (const auto& [w, c] : terms_) {
    for (const auto& s : w) {
      if (!s.central) seen.insert(s.gen);
    }
  }
  return {seen.begin(), seen.end()};
}

BilinearExpr BilinearExpr::operator-() const {
  BilinearExpr out = *this;
  for (auto& [w, c] : out.terms_) c = -c;
  return out;
}

BilinearExpr& BilinearExpr::operator+=(const BilinearExpr& rhs) {
  for (const auto& [w, c] : rhs.terms_) add(w, c);
  return *this;
}

BilinearExpr& BilinearExpr::operator-=(const BilinearExpr& rhs) {
  for (const auto& [w, c] : rhs.terms_) add(w, -c);
  return *this;
}

BilinearExpr& BilinearExpr::operator*=(const Rat& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [w, v] : terms_) v *= c;
  return *this;
}

BilinearExpr operator*(const BilinearExpr& a, const BilinearExpr& b) {
  BilinearExpr out;
  for (const auto& [wa, ca] : a.terms_) {
    for (const auto& [wb, cb] : b.terms_) {
      Word w = wa;
      w.insert(w.end(), wb.begin(), wb.end());
      out.add(w, ca * cb);
    }
  }
  return out;
}

std::string BilinearExpr::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [w, c] : terms_) {
    const bool neg = c.sign() < 0;
    const Rat mag = neg ? -c : c;
    std::string word;
    for (const auto& s : w) word += (word.empty() ? "" : "*") + s.to_string();
    std::string term;
    if (word.empty()) {
      term = mag.to_string();
    } else if (mag == Rat(1)) {
      term = word;
    } else {
      term = mag.to_string() + "*" + word;
    }
    if (first) {
      out = (neg ? "-" : "") + term;
    } else {
      out += (neg ? " - " : " + ") + term;
    }
    first = false;
  }
  return out;
}

BilinearExpr BilinearExpr::parse(const std::string& text) {
  std::istringstream in(text);
  std::vector<std::string> tokens;
  for (std::string t; in >> t;) tokens.push_back(t);
  if (tokens.empty()) throw ConfigError("empty expression");
  BilinearExpr out;
  int sign = 1;
  for (std::size_t i = 0; i < tokens.size(); ++i) {
    std::string tok = tokens[i];
    if (i % 2 == 1) {
      if (tok == "+") {
        sign = 1;
      } else if (tok == "-") {
        sign = -1;
      } else {
        throw ConfigError("expected + or - in '" + text + "'");
      }
      continue;
    }
    if (i == 0 && tok.size() > 1 && tok[0] == '-') {
      sign = -1;
      tok.erase(0, 1);
    }
    Rat coeff(1);
    Word word;
    std::size_t pos = 0;
    bool leading = true;
    while (pos <= tok.size()) {
      const std::size_t star = tok.find('*', pos);
      const std::string piece = tok.substr(pos, star == std::string::npos ? std::string::npos : star - pos);
      if (piece == "K") {
        word.push_back(Symbol::K());
      } else if (!piece.empty() && piece[0] == 'l') {
        word.push_back(Symbol::of(Gen::parse(piece)));
      } else if (leading) {
        coeff = Rat::parse(piece);
      } else {
        throw ConfigError("bad term '" + tok + "'");
      }
      leading = false;
      if (star == std::string::npos) break;
      pos = star + 1;
    }
    out.add(word, sign > 0 ? coeff : -coeff);
  }
  return out;
}

std::string to_string(RExpansion e) { return e == RExpansion::Normalized ? "normalized" : "bare"; }

// ---------------------------------------------------------------- table

namespace {

std::pair<Gen, Gen> key_of(const Gen& a, const Gen& b) { return a < b ? std::make_pair(a, b) : std::make_pair(b, a); }

}  // namespace

void BracketTable::set(const Gen& a, const Gen& b, const BilinearExpr& value) {
  if (a == b) {
    if (!value.is_zero()) throw Error("[" + a.to_string() + ", " + a.to_string() + "] is not zero");
    return;
  }
  const BilinearExpr stored = a < b ? value : -value;
  entries_[key_of(a, b)] = stored;
  unknown_.erase(key_of(a, b));
}

void BracketTable::mark_unknown(const Gen& a, const Gen& b) {
  if (a == b || entries_.count(key_of(a, b))) return;
  unknown_[key_of(a, b)] = true;
}

std::optional<BilinearExpr> BracketTable::bracket(const Gen& a, const Gen& b) const {
  if (a == b) return BilinearExpr{};
  auto it = entries_.find(key_of(a, b));
  if (it == entries_.end()) return std::nullopt;
  return a < b ? it->second : -it->second;
}

bool BracketTable::is_unknown(const Gen& a, const Gen& b) const { return unknown_.count(key_of(a, b)) > 0; }

void BracketTable::merge(const BracketTable& other) {
  if (other.expansion != expansion && !other.entries_.empty() && !entries_.empty()) {
    throw Error("cannot merge tables built from different R expansions");
  }
  for (const auto& [k, v] : other.entries_) {
    auto it = entries_.find(k);
    if (it != entries_.end() && it->second != v) {
      throw Error("conflicting values for [" + k.first.to_string() + ", " + k.second.to_string() + "]");
    }
    entries_[k] = v;
    unknown_.erase(k);
  }
  for (const auto& [k, v] : other.unknown_) {
    if (!entries_.count(k)) unknown_[k] = true;
  }
  for (auto r : other.relations) {
    if (std::find(relations.begin(), relations.end(), r) == relations.end()) relations.push_back(r);
  }
  cutoff = std::max(cutoff, other.cutoff);
  expansion = other.expansion;
}

std::string BracketTable::to_json(int indent) const {
  nlohmann::json j;
  j["cutoff"] = cutoff;
  j["expansion"] = qkzlab::to_string(expansion);
  j["relations"] = nlohmann::json::array();
  for (auto r : relations) j["relations"].push_back(qkzlab::to_string(r));
  j["entries"] = nlohmann::json::array();
  for (const auto& [k, v] : entries_) {
    j["entries"].push_back({{"a", k.first.to_string()}, {"b", k.second.to_string()}, {"bracket", v.to_string()}});
  }
  j["unknown"] = nlohmann::json::array();
  for (const auto& [k, v] : unknown_) j["unknown"].push_back({{"a", k.first.to_string()}, {"b", k.second.to_string()}});
  return j.dump(indent);
}

BracketTable BracketTable::from_json(const std::string& text) {
  try {
    const auto j = nlohmann::json::parse(text);
    BracketTable t;
    t.cutoff = j.at("cutoff").get<int>();
    const auto exp = j.at("expansion").get<std::string>();
    if (exp != "normalized" && exp != "bare") throw ConfigError("bad expansion '" + exp + "'");
    t.expansion = exp == "bare" ? RExpansion::Bare : RExpansion::Normalized;
    for (const auto& r : j.at("relations")) t.relations.push_back(parse_relation(r.get<std::string>()));
    for (const auto& e : j.at("entries")) {
      t.set(Gen::parse(e.at("a").get<std::string>()), Gen::parse(e.at("b").get<std::string>()),
            BilinearExpr::parse(e.at("bracket").get<std::string>()));
    }
    for (const auto& e : j.at("unknown")) {
      t.mark_unknown(Gen::parse(e.at("a").get<std::string>()), Gen::parse(e.at("b").get<std::string>()));
    }
    return t;
  } catch (const nlohmann::json::exception& e) {
    throw ConfigError(std::string("bad bracket table: ") + e.what());
  }
}

// ---------------------------------------------------------------- expansion engine

namespace {

// Laurent monomial z^first z'^second.
using Mono = std::pair<int, int>;
using Series2 = std::map<Mono, BilinearExpr>;
// Operator on aux1 ⊗ aux2, row-major, basis index 2(alpha-1) + (gamma-1).
using Mat4 = std::array<Series2, 16>;

void accumulate(Series2& into, const Series2& s, const Rat& c = Rat(1)) {
  for (const auto& [m, e] : s) {
    auto& slot = into[m];
    slot += e * c;
    if (slot.is_zero()) into.erase(m);
  }
}

Series2 mul(const Series2& a, const Series2& b, int box) {
  Series2 out;
  for (const auto& [ma, ea] : a) {
    for (const auto& [mb, eb] : b) {
      const Mono m{ma.first + mb.first, ma.second + mb.second};
      if (std::abs(m.first) > box || std::abs(m.second) > box) continue;
      auto& slot = out[m];
      slot += ea * eb;
      if (slot.is_zero()) out.erase(m);
    }
  }
  return out;
}

Mat4 mul(const Mat4& a, const Mat4& b, int box) {
  Mat4 out;
  for (int r = 0; r < 4; ++r) {
    for (int k = 0; k < 4; ++k) {
      const Series2& x = a[r * 4 + k];
      if (x.empty()) continue;
      for (int c = 0; c < 4; ++c) {
        const Series2& y = b[k * 4 + c];
        if (!y.empty()) accumulate(out[r * 4 + c], mul(x, y, box));
      }
    }
  }
  return out;
}

void add_to(Mat4& into, const Mat4& m, const Rat& c = Rat(1)) {
  for (std::size_t i = 0; i < 16; ++i) accumulate(into[i], m[i], c);
}

Mat4 scaled(const TensorMat<Rat>& m, const Series2& s, const BilinearExpr& unit) {
  Mat4 out;
  for (std::size_t r = 0; r < 4; ++r) {
    for (std::size_t c = 0; c < 4; ++c) {
      if (m(r, c).is_zero()) continue;
      for (const auto& [mono, e] : s) out[r * 4 + c][mono] = e * unit * m(r, c);
    }
  }
  return out;
}

enum class Region { ZLarge, ZpLarge };

// 1/(z - z')^power, power 1 or 2, expanded in the region through `terms` terms.
Series2 inverse_power(int power, Region region, int terms) {
  Series2 s;
  for (int p = 0; p <= terms; ++p) {
    const Rat c = power == 1 ? Rat(1) : Rat(p + 1);
    if (region == Region::ZLarge) {
      s[{-p - power, p}] = BilinearExpr::constant(c);
    } else {
      // 1/(z - z') = -1/(z' - z); the square has no sign.
      s[{p, -p - power}] = BilinearExpr::constant(power == 1 ? -c : c);
    }
  }
  return s;
}

// L on aux leg `leg` (1 or 2): I ⊗ I + hbar * (sum_k l[k] x^{-k-1}) with x = z or z'.
Mat4 l_operator(int leg, bool plus, int reach) {
  Mat4 out;
  for (int a = 1; a <= 2; ++a) {
    for (int b = 1; b <= 2; ++b) {
      Series2 s;
      if (plus) {
        for (int k = 0; k <= reach; ++k) {
          const Mono m = leg == 1 ? Mono{-k - 1, 0} : Mono{0, -k - 1};
          s[m] = BilinearExpr::generator(Gen{a, b, k});
        }
      } else {
        for (int k = -1; k >= -reach - 1; --k) {
          const Mono m = leg == 1 ? Mono{-k - 1, 0} : Mono{0, -k - 1};
          s[m] = BilinearExpr::generator(Gen{a, b, k});
        }
      }
      for (int o = 1; o <= 2; ++o) {
        const int row = leg == 1 ? 2 * (a - 1) + (o - 1) : 2 * (o - 1) + (a - 1);
        const int col = leg == 1 ? 2 * (b - 1) + (o - 1) : 2 * (o - 1) + (b - 1);
        out[static_cast<std::size_t>(row * 4 + col)] = s;
      }
    }
  }
  return out;
}

struct RCoefficients {
  TensorMat<Rat> r1;  // R = I + hbar r1/w + hbar^2 r2/w^2 + ...
  TensorMat<Rat> r2;
};

RCoefficients r_coefficients(RExpansion expansion) {
  using Series = HSeries<Rat>;
  auto at = [&](const Rat& w) {
    if (expansion == RExpansion::Normalized) return normalized_r(Spectral(w), 2);
    return bare_r<Series>(Series(w).truncated(2), Series::hbar(2));
  };
  auto coeff = [](const TensorMat<Series>& m, int k) { return m.map([k](const Series& s) { return s.coeff(k); }); };
  const auto one = at(Rat(1));
  const auto two = at(Rat(2));
  RCoefficients rc{coeff(one, 1), coeff(one, 2)};
  // R depends on hbar/w only.
  if (coeff(two, 1) * Rat(2) != rc.r1 || coeff(two, 2) * Rat(4) != rc.r2 || coeff(one, 0) != TensorMat<Rat>::identity(2)) {
    throw Error("R-matrix expansion is not homogeneous in hbar/w");
  }
  return rc;
}

bool within(const Gen& g, int cutoff) { return std::abs(g.mode) <= cutoff; }

std::string mono_text(const Mono& m) {
  return "z^" + std::to_string(m.first) + " z'^" + std::to_string(m.second);
}

}  // namespace

BracketTable expand_rll(RllRelation relation, int cutoff, RExpansion expansion) {
  if (cutoff < 1) throw ConfigError("mode cutoff M must be >= 1");
  const int M = cutoff;
  const int reach = 2 * M + 5;      // generators kept in the L series
  const int terms = 2 * M + 6;      // terms kept in the expansion of 1/(z - z')
  const int box = M + 1;            // monomials inspected: |exponents| <= box
  const int clip = 4 * M + 12;      // products are clipped outside this box

  const bool first_plus = relation == RllRelation::PlusPlus;
  const bool second_plus = relation != RllRelation::MinusMinus;
  const Region region = relation == RllRelation::PlusPlus ? Region::ZLarge : Region::ZpLarge;

  const RCoefficients rc = r_coefficients(expansion);
  const BilinearExpr one = BilinearExpr::constant(Rat(1));
  const Series2 rho1 = inverse_power(1, region, terms);
  const Series2 rho2 = inverse_power(2, region, terms);
  const Mat4 r1 = scaled(rc.r1, rho1, one);
  const Mat4 r2 = scaled(rc.r2, rho2, one);
  const Mat4 A = l_operator(1, first_plus, reach);
  const Mat4 B = l_operator(2, second_plus, reach);

  // hbar^1: r1 + A + B on both sides.
  {
    Mat4 e1;
    add_to(e1, r1);
    add_to(e1, A);
    add_to(e1, B);
    add_to(e1, B, Rat(-1));
    add_to(e1, A, Rat(-1));
    add_to(e1, r1, Rat(-1));
    for (const auto& s : e1) {
      if (!s.empty()) throw Error("hbar^1 coefficient of the RLL relation does not vanish");
    }
  }

  // hbar^2: r2 + r1 A + r1 B + A B - (B A + B r1 + A r1 + r2 + shift). The
  // scalar r2 terms are kept; the constant-term check below sees them cancel.
  Mat4 e2 = r2;
  add_to(e2, mul(r1, A, clip));
  add_to(e2, mul(r1, B, clip));
  add_to(e2, mul(A, B, clip));
  add_to(e2, mul(B, A, clip), Rat(-1));
  add_to(e2, mul(B, r1, clip), Rat(-1));
  add_to(e2, mul(A, r1, clip), Rat(-1));
  add_to(e2, r2, Rat(-1));
  if (relation == RllRelation::MinusPlus) {
    // R(w + hbar K) = R(w) + hbar K dR/dw + ...; at hbar^2 this is -K r1/w^2.
    add_to(e2, scaled(rc.r1, rho2, BilinearExpr::central(Rat(-1))), Rat(-1));
  }

  BracketTable table;
  table.cutoff = M;
  table.relations = {relation};
  table.expansion = expansion;

  for (int a = 1; a <= 2; ++a) {
    for (int b = 1; b <= 2; ++b) {
      for (int c = 1; c <= 2; ++c) {
        for (int d = 1; d <= 2; ++d) {
          const int row = 2 * (a - 1) + (c - 1);
          const int col = 2 * (b - 1) + (d - 1);
          const Series2& s = e2[static_cast<std::size_t>(row * 4 + col)];
          for (int ez = -box; ez <= box; ++ez) {
            for (int ezp = -box; ezp <= box; ++ezp) {
              const Mono mono{ez, ezp};
              auto it = s.find(mono);
              const BilinearExpr e = it == s.end() ? BilinearExpr{} : it->second;
              const BilinearExpr quad = e.part(2);
              const int m = -ez - 1, n = -ezp - 1;
              const bool carries = (m >= 0) == first_plus && (n >= 0) == second_plus;
              if (!carries) {
                if (!e.is_zero()) {
                  throw Error("RLL coefficient at " + mono_text(mono) + " does not vanish: " + e.to_string());
                }
                continue;
              }
              const Gen x{a, b, m}, y{c, d, n};
              BilinearExpr commutator;
              commutator.add({Symbol::of(x), Symbol::of(y)}, Rat(1));
              commutator.add({Symbol::of(y), Symbol::of(x)}, Rat(-1));
              if (quad != commutator) {
                throw Error("unexpected quadratic terms at " + mono_text(mono) + ": " + quad.to_string());
              }
              if (e.part(0) != BilinearExpr{}) throw Error("constant term at " + mono_text(mono));
              if (!within(x, M) || !within(y, M)) continue;
              const BilinearExpr value = -(e - quad);
              bool overflow = false;
              for (const auto& g : value.generators()) overflow = overflow || !within(g, M);
              if (overflow) {
                table.mark_unknown(x, y);
                continue;
              }
              if (auto known = table.bracket(x, y); known && *known != value) {
                throw Error("the two orderings of [" + x.to_string() + ", " + y.to_string() + "] disagree");
              }
              table.set(x, y, value);
            }
          }
        }
      }
    }
  }
  return table;
}

BracketTable expand_all(int cutoff, RExpansion expansion) {
  BracketTable out = expand_rll(RllRelation::PlusPlus, cutoff, expansion);
  out.merge(expand_rll(RllRelation::MinusMinus, cutoff, expansion));
  out.merge(expand_rll(RllRelation::MinusPlus, cutoff, expansion));
  return out;
}

// ---------------------------------------------------------------- comparison

namespace {

int sign_of_mode(int m) { return m >= 0 ? 1 : -1; }

int delta(int a, int b) { return a == b ? 1 : 0; }

// Pullback of the loop bracket for X = l_{ab}[m], Y = l_{cd}[n].
BilinearExpr reference_bracket(const Gen& x, const Gen& y, const CentralForm& form) {
  const int m = x.mode, n = y.mode, s = m + n;
  const Rat outer(sign_of_mode(m) * sign_of_mode(n));
  BilinearExpr out;
  // [E_ba, E_dc] = delta_ad E_bc - delta_bc E_da; E_xy t^p pulls back to s_p l_yx[p].
  if (delta(x.alpha, y.beta)) out += BilinearExpr::generator(Gen{y.alpha, x.beta, s}, Rat(sign_of_mode(s)));
  if (delta(x.beta, y.alpha)) out -= BilinearExpr::generator(Gen{x.alpha, y.beta, s}, Rat(sign_of_mode(s)));
  if (s == 0) {
    // kappa(E_ba, E_dc) res(t^m d t^n) = kappa * n.
    const Rat kappa = form.trace * Rat(delta(x.alpha, y.beta) * delta(x.beta, y.alpha)) +
                      form.trace_trace * Rat(delta(x.alpha, x.beta) * delta(y.alpha, y.beta));
    out += BilinearExpr::central(kappa * Rat(n));
  }
  return out * outer;
}

}  // namespace

std::optional<CentralForm> fit_central_form(const BracketTable& table) {
  // [l12[-1], l21[1]]: s_m s_n kappa(E21, E12) * 1 = -trace.
  const auto off = table.bracket(Gen{1, 2, -1}, Gen{2, 1, 1});
  const auto diag = table.bracket(Gen{1, 1, -1}, Gen{2, 2, 1});
  if (!off || !diag) return std::nullopt;
  return CentralForm{-off->central_coeff(), -diag->central_coeff()};
}

CheckReport compare_loop_algebra(const BracketTable& table) {
  CheckReport rep;
  rep.identity = "classical_limit";
  rep.mode = to_string(table.expansion);
  rep.params["cutoff"] = std::to_string(table.cutoff);
  std::string rels;
  for (auto r : table.relations) rels += (rels.empty() ? "" : ",") + to_string(r);
  rep.params["relations"] = rels;

  const auto fitted = fit_central_form(table);
  const CentralForm form = fitted.value_or(CentralForm{Rat(0), Rat(0)});
  if (fitted) {
    rep.notes["central_trace"] = form.trace.to_string();
    rep.notes["central_trace_trace"] = form.trace_trace.to_string();
    rep.notes["central_killing_relative"] = (form.trace / Rat(4)).to_string();
  }

  std::size_t mismatches = 0;
  bool central_off_support = false;
  for (const auto& [k, value] : table.entries()) {
    if (!value.central_coeff().is_zero() && k.first.mode + k.second.mode != 0) central_off_support = true;
    const BilinearExpr expected = reference_bracket(k.first, k.second, form);
    if (value == expected) continue;
    if (mismatches == 0) {
      rep.residual = Residual{"[" + k.first.to_string() + ", " + k.second.to_string() + "] = " + value.to_string() +
                                  "; expected " + expected.to_string(),
                              0, 0, std::nullopt};
      rep.notes["mismatch_a"] = k.first.to_string();
      rep.notes["mismatch_b"] = k.second.to_string();
    }
    ++mismatches;
  }
  rep.notes["entries"] = std::to_string(table.entries().size());
  rep.notes["unknown"] = std::to_string(table.unknown().size());
  rep.notes["mismatches"] = std::to_string(mismatches);
  rep.flags["central_on_m_plus_n_zero_only"] = !central_off_support;
  rep.flags["central_form_fitted"] = fitted.has_value();
  rep.pass = mismatches == 0 && !table.entries().empty();
  return rep;
}

CheckReport jacobi_check(const BracketTable& table) {
  CheckReport rep;
  rep.identity = "jacobi";
  rep.mode = to_string(table.expansion);
  rep.params["cutoff"] = std::to_string(table.cutoff);

  std::set<Gen> gens;
  for (const auto& [k, v] : table.entries()) {
    gens.insert(k.first);
    gens.insert(k.second);
  }
  const std::vector<Gen> all(gens.begin(), gens.end());

  // [[x, y], z], or nullopt when a needed bracket is missing.
  auto nested = [&](const Gen& x, const Gen& y, const Gen& z) -> std::optional<BilinearExpr> {
    const auto xy = table.bracket(x, y);
    if (!xy) return std::nullopt;
    BilinearExpr out;
    const BilinearExpr lin = xy->linear_part();
    for (const auto& [w, c] : lin.terms()) {
      const auto wz = table.bracket(w[0].gen, z);
      if (!wz) return std::nullopt;
      out += *wz * c;
    }
    return out;
  };

  std::size_t checked = 0;
  for (std::size_t i = 0; i < all.size(); ++i) {
    for (std::size_t j = i + 1; j < all.size(); ++j) {
      for (std::size_t k = j + 1; k < all.size(); ++k) {
        const auto t1 = nested(all[i], all[j], all[k]);
        const auto t2 = nested(all[j], all[k], all[i]);
        const auto t3 = nested(all[k], all[i], all[j]);
        if (!t1 || !t2 || !t3) continue;
        ++checked;
        const BilinearExpr sum = *t1 + *t2 + *t3;
        if (!sum.is_zero() && !rep.residual) {
          rep.residual = Residual{all[i].to_string() + ", " + all[j].to_string() + ", " + all[k].to_string() + ": " +
                                      sum.to_string(),
                                  0, 0, std::nullopt};
        }
      }
    }
  }
  rep.notes["triples_checked"] = std::to_string(checked);
  rep.pass = !rep.residual.has_value() && checked > 0;
  return rep;
}

}  // namespace qkzlab
