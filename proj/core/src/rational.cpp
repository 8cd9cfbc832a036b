#include "qkzlab/rational.hpp"

#include <cctype>
#include <ostream>
#include <stdexcept>

#include "qkzlab/errors.hpp"

namespace qkzlab {

namespace {

bool is_integer_literal(std::string_view s) {
  if (s.empty()) return false;
  std::size_t i = (s.front() == '-' || s.front() == '+') ? 1 : 0;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  }
  return true;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

mpz_class parse_integer(std::string_view s) {
  if (s.front() == '+') s.remove_prefix(1);
  return mpz_class(std::string(s), 10);
}

}  // namespace

Rat::Rat(long num, long den) : q_(num, den) {
  if (den == 0) throw std::domain_error("Rat: zero denominator");
  q_.canonicalize();
}

Rat::Rat(mpq_class q) : q_(std::move(q)) { q_.canonicalize(); }

Rat Rat::parse(std::string_view text) {
  const std::string_view s = trim(text);
  const auto slash = s.find('/');
  const std::string_view num = trim(s.substr(0, slash));
  const std::string_view den = slash == std::string_view::npos ? "1" : trim(s.substr(slash + 1));
  if (!is_integer_literal(num) || !is_integer_literal(den) || den.front() == '-' || den.front() == '+') {
    throw ConfigError("not a rational literal: \"" + std::string(text) + "\"");
  }
  mpz_class d = parse_integer(den);
  if (d == 0) throw ConfigError("zero denominator in \"" + std::string(text) + "\"");
  return Rat(mpq_class(parse_integer(num), d));
}

std::string Rat::to_string() const {
  if (is_integer()) return q_.get_num().get_str();
  return q_.get_num().get_str() + "/" + q_.get_den().get_str();
}

Rat& Rat::operator+=(const Rat& rhs) {
  q_ += rhs.q_;
  return *this;
}

Rat& Rat::operator-=(const Rat& rhs) {
  q_ -= rhs.q_;
  return *this;
}

Rat& Rat::operator*=(const Rat& rhs) {
  q_ *= rhs.q_;
  return *this;
}

Rat& Rat::operator/=(const Rat& rhs) {
  if (rhs.is_zero()) throw std::domain_error("Rat: division by zero");
  q_ /= rhs.q_;
  return *this;
}

Rat pow(const Rat& base, unsigned exponent) {
  Rat result(1);
  for (unsigned i = 0; i < exponent; ++i) result *= base;
  return result;
}

Rat factorial(unsigned n) {
  mpz_class f;
  mpz_fac_ui(f.get_mpz_t(), n);
  return Rat(mpq_class(f));
}

Rat inverse(const Rat& r) {
  if (r.is_zero()) throw NotInvertible("inverse of zero");
  return Rat(1) / r;
}

std::ostream& operator<<(std::ostream& os, const Rat& r) { return os << r.to_string(); }

}  // namespace qkzlab
