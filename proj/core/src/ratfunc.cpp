#include "qkzlab/ratfunc.hpp"

#include <stdexcept>

#include "qkzlab/errors.hpp"

namespace qkzlab {

RatFunc::RatFunc(Rat constant) : num_(std::move(constant)), den_(Rat(1)) {}

RatFunc::RatFunc(Poly p) : num_(std::move(p)), den_(Rat(1)) {}

RatFunc::RatFunc(Poly num, Poly den) : num_(std::move(num)), den_(std::move(den)) {
  if (den_.is_zero()) throw std::domain_error("RatFunc: zero denominator");
  canonicalize();
}

void RatFunc::canonicalize() {
  if (num_.is_zero()) {
    den_ = Poly(Rat(1));
    return;
  }
  const Poly g = gcd(num_, den_);
  if (g.degree() > 0) {
    num_ = divmod(num_, g).first;
    den_ = divmod(den_, g).first;
  }
  const Rat lead = den_.leading();
  if (lead != Rat(1)) {
    const Rat s = inverse(lead);
    num_ *= s;
    den_ *= s;
  }
}

Rat RatFunc::eval(const Rat& a) const {
  const Rat d = den_.eval(a);
  if (d.is_zero()) throw PoleEncountered("rational function has a pole at " + a.to_string());
  return num_.eval(a) / d;
}

RatFunc RatFunc::derivative() const {
  return RatFunc(num_.derivative() * den_ - num_ * den_.derivative(), den_ * den_);
}

RatFunc RatFunc::shift(const Rat& c) const {
  return RatFunc(num_.compose_linear(c, Rat(1)), den_.compose_linear(c, Rat(1)));
}

RatFunc RatFunc::operator-() const {
  RatFunc r = *this;
  r.num_ = -r.num_;
  return r;
}

RatFunc& RatFunc::operator+=(const RatFunc& rhs) {
  if (den_ == rhs.den_) {
    num_ += rhs.num_;
  } else {
    num_ = num_ * rhs.den_ + rhs.num_ * den_;
    den_ = den_ * rhs.den_;
  }
  canonicalize();
  return *this;
}

RatFunc& RatFunc::operator-=(const RatFunc& rhs) { return *this += -rhs; }

RatFunc& RatFunc::operator*=(const RatFunc& rhs) {
  num_ = num_ * rhs.num_;
  den_ = den_ * rhs.den_;
  canonicalize();
  return *this;
}

RatFunc& RatFunc::operator/=(const RatFunc& rhs) {
  if (rhs.is_zero()) throw NotInvertible("division by the zero rational function");
  num_ = num_ * rhs.den_;
  den_ = den_ * rhs.num_;
  canonicalize();
  return *this;
}

std::string RatFunc::to_string(const std::string& var) const {
  if (den_ == Poly(Rat(1))) return num_.to_string(var);
  return "(" + num_.to_string(var) + ")/(" + den_.to_string(var) + ")";
}

RatFunc ratfunc_derivative(const RatFunc& f) { return f.derivative(); }

Rat ratfunc_eval(const RatFunc& f, const Rat& a) { return f.eval(a); }

RatFunc inverse(const RatFunc& f) { return RatFunc(Rat(1)) / f; }

}  // namespace qkzlab
