#include "onsager/ratfunc.hpp"

#include "onsager/errors.hpp"

namespace onsager {

RatFunc::RatFunc(const LaurentPoly& num) : num_(num), den_(1) {}

RatFunc::RatFunc(const LaurentPoly& num, const LaurentPoly& den) : num_(num), den_(den) {
  if (den_.is_zero()) throw ArithmeticError("rational function with zero denominator");
  normalize();
}

void RatFunc::normalize() {
  if (num_.is_zero()) {
    den_ = LaurentPoly(1);
    return;
  }
  if (den_.is_monomial()) {
    num_ = num_ * den_.inverse();
    den_ = LaurentPoly(1);
    return;
  }
  auto [content, d] = split_monomial_content(den_);
  Scalar lead = d.leading_term().second;
  if (!content.is_one() || !lead.is_one()) {
    Scalar inv = lead.inverse();
    num_ = num_.shifted(content.inverse()) * inv;
    den_ = d * inv;
  }
}

RatFunc RatFunc::operator-() const {
  RatFunc r = *this;
  r.num_ = -r.num_;
  return r;
}

RatFunc& RatFunc::operator+=(const RatFunc& o) {
  if (o.num_.is_zero()) return *this;
  if (num_.is_zero()) return *this = o;
  Scalar ratio;
  if (den_ == o.den_) {
    num_ += o.num_;
  } else if (proportional(den_, o.den_, &ratio)) {
    // o.den == ratio * den
    num_ += o.num_ * ratio.inverse();
  } else {
    num_ = num_ * o.den_ + o.num_ * den_;
    den_ = den_ * o.den_;
  }
  normalize();
  return *this;
}

RatFunc& RatFunc::operator-=(const RatFunc& o) { return *this += -o; }

RatFunc& RatFunc::operator*=(const RatFunc& o) {
  if (num_.is_zero() || o.num_.is_zero()) {
    num_ = LaurentPoly();
    den_ = LaurentPoly(1);
    return *this;
  }
  num_ = num_ * o.num_;
  if (!o.den_.is_constant()) den_ = den_.is_constant() ? o.den_ * den_.constant_term() : den_ * o.den_;
  normalize();
  return *this;
}

RatFunc operator*(const RatFunc& a, const LaurentPoly& p) {
  RatFunc r = a;
  r.num_ = r.num_ * p;
  r.normalize();
  return r;
}

RatFunc RatFunc::inverse() const {
  if (num_.is_zero()) throw ArithmeticError("inverse of zero rational function");
  return RatFunc(den_, num_);
}

RatFunc& RatFunc::operator/=(const RatFunc& o) { return *this *= o.inverse(); }

bool operator==(const RatFunc& a, const RatFunc& b) {
  if (a.den_ == b.den_) return a.num_ == b.num_;
  return a.num_ * b.den_ == b.num_ * a.den_;
}

RatFunc RatFunc::simplified() const {
  if (den_.is_constant()) return *this;
  if (auto q = try_divide(num_, den_)) return RatFunc(*q);
  if (!num_.is_zero() && num_.size() < den_.size())
    if (auto q = try_divide(den_, num_)) return RatFunc(LaurentPoly(1), *q);
  return *this;
}

Scalar RatFunc::eval(const Bindings& b) const {
  Scalar d = den_.eval(b);
  if (d.is_zero()) throw PoleError("denominator " + den_.to_string() + " vanishes at evaluation point");
  return num_.eval(b) / d;
}

RatFunc RatFunc::substitute(const std::map<Symbol, LaurentPoly>& images) const {
  LaurentPoly d = den_.substitute(images);
  if (d.is_zero()) throw PoleError("denominator " + den_.to_string() + " vanishes under substitution");
  return RatFunc(num_.substitute(images), d);
}

std::string RatFunc::to_string() const {
  if (den_.is_constant()) return num_.to_string();
  auto wrap = [](const LaurentPoly& p) {
    return p.size() > 1 ? "(" + p.to_string() + ")" : p.to_string();
  };
  return wrap(num_) + "/" + wrap(den_);
}

}  // namespace onsager
