#pragma once

#include <string>

#include "onsager/laurent.hpp"

namespace onsager {

/// Fraction of two Laurent polynomials, not reduced to lowest terms.
///
/// Equality is cross-multiplication. After every operation the denominator is
/// made monic with no monomial content; equal or proportional denominators
/// are combined without multiplying them.
class RatFunc {
 public:
  RatFunc() : den_(1) {}
  RatFunc(const LaurentPoly& num);  // NOLINT(google-explicit-constructor)
  RatFunc(const Scalar& c) : RatFunc(LaurentPoly(c)) {}  // NOLINT(google-explicit-constructor)
  template <std::integral I>
  RatFunc(I v) : RatFunc(LaurentPoly(Scalar(v))) {}  // NOLINT(google-explicit-constructor)
  /// Throws ArithmeticError on a zero denominator.
  RatFunc(const LaurentPoly& num, const LaurentPoly& den);

  const LaurentPoly& num() const { return num_; }
  const LaurentPoly& den() const { return den_; }

  bool is_zero() const { return num_.is_zero(); }
  bool is_polynomial() const { return den_.is_constant(); }

  RatFunc operator-() const;
  RatFunc& operator+=(const RatFunc& o);
  RatFunc& operator-=(const RatFunc& o);
  RatFunc& operator*=(const RatFunc& o);
  RatFunc& operator/=(const RatFunc& o);
  friend RatFunc operator+(RatFunc a, const RatFunc& b) { return a += b; }
  friend RatFunc operator-(RatFunc a, const RatFunc& b) { return a -= b; }
  friend RatFunc operator*(RatFunc a, const RatFunc& b) { return a *= b; }
  friend RatFunc operator/(RatFunc a, const RatFunc& b) { return a /= b; }
  friend RatFunc operator*(const RatFunc& a, const LaurentPoly& p);
  friend RatFunc operator*(const LaurentPoly& p, const RatFunc& a) { return a * p; }
  template <std::integral I>
  friend RatFunc operator*(I c, const RatFunc& a) {
    return RatFunc(c) * a;
  }
  template <std::integral I>
  friend RatFunc operator*(const RatFunc& a, I c) {
    return a * RatFunc(c);
  }

  /// Cross-multiplied equality: num*other.den == other.num*den.
  friend bool operator==(const RatFunc& a, const RatFunc& b);

  RatFunc inverse() const;
  /// Cancels num or den entirely when one divides the other exactly.
  RatFunc simplified() const;

  Scalar eval(const Bindings& b) const;
  RatFunc substitute(const std::map<Symbol, LaurentPoly>& images) const;

  std::string to_string() const;

 private:
  void normalize();
  LaurentPoly num_;
  LaurentPoly den_;
};

}  // namespace onsager
