#include "onsager/scalar.hpp"

#include <cctype>

#include "onsager/errors.hpp"

namespace onsager {

Scalar::Scalar(long num, long den) {
  if (den == 0) throw ArithmeticError("rational with zero denominator");
  value_ = mpq_class(num, den);
  value_.canonicalize();
}

Scalar Scalar::parse(std::string_view text) {
  auto digits = [](std::string_view s, bool allow_sign) {
    if (s.empty()) return false;
    std::size_t i = 0;
    if (allow_sign && (s[0] == '-' || s[0] == '+')) i = 1;
    if (i == s.size()) return false;
    for (; i < s.size(); ++i)
      if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
    return true;
  };
  auto slash = text.find('/');
  std::string_view num = text.substr(0, slash);
  std::string_view den = slash == std::string_view::npos ? std::string_view("1") : text.substr(slash + 1);
  if (!digits(num, true) || !digits(den, false))
    throw InputError("not a rational number: '" + std::string(text) + "'");
  std::string n(num);
  if (!n.empty() && n[0] == '+') n.erase(0, 1);
  mpz_class zn(n), zd{std::string(den)};
  if (zd == 0) throw InputError("rational with zero denominator: '" + std::string(text) + "'");
  mpq_class q(zn, zd);
  q.canonicalize();
  return Scalar(q);
}

Scalar& Scalar::operator/=(const Scalar& o) {
  if (o.is_zero()) throw ArithmeticError("division by zero");
  value_ /= o.value_;
  return *this;
}

Scalar Scalar::inverse() const {
  if (is_zero()) throw ArithmeticError("inverse of zero");
  return Scalar(mpq_class(1 / value_));
}

std::string Scalar::to_string() const { return value_.get_str(); }

Scalar binomial(long n, long k) {
  if (k < 0 || n < 0 || k > n) return Scalar(0);
  mpz_class r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return Scalar(mpq_class(r));
}

Scalar pow2(long e) {
  mpz_class p;
  mpz_ui_pow_ui(p.get_mpz_t(), 2, static_cast<unsigned long>(e < 0 ? -e : e));
  return e < 0 ? Scalar(mpq_class(1, p)) : Scalar(mpq_class(p));
}

}  // namespace onsager
