#pragma once

#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "onsager/scalar.hpp"
#include "onsager/symbol.hpp"

namespace onsager {

/// Sparse exponent vector: (indeterminate, nonzero exponent) pairs sorted by
/// indeterminate. Negative exponents are allowed.
class Monomial {
 public:
  using Factor = std::pair<Symbol, int>;

  Monomial() = default;
  Monomial(Symbol s, int e);
  /// Takes arbitrary factors; merges duplicates and drops zero exponents.
  explicit Monomial(std::vector<Factor> factors);

  bool is_one() const { return factors_.empty(); }
  int exponent(Symbol s) const;
  const std::vector<Factor>& factors() const { return factors_; }
  int total_degree() const;

  Monomial inverse() const;
  /// Drops the factor of `s`.
  Monomial without(Symbol s) const;

  friend Monomial operator*(const Monomial& a, const Monomial& b);
  friend bool operator==(const Monomial& a, const Monomial& b) = default;

  std::string to_string() const;

 private:
  std::vector<Factor> factors_;
};

/// Lexicographic comparison with variables ordered by name, earlier names more
/// significant. Returns <0, 0, >0.
int lex_compare(const Monomial& a, const Monomial& b);

struct MonomialLess {
  bool operator()(const Monomial& a, const Monomial& b) const { return lex_compare(a, b) < 0; }
};

using Bindings = std::map<Symbol, Scalar>;

/// Sparse multivariate Laurent polynomial over the rationals. Stored terms
/// never have zero coefficients; equality is equality of term maps.
class LaurentPoly {
 public:
  using Terms = std::map<Monomial, Scalar, MonomialLess>;

  LaurentPoly() = default;
  LaurentPoly(const Scalar& c);  // NOLINT(google-explicit-constructor)
  template <std::integral I>
  LaurentPoly(I v) : LaurentPoly(Scalar(v)) {}  // NOLINT(google-explicit-constructor)
  LaurentPoly(const Monomial& m, const Scalar& c);

  static LaurentPoly var(Symbol s, int e = 1) { return LaurentPoly(Monomial(s, e), Scalar(1)); }
  static LaurentPoly var(std::string_view name, int e = 1) { return var(Symbol(name), e); }

  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  bool is_monomial() const { return terms_.size() == 1; }
  std::size_t size() const { return terms_.size(); }
  const Terms& terms() const { return terms_; }

  /// Coefficient of the monomial 1.
  Scalar constant_term() const;
  Scalar coefficient(const Monomial& m) const;
  /// Coefficient of s^k viewed as a polynomial in s over the other variables.
  LaurentPoly coefficient(Symbol s, int k) const;
  /// Min and max exponent of `s` over all terms; (0, 0) for the zero polynomial.
  std::pair<int, int> degree_range(Symbol s) const;
  std::set<Symbol> variables() const;
  /// Largest term in lex order; requires nonzero.
  const std::pair<const Monomial, Scalar>& leading_term() const;

  LaurentPoly operator-() const;
  LaurentPoly& operator+=(const LaurentPoly& o);
  LaurentPoly& operator-=(const LaurentPoly& o);
  LaurentPoly& operator*=(const LaurentPoly& o);
  LaurentPoly& operator*=(const Scalar& c);
  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
  friend LaurentPoly operator*(LaurentPoly a, const Scalar& c) { return a *= c; }
  friend LaurentPoly operator*(const Scalar& c, LaurentPoly a) { return a *= c; }
  template <std::integral I>
  friend LaurentPoly operator*(I c, LaurentPoly a) { return a *= Scalar(c); }
  template <std::integral I>
  friend LaurentPoly operator*(LaurentPoly a, I c) { return a *= Scalar(c); }
  friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) { return a.terms_ == b.terms_; }

  /// Integer power; negative powers only for monomials.
  LaurentPoly pow(int e) const;
  /// Inverse of a nonzero monomial; throws ArithmeticError otherwise.
  LaurentPoly inverse() const;
  /// Multiplies every exponent of `m` into each term.
  LaurentPoly shifted(const Monomial& m) const;

  /// Full evaluation. Every indeterminate must be bound; a zero binding for an
  /// indeterminate with a negative exponent throws PoleError.
  Scalar eval(const Bindings& b) const;
  /// Replaces bound indeterminates by the given polynomials; unbound ones stay.
  /// A negative exponent requires the image to be a monomial (or a nonzero
  /// constant).
  LaurentPoly substitute(const std::map<Symbol, LaurentPoly>& images) const;
  LaurentPoly partial_eval(const Bindings& b) const;

  std::string to_string() const;

 private:
  void add_term(const Monomial& m, const Scalar& c);
  Terms terms_;
};

/// Exact quotient in the Laurent ring if `den` divides `num`, else nullopt.
/// Throws ArithmeticError when `den` is zero.
std::optional<LaurentPoly> try_divide(const LaurentPoly& num, const LaurentPoly& den);

/// True iff b == ratio * a for a nonzero rational ratio (written to *ratio).
bool proportional(const LaurentPoly& a, const LaurentPoly& b, Scalar* ratio);

/// Factor out the monomial of minimal exponents so the remainder is a
/// polynomial with no monomial content: p == shift * result.
std::pair<Monomial, LaurentPoly> split_monomial_content(const LaurentPoly& p);

}  // namespace onsager
