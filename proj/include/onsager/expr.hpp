#pragma once

#include <map>
#include <string>
#include <vector>

#include "onsager/apresentation.hpp"
#include "onsager/errors.hpp"

namespace onsager {

/// Syntax error with a 1-based source position.
class ParseError : public InputError {
 public:
  ParseError(const std::string& msg, int line, int column);
  int line() const { return line_; }
  int column() const { return column_; }

 private:
  int line_;
  int column_;
};

/// Grammar:
///   expr   := ["-"] term (("+"|"-") term)*
///   term   := factor ("*" factor)*
///   factor := rational | symbol | atom | "[" expr "," expr "]" | "(" expr ")"
///   atom   := ("A"|"G"|"W"|"Wp"|"Gt") "(" integer ")"
///   rational := integer ("/" positive-integer)?
/// W(n) uses the natural index (W(-k), W(k+1)); Wp(k) = W(k+1); Gt(k) is the
/// (k+1)-th Gt generator.
struct Expr {
  enum class Kind { Add, Sub, Neg, Mul, Bracket, Atom, Symbol, Number };
  Kind kind = Kind::Number;
  std::vector<Expr> kids;
  std::string name;  // atom or symbol name
  long index = 0;    // atom index
  Scalar value;      // number
  int line = 1, column = 1;

  friend bool operator==(const Expr& a, const Expr& b) {
    return a.kind == b.kind && a.kids == b.kids && a.name == b.name && a.index == b.index && a.value == b.value;
  }
};

Expr parse_expr(const std::string& text);
/// Text that parses back to an equal tree.
std::string render(const Expr& e);

enum class Presentation { none, onsager, alt, mixed };
Presentation detect_presentation(const Expr& e);

/// Names bound to exact rationals; unbound names stay indeterminates.
using Bindings_ = std::map<std::string, Scalar>;

/// Evaluation in the full algebras. Throws InputError for atoms of the other
/// presentation, inadmissible indices, products of two algebra elements and
/// sums mixing scalars with algebra elements (a bare 0 is the zero element).
OElem<LaurentPoly> eval_onsager(const Expr& e, const Bindings_& b = {});
AElem<LaurentPoly> eval_alt(const Expr& e, const Bindings_& b = {});
LaurentPoly eval_scalar(const Expr& e, const Bindings_& b = {});

}  // namespace onsager
