#include "onsager/expr.hpp"

#include <cctype>

namespace onsager {

ParseError::ParseError(const std::string& msg, int line, int column)
    : InputError("line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + msg),
      line_(line),
      column_(column) {}

namespace {

bool is_atom_name(const std::string& s) { return s == "A" || s == "G" || s == "W" || s == "Wp" || s == "Gt"; }

class Parser {
 public:
  explicit Parser(const std::string& t) : text_(t) {}

  Expr run() {
    Expr e = expr();
    skip();
    if (pos_ < text_.size()) fail(std::string("unexpected '") + text_[pos_] + "'");
    return e;
  }

 private:
  [[noreturn]] void fail(const std::string& msg) const { throw ParseError(msg, line_, col_); }

  void advance() {
    if (text_[pos_] == '\n') {
      ++line_;
      col_ = 1;
    } else {
      ++col_;
    }
    ++pos_;
  }
  void skip() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) advance();
  }
  bool peek(char c) {
    skip();
    return pos_ < text_.size() && text_[pos_] == c;
  }
  void expect(char c) {
    if (!peek(c)) fail(std::string("expected '") + c + "'");
    advance();
  }
  Expr node(Expr::Kind k) const {
    Expr e;
    e.kind = k;
    e.line = line_;
    e.column = col_;
    return e;
  }
  Expr binary(Expr::Kind k, Expr a, Expr b) const {
    Expr e = node(k);
    e.line = a.line;
    e.column = a.column;
    e.kids = {std::move(a), std::move(b)};
    return e;
  }

  std::string digits() {
    skip();
    std::string s;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      s += text_[pos_];
      advance();
    }
    if (s.empty()) fail("expected an integer");
    return s;
  }

  Expr expr() {
    skip();
    Expr e;
    if (peek('-')) {
      Expr n = node(Expr::Kind::Neg);
      advance();
      n.kids.push_back(term());
      e = std::move(n);
    } else {
      e = term();
    }
    for (;;) {
      if (peek('+')) {
        advance();
        e = binary(Expr::Kind::Add, std::move(e), term());
      } else if (peek('-')) {
        advance();
        e = binary(Expr::Kind::Sub, std::move(e), term());
      } else {
        return e;
      }
    }
  }

  Expr term() {
    Expr e = factor();
    while (peek('*')) {
      advance();
      e = binary(Expr::Kind::Mul, std::move(e), factor());
    }
    return e;
  }

  Expr factor() {
    skip();
    if (pos_ >= text_.size()) fail("unexpected end of input");
    const char c = text_[pos_];
    if (c == '(') {
      advance();
      Expr e = expr();
      expect(')');
      return e;
    }
    if (c == '[') {
      Expr b = node(Expr::Kind::Bracket);
      advance();
      b.kids.push_back(expr());
      expect(',');
      b.kids.push_back(expr());
      expect(']');
      return b;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      Expr n = node(Expr::Kind::Number);
      std::string num = digits();
      if (peek('/')) {
        advance();
        std::string den = digits();
        if (den.find_first_not_of('0') == std::string::npos) fail("zero denominator");
        num += "/" + den;
      }
      n.value = Scalar::parse(num);
      return n;
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      Expr n = node(Expr::Kind::Symbol);
      std::string id;
      while (pos_ < text_.size() &&
             (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_')) {
        id += text_[pos_];
        advance();
      }
      n.name = id;
      if (!is_atom_name(id)) {
        if (peek('(')) throw ParseError("unknown atom '" + id + "'", n.line, n.column);
        return n;
      }
      n.kind = Expr::Kind::Atom;
      expect('(');
      bool neg = false;
      if (peek('-')) {
        neg = true;
        advance();
      } else if (peek('+')) {
        advance();
      }
      std::string d = digits();
      if (d.size() > 9) fail("atom index too large");
      n.index = std::stol(d) * (neg ? -1 : 1);
      expect(')');
      return n;
    }
    fail(std::string("unexpected '") + c + "'");
  }

  const std::string& text_;
  std::size_t pos_ = 0;
  int line_ = 1, col_ = 1;
};

std::string render_child(const Expr& e, bool wrap_sums) {
  bool sum = e.kind == Expr::Kind::Add || e.kind == Expr::Kind::Sub;
  std::string s = render(e);
  return (wrap_sums && sum) ? "(" + s + ")" : s;
}

template <class Sym>
struct Eval {
  using E = AlgElem<Sym, LaurentPoly>;
  const Bindings_& b;
  bool alt;

  struct V {
    bool scalar = true;
    LaurentPoly s;
    E e;
  };

  [[noreturn]] static void fail(const Expr& x, const std::string& msg) { throw ParseError(msg, x.line, x.column); }

  static E as_elem(const Expr& x, const V& v) {
    if (!v.scalar) return v.e;
    if (v.s.is_zero()) return E();
    fail(x, "a scalar cannot stand alone where an algebra element is expected");
  }

  V atom(const Expr& x) const {
    V v;
    v.scalar = false;
    const long n = x.index;
    const bool onsager_atom = x.name == "A" || x.name == "G";
    if (onsager_atom == alt)
      fail(x, "atom " + x.name + " does not belong to the " + (alt ? "alternative" : "Onsager") + " presentation");
    if constexpr (std::is_same_v<Sym, OnsagerSym>) {
      if (x.name == "A") {
        v.e = A<LaurentPoly>(static_cast<int>(n));
      } else {
        if (n < 1) fail(x, "G(m) needs m >= 1");
        v.e = G<LaurentPoly>(static_cast<int>(n));
      }
    } else {
      if (x.name == "W") {
        v.e = n <= 0 ? Wm<LaurentPoly>(static_cast<int>(-n)) : Wp<LaurentPoly>(static_cast<int>(n - 1));
      } else {
        if (n < 0) fail(x, x.name + "(k) needs k >= 0");
        v.e = x.name == "Wp" ? Wp<LaurentPoly>(static_cast<int>(n)) : Gt<LaurentPoly>(static_cast<int>(n));
      }
    }
    return v;
  }

  V operator()(const Expr& x) const {
    using K = Expr::Kind;
    switch (x.kind) {
      case K::Number: return V{true, LaurentPoly(x.value), {}};
      case K::Symbol: {
        auto it = b.find(x.name);
        return V{true, it == b.end() ? LaurentPoly::var(x.name) : LaurentPoly(it->second), {}};
      }
      case K::Atom: return atom(x);
      case K::Neg: {
        V v = (*this)(x.kids[0]);
        v.s = -v.s;
        v.e = -v.e;
        return v;
      }
      case K::Add:
      case K::Sub: {
        V l = (*this)(x.kids[0]), r = (*this)(x.kids[1]);
        const bool sub = x.kind == K::Sub;
        if (l.scalar && r.scalar) return V{true, sub ? l.s - r.s : l.s + r.s, {}};
        E le = as_elem(x.kids[0], l), re = as_elem(x.kids[1], r);
        return V{false, {}, sub ? le - re : le + re};
      }
      case K::Mul: {
        V l = (*this)(x.kids[0]), r = (*this)(x.kids[1]);
        if (l.scalar && r.scalar) return V{true, l.s * r.s, {}};
        if (!l.scalar && !r.scalar) fail(x, "product of two algebra elements; use [x, y] for the Lie bracket");
        return V{false, {}, l.scalar ? l.s * r.e : r.s * l.e};
      }
      case K::Bracket: {
        V l = (*this)(x.kids[0]), r = (*this)(x.kids[1]);
        E le = as_elem(x.kids[0], l), re = as_elem(x.kids[1], r);
        if constexpr (std::is_same_v<Sym, OnsagerSym>)
          return V{false, {}, OnsagerAlgebra().bracket(le, re)};
        else
          return V{false, {}, AltAlgebra().bracket(le, re)};
      }
    }
    fail(x, "bad expression node");
  }
};

void collect(const Expr& e, bool& ons, bool& alt) {
  if (e.kind == Expr::Kind::Atom) (e.name == "A" || e.name == "G" ? ons : alt) = true;
  for (const auto& k : e.kids) collect(k, ons, alt);
}

}  // namespace

Expr parse_expr(const std::string& text) { return Parser(text).run(); }

std::string render(const Expr& e) {
  using K = Expr::Kind;
  switch (e.kind) {
    case K::Number: return e.value.to_string();
    case K::Symbol: return e.name;
    case K::Atom: return e.name + "(" + std::to_string(e.index) + ")";
    case K::Neg: return "(-" + render_child(e.kids[0], true) + ")";
    case K::Add: return render(e.kids[0]) + " + " + render_child(e.kids[1], true);
    case K::Sub: return render(e.kids[0]) + " - " + render_child(e.kids[1], true);
    case K::Mul: {
      std::string r = render_child(e.kids[1], true);
      if (e.kids[1].kind == K::Mul) r = "(" + r + ")";
      return render_child(e.kids[0], true) + "*" + r;
    }
    case K::Bracket: return "[" + render(e.kids[0]) + ", " + render(e.kids[1]) + "]";
  }
  return {};
}

Presentation detect_presentation(const Expr& e) {
  bool ons = false, alt = false;
  collect(e, ons, alt);
  if (ons && alt) return Presentation::mixed;
  if (ons) return Presentation::onsager;
  if (alt) return Presentation::alt;
  return Presentation::none;
}

OElem<LaurentPoly> eval_onsager(const Expr& e, const Bindings_& b) {
  Eval<OnsagerSym> ev{b, false};
  return Eval<OnsagerSym>::as_elem(e, ev(e));
}

AElem<LaurentPoly> eval_alt(const Expr& e, const Bindings_& b) {
  Eval<AltSym> ev{b, true};
  return Eval<AltSym>::as_elem(e, ev(e));
}

LaurentPoly eval_scalar(const Expr& e, const Bindings_& b) {
  if (detect_presentation(e) != Presentation::none) throw ParseError("expected a scalar expression", e.line, e.column);
  Eval<OnsagerSym> ev{b, false};
  return ev(e).s;
}

}  // namespace onsager
