#include "onsager/laurent.hpp"

#include <algorithm>
#include <sstream>

#include "onsager/errors.hpp"

namespace onsager {

// ---------------------------------------------------------------- Monomial

Monomial::Monomial(Symbol s, int e) {
  if (e != 0) factors_.emplace_back(s, e);
}

Monomial::Monomial(std::vector<Factor> factors) {
  std::sort(factors.begin(), factors.end(),
            [](const Factor& a, const Factor& b) { return a.first < b.first; });
  for (const auto& f : factors) {
    if (!factors_.empty() && factors_.back().first == f.first)
      factors_.back().second += f.second;
    else
      factors_.push_back(f);
    if (factors_.back().second == 0) factors_.pop_back();
  }
}

int Monomial::exponent(Symbol s) const {
  for (const auto& [sym, e] : factors_)
    if (sym == s) return e;
  return 0;
}

int Monomial::total_degree() const {
  int d = 0;
  for (const auto& f : factors_) d += f.second;
  return d;
}

Monomial Monomial::inverse() const {
  Monomial r = *this;
  for (auto& f : r.factors_) f.second = -f.second;
  return r;
}

Monomial Monomial::without(Symbol s) const {
  Monomial r;
  for (const auto& f : factors_)
    if (f.first != s) r.factors_.push_back(f);
  return r;
}

Monomial operator*(const Monomial& a, const Monomial& b) {
  if (a.factors_.empty()) return b;
  if (b.factors_.empty()) return a;
  Monomial r;
  r.factors_.reserve(a.factors_.size() + b.factors_.size());
  auto i = a.factors_.begin();
  auto j = b.factors_.begin();
  while (i != a.factors_.end() || j != b.factors_.end()) {
    if (j == b.factors_.end() || (i != a.factors_.end() && i->first < j->first)) {
      r.factors_.push_back(*i++);
    } else if (i == a.factors_.end() || j->first < i->first) {
      r.factors_.push_back(*j++);
    } else {
      int e = i->second + j->second;
      if (e != 0) r.factors_.emplace_back(i->first, e);
      ++i;
      ++j;
    }
  }
  return r;
}

std::string Monomial::to_string() const {
  std::string s;
  for (const auto& [sym, e] : factors_) {
    if (!s.empty()) s += '*';
    s += sym.name();
    if (e != 1) s += '^' + std::to_string(e);
  }
  return s.empty() ? "1" : s;
}

int lex_compare(const Monomial& a, const Monomial& b) {
  const auto& fa = a.factors();
  const auto& fb = b.factors();
  auto i = fa.begin();
  auto j = fb.begin();
  while (i != fa.end() || j != fb.end()) {
    if (j == fb.end() || (i != fa.end() && i->first < j->first)) return i->second > 0 ? 1 : -1;
    if (i == fa.end() || j->first < i->first) return j->second > 0 ? -1 : 1;
    if (i->second != j->second) return i->second > j->second ? 1 : -1;
    ++i;
    ++j;
  }
  return 0;
}

// ------------------------------------------------------------- LaurentPoly

LaurentPoly::LaurentPoly(const Scalar& c) {
  if (!c.is_zero()) terms_.emplace(Monomial(), c);
}

LaurentPoly::LaurentPoly(const Monomial& m, const Scalar& c) {
  if (!c.is_zero()) terms_.emplace(m, c);
}

bool LaurentPoly::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.is_one());
}

Scalar LaurentPoly::constant_term() const { return coefficient(Monomial()); }

Scalar LaurentPoly::coefficient(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Scalar(0) : it->second;
}

LaurentPoly LaurentPoly::coefficient(Symbol s, int k) const {
  LaurentPoly r;
  for (const auto& [m, c] : terms_)
    if (m.exponent(s) == k) r.terms_.emplace(m.without(s), c);
  return r;
}

std::pair<int, int> LaurentPoly::degree_range(Symbol s) const {
  if (terms_.empty()) return {0, 0};
  int lo = terms_.begin()->first.exponent(s);
  int hi = lo;
  for (const auto& [m, c] : terms_) {
    int e = m.exponent(s);
    lo = std::min(lo, e);
    hi = std::max(hi, e);
  }
  return {lo, hi};
}

std::set<Symbol> LaurentPoly::variables() const {
  std::set<Symbol> vars;
  for (const auto& [m, c] : terms_)
    for (const auto& f : m.factors()) vars.insert(f.first);
  return vars;
}

const std::pair<const Monomial, Scalar>& LaurentPoly::leading_term() const {
  if (terms_.empty()) throw ArithmeticError("leading term of zero polynomial");
  return *terms_.rbegin();
}

void LaurentPoly::add_term(const Monomial& m, const Scalar& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

LaurentPoly LaurentPoly::operator-() const {
  LaurentPoly r = *this;
  for (auto& [m, c] : r.terms_) c = -c;
  return r;
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, -c);
  return *this;
}

LaurentPoly& LaurentPoly::operator*=(const Scalar& c) {
  if (c.is_zero()) {
    terms_.clear();
  } else if (!c.is_one()) {
    for (auto& t : terms_) t.second *= c;
  }
  return *this;
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  if (a.is_constant()) return b * a.constant_term();
  if (b.is_constant()) return a * b.constant_term();
  LaurentPoly r;
  for (const auto& [ma, ca] : a.terms_)
    for (const auto& [mb, cb] : b.terms_) r.add_term(ma * mb, ca * cb);
  return r;
}

LaurentPoly& LaurentPoly::operator*=(const LaurentPoly& o) { return *this = *this * o; }

LaurentPoly LaurentPoly::pow(int e) const {
  if (e < 0) return inverse().pow(-e);
  LaurentPoly result(1);
  LaurentPoly base = *this;
  while (e > 0) {
    if (e & 1) result *= base;
    e >>= 1;
    if (e > 0) base = base * base;
  }
  return result;
}

LaurentPoly LaurentPoly::inverse() const {
  if (!is_monomial()) throw ArithmeticError("inverse of non-monomial Laurent polynomial " + to_string());
  const auto& [m, c] = *terms_.begin();
  return LaurentPoly(m.inverse(), c.inverse());
}

LaurentPoly LaurentPoly::shifted(const Monomial& s) const {
  LaurentPoly r;
  for (const auto& [m, c] : terms_) r.terms_.emplace(m * s, c);
  return r;
}

Scalar LaurentPoly::eval(const Bindings& b) const {
  Scalar total;
  for (const auto& [m, c] : terms_) {
    Scalar t = c;
    for (const auto& [sym, e] : m.factors()) {
      auto it = b.find(sym);
      if (it == b.end()) throw InputError("no binding for indeterminate '" + sym.name() + "'");
      if (e < 0 && it->second.is_zero())
        throw PoleError("pole: '" + sym.name() + "' = 0 with exponent " + std::to_string(e));
      mpq_class p = 1;
      mpq_class base = e < 0 ? mpq_class(1 / it->second.raw()) : it->second.raw();
      for (int k = 0; k < (e < 0 ? -e : e); ++k) p *= base;
      t *= Scalar(p);
    }
    total += t;
  }
  return total;
}

LaurentPoly LaurentPoly::substitute(const std::map<Symbol, LaurentPoly>& images) const {
  LaurentPoly r;
  // Powers of each image are reused across terms.
  std::map<std::pair<Symbol, int>, LaurentPoly> powers;
  auto power = [&](Symbol s, const LaurentPoly& img, int e) -> const LaurentPoly& {
    auto key = std::make_pair(s, e);
    auto it = powers.find(key);
    if (it != powers.end()) return it->second;
    if (e < 0 && img.is_zero()) throw PoleError("pole: '" + s.name() + "' = 0 with exponent " + std::to_string(e));
    return powers.emplace(key, img.pow(e)).first->second;
  };
  for (const auto& [m, c] : terms_) {
    LaurentPoly t(Monomial(), c);
    std::vector<Monomial::Factor> kept;
    for (const auto& [sym, e] : m.factors()) {
      auto it = images.find(sym);
      if (it == images.end()) {
        kept.emplace_back(sym, e);
      } else {
        t = t * power(sym, it->second, e);
      }
    }
    if (!kept.empty()) t = t.shifted(Monomial(std::move(kept)));
    r += t;
  }
  return r;
}

LaurentPoly LaurentPoly::partial_eval(const Bindings& b) const {
  std::map<Symbol, LaurentPoly> images;
  for (const auto& [s, v] : b) images.emplace(s, LaurentPoly(v));
  return substitute(images);
}

std::string LaurentPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [m, c] = *it;
    Scalar mag = c.abs();
    if (first) {
      if (c.sign() < 0) os << '-';
    } else {
      os << (c.sign() < 0 ? " - " : " + ");
    }
    first = false;
    if (m.is_one()) {
      os << mag;
    } else {
      if (!mag.is_one()) os << mag << '*';
      os << m.to_string();
    }
  }
  return os.str();
}

// ---------------------------------------------------------------- division

std::pair<Monomial, LaurentPoly> split_monomial_content(const LaurentPoly& p) {
  if (p.is_zero()) return {Monomial(), p};
  std::map<Symbol, int> lo;
  bool first = true;
  for (const auto& [m, c] : p.terms()) {
    if (first) {
      for (const auto& [s, e] : m.factors()) lo[s] = e;
      first = false;
      continue;
    }
    // Variables absent from this term have exponent 0.
    for (auto& [s, e] : lo) e = std::min(e, m.exponent(s));
    for (const auto& [s, e] : m.factors())
      if (!lo.count(s)) lo[s] = std::min(0, e);
  }
  std::vector<Monomial::Factor> f;
  for (const auto& [s, e] : lo)
    if (e != 0) f.emplace_back(s, e);
  Monomial content(std::move(f));
  return {content, p.shifted(content.inverse())};
}

std::optional<LaurentPoly> try_divide(const LaurentPoly& num, const LaurentPoly& den) {
  if (den.is_zero()) throw ArithmeticError("division by the zero polynomial");
  if (num.is_zero()) return LaurentPoly();
  if (den.is_monomial()) return num * den.inverse();
  auto [mn, n] = split_monomial_content(num);
  auto [md, d] = split_monomial_content(den);
  const auto& [dlm, dlc] = d.leading_term();
  LaurentPoly quotient;
  LaurentPoly rem = n;
  while (!rem.is_zero()) {
    const auto& [rlm, rlc] = rem.leading_term();
    Monomial q = rlm * dlm.inverse();
    for (const auto& f : q.factors())
      if (f.second < 0) return std::nullopt;
    LaurentPoly t(q, rlc / dlc);
    quotient += t;
    rem -= t * d;
  }
  return quotient.shifted(mn * md.inverse());
}

bool proportional(const LaurentPoly& a, const LaurentPoly& b, Scalar* ratio) {
  if (a.size() != b.size() || a.is_zero()) return false;
  auto i = a.terms().begin();
  auto j = b.terms().begin();
  if (!(i->first == j->first)) return false;
  Scalar r = j->second / i->second;
  for (; i != a.terms().end(); ++i, ++j) {
    if (!(i->first == j->first) || !(j->second == r * i->second)) return false;
  }
  if (ratio != nullptr) *ratio = r;
  return true;
}

}  // namespace onsager
