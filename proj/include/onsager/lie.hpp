#pragma once

#include <array>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "onsager/ratfunc.hpp"

namespace onsager {

/// Sparse linear combination of basis symbols over a coefficient ring C
/// (LaurentPoly or RatFunc). Zero coefficients are never stored.
template <class Sym, class C>
class AlgElem {
 public:
  using Symbol = Sym;
  using Coeff = C;
  using Terms = std::map<Sym, C>;

  AlgElem() = default;
  explicit AlgElem(Sym s, C c = C(1)) { add(s, c); }

  void add(Sym s, const C& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(s, c);
    if (!inserted) {
      it->second += c;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  C coeff(Sym s) const {
    auto it = terms_.find(s);
    return it == terms_.end() ? C() : it->second;
  }

  AlgElem& operator+=(const AlgElem& o) {
    for (const auto& [s, c] : o.terms_) add(s, c);
    return *this;
  }
  AlgElem& operator-=(const AlgElem& o) {
    for (const auto& [s, c] : o.terms_) add(s, -c);
    return *this;
  }
  AlgElem& operator*=(const C& k) {
    if (k.is_zero()) {
      terms_.clear();
      return *this;
    }
    for (auto it = terms_.begin(); it != terms_.end();) {
      it->second *= k;
      it = it->second.is_zero() ? terms_.erase(it) : std::next(it);
    }
    return *this;
  }
  AlgElem operator-() const {
    AlgElem r = *this;
    for (auto& [s, c] : r.terms_) c = -c;
    return r;
  }
  friend AlgElem operator+(AlgElem a, const AlgElem& b) { return a += b; }
  friend AlgElem operator-(AlgElem a, const AlgElem& b) { return a -= b; }
  friend AlgElem operator*(const C& k, AlgElem a) { return a *= k; }
  friend AlgElem operator*(AlgElem a, const C& k) { return a *= k; }
  friend bool operator==(const AlgElem& a, const AlgElem& b) { return a.terms_ == b.terms_; }

  template <class D, class F>
  AlgElem<Sym, D> map_coeffs(F&& f) const {
    AlgElem<Sym, D> r;
    for (const auto& [s, c] : terms_) r.add(s, f(c));
    return r;
  }

  std::string to_string() const {
    if (terms_.empty()) return "0";
    std::string out;
    for (const auto& [s, c] : terms_) {
      std::string cs = c.to_string();
      bool negative = !cs.empty() && cs[0] == '-';
      bool compound = cs.find_first_of("+/", 1) != std::string::npos ||
                      cs.find(" - ") != std::string::npos;
      std::string body;
      if (cs == "1" || cs == "-1") {
        body = s.to_string();
      } else if (compound) {
        body = "(" + cs + ")*" + s.to_string();
        negative = false;
      } else {
        body = (negative ? cs.substr(1) : cs) + "*" + s.to_string();
      }
      if (out.empty())
        out = (negative ? "-" : "") + body;
      else
        out += (negative ? " - " : " + ") + body;
    }
    return out;
  }

 private:
  Terms terms_;
};

/// At most two basis terms with integer coefficients: the image of a basis
/// bracket or a basis automorphism action.
template <class Sym>
struct BasisTerms {
  std::array<std::pair<Sym, long>, 2> items{};
  int count = 0;
  void push(Sym s, long k) {
    if (k != 0) items[static_cast<std::size_t>(count++)] = {s, k};
  }
};

template <class C>
C scale(const C& c, long k) {
  if (k == 1) return c;
  if (k == -1) return -c;
  return c * C(Scalar(k));
}

/// Bilinear extension of the algebra's basis bracket.
template <class Alg, class C>
AlgElem<typename Alg::Sym, C> lie_bracket(const Alg& alg, const AlgElem<typename Alg::Sym, C>& x,
                                          const AlgElem<typename Alg::Sym, C>& y) {
  AlgElem<typename Alg::Sym, C> r;
  BasisTerms<typename Alg::Sym> bt;
  for (const auto& [a, ca] : x.terms())
    for (const auto& [b, cb] : y.terms()) {
      bt.count = 0;
      alg.basis_bracket(a, b, bt);
      if (bt.count == 0) continue;
      C prod = ca * cb;
      for (int k = 0; k < bt.count; ++k) r.add(bt.items[static_cast<std::size_t>(k)].first,
                                               scale(prod, bt.items[static_cast<std::size_t>(k)].second));
    }
  return r;
}

enum class Auto { Phi, Tau0, Tau1 };

/// Finite composition of automorphisms. The rightmost letter acts first, so
/// {Tau1, Phi} is tau1 o Phi.
struct AutoWord {
  std::vector<Auto> letters;

  static AutoWord identity() { return {}; }
  /// base^n for n >= 0.
  static AutoWord power(const AutoWord& base, int n) {
    AutoWord w;
    for (int i = 0; i < n; ++i) w.letters.insert(w.letters.end(), base.letters.begin(), base.letters.end());
    return w;
  }
  friend AutoWord operator*(const AutoWord& a, const AutoWord& b) {
    AutoWord w = a;
    w.letters.insert(w.letters.end(), b.letters.begin(), b.letters.end());
    return w;
  }
  std::string to_string() const {
    if (letters.empty()) return "id";
    std::string s;
    for (Auto a : letters) {
      if (!s.empty()) s += '*';
      s += a == Auto::Phi ? "Phi" : (a == Auto::Tau0 ? "tau0" : "tau1");
    }
    return s;
  }
};

inline const AutoWord kTau0Phi{{Auto::Tau0, Auto::Phi}};
inline const AutoWord kTau1Phi{{Auto::Tau1, Auto::Phi}};

/// Linear combination of automorphism words.
template <class C>
struct AutoPoly {
  std::vector<std::pair<C, AutoWord>> terms;

  /// (sum of words)^n, expanded.
  static AutoPoly power(const AutoPoly& base, int n) {
    AutoPoly r{{{C(1), AutoWord::identity()}}};
    for (int i = 0; i < n; ++i) {
      AutoPoly next;
      for (const auto& [c1, w1] : r.terms)
        for (const auto& [c2, w2] : base.terms) next.terms.emplace_back(c1 * c2, w1 * w2);
      r = std::move(next);
    }
    return r;
  }
};

template <class Alg, class C>
AlgElem<typename Alg::Sym, C> apply_letter(const Alg& alg, Auto g, const AlgElem<typename Alg::Sym, C>& x) {
  AlgElem<typename Alg::Sym, C> r;
  BasisTerms<typename Alg::Sym> bt;
  for (const auto& [s, c] : x.terms()) {
    bt.count = 0;
    alg.basis_auto(g, s, bt);
    for (int k = 0; k < bt.count; ++k)
      r.add(bt.items[static_cast<std::size_t>(k)].first, scale(c, bt.items[static_cast<std::size_t>(k)].second));
  }
  return r;
}

template <class Alg, class C>
AlgElem<typename Alg::Sym, C> apply_auto(const Alg& alg, const AutoWord& w, AlgElem<typename Alg::Sym, C> x) {
  for (auto it = w.letters.rbegin(); it != w.letters.rend(); ++it) x = apply_letter(alg, *it, x);
  return x;
}

template <class Alg, class C>
AlgElem<typename Alg::Sym, C> apply_autopoly(const Alg& alg, const AutoPoly<C>& s,
                                             const AlgElem<typename Alg::Sym, C>& x) {
  AlgElem<typename Alg::Sym, C> r;
  for (const auto& [c, w] : s.terms) r += c * apply_auto(alg, w, x);
  return r;
}

}  // namespace onsager
