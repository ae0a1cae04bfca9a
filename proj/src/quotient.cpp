#include "onsager/quotient.hpp"

#include <sstream>

#include "onsager/errors.hpp"

namespace onsager {

namespace {
int sign_pow(int e) { return (e % 2 == 0) ? 1 : -1; }
}  // namespace

QuotientO::QuotientO(int n, std::vector<LaurentPoly> alphas)
    : n_(n), alphas_(std::move(alphas)), cache_(std::make_shared<Cache>()) {
  if (n_ < 1) throw InputError("quotient order N must be >= 1");
  if (static_cast<int>(alphas_.size()) != n_ + 1)
    throw InputError("quotient needs N+1 alpha coefficients, got " + std::to_string(alphas_.size()));
  if (!(alphas_.back() == LaurentPoly(1))) throw InputError("alpha_N must equal 1");
}

std::vector<std::string> QuotientO::symbolic_names(int n) {
  if (n == 1) return {"alpha"};
  if (n == 2) return {"alphap", "alpha"};
  std::vector<std::string> r;
  for (int k = 0; k < n; ++k) r.push_back("alpha" + std::to_string(k));
  return r;
}

QuotientO QuotientO::symbolic(int n) {
  if (n < 1) throw InputError("quotient order N must be >= 1");
  std::vector<LaurentPoly> a;
  for (const auto& name : symbolic_names(n)) a.push_back(LaurentPoly::var(name));
  a.emplace_back(1);
  return QuotientO(n, std::move(a));
}

const LaurentPoly& QuotientO::alpha(int k) const {
  if (k < 0) k = -k;
  return k > n_ ? zero_ : alphas_[static_cast<std::size_t>(k)];
}

std::vector<OnsagerSym> QuotientO::basis() const {
  std::vector<OnsagerSym> b;
  for (int k = -n_ + 1; k <= n_; ++k) b.push_back(OnsagerSym::a(k));
  for (int m = 1; m <= n_; ++m) b.push_back(OnsagerSym::g(m));
  return b;
}

bool QuotientO::is_normal(OnsagerSym s) const {
  if (s.kind == OnsagerSym::Kind::A) return s.index > -n_ && s.index <= n_;
  return s.index <= n_;
}

std::size_t QuotientO::basis_index(OnsagerSym s) const {
  if (!is_normal(s)) throw InputError(s.to_string() + " is not a normal-form basis symbol");
  if (s.kind == OnsagerSym::Kind::A) return static_cast<std::size_t>(s.index + n_ - 1);
  return static_cast<std::size_t>(2 * n_ + s.index - 1);
}

OElem<LaurentPoly> QuotientO::reduce_symbol(OnsagerSym s) const {
  if (is_normal(s)) return OElem<LaurentPoly>(s);
  {
    std::lock_guard<std::mutex> lock(cache_->mu);
    auto it = cache_->memo.find(s);
    if (it != cache_->memo.end()) return it->second;
  }
  const int m = s.index;
  OElem<LaurentPoly> raw;
  if (s.kind == OnsagerSym::Kind::A && m > n_) {
    for (int k = -n_; k <= n_ - 1; ++k) raw -= A<LaurentPoly>(m - n_ + k, alpha(k));
  } else if (s.kind == OnsagerSym::Kind::A) {
    for (int k = -n_ + 1; k <= n_; ++k) raw -= A<LaurentPoly>(k + m + n_, alpha(k));
  } else {
    for (int k = -n_; k <= n_ - 1; ++k) raw -= G<LaurentPoly>(m - n_ + k, alpha(k));
  }
  OElem<LaurentPoly> r = reduce(raw);
  std::lock_guard<std::mutex> lock(cache_->mu);
  cache_->memo.emplace(s, r);
  return r;
}

LaurentPoly QuotientO::p_poly(Symbol u) const {
  LaurentPoly p;
  for (int k = -n_; k <= n_; ++k) p += alpha(k) * LaurentPoly::var(u, -k);
  return p;
}

LaurentPoly QuotientO::f_poly(int p, Symbol u, bool inverted) const {
  LaurentPoly f;
  for (int q = p; q <= n_; ++q) f += alpha(q) * LaurentPoly::var(u, inverted ? q - p : p - q);
  return f;
}

AutoPoly<LaurentPoly> QuotientO::s_operator(const std::vector<LaurentPoly>* coefficients) const {
  const auto& c = coefficients ? *coefficients : alphas_;
  if (static_cast<int>(c.size()) != n_ + 1) throw InputError("S_N needs N+1 coefficients");
  AutoPoly<LaurentPoly> s;
  for (int k = -n_; k <= n_; ++k) s.terms.emplace_back(c[static_cast<std::size_t>(k < 0 ? -k : k)], shift_word(k));
  return s;
}

std::string QuotientO::describe() const {
  std::ostringstream os;
  os << "N=" << n_ << " alphas=(";
  for (std::size_t k = 0; k < alphas_.size(); ++k) os << (k ? ", " : "") << alphas_[k].to_string();
  os << ")";
  return os.str();
}

std::vector<std::vector<LaurentPoly>> upoly_table(const QuotientO& q, int pmax) {
  const int N = q.N();
  const int width = 2 * N;
  std::vector<std::vector<LaurentPoly>> u(static_cast<std::size_t>(pmax + 1),
                                          std::vector<LaurentPoly>(static_cast<std::size_t>(width)));
  auto at = [&](int p, int j) -> LaurentPoly& {
    return u[static_cast<std::size_t>(p)][static_cast<std::size_t>(j + N - 1)];
  };
  for (int j = -N + 1; j <= N; ++j) at(0, j) = sign_pow(N + 1) * q.alpha(j);
  for (int p = 0; p < pmax; ++p)
    for (int j = -N + 1; j <= N; ++j) {
      LaurentPoly v;
      for (int k = 0; k <= p; ++k) {
        const LaurentPoly& a = q.alpha(k - N + 1);
        if (!a.is_zero()) v += sign_pow(k) * a * at(p - k, j);
      }
      if (j <= N - p - 1) v += sign_pow(N + p) * q.alpha(j + p + 1);
      at(p + 1, j) = v;
    }
  return u;
}

LaurentPoly upoly(const QuotientO& q, int p, int j) {
  if (p < 0 || j <= -q.N() || j > q.N()) throw InputError("upoly index out of range");
  return upoly_table(q, p)[static_cast<std::size_t>(p)][static_cast<std::size_t>(j + q.N() - 1)];
}

LaurentPoly upoly_oracle(const QuotientO& q, int p, int j) {
  if (p < 0 || j <= -q.N() || j > q.N()) throw InputError("upoly index out of range");
  auto red = q.reduce_symbol(OnsagerSym::a(-q.N() - p));
  return sign_pow(p + q.N()) * red.coeff(OnsagerSym::a(j));
}

std::string Relation::to_string() const {
  return "[" + x.to_string() + "," + y.to_string() + "] = " + rhs.to_string();
}

std::vector<Relation> defining_relations(const QuotientO& q) {
  auto b = q.basis();
  std::vector<Relation> out;
  for (std::size_t i = 0; i < b.size(); ++i)
    for (std::size_t j = 0; j < i; ++j) {
      OnsagerSym x = b[i], y = b[j];
      out.push_back({x, y, q.bracket(OElem<LaurentPoly>(x), OElem<LaurentPoly>(y))});
    }
  return out;
}

Report verify_sn(const QuotientO& q, const std::vector<LaurentPoly>* override) {
  Report rep("sn");
  rep.set_param("quotient", q.describe());
  auto s = q.s_operator(override);
  for (int g = 0; g <= 1; ++g) {
    rep.timed([&] {
      auto r = q.reduce(apply_autopoly(q.algebra(), s, A<LaurentPoly>(g)));
      return Check{"sn.N" + std::to_string(q.N()) + ".A" + std::to_string(g),
                   r.is_zero() ? Status::pass : Status::fail, r.is_zero() ? "" : "residual " + r.to_string(), 0.0};
    });
  }
  return rep;
}

Report verify_dav2(const QuotientO& q, int pmax) {
  Report rep("dav2");
  rep.set_param("quotient", q.describe());
  rep.timed([&] {
    std::string bad;
    for (int p = -pmax; p <= pmax; ++p) {
      OElem<LaurentPoly> a, g;
      for (int k = -q.N(); k <= q.N(); ++k) {
        a += A<LaurentPoly>(k + p, q.alpha(k));
        g += G<LaurentPoly>(k + p, q.alpha(k));
      }
      auto ra = q.reduce(a), rg = q.reduce(g);
      if (!ra.is_zero()) bad += "A p=" + std::to_string(p) + ": " + ra.to_string() + "\n";
      if (!rg.is_zero()) bad += "G p=" + std::to_string(p) + ": " + rg.to_string() + "\n";
    }
    return Check{"dav2.N" + std::to_string(q.N()), bad.empty() ? Status::pass : Status::fail, bad, 0.0};
  });
  return rep;
}

Report verify_upoly(const QuotientO& q, int pmax) {
  Report rep("upoly");
  rep.set_param("quotient", q.describe());
  const int N = q.N();
  const std::string tag = "upoly.N" + std::to_string(N);
  auto table = upoly_table(q, pmax);
  auto U = [&](int p, int j) -> const LaurentPoly& {
    return table[static_cast<std::size_t>(p)][static_cast<std::size_t>(j + N - 1)];
  };
  rep.timed([&] {
    std::string bad;
    for (int p = 0; p <= pmax; ++p)
      for (int j = -N + 1; j <= N; ++j) {
        LaurentPoly o = upoly_oracle(q, p, j);
        if (!(o == U(p, j)))
          bad += "p=" + std::to_string(p) + " j=" + std::to_string(j) + ": recursion " + U(p, j).to_string() +
                 ", oracle " + o.to_string() + "\n";
      }
    return Check{tag + ".recursion", bad.empty() ? Status::pass : Status::discrepancy, bad, 0.0};
  });
  rep.timed([&] {
    std::string bad;
    for (int p = 0; p <= pmax; ++p) {
      OElem<LaurentPoly> fa, fg;
      for (int j = -N + 1; j <= N; ++j) {
        fa += A<LaurentPoly>(1 - j, sign_pow(p + N) * U(p, j));
        fg += G<LaurentPoly>(j - 1, sign_pow(p + N + 1) * U(p, j));
      }
      auto ra = q.reduce_symbol(OnsagerSym::a(N + p + 1));
      auto rg = q.reduce_symbol(OnsagerSym::g(N + p + 1));
      if (!(ra == q.reduce(fa))) bad += "A_" + std::to_string(N + p + 1) + " mismatch\n";
      if (!(rg == q.reduce(fg))) bad += "G_" + std::to_string(N + p + 1) + " mismatch\n";
    }
    return Check{tag + ".forward", bad.empty() ? Status::pass : Status::discrepancy, bad, 0.0};
  });
  if (N == 1) {
    rep.timed([&] {
      std::string bad;
      for (int p = 1; p < pmax; ++p)
        for (int j = 0; j <= 1; ++j) {
          LaurentPoly lhs = upoly_oracle(q, p + 1, j);
          LaurentPoly rhs = q.alpha(0) * upoly_oracle(q, p, j) - upoly_oracle(q, p - 1, j);
          if (!(lhs == rhs)) bad += "p=" + std::to_string(p) + " j=" + std::to_string(j) + "\n";
        }
      return Check{tag + ".three-term", bad.empty() ? Status::pass : Status::fail, bad, 0.0};
    });
  }
  return rep;
}

}  // namespace onsager
