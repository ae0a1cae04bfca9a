#include "onsager/envrep.hpp"

#include <set>
#include <sstream>

#include "onsager/errors.hpp"
#include "onsager/linsolve.hpp"
#include "onsager/yangbaxter.hpp"

namespace onsager {

namespace {

using OL = OElem<LaurentPoly>;
using MR = Matrix<RatFunc>;

std::string word_string(const PBWWord& w) {
  if (w.empty()) return "1";
  std::string s;
  for (const auto& x : w) s += (s.empty() ? "" : "*") + x.to_string();
  return s;
}

MR scaled(const MR& m, const RatFunc& c) {
  return m.map([&](const RatFunc& x) { return (x * c).simplified(); });
}

MR simplified(const MR& m) {
  return m.map([](const RatFunc& x) { return x.simplified(); });
}

std::string render(const MR& m) {
  std::string s = "[";
  for (std::size_t i = 0; i < m.rows(); ++i) {
    s += i ? "; " : "";
    for (std::size_t j = 0; j < m.cols(); ++j) s += (j ? ", " : "") + m(i, j).simplified().to_string();
  }
  return s + "]";
}

std::string ratio_text(const RatFunc& fitted, const RatFunc& printed) {
  if (printed.is_zero()) return "printed value is 0";
  return "ratio fitted/printed = " + (fitted / printed).simplified().to_string();
}

}  // namespace

EnvElem EnvElem::unit(const LaurentPoly& c) { return word({}, c); }

EnvElem EnvElem::word(PBWWord w, const LaurentPoly& c) {
  EnvElem e;
  e.add(w, c);
  return e;
}

EnvElem EnvElem::lie(const OL& x) {
  EnvElem e;
  for (const auto& [s, c] : x.terms()) e.add({s}, c);
  return e;
}

void EnvElem::add(const PBWWord& w, const LaurentPoly& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(w, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

LaurentPoly EnvElem::coeff(const PBWWord& w) const {
  auto it = terms_.find(w);
  return it == terms_.end() ? LaurentPoly() : it->second;
}

EnvElem& EnvElem::operator+=(const EnvElem& o) {
  for (const auto& [w, c] : o.terms_) add(w, c);
  return *this;
}

EnvElem& EnvElem::operator-=(const EnvElem& o) {
  for (const auto& [w, c] : o.terms_) add(w, -c);
  return *this;
}

EnvElem EnvElem::operator-() const {
  EnvElem r;
  for (const auto& [w, c] : terms_) r.add(w, -c);
  return r;
}

EnvElem operator*(const LaurentPoly& k, const EnvElem& x) {
  EnvElem r;
  for (const auto& [w, c] : x.terms_) r.add(w, k * c);
  return r;
}

EnvElem operator*(const EnvElem& x, const EnvElem& y) {
  EnvElem r;
  for (const auto& [w1, c1] : x.terms_)
    for (const auto& [w2, c2] : y.terms_) {
      PBWWord w = w1;
      w.insert(w.end(), w2.begin(), w2.end());
      r.add(w, c1 * c2);
    }
  return r;
}

std::string EnvElem::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (const auto& [w, c] : terms_) {
    std::string cs = c.to_string();
    out += (out.empty() ? "" : " + ") + (cs == "1" ? "" : "(" + cs + ")*") + word_string(w);
  }
  return out;
}

Envelope::Envelope(const QuotientO& q, Strategy s)
    : q_(q), strategy_(s), memo_(std::make_shared<std::map<PBWWord, EnvElem>>()) {}

bool Envelope::is_normal(const PBWWord& w) const {
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (!q_.is_normal(w[i])) return false;
    if (i + 1 < w.size() && q_.is_normal(w[i + 1]) && q_.basis_index(w[i]) > q_.basis_index(w[i + 1])) return false;
  }
  return true;
}

EnvElem Envelope::gen(OnsagerSym s) const { return normalize(EnvElem::lie(OL(s))); }

EnvElem Envelope::normalize(const EnvElem& x) const {
  EnvElem r;
  for (const auto& [w, c] : x.terms()) r += c * normal_word(w);
  return r;
}

const EnvElem& Envelope::normal_word(const PBWWord& w) const {
  auto it = memo_->find(w);
  if (it != memo_->end()) return it->second;
  EnvElem r;
  std::size_t bad = w.size();
  for (std::size_t i = 0; i < w.size(); ++i)
    if (!q_.is_normal(w[i])) {
      bad = i;
      break;
    }
  if (bad < w.size()) {
    const OL image = q_.reduce_symbol(w[bad]);
    for (const auto& [s, c] : image.terms()) {
      PBWWord v = w;
      v[bad] = s;
      r += c * normal_word(v);
    }
  } else {
    std::optional<std::size_t> pos;
    for (std::size_t i = 0; i + 1 < w.size(); ++i)
      if (q_.basis_index(w[i]) > q_.basis_index(w[i + 1])) {
        pos = i;
        if (strategy_ == Strategy::leftmost) break;
      }
    if (!pos) {
      r = EnvElem::word(w);
    } else {
      const std::size_t i = *pos;
      PBWWord swapped = w;
      std::swap(swapped[i], swapped[i + 1]);
      r = normal_word(swapped);
      const OL br = q_.bracket(OL(w[i]), OL(w[i + 1]));
      for (const auto& [s, c] : br.terms()) {
        PBWWord v(w.begin(), w.begin() + static_cast<std::ptrdiff_t>(i));
        v.push_back(s);
        v.insert(v.end(), w.begin() + static_cast<std::ptrdiff_t>(i + 2), w.end());
        r += c * normal_word(v);
      }
    }
  }
  return memo_->emplace(w, std::move(r)).first->second;
}

Report verify_quartic(const QuotientO& q) {
  const int N = q.N();
  if (N != 1 && N != 2) throw InputError("quartic presentations exist for N = 1 and N = 2 only");
  Report rep("quartic");
  rep.set_param("quotient", q.describe());
  OL a0 = A<LaurentPoly>(0), a1 = A<LaurentPoly>(1);
  auto br = [&](const OL& x, const OL& y) { return q.bracket(x, y); };
  auto lie_check = [&](const std::string& id, const OL& r) {
    rep.add(Check{id, r.is_zero() ? Status::pass : Status::fail, r.is_zero() ? "" : q.reduce(r).to_string(), 0.0});
  };
  rep.timed([&] {
    OL d0 = br(a0, br(a0, br(a0, a1))) - LaurentPoly(16) * br(a0, a1);
    OL d1 = br(a1, br(a1, br(a1, a0))) - LaurentPoly(16) * br(a1, a0);
    bool ok = d0.is_zero() && d1.is_zero();
    return Check{"quartic.dolan-grady", ok ? Status::pass : Status::fail, ok ? "" : d0.to_string() + " | " + d1.to_string(),
                 0.0};
  });
  if (N == 1) {
    const LaurentPoly al = q.alpha(0);
    lie_check("quartic.relaw.1", q.reduce(br(a0, br(a0, a1)) - 8 * al * a0 - LaurentPoly(16) * a1));
    lie_check("quartic.relaw.2", q.reduce(br(a1, br(a1, a0)) - 8 * al * a1 - LaurentPoly(16) * a0));
    lie_check("quartic.alphaG1+G2", q.reduce(G<LaurentPoly>(1, al) + G<LaurentPoly>(2)));
    EnvElem x0 = EnvElem::word({OnsagerSym::a(0)}), x1 = EnvElem::word({OnsagerSym::a(1)});
    EnvElem extra = 8 * al * (x1 * x0 - x0 * x1) + LaurentPoly(2) * (x1 * x0 * x1 * x0 - x0 * x1 * x0 * x1) -
                    x1 * x1 * x0 * x0 + x0 * x0 * x1 * x1;
    for (auto s : {Envelope::Strategy::leftmost, Envelope::Strategy::rightmost})
      rep.timed([&] {
        EnvElem r = Envelope(q, s).normalize(extra);
        std::string id = std::string("quartic.extra.") + (s == Envelope::Strategy::leftmost ? "leftmost" : "rightmost");
        return Check{id, r.is_zero() ? Status::pass : Status::fail, r.to_string(), 0.0};
      });
  } else {
    const LaurentPoly al = q.alpha(1), alp = q.alpha(0);
    lie_check("quartic.relaw61", q.reduce(br(a0, br(a1, br(a0, br(a1, a0)))) - LaurentPoly(16) * br(a1, br(a1, a0)) -
                                          8 * al * br(a0, br(a0, a1)) + 64 * (alp + 2) * a0 + 128 * al * a1));
    lie_check("quartic.relaw62", q.reduce(br(a1, br(a0, br(a1, br(a0, a1)))) - LaurentPoly(16) * br(a0, br(a0, a1)) -
                                          8 * al * br(a1, br(a1, a0)) + 64 * (alp + 2) * a1 + 128 * al * a0));
  }
  return rep;
}

AWConstants aw3_printed(const LaurentPoly& a0, const LaurentPoly& a1, const LaurentPoly& b0, const LaurentPoly& b1,
                        const LaurentPoly& al) {
  AWConstants c;
  c.B = RatFunc(-8 * al, a0 * a1);
  c.C0 = RatFunc(LaurentPoly(-16), a0 * a0);
  c.C1 = RatFunc(LaurentPoly(-16), a1 * a1);
  c.D0 = RatFunc(-(8 * al * b0 + 16 * b1), a0 * a0 * a1);
  c.D1 = RatFunc(-(8 * al * b1 + 16 * b0), a1 * a1 * a0);
  return c;
}

namespace {

struct FitResult {
  LinearSolution::Kind kind;
  AWConstants c;
  EnvElem k2;
};

FitResult fit_constants(const Envelope& env, const EnvElem& k0, const EnvElem& k1) {
  EnvElem k2 = env.commutator(k0, k1);
  EnvElem l2 = env.commutator(k2, k0), l3 = env.commutator(k1, k2);
  std::set<PBWWord> words{PBWWord{}};
  for (const EnvElem* e : {&k0, &k1, static_cast<const EnvElem*>(&l2), static_cast<const EnvElem*>(&l3)})
    for (const auto& [w, c] : e->terms()) words.insert(w);
  // unknowns: B, C0, C1, D0, D1
  const std::size_t rows = 2 * words.size();
  Matrix<RatFunc> a(rows, 5), b(rows, 1);
  std::size_t r = 0;
  for (const auto& w : words) {
    const bool one = w.empty();
    a(r, 0) = k0.coeff(w);
    a(r, 2) = k1.coeff(w);
    a(r, 4) = one ? 1 : 0;
    b(r, 0) = l2.coeff(w);
    ++r;
    a(r, 0) = k1.coeff(w);
    a(r, 1) = k0.coeff(w);
    a(r, 3) = one ? 1 : 0;
    b(r, 0) = l3.coeff(w);
    ++r;
  }
  LinearSolution sol = solve_linear(a, b);
  FitResult f{sol.kind, {}, k2};
  if (sol.kind == LinearSolution::Kind::unique) {
    f.c.B = sol.x(0, 0).simplified();
    f.c.C0 = sol.x(1, 0).simplified();
    f.c.C1 = sol.x(2, 0).simplified();
    f.c.D0 = sol.x(3, 0).simplified();
    f.c.D1 = sol.x(4, 0).simplified();
  }
  return f;
}

}  // namespace

AW3Fit aw3_fit(const LaurentPoly& a0, const LaurentPoly& a1, const LaurentPoly& b0, const LaurentPoly& b1,
               const QuotientO& q) {
  if (q.N() != 1) throw InputError("aw3_fit works in the quotient O_1");
  if (a0.is_zero() || a1.is_zero()) throw InputError("aw3_fit needs a0, a1 nonzero");
  AW3Fit out;
  Report& rep = out.report;
  rep.set_param("a0", a0.to_string());
  rep.set_param("a1", a1.to_string());
  rep.set_param("b0", b0.to_string());
  rep.set_param("b1", b1.to_string());
  rep.set_param("quotient", q.describe());
  const LaurentPoly al = q.alpha(0);
  Envelope env(q);
  EnvElem x0 = env.gen(OnsagerSym::a(0)), x1 = env.gen(OnsagerSym::a(1)), one = EnvElem::unit();
  FitResult f = fit_constants(env, a0 * x0 + b0 * one, a1 * x1 + b1 * one);
  out.k2 = f.k2;
  {
    EnvElem want = EnvElem::lie(G<LaurentPoly>(1, -4 * a0 * a1));
    rep.add("aw3.k2", f.k2 == want, "K2 = [K0,K1] = " + f.k2.to_string());
    EnvElem printed = EnvElem::lie(G<LaurentPoly>(1, Scalar(-1, 4) * a0 * a1));
    rep.add(Check{"aw3.k2-printed", f.k2 == printed ? Status::pass : Status::discrepancy,
                  f.k2 == printed ? "" : "printed K2 = -(a0 a1/4) G1; [K0,K1] is 16 times that", 0.0});
  }
  if (f.kind != LinearSolution::Kind::unique) {
    rep.add("aw3.solve", false,
            f.kind == LinearSolution::Kind::inconsistent ? "no constant set satisfies the relations" : "underdetermined");
    return out;
  }
  out.solved = true;
  out.constants = f.c;
  rep.add(Check{"aw3.solve", Status::pass,
                "B = " + f.c.B.to_string() + ", C0 = " + f.c.C0.to_string() + ", C1 = " + f.c.C1.to_string() +
                    ", D0 = " + f.c.D0.to_string() + ", D1 = " + f.c.D1.to_string(),
                0.0});
  AWConstants p = aw3_printed(a0, a1, b0, b1, al);
  const std::pair<const char*, std::pair<const RatFunc*, const RatFunc*>> rows[] = {
      {"B", {&f.c.B, &p.B}}, {"C0", {&f.c.C0, &p.C0}}, {"C1", {&f.c.C1, &p.C1}},
      {"D0", {&f.c.D0, &p.D0}}, {"D1", {&f.c.D1, &p.D1}}};
  for (const auto& [name, vals] : rows) {
    bool same = *vals.first == *vals.second;
    rep.add(Check{std::string("aw3.printed.") + name, same ? Status::pass : Status::discrepancy,
                  same ? "agrees" : "fitted " + vals.first->to_string() + ", printed " + vals.second->to_string() + "; " +
                                        ratio_text(*vals.first, *vals.second),
                  0.0});
  }
  // Inverse reading A_i = a_i K_i + b_i, available when 1/a_i is a Laurent polynomial.
  if (a0.is_monomial() && a1.is_monomial()) {
    LaurentPoly i0 = a0.inverse(), i1 = a1.inverse();
    FitResult g = fit_constants(env, i0 * (x0 - b0 * one), i1 * (x1 - b1 * one));
    if (g.kind == LinearSolution::Kind::unique) {
      bool b_ok = g.c.B == p.B;
      bool swapped = g.c.C1 == p.C0 && g.c.C0 == p.C1 && g.c.D1 == p.D0 && g.c.D0 == p.D1;
      bool direct = g.c.C0 == p.C0 && g.c.C1 == p.C1 && g.c.D0 == p.D0 && g.c.D1 == p.D1;
      std::string note = "inverse reading fit: B = " + g.c.B.to_string() + ", C0 = " + g.c.C0.to_string() +
                         ", C1 = " + g.c.C1.to_string() + ", D0 = " + g.c.D0.to_string() + ", D1 = " + g.c.D1.to_string();
      if (b_ok && swapped) note += "; printed constants match with C0<->C1 and D0<->D1 exchanged";
      rep.add(Check{"aw3.inverse-reading", (b_ok && direct) ? Status::pass : Status::discrepancy, note, 0.0});
    }
  }
  return out;
}

std::vector<LaurentPoly> symbolic_points(int n) {
  if (n < 1) throw InputError("representation needs at least one point");
  if (n == 1) return {LaurentPoly::var("w")};
  std::vector<LaurentPoly> p;
  for (int j = 1; j <= n; ++j) p.push_back(LaurentPoly::var("w" + std::to_string(j)));
  return p;
}

Representation rep_build(const std::vector<LaurentPoly>& points) {
  const int N = static_cast<int>(points.size());
  if (N < 1) throw InputError("representation needs at least one point");
  for (const auto& p : points)
    if (p.is_zero()) throw InputError("representation points must be nonzero");
  const auto syms = symbolic_points(N);
  std::vector<Symbol> w;
  for (const auto& s : syms) w.push_back(*s.variables().begin());
  Symbol u("u");
  const LaurentPoly U = LaurentPoly::var(u), Ui = LaurentPoly::var(u, -1);

  LaurentPoly p(1);
  for (const auto& s : syms) p *= U + Ui - s - s.inverse();
  std::vector<LaurentPoly> alphas;
  for (int k = 0; k <= N; ++k) alphas.push_back(p.coefficient(u, k));
  QuotientO q(N, alphas);
  auto B = build_B_onsager(q, u);

  const int legs = N + 1;
  const std::size_t dim = std::size_t{1} << N;
  std::vector<RMatrix> r;
  for (int j = 0; j < N; ++j) r.push_back(r_matrix(u, w[static_cast<std::size_t>(j)]));
  Matrix<LaurentPoly> rsum(2 * dim, 2 * dim);
  for (int j = 0; j < N; ++j) {
    LaurentPoly others(1);
    for (int i = 0; i < N; ++i)
      if (i != j) others *= r[static_cast<std::size_t>(i)].den;
    Matrix<LaurentPoly> e = embed_leg(r[static_cast<std::size_t>(j)].num, 1, j + 2, legs);
    rsum += e.map([&](const LaurentPoly& x) { return x * others; });
  }
  LaurentPoly M = U.pow(N);
  for (const auto& s : syms) M *= s;

  auto basis = q.basis();
  const std::size_t nb = basis.size(), ncol = dim * dim;
  std::vector<std::vector<RatFunc>> arows, brows;
  for (std::size_t a = 0; a < 2; ++a)
    for (std::size_t b = 0; b < 2; ++b) {
      std::vector<LaurentPoly> cs(nb);
      for (std::size_t k = 0; k < nb; ++k) cs[k] = M * B.num(a, b).coeff(basis[k]);
      int lo = 0, hi = 0;
      bool any = false;
      auto widen = [&](const LaurentPoly& x) {
        if (x.is_zero()) return;
        auto [l, h] = x.degree_range(u);
        lo = any ? std::min(lo, l) : l;
        hi = any ? std::max(hi, h) : h;
        any = true;
      };
      for (const auto& c : cs) widen(c);
      for (std::size_t i = 0; i < dim; ++i)
        for (std::size_t k = 0; k < dim; ++k) widen(rsum(a * dim + i, b * dim + k));
      if (!any) continue;
      for (int e = lo; e <= hi; ++e) {
        std::vector<RatFunc> ar(nb), brw(ncol);
        bool nonzero = false;
        for (std::size_t k = 0; k < nb; ++k) {
          ar[k] = cs[k].coefficient(u, e);
          nonzero |= !ar[k].is_zero();
        }
        for (std::size_t i = 0; i < dim; ++i)
          for (std::size_t k = 0; k < dim; ++k) {
            brw[i * dim + k] = rsum(a * dim + i, b * dim + k).coefficient(u, e);
            nonzero |= !brw[i * dim + k].is_zero();
          }
        if (!nonzero) continue;
        arows.push_back(std::move(ar));
        brows.push_back(std::move(brw));
      }
    }
  Matrix<RatFunc> am(arows.size(), nb), bm(brows.size(), ncol);
  for (std::size_t i = 0; i < arows.size(); ++i) {
    for (std::size_t k = 0; k < nb; ++k) am(i, k) = arows[i][k];
    for (std::size_t k = 0; k < ncol; ++k) bm(i, k) = brows[i][k];
  }
  LinearSolution sol = solve_linear(am, bm);
  if (sol.kind != LinearSolution::Kind::unique)
    throw InputError(std::string("representation extraction system is ") +
                     (sol.kind == LinearSolution::Kind::inconsistent ? "inconsistent" : "singular"));

  std::map<Symbol, LaurentPoly> images;
  for (int j = 0; j < N; ++j)
    if (!(points[static_cast<std::size_t>(j)] == syms[static_cast<std::size_t>(j)]))
      images[w[static_cast<std::size_t>(j)]] = points[static_cast<std::size_t>(j)];

  Representation rep;
  rep.N = N;
  rep.points = points;
  rep.experimental = N >= 3;
  try {
    for (const auto& a : alphas) rep.alphas.push_back(images.empty() ? a : a.substitute(images));
    for (std::size_t k = 0; k < nb; ++k) {
      MR m(dim, dim);
      for (std::size_t i = 0; i < dim; ++i)
        for (std::size_t j = 0; j < dim; ++j) {
          RatFunc x = sol.x(k, i * dim + j);
          m(i, j) = (images.empty() ? x : x.substitute(images)).simplified();
        }
      rep.mats.emplace(basis[k], std::move(m));
    }
  } catch (const ArithmeticError& e) {
    throw InputError(std::string("degenerate representation points: ") + e.what());
  }
  return rep;
}

Report rep_check(const Representation& rep) {
  Report out("rep");
  std::string pts;
  for (const auto& p : rep.points) pts += (pts.empty() ? "" : ",") + p.to_string();
  out.set_param("N", std::to_string(rep.N));
  out.set_param("w", pts);
  const std::string pre = "rep.N" + std::to_string(rep.N);
  QuotientO q = rep.quotient();
  auto pi = [&](const OL& x) {
    const std::size_t d = rep.mats.begin()->second.rows();
    MR m(d, d);
    const OL reduced = q.reduce(x);
    for (const auto& [s, c] : reduced.terms()) m += scaled(rep.mats.at(s), RatFunc(c));
    return simplified(m);
  };
  auto is_zero = [](const MR& m) { return simplified(m).is_zero(); };

  {
    std::string text;
    for (const auto& [s, m] : rep.mats) text += (text.empty() ? "" : "; ") + s.to_string() + " = " + render(m);
    out.add(Check{pre + ".matrices", Status::pass, (rep.experimental ? "experimental: " : "") + text, 0.0});
  }
  out.timed([&] {
    for (const auto& rel : defining_relations(q)) {
      MR lhs = commutator(rep.mats.at(rel.x), rep.mats.at(rel.y));
      if (!is_zero(lhs - pi(rel.rhs))) return Check{pre + ".relations", Status::fail, rel.to_string(), 0.0};
    }
    return Check{pre + ".relations", Status::pass, "", 0.0};
  });
  const MR P0 = rep.mats.at(OnsagerSym::a(0)), P1 = rep.mats.at(OnsagerSym::a(1));
  if (rep.N == 1) {
    const LaurentPoly& w = rep.points[0];
    RatFunc W(w), Wi = RatFunc(LaurentPoly(1), w);
    MR e0(2, 2), e1(2, 2), g(2, 2);
    e0(0, 1) = 2;
    e0(1, 0) = 2;
    e1(0, 1) = 2 * Wi;
    e1(1, 0) = 2 * W;
    g(0, 0) = Wi - W;
    g(1, 1) = W - Wi;
    bool ok = is_zero(P0 - e0) && is_zero(P1 - e1) && is_zero(rep.mats.at(OnsagerSym::g(1)) - g);
    out.add(pre + ".published-matrices", ok, ok ? "" : "extracted matrices differ from the closed form");
    RatFunc al(rep.alphas[0]);
    out.add(pre + ".alpha", al == -W - Wi, "alpha = " + rep.alphas[0].to_string());
    MR c01 = commutator(P0, P1);
    MR r1 = commutator(P0, c01) - scaled(P0, 8 * al) - scaled(P1, 16);
    MR r2 = commutator(P1, -c01) - scaled(P1, 8 * al) - scaled(P0, 16);
    out.add(pre + ".relaw", is_zero(r1) && is_zero(r2));
    MR ex = scaled(commutator(P1, P0), 8 * al) + scaled(P1 * P0 * P1 * P0 - P0 * P1 * P0 * P1, 2) -
            P1 * P1 * P0 * P0 + P0 * P0 * P1 * P1;
    out.add(pre + ".extra", is_zero(ex));
  } else if (rep.N == 2) {
    RatFunc s1 = RatFunc(rep.points[0]) + RatFunc(LaurentPoly(1), rep.points[0]);
    RatFunc s2 = RatFunc(rep.points[1]) + RatFunc(LaurentPoly(1), rep.points[1]);
    RatFunc al(rep.alphas[1]), alp(rep.alphas[0]);
    const LaurentPoly &w1 = rep.points[0], &w2 = rep.points[1];
    RatFunc printed = RatFunc(w1 * w2) + RatFunc(w1, w2) + RatFunc(2) + RatFunc(w2, w1) + RatFunc(LaurentPoly(1), w1 * w2);
    out.add(pre + ".alpha", al == -s1 - s2, "alpha = " + rep.alphas[1].to_string());
    out.add(pre + ".alphap", alp == printed, "alpha' = " + rep.alphas[0].to_string());
    auto c = [](const MR& x, const MR& y) { return commutator(x, y); };
    MR r61 = c(P0, c(P1, c(P0, c(P1, P0)))) - scaled(c(P1, c(P1, P0)), 16) - scaled(c(P0, c(P0, P1)), 8 * al) +
             scaled(P0, 64 * (alp + 2)) + scaled(P1, 128 * al);
    MR r62 = c(P1, c(P0, c(P1, c(P0, P1)))) - scaled(c(P0, c(P0, P1)), 16) - scaled(c(P1, c(P1, P0)), 8 * al) +
             scaled(P1, 64 * (alp + 2)) + scaled(P0, 128 * al);
    out.add(pre + ".relaw61", is_zero(r61));
    out.add(pre + ".relaw62", is_zero(r62));
  }
  return out;
}

}  // namespace onsager
