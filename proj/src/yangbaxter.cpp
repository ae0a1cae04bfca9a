#include "onsager/yangbaxter.hpp"

#include <map>

#include "onsager/errors.hpp"

namespace onsager {

Matrix<RatFunc> RMatrix::to_ratfunc() const {
  RatFunc inv(LaurentPoly(1), den);
  return num.map([&](const LaurentPoly& p) { return p.is_zero() ? RatFunc() : RatFunc(p) * inv; });
}

RMatrix r_matrix(Symbol u, Symbol v) {
  if (u == v) throw InputError("r-matrix needs two distinct spectral parameters");
  LaurentPoly U = LaurentPoly::var(u), V = LaurentPoly::var(v);
  LaurentPoly diag = U * (1 - V * V);
  RMatrix r;
  r.num = Matrix<LaurentPoly>(4, 4);
  r.num(0, 0) = diag;
  r.num(0, 3) = -2 * (U - V);
  r.num(1, 1) = -diag;
  r.num(1, 2) = -2 * V * (U * V - 1);
  r.num(2, 1) = -2 * U * (U * V - 1);
  r.num(2, 2) = -diag;
  r.num(3, 0) = -2 * U * V * (U - V);
  r.num(3, 3) = diag;
  r.den = (U - V) * (U * V - 1);
  return r;
}

namespace {

Matrix<RatFunc> cybe_residual(const RFactory& rf, Symbol u1, Symbol u2, Symbol u3) {
  const int l13[] = {1, 3}, l23[] = {2, 3}, l21[] = {2, 1}, l12[] = {1, 2};
  auto r13 = embed(rf(u1, u3).to_ratfunc(), std::span<const int>(l13, 2), 3);
  auto r23 = embed(rf(u2, u3).to_ratfunc(), std::span<const int>(l23, 2), 3);
  auto r21 = embed(rf(u2, u1).to_ratfunc(), std::span<const int>(l21, 2), 3);
  auto r12 = embed(rf(u1, u2).to_ratfunc(), std::span<const int>(l12, 2), 3);
  return commutator(r13, r23) - commutator(r21, r13) - commutator(r23, r12);
}

template <class T>
std::string nonzero_entries(const Matrix<T>& m, std::size_t limit = 6) {
  std::string out;
  std::size_t count = 0;
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j)
      if (!m(i, j).is_zero()) {
        if (count < limit)
          out += "(" + std::to_string(i + 1) + "," + std::to_string(j + 1) + "): " + m(i, j).to_string() + "\n";
        ++count;
      }
  if (count > limit) out += std::to_string(count - limit) + " more nonzero entries\n";
  return out;
}

}  // namespace

Report verify_cybe(const RFactory& rf) {
  Report rep("cybe");
  Symbol u1("u1"), u2("u2"), u3("u3");
  bool symbolic_ok = false;
  rep.timed([&] {
    auto res = cybe_residual(rf, u1, u2, u3);
    symbolic_ok = res.is_zero();
    return Check{"cybe.symbolic", symbolic_ok ? Status::pass : Status::fail, nonzero_entries(res), 0.0};
  });
  rep.timed([&] {
    Bindings pt{{u1, 2}, {u2, 3}, {u3, 5}};
    auto numeric = [&](Symbol a, Symbol b) {
      return rf(a, b).to_ratfunc().map([&](const RatFunc& f) { return f.eval(pt); });
    };
    const int l13[] = {1, 3}, l23[] = {2, 3}, l21[] = {2, 1}, l12[] = {1, 2};
    auto r13 = embed(numeric(u1, u3), std::span<const int>(l13, 2), 3);
    auto r23 = embed(numeric(u2, u3), std::span<const int>(l23, 2), 3);
    auto r21 = embed(numeric(u2, u1), std::span<const int>(l21, 2), 3);
    auto r12 = embed(numeric(u1, u2), std::span<const int>(l12, 2), 3);
    auto res = commutator(r13, r23) - commutator(r21, r13) - commutator(r23, r12);
    bool agrees = res.is_zero() == symbolic_ok;
    return Check{"cybe.numeric(2,3,5)", agrees && res.is_zero() ? Status::pass : Status::fail,
                 agrees ? nonzero_entries(res) : "numeric verdict disagrees with symbolic verdict\n" + nonzero_entries(res),
                 0.0};
  });
  return rep;
}

OperatorMatrix<OnsagerSym> build_B_onsager(const QuotientO& q, Symbol u) {
  using E = OElem<LaurentPoly>;
  const int N = q.N();
  LaurentPoly U = LaurentPoly::var(u), Ui = LaurentPoly::var(u, -1);
  E ap, am, g;
  for (int p = 1; p <= N; ++p) {
    LaurentPoly f = q.f_poly(p, u), fi = q.f_poly(p, u, true);
    ap += A<LaurentPoly>(p, f) - A<LaurentPoly>(-p + 1, U * fi);
    am += A<LaurentPoly>(-p + 1, Ui * f) - A<LaurentPoly>(p, fi);
    g += G<LaurentPoly>(p, f + fi - q.alpha(p));
  }
  OperatorMatrix<OnsagerSym> b;
  b.num = Matrix<E>(2, 2);
  b.num(0, 0) = g;
  b.num(0, 1) = am;
  b.num(1, 0) = ap;
  b.num(1, 1) = -g;
  b.den = q.p_poly(u);
  b.param = u;
  return b;
}

namespace {

using UV = std::pair<int, int>;

std::map<UV, LaurentPoly> split_uv(const LaurentPoly& p, Symbol u, Symbol v) {
  std::map<UV, LaurentPoly> out;
  for (const auto& [m, c] : p.terms()) out[{m.exponent(u), m.exponent(v)}] += LaurentPoly(m.without(u).without(v), c);
  return out;
}

}  // namespace

ExtractedRelations extract_relations_frt(const QuotientO& q) {
  using E = OElem<LaurentPoly>;
  Symbol u("u"), v("v");
  auto bu = build_B_onsager(q, u), bv = build_B_onsager(q, v);
  RMatrix ruv = r_matrix(u, v), rvu = r_matrix(v, u);
  const int swap[] = {2, 1};
  auto r21 = embed(rvu.num, std::span<const int>(swap, 2), 2);
  Matrix<E> b1(4, 4), b2(4, 4);
  for (std::size_t i = 0; i < 2; ++i)
    for (std::size_t j = 0; j < 2; ++j)
      for (std::size_t k = 0; k < 2; ++k) {
        b1(2 * i + k, 2 * j + k) = bu.num(i, j);
        b2(2 * k + i, 2 * k + j) = bv.num(i, j);
      }
  Matrix<E> t1 = mul(r21, b1) - mul(b1, r21);
  Matrix<E> t2 = mul(b2, ruv.num) - mul(ruv.num, b2);
  const LaurentPoly s1 = ruv.den * bv.den, s2 = rvu.den * bu.den, lscale = ruv.den * rvu.den;

  auto basis = q.basis();
  const std::size_t nb = basis.size();
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  for (std::size_t a = 0; a < nb; ++a)
    for (std::size_t b = 0; b < a; ++b) pairs.emplace_back(a, b);

  std::vector<std::vector<LaurentPoly>> rows_a;
  std::vector<std::vector<LaurentPoly>> rows_b;
  for (std::size_t i = 0; i < 2; ++i)
    for (std::size_t j = 0; j < 2; ++j)
      for (std::size_t k = 0; k < 2; ++k)
        for (std::size_t l = 0; l < 2; ++l) {
          const std::size_t r = 2 * i + k, c = 2 * j + l;
          E rhs = q.reduce(s1 * t1(r, c) + s2 * t2(r, c));
          std::map<UV, std::vector<LaurentPoly>> ka, kb;
          const E &x = bu.num(i, j), &y = bv.num(k, l);
          for (std::size_t pi = 0; pi < pairs.size(); ++pi) {
            auto [a, b] = pairs[pi];
            LaurentPoly coeff = lscale * (x.coeff(basis[a]) * y.coeff(basis[b]) - x.coeff(basis[b]) * y.coeff(basis[a]));
            for (auto& [key, val] : split_uv(coeff, u, v)) {
              auto& row = ka[key];
              row.resize(pairs.size());
              row[pi] = val;
            }
          }
          for (std::size_t si = 0; si < nb; ++si)
            for (auto& [key, val] : split_uv(rhs.coeff(basis[si]), u, v)) {
              auto& row = kb[key];
              row.resize(nb);
              row[si] = val;
            }
          for (auto& [key, row] : kb) ka[key].resize(pairs.size());
          for (auto& [key, row] : ka) {
            auto& rb = kb[key];
            rb.resize(nb);
            rows_a.push_back(row);
            rows_b.push_back(rb);
          }
        }
  Matrix<RatFunc> ma(rows_a.size(), pairs.size()), mb(rows_b.size(), nb);
  for (std::size_t r = 0; r < rows_a.size(); ++r) {
    for (std::size_t c = 0; c < pairs.size(); ++c) ma(r, c) = RatFunc(rows_a[r][c]);
    for (std::size_t c = 0; c < nb; ++c) mb(r, c) = RatFunc(rows_b[r][c]);
  }
  auto sol = solve_linear(ma, mb);
  ExtractedRelations out;
  if (sol.kind != LinearSolution::Kind::unique) return out;
  for (std::size_t pi = 0; pi < pairs.size(); ++pi) {
    Relation rel{basis[pairs[pi].first], basis[pairs[pi].second], {}};
    for (std::size_t si = 0; si < nb; ++si) {
      RatFunc c = sol.x(pi, si).simplified();
      if (c.is_zero()) continue;
      if (!c.is_polynomial()) return out;
      rel.rhs.add(basis[si], c.num() * LaurentPoly(c.den().constant_term().inverse()));
    }
    out.relations.push_back(std::move(rel));
  }
  out.ok = true;
  return out;
}

Report verify_frt_series_onsager(int degree, const OnsagerAlgebra& alg) {
  if (degree < 2) throw InputError("series truncation degree must be >= 2");
  Report rep("frt-series");
  rep.set_param("D", std::to_string(degree));
  rep.timed([&] {
    Symbol u("u"), v("v");
    auto make = [&](Symbol s) {
      OperatorMatrix<OnsagerSym> b;
      b.num = Matrix<OElem<LaurentPoly>>(2, 2);
      b.num(0, 0) = current_G(s, degree);
      b.num(0, 1) = current_Aminus(s, degree);
      b.num(1, 0) = current_Aplus(s, degree);
      b.num(1, 1) = -b.num(0, 0);
      b.den = LaurentPoly(1);
      b.param = s;
      return b;
    };
    auto res = detail::frt_residual(alg, make(u), make(v), r_matrix);
    std::string bad = first_bad_coefficient(res, u, v, degree);
    return Check{"frt-series.onsager.D" + std::to_string(degree), bad.empty() ? Status::pass : Status::fail, bad, 0.0};
  });
  return rep;
}

ChargeParams ChargeParams::symbolic() {
  return {LaurentPoly::var("kappa"), LaurentPoly::var("kappas"), LaurentPoly::var("mu")};
}

Matrix<RatFunc> m_matrix(Symbol x, const ChargeParams& c) {
  LaurentPoly X = LaurentPoly::var(x), Xi = LaurentPoly::var(x, -1);
  Matrix<RatFunc> m(2, 2);
  m(0, 0) = RatFunc(c.mu * Xi);
  m(0, 1) = RatFunc(c.kappa + c.kappas * Xi);
  m(1, 0) = RatFunc(c.kappa + c.kappas * X);
  m(1, 1) = RatFunc(c.mu * X);
  return m;
}

OElem<LaurentPoly> charge(int p, const ChargeParams& c) {
  if (p < 0) throw InputError("charge index must be >= 0");
  if (p == 0) return A<LaurentPoly>(0, c.kappa) + A<LaurentPoly>(1, c.kappas) + G<LaurentPoly>(1, c.mu);
  return A<LaurentPoly>(p, c.kappa) + A<LaurentPoly>(-p, c.kappa) + A<LaurentPoly>(p + 1, c.kappas) +
         A<LaurentPoly>(-p + 1, c.kappas) + G<LaurentPoly>(p + 1, c.mu) - G<LaurentPoly>(p - 1, c.mu);
}

std::vector<OElem<LaurentPoly>> charges(const QuotientO& q, const ChargeParams& c) {
  std::vector<OElem<LaurentPoly>> out;
  for (int p = 0; p < q.N(); ++p) out.push_back(q.reduce(charge(p, c)));
  return out;
}

Report verify_commuting(const QuotientO& q, const ChargeParams& c) {
  Report rep("charges");
  rep.set_param("quotient", q.describe());
  auto I = charges(q, c);
  for (std::size_t a = 0; a < I.size(); ++a)
    for (std::size_t b = a + 1; b < I.size(); ++b)
      rep.timed([&] {
        auto r = q.bracket(I[a], I[b]);
        return Check{"charges.N" + std::to_string(q.N()) + ".[I" + std::to_string(a) + ",I" + std::to_string(b) + "]",
                     r.is_zero() ? Status::pass : Status::fail, r.is_zero() ? "" : r.to_string(), 0.0};
      });
  if (I.size() < 2)
    rep.add(Check{"charges.N" + std::to_string(q.N()) + ".single", Status::pass, "only I0; nothing to commute", 0.0});
  return rep;
}

Report verify_expand_b(const QuotientO& q, const ChargeParams& c) {
  Report rep("expand-b");
  rep.set_param("quotient", q.describe());
  rep.timed([&] {
    Symbol u("u");
    auto b = build_B_onsager(q, u);
    auto m = m_matrix(u, c);
    // both sides multiplied by p(u)
    OElem<LaurentPoly> lhs;
    for (std::size_t i = 0; i < 2; ++i)
      for (std::size_t k = 0; k < 2; ++k) {
        RatFunc mc = m(i, k);
        lhs += b.num(k, i).map_coeffs<LaurentPoly>([&](const LaurentPoly& x) {
          RatFunc prod = RatFunc(x) * mc;
          return prod.num() * prod.den().inverse();
        });
      }
    OElem<LaurentPoly> rhs;
    for (int p = 0; p < q.N(); ++p) rhs += (q.f_poly(p, u) - q.f_poly(p, u, true)) * charge(p, c);
    auto diff = q.reduce(lhs - rhs);
    return Check{"expand-b.N" + std::to_string(q.N()), diff.is_zero() ? Status::pass : Status::fail,
                 diff.is_zero() ? "" : diff.to_string(), 0.0};
  });
  return rep;
}

std::vector<std::string> reD_interpretations() { return {"r12", "r21", "r12-transposed", "r21-transposed", "r12-vu"}; }

namespace {

template <class T>
Matrix<T> reD_core(const Matrix<T>& rbar, const Matrix<T>& mu, const Matrix<T>& mv) {
  auto m1 = kron(mu, Matrix<T>::identity(2));
  auto t = partial_trace(mul(rbar, m1), 1, 2);
  return commutator(t, mv);
}

Matrix<RatFunc> rbar_for(const std::string& interpretation, Symbol u, Symbol v) {
  const int swap[] = {2, 1};
  if (interpretation == "r12") return r_matrix(u, v).to_ratfunc();
  if (interpretation == "r21") return embed(r_matrix(v, u).to_ratfunc(), std::span<const int>(swap, 2), 2);
  if (interpretation == "r12-transposed") return r_matrix(u, v).to_ratfunc().transpose();
  if (interpretation == "r21-transposed")
    return embed(r_matrix(v, u).to_ratfunc(), std::span<const int>(swap, 2), 2).transpose();
  if (interpretation == "r12-vu") return r_matrix(v, u).to_ratfunc();
  throw InputError("unknown reD interpretation '" + interpretation + "'");
}

}  // namespace

Matrix<RatFunc> reD_commutator(const ChargeParams& c, const std::string& interpretation) {
  Symbol u("u"), v("v");
  return reD_core(rbar_for(interpretation, u, v), m_matrix(u, c), m_matrix(v, c));
}

Report verify_reD(const ChargeParams& c, const std::string& interpretation) {
  Report rep("reD");
  rep.set_param("interpretation", interpretation);
  Symbol u("u"), v("v");
  Matrix<RatFunc> sym;
  rep.timed([&] {
    sym = reD_commutator(c, interpretation);
    bool zero = sym.is_zero();
    return Check{"reD." + interpretation + ".symbolic", zero ? Status::pass : Status::discrepancy,
                 zero ? "commutator vanishes" : "commutator does not vanish:\n" + nonzero_entries(sym, 2), 0.0};
  });
  rep.timed([&] {
    Bindings pt{{u, 2}, {v, 3}, {Symbol("kappa"), 1}, {Symbol("kappas"), 2}, {Symbol("mu"), 5}};
    auto ev = [&](const Matrix<RatFunc>& m) { return m.map([&](const RatFunc& f) { return f.eval(pt); }); };
    auto numeric = reD_core(ev(rbar_for(interpretation, u, v)), ev(m_matrix(u, c)), ev(m_matrix(v, c)));
    bool agrees = ev(sym) == numeric;
    return Check{"reD." + interpretation + ".numeric", agrees ? Status::pass : Status::fail,
                 agrees ? "" : "symbolic commutator evaluated at the point differs from the numeric computation", 0.0};
  });
  return rep;
}

}  // namespace onsager
