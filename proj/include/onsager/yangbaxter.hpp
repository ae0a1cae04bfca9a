#pragma once

#include <functional>
#include <string>
#include <vector>

#include "onsager/linsolve.hpp"
#include "onsager/matrix.hpp"
#include "onsager/quotient.hpp"

namespace onsager {

/// 4x4 r-matrix stored as a polynomial numerator over one scalar denominator.
struct RMatrix {
  Matrix<LaurentPoly> num;
  LaurentPoly den;
  Matrix<RatFunc> to_ratfunc() const;
};

/// The r-matrix r(u, v): common denominator (u - v)(uv - 1), leg 1 most
/// significant in the Kronecker ordering.
RMatrix r_matrix(Symbol u, Symbol v);
using RFactory = std::function<RMatrix(Symbol, Symbol)>;

/// [r13(u1,u3), r23(u2,u3)] - [r21(u2,u1), r13(u1,u3)] - [r23(u2,u3), r12(u1,u2)] = 0,
/// verified symbolically and at (u1, u2, u3) = (2, 3, 5).
Report verify_cybe(const RFactory& r = r_matrix);

/// 2x2 matrix B(u) = num(u) / den(u) with algebra-valued numerator entries.
template <class Sym>
struct OperatorMatrix {
  Matrix<AlgElem<Sym, LaurentPoly>> num;
  LaurentPoly den;
  Symbol param{"u"};

  Matrix<AlgElem<Sym, RatFunc>> entries() const {
    RatFunc inv(LaurentPoly(1), den);
    return num.map([&](const AlgElem<Sym, LaurentPoly>& e) {
      return e.template map_coeffs<RatFunc>([&](const LaurentPoly& c) { return RatFunc(c) * inv; });
    });
  }
};

/// B^(N)(u) of the quotient O_N in normal-form symbols.
OperatorMatrix<OnsagerSym> build_B_onsager(const QuotientO& q, Symbol u);

namespace detail {

template <class Sym>
using PElem = AlgElem<Sym, LaurentPoly>;

template <class Sym>
std::string describe_entries(const Matrix<PElem<Sym>>& m, std::size_t limit = 4) {
  std::string out;
  std::size_t shown = 0;
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j)
      if (!m(i, j).is_zero() && shown++ < limit) {
        std::string s = m(i, j).to_string();
        if (s.size() > 300) s = s.substr(0, 300) + " ...";
        out += "(" + std::to_string(i + 1) + "," + std::to_string(j + 1) + "): " + s + "\n";
      }
  return out;
}

/// Cleared FRT residual: with D = d(u,v) d(v,u) den(u) den(v),
///   D [B1(u), B2(v)] - D [r21(v,u), B1(u)] - D [B2(v), r12(u,v)].
template <class Ctx, class Sym>
Matrix<PElem<Sym>> frt_residual(const Ctx& ctx, const OperatorMatrix<Sym>& bu, const OperatorMatrix<Sym>& bv,
                                const RFactory& rf) {
  Symbol u = bu.param, v = bv.param;
  RMatrix ruv = rf(u, v), rvu = rf(v, u);
  const int swap[] = {2, 1};
  Matrix<LaurentPoly> r21 = embed(rvu.num, std::span<const int>(swap, 2), 2);
  Matrix<LaurentPoly> id2 = Matrix<LaurentPoly>::identity(2);
  Matrix<PElem<Sym>> b1(4, 4), b2(4, 4);
  for (std::size_t i = 0; i < 2; ++i)
    for (std::size_t j = 0; j < 2; ++j)
      for (std::size_t k = 0; k < 2; ++k) {
        b1(2 * i + k, 2 * j + k) = bu.num(i, j);
        b2(2 * k + i, 2 * k + j) = bv.num(i, j);
      }
  Matrix<PElem<Sym>> lhs(4, 4);
  const LaurentPoly lscale = ruv.den * rvu.den;
  for (std::size_t i = 0; i < 2; ++i)
    for (std::size_t j = 0; j < 2; ++j)
      for (std::size_t k = 0; k < 2; ++k)
        for (std::size_t l = 0; l < 2; ++l)
          lhs(2 * i + k, 2 * j + l) = lscale * ctx.bracket(bu.num(i, j), bv.num(k, l));
  Matrix<PElem<Sym>> t1 = mul(r21, b1) - mul(b1, r21);
  Matrix<PElem<Sym>> t2 = mul(b2, ruv.num) - mul(ruv.num, b2);
  const LaurentPoly s1 = ruv.den * bv.den, s2 = rvu.den * bu.den;
  Matrix<PElem<Sym>> res(4, 4);
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 4; ++j) res(i, j) = ctx.reduce(lhs(i, j) - s1 * t1(i, j) - s2 * t2(i, j));
  return res;
}

}  // namespace detail

/// Exact FRT check of B(u) against the r-matrix inside the algebra `ctx`
/// (anything with reduced bracket/reduce on LaurentPoly-coefficient elements).
template <class Ctx, class Sym>
Check verify_frt(const Ctx& ctx, const OperatorMatrix<Sym>& bu, const OperatorMatrix<Sym>& bv, const std::string& id,
                 const RFactory& rf = r_matrix) {
  auto res = detail::frt_residual(ctx, bu, bv, rf);
  bool ok = res.is_zero();
  return Check{id, ok ? Status::pass : Status::fail, ok ? "" : detail::describe_entries(res), 0.0};
}

/// Brackets of the normal-form basis solved from the FRT relation alone: the
/// unknown [x_a, x_b] (a > b) are treated as independent algebra elements and
/// fixed by matching every u^i v^j coefficient. Returns nullopt-equivalent
/// empty vector with `ok` false when the system is not uniquely solvable.
struct ExtractedRelations {
  bool ok = false;
  std::vector<Relation> relations;
};
ExtractedRelations extract_relations_frt(const QuotientO& q);

/// Series check of the full Onsager algebra: currents truncated at degree D,
/// cleared residual d(u,v)[B1,B2] + [rhat21(v,u), B1] - [B2, rhat12(u,v)]
/// checked on every u^a v^b with a + b <= D.
Report verify_frt_series_onsager(int degree, const OnsagerAlgebra& alg = OnsagerAlgebra());

template <class Sym>
std::string first_bad_coefficient(const Matrix<detail::PElem<Sym>>& res, Symbol u, Symbol v, int degree) {
  for (std::size_t i = 0; i < res.rows(); ++i)
    for (std::size_t j = 0; j < res.cols(); ++j)
      for (const auto& [s, c] : res(i, j).terms())
        for (const auto& [m, k] : c.terms()) {
          int a = m.exponent(u), b = m.exponent(v);
          if (a >= 0 && b >= 0 && a + b <= degree)
            return "entry (" + std::to_string(i + 1) + "," + std::to_string(j + 1) + ") coefficient u^" +
                   std::to_string(a) + " v^" + std::to_string(b) + " of " + s.to_string() + " = " + k.to_string();
        }
  return {};
}

struct ChargeParams {
  LaurentPoly kappa, kappas, mu;
  static ChargeParams symbolic();
};

/// M(x) = [[mu/x, kappa + kappas/x], [kappa + kappas x, mu x]].
Matrix<RatFunc> m_matrix(Symbol x, const ChargeParams& c);
/// I_0 = kappa A0 + kappas A1 + mu G1 and, for p >= 1,
/// I_p = kappa (A_p + A_-p) + kappas (A_{p+1} + A_{-p+1}) + mu (G_{p+1} - G_{p-1}).
OElem<LaurentPoly> charge(int p, const ChargeParams& c);
std::vector<OElem<LaurentPoly>> charges(const QuotientO& q, const ChargeParams& c);
Report verify_commuting(const QuotientO& q, const ChargeParams& c);
/// tr(M(u) B(u)) against (1/p(u)) sum_p (f_p(u) - f_p(1/u)) I_p.
Report verify_expand_b(const QuotientO& q, const ChargeParams& c);

/// Candidate readings of the undefined barred r-matrix in the commuting-charge
/// identity [tr_1(rbar_12(u,v) M_1(u)), M_2(v)] = 0.
std::vector<std::string> reD_interpretations();
Matrix<RatFunc> reD_commutator(const ChargeParams& c, const std::string& interpretation);
/// Pass when the commutator vanishes, discrepancy otherwise; the numeric spot
/// check at u=2, v=3, (kappa, kappas, mu) = (1, 2, 5) must agree.
Report verify_reD(const ChargeParams& c, const std::string& interpretation);

}  // namespace onsager
