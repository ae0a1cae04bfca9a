#pragma once

#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "onsager/onsager.hpp"

namespace onsager {

/// The quotient O_N of the Onsager algebra by sum_{n=-N}^{N} alpha_n A_{n+p} = 0
/// (alpha_{-n} = alpha_n, alpha_N = 1). Normal-form basis, in this order:
/// A_{-N+1}, ..., A_N, G_1, ..., G_N.
class QuotientO {
 public:
  /// alphas = (alpha_0, ..., alpha_N); alpha_N must equal 1.
  QuotientO(int n, std::vector<LaurentPoly> alphas);
  /// Indeterminate alphas: N=1 uses alpha; N=2 uses alphap (alpha_0) and alpha
  /// (alpha_1); N>=3 uses alpha0, ..., alpha{N-1}.
  static QuotientO symbolic(int n);
  static std::vector<std::string> symbolic_names(int n);

  int N() const { return n_; }
  /// alpha_k with alpha_{-k} = alpha_k and alpha_k = 0 for |k| > N.
  const LaurentPoly& alpha(int k) const;
  const std::vector<LaurentPoly>& alphas() const { return alphas_; }

  std::vector<OnsagerSym> basis() const;
  bool is_normal(OnsagerSym s) const;
  /// Position of a normal-form symbol in basis().
  std::size_t basis_index(OnsagerSym s) const;

  /// Normal form of a single basis symbol (memoized).
  OElem<LaurentPoly> reduce_symbol(OnsagerSym s) const;

  template <class C>
  OElem<C> reduce(const OElem<C>& x) const {
    OElem<C> r;
    for (const auto& [s, c] : x.terms()) {
      if (is_normal(s)) {
        r.add(s, c);
        continue;
      }
      const OElem<LaurentPoly> image = reduce_symbol(s);
      for (const auto& [t, k] : image.terms()) r.add(t, c * C(k));
    }
    return r;
  }

  template <class C>
  OElem<C> bracket(const OElem<C>& x, const OElem<C>& y) const {
    return reduce(alg_.bracket(x, y));
  }

  const OnsagerAlgebra& algebra() const { return alg_; }

  /// p(u) = sum_{p=-N}^{N} alpha_p u^{-p}.
  LaurentPoly p_poly(Symbol u) const;
  /// f_p(u) = sum_{q=p}^{N} alpha_q u^{p-q}, and the same with u -> u^{-1}.
  LaurentPoly f_poly(int p, Symbol u, bool inverted = false) const;

  /// S_N = sum_n c_n (tau1 Phi)^n with c_n = alpha_n (or the given override).
  AutoPoly<LaurentPoly> s_operator(const std::vector<LaurentPoly>* coefficients = nullptr) const;

  std::string describe() const;

 private:
  struct Cache {
    std::mutex mu;
    std::map<OnsagerSym, OElem<LaurentPoly>> memo;
  };
  int n_;
  std::vector<LaurentPoly> alphas_;
  LaurentPoly zero_;
  OnsagerAlgebra alg_;
  std::shared_ptr<Cache> cache_;
};

/// U_{p,j} (j = -N+1..N) from the recursion with U_{0,j} = (-1)^{N+1} alpha_j.
/// Row p of the result, indexed by j + N - 1.
std::vector<std::vector<LaurentPoly>> upoly_table(const QuotientO& q, int pmax);
LaurentPoly upoly(const QuotientO& q, int p, int j);
/// (-1)^{p+N} times the A_j coefficient of the normal form of A_{-N-p}.
LaurentPoly upoly_oracle(const QuotientO& q, int p, int j);

struct Relation {
  OnsagerSym x;
  OnsagerSym y;
  OElem<LaurentPoly> rhs;  // normal form of [x, y]
  std::string to_string() const;
};

/// All brackets [x, y] of the normal-form basis with x after y in the basis
/// order, except that A-A brackets are listed with the larger index first.
std::vector<Relation> defining_relations(const QuotientO& q);

/// S_N(A_0) and S_N(A_1) reduce to zero. `override` replaces the coefficients of
/// S_N (the quotient itself is unchanged); used for negative controls.
Report verify_sn(const QuotientO& q, const std::vector<LaurentPoly>* override = nullptr);
/// sum_n alpha_n A_{n+p} and sum_n alpha_n G_{n+p} reduce to zero for |p| <= pmax.
Report verify_dav2(const QuotientO& q, int pmax);
/// Recursion against the reduction oracle, forward formulas, N=1 three-term law.
/// Mismatches are reported as discrepancies.
Report verify_upoly(const QuotientO& q, int pmax);

}  // namespace onsager
