#pragma once

#include <compare>
#include <cstdint>
#include <memory>
#include <mutex>
#include <string>
#include <vector>

#include "onsager/quotient.hpp"
#include "onsager/yangbaxter.hpp"

namespace onsager {

/// Basis symbol of the alternative presentation:
///   Wm(k) = W_{-k}, Wp(k) = W_{k+1}, Gt(k) = Gt_{k+1}, all with k >= 0.
struct AltSym {
  enum class Kind : std::uint8_t { Wm, Wp, Gt };
  Kind kind = Kind::Wm;
  int index = 0;

  static AltSym wm(int k);
  static AltSym wp(int k);
  static AltSym gt(int k);

  friend auto operator<=>(const AltSym&, const AltSym&) = default;
  /// W(natural index) for the W families, Gt(k) for Gt_{k+1}.
  std::string to_string() const;
};

template <class C>
using AElem = AlgElem<AltSym, C>;

template <class C = RatFunc>
AElem<C> Wm(int k, const C& c = C(1)) {
  return AElem<C>(AltSym::wm(k), c);
}
template <class C = RatFunc>
AElem<C> Wp(int k, const C& c = C(1)) {
  return AElem<C>(AltSym::wp(k), c);
}
template <class C = RatFunc>
AElem<C> Gt(int k, const C& c = C(1)) {
  return AElem<C>(AltSym::gt(k), c);
}

/// Structure constants:
///   [Wm(l), Wp(k)] = Gt(k+l)
///   [Gt(k), Wm(l)] = 16 Wm(k+l+1) - 16 Wp(k+l)
///   [Wp(l), Gt(k)] = 16 Wp(k+l+1) - 16 Wm(k+l)
/// and each of the three families is abelian. Non-default constants replace
/// 1 and 16 and only serve to corrupt the algebra in negative controls.
class AltAlgebra {
 public:
  using Sym = AltSym;
  explicit AltAlgebra(long g = 1, long w = 16) : g_(g), w_(w) {}
  void basis_bracket(Sym x, Sym y, BasisTerms<Sym>& out) const;
  void basis_auto(Auto g, Sym x, BasisTerms<Sym>& out) const;

  template <class C>
  AElem<C> bracket(const AElem<C>& x, const AElem<C>& y) const {
    return lie_bracket(*this, x, y);
  }
  template <class C>
  AElem<C> reduce(const AElem<C>& x) const {
    return x;
  }
  template <class C>
  AElem<C> apply(const AutoWord& w, const AElem<C>& x) const {
    return apply_auto(*this, w, x);
  }

 private:
  long g_;
  long w_;
};

/// c_p^k = (-1)^p 2^{k-2p} (k-p)! / (p! (k-2p)!) for 0 <= 2p <= k, else 0.
Scalar conversion_coeff(int p, int k);

/// Images of single basis symbols under the isomorphism and its inverse.
AElem<LaurentPoly> to_alt_symbol(OnsagerSym s);
OElem<LaurentPoly> to_ons_symbol(AltSym s);

template <class C>
AElem<C> convert_to_alt(const OElem<C>& x) {
  AElem<C> r;
  for (const auto& [s, c] : x.terms()) {
    const AElem<LaurentPoly> img = to_alt_symbol(s);
    for (const auto& [t, k] : img.terms()) r.add(t, c * C(k));
  }
  return r;
}

template <class C>
OElem<C> convert_to_ons(const AElem<C>& y) {
  OElem<C> r;
  for (const auto& [s, c] : y.terms()) {
    const OElem<LaurentPoly> img = to_ons_symbol(s);
    for (const auto& [t, k] : img.terms()) r.add(t, c * C(k));
  }
  return r;
}

/// ((tau0 Phi + tau1 Phi) / 2)^k, or without the 1/2 when `halved` is false.
AutoPoly<LaurentPoly> averaged_shift(int k, bool halved = true);

/// The quotient A_N by sum_k beta_k W_{-k} = 0 and sum_k beta_k W_{k+1} = 0.
/// beta_N must be invertible in the Laurent ring (a nonzero rational or a
/// monomial). Normal form: Wm(0..N-1), Wp(0..N-1), Gt(0..N-1).
class QuotientA {
 public:
  QuotientA(int n, std::vector<LaurentPoly> betas);
  /// beta0, ..., betaN as indeterminates.
  static QuotientA symbolic(int n);

  int N() const { return n_; }
  const LaurentPoly& beta(int k) const;
  const std::vector<LaurentPoly>& betas() const { return betas_; }
  std::vector<AltSym> basis() const;
  bool is_normal(AltSym s) const { return s.index < n_; }

  AElem<LaurentPoly> reduce_symbol(AltSym s) const;

  template <class C>
  AElem<C> reduce(const AElem<C>& x) const {
    AElem<C> r;
    for (const auto& [s, c] : x.terms()) {
      if (is_normal(s)) {
        r.add(s, c);
        continue;
      }
      const AElem<LaurentPoly> image = reduce_symbol(s);
      for (const auto& [t, k] : image.terms()) r.add(t, c * C(k));
    }
    return r;
  }
  template <class C>
  AElem<C> bracket(const AElem<C>& x, const AElem<C>& y) const {
    return reduce(alg_.bracket(x, y));
  }
  const AltAlgebra& algebra() const { return alg_; }

  /// ptilde(U) = sum_p beta_p U^p and ftilde_k(U) = sum_{p=k+1}^{N} beta_p U^{p-k-1},
  /// with U = (u + 1/u)/2 substituted.
  LaurentPoly ptilde(Symbol u) const;
  LaurentPoly ftilde(int k, Symbol u) const;

  std::string describe() const;

 private:
  struct Cache {
    std::mutex mu;
    std::map<AltSym, AElem<LaurentPoly>> memo;
  };
  int n_;
  std::vector<LaurentPoly> betas_;
  LaurentPoly zero_;
  LaurentPoly inv_top_;
  AltAlgebra alg_;
  std::shared_ptr<Cache> cache_;
};

/// (u + 1/u)/2 as a Laurent polynomial.
LaurentPoly big_u(Symbol u);
/// Truncation at u-degree `degree` of U^{-k-1} = 2 sum_p c_p^{2p+k} u^{2p+k+1}.
LaurentPoly u_inverse_power_series(int k, Symbol u, int degree);

/// beta-vector read off from the image of sum_n alpha_n A_{-n}. Throws
/// InputError when the image leaves the W_{-k} span or beta_N vanishes.
std::vector<LaurentPoly> beta_from_alpha(const QuotientO& q);
/// The closed beta(alpha) formulas; the ill-defined p = k = 0 term of the even
/// formula is taken as alpha_0.
LaurentPoly beta_formula(const QuotientO& q, int k);
QuotientA quotient_a_from(const QuotientO& q);
Report verify_beta_alpha(const QuotientO& q);

/// B^(N)(u) on the alternative side.
OperatorMatrix<AltSym> build_B_alt(const QuotientA& qa, Symbol u);

/// Homomorphism, round trips and triangular change of basis.
Report verify_iso(int bracket_range = 8, int roundtrip_range = 20, int triangular_range = 12);
/// S'_N with the printed coefficients beta_n and with beta_n 2^{-n}.
Report verify_sprime(const QuotientA& qa);
/// [R, z] reduces to zero for the defining relations R (shifted by p <= pmax)
/// and every basis symbol z with index <= N + pmax: the reduction respects the
/// ideal.
Report verify_ideal_a(const QuotientA& qa, int pmax = 3);
/// Series check of the alternative side: full matrix in u and the component
/// current relations in x = 1/U, y = 1/V.
Report verify_frt_series_alt(int degree, const AltAlgebra& alg = AltAlgebra());

}  // namespace onsager
