#pragma once

#include <compare>
#include <cstdint>
#include <string>

#include "onsager/lie.hpp"
#include "onsager/report.hpp"

namespace onsager {

/// Basis symbol of the Onsager algebra: A_n (any integer n) or G_m (m >= 1).
struct OnsagerSym {
  enum class Kind : std::uint8_t { A, G };
  Kind kind = Kind::A;
  int index = 0;

  static constexpr OnsagerSym a(int n) { return {Kind::A, n}; }
  /// Requires m >= 1; use the element-level G() for normalization.
  static OnsagerSym g(int m);

  friend auto operator<=>(const OnsagerSym&, const OnsagerSym&) = default;
  std::string to_string() const;
};

template <class C>
using OElem = AlgElem<OnsagerSym, C>;

/// A_n with coefficient c.
template <class C = RatFunc>
OElem<C> A(int n, const C& c = C(1)) {
  return OElem<C>(OnsagerSym::a(n), c);
}

/// G_m with coefficient c, normalized by G_{-m} = -G_m and G_0 = 0.
template <class C = RatFunc>
OElem<C> G(int m, const C& c = C(1)) {
  if (m == 0) return {};
  if (m < 0) return OElem<C>(OnsagerSym::g(-m), -c);
  return OElem<C>(OnsagerSym::g(m), c);
}

/// Structure constants of the Onsager algebra:
///   [A_n, A_m] = aa G_{n-m},  [G_n, A_m] = ga (A_{n+m} - A_{m-n}),  [G_n, G_m] = 0.
/// The defaults aa = 4, ga = 2 define the algebra; other values exist only to
/// exercise the verifiers on a corrupted algebra.
class OnsagerAlgebra {
 public:
  using Sym = OnsagerSym;

  explicit OnsagerAlgebra(long aa = 4, long ga = 2) : aa_(aa), ga_(ga) {}

  void basis_bracket(Sym x, Sym y, BasisTerms<Sym>& out) const;
  void basis_auto(Auto g, Sym x, BasisTerms<Sym>& out) const;

  template <class C>
  OElem<C> bracket(const OElem<C>& x, const OElem<C>& y) const {
    return lie_bracket(*this, x, y);
  }
  /// The full algebra has no relations beyond its basis.
  template <class C>
  OElem<C> reduce(const OElem<C>& x) const {
    return x;
  }
  template <class C>
  OElem<C> apply(const AutoWord& w, const OElem<C>& x) const {
    return apply_auto(*this, w, x);
  }

 private:
  long aa_;
  long ga_;
};

/// (tau1 Phi)^n for any integer n; negative powers use tau0 Phi.
AutoWord shift_word(int n);

/// Truncated currents in the indeterminate u:
///   G(u) = sum_{n>=1} u^n G_n,  A^-(u) = sum_{n>=0} u^n A_{-n},  A^+(u) = sum_{n>=1} u^n A_n,
/// keeping powers u^n with n <= degree.
OElem<LaurentPoly> current_G(Symbol u, int degree);
OElem<LaurentPoly> current_Aminus(Symbol u, int degree);
OElem<LaurentPoly> current_Aplus(Symbol u, int degree);

/// Checks both Dolan-Grady relations through nested brackets.
Report verify_dolan_grady(const OnsagerAlgebra& alg = OnsagerAlgebra());

/// tau0(A1) and tau1(A0) from their defining cubic formulas.
OElem<RatFunc> tau0_A1_by_formula(const OnsagerAlgebra& alg = OnsagerAlgebra());
OElem<RatFunc> tau1_A0_by_formula(const OnsagerAlgebra& alg = OnsagerAlgebra());

}  // namespace onsager
