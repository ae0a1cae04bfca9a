#include "onsager/onsager.hpp"

#include "onsager/errors.hpp"

namespace onsager {

OnsagerSym OnsagerSym::g(int m) {
  if (m < 1) throw InputError("G index must be positive, got " + std::to_string(m));
  return {Kind::G, m};
}

std::string OnsagerSym::to_string() const {
  return (kind == Kind::A ? "A(" : "G(") + std::to_string(index) + ")";
}

void OnsagerAlgebra::basis_bracket(Sym x, Sym y, BasisTerms<Sym>& out) const {
  using K = Sym::Kind;
  if (x.kind == K::A && y.kind == K::A) {
    int d = x.index - y.index;
    if (d > 0) out.push(Sym::g(d), aa_);
    if (d < 0) out.push(Sym::g(-d), -aa_);
  } else if (x.kind == K::G && y.kind == K::A) {
    out.push(Sym::a(x.index + y.index), ga_);
    out.push(Sym::a(y.index - x.index), -ga_);
  } else if (x.kind == K::A && y.kind == K::G) {
    out.push(Sym::a(y.index + x.index), -ga_);
    out.push(Sym::a(x.index - y.index), ga_);
  }
}

void OnsagerAlgebra::basis_auto(Auto g, Sym x, BasisTerms<Sym>& out) const {
  if (x.kind == Sym::Kind::G) {
    out.push(x, -1);
    return;
  }
  switch (g) {
    case Auto::Phi: out.push(Sym::a(1 - x.index), 1); break;
    case Auto::Tau0: out.push(Sym::a(-x.index), 1); break;
    case Auto::Tau1: out.push(Sym::a(2 - x.index), 1); break;
  }
}

AutoWord shift_word(int n) { return n >= 0 ? AutoWord::power(kTau1Phi, n) : AutoWord::power(kTau0Phi, -n); }

OElem<LaurentPoly> current_G(Symbol u, int degree) {
  OElem<LaurentPoly> r;
  for (int n = 1; n <= degree; ++n) r += G<LaurentPoly>(n, LaurentPoly::var(u, n));
  return r;
}

OElem<LaurentPoly> current_Aminus(Symbol u, int degree) {
  OElem<LaurentPoly> r;
  for (int n = 0; n <= degree; ++n) r += A<LaurentPoly>(-n, LaurentPoly::var(u, n));
  return r;
}

OElem<LaurentPoly> current_Aplus(Symbol u, int degree) {
  OElem<LaurentPoly> r;
  for (int n = 1; n <= degree; ++n) r += A<LaurentPoly>(n, LaurentPoly::var(u, n));
  return r;
}

Report verify_dolan_grady(const OnsagerAlgebra& alg) {
  Report rep("dg");
  auto one = [&](const std::string& id, int x, int y) {
    rep.timed([&] {
      auto X = A(x), Y = A(y);
      auto cubic = alg.bracket(X, alg.bracket(X, alg.bracket(X, Y)));
      auto linear = RatFunc(16) * alg.bracket(X, Y);
      auto residual = cubic - linear;
      Check c{id, residual.is_zero() ? Status::pass : Status::fail, {}, 0.0};
      c.residual = "cubic = " + cubic.to_string() + "; 16*[X,Y] = " + linear.to_string() +
                   "; residual = " + residual.to_string();
      return c;
    });
  };
  one("dg.A0", 0, 1);
  one("dg.A1", 1, 0);
  return rep;
}

OElem<RatFunc> tau0_A1_by_formula(const OnsagerAlgebra& alg) {
  return RatFunc(Scalar(-1, 8)) * alg.bracket(A(0), alg.bracket(A(0), A(1))) + A(1);
}

OElem<RatFunc> tau1_A0_by_formula(const OnsagerAlgebra& alg) {
  return RatFunc(Scalar(-1, 8)) * alg.bracket(A(1), alg.bracket(A(1), A(0))) + A(0);
}

}  // namespace onsager
