#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "onsager/envrep.hpp"

using namespace onsager;

namespace {
using OL = OElem<LaurentPoly>;
LaurentPoly V(const char* n) { return LaurentPoly::var(n); }
EnvElem X(OnsagerSym s) { return EnvElem::word({s}); }
const OnsagerSym a0 = OnsagerSym::a(0), a1 = OnsagerSym::a(1);

void require_pass(const Report& r) {
  INFO(r.to_text());
  CHECK(r.status() == Status::pass);
}
}  // namespace

TEST_CASE("PBW examples") {
  auto q = QuotientO::symbolic(1);
  Envelope env(q);
  EnvElem r = env.normalize(X(a1) * X(a0));
  CHECK(r == EnvElem::word({a0, a1}) + EnvElem::word({OnsagerSym::g(1)}, 4));
  CHECK(env.normalize(X(a0) * X(a0)) == EnvElem::word({a0, a0}));
  CHECK(env.normalize((X(a0) + EnvElem::unit()) * X(a1)) == EnvElem::word({a0, a1}) + EnvElem::word({a1}));
  CHECK(env.is_normal({a0, a1, OnsagerSym::g(1)}));
  CHECK_FALSE(env.is_normal({a1, a0}));
  // non-normal symbols are reduced first: A(-1) = -alpha A0 - A1
  CHECK(env.normalize(X(OnsagerSym::a(-1))) == EnvElem::word({a0}, -V("alpha")) - EnvElem::word({a1}));
}

TEST_CASE("quartic presentations") {
  require_pass(verify_quartic(QuotientO::symbolic(1)));
  require_pass(verify_quartic(QuotientO::symbolic(2)));
  QuotientO numeric(1, {LaurentPoly(Scalar(3, 2)), LaurentPoly(1)});
  require_pass(verify_quartic(numeric));
  CHECK_THROWS_AS(verify_quartic(QuotientO::symbolic(3)), InputError);
  // Negative control: the quartic relation with 8 alpha replaced by 7 alpha.
  auto q = QuotientO::symbolic(1);
  LaurentPoly al = q.alpha(0);
  EnvElem x0 = X(a0), x1 = X(a1);
  EnvElem bad = 7 * al * (x1 * x0 - x0 * x1) + LaurentPoly(2) * (x1 * x0 * x1 * x0 - x0 * x1 * x0 * x1) -
                x1 * x1 * x0 * x0 + x0 * x0 * x1 * x1;
  CHECK_FALSE(Envelope(q).normalize(bad).is_zero());
}

TEST_CASE("property: PBW confluence and Lie compatibility (500 cases)") {
  std::mt19937 g(4242);
  for (int N = 1; N <= 2; ++N) {
    auto q = QuotientO::symbolic(N);
    auto basis = q.basis();
    Envelope left(q, Envelope::Strategy::leftmost), right(q, Envelope::Strategy::rightmost);
    std::uniform_int_distribution<std::size_t> pick(0, basis.size() - 1);
    std::uniform_int_distribution<int> len(0, 5), coef(-3, 3);
    for (int i = 0; i < 250; ++i) {
      EnvElem x;
      for (int t = 0; t < 2; ++t) {
        PBWWord w;
        for (int k = len(g); k > 0; --k) w.push_back(basis[pick(g)]);
        x.add(w, LaurentPoly(coef(g)));
      }
      EnvElem l = left.normalize(x), r = right.normalize(x);
      CHECK(l == r);
      for (const auto& [w, c] : l.terms()) CHECK(left.is_normal(w));
      CHECK(left.normalize(l) == l);
      OnsagerSym s = basis[pick(g)], t = basis[pick(g)];
      CHECK(left.commutator(X(s), X(t)) == EnvElem::lie(q.bracket(OL(s), OL(t))));
    }
  }
}

TEST_CASE("aw(3) structure constants") {
  LaurentPoly A0 = V("a0"), A1 = V("a1"), B0 = V("b0"), B1 = V("b1"), al = V("alpha");
  auto fit = aw3_fit(A0, A1, B0, B1);
  INFO(fit.report.to_text());
  REQUIRE(fit.solved);
  CHECK(fit.report.status() == Status::discrepancy);
  CHECK(fit.report.find("aw3.solve")->status == Status::pass);
  CHECK(fit.report.find("aw3.k2")->status == Status::pass);
  CHECK(fit.constants.B == RatFunc(-8 * al * A0 * A1));
  CHECK(fit.constants.C0 == RatFunc(-16 * A1 * A1));
  CHECK(fit.constants.C1 == RatFunc(-16 * A0 * A0));
  CHECK(fit.constants.D1 == RatFunc(8 * al * A0 * A1 * B0 + 16 * A0 * A0 * B1));
  CHECK(fit.constants.D0 == RatFunc(8 * al * A0 * A1 * B1 + 16 * A1 * A1 * B0));
  CHECK(fit.report.find("aw3.printed.B")->status == Status::discrepancy);
  // The printed list matches the inverse reading with C0/C1 and D0/D1 exchanged.
  const Check* inv = fit.report.find("aw3.inverse-reading");
  REQUIRE(inv != nullptr);
  CHECK(inv->residual.find("exchanged") != std::string::npos);

  // b = 0: no affine part.
  auto zero = aw3_fit(A0, A1, LaurentPoly(), LaurentPoly());
  CHECK(zero.constants.D0.is_zero());
  CHECK(zero.constants.D1.is_zero());

  // (a0, a1) -> (l a0, a1 / l) keeps K2.
  LaurentPoly l = V("lam");
  auto resc = aw3_fit(l * A0, l.inverse() * A1, B0, B1);
  CHECK(resc.k2 == fit.k2);
  CHECK(resc.constants.B == fit.constants.B);
  CHECK(resc.constants.C1 == RatFunc(l * l) * fit.constants.C1);

  // Numeric parameters always solve.
  auto num = aw3_fit(LaurentPoly(2), LaurentPoly(Scalar(-1, 3)), LaurentPoly(5), LaurentPoly(1),
                     QuotientO(1, {LaurentPoly(7), LaurentPoly(1)}));
  CHECK(num.solved);
  CHECK_THROWS_AS(aw3_fit(LaurentPoly(), A1, B0, B1), InputError);
}

TEST_CASE("representation N=1") {
  auto rep = rep_build(symbolic_points(1));
  CHECK(rep.alphas[0] == -V("w") - LaurentPoly::var("w", -1));
  auto r = rep_check(rep);
  require_pass(r);
  CHECK(r.find("rep.N1.published-matrices")->status == Status::pass);
  // [pi(A1), pi(A0)] = 4 pi(G1)
  auto c = commutator(rep.mats.at(a1), rep.mats.at(a0));
  auto g = rep.mats.at(OnsagerSym::g(1));
  for (std::size_t i = 0; i < 2; ++i)
    for (std::size_t j = 0; j < 2; ++j) CHECK(c(i, j) == RatFunc(4) * g(i, j));

  auto numeric = rep_build({LaurentPoly(Scalar(3, 2))});
  require_pass(rep_check(numeric));
  CHECK(numeric.mats.at(OnsagerSym::g(1))(0, 0) == RatFunc(Scalar(2, 3) - Scalar(3, 2)));
  CHECK_THROWS_AS(rep_build({}), InputError);
  CHECK_THROWS_AS(rep_build({LaurentPoly()}), InputError);
}

TEST_CASE("representation N=2") {
  auto rep = rep_build(symbolic_points(2));
  auto r = rep_check(rep);
  require_pass(r);
  CHECK(r.find("rep.N2.alphap")->status == Status::pass);
  CHECK(rep.mats.at(a0).rows() == 4);
  auto numeric = rep_build({LaurentPoly(2), LaurentPoly(Scalar(5, 3))});
  require_pass(rep_check(numeric));
}

TEST_CASE("representation N=3 (experimental)") {
  auto rep = rep_build({LaurentPoly(2), LaurentPoly(3), LaurentPoly(Scalar(1, 5))});
  CHECK(rep.experimental);
  require_pass(rep_check(rep));
}
