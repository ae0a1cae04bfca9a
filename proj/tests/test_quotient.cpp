#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "onsager/quotient.hpp"

using namespace onsager;

namespace {

using E = OElem<LaurentPoly>;
LaurentPoly V(const char* n) { return LaurentPoly::var(n); }
E a(int n, LaurentPoly c = 1) { return A<LaurentPoly>(n, c); }
E g(int n, LaurentPoly c = 1) { return G<LaurentPoly>(n, c); }

E random_elem(std::mt19937& gen, int range) {
  std::uniform_int_distribution<int> idx(-range, range), gi(1, range), c(-3, 3);
  E x;
  for (int i = 0; i < 3; ++i) {
    x += a(idx(gen), c(gen));
    x += g(gi(gen), c(gen));
  }
  return x;
}

}  // namespace

TEST_CASE("reduction examples") {
  auto q1 = QuotientO::symbolic(1);
  LaurentPoly al = V("alpha"), ap = V("alphap");
  CHECK(q1.reduce(a(-1)) == a(0, -al) - a(1));
  CHECK(q1.reduce(g(2)) == g(1, -al));
  CHECK(q1.reduce(a(0)) == a(0));
  auto q2 = QuotientO::symbolic(2);
  CHECK(q2.reduce(a(3)) == -a(-1) - a(0, al) - a(1, ap) - a(2, al));
  CHECK_THROWS(QuotientO(1, {LaurentPoly(3), LaurentPoly(2)}));
  CHECK(q2.basis().size() == 6);
  CHECK(q2.basis_index(OnsagerSym::g(2)) == 5);
}

TEST_CASE("U polynomials") {
  auto q1 = QuotientO::symbolic(1);
  LaurentPoly al = V("alpha");
  CHECK(upoly(q1, 0, 0) == al);
  CHECK(upoly(q1, 0, 1) == LaurentPoly(1));
  CHECK(upoly(q1, 1, 0) == al * al - 1);
  CHECK(upoly(q1, 1, 1) == al);
  CHECK(upoly_oracle(q1, 1, 0) == al * al - 1);
  CHECK(q1.reduce(a(-2)) == a(0, al * al - 1) + a(1, al));
  for (int N = 1; N <= 3; ++N) {
    auto q = QuotientO::symbolic(N);
    for (int j = -N + 1; j <= N; ++j) CHECK(upoly(q, 0, j) == ((N + 1) % 2 == 0 ? 1 : -1) * q.alpha(j));
    auto rep = verify_upoly(q, 10);
    INFO(rep.to_text(false));
    CHECK(rep.status() == Status::pass);
  }
}

TEST_CASE("S_N and implied relations") {
  for (int N = 1; N <= 4; ++N) {
    auto q = QuotientO::symbolic(N);
    CHECK(verify_sn(q).status() == Status::pass);
    CHECK(verify_dav2(q, 6).status() == Status::pass);
  }
  auto q1 = QuotientO::symbolic(1);
  std::vector<LaurentPoly> wrong{V("alpha") + 1, LaurentPoly(1)};
  auto bad = verify_sn(q1, &wrong);
  CHECK(bad.status() == Status::fail);
  CHECK(q1.reduce(apply_autopoly(q1.algebra(), q1.s_operator(&wrong), a(0))) == a(0));
}

TEST_CASE("defining relations N=1") {
  auto q = QuotientO::symbolic(1);
  LaurentPoly al = V("alpha");
  auto rel = defining_relations(q);
  REQUIRE(rel.size() == 3);
  CHECK(q.bracket(g(1), a(0)) == a(0, 2 * al) + a(1, 4));
  CHECK(q.bracket(a(1), g(1)) == a(1, 2 * al) + a(0, 4));
  CHECK(q.bracket(a(1), a(0)) == g(1, 4));
}

TEST_CASE("defining relations N=2 against the aw(6) list") {
  auto q = QuotientO::symbolic(2);
  LaurentPoly al = V("alpha"), ap = V("alphap");
  auto br = [&](const E& x, const E& y) { return q.bracket(x, y); };
  CHECK(defining_relations(q).size() == 15);
  CHECK(br(a(0), a(-1)) == g(1, 4));
  CHECK(br(a(2), a(1)) == g(1, 4));
  CHECK(br(a(1), a(0)) == g(1, 4));
  CHECK(br(a(1), a(-1)) == g(2, 4));
  CHECK(br(a(2), a(0)) == g(2, 4));
  CHECK(br(a(2), a(-1)) == g(1, 4 * (1 - ap)) - g(2, 4 * al));
  CHECK(br(g(1), a(0)) == a(1, 2) - a(-1, 2));
  CHECK(br(g(1), a(1)) == a(2, 2) - a(0, 2));
  CHECK(br(g(1), a(-1)) == a(-1, 2 * al) + a(0, 2 * (1 + ap)) + a(1, 2 * al) + a(2, 2));
  CHECK(br(g(1), a(2)) == a(-1, -2) - a(0, 2 * al) - a(1, 2 * (1 + ap)) - a(2, 2 * al));
  CHECK(br(g(2), a(0)) == a(-1, 2 * al) + a(0, 2 * ap) + a(1, 2 * al) + a(2, 4));
  CHECK(br(g(2), a(1)) == a(-1, -4) - a(0, 2 * al) - a(1, 2 * ap) - a(2, 2 * al));
  CHECK(br(g(2), a(-1)) == a(-1, 2 * (ap - al * al)) + a(0, 2 * al * (1 - ap)) + a(1, 2 * (2 - al * al)) - a(2, 2 * al));
  CHECK(br(g(2), a(2)) == a(-1, 2 * al) + a(0, 2 * (al * al - 2)) + a(1, 2 * al * (ap - 1)) + a(2, 2 * (al * al - ap)));
  CHECK(br(g(1), g(2)).is_zero());
}

TEST_CASE("property: reduction is idempotent, linear and a Lie-ideal projection") {
  std::mt19937 gen(777);
  for (int N = 1; N <= 3; ++N) {
    auto q = QuotientO::symbolic(N);
    for (int i = 0; i < 500; ++i) {
      E x = random_elem(gen, 7), y = random_elem(gen, 7);
      E rx = q.reduce(x), ry = q.reduce(y);
      for (const auto& [s, c] : rx.terms()) REQUIRE(q.is_normal(s));
      REQUIRE(q.reduce(rx) == rx);
      REQUIRE(q.reduce(x + y) == rx + ry);
      REQUIRE(q.reduce(q.algebra().bracket(x, y)) == q.reduce(q.algebra().bracket(rx, ry)));
    }
  }
}

TEST_CASE("property: Jacobi survives reduction") {
  for (int N = 1; N <= 3; ++N) {
    auto q = QuotientO::symbolic(N);
    auto b = q.basis();
    for (auto s1 : b)
      for (auto s2 : b)
        for (auto s3 : b) {
          E x(s1), y(s2), z(s3);
          E j = q.bracket(x, q.bracket(y, z)) + q.bracket(y, q.bracket(z, x)) + q.bracket(z, q.bracket(x, y));
          REQUIRE(j.is_zero());
        }
  }
}
