// One line per acceptance criterion; exit status is the number of failures.
#include <chrono>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>

#include "onsager/suites.hpp"

using namespace onsager;

namespace {

using OL = OElem<LaurentPoly>;
using AL = AElem<LaurentPoly>;

struct Outcome {
  bool ok = true;
  std::ostringstream why;
  void need(bool cond, const std::string& what) {
    if (!cond) {
      if (ok) why << what;
      else why << "; " << what;
      ok = false;
    }
  }
  void no_fail(const Report& r) {
    for (const auto& c : r.checks())
      need(c.status != Status::fail, c.id + " failed: " + c.residual);
  }
  void all_pass(const Report& r) {
    for (const auto& c : r.checks())
      need(c.status == Status::pass, c.id + " is " + to_string(c.status) + ": " + c.residual);
  }
  void check_is(const Report& r, const std::string& id, Status s) {
    const Check* c = r.find(id);
    need(c != nullptr, id + " missing");
    if (c) need(c->status == s, id + " is " + to_string(c->status) + ": " + c->residual);
  }
};

OL ons(const std::string& s, const Bindings_& b = {}) { return eval_onsager(parse_expr(s), b); }

SuiteOptions with_n(int n) {
  SuiteOptions o;
  o.N = n;
  return o;
}

OnsagerSym random_ons(std::mt19937& g, int k) {
  if (g() % 2) return OnsagerSym::a(static_cast<int>(g() % (2 * k + 1)) - k);
  return OnsagerSym::g(1 + static_cast<int>(g() % k));
}

OL random_ol(std::mt19937& g, int k) {
  OL x;
  for (int i = 1 + static_cast<int>(g() % 3); i > 0; --i) x.add(random_ons(g, k), Scalar(static_cast<int>(g() % 11) - 5));
  return x;
}

AL random_al(std::mt19937& g, int k) {
  AL x;
  for (int i = 1 + static_cast<int>(g() % 3); i > 0; --i)
    x.add(AltSym{static_cast<AltSym::Kind>(g() % 3), static_cast<int>(g() % (k + 1))}, Scalar(static_cast<int>(g() % 11) - 5));
  return x;
}

// ---------------------------------------------------------------------------

void c1(Outcome& o) {
  o.all_pass(verify_cybe());
  RFactory bad = [](Symbol a, Symbol b) {
    auto r = r_matrix(a, b);
    r.num(1, 2) += LaurentPoly::var(a);
    return r;
  };
  o.need(verify_cybe(bad).status() == Status::fail, "perturbed r-matrix was not rejected");
}

void c2(Outcome& o) {
  o.all_pass(verify_dolan_grady());
  OL a = ons("[A(0), [A(0), [A(0), A(1)]]]"), b = ons("16*[A(0), A(1)]");
  o.need(a == ons("-64*G(1)") && b == ons("-64*G(1)"), "A0 cubic is " + a.to_string());
  OL c = ons("[A(1), [A(1), [A(1), A(0)]]]"), d = ons("16*[A(1), A(0)]");
  o.need(c == d && c == ons("64*G(1)"), "A1 cubic is " + c.to_string());
}

void c3(Outcome& o) {
  Report r = run_suite("frt-onsager");
  o.all_pass(r);
  for (int n : {1, 2, 3}) o.check_is(r, "frt-onsager.N" + std::to_string(n), Status::pass);
  o.check_is(r, "frt-onsager.N1.extracted-vs-printed", Status::pass);
  o.check_is(r, "frt-onsager.N2.extracted-vs-printed", Status::pass);
}

void c4(Outcome& o) {
  Report r = run_suite("frt-alt");
  o.all_pass(r);
  o.need(r.checks().size() == 3, "expected N=1..3");
}

void c5(Outcome& o) {
  SuiteOptions s;
  s.trunc = 8;
  Report r = run_suite("frt-series", s);
  o.all_pass(r);
  o.check_is(r, "frt-series-alt.components.D8", Status::pass);
  o.check_is(r, "frt-series-alt.matrix.D8", Status::pass);
}

void c6(Outcome& o) {
  Report r = run_suite("charges");
  o.all_pass(r);
  for (int n : {1, 2, 3}) o.check_is(r, "expand-b.N" + std::to_string(n), Status::pass);
  o.check_is(r, "charges.N4.[I2,I3]", Status::pass);
}

void c7(Outcome& o) {
  Report sn = run_suite("sn");
  for (const auto& c : sn.checks()) {
    bool literal = c.id.find("sprime.literal") != std::string::npos;
    o.need(c.status == (literal ? Status::discrepancy : Status::pass), c.id + " is " + to_string(c.status));
  }
  for (int n = 1; n <= 4; ++n) {
    o.check_is(sn, "sn.N" + std::to_string(n) + ".A0", Status::pass);
    o.check_is(sn, "sn.N" + std::to_string(n) + ".A1", Status::pass);
  }
  Report up = run_suite("upoly");
  o.no_fail(up);
  o.need(!up.checks().empty(), "no U-polynomial checks");
}

void c8(Outcome& o) {
  Report iso = run_suite("iso");
  o.all_pass(iso);
  o.check_is(iso, "iso.triangular", Status::pass);
  Report fx = run_suite("fixtures-appendix-a");
  o.no_fail(fx);
  int forward = 0;
  for (const auto& c : fx.checks())
    if (c.id.rfind("fixture.forward.", 0) == 0) forward += c.status == Status::pass;
  o.need(forward == 9, std::to_string(forward) + " of 9 forward fixtures hold");
}

void c9(Outcome& o) {
  o.all_pass(run_suite("beta-alpha"));
  auto b1 = beta_from_alpha(QuotientO::symbolic(1));
  Expr x1 = parse_expr("alpha"), x2 = parse_expr("alphap - 2");
  o.need(b1.size() == 2 && b1[0] == eval_scalar(x1) && b1[1] == LaurentPoly(2), "N=1 betas differ");
  auto b2 = beta_from_alpha(QuotientO::symbolic(2));
  o.need(b2.size() == 3 && b2[0] == eval_scalar(x2) && b2[1] == eval_scalar(parse_expr("2*alpha")) && b2[2] == LaurentPoly(4),
         "N=2 betas differ");
}

void c10(Outcome& o) {
  Report q = run_suite("quartic");
  o.all_pass(q);
  o.check_is(q, "N1.quartic.extra.leftmost", Status::pass);
  o.check_is(q, "N2.quartic.relaw62", Status::pass);
  std::mt19937 g(1010);
  for (int n : {1, 2}) {
    QuotientO qo = QuotientO::symbolic(n);
    Envelope left(qo, Envelope::Strategy::leftmost), right(qo, Envelope::Strategy::rightmost);
    auto basis = qo.basis();
    int bad = 0;
    for (int i = 0; i < 500; ++i) {
      PBWWord w;
      for (int k = 1 + static_cast<int>(g() % 4); k > 0; --k) w.push_back(basis[g() % basis.size()]);
      EnvElem e = EnvElem::word(w);
      bad += !(left.normalize(e) == right.normalize(e));
    }
    o.need(bad == 0, std::to_string(bad) + " confluence failures for N=" + std::to_string(n));
  }
}

void c11(Outcome& o) {
  Report r1 = run_suite("rep", with_n(1));
  o.all_pass(r1);
  o.check_is(r1, "rep.N1.published-matrices", Status::pass);
  Report r2 = run_suite("rep", with_n(2));
  o.all_pass(r2);
  o.check_is(r2, "rep.N2.alphap", Status::pass);
  o.check_is(r2, "rep.N2.relations", Status::pass);
}

void c12(Outcome& o) {
  AW3Fit f = aw3_fit(LaurentPoly::var("a0"), LaurentPoly::var("a1"), LaurentPoly::var("b0"), LaurentPoly::var("b1"));
  o.need(f.solved, "no consistent constants");
  o.no_fail(f.report);
  o.check_is(f.report, "aw3.solve", Status::pass);
  for (const char* k : {"B", "C0", "C1", "D0", "D1"}) {
    const Check* c = f.report.find(std::string("aw3.printed.") + k);
    o.need(c != nullptr && (c->status == Status::pass || !c->residual.empty()), std::string("no comparison for ") + k);
  }
}

void c13(Outcome& o) {
  std::mt19937 g(13);
  OnsagerAlgebra on;
  AltAlgebra al;
  const AutoWord letters[] = {AutoWord{{Auto::Phi}}, AutoWord{{Auto::Tau0}}, AutoWord{{Auto::Tau1}}};
  int jac_o = 0, jac_a = 0, aut = 0, inv = 0, idem = 0, ideal = 0;
  QuotientO q2 = QuotientO::symbolic(2), q3 = QuotientO::symbolic(3);
  for (int i = 0; i < 500; ++i) {
    OL x = random_ol(g, 6), y = random_ol(g, 6), z = random_ol(g, 6);
    jac_o += !(on.bracket(x, on.bracket(y, z)) + on.bracket(y, on.bracket(z, x)) + on.bracket(z, on.bracket(x, y))).is_zero();
    AL u = random_al(g, 6), v = random_al(g, 6), w = random_al(g, 6);
    jac_a += !(al.bracket(u, al.bracket(v, w)) + al.bracket(v, al.bracket(w, u)) + al.bracket(w, al.bracket(u, v))).is_zero();
    for (const auto& a : letters) {
      aut += !(on.apply(a, on.bracket(x, y)) == on.bracket(on.apply(a, x), on.apply(a, y)));
      aut += !(al.apply(a, al.bracket(u, v)) == al.bracket(al.apply(a, u), al.apply(a, v)));
      inv += !(on.apply(a, on.apply(a, x)) == x) + !(al.apply(a, al.apply(a, u)) == u);
    }
    const QuotientO& q = i % 2 ? q2 : q3;
    OL rx = q.reduce(x);
    idem += !(q.reduce(rx) == rx);
    ideal += !(q.reduce(on.bracket(x, y)) == q.reduce(on.bracket(rx, y)));
  }
  o.need(jac_o == 0, "Jacobi (O) failed " + std::to_string(jac_o) + "x");
  o.need(jac_a == 0, "Jacobi (alt) failed " + std::to_string(jac_a) + "x");
  o.need(aut == 0, "automorphism law failed " + std::to_string(aut) + "x");
  o.need(inv == 0, "involution law failed " + std::to_string(inv) + "x");
  o.need(idem == 0, "reduce not idempotent " + std::to_string(idem) + "x");
  o.need(ideal == 0, "ideal compatibility failed " + std::to_string(ideal) + "x");
}

}  // namespace

int main() {
  const std::vector<std::pair<const char*, std::function<void(Outcome&)>>> criteria = {
      {"CYBE symbolic, perturbed control rejected", c1},
      {"Dolan-Grady relations give -64*G(1) with zero residual", c2},
      {"FRT Onsager side N=1..3, extracted relations equal the printed ones", c3},
      {"FRT alternative side N=1..3 with symbolic betas", c4},
      {"FRT series to total degree 8", c5},
      {"charges commute for N<=4, generating function matches for N<=3", c6},
      {"quotient coherence: S_N, dav2 for |p|<=6, U-polynomials for p<=10", c7},
      {"isomorphism round trips, intertwining, fixtures, triangularity", c8},
      {"beta-alpha diagram for N<=4 and derived betas", c9},
      {"quartic presentations and PBW confluence", c10},
      {"representations for N=1 and N=2", c11},
      {"aw(3) constants fitted and compared with the printed set", c12},
      {"property suites, 500 cases each", c13},
  };
  int failures = 0, k = 0;
  for (const auto& [name, fn] : criteria) {
    ++k;
    Outcome o;
    auto t0 = std::chrono::steady_clock::now();
    try {
      fn(o);
    } catch (const std::exception& e) {
      o.need(false, std::string("exception: ") + e.what());
    }
    double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    failures += !o.ok;
    std::cout << (o.ok ? "PASS" : "FAIL") << " criterion " << k << ": " << name;
    std::cout.precision(3);
    std::cout << " (" << std::fixed << s << " s)";
    if (!o.ok) std::cout << " -- " << o.why.str();
    std::cout << std::endl;
  }
  return failures;
}
