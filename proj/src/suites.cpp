#include "onsager/suites.hpp"

#include <functional>

namespace onsager {

namespace {

std::map<Symbol, LaurentPoly> images(const Bindings_& b) {
  std::map<Symbol, LaurentPoly> m;
  for (const auto& [k, v] : b) m[Symbol(k)] = LaurentPoly(v);
  return m;
}

std::vector<int> orders(const SuiteOptions& o, int lo, int hi) {
  if (o.N) {
    if (*o.N < 1) throw InputError("N must be >= 1");
    return {*o.N};
  }
  std::vector<int> v;
  for (int n = lo; n <= hi; ++n) v.push_back(n);
  return v;
}

ChargeParams charge_params(const Bindings_& b) {
  auto c = ChargeParams::symbolic();
  auto m = images(b);
  return {c.kappa.substitute(m), c.kappas.substitute(m), c.mu.substitute(m)};
}

void frt_onsager(Report& rep, const SuiteOptions& o) {
  Symbol u("u"), v("v");
  for (int n : orders(o, 1, 3)) {
    QuotientO q = make_quotient(n, o.params);
    rep.timed([&] { return verify_frt(q, build_B_onsager(q, u), build_B_onsager(q, v), "frt-onsager.N" + std::to_string(n)); });
    if (n <= 2)
      rep.timed([&] {
        auto ex = extract_relations_frt(q);
        std::string id = "frt-onsager.N" + std::to_string(n) + ".extracted-vs-printed";
        if (!ex.ok) return Check{id, Status::fail, "extraction system not uniquely solvable", 0.0};
        return compare_with_golden(ex.relations, n, o.params, id);
      });
  }
}

void frt_alt(Report& rep, const SuiteOptions& o) {
  Symbol u("u"), v("v");
  for (int n : orders(o, 1, 3)) {
    QuotientA qa = make_quotient_a(n, o.params);
    rep.timed([&] { return verify_frt(qa, build_B_alt(qa, u), build_B_alt(qa, v), "frt-alt.N" + std::to_string(n)); });
  }
}

Report rep_suite(const SuiteOptions& o) {
  std::vector<LaurentPoly> pts;
  for (const auto& w : o.w) pts.emplace_back(w);
  if (pts.empty()) pts = symbolic_points(o.N.value_or(1));
  if (o.N && *o.N != static_cast<int>(pts.size()))
    throw InputError("--N does not match the number of --w points");
  return rep_check(rep_build(pts));
}

using Runner = std::function<void(Report&, const SuiteOptions&)>;

const std::vector<std::pair<std::string, Runner>>& runners() {
  static const std::vector<std::pair<std::string, Runner>> r = {
      {"cybe", [](Report& rep, const SuiteOptions&) { rep.absorb(verify_cybe(), ""); }},
      {"dg", [](Report& rep, const SuiteOptions&) { rep.absorb(verify_dolan_grady(), ""); }},
      {"frt-onsager", frt_onsager},
      {"frt-alt", frt_alt},
      {"frt-series",
       [](Report& rep, const SuiteOptions& o) {
         int d = o.trunc.value_or(8);
         rep.set_param("D", std::to_string(d));
         rep.absorb(verify_frt_series_onsager(d), "");
         rep.absorb(verify_frt_series_alt(d), "");
       }},
      {"sn",
       [](Report& rep, const SuiteOptions& o) {
         for (int n : orders(o, 1, 4)) {
           QuotientO q = make_quotient(n, o.params);
           rep.absorb(verify_sn(q), "");
           rep.absorb(verify_dav2(q, 6), "");
           rep.absorb(verify_sprime(make_quotient_a(n, o.params)), "N" + std::to_string(n) + ".");
         }
       }},
      {"charges",
       [](Report& rep, const SuiteOptions& o) {
         ChargeParams c = charge_params(o.params);
         for (int n : orders(o, 1, 4)) {
           QuotientO q = make_quotient(n, o.params);
           rep.absorb(verify_commuting(q, c), "");
           if (o.N || n <= 3) rep.absorb(verify_expand_b(q, c), "");
         }
       }},
      {"reD",
       [](Report& rep, const SuiteOptions& o) {
         ChargeParams c = charge_params(o.params);
         std::vector<std::string> which{o.interpretation};
         if (o.interpretation == "all") which = reD_interpretations();
         for (const auto& i : which) {
           bool known = false;
           for (const auto& k : reD_interpretations()) known |= k == i;
           if (!known) throw InputError("unknown interpretation '" + i + "'");
           rep.absorb(verify_reD(c, i), "");
         }
       }},
      {"iso", [](Report& rep, const SuiteOptions&) { rep.absorb(verify_iso(), ""); }},
      {"beta-alpha",
       [](Report& rep, const SuiteOptions& o) {
         for (int n : orders(o, 1, 4)) rep.absorb(verify_beta_alpha(make_quotient(n, o.params)), "N" + std::to_string(n) + ".");
       }},
      {"quartic",
       [](Report& rep, const SuiteOptions& o) {
         for (int n : orders(o, 1, 2)) rep.absorb(verify_quartic(make_quotient(n, o.params)), "N" + std::to_string(n) + ".");
       }},
      {"aw3-fit",
       [](Report& rep, const SuiteOptions& o) {
         auto get = [&](const char* name) {
           auto it = o.params.find(name);
           return it == o.params.end() ? LaurentPoly::var(name) : LaurentPoly(it->second);
         };
         auto fit = aw3_fit(get("a0"), get("a1"), get("b0"), get("b1"), make_quotient(1, o.params));
         for (const auto& [k, v] : fit.report.params()) rep.set_param(k, v);
         rep.absorb(fit.report, "");
       }},
      {"rep", [](Report& rep, const SuiteOptions& o) { rep.absorb(rep_suite(o), ""); }},
      {"upoly",
       [](Report& rep, const SuiteOptions& o) {
         for (int n : orders(o, 1, 3)) rep.absorb(verify_upoly(make_quotient(n, o.params), 10), "");
       }},
      {"fixtures-appendix-a", [](Report& rep, const SuiteOptions&) { rep.absorb(verify_fixtures(), ""); }},
  };
  return r;
}

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> v;
    for (const auto& [n, f] : runners()) v.push_back(n);
    v.push_back("all");
    return v;
  }();
  return names;
}

QuotientO make_quotient(int n, const Bindings_& b) {
  QuotientO s = QuotientO::symbolic(n);
  if (b.empty()) return s;
  auto m = images(b);
  std::vector<LaurentPoly> a;
  for (const auto& x : s.alphas()) a.push_back(x.substitute(m));
  return QuotientO(n, a);
}

QuotientA make_quotient_a(int n, const Bindings_& b) {
  QuotientA s = QuotientA::symbolic(n);
  if (b.empty()) return s;
  auto m = images(b);
  std::vector<LaurentPoly> a;
  for (const auto& x : s.betas()) a.push_back(x.substitute(m));
  return QuotientA(n, a);
}

Report run_suite(const std::string& name, const SuiteOptions& opts) {
  Report rep(name);
  if (opts.N) rep.set_param("N", std::to_string(*opts.N));
  for (const auto& [k, v] : opts.params) rep.set_param(k, v.to_string());
  if (opts.trunc) rep.set_param("trunc", std::to_string(*opts.trunc));
  if (!opts.w.empty()) {
    std::string s;
    for (const auto& x : opts.w) s += (s.empty() ? "" : ",") + x.to_string();
    rep.set_param("w", s);
  }
  if (name == "reD") rep.set_param("interpretation", opts.interpretation);
  if (name == "all") {
    for (const auto& [n, f] : runners()) {
      Report sub(n);
      f(sub, opts);
      rep.absorb(sub, n + "/");
    }
    return rep;
  }
  for (const auto& [n, f] : runners())
    if (n == name) {
      f(rep, opts);
      return rep;
    }
  std::string known;
  for (const auto& s : suite_names()) known += (known.empty() ? "" : ", ") + s;
  throw InputError("unknown suite '" + name + "' (known: " + known + ")");
}

const std::vector<GoldenRelation>& golden_relations(int n) {
  static const std::vector<GoldenRelation> o1 = {
      {"[G(1), A(0)]", "2*alpha*A(0) + 4*A(1)"},
      {"[A(1), G(1)]", "2*alpha*A(1) + 4*A(0)"},
      {"[A(1), A(0)]", "4*G(1)"},
  };
  static const std::vector<GoldenRelation> o2 = {
      {"[A(0), A(-1)]", "4*G(1)"},
      {"[A(2), A(1)]", "4*G(1)"},
      {"[A(1), A(0)]", "4*G(1)"},
      {"[A(1), A(-1)]", "4*G(2)"},
      {"[A(2), A(0)]", "4*G(2)"},
      {"[A(2), A(-1)]", "4*(1 - alphap)*G(1) - 4*alpha*G(2)"},
      {"[G(1), A(0)]", "2*A(1) - 2*A(-1)"},
      {"[G(1), A(1)]", "2*A(2) - 2*A(0)"},
      {"[G(1), A(-1)]", "2*alpha*A(-1) + 2*(1 + alphap)*A(0) + 2*alpha*A(1) + 2*A(2)"},
      {"[G(1), A(2)]", "-2*A(-1) - 2*alpha*A(0) - 2*(1 + alphap)*A(1) - 2*alpha*A(2)"},
      {"[G(2), A(0)]", "2*alpha*A(-1) + 2*alphap*A(0) + 2*alpha*A(1) + 4*A(2)"},
      {"[G(2), A(1)]", "-4*A(-1) - 2*alpha*A(0) - 2*alphap*A(1) - 2*alpha*A(2)"},
      {"[G(2), A(-1)]", "2*(alphap - alpha*alpha)*A(-1) + 2*alpha*(1 - alphap)*A(0) + 2*(2 - alpha*alpha)*A(1) - 2*alpha*A(2)"},
      {"[G(2), A(2)]", "2*alpha*A(-1) + 2*(alpha*alpha - 2)*A(0) + 2*alpha*(alphap - 1)*A(1) + 2*(alpha*alpha - alphap)*A(2)"},
      {"[G(1), G(2)]", "0"},
  };
  static const std::vector<GoldenRelation> none;
  return n == 1 ? o1 : n == 2 ? o2 : none;
}

Check compare_with_golden(const std::vector<Relation>& rels, int n, const Bindings_& b, const std::string& id) {
  const auto& gold = golden_relations(n);
  if (gold.empty()) return Check{id, Status::fail, "no printed relations for N=" + std::to_string(n), 0.0};
  std::vector<bool> used(rels.size(), false);
  for (const auto& g : gold) {
    Expr lhs = parse_expr(g.lhs);
    if (lhs.kind != Expr::Kind::Bracket) throw InputError("golden lhs must be a bracket: " + g.lhs);
    auto x = eval_onsager(lhs.kids[0], b), y = eval_onsager(lhs.kids[1], b);
    if (x.size() != 1 || y.size() != 1) throw InputError("golden lhs must bracket two generators: " + g.lhs);
    OnsagerSym sx = x.terms().begin()->first, sy = y.terms().begin()->first;
    auto rhs = eval_onsager(parse_expr(g.rhs), b);
    bool found = false;
    for (std::size_t i = 0; i < rels.size() && !found; ++i) {
      const auto& r = rels[i];
      if (r.x == sx && r.y == sy) {
        if (!(r.rhs == rhs)) return Check{id, Status::fail, g.lhs + ": extracted " + r.rhs.to_string() + ", printed " + g.rhs, 0.0};
        found = used[i] = true;
      } else if (r.x == sy && r.y == sx) {
        if (!(-r.rhs == rhs)) return Check{id, Status::fail, g.lhs + ": extracted " + (-r.rhs).to_string() + ", printed " + g.rhs, 0.0};
        found = used[i] = true;
      }
    }
    if (!found) return Check{id, Status::fail, g.lhs + " missing from the extracted relations", 0.0};
  }
  for (std::size_t i = 0; i < rels.size(); ++i)
    if (!used[i]) return Check{id, Status::fail, "extracted relation not printed: " + rels[i].to_string(), 0.0};
  return Check{id, Status::pass, std::to_string(gold.size()) + " relations agree", 0.0};
}

const std::vector<Fixture>& appendix_fixtures() {
  static const std::vector<Fixture> f = {
      {true, "A(0)", "W(0)", "", ""},
      {true, "A(1)", "W(1)", "", ""},
      {true, "G(1)", "-1/4*Gt(0)", "", ""},
      {true, "A(-1)", "2*W(-1) - W(1)", "", ""},
      {true, "A(2)", "2*W(2) - W(0)", "", ""},
      {true, "G(2)", "-1/2*Gt(1)", "", ""},
      {true, "A(-2)", "4*W(-2) - W(0) - 2*W(2)", "", ""},
      {true, "A(3)", "4*W(3) - W(1) - 2*W(-1)", "", ""},
      {true, "G(3)", "-Gt(2) + 1/4*Gt(0)", "", ""},
      {false, "W(-1)", "1/2*(A(1) + A(-1))", "", ""},
      {false, "W(2)", "1/2*(A(0) + A(2))", "", ""},
      {false, "Gt(1)", "-2*G(2)", "", ""},
      {false, "W(-2)", "1/4*(A(2) + 2*A(0) + A(-2))", "", ""},
      {false, "W(2)", "1/4*(A(3) + 2*A(1) + A(-1))", "W(3)", ""},
      {false, "Gt(2)", "-G(3) - 2*G(1)", "", "-G(3) - G(1)"},
  };
  return f;
}

Report verify_fixtures() {
  Report rep("fixtures-appendix-a");
  int k = 0;
  for (const auto& fx : appendix_fixtures()) {
    ++k;
    std::string id = std::string("fixture.") + (fx.forward ? "forward." : "converse.") + std::to_string(k);
    if (fx.forward) {
      OElem<LaurentPoly> x = eval_onsager(parse_expr(fx.lhs));
      AElem<LaurentPoly> want = eval_alt(parse_expr(fx.rhs));
      AElem<LaurentPoly> got = convert_to_alt(x);
      bool ok = got == want;
      rep.add(Check{id, ok ? Status::pass : Status::fail,
                    fx.lhs + " = " + got.to_string() + (ok ? "" : " (printed " + fx.rhs + ")"), 0.0});
      continue;
    }
    auto holds = [](const std::string& l, const std::string& r) {
      return convert_to_ons(eval_alt(parse_expr(l))) == eval_onsager(parse_expr(r));
    };
    if (holds(fx.lhs, fx.rhs)) {
      rep.add(Check{id, Status::pass, fx.lhs + " = " + fx.rhs, 0.0});
      continue;
    }
    std::string l = fx.corrected_lhs.empty() ? fx.lhs : fx.corrected_lhs;
    std::string r = fx.corrected_rhs.empty() ? fx.rhs : fx.corrected_rhs;
    bool fixed = (!fx.corrected_lhs.empty() || !fx.corrected_rhs.empty()) && holds(l, r);
    std::string got = convert_to_ons(eval_alt(parse_expr(fx.lhs))).to_string();
    rep.add(Check{id, fixed ? Status::discrepancy : Status::fail,
                  "printed " + fx.lhs + " = " + fx.rhs + " is false (" + fx.lhs + " = " + got + ")" +
                      (fixed ? "; holds as " + l + " = " + r : ""),
                  0.0});
  }
  return rep;
}

}  // namespace onsager
