#include "onsager/apresentation.hpp"

#include <gmpxx.h>

#include <sstream>

#include "onsager/errors.hpp"

namespace onsager {

namespace {

using AL = AElem<LaurentPoly>;
using OL = OElem<LaurentPoly>;

mpz_class binom(long n, long k) {
  if (k < 0 || k > n) return 0;
  mpz_class r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return r;
}

mpz_class fact(long n) {
  mpz_class r;
  mpz_fac_ui(r.get_mpz_t(), static_cast<unsigned long>(n));
  return r;
}

Scalar pow2(int e) {
  mpq_class q(1);
  if (e >= 0)
    mpz_mul_2exp(q.get_num_mpz_t(), q.get_num_mpz_t(), static_cast<unsigned long>(e));
  else
    mpz_mul_2exp(q.get_den_mpz_t(), q.get_den_mpz_t(), static_cast<unsigned long>(-e));
  return Scalar(q);
}

LaurentPoly truncate(const LaurentPoly& p, Symbol u, int degree) {
  LaurentPoly r;
  for (const auto& [m, c] : p.terms())
    if (m.exponent(u) <= degree) r += LaurentPoly(m, c);
  return r;
}

AL truncate(const AL& x, Symbol u, int degree) {
  AL r;
  for (const auto& [s, c] : x.terms()) r.add(s, truncate(c, u, degree));
  return r;
}

std::string idx(const std::string& base, int k) { return base + std::to_string(k); }

}  // namespace

AltSym AltSym::wm(int k) {
  if (k < 0) throw InputError("W_{-k} needs k >= 0");
  return {Kind::Wm, k};
}
AltSym AltSym::wp(int k) {
  if (k < 0) throw InputError("W_{k+1} needs k >= 0");
  return {Kind::Wp, k};
}
AltSym AltSym::gt(int k) {
  if (k < 0) throw InputError("Gt_{k+1} needs k >= 0");
  return {Kind::Gt, k};
}

std::string AltSym::to_string() const {
  switch (kind) {
    case Kind::Wm: return "W(" + std::to_string(-index) + ")";
    case Kind::Wp: return "W(" + std::to_string(index + 1) + ")";
    case Kind::Gt: break;
  }
  return "Gt(" + std::to_string(index) + ")";
}

void AltAlgebra::basis_bracket(Sym x, Sym y, BasisTerms<Sym>& out) const {
  using K = AltSym::Kind;
  if (x.kind == y.kind) return;
  long sign = 1;
  // Order the pair as (Wm, Wp), (Gt, Wm) or (Wp, Gt).
  auto canonical = [](K a, K b) {
    return (a == K::Wm && b == K::Wp) || (a == K::Gt && b == K::Wm) || (a == K::Wp && b == K::Gt);
  };
  if (!canonical(x.kind, y.kind)) {
    std::swap(x, y);
    sign = -1;
  }
  if (x.kind == K::Wm) {
    out.push(AltSym::gt(x.index + y.index), sign * g_);
  } else if (x.kind == K::Gt) {
    int s = x.index + y.index;
    out.push(AltSym::wm(s + 1), sign * w_);
    out.push(AltSym::wp(s), -sign * w_);
  } else {
    int s = x.index + y.index;
    out.push(AltSym::wp(s + 1), sign * w_);
    out.push(AltSym::wm(s), -sign * w_);
  }
}

void AltAlgebra::basis_auto(Auto g, Sym x, BasisTerms<Sym>& out) const {
  using K = AltSym::Kind;
  if (x.kind == K::Gt) {
    out.push(x, -1);
    return;
  }
  switch (g) {
    case Auto::Phi:
      out.push(x.kind == K::Wm ? AltSym::wp(x.index) : AltSym::wm(x.index), 1);
      return;
    case Auto::Tau0:
      if (x.kind == K::Wm) {
        out.push(x, 1);
      } else {
        out.push(AltSym::wm(x.index + 1), 2);
        out.push(x, -1);
      }
      return;
    case Auto::Tau1:
      if (x.kind == K::Wp) {
        out.push(x, 1);
      } else {
        out.push(AltSym::wp(x.index + 1), 2);
        out.push(x, -1);
      }
      return;
  }
}

Scalar conversion_coeff(int p, int k) {
  if (p < 0 || 2 * p > k) return Scalar(0);
  Scalar c = pow2(k - 2 * p) * Scalar(mpq_class(binom(k - p, p)));
  return p % 2 ? -c : c;
}

AL to_alt_symbol(OnsagerSym s) {
  AL r;
  if (s.kind == OnsagerSym::Kind::G) {
    const int k = s.index - 1;
    for (int p = 0; 2 * p <= k; ++p) r.add(AltSym::gt(k - 2 * p), Scalar(-1, 4) * conversion_coeff(p, k));
    return r;
  }
  const bool plus = s.index >= 1;
  const int k = plus ? s.index - 1 : -s.index;
  auto lead = plus ? AltSym::wp : AltSym::wm;
  auto tail = plus ? AltSym::wm : AltSym::wp;
  for (int p = 0; 2 * p <= k; ++p) r.add(lead(k - 2 * p), conversion_coeff(p, k));
  for (int p = 0; 2 * p <= k - 1; ++p) r.add(tail(k - 2 * p - 1), -conversion_coeff(p, k - 1));
  return r;
}

OL to_ons_symbol(AltSym s) {
  const int k = s.index;
  OL r;
  for (int p = 0; p <= k; ++p) {
    Scalar b(mpq_class(binom(k, p)));
    switch (s.kind) {
      case AltSym::Kind::Wm: r += A<LaurentPoly>(k - 2 * p, pow2(-k) * b); break;
      case AltSym::Kind::Wp: r += A<LaurentPoly>(k + 1 - 2 * p, pow2(-k) * b); break;
      case AltSym::Kind::Gt: r += G<LaurentPoly>(2 * p - k - 1, pow2(2 - k) * b); break;
    }
  }
  return r;
}

AutoPoly<LaurentPoly> averaged_shift(int k, bool halved) {
  LaurentPoly c = halved ? LaurentPoly(Scalar(1, 2)) : LaurentPoly(1);
  AutoPoly<LaurentPoly> base{{{c, kTau0Phi}, {c, kTau1Phi}}};
  return AutoPoly<LaurentPoly>::power(base, k);
}

QuotientA::QuotientA(int n, std::vector<LaurentPoly> betas)
    : n_(n), betas_(std::move(betas)), cache_(std::make_shared<Cache>()) {
  if (n_ < 1) throw InputError("quotient order N must be >= 1");
  if (static_cast<int>(betas_.size()) != n_ + 1)
    throw InputError("quotient needs N+1 beta coefficients, got " + std::to_string(betas_.size()));
  const LaurentPoly& top = betas_.back();
  if (top.is_zero() || !top.is_monomial()) throw InputError("beta_N must be a nonzero rational or a monomial");
  inv_top_ = top.inverse();
}

QuotientA QuotientA::symbolic(int n) {
  if (n < 1) throw InputError("quotient order N must be >= 1");
  std::vector<LaurentPoly> b;
  for (int k = 0; k <= n; ++k) b.push_back(LaurentPoly::var(idx("beta", k)));
  return QuotientA(n, std::move(b));
}

const LaurentPoly& QuotientA::beta(int k) const {
  return (k < 0 || k > n_) ? zero_ : betas_[static_cast<std::size_t>(k)];
}

std::vector<AltSym> QuotientA::basis() const {
  std::vector<AltSym> b;
  for (int k = 0; k < n_; ++k) b.push_back(AltSym::wm(k));
  for (int k = 0; k < n_; ++k) b.push_back(AltSym::wp(k));
  for (int k = 0; k < n_; ++k) b.push_back(AltSym::gt(k));
  return b;
}

AL QuotientA::reduce_symbol(AltSym s) const {
  if (is_normal(s)) return AL(s);
  {
    std::lock_guard<std::mutex> lock(cache_->mu);
    auto it = cache_->memo.find(s);
    if (it != cache_->memo.end()) return it->second;
  }
  // sum_k beta_k X(k + p) = 0 with p = index - N, solved for the top term.
  const int p = s.index - n_;
  AL raw;
  for (int k = 0; k < n_; ++k) raw.add(AltSym{s.kind, k + p}, -(inv_top_ * betas_[static_cast<std::size_t>(k)]));
  AL r = reduce(raw);
  std::lock_guard<std::mutex> lock(cache_->mu);
  cache_->memo.emplace(s, r);
  return r;
}

LaurentPoly big_u(Symbol u) { return Scalar(1, 2) * (LaurentPoly::var(u) + LaurentPoly::var(u, -1)); }

LaurentPoly QuotientA::ptilde(Symbol u) const {
  LaurentPoly U = big_u(u), acc;
  for (int p = n_; p >= 0; --p) acc = acc * U + beta(p);
  return acc;
}

LaurentPoly QuotientA::ftilde(int k, Symbol u) const {
  LaurentPoly U = big_u(u), acc;
  for (int p = n_; p >= k + 1; --p) acc = acc * U + beta(p);
  return acc;
}

std::string QuotientA::describe() const {
  std::ostringstream os;
  os << "N=" << n_ << " betas=(";
  for (std::size_t k = 0; k < betas_.size(); ++k) os << (k ? ", " : "") << betas_[k].to_string();
  os << ")";
  return os.str();
}

LaurentPoly u_inverse_power_series(int k, Symbol u, int degree) {
  LaurentPoly r;
  for (int p = 0; 2 * p + k + 1 <= degree; ++p)
    r += LaurentPoly(Monomial(u, 2 * p + k + 1), Scalar(2) * conversion_coeff(p, 2 * p + k));
  return r;
}

std::vector<LaurentPoly> beta_from_alpha(const QuotientO& q) {
  const int N = q.N();
  OL rel;
  for (int n = -N; n <= N; ++n) rel += A<LaurentPoly>(-n, q.alpha(n));
  AL img = convert_to_alt(rel);
  std::vector<LaurentPoly> b(static_cast<std::size_t>(N + 1));
  for (const auto& [s, c] : img.terms()) {
    if (s.kind != AltSym::Kind::Wm || s.index > N)
      throw InputError("image of the alpha relation leaves the W_{-k} span at " + s.to_string());
    b[static_cast<std::size_t>(s.index)] = c;
  }
  if (b.back().is_zero()) throw InputError("beta_N vanishes");
  return b;
}

LaurentPoly beta_formula(const QuotientO& q, int k) {
  const int N = q.N();
  LaurentPoly acc;
  if (k % 2 == 0) {
    const int j = k / 2;
    for (int p = j; p <= N / 2; ++p) {
      if (p == 0) {
        acc += q.alpha(0);
        continue;
      }
      Scalar t(mpq_class(mpz_class(2 * p * fact(j + p - 1)), fact(p - j)));
      if ((p - j) % 2) t = -t;
      acc += t * q.alpha(2 * p);
    }
  } else {
    const int j = (k - 1) / 2;
    for (int p = j + 1; p <= (N + 1) / 2; ++p) {
      Scalar t(mpq_class(mpz_class((2 * p - 1) * fact(j + p - 1)), fact(p - j - 1)));
      if ((p - j - 1) % 2) t = -t;
      acc += t * q.alpha(2 * p - 1);
    }
  }
  return pow2(k) * Scalar(mpq_class(mpz_class(1), fact(k))) * acc;
}

QuotientA quotient_a_from(const QuotientO& q) { return QuotientA(q.N(), beta_from_alpha(q)); }

Report verify_beta_alpha(const QuotientO& q) {
  Report rep("beta-alpha");
  rep.set_param("quotient", q.describe());
  const int N = q.N();
  std::vector<LaurentPoly> beta;
  try {
    beta = beta_from_alpha(q);
  } catch (const InputError& e) {
    rep.add("beta-alpha.span", false, e.what());
    return rep;
  }
  {
    std::string shown;
    for (std::size_t k = 0; k < beta.size(); ++k) shown += (k ? ", " : "") + beta[k].to_string();
    rep.add(Check{"beta-alpha.span", Status::pass, "beta = (" + shown + ")", 0.0});
  }
  QuotientA qa(N, beta);
  rep.timed([&] {
    OL rel;
    for (int n = -N; n <= N; ++n) rel += A<LaurentPoly>(n + 1, q.alpha(n));
    AL want;
    for (int k = 0; k <= N; ++k) want.add(AltSym::wp(k), beta[static_cast<std::size_t>(k)]);
    AL diff = convert_to_alt(rel) - want;
    return Check{"beta-alpha.second", diff.is_zero() ? Status::pass : Status::fail, diff.to_string(), 0.0};
  });
  for (int k = 0; k <= N; ++k) {
    LaurentPoly f = beta_formula(q, k), d = f - beta[static_cast<std::size_t>(k)];
    std::string note = d.is_zero() ? (k == 0 ? "p=k=0 term taken as alpha_0" : "")
                                   : "formula " + f.to_string() + " vs image " + beta[static_cast<std::size_t>(k)].to_string();
    rep.add(Check{"beta-alpha.formula.beta" + std::to_string(k), d.is_zero() ? Status::pass : Status::discrepancy, note,
                  0.0});
  }
  rep.timed([&] {
    std::vector<OnsagerSym> syms;
    for (int n = -N - 3; n <= N + 3; ++n) syms.push_back(OnsagerSym::a(n));
    for (int m = 1; m <= N + 3; ++m) syms.push_back(OnsagerSym::g(m));
    for (auto s : syms) {
      OL x(s);
      AL d = qa.reduce(convert_to_alt(x)) - qa.reduce(convert_to_alt(q.reduce(x)));
      if (!d.is_zero()) return Check{"beta-alpha.coherence", Status::fail, s.to_string() + ": " + d.to_string(), 0.0};
    }
    return Check{"beta-alpha.coherence", Status::pass, "", 0.0};
  });
  rep.timed([&] {
    auto basis = q.basis();
    for (auto x : basis)
      for (auto y : basis) {
        AL lhs = qa.reduce(convert_to_alt(q.bracket(OL(x), OL(y))));
        AL rhs = qa.bracket(convert_to_alt(OL(x)), convert_to_alt(OL(y)));
        if (!(lhs == rhs))
          return Check{"beta-alpha.bracket", Status::fail, "[" + x.to_string() + "," + y.to_string() + "]", 0.0};
      }
    return Check{"beta-alpha.bracket", Status::pass, "", 0.0};
  });
  return rep;
}

OperatorMatrix<AltSym> build_B_alt(const QuotientA& qa, Symbol u) {
  AL wplus, wminus, gt;
  for (int k = 0; k < qa.N(); ++k) {
    LaurentPoly f = qa.ftilde(k, u);
    wplus.add(AltSym::wm(k), f);
    wminus.add(AltSym::wp(k), f);
    gt.add(AltSym::gt(k), f);
  }
  LaurentPoly U = LaurentPoly::var(u), Ui = LaurentPoly::var(u, -1);
  OperatorMatrix<AltSym> b;
  b.num = Matrix<AL>(2, 2);
  b.num(0, 0) = LaurentPoly(Scalar(-1, 4)) * gt;
  b.num(0, 1) = Ui * wplus - wminus;
  b.num(1, 0) = wminus - U * wplus;
  b.num(1, 1) = LaurentPoly(Scalar(1, 4)) * gt;
  b.den = 2 * qa.ptilde(u);
  b.param = u;
  return b;
}

Report verify_iso(int bracket_range, int roundtrip_range, int triangular_range) {
  Report rep("iso");
  rep.set_param("K", std::to_string(bracket_range));
  rep.set_param("roundtrip", std::to_string(roundtrip_range));
  const OnsagerAlgebra ons;
  const AltAlgebra alt;

  auto o_syms = [](int K) {
    std::vector<OnsagerSym> v;
    for (int n = -K; n <= K; ++n) v.push_back(OnsagerSym::a(n));
    for (int m = 1; m <= K; ++m) v.push_back(OnsagerSym::g(m));
    return v;
  };
  auto a_syms = [](int K) {
    std::vector<AltSym> v;
    for (int k = 0; k <= K; ++k) {
      v.push_back(AltSym::wm(k));
      v.push_back(AltSym::wp(k));
      v.push_back(AltSym::gt(k));
    }
    return v;
  };

  rep.timed([&] {
    auto syms = o_syms(bracket_range);
    for (auto x : syms)
      for (auto y : syms) {
        AL d = convert_to_alt(ons.bracket(OL(x), OL(y))) - alt.bracket(convert_to_alt(OL(x)), convert_to_alt(OL(y)));
        if (!d.is_zero())
          return Check{"iso.homomorphism", Status::fail, "[" + x.to_string() + "," + y.to_string() + "]: " + d.to_string(),
                       0.0};
      }
    return Check{"iso.homomorphism", Status::pass, "", 0.0};
  });
  rep.timed([&] {
    auto syms = a_syms(bracket_range);
    for (auto x : syms)
      for (auto y : syms) {
        OL d = convert_to_ons(alt.bracket(AL(x), AL(y))) - ons.bracket(convert_to_ons(AL(x)), convert_to_ons(AL(y)));
        if (!d.is_zero())
          return Check{"iso.inverse-homomorphism", Status::fail,
                       "[" + x.to_string() + "," + y.to_string() + "]: " + d.to_string(), 0.0};
      }
    return Check{"iso.inverse-homomorphism", Status::pass, "", 0.0};
  });
  rep.timed([&] {
    for (auto s : o_syms(roundtrip_range))
      if (!(convert_to_ons(convert_to_alt(OL(s))) == OL(s)))
        return Check{"iso.roundtrip", Status::fail, s.to_string(), 0.0};
    for (auto s : a_syms(roundtrip_range))
      if (!(convert_to_alt(convert_to_ons(AL(s))) == AL(s)))
        return Check{"iso.roundtrip", Status::fail, s.to_string(), 0.0};
    return Check{"iso.roundtrip", Status::pass, "", 0.0};
  });
  rep.timed([&] {
    for (Auto g : {Auto::Phi, Auto::Tau0, Auto::Tau1})
      for (auto s : o_syms(bracket_range)) {
        AutoWord w{{g}};
        AL d = convert_to_alt(ons.apply(w, OL(s))) - alt.apply(w, convert_to_alt(OL(s)));
        if (!d.is_zero())
          return Check{"iso.automorphisms", Status::fail, w.to_string() + " on " + s.to_string() + ": " + d.to_string(),
                       0.0};
      }
    return Check{"iso.automorphisms", Status::pass, "", 0.0};
  });

  // Triangularity: W_{-k} against A_0, A_j + A_{-j}; W_{k+1} against A_1,
  // A_{j+1} + A_{1-j}; Gt_{k+1} against G_j.
  rep.timed([&] {
    for (int k = 0; k <= triangular_range; ++k) {
      for (int fam = 0; fam < 3; ++fam) {
        AltSym s = fam == 0 ? AltSym::wm(k) : fam == 1 ? AltSym::wp(k) : AltSym::gt(k);
        OL img = convert_to_ons(AL(s));
        const int off = fam == 1 ? 1 : 0;
        std::string why;
        for (const auto& [t, c] : img.terms()) {
          if (fam == 2) {
            if (t.kind != OnsagerSym::Kind::G || t.index > k + 1) why = "outside span at " + t.to_string();
            continue;
          }
          if (t.kind != OnsagerSym::Kind::A) {
            why = "G term " + t.to_string();
            continue;
          }
          const int j = t.index - off;
          if (j > k || j < -k) why = "index beyond k at " + t.to_string();
          if (!(img.coeff(OnsagerSym::a(off - j)) == c)) why = "asymmetric at " + t.to_string();
        }
        LaurentPoly diag = fam == 2 ? img.coeff(OnsagerSym::g(k + 1)) : img.coeff(OnsagerSym::a(k + off));
        if (diag.is_zero()) why = "zero diagonal";
        if (!why.empty())
          return Check{"iso.triangular", Status::fail, s.to_string() + ": " + why, 0.0};
      }
    }
    return Check{"iso.triangular", Status::pass, "three triangular bases up to index " + std::to_string(triangular_range),
                 0.0};
  });
  rep.timed([&] {
    for (int k = 0; k <= 8; ++k) {
      auto S = averaged_shift(k);
      AL w0 = apply_autopoly(alt, S, Wm<LaurentPoly>(0));
      AL w1 = apply_autopoly(alt, S, Wp<LaurentPoly>(0));
      AL g = alt.bracket(Wm<LaurentPoly>(0), w1);
      if (!(w0 == Wm<LaurentPoly>(k)) || !(w1 == Wp<LaurentPoly>(k)) || !(g == Gt<LaurentPoly>(k)))
        return Check{"iso.averaged-shift", Status::fail, "k=" + std::to_string(k), 0.0};
    }
    return Check{"iso.averaged-shift", Status::pass, "", 0.0};
  });
  rep.timed([&] {
    AL w0 = Wm<LaurentPoly>(0), w1 = Wp<LaurentPoly>(0);
    AL c = alt.bracket(w0, w1);
    AL d0 = alt.bracket(w0, alt.bracket(w0, c)) - LaurentPoly(16) * c;
    AL d1 = alt.bracket(w1, alt.bracket(w1, -c)) + LaurentPoly(16) * c;
    bool ok = d0.is_zero() && d1.is_zero();
    return Check{"iso.dolan-grady-w", ok ? Status::pass : Status::fail, ok ? "" : d0.to_string() + " | " + d1.to_string(),
                 0.0};
  });
  rep.timed([&] {
    auto syms = a_syms(6);
    for (auto x : syms)
      for (auto y : syms)
        for (auto z : syms) {
          AL a(x), b(y), c(z);
          AL j = alt.bracket(a, alt.bracket(b, c)) + alt.bracket(b, alt.bracket(c, a)) +
                 alt.bracket(c, alt.bracket(a, b));
          if (!j.is_zero())
            return Check{"iso.jacobi", Status::fail, x.to_string() + "," + y.to_string() + "," + z.to_string(), 0.0};
        }
    return Check{"iso.jacobi", Status::pass, "", 0.0};
  });
  return rep;
}

Report verify_sprime(const QuotientA& qa) {
  Report rep("sprime");
  rep.set_param("quotient", qa.describe());
  const int N = qa.N();
  for (int pass = 0; pass < 2; ++pass) {
    const bool rescaled = pass == 1;
    rep.timed([&] {
      AutoPoly<LaurentPoly> s;
      for (int n = 0; n <= N; ++n) {
        LaurentPoly c = rescaled ? pow2(-n) * qa.beta(n) : qa.beta(n);
        const AutoPoly<LaurentPoly> shift = averaged_shift(n, false);
        for (const auto& [k, w] : shift.terms) s.terms.emplace_back(c * k, w);
      }
      AL r0 = qa.reduce(apply_autopoly(qa.algebra(), s, Wm<LaurentPoly>(0)));
      AL r1 = qa.reduce(apply_autopoly(qa.algebra(), s, Wp<LaurentPoly>(0)));
      bool ok = r0.is_zero() && r1.is_zero();
      std::string id = rescaled ? "sprime.rescaled" : "sprime.literal";
      Status st = ok ? Status::pass : (rescaled ? Status::fail : Status::discrepancy);
      std::string note =
          ok ? "" : "S'(W0) = " + r0.to_string() + "; S'(W1) = " + r1.to_string();
      return Check{id, st, note, 0.0};
    });
  }
  return rep;
}

Report verify_ideal_a(const QuotientA& qa, int pmax) {
  Report rep("quotient-a");
  rep.set_param("quotient", qa.describe());
  rep.timed([&] {
    const int N = qa.N();
    for (int p = 0; p <= pmax; ++p)
      for (auto kind : {AltSym::Kind::Wm, AltSym::Kind::Wp, AltSym::Kind::Gt}) {
        AL rel;
        for (int k = 0; k <= N; ++k) rel.add(AltSym{kind, k + p}, qa.beta(k));
        if (!qa.reduce(rel).is_zero())
          return Check{"quotient-a.ideal", Status::fail, "relation does not reduce to 0", 0.0};
        for (int i = 0; i <= N + pmax; ++i)
          for (auto zk : {AltSym::Kind::Wm, AltSym::Kind::Wp, AltSym::Kind::Gt}) {
            AL z(AltSym{zk, i});
            AL r = qa.bracket(rel, z);
            if (!r.is_zero())
              return Check{"quotient-a.ideal", Status::fail,
                           "[relation p=" + std::to_string(p) + ", " + AltSym{zk, i}.to_string() + "] = " + r.to_string(),
                           0.0};
          }
      }
    return Check{"quotient-a.ideal", Status::pass, "", 0.0};
  });
  return rep;
}

Report verify_frt_series_alt(int degree, const AltAlgebra& alg) {
  if (degree < 2) throw InputError("series truncation degree must be >= 2");
  Report rep("frt-series-alt");
  rep.set_param("D", std::to_string(degree));

  rep.timed([&] {
    Symbol u("u");
    const int deg = 16;
    for (int k = 0; k <= 4; ++k) {
      LaurentPoly prod = truncate(big_u(u).pow(k + 1) * u_inverse_power_series(k, u, deg + k + 1), u, deg);
      if (!(prod == LaurentPoly(1)))
        return Check{"frt-series-alt.u-inverse", Status::fail, "k=" + std::to_string(k) + ": " + prod.to_string(), 0.0};
    }
    return Check{"frt-series-alt.u-inverse", Status::pass, "U^{k+1} U^{-k-1} = 1 to u^16, k <= 4", 0.0};
  });

  rep.timed([&] {
    Symbol x("x"), y("y");
    auto cur = [&](AltSym::Kind kind, Symbol s) {
      AL c;
      for (int k = 0; k < degree; ++k) c.add(AltSym{kind, k}, LaurentPoly::var(s, k + 1));
      return c;
    };
    using K = AltSym::Kind;
    AL wpx = cur(K::Wm, x), wpy = cur(K::Wm, y), wmx = cur(K::Wp, x), wmy = cur(K::Wp, y);
    AL gx = cur(K::Gt, x), gy = cur(K::Gt, y);
    LaurentPoly X = LaurentPoly::var(x), Y = LaurentPoly::var(y), yx = Y - X, XY = X * Y;
    LaurentPoly c16(16);
    Matrix<AL> res(1, 6);
    res(0, 0) = yx * alg.bracket(wpx, wmy) - XY * (gy - gx);
    res(0, 1) = yx * alg.bracket(gx, wpy) + c16 * (Y * wpx - X * wpy - XY * wmx + XY * wmy);
    res(0, 2) = yx * alg.bracket(gx, wmy) - c16 * (Y * wmx - X * wmy - XY * wpx + XY * wpy);
    res(0, 3) = alg.bracket(wpx, wpy);
    res(0, 4) = alg.bracket(wmx, wmy);
    res(0, 5) = alg.bracket(gx, gy);
    std::string bad = first_bad_coefficient(res, x, y, degree);
    return Check{"frt-series-alt.components.D" + std::to_string(degree), bad.empty() ? Status::pass : Status::fail, bad,
                 0.0};
  });

  rep.timed([&] {
    Symbol u("u"), v("v");
    auto make = [&](Symbol s) {
      AL wp, wm, gt;
      for (int k = 0; k <= degree; ++k) {
        LaurentPoly ser = u_inverse_power_series(k, s, degree + 1);
        if (ser.is_zero()) continue;
        wp.add(AltSym::wm(k), ser);
        wm.add(AltSym::wp(k), ser);
        gt.add(AltSym::gt(k), ser);
      }
      LaurentPoly S = LaurentPoly::var(s), Si = LaurentPoly::var(s, -1), h(Scalar(1, 2));
      OperatorMatrix<AltSym> b;
      b.num = Matrix<AL>(2, 2);
      b.num(0, 0) = truncate(LaurentPoly(Scalar(-1, 8)) * gt, s, degree);
      b.num(0, 1) = truncate(h * (Si * wp - wm), s, degree);
      b.num(1, 0) = truncate(h * (wm - S * wp), s, degree);
      b.num(1, 1) = truncate(LaurentPoly(Scalar(1, 8)) * gt, s, degree);
      b.den = LaurentPoly(1);
      b.param = s;
      return b;
    };
    auto res = detail::frt_residual(alg, make(u), make(v), r_matrix);
    std::string bad = first_bad_coefficient(res, u, v, degree);
    return Check{"frt-series-alt.matrix.D" + std::to_string(degree), bad.empty() ? Status::pass : Status::fail, bad,
                 0.0};
  });
  return rep;
}

}  // namespace onsager
