#pragma once

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "onsager/matrix.hpp"
#include "onsager/quotient.hpp"

namespace onsager {

/// Word in the normal-form basis symbols of a quotient; the empty word is 1.
using PBWWord = std::vector<OnsagerSym>;

/// Element of the enveloping algebra U(O_N) as a sparse combination of words.
/// Products are formed by concatenation; normal forms come from Envelope.
class EnvElem {
 public:
  using Terms = std::map<PBWWord, LaurentPoly>;

  EnvElem() = default;
  static EnvElem unit(const LaurentPoly& c = LaurentPoly(1));
  static EnvElem word(PBWWord w, const LaurentPoly& c = LaurentPoly(1));
  /// Degree-one element from a Lie element.
  static EnvElem lie(const OElem<LaurentPoly>& x);

  void add(const PBWWord& w, const LaurentPoly& c);
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  LaurentPoly coeff(const PBWWord& w) const;

  EnvElem& operator+=(const EnvElem& o);
  EnvElem& operator-=(const EnvElem& o);
  friend EnvElem operator+(EnvElem a, const EnvElem& b) { return a += b; }
  friend EnvElem operator-(EnvElem a, const EnvElem& b) { return a -= b; }
  EnvElem operator-() const;
  friend EnvElem operator*(const LaurentPoly& c, const EnvElem& x);
  /// Concatenation product, not normalized.
  friend EnvElem operator*(const EnvElem& x, const EnvElem& y);
  friend bool operator==(const EnvElem& a, const EnvElem& b) { return a.terms_ == b.terms_; }

  std::string to_string() const;

 private:
  Terms terms_;
};

/// PBW normal ordering in U(O_N). A word is normal when nondecreasing in the
/// basis order of the quotient. Each step rewrites one descent
/// x_b x_a -> x_a x_b + [x_b, x_a] with the reduced bracket.
class Envelope {
 public:
  enum class Strategy { leftmost, rightmost };
  explicit Envelope(const QuotientO& q, Strategy s = Strategy::leftmost);

  const QuotientO& quotient() const { return q_; }
  bool is_normal(const PBWWord& w) const;
  EnvElem normalize(const EnvElem& x) const;
  EnvElem gen(OnsagerSym s) const;
  /// Normalized product.
  EnvElem mul(const EnvElem& x, const EnvElem& y) const { return normalize(x * y); }
  EnvElem commutator(const EnvElem& x, const EnvElem& y) const { return normalize(x * y - y * x); }

 private:
  const EnvElem& normal_word(const PBWWord& w) const;
  QuotientO q_;
  Strategy strategy_;
  std::shared_ptr<std::map<PBWWord, EnvElem>> memo_;
};

/// N=1: the two cubic relations, alpha G1 + G2 = 0 and the quartic relation in
/// U(O_1). N=2: the two quintic relations. Both: the Dolan-Grady relations.
Report verify_quartic(const QuotientO& q);

struct AWConstants {
  RatFunc B, C0, C1, D0, D1;
};

/// The constants as printed alongside the aw(3) isomorphism.
AWConstants aw3_printed(const LaurentPoly& a0, const LaurentPoly& a1, const LaurentPoly& b0, const LaurentPoly& b1,
                        const LaurentPoly& alpha);

struct AW3Fit {
  bool solved = false;
  AWConstants constants;
  EnvElem k2;
  Report report{"aw3-fit"};
};

/// K0 = a0 A0 + b0, K1 = a1 A1 + b1, K2 = [K0, K1] in U(O_1), and the five
/// constants solved from [K2,K0] = B K0 + C1 K1 + D1, [K1,K2] = B K1 + C0 K0 + D0.
/// Also fits the inverse reading A_i = a_i K_i + b_i when a0, a1 are monomials.
AW3Fit aw3_fit(const LaurentPoly& a0, const LaurentPoly& a1, const LaurentPoly& b0, const LaurentPoly& b1,
               const QuotientO& q = QuotientO::symbolic(1));

/// Representation of O_N obtained from pi(B_1(u)) = sum_j r_{1,j+2}(u, w_j).
struct Representation {
  int N = 0;
  std::vector<LaurentPoly> points;
  std::vector<LaurentPoly> alphas;  // alpha_0..alpha_N from prod_j (u + 1/u - w_j - 1/w_j)
  std::map<OnsagerSym, Matrix<RatFunc>> mats;
  bool experimental = false;  // N >= 3
  QuotientO quotient() const { return QuotientO(N, alphas); }
};

/// Names used for symbolic points: w for N=1, w1..wN otherwise.
std::vector<LaurentPoly> symbolic_points(int n);
/// Throws InputError for an empty or degenerate point list.
Representation rep_build(const std::vector<LaurentPoly>& points);
/// Every defining relation of O_N under the matrix commutator, plus the
/// N-specific extra relations as matrices.
Report rep_check(const Representation& rep);

}  // namespace onsager
