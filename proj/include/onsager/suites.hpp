#pragma once

#include <optional>
#include <string>
#include <vector>

#include "onsager/envrep.hpp"
#include "onsager/expr.hpp"

namespace onsager {

struct SuiteOptions {
  std::optional<int> N;
  Bindings_ params;
  std::optional<int> trunc;
  std::vector<Scalar> w;
  std::string interpretation = "r12";
};

const std::vector<std::string>& suite_names();
/// Throws InputError for an unknown suite or malformed options.
Report run_suite(const std::string& name, const SuiteOptions& opts = {});

/// Symbolic quotients with the bound names replaced by their values.
QuotientO make_quotient(int n, const Bindings_& b);
QuotientA make_quotient_a(int n, const Bindings_& b);

/// Relations of O_1 and of O_2 (aw(6)) as printed, in parser syntax.
struct GoldenRelation {
  std::string lhs;
  std::string rhs;
};
const std::vector<GoldenRelation>& golden_relations(int n);
/// Every golden relation appears among `rels` (up to the orientation of the
/// bracket) and every relation in `rels` is covered.
Check compare_with_golden(const std::vector<Relation>& rels, int n, const Bindings_& b, const std::string& id);

/// Fixtures of the appendix; `corrected` is nonempty for the misprinted ones.
struct Fixture {
  bool forward;  // O element on the left, alternative expression on the right
  std::string lhs;
  std::string rhs;
  std::string corrected_lhs;
  std::string corrected_rhs;
};
const std::vector<Fixture>& appendix_fixtures();
Report verify_fixtures();

}  // namespace onsager
