#pragma once

#include "onsager/matrix.hpp"
#include "onsager/ratfunc.hpp"

namespace onsager {

struct LinearSolution {
  enum class Kind { unique, inconsistent, underdetermined };
  Kind kind = Kind::unique;
  /// unknowns x rhs-columns; meaningful only when kind == unique.
  Matrix<RatFunc> x;
};

/// Exact Gauss-Jordan elimination for a * x = b over the field of rational
/// functions. `a` may be overdetermined; surplus rows must be consistent.
/// Pivots are chosen by smallest size, so unit pivots are preferred.
LinearSolution solve_linear(Matrix<RatFunc> a, Matrix<RatFunc> b);

}  // namespace onsager
