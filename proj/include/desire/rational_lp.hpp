#pragma once

#include <gmpxx.h>

#include <optional>
#include <vector>

namespace desire {

using Rational = mpq_class;

enum class Relation { le, eq, ge };

struct LinearConstraint {
  std::vector<Rational> coeffs;
  Relation relation = Relation::le;
  Rational rhs;
};

enum class LpStatus { optimal, infeasible, unbounded };

struct LpResult {
  LpStatus status = LpStatus::infeasible;
  std::vector<Rational> x;  // optimal point when status is optimal
  Rational value;
};

// maximize objective·x subject to the constraints and x >= 0.
// Dense two-phase simplex with Bland's rule, exact arithmetic.
LpResult maximize(const std::vector<Rational>& objective, const std::vector<LinearConstraint>& constraints);

// Some x >= 0 satisfying the constraints.
std::optional<std::vector<Rational>> feasible_point(std::size_t variables,
                                                    const std::vector<LinearConstraint>& constraints);

}  // namespace desire
