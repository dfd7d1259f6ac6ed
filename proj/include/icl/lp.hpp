#pragma once

#include <cstddef>
#include <vector>

#include "icl/rational.hpp"

namespace icl::lp {

enum class Sense { LessEqual, GreaterEqual, Equal };

struct Constraint {
  std::vector<Rational> coeffs;  // one per variable
  Sense sense = Sense::LessEqual;
  Rational rhs;
};

/// minimize c^T x subject to the constraints and x >= 0.
struct Problem {
  std::vector<Rational> objective;
  std::vector<Constraint> constraints;

  std::size_t num_vars() const { return objective.size(); }
};

enum class Status { Optimal, Infeasible, Unbounded };

/// Primal and dual optimum. The dual satisfies A^T y <= c with the sign pattern
/// implied by each constraint sense, and b^T y == objective at optimality.
struct Solution {
  Status status = Status::Infeasible;
  Rational objective;
  std::vector<Rational> primal;
  std::vector<Rational> dual;
};

/// Dense two-phase tableau simplex over exact rationals with Bland's rule.
Solution solve(const Problem& problem);

/// Exact re-check of primal feasibility, dual feasibility and zero duality gap.
/// Returns an empty string on success, otherwise a description of the first failure.
std::string check_certificate(const Problem& problem, const Solution& solution);

}  // namespace icl::lp
