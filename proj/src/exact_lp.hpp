#pragma once

// Small dense linear programs over Q, solved by a two-phase tableau simplex
// with Bland's rule. Internal to the polytope code.

#include <optional>

#include "togliatti/linalg.hpp"

namespace togliatti::detail {

/// max c.x subject to A x = b, x >= 0. nullopt when infeasible. The
/// problem must be bounded (callers only pose LPs over convex weights).
std::optional<linalg::Rational> lp_maximize(const linalg::RationalMatrix& a,
                                            const linalg::RatVector& b,
                                            const linalg::RatVector& c);

/// Is {x >= 0 : A x = b} nonempty?
bool lp_feasible(const linalg::RationalMatrix& a, const linalg::RatVector& b);

}  // namespace togliatti::detail
