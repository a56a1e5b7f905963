#pragma once

#include <cstdint>
#include <optional>

#include "snc/linalg.hpp"

namespace snc {

/// Feasibility question {M x = b, x >= 0}.
struct StandardSystem {
    RatMatrix m;
    RatVector b;
};

/// Exactly one side is engaged:
///  - solution x: M x = b and x >= 0,
///  - certificate y: M^T y >= 0 and b^T y < 0.
struct FeasibilityOutcome {
    std::optional<RatVector> solution;
    std::optional<RatVector> certificate;
    std::uint64_t iterations = 0;
    bool feasible() const { return solution.has_value(); }
};

/// Phase-1 simplex with Bland's smallest-index rule; fully exact, so the
/// returned branch is self-verified before being handed back. The pivot
/// count is capped at C(m+n, m) (the number of bases); exceeding it would
/// contradict Bland's termination guarantee and raises std::logic_error.
FeasibilityOutcome solve_standard(const StandardSystem& sys);

/// For square S (n x n), the (n+1) x 2n block system
///   [ S   | I ]        [0]
///   [ 1^T | 0 ]  x  =  [1]
/// whose nonnegative solutions x = (w, z) give S w = -z <= 0, 1^T w = 1.
StandardSystem assemble_weight_system(const RatMatrix& s);

/// For A (r x c), the system { A^T p - s = 1, p >= 0, s >= 0 } over
/// x = (p, s): feasible iff some p >= 0 has A^T p >= 1.
StandardSystem assemble_positivity_system(const RatMatrix& a);

/// Some p >= 0 with A^T p > 0? Strictness is normalized to A^T p >= 1 by
/// scaling, since the solution set is a cone. Returned p is self-verified.
std::optional<RatVector> exists_nonneg_strict(const RatMatrix& a);

/// Re-checks the branch inequalities by direct arithmetic, independent of
/// the solver path.
bool verify_outcome(const StandardSystem& sys, const FeasibilityOutcome& out);

/// Saturating binomial coefficient, used for the pivot ceiling.
std::uint64_t binomial_capped(std::uint64_t n, std::uint64_t k);

}  // namespace snc
