#pragma once

#include <optional>
#include <vector>

#include "snc/digraph.hpp"
#include "snc/linalg.hpp"

namespace snc {

/// Strict rejects inputs with a positive off-diagonal entry; Permissive
/// processes them anyway but the failure certificate then carries no
/// guarantee (the result records which case applied).
enum class ReduceMode { Strict, Permissive };

/// Outcome of the column-oriented Gauss-Jordan pass. Exactly one branch is
/// populated: `transform` on success, `failure_step` + `combination` on a
/// non-positive pivot.
struct EliminationResult {
    std::optional<RatMatrix> transform;    // C * transform == I; >= 0 under the sign precondition
    std::optional<int> failure_step;       // 1-based pivot index i with x_ii <= 0
    std::optional<RatVector> combination;  // column i of the accumulated transform
    bool sign_precondition_ok = true;      // all off-diagonals of the input were <= 0

    bool success() const { return transform.has_value(); }
};

/// Column-operation Gauss-Jordan: at step i, a non-positive pivot x_ii aborts
/// with certificate a = (column i of the transform so far), which satisfies
/// a >= 0, a != 0, C*a <= 0 whenever the input's off-diagonals are all <= 0.
/// Otherwise row i is cleared by adding (-x_ij/x_ii)-multiples of column i
/// (nonnegative multiples, under the precondition) and column i is scaled by
/// 1/x_ii; after n clean pivots, C * transform == I with transform >= 0.
EliminationResult column_reduce(const RatMatrix& c, ReduceMode mode = ReduceMode::Strict);

/// Outcome of the deletion-witness assembly. Success hands back a right
/// inverse of S_D; failure hands back the reducer's certificate a together
/// with the witness w = W-hat * a, which satisfies w >= 0 and S_D * w <= 0
/// when the assembled matrix met the sign precondition.
struct DeletionInverseResult {
    std::optional<RatMatrix> right_inverse;  // S_D * right_inverse == I
    std::optional<int> failure_step;
    std::optional<RatVector> combination;
    std::optional<RatVector> witness;
    bool sign_precondition_ok = true;

    bool success() const { return right_inverse.has_value(); }
};

/// Packs one verified deletion witness per vertex into W-hat (w_list[i-1]
/// lives on D - v_i and is re-indexed with a zero at position i), forms
/// C = S_D * W-hat, and column-reduces it. Throws InvalidDeletionWitness
/// when a supplied vector is mis-sized, has a negative entry, or fails
/// S_{D - v_i} * w <= 0.
DeletionInverseResult attempt_inverse_from_deletions(const Digraph& d,
                                                     const std::vector<RatVector>& w_list);

}  // namespace snc
