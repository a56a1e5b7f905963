#pragma once

#include <optional>
#include <vector>

#include "snc/digraph.hpp"
#include "snc/rational.hpp"

namespace snc {

/// Dense row-major matrix over exact rationals. Indices are 0-based.
class RatMatrix {
public:
    RatMatrix() = default;
    RatMatrix(int rows, int cols);  // zero-filled

    static RatMatrix identity(int n);

    /// Convenience for literals in tests and assembly code.
    static RatMatrix from_rows(const std::vector<std::vector<Rational>>& rows);

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    Rational& at(int i, int j) { return e_[static_cast<std::size_t>(i) * cols_ + j]; }
    const Rational& at(int i, int j) const { return e_[static_cast<std::size_t>(i) * cols_ + j]; }

    RatVector row(int i) const;
    RatVector column(int j) const;

    friend bool operator==(const RatMatrix& a, const RatMatrix& b);

private:
    int rows_ = 0;
    int cols_ = 0;
    std::vector<Rational> e_;
};

RatVector mat_vec(const RatMatrix& m, const RatVector& x);
RatMatrix mat_mul(const RatMatrix& a, const RatMatrix& b);
RatMatrix transpose(const RatMatrix& m);
bool is_nonnegative(const RatMatrix& m);

struct InvertOutcome {
    std::optional<RatMatrix> inverse;     // engaged iff nonsingular
    std::optional<RatVector> null_vector; // engaged iff singular; nonzero, M*u = 0
    bool singular() const { return null_vector.has_value(); }
};

/// Exact Gauss-Jordan with pivoting on the first nonzero entry. On a zero
/// pivot column the nonzero null vector is read off the reduced rows.
InvertOutcome invert(const RatMatrix& m);

/// Entries: +1 at out-distance 1, -1 at out-distance 2, 0 otherwise
/// (diagonal is always 0 since d(v,v)=0). Row/column k corresponds to
/// vertex k+1.
RatMatrix second_neighborhood_matrix(const Digraph& d);

// Vector helpers. Relations are componentwise for all indices; the
// negated forms follow the existential convention (they hold when some
// single component violates the base relation), so vec_not_gt is NOT
// the same as vec_le.
Rational dot(const RatVector& a, const RatVector& b);
RatVector vec_add(const RatVector& a, const RatVector& b);
RatVector vec_scale(const Rational& c, const RatVector& v);
RatVector zero_vector(int n);
RatVector ones_vector(int n);

bool vec_eq(const RatVector& a, const RatVector& b);
bool vec_le(const RatVector& a, const RatVector& b);
bool vec_lt(const RatVector& a, const RatVector& b);
bool vec_ge(const RatVector& a, const RatVector& b);
bool vec_gt(const RatVector& a, const RatVector& b);
bool vec_not_eq(const RatVector& a, const RatVector& b);  // some a_i != b_i
bool vec_not_le(const RatVector& a, const RatVector& b);  // some a_i >  b_i
bool vec_not_lt(const RatVector& a, const RatVector& b);  // some a_i >= b_i
bool vec_not_ge(const RatVector& a, const RatVector& b);  // some a_i <  b_i
bool vec_not_gt(const RatVector& a, const RatVector& b);  // some a_i <= b_i

bool is_nonneg(const RatVector& v);
bool is_nonpos(const RatVector& v);
bool is_zero(const RatVector& v);
bool has_positive_component(const RatVector& v);

}  // namespace snc
