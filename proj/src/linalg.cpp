#include "snc/linalg.hpp"

#include <string>

#include "snc/errors.hpp"

namespace snc {

RatMatrix::RatMatrix(int rows, int cols) : rows_(rows), cols_(cols) {
    if (rows < 0 || cols < 0) throw DimensionMismatch("negative matrix dimension");
    e_.assign(static_cast<std::size_t>(rows) * cols, Rational());
}

RatMatrix RatMatrix::identity(int n) {
    RatMatrix m(n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = Rational(1);
    return m;
}

RatMatrix RatMatrix::from_rows(const std::vector<std::vector<Rational>>& rows) {
    int r = static_cast<int>(rows.size());
    int c = r == 0 ? 0 : static_cast<int>(rows[0].size());
    RatMatrix m(r, c);
    for (int i = 0; i < r; ++i) {
        if (static_cast<int>(rows[i].size()) != c)
            throw DimensionMismatch("ragged rows in matrix literal");
        for (int j = 0; j < c; ++j) m.at(i, j) = rows[i][j];
    }
    return m;
}

RatVector RatMatrix::row(int i) const {
    RatVector v(cols_);
    for (int j = 0; j < cols_; ++j) v[j] = at(i, j);
    return v;
}

RatVector RatMatrix::column(int j) const {
    RatVector v(rows_);
    for (int i = 0; i < rows_; ++i) v[i] = at(i, j);
    return v;
}

bool operator==(const RatMatrix& a, const RatMatrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.e_ == b.e_;
}

RatVector mat_vec(const RatMatrix& m, const RatVector& x) {
    if (m.cols() != static_cast<int>(x.size()))
        throw DimensionMismatch("mat_vec: " + std::to_string(m.cols()) + " cols vs vector of " +
                                std::to_string(x.size()));
    RatVector y(m.rows());
    for (int i = 0; i < m.rows(); ++i) {
        Rational acc;
        for (int j = 0; j < m.cols(); ++j) acc += m.at(i, j) * x[j];
        y[i] = acc;
    }
    return y;
}

RatMatrix mat_mul(const RatMatrix& a, const RatMatrix& b) {
    if (a.cols() != b.rows())
        throw DimensionMismatch("mat_mul: " + std::to_string(a.cols()) + " vs " +
                                std::to_string(b.rows()));
    RatMatrix c(a.rows(), b.cols());
    for (int i = 0; i < a.rows(); ++i)
        for (int k = 0; k < a.cols(); ++k) {
            const Rational& aik = a.at(i, k);
            if (aik.is_zero()) continue;
            for (int j = 0; j < b.cols(); ++j) c.at(i, j) += aik * b.at(k, j);
        }
    return c;
}

RatMatrix transpose(const RatMatrix& m) {
    RatMatrix t(m.cols(), m.rows());
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j) t.at(j, i) = m.at(i, j);
    return t;
}

bool is_nonnegative(const RatMatrix& m) {
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j)
            if (m.at(i, j).sign() < 0) return false;
    return true;
}

InvertOutcome invert(const RatMatrix& m) {
    if (m.rows() != m.cols()) throw NotSquare("invert needs a square matrix");
    const int n = m.rows();

    // Gauss-Jordan on [M | I]; pivot = first nonzero entry in the column.
    RatMatrix work = m;
    RatMatrix aug = RatMatrix::identity(n);
    std::vector<int> pivot_row_of_col(n, -1);
    int next_row = 0;
    for (int col = 0; col < n; ++col) {
        int pr = -1;
        for (int r = next_row; r < n; ++r)
            if (!work.at(r, col).is_zero()) {
                pr = r;
                break;
            }
        if (pr < 0) {
            // Singular: build a null vector from the reduced columns.
            RatVector u(n);
            u[col] = Rational(1);
            for (int c = 0; c < col; ++c) {
                int r = pivot_row_of_col[c];
                if (r >= 0) u[c] = -work.at(r, col);
            }
            return {std::nullopt, std::move(u)};
        }
        if (pr != next_row) {
            for (int j = 0; j < n; ++j) {
                std::swap(work.at(pr, j), work.at(next_row, j));
                std::swap(aug.at(pr, j), aug.at(next_row, j));
            }
        }
        Rational inv_pivot = Rational(1) / work.at(next_row, col);
        for (int j = 0; j < n; ++j) {
            work.at(next_row, j) *= inv_pivot;
            aug.at(next_row, j) *= inv_pivot;
        }
        for (int r = 0; r < n; ++r) {
            if (r == next_row) continue;
            Rational factor = work.at(r, col);
            if (factor.is_zero()) continue;
            for (int j = 0; j < n; ++j) {
                work.at(r, j) -= factor * work.at(next_row, j);
                aug.at(r, j) -= factor * aug.at(next_row, j);
            }
        }
        pivot_row_of_col[col] = next_row;
        ++next_row;
    }
    return {std::move(aug), std::nullopt};
}

RatMatrix second_neighborhood_matrix(const Digraph& d) {
    const int n = d.vertex_count();
    RatMatrix s(n, n);
    for (int v = 1; v <= n; ++v) {
        std::vector<int> dist = distances_from(d, v);
        for (int u = 1; u <= n; ++u) {
            if (dist[u] == 1)
                s.at(v - 1, u - 1) = Rational(1);
            else if (dist[u] == 2)
                s.at(v - 1, u - 1) = Rational(-1);
        }
    }
    return s;
}

Rational dot(const RatVector& a, const RatVector& b) {
    if (a.size() != b.size()) throw DimensionMismatch("dot: unequal lengths");
    Rational acc;
    for (std::size_t i = 0; i < a.size(); ++i) acc += a[i] * b[i];
    return acc;
}

RatVector vec_add(const RatVector& a, const RatVector& b) {
    if (a.size() != b.size()) throw DimensionMismatch("vec_add: unequal lengths");
    RatVector c(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) c[i] = a[i] + b[i];
    return c;
}

RatVector vec_scale(const Rational& c, const RatVector& v) {
    RatVector r(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) r[i] = c * v[i];
    return r;
}

RatVector zero_vector(int n) { return RatVector(static_cast<std::size_t>(n)); }

RatVector ones_vector(int n) { return RatVector(static_cast<std::size_t>(n), Rational(1)); }

namespace {

void require_same_dim(const RatVector& a, const RatVector& b) {
    if (a.size() != b.size()) throw DimensionMismatch("vector relation: unequal lengths");
}

}  // namespace

bool vec_eq(const RatVector& a, const RatVector& b) {
    require_same_dim(a, b);
    return a == b;
}

bool vec_le(const RatVector& a, const RatVector& b) {
    require_same_dim(a, b);
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] > b[i]) return false;
    return true;
}

bool vec_lt(const RatVector& a, const RatVector& b) {
    require_same_dim(a, b);
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] >= b[i]) return false;
    return true;
}

bool vec_ge(const RatVector& a, const RatVector& b) { return vec_le(b, a); }

bool vec_gt(const RatVector& a, const RatVector& b) { return vec_lt(b, a); }

bool vec_not_eq(const RatVector& a, const RatVector& b) {
    require_same_dim(a, b);
    return a != b;
}

bool vec_not_le(const RatVector& a, const RatVector& b) {
    require_same_dim(a, b);
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] > b[i]) return true;
    return false;
}

bool vec_not_lt(const RatVector& a, const RatVector& b) {
    require_same_dim(a, b);
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] >= b[i]) return true;
    return false;
}

bool vec_not_ge(const RatVector& a, const RatVector& b) { return vec_not_le(b, a); }

bool vec_not_gt(const RatVector& a, const RatVector& b) { return vec_not_lt(b, a); }

bool is_nonneg(const RatVector& v) {
    for (const Rational& x : v)
        if (x.sign() < 0) return false;
    return true;
}

bool is_nonpos(const RatVector& v) {
    for (const Rational& x : v)
        if (x.sign() > 0) return false;
    return true;
}

bool is_zero(const RatVector& v) {
    for (const Rational& x : v)
        if (!x.is_zero()) return false;
    return true;
}

bool has_positive_component(const RatVector& v) {
    for (const Rational& x : v)
        if (x.sign() > 0) return true;
    return false;
}

}  // namespace snc
