#include "snc/column_elimination.hpp"

#include <cassert>
#include <string>

#include "snc/errors.hpp"

namespace snc {

EliminationResult column_reduce(const RatMatrix& c, ReduceMode mode) {
    if (c.rows() != c.cols()) throw NotSquare("column_reduce needs a square matrix");
    const int n = c.rows();

    bool sign_ok = true;
    for (int i = 0; i < n && sign_ok; ++i)
        for (int j = 0; j < n; ++j)
            if (i != j && c.at(i, j).sign() > 0) {
                sign_ok = false;
                break;
            }
    if (!sign_ok && mode == ReduceMode::Strict)
        throw SignPreconditionViolated("column_reduce: positive off-diagonal entry");

    RatMatrix x = c;
    RatMatrix t = RatMatrix::identity(n);
    EliminationResult res;
    res.sign_precondition_ok = sign_ok;
    for (int i = 0; i < n; ++i) {
        if (x.at(i, i).sign() <= 0) {
            res.failure_step = i + 1;
            res.combination = t.column(i);
            return res;
        }
        for (int j = 0; j < n; ++j) {
            if (j == i) continue;
            Rational mult = -(x.at(i, j) / x.at(i, i));
            if (mult.is_zero()) continue;
            for (int r = 0; r < n; ++r) {
                x.at(r, j) += mult * x.at(r, i);
                t.at(r, j) += mult * t.at(r, i);
            }
        }
        Rational inv = Rational(1) / x.at(i, i);
        for (int r = 0; r < n; ++r) {
            x.at(r, i) *= inv;
            t.at(r, i) *= inv;
        }
        assert(mat_mul(c, t) == x);  // running identity C * T == X
    }
    assert(x == RatMatrix::identity(n));
    res.transform = std::move(t);
    return res;
}

DeletionInverseResult attempt_inverse_from_deletions(const Digraph& d,
                                                     const std::vector<RatVector>& w_list) {
    const int n = d.vertex_count();
    if (static_cast<int>(w_list.size()) != n)
        throw DimensionMismatch("attempt_inverse_from_deletions: got " +
                                std::to_string(w_list.size()) + " witnesses for " +
                                std::to_string(n) + " vertices");

    RatMatrix w_hat(n, n);
    for (int i = 0; i < n; ++i) {
        const int v = i + 1;
        const RatVector& w = w_list[i];
        if (static_cast<int>(w.size()) != n - 1)
            throw InvalidDeletionWitness("witness for vertex " + std::to_string(v) +
                                         " has dimension " + std::to_string(w.size()) +
                                         ", expected " + std::to_string(n - 1));
        if (!is_nonneg(w))
            throw InvalidDeletionWitness("witness for vertex " + std::to_string(v) +
                                         " has a negative entry");
        if (n == 1) continue;  // deleting the only vertex leaves nothing to verify
        VertexDeletion del = delete_vertex(d, v);
        if (!is_nonpos(mat_vec(second_neighborhood_matrix(del.digraph), w)))
            throw InvalidDeletionWitness("witness for vertex " + std::to_string(v) +
                                         " fails S*w <= 0 on the deleted digraph");
        for (int u = 1; u <= n; ++u) {
            if (u == v) continue;
            w_hat.at(u - 1, i) = w[del.old_to_new[u] - 1];
        }
    }

    EliminationResult red =
        column_reduce(mat_mul(second_neighborhood_matrix(d), w_hat), ReduceMode::Permissive);
    DeletionInverseResult out;
    out.sign_precondition_ok = red.sign_precondition_ok;
    if (red.success()) {
        out.right_inverse = mat_mul(w_hat, *red.transform);
    } else {
        out.failure_step = red.failure_step;
        out.combination = red.combination;
        out.witness = mat_vec(w_hat, *red.combination);
    }
    return out;
}

}  // namespace snc
