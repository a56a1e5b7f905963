#include "snc/farkas.hpp"

#include <limits>
#include <stdexcept>
#include <string>

#include "snc/errors.hpp"

namespace snc {

std::uint64_t binomial_capped(std::uint64_t n, std::uint64_t k) {
    constexpr std::uint64_t cap = std::uint64_t(1) << 62;
    if (k > n) return 0;
    if (k > n - k) k = n - k;
    std::uint64_t r = 1;
    for (std::uint64_t i = 1; i <= k; ++i) {
        if (r > cap / n) return cap;
        r = r * (n - k + i) / i;  // exact: product of i consecutive integers divisible by i!
        if (r >= cap) return cap;
    }
    return r;
}

FeasibilityOutcome solve_standard(const StandardSystem& sys) {
    const int m = sys.m.rows();
    const int n = sys.m.cols();
    if (static_cast<int>(sys.b.size()) != m)
        throw DimensionMismatch("solve_standard: rhs has " + std::to_string(sys.b.size()) +
                                " entries for " + std::to_string(m) + " rows");

    // Row signs normalized so the rhs is nonnegative; artificial variables
    // n..n+m-1 start as the basis and 1^T a is minimized.
    std::vector<int> row_sign(m, 1);
    const int total = n + m;
    RatMatrix t(m, total + 1);  // [columns | rhs]
    for (int i = 0; i < m; ++i) {
        row_sign[i] = sys.b[i].sign() < 0 ? -1 : 1;
        const Rational s(row_sign[i]);
        for (int j = 0; j < n; ++j) t.at(i, j) = s * sys.m.at(i, j);
        t.at(i, n + i) = Rational(1);
        t.at(i, total) = s * sys.b[i];
    }
    RatVector obj(total + 1);  // reduced costs; last slot = -(current cost)
    for (int j = 0; j <= total; ++j) {
        if (j >= n && j < total) continue;  // artificial reduced costs start at 0
        Rational acc;
        for (int i = 0; i < m; ++i) acc -= t.at(i, j);
        obj[j] = acc;
    }
    std::vector<int> basis(m);
    for (int i = 0; i < m; ++i) basis[i] = n + i;

    const std::uint64_t ceiling =
        binomial_capped(static_cast<std::uint64_t>(m) + static_cast<std::uint64_t>(n),
                        static_cast<std::uint64_t>(m));
    std::uint64_t iterations = 0;
    for (;;) {
        int enter = -1;
        for (int j = 0; j < total; ++j)
            if (obj[j].sign() < 0) {
                enter = j;
                break;
            }
        if (enter < 0) break;  // optimal

        int leave_row = -1;
        Rational best_ratio;
        for (int i = 0; i < m; ++i) {
            if (t.at(i, enter).sign() <= 0) continue;
            Rational ratio = t.at(i, total) / t.at(i, enter);
            if (leave_row < 0 || ratio < best_ratio ||
                (ratio == best_ratio && basis[i] < basis[leave_row])) {
                leave_row = i;
                best_ratio = ratio;
            }
        }
        if (leave_row < 0)
            throw std::logic_error("phase-1 simplex: unbounded column (defect)");

        if (++iterations > ceiling)
            throw std::logic_error("phase-1 simplex exceeded its basis-count ceiling (defect)");

        Rational inv_pivot = Rational(1) / t.at(leave_row, enter);
        for (int j = 0; j <= total; ++j) t.at(leave_row, j) *= inv_pivot;
        for (int i = 0; i < m; ++i) {
            if (i == leave_row) continue;
            Rational factor = t.at(i, enter);
            if (factor.is_zero()) continue;
            for (int j = 0; j <= total; ++j) t.at(i, j) -= factor * t.at(leave_row, j);
        }
        {
            Rational factor = obj[enter];
            if (!factor.is_zero())
                for (int j = 0; j <= total; ++j) obj[j] -= factor * t.at(leave_row, j);
        }
        basis[leave_row] = enter;
    }

    FeasibilityOutcome out;
    out.iterations = iterations;
    const bool feasible = obj[total].is_zero();  // cost = -obj[total]
    if (feasible) {
        RatVector x(n);
        for (int i = 0; i < m; ++i)
            if (basis[i] < n) x[basis[i]] = t.at(i, total);
        out.solution = std::move(x);
    } else {
        // Dual values: the reduced cost of artificial i is 1 - y_i, and the
        // certificate for the original row signs is y = -(row_sign * y').
        RatVector y(m);
        for (int i = 0; i < m; ++i) {
            Rational yi = Rational(1) - obj[n + i];
            y[i] = Rational(-row_sign[i]) * yi;
        }
        out.certificate = std::move(y);
    }
    if (!verify_outcome(sys, out))
        throw std::logic_error("solve_standard produced an unverifiable branch (defect)");
    return out;
}

StandardSystem assemble_weight_system(const RatMatrix& s) {
    if (s.rows() != s.cols()) throw NotSquare("assemble_weight_system needs a square matrix");
    const int n = s.rows();
    RatMatrix m(n + 1, 2 * n);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) m.at(i, j) = s.at(i, j);
        m.at(i, n + i) = Rational(1);
    }
    for (int j = 0; j < n; ++j) m.at(n, j) = Rational(1);
    RatVector b(n + 1);
    b[n] = Rational(1);
    return {std::move(m), std::move(b)};
}

StandardSystem assemble_positivity_system(const RatMatrix& a) {
    const int r = a.rows();
    const int c = a.cols();
    RatMatrix m(c, r + c);
    for (int i = 0; i < c; ++i) {
        for (int j = 0; j < r; ++j) m.at(i, j) = a.at(j, i);
        m.at(i, r + i) = Rational(-1);
    }
    return {std::move(m), ones_vector(c)};
}

std::optional<RatVector> exists_nonneg_strict(const RatMatrix& a) {
    FeasibilityOutcome out = solve_standard(assemble_positivity_system(a));
    if (!out.feasible()) return std::nullopt;
    RatVector p(out.solution->begin(), out.solution->begin() + a.rows());
    if (!is_nonneg(p) || !vec_ge(mat_vec(transpose(a), p), ones_vector(a.cols())))
        throw std::logic_error("exists_nonneg_strict witness failed verification (defect)");
    return p;
}

bool verify_outcome(const StandardSystem& sys, const FeasibilityOutcome& out) {
    if (out.solution.has_value() == out.certificate.has_value()) return false;
    if (out.solution) {
        const RatVector& x = *out.solution;
        if (static_cast<int>(x.size()) != sys.m.cols())
            throw DimensionMismatch("verify_outcome: solution dimension");
        return is_nonneg(x) && vec_eq(mat_vec(sys.m, x), sys.b);
    }
    const RatVector& y = *out.certificate;
    if (static_cast<int>(y.size()) != sys.m.rows())
        throw DimensionMismatch("verify_outcome: certificate dimension");
    return is_nonneg(mat_vec(transpose(sys.m), y)) && dot(sys.b, y).sign() < 0;
}

}  // namespace snc
