#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <vector>

#include "oracles.hpp"
#include "snc/column_elimination.hpp"
#include "snc/digraph.hpp"
#include "snc/errors.hpp"
#include "snc/linalg.hpp"

using namespace snc;

namespace {
Rational r(long n, long d = 1) { return Rational(n, d); }

Digraph three_cycle() { return build_digraph(3, {{1, 2}, {2, 3}, {3, 1}}); }
}

TEST_CASE("identity reduces to itself") {
    const EliminationResult res = column_reduce(RatMatrix::identity(3));
    REQUIRE(res.success());
    CHECK(*res.transform == RatMatrix::identity(3));
    CHECK(res.sign_precondition_ok);
}

TEST_CASE("a zero second pivot fails with the accumulated column") {
    const RatMatrix c = RatMatrix::from_rows({{r(1), r(-1)}, {r(-1), r(1)}});
    const EliminationResult res = column_reduce(c);
    REQUIRE_FALSE(res.success());
    CHECK(res.failure_step == 2);
    CHECK(*res.combination == RatVector{r(1), r(1)});
    CHECK(vec_eq(mat_vec(c, *res.combination), zero_vector(2)));
    CHECK(is_nonpos(mat_vec(c, *res.combination)));
}

TEST_CASE("a dominant diagonal succeeds with a nonnegative transform") {
    const RatMatrix c = RatMatrix::from_rows({{r(2), r(-1)}, {r(-1), r(2)}});
    const EliminationResult res = column_reduce(c);
    REQUIRE(res.success());
    CHECK(mat_mul(c, *res.transform) == RatMatrix::identity(2));
    CHECK(is_nonnegative(*res.transform));
    CHECK(*res.transform == RatMatrix::from_rows({{r(2, 3), r(1, 3)}, {r(1, 3), r(2, 3)}}));
}

TEST_CASE("one-by-one cases") {
    const EliminationResult pos = column_reduce(RatMatrix::from_rows({{r(5)}}));
    REQUIRE(pos.success());
    CHECK(*pos.transform == RatMatrix::from_rows({{r(1, 5)}}));

    const EliminationResult zero = column_reduce(RatMatrix::from_rows({{r(0)}}));
    REQUIRE_FALSE(zero.success());
    CHECK(zero.failure_step == 1);
    CHECK(*zero.combination == RatVector{r(1)});

    const EliminationResult neg = column_reduce(RatMatrix::from_rows({{r(-2)}}));
    REQUIRE_FALSE(neg.success());
    CHECK(neg.failure_step == 1);
}

TEST_CASE("strictness of the sign precondition") {
    const RatMatrix c = RatMatrix::from_rows({{r(1), r(1)}, {r(0), r(1)}});
    CHECK_THROWS_AS(column_reduce(c), SignPreconditionViolated);
    CHECK_THROWS_AS(column_reduce(c, ReduceMode::Strict), SignPreconditionViolated);
    const EliminationResult res = column_reduce(c, ReduceMode::Permissive);
    CHECK_FALSE(res.sign_precondition_ok);
    REQUIRE(res.success());  // elimination itself still runs
    CHECK(mat_mul(c, *res.transform) == RatMatrix::identity(2));
}

TEST_CASE("rectangular input is rejected") {
    CHECK_THROWS_AS(column_reduce(RatMatrix(2, 3)), NotSquare);
}

TEST_CASE("seeded sign-patterned matrices always land on a verified branch") {
    SplitMix64 gen(7031);
    int succeeded = 0;
    int failed = 0;
    for (int trial = 0; trial < 120; ++trial) {
        const RatMatrix c = oracle::random_sign_patterned(gen, 5);
        const EliminationResult res = column_reduce(c);
        REQUIRE(res.sign_precondition_ok);
        if (res.success()) {
            ++succeeded;
            REQUIRE(mat_mul(c, *res.transform) == RatMatrix::identity(c.rows()));
            REQUIRE(is_nonnegative(*res.transform));
        } else {
            ++failed;
            REQUIRE(is_nonneg(*res.combination));
            REQUIRE_FALSE(is_zero(*res.combination));
            REQUIRE(is_nonpos(mat_vec(c, *res.combination)));
            REQUIRE(*res.failure_step >= 1);
            REQUIRE(*res.failure_step <= c.rows());
        }
    }
    CHECK(succeeded > 0);
    CHECK(failed > 0);
}

TEST_CASE("deletion witnesses for the 3-cycle force the failure branch") {
    // each D - v is a single arc; weight 1 on its tail, 0 on its head
    // satisfies S*w <= 0 there
    const std::vector<RatVector> w_list{{r(1), r(0)}, {r(0), r(1)}, {r(1), r(0)}};
    const DeletionInverseResult res = attempt_inverse_from_deletions(three_cycle(), w_list);
    REQUIRE_FALSE(res.success());
    REQUIRE(res.witness.has_value());
    const RatVector& w = *res.witness;
    CHECK(is_nonneg(w));
    CHECK_FALSE(is_zero(w));
    CHECK(is_nonpos(mat_vec(second_neighborhood_matrix(three_cycle()), w)));
    CHECK(is_nonneg(*res.combination));
    CHECK_FALSE(is_zero(*res.combination));
}

TEST_CASE("single-vertex digraph degenerates to an immediate failure") {
    const DeletionInverseResult res =
        attempt_inverse_from_deletions(build_digraph(1, {}), {RatVector{}});
    REQUIRE_FALSE(res.success());
    CHECK(res.failure_step == 1);
    CHECK(*res.combination == RatVector{r(1)});
    CHECK(*res.witness == RatVector{r(0)});
}

TEST_CASE("deletion witnesses are verified before use") {
    const Digraph d = three_cycle();
    CHECK_THROWS_AS(attempt_inverse_from_deletions(d, {{r(1), r(0)}, {r(0), r(1)}}),
                    DimensionMismatch);
    CHECK_THROWS_AS(
        attempt_inverse_from_deletions(d, {{r(1), r(0), r(0)}, {r(0), r(1)}, {r(1), r(0)}}),
        InvalidDeletionWitness);
    CHECK_THROWS_AS(
        attempt_inverse_from_deletions(d, {{r(-1), r(0)}, {r(0), r(1)}, {r(1), r(0)}}),
        InvalidDeletionWitness);
    // weight on the tail of the remaining arc is fine; on the head it
    // makes (S w)_tail = +1, violating S*w <= 0
    CHECK_THROWS_AS(
        attempt_inverse_from_deletions(d, {{r(0), r(1)}, {r(0), r(1)}, {r(1), r(0)}}),
        InvalidDeletionWitness);
}

TEST_CASE("no small digraph yields a nonnegative right inverse") {
    // If the pipeline ever succeeded it would hand back W' with
    // S*W' = I and W' >= 0 -- impossible at these sizes, where every
    // inverse is known to carry a negative entry. So every run must take
    // the failure branch, and each failure must carry valid evidence.
    SplitMix64 gen(8888);
    bool saw_success = false;
    for (int trial = 0; trial < 400 && !saw_success; ++trial) {
        const int n = 2 + static_cast<int>(gen.next() % 3);
        const Digraph d = random_digraph(n, r(2, 5), r(2, 5), gen.next());
        // build candidate deletion witnesses by brute small grid; skip
        // vertices with no valid witness
        std::vector<RatVector> w_list;
        bool complete = true;
        for (int v = 1; v <= n && complete; ++v) {
            const VertexDeletion del = delete_vertex(d, v);
            const RatMatrix s = second_neighborhood_matrix(del.digraph);
            std::optional<RatVector> found;
            oracle::for_each_tuple({r(0), r(1), r(2)}, n - 1, [&](const RatVector& w) {
                if (!is_zero(w) && is_nonpos(mat_vec(s, w))) {
                    found = w;
                    return true;
                }
                return false;
            });
            if (found.has_value())
                w_list.push_back(*found);
            else
                complete = false;
        }
        if (!complete) continue;
        const DeletionInverseResult res = attempt_inverse_from_deletions(d, w_list);
        if (res.success()) {
            saw_success = true;
            CHECK(mat_mul(second_neighborhood_matrix(d), *res.right_inverse) ==
                  RatMatrix::identity(n));
            CHECK(is_nonnegative(*res.right_inverse));
        } else {
            REQUIRE(res.witness.has_value());
            if (res.sign_precondition_ok) {
                // nonzero deletion witnesses force a nonzero combination:
                // w = sum a_j * w_hat_j >= a_i * w_hat_i with a_i >= 1
                CHECK(is_nonneg(*res.witness));
                CHECK_FALSE(is_zero(*res.witness));
                CHECK(is_nonpos(mat_vec(second_neighborhood_matrix(d), *res.witness)));
            }
        }
    }
    // A full Success would contradict the nonnegative-inverse obstruction
    // on digraphs this small, so reaching here without hitting a violated
    // invariant is the point of the test.
    CHECK_FALSE(saw_success);
}
