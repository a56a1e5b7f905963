#pragma once

#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "snc/digraph.hpp"
#include "snc/linalg.hpp"

namespace snc {

/// The six equivalent forms of the second-neighborhood conjecture, in the
/// fixed reporting order: original degree form, matrix form, universal
/// weight form, nonnegative weight form, signed score form, inverse form.
enum class ConjectureId { C1, C2, C3, C4, C5, C6 };

enum class VerdictStatus { Satisfied, Fails };

/// Shape of the evidence payload carried by a Verdict; what the payload
/// means is determined by (conjecture, status) — see the checker docs.
enum class EvidenceKind { Vertex, DegreeTable, Vector, Matrix };

const char* conjecture_name(ConjectureId c);
const char* status_name(VerdictStatus s);
const char* evidence_kind_name(EvidenceKind k);

struct DegreeRow {
    int vertex = 0;
    int dplus = 0;
    int dplusplus = 0;
    friend bool operator==(const DegreeRow&, const DegreeRow&) = default;
};

/// Checker outcome plus the re-verifiable evidence for it. Evidence by case:
///   C1 Satisfied: vertex v with d+(v) <= d++(v) (least index); the degree
///                 table is attached as a diagnostic. Fails: the full table.
///   C2 Satisfied: vector S*1 together with the least vertex whose component
///                 is <= 0. Fails: vector S*1 (all components positive).
///   C3 Fails: weight vector w >= 0 with S*w >= 1. Satisfied: infeasibility
///                 certificate y with y <= 0, S^T*y >= 0, 1^T*y < 0.
///   C4 Satisfied: weight vector w >= 0, 1^T*w = 1, S*w <= 0. Fails: vector
///                 p >= 0 with S^T*p > 0 (a C3 failure witness for reverse(D)).
///   C5 Satisfied: vector v with a positive component and S*v <= 0.
///                 Fails: the nonnegative inverse of S.
///   C6 Satisfied: a nonzero null vector of S, or (kind Matrix) the inverse
///                 with its first negative entry recorded in `entry`.
///                 Fails: the nonnegative inverse of S.
struct Verdict {
    ConjectureId conjecture = ConjectureId::C1;
    VerdictStatus status = VerdictStatus::Satisfied;
    EvidenceKind kind = EvidenceKind::Vertex;
    std::optional<int> vertex;                  // 1-based
    std::optional<RatVector> vector;
    std::optional<RatMatrix> matrix;
    std::vector<DegreeRow> degree_table;
    std::optional<std::pair<int, int>> entry;   // 0-based matrix position

    bool satisfied() const { return status == VerdictStatus::Satisfied; }
};

// Graph-level checkers. All reject the empty digraph (the conjectures
// quantify over vertices) and scan candidate witnesses in ascending order.
Verdict check_c1(const Digraph& d);
Verdict check_c2(const Digraph& d);
Verdict check_c3(const Digraph& d);
Verdict check_c4(const Digraph& d);
Verdict check_c5(const Digraph& d);
Verdict check_c6(const Digraph& d);

// Matrix-level cores of C2-C6, usable on synthetic matrices that no digraph
// produces. check_cN(d) == check_cN_matrix(second_neighborhood_matrix(d)).
Verdict check_c2_matrix(const RatMatrix& s);
Verdict check_c3_matrix(const RatMatrix& s);
Verdict check_c4_matrix(const RatMatrix& s);
Verdict check_c5_matrix(const RatMatrix& s);
Verdict check_c6_matrix(const RatMatrix& s);

/// Alternate C5 route kept as a cross-check: for each k in ascending order,
/// solve for v = vplus - vminus with v_k pinned to 1, slack rows S*v + s = 0.
/// Engaged iff check_c5 reports Satisfied; the witness verifies directly.
std::optional<RatVector> c5_witness_via_lp(const Digraph& d);

/// Re-checks a verdict's evidence by direct arithmetic against the given
/// matrix (for C2-C6) without consulting the solver that produced it.
bool verify_verdict_matrix(const RatMatrix& s, const Verdict& v);

/// Graph-level re-check: C1 against the degree structure of d, the rest
/// against second_neighborhood_matrix(d).
bool verify_verdict(const Digraph& d, const Verdict& v);

struct RelationCheck {
    std::string name;
    bool pass = true;
};

struct CrossCheckReport {
    std::string instance;
    std::vector<Verdict> verdicts;           // C1..C6 on D, in order
    std::vector<Verdict> reversed_verdicts;  // C1..C6 on reverse(D)
    std::vector<RelationCheck> relations;
    std::vector<std::string> violations;     // names of the failed relations

    bool consistent() const { return violations.empty(); }
};

/// Runs all six checkers on D and reverse(D) and enforces the equivalences
/// at the per-digraph level: C1/C2 agree, C5/C6 agree, C4 fails exactly when
/// C3 fails on the reverse (certificates translated through the transpose),
/// a C5 failure forces a C4 failure, a C2 failure forces a C4 failure on the
/// reverse, and every evidence payload re-verifies. Failed relations land in
/// `violations`; the list is expected to stay empty.
CrossCheckReport consistency_check(const Digraph& d, const std::string& instance = "");

/// Test seam: same harness, but the matrix-level checkers run against the
/// supplied matrices instead of the second-neighborhood matrices of D and
/// reverse(D). A mismatched pair makes relations fail on purpose.
CrossCheckReport consistency_check_injected(const Digraph& d, const RatMatrix& s,
                                            const RatMatrix& s_rev,
                                            const std::string& instance = "");

using Checker = std::function<Verdict(const Digraph&)>;

struct MinimalityReport {
    bool is_local_minimal = false;
    /// a(v) = d-(v) - d--(v) per vertex, a diagnostic recorded (not asserted)
    /// for flagged instances.
    std::vector<int> degree_gaps;
};

/// True iff d fails conjecture c but every single-arc-deleted subgraph
/// satisfies it. This is arc-deletion-local minimality only — a necessary
/// condition for global fewest-arcs minimality, which exhaustive enumeration
/// below the arc count would have to certify separately.
/// Throws NotACounterexample when d itself satisfies c.
bool minimality_local(const Digraph& d, ConjectureId c);

/// Injectable-checker form for harness tests that stub out a failure.
MinimalityReport minimality_local_report(const Digraph& d, const Checker& checker);

/// Search pruning: true iff d could still be a minimal counterexample under
/// the known degree bound, i.e. minimum out-degree >= 7. Always false for
/// n <= 7 and for the empty digraph.
bool kl_prune(const Digraph& d);

}  // namespace snc
