#include "snc/conjectures.hpp"

#include <stdexcept>

#include "snc/errors.hpp"
#include "snc/farkas.hpp"

namespace snc {

const char* conjecture_name(ConjectureId c) {
    switch (c) {
        case ConjectureId::C1: return "C1";
        case ConjectureId::C2: return "C2";
        case ConjectureId::C3: return "C3";
        case ConjectureId::C4: return "C4";
        case ConjectureId::C5: return "C5";
        case ConjectureId::C6: return "C6";
    }
    return "?";
}

const char* status_name(VerdictStatus s) {
    return s == VerdictStatus::Satisfied ? "Satisfied" : "Fails";
}

const char* evidence_kind_name(EvidenceKind k) {
    switch (k) {
        case EvidenceKind::Vertex: return "vertex";
        case EvidenceKind::DegreeTable: return "degree_table";
        case EvidenceKind::Vector: return "vector";
        case EvidenceKind::Matrix: return "matrix";
    }
    return "?";
}

namespace {

void require_square_nonempty(const RatMatrix& s, const char* who) {
    if (s.rows() != s.cols()) throw NotSquare(std::string(who) + " needs a square matrix");
    if (s.rows() < 1) throw EmptyDigraph(std::string(who) + " needs at least one vertex");
}

/// Row-major scan for the first negative entry; nullopt when none.
std::optional<std::pair<int, int>> first_negative_entry(const RatMatrix& m) {
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j)
            if (m.at(i, j).sign() < 0) return std::make_pair(i, j);
    return std::nullopt;
}

}  // namespace

Verdict check_c1(const Digraph& d) {
    if (d.vertex_count() < 1) throw EmptyDigraph("check_c1 needs at least one vertex");
    Verdict out;
    out.conjecture = ConjectureId::C1;
    for (int v = 1; v <= d.vertex_count(); ++v) {
        NeighborhoodProfile p = neighborhoods(d, v);
        out.degree_table.push_back({v, p.dplus, p.dplusplus});
        if (!out.vertex && p.dplus <= p.dplusplus) out.vertex = v;
    }
    out.status = out.vertex ? VerdictStatus::Satisfied : VerdictStatus::Fails;
    out.kind = out.vertex ? EvidenceKind::Vertex : EvidenceKind::DegreeTable;
    return out;
}

Verdict check_c2_matrix(const RatMatrix& s) {
    require_square_nonempty(s, "check_c2");
    const int n = s.rows();
    Verdict out;
    out.conjecture = ConjectureId::C2;
    out.kind = EvidenceKind::Vector;
    out.vector = mat_vec(s, ones_vector(n));
    for (int i = 0; i < n; ++i)
        if ((*out.vector)[i].sign() <= 0) {
            out.vertex = i + 1;
            break;
        }
    out.status = out.vertex ? VerdictStatus::Satisfied : VerdictStatus::Fails;
    return out;
}

Verdict check_c3_matrix(const RatMatrix& s) {
    require_square_nonempty(s, "check_c3");
    const int n = s.rows();
    // Feasible (w, slack) >= 0 with S*w - slack = 1 means some weight vector
    // beats 0 in every component; the Farkas certificate otherwise proves
    // that no nonnegative w has S*w > 0, since the cone is scale-invariant.
    FeasibilityOutcome lp = solve_standard(assemble_positivity_system(transpose(s)));
    Verdict out;
    out.conjecture = ConjectureId::C3;
    out.kind = EvidenceKind::Vector;
    if (lp.feasible()) {
        out.status = VerdictStatus::Fails;
        out.vector = RatVector(lp.solution->begin(), lp.solution->begin() + n);
    } else {
        out.status = VerdictStatus::Satisfied;
        out.vector = *lp.certificate;
    }
    return out;
}

Verdict check_c4_matrix(const RatMatrix& s) {
    require_square_nonempty(s, "check_c4");
    const int n = s.rows();
    FeasibilityOutcome lp = solve_standard(assemble_weight_system(s));
    Verdict out;
    out.conjecture = ConjectureId::C4;
    out.kind = EvidenceKind::Vector;
    if (lp.feasible()) {
        // First n components of (w, slack); the final system row pins 1^T*w = 1.
        out.status = VerdictStatus::Satisfied;
        out.vector = RatVector(lp.solution->begin(), lp.solution->begin() + n);
    } else {
        // Certificate (p, r) has p >= 0, S^T*p + r*1 >= 0, r < 0, so S^T*p > 0.
        out.status = VerdictStatus::Fails;
        out.vector = RatVector(lp.certificate->begin(), lp.certificate->begin() + n);
    }
    return out;
}

Verdict check_c5_matrix(const RatMatrix& s) {
    require_square_nonempty(s, "check_c5");
    InvertOutcome inv = invert(s);
    Verdict out;
    out.conjecture = ConjectureId::C5;
    if (inv.singular()) {
        // A nonzero u with S*u = 0; flip the sign if needed so some
        // component is positive.
        RatVector v = *inv.null_vector;
        if (!has_positive_component(v)) v = vec_scale(Rational(-1), v);
        out.status = VerdictStatus::Satisfied;
        out.kind = EvidenceKind::Vector;
        out.vector = std::move(v);
        return out;
    }
    if (auto neg = first_negative_entry(*inv.inverse)) {
        // v = -(column j of the inverse) gives S*v = -e_j <= 0 and
        // v_i = -(inverse)_{ij} > 0.
        out.status = VerdictStatus::Satisfied;
        out.kind = EvidenceKind::Vector;
        out.vector = vec_scale(Rational(-1), inv.inverse->column(neg->second));
        out.entry = neg;
        return out;
    }
    out.status = VerdictStatus::Fails;
    out.kind = EvidenceKind::Matrix;
    out.matrix = std::move(*inv.inverse);
    return out;
}

Verdict check_c6_matrix(const RatMatrix& s) {
    require_square_nonempty(s, "check_c6");
    InvertOutcome inv = invert(s);
    Verdict out;
    out.conjecture = ConjectureId::C6;
    if (inv.singular()) {
        out.status = VerdictStatus::Satisfied;
        out.kind = EvidenceKind::Vector;
        out.vector = std::move(*inv.null_vector);
        return out;
    }
    out.kind = EvidenceKind::Matrix;
    out.entry = first_negative_entry(*inv.inverse);
    out.status = out.entry ? VerdictStatus::Satisfied : VerdictStatus::Fails;
    out.matrix = std::move(*inv.inverse);
    return out;
}

Verdict check_c2(const Digraph& d) { return check_c2_matrix(second_neighborhood_matrix(d)); }
Verdict check_c3(const Digraph& d) { return check_c3_matrix(second_neighborhood_matrix(d)); }
Verdict check_c4(const Digraph& d) { return check_c4_matrix(second_neighborhood_matrix(d)); }
Verdict check_c5(const Digraph& d) { return check_c5_matrix(second_neighborhood_matrix(d)); }
Verdict check_c6(const Digraph& d) { return check_c6_matrix(second_neighborhood_matrix(d)); }

std::optional<RatVector> c5_witness_via_lp(const Digraph& d) {
    if (d.vertex_count() < 1) throw EmptyDigraph("c5_witness_via_lp needs at least one vertex");
    const RatMatrix s = second_neighborhood_matrix(d);
    const int n = s.rows();
    for (int k = 0; k < n; ++k) {
        // v = vplus - vminus, S*v + slack = 0, v_k pinned to 1 (any witness
        // with a positive component rescales to this shape).
        RatMatrix m(n + 1, 3 * n);
        for (int i = 0; i < n; ++i) {
            for (int j = 0; j < n; ++j) {
                m.at(i, j) = s.at(i, j);
                m.at(i, n + j) = -s.at(i, j);
            }
            m.at(i, 2 * n + i) = Rational(1);
        }
        m.at(n, k) = Rational(1);
        m.at(n, n + k) = Rational(-1);
        RatVector b(n + 1);
        b[n] = Rational(1);
        FeasibilityOutcome lp = solve_standard({std::move(m), std::move(b)});
        if (!lp.feasible()) continue;
        RatVector v(n);
        for (int j = 0; j < n; ++j) v[j] = (*lp.solution)[j] - (*lp.solution)[n + j];
        return v;
    }
    return std::nullopt;
}

bool verify_verdict_matrix(const RatMatrix& s, const Verdict& v) {
    if (v.conjecture == ConjectureId::C1)
        throw std::logic_error("verify_verdict_matrix cannot check C1; use verify_verdict");
    if (s.rows() != s.cols() || s.rows() < 1) return false;
    const int n = s.rows();
    const bool sat = v.satisfied();
    auto vec_n = [&](const std::optional<RatVector>& x) {
        return x.has_value() && static_cast<int>(x->size()) == n;
    };
    auto mat_n = [&](const std::optional<RatMatrix>& m) {
        return m.has_value() && m->rows() == n && m->cols() == n;
    };
    switch (v.conjecture) {
        case ConjectureId::C2: {
            if (!vec_n(v.vector) || *v.vector != mat_vec(s, ones_vector(n))) return false;
            int first = 0;  // 1-based vertex of the first component <= 0
            for (int i = 0; i < n && first == 0; ++i)
                if ((*v.vector)[i].sign() <= 0) first = i + 1;
            if (sat) return v.vertex.has_value() && *v.vertex == first && first != 0;
            return first == 0 && !v.vertex.has_value();
        }
        case ConjectureId::C3: {
            if (!vec_n(v.vector)) return false;
            const RatVector& x = *v.vector;
            if (!sat) return is_nonneg(x) && vec_gt(mat_vec(s, x), zero_vector(n));
            return is_nonpos(x) && is_nonneg(mat_vec(transpose(s), x)) &&
                   dot(ones_vector(n), x).sign() < 0;
        }
        case ConjectureId::C4: {
            if (!vec_n(v.vector)) return false;
            const RatVector& x = *v.vector;
            if (sat) return is_nonneg(x) && !is_zero(x) && is_nonpos(mat_vec(s, x));
            return is_nonneg(x) && vec_gt(mat_vec(transpose(s), x), zero_vector(n));
        }
        case ConjectureId::C5: {
            if (sat)
                return vec_n(v.vector) && has_positive_component(*v.vector) &&
                       is_nonpos(mat_vec(s, *v.vector));
            return mat_n(v.matrix) && mat_mul(s, *v.matrix) == RatMatrix::identity(n) &&
                   is_nonnegative(*v.matrix);
        }
        case ConjectureId::C6: {
            if (sat && v.kind == EvidenceKind::Vector)
                return vec_n(v.vector) && !is_zero(*v.vector) &&
                       vec_eq(mat_vec(s, *v.vector), zero_vector(n));
            if (!mat_n(v.matrix) || mat_mul(s, *v.matrix) != RatMatrix::identity(n))
                return false;
            if (sat)
                return v.entry.has_value() &&
                       v.matrix->at(v.entry->first, v.entry->second).sign() < 0;
            return is_nonnegative(*v.matrix);
        }
        default: return false;
    }
}

bool verify_verdict(const Digraph& d, const Verdict& v) {
    if (v.conjecture != ConjectureId::C1)
        return verify_verdict_matrix(second_neighborhood_matrix(d), v);
    const int n = d.vertex_count();
    if (n < 1 || static_cast<int>(v.degree_table.size()) != n) return false;
    int first = 0;  // least vertex with d+ <= d++
    for (int u = 1; u <= n; ++u) {
        NeighborhoodProfile p = neighborhoods(d, u);
        if (v.degree_table[u - 1] != DegreeRow{u, p.dplus, p.dplusplus}) return false;
        if (first == 0 && p.dplus <= p.dplusplus) first = u;
    }
    if (v.satisfied()) return v.vertex.has_value() && *v.vertex == first && first != 0;
    return first == 0 && !v.vertex.has_value();
}

namespace {

CrossCheckReport run_consistency(const Digraph& d, const Digraph& rd, const RatMatrix& s,
                                 const RatMatrix& s_rev, const std::string& instance) {
    if (d.vertex_count() < 1) throw EmptyDigraph("consistency_check needs at least one vertex");
    CrossCheckReport rep;
    rep.instance = instance;
    rep.verdicts = {check_c1(d),        check_c2_matrix(s), check_c3_matrix(s),
                    check_c4_matrix(s), check_c5_matrix(s), check_c6_matrix(s)};
    rep.reversed_verdicts = {check_c1(rd),        check_c2_matrix(s_rev), check_c3_matrix(s_rev),
                             check_c4_matrix(s_rev), check_c5_matrix(s_rev), check_c6_matrix(s_rev)};
    const auto& fwd = rep.verdicts;
    const auto& rev = rep.reversed_verdicts;

    auto add = [&rep](const char* name, bool pass) {
        rep.relations.push_back({name, pass});
        if (!pass) rep.violations.emplace_back(name);
    };
    auto sat = [](const Verdict& v) { return v.satisfied(); };
    const int n = s.rows();

    add("c1_c2_agree", sat(fwd[0]) == sat(fwd[1]));
    add("c1_c2_agree_rev", sat(rev[0]) == sat(rev[1]));
    add("c5_c6_agree", sat(fwd[4]) == sat(fwd[5]));
    add("c5_c6_agree_rev", sat(rev[4]) == sat(rev[5]));

    // C4 fails exactly when C3 fails on the reverse; when both fail, each
    // certificate must translate into the other shape through the transpose.
    {
        bool pass = sat(fwd[3]) == sat(rev[2]);
        if (pass && !sat(fwd[3])) {
            const RatVector& p = *fwd[3].vector;  // p >= 0, S^T*p > 0
            const RatVector& w = *rev[2].vector;  // w >= 0, S_rev*w > 0
            pass = is_nonneg(p) && vec_gt(mat_vec(s_rev, p), zero_vector(n)) && is_nonneg(w) &&
                   vec_gt(mat_vec(transpose(s), w), zero_vector(n));
        }
        add("c4_fail_iff_rev_c3_fail", pass);
    }
    {
        bool pass = sat(rev[3]) == sat(fwd[2]);
        if (pass && !sat(rev[3])) {
            const RatVector& p = *rev[3].vector;
            const RatVector& w = *fwd[2].vector;
            pass = is_nonneg(p) && vec_gt(mat_vec(s, p), zero_vector(n)) && is_nonneg(w) &&
                   vec_gt(mat_vec(transpose(s_rev), w), zero_vector(n));
        }
        add("c4_fail_iff_rev_c3_fail_rev", pass);
    }

    add("c5_fail_implies_c4_fail", sat(fwd[4]) || !sat(fwd[3]));
    add("c5_fail_implies_c4_fail_rev", sat(rev[4]) || !sat(rev[3]));
    add("c2_fail_implies_rev_c4_fail", sat(fwd[1]) || !sat(rev[3]));
    add("c2_fail_implies_rev_c4_fail_rev", sat(rev[1]) || !sat(fwd[3]));

    bool evidence_ok = verify_verdict(d, fwd[0]) && verify_verdict(rd, rev[0]);
    for (int i = 1; i < 6 && evidence_ok; ++i)
        evidence_ok = verify_verdict_matrix(s, fwd[i]) && verify_verdict_matrix(s_rev, rev[i]);
    add("evidence_verified", evidence_ok);
    return rep;
}

}  // namespace

CrossCheckReport consistency_check(const Digraph& d, const std::string& instance) {
    Digraph rd = reverse(d);
    RatMatrix s = second_neighborhood_matrix(d);
    RatMatrix s_rev = second_neighborhood_matrix(rd);
    return run_consistency(d, rd, s, s_rev, instance);
}

CrossCheckReport consistency_check_injected(const Digraph& d, const RatMatrix& s,
                                            const RatMatrix& s_rev, const std::string& instance) {
    return run_consistency(d, reverse(d), s, s_rev, instance);
}

bool minimality_local(const Digraph& d, ConjectureId c) {
    Checker checker;
    switch (c) {
        case ConjectureId::C1: checker = check_c1; break;
        case ConjectureId::C2: checker = check_c2; break;
        case ConjectureId::C3: checker = check_c3; break;
        case ConjectureId::C4: checker = check_c4; break;
        case ConjectureId::C5: checker = check_c5; break;
        case ConjectureId::C6: checker = check_c6; break;
    }
    return minimality_local_report(d, checker).is_local_minimal;
}

MinimalityReport minimality_local_report(const Digraph& d, const Checker& checker) {
    if (checker(d).satisfied())
        throw NotACounterexample("minimality check on an instance that satisfies the conjecture");
    MinimalityReport rep;
    rep.is_local_minimal = true;
    for (const Arc& a : d.arcs())
        if (!checker(delete_arc(d, a)).satisfied()) {
            rep.is_local_minimal = false;
            break;
        }
    for (int v = 1; v <= d.vertex_count(); ++v) rep.degree_gaps.push_back(degree_gap(d, v));
    return rep;
}

bool kl_prune(const Digraph& d) {
    const int n = d.vertex_count();
    if (n == 0) return false;
    for (int v = 1; v <= n; ++v)
        if (static_cast<int>(d.out_neighbors(v).size()) < 7) return false;
    return true;
}

}  // namespace snc
