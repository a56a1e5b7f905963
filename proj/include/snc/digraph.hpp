#pragma once

#include <optional>
#include <vector>

namespace snc {

/// Directed edge between distinct vertices. Vertices are 1-based indices.
struct Arc {
    int tail = 0;
    int head = 0;
    friend auto operator<=>(const Arc&, const Arc&) = default;
};

/// Orientation of a simple graph: no loops, no digons (antiparallel pairs).
/// Immutable after construction; all structural edits return new values.
class Digraph {
public:
    Digraph() = default;

    int vertex_count() const { return n_; }
    int arc_count() const { return static_cast<int>(arcs_.size()); }

    /// Arcs sorted lexicographically by (tail, head).
    const std::vector<Arc>& arcs() const { return arcs_; }

    bool has_arc(int u, int v) const;

    /// Sorted ascending. v must be in 1..n.
    const std::vector<int>& out_neighbors(int v) const;
    const std::vector<int>& in_neighbors(int v) const;

    friend bool operator==(const Digraph& a, const Digraph& b) {
        return a.n_ == b.n_ && a.arcs_ == b.arcs_;
    }

    friend Digraph build_digraph(int n, const std::vector<Arc>& arcs);

private:
    int n_ = 0;
    std::vector<Arc> arcs_;                // sorted, deduplicated
    std::vector<std::vector<int>> out_;    // 1-based; [0] unused
    std::vector<std::vector<int>> in_;
};

/// Validates the simplicity invariants: rejects loops, digons, and
/// endpoints outside 1..n. Duplicate arcs in the input are merged.
Digraph build_digraph(int n, const std::vector<Arc>& arcs);

/// Shortest directed-path lengths from `source` to every vertex,
/// indexed 1..n ([0] unused); -1 marks unreachable. d(source,source)=0.
std::vector<int> distances_from(const Digraph& d, int source);

/// Same, but along reversed arcs: entry v is the in-distance d(v, target).
std::vector<int> distances_to(const Digraph& d, int target);

/// Length of the shortest directed path u->v; nullopt when none exists.
std::optional<int> out_distance(const Digraph& d, int u, int v);

struct NeighborhoodProfile {
    std::vector<int> nplus;        // out-distance exactly 1, sorted
    std::vector<int> nplusplus;    // out-distance exactly 2
    std::vector<int> nminus;       // in-distance exactly 1
    std::vector<int> nminusminus;  // in-distance exactly 2
    int dplus = 0;
    int dplusplus = 0;
    int dminus = 0;
    int dminusminus = 0;
};

NeighborhoodProfile neighborhoods(const Digraph& d, int v);

/// Every arc direction flipped.
Digraph reverse(const Digraph& d);

Digraph delete_arc(const Digraph& d, Arc a);

struct VertexDeletion {
    Digraph digraph;
    /// old_to_new[old] = new index (1..n-1), or 0 for the removed vertex.
    /// Size n+1, [0] unused. Remaining vertices keep their relative order.
    std::vector<int> old_to_new;
};

VertexDeletion delete_vertex(const Digraph& d, int v);

bool is_strongly_connected(const Digraph& d);

/// a(v) = d-(v) - d--(v).
int degree_gap(const Digraph& d, int v);

struct BlowUpResult {
    Digraph digraph;
    /// class_of[w] = i when vertex w of the blow-up replaces vertex i of
    /// the input. Size (new n)+1, [0] unused. Classes are laid out
    /// contiguously in input order, so class i occupies the index range
    /// [1 + sum(u_1..u_{i-1}), sum(u_1..u_i)].
    std::vector<int> class_of;
};

/// Replaces vertex i by an independent set of size multiplicities[i-1] and
/// every arc by complete one-way connections between the two classes.
BlowUpResult blow_up(const Digraph& d, const std::vector<int>& multiplicities);

}  // namespace snc
