#include "snc/digraph.hpp"

#include <algorithm>
#include <deque>
#include <string>

#include "snc/errors.hpp"

namespace snc {

namespace {

void require_vertex(const Digraph& d, int v) {
    if (v < 1 || v > d.vertex_count())
        throw VertexOutOfRange("vertex " + std::to_string(v) + " not in 1.." +
                               std::to_string(d.vertex_count()));
}

}  // namespace

Digraph build_digraph(int n, const std::vector<Arc>& arcs) {
    if (n < 0) throw VertexOutOfRange("negative vertex count");
    Digraph d;
    d.n_ = n;
    std::vector<Arc> sorted = arcs;
    std::sort(sorted.begin(), sorted.end());
    sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
    for (const Arc& a : sorted) {
        if (a.tail == a.head)
            throw LoopArc("loop at vertex " + std::to_string(a.tail));
        if (a.tail < 1 || a.tail > n || a.head < 1 || a.head > n)
            throw VertexOutOfRange("arc (" + std::to_string(a.tail) + "," +
                                   std::to_string(a.head) + ") leaves 1.." + std::to_string(n));
    }
    d.out_.assign(n + 1, {});
    d.in_.assign(n + 1, {});
    for (const Arc& a : sorted) {
        if (std::binary_search(sorted.begin(), sorted.end(), Arc{a.head, a.tail}))
            throw DigonPair("digon between " + std::to_string(std::min(a.tail, a.head)) + " and " +
                            std::to_string(std::max(a.tail, a.head)));
        d.out_[a.tail].push_back(a.head);
        d.in_[a.head].push_back(a.tail);
    }
    for (int v = 1; v <= n; ++v) {
        std::sort(d.out_[v].begin(), d.out_[v].end());
        std::sort(d.in_[v].begin(), d.in_[v].end());
    }
    d.arcs_ = std::move(sorted);
    return d;
}

bool Digraph::has_arc(int u, int v) const {
    return std::binary_search(arcs_.begin(), arcs_.end(), Arc{u, v});
}

const std::vector<int>& Digraph::out_neighbors(int v) const {
    require_vertex(*this, v);
    return out_[v];
}

const std::vector<int>& Digraph::in_neighbors(int v) const {
    require_vertex(*this, v);
    return in_[v];
}

namespace {

template <typename Neighbors>
std::vector<int> bfs(int n, int source, Neighbors&& neighbors) {
    std::vector<int> dist(n + 1, -1);
    dist[source] = 0;
    std::deque<int> queue{source};
    while (!queue.empty()) {
        int u = queue.front();
        queue.pop_front();
        for (int w : neighbors(u)) {
            if (dist[w] < 0) {
                dist[w] = dist[u] + 1;
                queue.push_back(w);
            }
        }
    }
    return dist;
}

}  // namespace

std::vector<int> distances_from(const Digraph& d, int source) {
    require_vertex(d, source);
    return bfs(d.vertex_count(), source,
               [&](int u) -> const std::vector<int>& { return d.out_neighbors(u); });
}

std::vector<int> distances_to(const Digraph& d, int target) {
    require_vertex(d, target);
    return bfs(d.vertex_count(), target,
               [&](int u) -> const std::vector<int>& { return d.in_neighbors(u); });
}

std::optional<int> out_distance(const Digraph& d, int u, int v) {
    require_vertex(d, u);
    require_vertex(d, v);
    int dist = distances_from(d, u)[v];
    if (dist < 0) return std::nullopt;
    return dist;
}

NeighborhoodProfile neighborhoods(const Digraph& d, int v) {
    require_vertex(d, v);
    NeighborhoodProfile p;
    std::vector<int> out = distances_from(d, v);
    std::vector<int> in = distances_to(d, v);
    for (int u = 1; u <= d.vertex_count(); ++u) {
        if (out[u] == 1) p.nplus.push_back(u);
        if (out[u] == 2) p.nplusplus.push_back(u);
        if (in[u] == 1) p.nminus.push_back(u);
        if (in[u] == 2) p.nminusminus.push_back(u);
    }
    p.dplus = static_cast<int>(p.nplus.size());
    p.dplusplus = static_cast<int>(p.nplusplus.size());
    p.dminus = static_cast<int>(p.nminus.size());
    p.dminusminus = static_cast<int>(p.nminusminus.size());
    return p;
}

Digraph reverse(const Digraph& d) {
    std::vector<Arc> flipped;
    flipped.reserve(d.arcs().size());
    for (const Arc& a : d.arcs()) flipped.push_back({a.head, a.tail});
    return build_digraph(d.vertex_count(), flipped);
}

Digraph delete_arc(const Digraph& d, Arc a) {
    if (!d.has_arc(a.tail, a.head))
        throw ArcNotPresent("arc (" + std::to_string(a.tail) + "," + std::to_string(a.head) +
                            ") not present");
    std::vector<Arc> kept;
    kept.reserve(d.arcs().size() - 1);
    for (const Arc& x : d.arcs())
        if (!(x == a)) kept.push_back(x);
    return build_digraph(d.vertex_count(), kept);
}

VertexDeletion delete_vertex(const Digraph& d, int v) {
    require_vertex(d, v);
    std::vector<int> old_to_new(d.vertex_count() + 1, 0);
    int next = 0;
    for (int u = 1; u <= d.vertex_count(); ++u)
        if (u != v) old_to_new[u] = ++next;
    std::vector<Arc> kept;
    for (const Arc& a : d.arcs())
        if (a.tail != v && a.head != v) kept.push_back({old_to_new[a.tail], old_to_new[a.head]});
    return {build_digraph(d.vertex_count() - 1, kept), std::move(old_to_new)};
}

bool is_strongly_connected(const Digraph& d) {
    if (d.vertex_count() < 1) throw EmptyDigraph("strong connectivity needs a vertex");
    std::vector<int> out = distances_from(d, 1);
    std::vector<int> in = distances_to(d, 1);
    for (int v = 1; v <= d.vertex_count(); ++v)
        if (out[v] < 0 || in[v] < 0) return false;
    return true;
}

int degree_gap(const Digraph& d, int v) {
    NeighborhoodProfile p = neighborhoods(d, v);
    return p.dminus - p.dminusminus;
}

BlowUpResult blow_up(const Digraph& d, const std::vector<int>& multiplicities) {
    if (static_cast<int>(multiplicities.size()) != d.vertex_count())
        throw DimensionMismatch("blow-up needs one multiplicity per vertex");
    for (int u : multiplicities)
        if (u < 1) throw NonPositiveMultiplicity("multiplicity " + std::to_string(u));

    // first_index[i] = first new vertex of class i; classes in input order.
    std::vector<int> first_index(d.vertex_count() + 1, 0);
    int total = 0;
    for (int i = 1; i <= d.vertex_count(); ++i) {
        first_index[i] = total + 1;
        total += multiplicities[i - 1];
    }
    std::vector<int> class_of(total + 1, 0);
    for (int i = 1; i <= d.vertex_count(); ++i)
        for (int k = 0; k < multiplicities[i - 1]; ++k) class_of[first_index[i] + k] = i;

    std::vector<Arc> arcs;
    for (const Arc& a : d.arcs())
        for (int s = 0; s < multiplicities[a.tail - 1]; ++s)
            for (int t = 0; t < multiplicities[a.head - 1]; ++t)
                arcs.push_back({first_index[a.tail] + s, first_index[a.head] + t});
    return {build_digraph(total, arcs), std::move(class_of)};
}

}  // namespace snc
