#include "treetorsor/trees.hpp"

#include "treetorsor/divisor.hpp"

#include <algorithm>
#include <numeric>

namespace treetorsor {

namespace {

struct UnionFind {
    std::vector<int> parent;
    explicit UnionFind(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
    int find(int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    }
    bool unite(int a, int b) {
        a = find(a);
        b = find(b);
        if (a == b) return false;
        parent[b] = a;
        return true;
    }
};

} // namespace

std::vector<EdgeId> tree_edges(const RibbonGraph& g, const SpanningTree& t) {
    std::vector<EdgeId> out;
    for (EdgeId e = 0; e < g.edge_count(); ++e)
        if (t.contains(e)) out.push_back(e);
    return out;
}

std::vector<EdgeId> non_tree_edges(const RibbonGraph& g, const SpanningTree& t) {
    std::vector<EdgeId> out;
    for (EdgeId e = 0; e < g.edge_count(); ++e)
        if (!t.contains(e)) out.push_back(e);
    return out;
}

bool is_spanning_tree(const RibbonGraph& g, const SpanningTree& t) {
    UnionFind uf(g.vertex_count());
    int used = 0;
    for (EdgeId e = 0; e < g.edge_count(); ++e) {
        if (!t.contains(e)) continue;
        auto [a, b] = g.endpoints(e);
        if (!uf.unite(a, b)) return false;
        ++used;
    }
    return used == g.vertex_count() - 1;
}

TreeList::TreeList(std::vector<SpanningTree> trees) : trees_(std::move(trees)) {
    for (int i = 0; i < size(); ++i) index_.emplace(trees_[i].mask, i);
}

int TreeList::index_of(const SpanningTree& t) const {
    auto it = index_.find(t.mask);
    if (it == index_.end()) fail(ErrorKind::NotFound, "subset is not a spanning tree of this graph");
    return it->second;
}

TreeList enumerate_trees(const RibbonGraph& g) {
    const int m = g.edge_count();
    const int n = g.vertex_count();
    if (m > 62) fail(ErrorKind::InternalError, "tree enumeration limited to 62 edges");
    const int k = n - 1;

    std::vector<SpanningTree> found;
    // Edge indices are already in sorted-name order, so ascending index
    // combinations come out in the canonical lexicographic order.
    std::vector<int> combo(k);
    std::iota(combo.begin(), combo.end(), 0);
    if (k == 0) {
        found.push_back(SpanningTree{0});
    } else if (k <= m) {
        while (true) {
            SpanningTree t;
            for (int e : combo) t.mask |= uint64_t{1} << e;
            if (is_spanning_tree(g, t)) found.push_back(t);
            // next combination
            int i = k - 1;
            while (i >= 0 && combo[i] == m - k + i) --i;
            if (i < 0) break;
            ++combo[i];
            for (int j = i + 1; j < k; ++j) combo[j] = combo[j - 1] + 1;
        }
    }

    const long long expected = reduced_laplacian_determinant(g);
    if (static_cast<long long>(found.size()) != expected)
        fail(ErrorKind::InternalError,
             "enumerated " + std::to_string(found.size()) + " spanning trees, matrix-tree determinant says " +
                 std::to_string(expected));
    return TreeList(std::move(found));
}

GraphPath tree_path(const RibbonGraph& g, const SpanningTree& t, VertexId u, VertexId v) {
    GraphPath path;
    path.vertices.push_back(u);
    if (u == v) return path;

    // DFS from u within tree edges; the route to v is unique.
    std::vector<int> parent_edge(g.vertex_count(), -1);
    std::vector<VertexId> parent(g.vertex_count(), -1);
    std::vector<char> seen(g.vertex_count(), 0);
    std::vector<VertexId> stack{u};
    seen[u] = 1;
    while (!stack.empty()) {
        VertexId x = stack.back();
        stack.pop_back();
        if (x == v) break;
        for (EdgeId e : g.edges_at(x)) {
            if (!t.contains(e)) continue;
            VertexId y = g.other_endpoint(e, x);
            if (seen[y]) continue;
            seen[y] = 1;
            parent[y] = x;
            parent_edge[y] = e;
            stack.push_back(y);
        }
    }
    if (!seen[v]) fail(ErrorKind::InternalError, "tree does not span both path endpoints");

    std::vector<VertexId> rev{v};
    std::vector<EdgeId> rev_edges;
    for (VertexId x = v; x != u; x = parent[x]) {
        rev_edges.push_back(parent_edge[x]);
        rev.push_back(parent[x]);
    }
    path.vertices.assign(rev.rbegin(), rev.rend());
    path.edges.assign(rev_edges.rbegin(), rev_edges.rend());
    return path;
}

SpanningTree extend_to_tree(const RibbonGraph& g, uint64_t required, uint64_t forbidden) {
    if (required & forbidden)
        fail(ErrorKind::Infeasible, "required and forbidden edge sets overlap");
    UnionFind uf(g.vertex_count());
    SpanningTree t;
    int used = 0;
    for (EdgeId e = 0; e < g.edge_count(); ++e) {
        if (!((required >> e) & 1u)) continue;
        auto [a, b] = g.endpoints(e);
        if (!uf.unite(a, b)) fail(ErrorKind::Infeasible, "required edge set contains a cycle");
        t.mask |= uint64_t{1} << e;
        ++used;
    }
    for (EdgeId e = 0; e < g.edge_count() && used < g.vertex_count() - 1; ++e) {
        if ((forbidden >> e) & 1u) continue;
        if (t.contains(e)) continue;
        auto [a, b] = g.endpoints(e);
        if (uf.unite(a, b)) {
            t.mask |= uint64_t{1} << e;
            ++used;
        }
    }
    if (used != g.vertex_count() - 1)
        fail(ErrorKind::Infeasible, "no spanning tree contains the required edges and avoids the forbidden ones");
    return t;
}

} // namespace treetorsor
