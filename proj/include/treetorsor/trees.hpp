#ifndef TREETORSOR_TREES_HPP
#define TREETORSOR_TREES_HPP

#include "treetorsor/ribbon_graph.hpp"

#include <cstdint>
#include <unordered_map>
#include <vector>

namespace treetorsor {

/// Edge subset of a spanning tree, one bit per canonical edge index.
struct SpanningTree {
    uint64_t mask = 0;

    bool contains(EdgeId e) const { return (mask >> e) & 1u; }
    bool operator==(const SpanningTree&) const = default;
};

std::vector<EdgeId> tree_edges(const RibbonGraph& g, const SpanningTree& t);

/// All spanning trees in canonical order: lexicographic on the sorted
/// edge-name sequences (equivalently on ascending edge-index tuples).
class TreeList {
public:
    TreeList() = default;
    explicit TreeList(std::vector<SpanningTree> trees);

    int size() const { return static_cast<int>(trees_.size()); }
    const SpanningTree& operator[](int i) const { return trees_.at(i); }
    /// Canonical index of t; NotFound when t is not a spanning tree of the list.
    int index_of(const SpanningTree& t) const;
    const std::vector<SpanningTree>& all() const { return trees_; }

private:
    std::vector<SpanningTree> trees_;
    std::unordered_map<uint64_t, int> index_;
};

/// Enumerates all spanning trees; the count is checked against the
/// matrix-tree determinant.
TreeList enumerate_trees(const RibbonGraph& g);

/// The unique path in t from u to v (empty when u == v).
GraphPath tree_path(const RibbonGraph& g, const SpanningTree& t, VertexId u, VertexId v);

/// Deterministic greedy extension of `required` to a spanning tree avoiding
/// `forbidden`, scanning edges in canonical order. Infeasible when none exists.
SpanningTree extend_to_tree(const RibbonGraph& g, uint64_t required, uint64_t forbidden);

/// Edges of g outside t, ascending.
std::vector<EdgeId> non_tree_edges(const RibbonGraph& g, const SpanningTree& t);

bool is_spanning_tree(const RibbonGraph& g, const SpanningTree& t);

} // namespace treetorsor

#endif
