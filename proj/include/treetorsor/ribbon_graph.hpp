#ifndef TREETORSOR_RIBBON_GRAPH_HPP
#define TREETORSOR_RIBBON_GRAPH_HPP

#include "treetorsor/errors.hpp"

#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

namespace treetorsor {

/// Index of a vertex in the canonical (construction) order.
using VertexId = int;
/// Index of an edge in the canonical order (edges sorted by name).
using EdgeId = int;

enum class Side { Left, Right };

/// Connected loopless multigraph with a rotation system, stored on half-edges.
///
/// Every edge is a pair of half-edges living at distinct vertices; the rotation
/// at a vertex lists its half-edges in counterclockwise cyclic order. The graph
/// is immutable after build(); minors are returned as new graphs.
class RibbonGraph {
public:
    struct VertexSpec {
        std::string name;
        std::vector<int> halves; // half-edge ids at this vertex, counterclockwise
    };
    struct EdgeSpec {
        std::string name;
        int half_a = -1;
        int half_b = -1;
    };

    /// Validates all invariants (fixed-point-free involution, no loops,
    /// connectivity, half-edge uniqueness) and fixes the canonical vertex order
    /// as given. Edges are reindexed in sorted-name order.
    static RibbonGraph build(std::vector<VertexSpec> rotation, std::vector<EdgeSpec> pairing);

    int vertex_count() const { return static_cast<int>(vertex_names_.size()); }
    int edge_count() const { return static_cast<int>(edges_.size()); }
    int half_edge_count() const { return 2 * edge_count(); }

    const std::string& vertex_name(VertexId v) const { return vertex_names_.at(v); }
    const std::string& edge_name(EdgeId e) const { return edges_.at(e).name; }
    VertexId vertex(std::string_view name) const;
    EdgeId edge(std::string_view name) const;
    bool has_vertex(std::string_view name) const;

    /// Half-edge ids at v in counterclockwise order, as given at build time.
    std::span<const int> rotation(VertexId v) const;

    int degree(VertexId v) const { return static_cast<int>(rotation(v).size()); }

    /// Next half-edge counterclockwise at the vertex carrying h.
    int successor(int half) const;
    int predecessor(int half) const;
    /// The other half of h's edge.
    int mate(int half) const;

    VertexId half_vertex(int half) const;
    EdgeId half_edge(int half) const;
    /// The half-edge of e at v; e must be incident to v.
    int half_at(VertexId v, EdgeId e) const;

    std::pair<VertexId, VertexId> endpoints(EdgeId e) const;
    VertexId other_endpoint(EdgeId e, VertexId v) const;
    bool incident(EdgeId e, VertexId v) const;
    /// Edges at v in rotation order.
    std::vector<EdgeId> edges_at(VertexId v) const;

    /// Edges from e0 to e1 inclusive, following the rotation at v.
    /// The interval stops at the first occurrence of e1.
    std::vector<EdgeId> interval(VertexId v, EdgeId e0, EdgeId e1) const;

    /// Orbits of the next-face map (pairing, then rotation-successor).
    /// Each orbit starts at its smallest half-edge id; orbits sorted likewise.
    std::vector<std::vector<int>> faces() const;
    /// Genus of the closed oriented surface determined by the rotation system.
    int surface_genus() const;
    /// First Betti number |E| - |V| + 1 (the degree of break divisors).
    int first_betti() const { return edge_count() - vertex_count() + 1; }

    RibbonGraph delete_edge(EdgeId e) const;
    /// Contracts e by splicing the endpoint rotations at the deleted half-edge
    /// positions. Loops created by the contraction are removed; their number is
    /// written to loops_removed when non-null.
    RibbonGraph contract_edge(EdgeId e, int* loops_removed = nullptr) const;

    /// All half-edge ids, ascending.
    const std::vector<int>& half_edge_ids() const { return half_ids_; }

private:
    struct Half {
        bool present = false;
        VertexId vertex = -1;
        EdgeId edge = -1;
        int mate = -1;
        int succ = -1;
        int pred = -1;
    };
    struct EdgeRec {
        std::string name;
        int half_a = -1; // at the smaller vertex index
        int half_b = -1;
    };

    const Half& half(int id) const;

    std::vector<std::string> vertex_names_;
    std::unordered_map<std::string, VertexId> vertex_index_;
    std::vector<std::vector<int>> rotations_;
    std::vector<EdgeRec> edges_;
    std::unordered_map<std::string, EdgeId> edge_index_;
    std::vector<Half> halves_; // indexed by half-edge id
    std::vector<int> half_ids_;
};

/// Closed cycle: edges[i] joins vertices[i] to vertices[(i+1) % k]. Injective
/// on both vertices and edges; traversal order carries the orientation.
struct OrientedCycle {
    std::vector<VertexId> vertices;
    std::vector<EdgeId> edges;

    int length() const { return static_cast<int>(edges.size()); }
    bool contains_vertex(VertexId v) const;
    bool contains_edge(EdgeId e) const;
    int vertex_position(VertexId v) const; // -1 when absent
    OrientedCycle reversed() const;
    /// The cycle edge entering v under this orientation.
    EdgeId edge_in(VertexId v) const;
    /// The cycle edge leaving v under this orientation.
    EdgeId edge_out(VertexId v) const;
};

/// Open walk: edges[i] joins vertices[i] to vertices[i+1]. Injective on edges;
/// vertices may repeat.
struct GraphPath {
    std::vector<VertexId> vertices;
    std::vector<EdgeId> edges;

    int length() const { return static_cast<int>(edges.size()); }
    bool empty() const { return edges.empty(); }
    VertexId front() const { return vertices.front(); }
    VertexId back() const { return vertices.back(); }
    GraphPath reversed() const;
};

/// Side of the cycle on which e lies at cycle vertex v: Left when e sits in the
/// rotation interval from the outgoing to the incoming cycle edge at v.
Side classify_edge_side(const RibbonGraph& g, const OrientedCycle& c, VertexId v, EdgeId e);

/// Checks the OrientedCycle invariants against g.
void validate_cycle(const RibbonGraph& g, const OrientedCycle& c);
/// Checks the GraphPath invariants against g.
void validate_path(const RibbonGraph& g, const GraphPath& p);

} // namespace treetorsor

#endif
