#ifndef TREETORSOR_BERNARDI_HPP
#define TREETORSOR_BERNARDI_HPP

#include "treetorsor/divisor.hpp"
#include "treetorsor/ribbon_graph.hpp"
#include "treetorsor/trees.hpp"

#include <map>
#include <vector>

namespace treetorsor {

/// Record of one Bernardi tour around a spanning tree with initial data (q,e).
///
/// The tour starts at q about to consider e, traverses every tree edge twice
/// and skips every non-tree edge twice, once from each endpoint. A chip is
/// dropped at the current vertex the first time an edge is skipped.
struct BernardiTour {
    VertexId base = -1;
    EdgeId start_edge = -1;
    std::vector<VertexId> vertices; // v0, ..., v_{2(n-1)}; front() == back() == base
    std::vector<EdgeId> edges;      // traversed tree edges, in order

    struct Skip {
        EdgeId edge;
        VertexId at;
        bool first; // chip placed here
    };
    std::vector<Skip> skips;
};

/// Runs the tour for tree t from initial data (q,e); e must be incident to q.
BernardiTour bernardi_tour(const RibbonGraph& g, const SpanningTree& t, VertexId q, EdgeId e);

/// The break divisor collected by the tour's first-skip chips.
Divisor bernardi_break_divisor(const RibbonGraph& g, const SpanningTree& t, VertexId q, EdgeId e);

/// Tree <-> break-divisor-class lookup at fixed initial data (q,e). Classes
/// are keyed by pivot-reduced form, so lookups accept any representative.
class BernardiTable {
public:
    BernardiTable(const RibbonGraph& g, const TreeList& trees, VertexId q, EdgeId e);

    VertexId base() const { return q_; }
    EdgeId start_edge() const { return e_; }
    const Divisor& break_divisor(int tree_index) const { return divisors_.at(tree_index); }
    /// Index of the tree whose break divisor is equivalent to d.
    int tree_for_class(const RibbonGraph& g, const Divisor& d) const;

private:
    VertexId q_;
    EdgeId e_;
    std::vector<Divisor> divisors_;
    std::map<Divisor, int> by_reduced_form_;
};

/// Canonical edge choice used when the bijection data only fixes q: the first
/// half-edge in q's rotation. The induced action is independent of this choice.
EdgeId default_tour_edge(const RibbonGraph& g, VertexId q);

/// Bernardi action of a degree-0 divisor on a tree at base q: translate the
/// tree's break-divisor class by d and pull the result back through the
/// bijection.
SpanningTree bernardi_action(const RibbonGraph& g, const TreeList& trees, VertexId q, const Divisor& d,
                             const SpanningTree& t);

SpanningTree bernardi_action(const RibbonGraph& g, const TreeList& trees, const BernardiTable& table,
                             const Divisor& d, const SpanningTree& t);

} // namespace treetorsor

#endif
