#ifndef TREETORSOR_ROTOR_HPP
#define TREETORSOR_ROTOR_HPP

#include "treetorsor/divisor.hpp"
#include "treetorsor/ribbon_graph.hpp"
#include "treetorsor/trees.hpp"

#include <optional>
#include <vector>

namespace treetorsor {

/// State of the rotor-routing system: one half-edge per vertex (-1 where the
/// rotor is absent, e.g. at a designated sink) and the chip location.
struct RotorConfiguration {
    std::vector<int> rotor; // half-edge id at each vertex, or -1
    VertexId chip = -1;

    EdgeId rotor_edge(const RibbonGraph& g, VertexId v) const;
    bool total() const;
};

/// Rotors pointing along the first tree edge toward q; the rotor at q is left
/// unset. The chip is placed at q by default.
RotorConfiguration tree_to_rotor(const RibbonGraph& g, const SpanningTree& t, VertexId q);

/// The subgraph whose edges are the rotors (read on vertices with a rotor).
SpanningTree rotor_to_subgraph(const RibbonGraph& g, const RotorConfiguration& c);

/// One step: advance the rotor at the chip vertex to the successor half-edge,
/// then move the chip along the new edge. AtSink when that vertex has no rotor.
RotorConfiguration rotor_step(const RibbonGraph& g, RotorConfiguration c);

struct RoutingStep {
    VertexId from;
    EdgeId edge;
    VertexId to;
};

struct RoutingResult {
    RotorConfiguration config; // final rotors, chip at the sink
    SpanningTree tree;         // the rotor subgraph, always a spanning tree
    std::vector<RoutingStep> trace;
};

/// Iterates rotor steps from (rotors, chip) until the chip reaches sink. The
/// defensive budget of 4 * |E| * |Pic0| steps flags runaway dynamics as a bug.
RoutingResult route_to_sink(const RibbonGraph& g, RotorConfiguration rotors, VertexId chip, VertexId sink,
                            bool want_trace = false);

/// Rotor-routing action of a degree-0 divisor on a tree at base q: positive
/// generator coefficients route chips to the sink; negative ones apply the
/// inverse of the generator's permutation of the full tree list.
SpanningTree rotor_action(const RibbonGraph& g, const TreeList& trees, VertexId q, const Divisor& d,
                          const SpanningTree& t);

/// True when the rotor function is total, its functional graph has exactly one
/// directed cycle, and the chip sits on that cycle.
bool is_unicycle(const RibbonGraph& g, const RotorConfiguration& c);

/// Vertices of every directed cycle in the functional graph of a total rotor.
std::vector<std::vector<VertexId>> rotor_cycles(const RibbonGraph& g, const RotorConfiguration& c);

} // namespace treetorsor

#endif
