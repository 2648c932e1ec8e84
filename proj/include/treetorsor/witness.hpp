#ifndef TREETORSOR_WITNESS_HPP
#define TREETORSOR_WITNESS_HPP

#include "treetorsor/divisor.hpp"
#include "treetorsor/ribbon_graph.hpp"
#include "treetorsor/trees.hpp"

#include <optional>
#include <string>
#include <vector>

namespace treetorsor {

/// Certificate that a cycle is nonseparating: a path meeting the cycle only in
/// its endpoints whose first edge lies left of the stored orientation and whose
/// last edge lies right. Proper when the endpoints are distinct cycle vertices;
/// tight when the pair minimizes the shared-vertex interval in a graph without
/// proper pairs.
struct WitnessPair {
    OrientedCycle cycle;
    GraphPath path;
    bool proper = false;
    bool tight = false;
    VertexId z = -1;             // designated shared endpoint
    std::optional<VertexId> x;   // the other endpoint, when proper

    /// Same geometry with the roles of the two endpoints exchanged.
    WitnessPair swapped_roles() const;
};

/// Throws InternalError when the pair violates its invariants.
void validate_witness_pair(const RibbonGraph& g, const WitnessPair& pair);

/// Simple cycles (injective on vertices and edges, parallel pairs included) in
/// canonical order: sorted by edge-name sequence, each in the orientation that
/// starts at its smallest vertex and leaves along its smaller edge.
std::vector<OrientedCycle> enumerate_cycles(const RibbonGraph& g);

/// First witness path for the given orientation in canonical order (shortest
/// first), or nothing when the oriented cycle has none.
std::optional<GraphPath> find_witness_path(const RibbonGraph& g, const OrientedCycle& c);

/// A cycle is nonseparating when each orientation admits a witness path;
/// existence for one orientation implies it for the other (the reversed path
/// serves), so a single search decides.
bool is_nonseparating(const RibbonGraph& g, const OrientedCycle& c);

/// True exactly when the rotation system is nonplanar (genus > 0).
bool has_nonseparating_cycle(const RibbonGraph& g);

/// First proper pair in canonical enumeration order.
std::optional<WitnessPair> find_proper_witness_pair(const RibbonGraph& g);

/// Every proper pair the canonical enumeration can produce, in order.
std::vector<WitnessPair> all_proper_witness_pairs(const RibbonGraph& g);

/// First tight pair, for nonplanar graphs without proper pairs. The stored
/// orientation puts the minimal shared-vertex interval on the left.
std::optional<WitnessPair> find_tight_witness_pair(const RibbonGraph& g);

/// Tree construction from a proper pair whose cycle edges at z are
/// consecutive: q is the far endpoint of the dropped cycle edge, and the tree
/// extends (C minus that edge) plus (P minus one path edge).
struct ProperSetup {
    WitnessPair pair;
    VertexId z = -1;
    VertexId q = -1;
    EdgeId kept_cycle_edge = -1;    // stays in the tree; the rotor at z starts here
    EdgeId dropped_cycle_edge = -1; // {z,q}; one rotor advance moves the chip to q
    EdgeId dropped_path_edge = -1;
    SpanningTree tree;
    bool strict = false; // no edges at all between the two cycle edges at z
};

/// PrecedenceFails when no labeling of the cycle edges at z is consecutive.
/// With ignore_detached, edges in between whose component of G - z misses both
/// C and P are tolerated (the routing detour through them changes nothing).
ProperSetup proper_pair_setup(const RibbonGraph& g, const WitnessPair& pair, bool ignore_detached = false);

/// One splice step toward consecutive cycle edges at z: reroutes the cycle
/// through the component of the first obstructing edge, through a cycle vertex
/// or through a path vertex. ComponentDisjoint when every in-between edge has
/// a detached component, in which case proper_pair_setup applies directly.
WitnessPair reroute_witness(const RibbonGraph& g, const WitnessPair& pair);

/// Number of in-between edges at z whose component meets C or P, minimized
/// over the two labelings; the reroute step strictly decreases it.
int obstruction_count(const RibbonGraph& g, const WitnessPair& pair);

/// Tree construction from a tight pair in a simple graph: q is the cycle
/// neighbor of z on the minimal-interval side, e = {z,q} is dropped, and the
/// tree keeps every other edge at z.
struct TightSetup {
    WitnessPair pair;
    VertexId z = -1;
    VertexId q = -1;
    EdgeId dropped_edge = -1; // e = {z,q}
    EdgeId next_edge = -1;    // the edge after e in the rotation at q
    SpanningTree tree;
    std::vector<VertexId> left, right;     // off-cycle neighbors of z by side
    std::vector<VertexId> left_h, right_h; // those on witness paths through z
    std::vector<EdgeId> witness_subgraph;  // edges of all minimal witness paths
};

/// NotApplicable unless g is simple, nonplanar, without proper pairs, and the
/// pair is tight.
TightSetup tight_pair_setup(const RibbonGraph& g, const WitnessPair& pair);

/// Outcome of the constructive search for a base vertex where the torsors
/// disagree, with the divisor inequality that proves it.
struct DisagreementEvidence {
    std::string route; // "proper-witness" or "tight-witness"
    WitnessPair pair;
    VertexId q = -1;
    VertexId z = -1;
    SpanningTree tree;        // constructed tree T
    SpanningTree rotor_image; // rotor action of (z)-(q) on T
    EdgeId tour_edge = -1;    // Bernardi initial edge at q
    Divisor translated;       // (z)-(q) + break divisor of T
    Divisor image_break;      // break divisor of the rotor image
};

/// Runs the witness-pair constructions until one exhibits inequivalent break
/// divisors, proving the actions differ at q. Empty for planar rotation
/// systems and for nonplanar multigraphs without proper pairs.
std::optional<DisagreementEvidence> construct_disagreement(const RibbonGraph& g, const TreeList& trees);

/// No two edges share both endpoints.
bool is_simple_graph(const RibbonGraph& g);

} // namespace treetorsor

#endif
