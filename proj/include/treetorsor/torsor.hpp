#ifndef TREETORSOR_TORSOR_HPP
#define TREETORSOR_TORSOR_HPP

#include "treetorsor/bernardi.hpp"
#include "treetorsor/permutation.hpp"
#include "treetorsor/ribbon_graph.hpp"
#include "treetorsor/rotor.hpp"
#include "treetorsor/trees.hpp"

#include <optional>
#include <vector>

namespace treetorsor {

enum class ActionKind { Bernardi, Rotor };

const char* action_kind_name(ActionKind k);

/// Permutation of canonical tree indices induced by the class of (v) - (q).
TreePermutation action_permutation(const RibbonGraph& g, const TreeList& trees, ActionKind kind, VertexId q,
                                   VertexId v);

/// Permutation induced by an arbitrary degree-0 divisor class at base q.
TreePermutation action_permutation(const RibbonGraph& g, const TreeList& trees, ActionKind kind, VertexId q,
                                   const Divisor& d);

/// Bernardi generator permutation computed through an explicit (q,e) table;
/// the result does not depend on the table's edge.
TreePermutation bernardi_permutation(const RibbonGraph& g, const TreeList& trees, const BernardiTable& table,
                                     const Divisor& d);

struct DisagreementWitness {
    VertexId generator;
    int tree_index;
    int rotor_image;
    int bernardi_image;
};

struct BaseComparison {
    VertexId base = -1;
    bool agree = true;
    std::optional<DisagreementWitness> witness;
    // difference permutation per generator (v) - (base), for all v != base
    std::vector<std::pair<VertexId, TreePermutation>> differences;
};

/// Compares rotor and Bernardi actions at base q on every generator and tree.
BaseComparison compare_torsors(const RibbonGraph& g, const TreeList& trees, VertexId q);

bool torsors_equal(const RibbonGraph& g, const TreeList& trees, VertexId q);

/// rotor(d)^{-1} * bernardi(d): the identity exactly when the actions agree
/// on the class of d.
TreePermutation difference(const RibbonGraph& g, const TreeList& trees, VertexId q, const Divisor& d);

struct AgreementReport {
    std::vector<BaseComparison> bases;      // canonical vertex order
    bool bernardi_base_independent = true;  // same homomorphism from every base
    bool rotor_base_independent = true;
    int surface_genus = 0;

    bool all_agree() const;
    std::vector<VertexId> disagreeing_bases() const;
};

/// Evaluates both actions at every base vertex and records whether each action
/// is base-independent (true exactly for planar rotation systems).
AgreementReport scan_bases(const RibbonGraph& g, const TreeList& trees);

} // namespace treetorsor

#endif
