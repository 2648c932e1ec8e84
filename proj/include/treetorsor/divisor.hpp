#ifndef TREETORSOR_DIVISOR_HPP
#define TREETORSOR_DIVISOR_HPP

#include "treetorsor/ribbon_graph.hpp"
#include "treetorsor/trees.hpp"

#include <optional>
#include <vector>

namespace treetorsor {

/// Integer chip counts indexed by canonical vertex order.
using Divisor = std::vector<long long>;
/// Integer vertex function, same indexing.
using VertexFunction = std::vector<long long>;

long long degree(const Divisor& d);

Divisor zero_divisor(const RibbonGraph& g);

/// Laplacian image of f: at v the sum of f(v) - f(w) over edges {v,w}, with
/// parallel edges counted by multiplicity. Always has degree 0.
Divisor laplacian(const RibbonGraph& g, const VertexFunction& f);

Divisor add(const Divisor& a, const Divisor& b);
Divisor subtract(const Divisor& a, const Divisor& b);

/// The unique pivot-reduced representative of d's class, computed by layered
/// unfiring followed by Dhar's burning algorithm. Default pivot is the first
/// canonical vertex.
Divisor q_reduced(const RibbonGraph& g, Divisor d, VertexId pivot = 0);

/// True when d1 - d2 is a Laplacian image (same class in the Picard group).
bool linearly_equivalent(const RibbonGraph& g, const Divisor& d1, const Divisor& d2);

struct PicardStructure {
    std::vector<long long> invariant_factors; // nontrivial, each dividing the next
    long long order = 1;                      // product of all diagonal factors
};

/// Invariant factors of the cokernel of the reduced Laplacian via integer
/// Smith normal form. The order equals the number of spanning trees.
PicardStructure picard_structure(const RibbonGraph& g);

/// |det| of the reduced Laplacian (matrix-tree count).
long long reduced_laplacian_determinant(const RibbonGraph& g);

/// A break divisor together with its witnessing tree and endpoint selection:
/// one chip at selection[i] for the i-th non-tree edge of the tree.
struct BreakWitness {
    int tree_index = -1;
    std::vector<EdgeId> non_tree_edges;
    std::vector<VertexId> selection;
};

/// Decides membership by exhaustive search over trees and endpoint choices.
std::optional<BreakWitness> is_break_divisor(const RibbonGraph& g, const TreeList& trees, const Divisor& b);

/// All distinct break divisors, in lexicographic coefficient order. There are
/// exactly as many as spanning trees, one per degree-g class.
std::vector<Divisor> all_break_divisors(const RibbonGraph& g, const TreeList& trees);

/// The unique break divisor linearly equivalent to d (degree must equal the
/// first Betti number). NotFound/NonUnique indicate an implementation bug.
Divisor break_representative(const RibbonGraph& g, const TreeList& trees, const Divisor& d);

} // namespace treetorsor

#endif
