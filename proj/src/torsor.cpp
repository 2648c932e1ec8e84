#include "treetorsor/torsor.hpp"

#include <algorithm>

namespace treetorsor {

const char* action_kind_name(ActionKind k) { return k == ActionKind::Bernardi ? "bernardi" : "rotor"; }

namespace {

Divisor generator(const RibbonGraph& g, VertexId v, VertexId q) {
    Divisor d = zero_divisor(g);
    d[v] += 1;
    d[q] -= 1;
    return d;
}

} // namespace

TreePermutation bernardi_permutation(const RibbonGraph& g, const TreeList& trees, const BernardiTable& table,
                                     const Divisor& d) {
    std::vector<int> img(trees.size());
    for (int i = 0; i < trees.size(); ++i)
        img[i] = trees.index_of(bernardi_action(g, trees, table, d, trees[i]));
    return TreePermutation(std::move(img));
}

TreePermutation action_permutation(const RibbonGraph& g, const TreeList& trees, ActionKind kind, VertexId q,
                                   const Divisor& d) {
    if (degree(d) != 0) fail(ErrorKind::InternalError, "action permutations need degree-0 divisors");
    if (kind == ActionKind::Bernardi) {
        BernardiTable table(g, trees, q, default_tour_edge(g, q));
        return bernardi_permutation(g, trees, table, d);
    }
    std::vector<int> img(trees.size());
    for (int i = 0; i < trees.size(); ++i)
        img[i] = trees.index_of(rotor_action(g, trees, q, d, trees[i]));
    return TreePermutation(std::move(img));
}

TreePermutation action_permutation(const RibbonGraph& g, const TreeList& trees, ActionKind kind, VertexId q,
                                   VertexId v) {
    return action_permutation(g, trees, kind, q, generator(g, v, q));
}

BaseComparison compare_torsors(const RibbonGraph& g, const TreeList& trees, VertexId q) {
    BaseComparison out;
    out.base = q;
    BernardiTable table(g, trees, q, default_tour_edge(g, q));
    for (VertexId v = 0; v < g.vertex_count(); ++v) {
        if (v == q) continue;
        const Divisor d = generator(g, v, q);
        const TreePermutation rho = action_permutation(g, trees, ActionKind::Rotor, q, d);
        const TreePermutation beta = bernardi_permutation(g, trees, table, d);
        out.differences.emplace_back(v, rho.inverse() * beta);
        if (rho == beta) continue;
        if (out.agree) {
            out.agree = false;
            for (int i = 0; i < trees.size(); ++i) {
                if (rho.apply(i) != beta.apply(i)) {
                    out.witness = DisagreementWitness{v, i, rho.apply(i), beta.apply(i)};
                    break;
                }
            }
        }
    }
    return out;
}

bool torsors_equal(const RibbonGraph& g, const TreeList& trees, VertexId q) {
    return compare_torsors(g, trees, q).agree;
}

TreePermutation difference(const RibbonGraph& g, const TreeList& trees, VertexId q, const Divisor& d) {
    const TreePermutation rho = action_permutation(g, trees, ActionKind::Rotor, q, d);
    const TreePermutation beta = action_permutation(g, trees, ActionKind::Bernardi, q, d);
    return rho.inverse() * beta;
}

bool AgreementReport::all_agree() const {
    return std::all_of(bases.begin(), bases.end(), [](const BaseComparison& b) { return b.agree; });
}

std::vector<VertexId> AgreementReport::disagreeing_bases() const {
    std::vector<VertexId> out;
    for (const auto& b : bases)
        if (!b.agree) out.push_back(b.base);
    return out;
}

AgreementReport scan_bases(const RibbonGraph& g, const TreeList& trees) {
    AgreementReport report;
    report.surface_genus = g.surface_genus();
    for (VertexId q = 0; q < g.vertex_count(); ++q) report.bases.push_back(compare_torsors(g, trees, q));

    // Base-independence: the homomorphisms from every base must agree on the
    // generators (v) - (v0) relative to one fixed reference vertex.
    const VertexId ref = 0;
    for (ActionKind kind : {ActionKind::Bernardi, ActionKind::Rotor}) {
        bool independent = true;
        std::vector<TreePermutation> reference;
        for (VertexId v = 0; v < g.vertex_count(); ++v) {
            Divisor d = zero_divisor(g);
            d[v] += 1;
            d[ref] -= 1;
            reference.push_back(action_permutation(g, trees, kind, /*q=*/ref, d));
        }
        for (VertexId q = 1; q < g.vertex_count() && independent; ++q) {
            for (VertexId v = 0; v < g.vertex_count() && independent; ++v) {
                Divisor d = zero_divisor(g);
                d[v] += 1;
                d[ref] -= 1;
                if (action_permutation(g, trees, kind, q, d) != reference[v]) independent = false;
            }
        }
        (kind == ActionKind::Bernardi ? report.bernardi_base_independent : report.rotor_base_independent) =
            independent;
    }
    return report;
}

} // namespace treetorsor
