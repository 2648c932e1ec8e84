#include "treetorsor/bernardi.hpp"

#include <algorithm>

namespace treetorsor {

BernardiTour bernardi_tour(const RibbonGraph& g, const SpanningTree& t, VertexId q, EdgeId e) {
    if (!g.incident(e, q))
        fail(ErrorKind::NotIncident,
             "edge '" + g.edge_name(e) + "' is not incident to base vertex '" + g.vertex_name(q) + "'");

    BernardiTour tour;
    tour.base = q;
    tour.start_edge = e;
    tour.vertices.push_back(q);

    std::vector<char> skipped_once(g.edge_count(), 0);

    // State: current vertex plus the half-edge about to be considered there.
    // The walk starts at q considering e (the successor of the edge preceding
    // e) and stops when that exact state recurs, having looked at every
    // half-edge exactly once.
    const int start_half = g.half_at(q, e);
    VertexId at = q;
    int h = start_half;
    do {
        EdgeId cur = g.half_edge(h);
        if (t.contains(cur)) {
            const int arrive = g.mate(h);
            at = g.half_vertex(arrive);
            tour.edges.push_back(cur);
            tour.vertices.push_back(at);
            h = g.successor(arrive);
        } else {
            tour.skips.push_back(BernardiTour::Skip{cur, at, !skipped_once[cur]});
            skipped_once[cur] = 1;
            h = g.successor(h);
        }
    } while (!(at == q && h == start_half));

    const int expected_steps = 2 * (g.vertex_count() - 1);
    if (static_cast<int>(tour.edges.size()) != expected_steps ||
        static_cast<int>(tour.skips.size()) != 2 * g.first_betti())
        fail(ErrorKind::InternalError, "tour did not traverse the tree twice and skip the rest twice");
    return tour;
}

Divisor bernardi_break_divisor(const RibbonGraph& g, const SpanningTree& t, VertexId q, EdgeId e) {
    Divisor d = zero_divisor(g);
    for (const auto& skip : bernardi_tour(g, t, q, e).skips)
        if (skip.first) d[skip.at] += 1;
    return d;
}

BernardiTable::BernardiTable(const RibbonGraph& g, const TreeList& trees, VertexId q, EdgeId e)
    : q_(q), e_(e) {
    for (int i = 0; i < trees.size(); ++i) {
        Divisor b = bernardi_break_divisor(g, trees[i], q, e);
        auto [it, fresh] = by_reduced_form_.emplace(q_reduced(g, b), i);
        if (!fresh)
            fail(ErrorKind::InternalError, "two trees map to equivalent break divisors at one (q,e)");
        divisors_.push_back(std::move(b));
    }
}

int BernardiTable::tree_for_class(const RibbonGraph& g, const Divisor& d) const {
    auto it = by_reduced_form_.find(q_reduced(g, d));
    if (it == by_reduced_form_.end())
        fail(ErrorKind::NotFound, "no tree's break divisor lies in the given class");
    return it->second;
}

EdgeId default_tour_edge(const RibbonGraph& g, VertexId q) {
    auto rot = g.rotation(q);
    if (rot.empty()) fail(ErrorKind::NotIncident, "vertex '" + g.vertex_name(q) + "' has no incident edge");
    return g.half_edge(rot[0]);
}

SpanningTree bernardi_action(const RibbonGraph& g, const TreeList& trees, const BernardiTable& table,
                             const Divisor& d, const SpanningTree& t) {
    if (degree(d) != 0) fail(ErrorKind::InternalError, "the action is defined for degree-0 divisors");
    if (std::all_of(d.begin(), d.end(), [](long long c) { return c == 0; })) return t;
    const int i = trees.index_of(t);
    const Divisor translated = add(d, table.break_divisor(i));
    return trees[table.tree_for_class(g, translated)];
}

SpanningTree bernardi_action(const RibbonGraph& g, const TreeList& trees, VertexId q, const Divisor& d,
                             const SpanningTree& t) {
    if (degree(d) != 0) fail(ErrorKind::InternalError, "the action is defined for degree-0 divisors");
    if (std::all_of(d.begin(), d.end(), [](long long c) { return c == 0; })) return t;
    BernardiTable table(g, trees, q, default_tour_edge(g, q));
    return bernardi_action(g, trees, table, d, t);
}

} // namespace treetorsor
