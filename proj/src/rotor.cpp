#include "treetorsor/rotor.hpp"

#include "treetorsor/permutation.hpp"

#include <algorithm>

namespace treetorsor {

EdgeId RotorConfiguration::rotor_edge(const RibbonGraph& g, VertexId v) const {
    int h = rotor.at(v);
    if (h < 0) fail(ErrorKind::AtSink, "vertex '" + g.vertex_name(v) + "' has no rotor");
    return g.half_edge(h);
}

bool RotorConfiguration::total() const {
    return std::all_of(rotor.begin(), rotor.end(), [](int h) { return h >= 0; });
}

RotorConfiguration tree_to_rotor(const RibbonGraph& g, const SpanningTree& t, VertexId q) {
    RotorConfiguration c;
    c.rotor.assign(g.vertex_count(), -1);
    c.chip = q;
    for (VertexId v = 0; v < g.vertex_count(); ++v) {
        if (v == q) continue;
        GraphPath path = tree_path(g, t, v, q);
        c.rotor[v] = g.half_at(v, path.edges.front());
    }
    return c;
}

SpanningTree rotor_to_subgraph(const RibbonGraph& g, const RotorConfiguration& c) {
    SpanningTree t;
    for (VertexId v = 0; v < g.vertex_count(); ++v)
        if (c.rotor[v] >= 0) t.mask |= uint64_t{1} << g.half_edge(c.rotor[v]);
    return t;
}

RotorConfiguration rotor_step(const RibbonGraph& g, RotorConfiguration c) {
    VertexId v = c.chip;
    int h = c.rotor.at(v);
    if (h < 0) fail(ErrorKind::AtSink, "chip is at '" + g.vertex_name(v) + "', which has no rotor");
    h = g.successor(h);
    c.rotor[v] = h;
    c.chip = g.half_vertex(g.mate(h));
    return c;
}

RoutingResult route_to_sink(const RibbonGraph& g, RotorConfiguration rotors, VertexId chip, VertexId sink,
                            bool want_trace) {
    RoutingResult result;
    rotors.chip = chip;
    const long long budget = 4LL * g.edge_count() * reduced_laplacian_determinant(g);
    long long steps = 0;
    while (rotors.chip != sink) {
        if (++steps > budget) fail(ErrorKind::StepBudgetExceeded, "routing exceeded its step budget");
        VertexId from = rotors.chip;
        rotors = rotor_step(g, rotors);
        if (want_trace)
            result.trace.push_back(RoutingStep{from, g.half_edge(rotors.rotor[from]), rotors.chip});
    }
    result.tree = rotor_to_subgraph(g, rotors);
    if (!is_spanning_tree(g, result.tree))
        fail(ErrorKind::InternalError, "routing terminated on a non-tree rotor subgraph");
    result.config = std::move(rotors);
    return result;
}

namespace {

TreePermutation rotor_generator_permutation(const RibbonGraph& g, const TreeList& trees, VertexId q,
                                            VertexId v) {
    std::vector<int> img(trees.size());
    for (int i = 0; i < trees.size(); ++i) {
        RotorConfiguration c = tree_to_rotor(g, trees[i], q);
        img[i] = trees.index_of(route_to_sink(g, std::move(c), v, q).tree);
    }
    return TreePermutation(std::move(img));
}

} // namespace

SpanningTree rotor_action(const RibbonGraph& g, const TreeList& trees, VertexId q, const Divisor& d,
                          const SpanningTree& t) {
    if (degree(d) != 0) fail(ErrorKind::InternalError, "the action is defined for degree-0 divisors");
    // d = sum over v != q of d[v] * ((v) - (q))
    SpanningTree current = t;
    for (VertexId v = 0; v < g.vertex_count(); ++v) {
        if (v == q || d[v] == 0) continue;
        if (d[v] > 0) {
            for (long long k = 0; k < d[v]; ++k) {
                RotorConfiguration c = tree_to_rotor(g, current, q);
                current = route_to_sink(g, std::move(c), v, q).tree;
            }
        } else {
            // Reverse routing is not defined; undo via the generator's
            // permutation of the whole tree list instead.
            TreePermutation inv = rotor_generator_permutation(g, trees, q, v).inverse();
            int idx = trees.index_of(current);
            for (long long k = 0; k < -d[v]; ++k) idx = inv.apply(idx);
            current = trees[idx];
        }
    }
    return current;
}

std::vector<std::vector<VertexId>> rotor_cycles(const RibbonGraph& g, const RotorConfiguration& c) {
    const int n = g.vertex_count();
    std::vector<std::vector<VertexId>> cycles;
    // color: 0 unvisited, 1 on current walk, 2 settled
    std::vector<int> color(n, 0);
    for (VertexId start = 0; start < n; ++start) {
        if (color[start]) continue;
        std::vector<VertexId> walk;
        VertexId v = start;
        while (color[v] == 0) {
            color[v] = 1;
            walk.push_back(v);
            v = g.half_vertex(g.mate(c.rotor[v]));
        }
        if (color[v] == 1) {
            auto it = std::find(walk.begin(), walk.end(), v);
            cycles.emplace_back(it, walk.end());
        }
        for (VertexId w : walk) color[w] = 2;
    }
    return cycles;
}

bool is_unicycle(const RibbonGraph& g, const RotorConfiguration& c) {
    if (static_cast<int>(c.rotor.size()) != g.vertex_count() || !c.total()) return false;
    auto cycles = rotor_cycles(g, c);
    if (cycles.size() != 1) return false;
    const auto& cyc = cycles.front();
    return std::find(cyc.begin(), cyc.end(), c.chip) != cyc.end();
}

} // namespace treetorsor
