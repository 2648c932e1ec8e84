#include "treetorsor/witness.hpp"

#include "treetorsor/bernardi.hpp"
#include "treetorsor/rotor.hpp"

#include <algorithm>
#include <map>
#include <queue>
#include <set>

namespace treetorsor {

namespace {

// ---------------------------------------------------------------- cycles ---

std::vector<std::vector<EdgeId>> cycle_edge_sets(const RibbonGraph& g) {
    std::set<std::vector<EdgeId>> sets;
    const int n = g.vertex_count();
    std::vector<char> on_path(n, 0);
    std::vector<char> edge_used(g.edge_count(), 0);

    // DFS rooted at the smallest vertex of each cycle; interior vertices stay
    // above the root so every cycle is generated from its minimum only.
    auto dfs = [&](auto&& self, VertexId root, VertexId at, std::vector<EdgeId>& edges) -> void {
        for (EdgeId e : g.edges_at(at)) {
            if (edge_used[e]) continue;
            VertexId w = g.other_endpoint(e, at);
            if (w == root) {
                if (edges.size() >= 1) {
                    std::vector<EdgeId> cyc = edges;
                    cyc.push_back(e);
                    std::sort(cyc.begin(), cyc.end());
                    sets.insert(std::move(cyc));
                }
                continue;
            }
            if (w < root || on_path[w]) continue;
            on_path[w] = 1;
            edge_used[e] = 1;
            edges.push_back(e);
            self(self, root, w, edges);
            edges.pop_back();
            edge_used[e] = 0;
            on_path[w] = 0;
        }
    };

    for (VertexId root = 0; root < n; ++root) {
        std::vector<EdgeId> edges;
        on_path[root] = 1;
        dfs(dfs, root, root, edges);
        on_path[root] = 0;
    }
    return {sets.begin(), sets.end()};
}

OrientedCycle orient_edge_set(const RibbonGraph& g, const std::vector<EdgeId>& edges) {
    // Two cycle edges per vertex; start at the smallest vertex, leave along
    // the smaller of its two edges.
    std::map<VertexId, std::vector<EdgeId>> at;
    for (EdgeId e : edges) {
        auto [a, b] = g.endpoints(e);
        at[a].push_back(e);
        at[b].push_back(e);
    }
    VertexId start = at.begin()->first;
    EdgeId first = std::min(at[start][0], at[start][1]);

    OrientedCycle c;
    VertexId v = start;
    EdgeId e = first;
    do {
        c.vertices.push_back(v);
        c.edges.push_back(e);
        v = g.other_endpoint(e, v);
        const auto& pair = at[v];
        e = (pair[0] == e) ? pair[1] : pair[0];
    } while (v != start);
    return c;
}

// ------------------------------------------------------- witness search ---

struct Attachment {
    VertexId at;    // cycle vertex
    EdgeId edge;    // off-cycle edge at it
    VertexId outer; // the other endpoint
    Side side;
};

// Search state for one oriented cycle: off-cycle components, attachment lists,
// and deterministic shortest paths between attachment feet.
struct WitnessSearch {
    const RibbonGraph& g;
    const OrientedCycle& cycle;
    std::vector<char> on_cycle;
    std::vector<int> comp; // component of G - V(C); -1 on the cycle
    std::vector<Attachment> lefts, rights;

    WitnessSearch(const RibbonGraph& graph, const OrientedCycle& c) : g(graph), cycle(c) {
        on_cycle.assign(g.vertex_count(), 0);
        for (VertexId v : c.vertices) on_cycle[v] = 1;

        comp.assign(g.vertex_count(), -1);
        int next = 0;
        for (VertexId s = 0; s < g.vertex_count(); ++s) {
            if (on_cycle[s] || comp[s] >= 0) continue;
            comp[s] = next;
            std::vector<VertexId> stack{s};
            while (!stack.empty()) {
                VertexId v = stack.back();
                stack.pop_back();
                for (EdgeId e : g.edges_at(v)) {
                    VertexId w = g.other_endpoint(e, v);
                    if (on_cycle[w] || comp[w] >= 0) continue;
                    comp[w] = next;
                    stack.push_back(w);
                }
            }
            ++next;
        }

        for (VertexId v : c.vertices) {
            for (EdgeId e : g.edges_at(v)) {
                if (c.contains_edge(e)) continue;
                Attachment a{v, e, g.other_endpoint(e, v), classify_edge_side(g, c, v, e)};
                (a.side == Side::Left ? lefts : rights).push_back(a);
            }
        }
    }

    // Deterministic shortest path between off-cycle vertices, or nothing.
    std::optional<GraphPath> off_cycle_path(VertexId from, VertexId to) const {
        if (comp[from] != comp[to]) return std::nullopt;
        std::vector<int> parent_edge(g.vertex_count(), -1);
        std::vector<VertexId> parent(g.vertex_count(), -1);
        std::vector<char> seen(g.vertex_count(), 0);
        std::queue<VertexId> queue;
        queue.push(from);
        seen[from] = 1;
        while (!queue.empty() && !seen[to]) {
            VertexId v = queue.front();
            queue.pop();
            for (EdgeId e : g.edges_at(v)) {
                VertexId w = g.other_endpoint(e, v);
                if (on_cycle[w] || seen[w]) continue;
                seen[w] = 1;
                parent[w] = v;
                parent_edge[w] = e;
                queue.push(w);
            }
        }
        if (!seen[to]) return std::nullopt;
        GraphPath p;
        std::vector<VertexId> rv{to};
        std::vector<EdgeId> re;
        for (VertexId v = to; v != from; v = parent[v]) {
            re.push_back(parent_edge[v]);
            rv.push_back(parent[v]);
        }
        p.vertices.assign(rv.rbegin(), rv.rend());
        p.edges.assign(re.rbegin(), re.rend());
        return p;
    }

    // All candidate witness paths in canonical order: shortest first, then by
    // attachment positions. One path per (left, right) attachment pair.
    std::vector<GraphPath> candidates() const {
        struct Keyed {
            std::tuple<int, int, int> key;
            GraphPath path;
        };
        std::vector<Keyed> all;
        for (size_t li = 0; li < lefts.size(); ++li) {
            const Attachment& l = lefts[li];
            if (!on_cycle[l.outer]) continue;
            // single edge attached left at one endpoint and right at the other
            for (size_t ri = 0; ri < rights.size(); ++ri) {
                const Attachment& r = rights[ri];
                if (r.edge != l.edge || r.at != l.outer) continue;
                GraphPath p;
                p.vertices = {l.at, r.at};
                p.edges = {l.edge};
                all.push_back({{1, static_cast<int>(li), static_cast<int>(ri)}, std::move(p)});
            }
        }
        for (size_t li = 0; li < lefts.size(); ++li) {
            const Attachment& l = lefts[li];
            if (on_cycle[l.outer]) continue;
            for (size_t ri = 0; ri < rights.size(); ++ri) {
                const Attachment& r = rights[ri];
                if (on_cycle[r.outer] || r.edge == l.edge) continue;
                auto mid = off_cycle_path(l.outer, r.outer);
                if (!mid) continue;
                GraphPath p;
                p.vertices.push_back(l.at);
                p.edges.push_back(l.edge);
                p.vertices.insert(p.vertices.end(), mid->vertices.begin(), mid->vertices.end());
                p.edges.insert(p.edges.end(), mid->edges.begin(), mid->edges.end());
                p.edges.push_back(r.edge);
                p.vertices.push_back(r.at);
                all.push_back({{p.length(), static_cast<int>(li), static_cast<int>(ri)}, std::move(p)});
            }
        }
        std::stable_sort(all.begin(), all.end(), [](const Keyed& a, const Keyed& b) { return a.key < b.key; });
        std::vector<GraphPath> out;
        out.reserve(all.size());
        for (auto& k : all) out.push_back(std::move(k.path));
        return out;
    }
};

WitnessPair make_pair(const OrientedCycle& c, GraphPath p, bool proper) {
    WitnessPair w;
    w.cycle = c;
    w.path = std::move(p);
    w.proper = proper;
    w.z = w.path.back();
    if (proper) w.x = w.path.front();
    return w;
}

} // namespace

WitnessPair WitnessPair::swapped_roles() const {
    if (!proper) return *this;
    WitnessPair out = *this;
    out.z = *x;
    out.x = z;
    return out;
}

void validate_witness_pair(const RibbonGraph& g, const WitnessPair& pair) {
    validate_cycle(g, pair.cycle);
    validate_path(g, pair.path);
    const GraphPath& p = pair.path;
    if (!pair.cycle.contains_vertex(p.front()) || !pair.cycle.contains_vertex(p.back()))
        fail(ErrorKind::InternalError, "witness path endpoints must lie on the cycle");
    for (size_t i = 1; i + 1 < p.vertices.size(); ++i)
        if (pair.cycle.contains_vertex(p.vertices[i]))
            fail(ErrorKind::InternalError, "witness path interior touches the cycle");
    for (EdgeId e : p.edges)
        if (pair.cycle.contains_edge(e))
            fail(ErrorKind::InternalError, "witness path reuses a cycle edge");
    if (classify_edge_side(g, pair.cycle, p.front(), p.edges.front()) != Side::Left)
        fail(ErrorKind::InternalError, "witness path must start on the left of the cycle");
    if (classify_edge_side(g, pair.cycle, p.back(), p.edges.back()) != Side::Right)
        fail(ErrorKind::InternalError, "witness path must end on the right of the cycle");
    if (pair.proper != (p.front() != p.back()))
        fail(ErrorKind::InternalError, "proper flag does not match the endpoints");
    if (pair.proper) {
        if (!pair.x || !((pair.z == p.front() && *pair.x == p.back()) ||
                         (pair.z == p.back() && *pair.x == p.front())))
            fail(ErrorKind::InternalError, "designated endpoints do not match the path");
    } else if (pair.z != p.front()) {
        fail(ErrorKind::InternalError, "designated shared vertex does not match the path");
    }
}

std::vector<OrientedCycle> enumerate_cycles(const RibbonGraph& g) {
    std::vector<OrientedCycle> out;
    for (const auto& edges : cycle_edge_sets(g)) out.push_back(orient_edge_set(g, edges));
    // canonical order: lexicographic on sorted edge indices (= edge names)
    std::sort(out.begin(), out.end(), [](const OrientedCycle& a, const OrientedCycle& b) {
        auto ea = a.edges, eb = b.edges;
        std::sort(ea.begin(), ea.end());
        std::sort(eb.begin(), eb.end());
        return ea < eb;
    });
    return out;
}

std::optional<GraphPath> find_witness_path(const RibbonGraph& g, const OrientedCycle& c) {
    auto cand = WitnessSearch(g, c).candidates();
    if (cand.empty()) return std::nullopt;
    return cand.front();
}

bool is_nonseparating(const RibbonGraph& g, const OrientedCycle& c) {
    return find_witness_path(g, c).has_value();
}

bool has_nonseparating_cycle(const RibbonGraph& g) {
    for (const auto& c : enumerate_cycles(g))
        if (is_nonseparating(g, c)) return true;
    return false;
}

std::vector<WitnessPair> all_proper_witness_pairs(const RibbonGraph& g) {
    std::vector<WitnessPair> out;
    for (const auto& base : enumerate_cycles(g)) {
        for (const OrientedCycle& c : {base, base.reversed()}) {
            for (GraphPath& p : WitnessSearch(g, c).candidates()) {
                if (p.front() == p.back()) continue;
                out.push_back(make_pair(c, std::move(p), true));
            }
        }
    }
    return out;
}

std::optional<WitnessPair> find_proper_witness_pair(const RibbonGraph& g) {
    for (const auto& base : enumerate_cycles(g)) {
        for (const OrientedCycle& c : {base, base.reversed()}) {
            for (GraphPath& p : WitnessSearch(g, c).candidates()) {
                if (p.front() == p.back()) continue;
                return make_pair(c, std::move(p), true);
            }
        }
    }
    return std::nullopt;
}

namespace {

// Interval interior between the two cycle edges at z for one labeling.
std::vector<EdgeId> between(const RibbonGraph& g, VertexId z, EdgeId e0, EdgeId e1) {
    auto iv = g.interval(z, e0, e1);
    return {iv.begin() + 1, iv.end() - 1};
}

// Component labels of G - z.
std::vector<int> components_without(const RibbonGraph& g, VertexId z) {
    std::vector<int> comp(g.vertex_count(), -1);
    int next = 0;
    for (VertexId s = 0; s < g.vertex_count(); ++s) {
        if (s == z || comp[s] >= 0) continue;
        comp[s] = next;
        std::vector<VertexId> stack{s};
        while (!stack.empty()) {
            VertexId v = stack.back();
            stack.pop_back();
            for (EdgeId e : g.edges_at(v)) {
                VertexId w = g.other_endpoint(e, v);
                if (w == z || comp[w] >= 0) continue;
                comp[w] = next;
                stack.push_back(w);
            }
        }
        ++next;
    }
    return comp;
}

// An in-between edge is detached when its component of G - z avoids both the
// cycle and the path; routing a chip through it cannot move any rotor that the
// tree construction cares about.
bool is_detached(const RibbonGraph& g, const WitnessPair& pair, const std::vector<int>& comp, EdgeId f) {
    const int cf = comp[g.other_endpoint(f, pair.z)];
    for (VertexId v : pair.cycle.vertices)
        if (v != pair.z && comp[v] == cf) return false;
    for (VertexId v : pair.path.vertices)
        if (v != pair.z && comp[v] == cf) return false;
    return true;
}

struct Labeling {
    EdgeId e0, e1;
    std::vector<EdgeId> inbetween;
    std::vector<EdgeId> blocking; // non-detached subset, in rotation order
};

std::vector<Labeling> labelings_at_z(const RibbonGraph& g, const WitnessPair& pair) {
    const VertexId z = pair.z;
    const EdgeId a = pair.cycle.edge_in(z);
    const EdgeId b = pair.cycle.edge_out(z);
    const auto comp = components_without(g, z);
    std::vector<Labeling> out;
    for (auto [e0, e1] : {std::pair{std::min(a, b), std::max(a, b)}, std::pair{std::max(a, b), std::min(a, b)}}) {
        Labeling lab{e0, e1, between(g, z, e0, e1), {}};
        for (EdgeId f : lab.inbetween)
            if (!is_detached(g, pair, comp, f)) lab.blocking.push_back(f);
        out.push_back(std::move(lab));
    }
    // prefer the labeling that is closer to consecutive
    std::stable_sort(out.begin(), out.end(), [](const Labeling& p, const Labeling& q) {
        return std::tuple(p.blocking.size(), p.inbetween.size()) <
               std::tuple(q.blocking.size(), q.inbetween.size());
    });
    return out;
}

} // namespace

int obstruction_count(const RibbonGraph& g, const WitnessPair& pair) {
    auto labs = labelings_at_z(g, pair);
    return static_cast<int>(labs.front().blocking.size());
}

ProperSetup proper_pair_setup(const RibbonGraph& g, const WitnessPair& pair, bool ignore_detached) {
    if (!pair.proper) fail(ErrorKind::NotApplicable, "setup requires a proper witness pair");
    validate_witness_pair(g, pair);
    for (const Labeling& lab : labelings_at_z(g, pair)) {
        if (!lab.inbetween.empty() && !(ignore_detached && lab.blocking.empty())) continue;

        ProperSetup setup;
        setup.pair = pair;
        setup.z = pair.z;
        setup.q = g.other_endpoint(lab.e1, pair.z);
        setup.kept_cycle_edge = lab.e0;
        setup.dropped_cycle_edge = lab.e1;
        setup.dropped_path_edge = pair.path.edges.front();
        setup.strict = lab.inbetween.empty();

        uint64_t required = 0;
        for (EdgeId e : pair.cycle.edges)
            if (e != lab.e1) required |= uint64_t{1} << e;
        for (EdgeId e : pair.path.edges)
            if (e != setup.dropped_path_edge) required |= uint64_t{1} << e;
        uint64_t forbidden = (uint64_t{1} << lab.e1) | (uint64_t{1} << setup.dropped_path_edge);
        setup.tree = extend_to_tree(g, required, forbidden);
        return setup;
    }
    fail(ErrorKind::PrecedenceFails,
         "the cycle edges at '" + g.vertex_name(pair.z) + "' are not consecutive in either order");
}

namespace {

// Chooses an orientation of the cycle and a direction of the path that make a
// valid witness pair with the designated z, or nothing.
std::optional<WitnessPair> orient_pair(const RibbonGraph& g, const OrientedCycle& c, const GraphPath& p,
                                       VertexId z) {
    for (const OrientedCycle& oc : {c, c.reversed()}) {
        for (const GraphPath& op : {p, p.reversed()}) {
            WitnessPair w;
            w.cycle = oc;
            w.path = op;
            w.proper = op.front() != op.back();
            if (w.proper) {
                if (op.back() == z) {
                    w.z = z;
                    w.x = op.front();
                } else if (op.front() == z) {
                    w.z = z;
                    w.x = op.back();
                } else {
                    continue;
                }
            } else {
                if (op.front() != z) continue;
                w.z = z;
            }
            try {
                validate_witness_pair(g, w);
                return w;
            } catch (const Error&) {
            }
        }
    }
    return std::nullopt;
}

// Deterministic path from `from` toward the nearest vertex satisfying `goal`,
// staying off the cycle and outside `avoid` in between.
std::optional<GraphPath> path_toward(const RibbonGraph& g, const std::vector<char>& banned, VertexId from,
                                     const std::vector<char>& goal) {
    if (goal[from]) return GraphPath{{from}, {}};
    std::vector<int> parent_edge(g.vertex_count(), -1);
    std::vector<VertexId> parent(g.vertex_count(), -1);
    std::vector<char> seen(g.vertex_count(), 0);
    std::queue<VertexId> queue;
    queue.push(from);
    seen[from] = 1;
    VertexId hit = -1;
    while (!queue.empty() && hit < 0) {
        VertexId v = queue.front();
        queue.pop();
        for (EdgeId e : g.edges_at(v)) {
            VertexId w = g.other_endpoint(e, v);
            if (seen[w]) continue;
            if (banned[w] && !goal[w]) continue;
            seen[w] = 1;
            parent[w] = v;
            parent_edge[w] = e;
            if (goal[w]) {
                hit = w;
                break;
            }
            queue.push(w);
        }
    }
    if (hit < 0) return std::nullopt;
    GraphPath p;
    std::vector<VertexId> rv{hit};
    std::vector<EdgeId> re;
    for (VertexId v = hit; v != from; v = parent[v]) {
        re.push_back(parent_edge[v]);
        rv.push_back(parent[v]);
    }
    p.vertices.assign(rv.rbegin(), rv.rend());
    p.edges.assign(re.rbegin(), re.rend());
    return p;
}

// Cycle arc from `from` to `to` starting along `first_edge`.
GraphPath cycle_arc(const RibbonGraph& g, const OrientedCycle& c, VertexId from, EdgeId first_edge,
                    VertexId to) {
    GraphPath p;
    p.vertices.push_back(from);
    VertexId v = from;
    EdgeId e = first_edge;
    while (true) {
        p.edges.push_back(e);
        v = g.other_endpoint(e, v);
        p.vertices.push_back(v);
        if (v == to) return p;
        e = (c.edge_in(v) == e) ? c.edge_out(v) : c.edge_in(v);
    }
}

OrientedCycle close_cycle(const std::vector<GraphPath>& arcs) {
    // concatenates arcs end-to-start into a closed cycle
    OrientedCycle c;
    for (const GraphPath& a : arcs) {
        for (size_t i = 0; i < a.edges.size(); ++i) {
            c.vertices.push_back(a.vertices[i]);
            c.edges.push_back(a.edges[i]);
        }
    }
    return c;
}

GraphPath subpath(const GraphPath& p, int from_index, int to_index) {
    GraphPath out;
    for (int i = from_index; i <= to_index; ++i) out.vertices.push_back(p.vertices[i]);
    for (int i = from_index; i < to_index; ++i) out.edges.push_back(p.edges[i]);
    return out;
}

} // namespace

WitnessPair reroute_witness(const RibbonGraph& g, const WitnessPair& pair) {
    if (!pair.proper) fail(ErrorKind::NotApplicable, "rerouting requires a proper witness pair");
    const VertexId z = pair.z;
    const auto comp = components_without(g, z);
    const auto labs = labelings_at_z(g, pair);

    if (labs.front().inbetween.empty())
        return pair; // already consecutive; nothing to reroute

    bool any_blocking = false;
    for (const auto& lab : labs) any_blocking |= !lab.blocking.empty();
    if (!any_blocking)
        fail(ErrorKind::ComponentDisjoint,
             "every edge between the cycle edges at '" + g.vertex_name(z) +
                 "' leads to a component missing both the cycle and the path");

    std::vector<char> on_cycle(g.vertex_count(), 0);
    for (VertexId v : pair.cycle.vertices) on_cycle[v] = 1;
    std::vector<char> on_path(g.vertex_count(), 0);
    for (VertexId v : pair.path.vertices) on_path[v] = 1;
    std::vector<char> banned(g.vertex_count(), 0);
    for (VertexId v = 0; v < g.vertex_count(); ++v) banned[v] = on_cycle[v] || on_path[v] || v == z;

    const int before = obstruction_count(g, pair);

    for (const Labeling& lab : labs) {
        if (lab.blocking.empty()) continue;
        // first obstructing edge after e0 in rotation order
        const EdgeId f = lab.blocking.front();
        const VertexId v = g.other_endpoint(f, z);

        // Case 1: splice through a cycle vertex reachable in f's component; the
        // new cycle keeps e0 at z, so e0 and f become consecutive cycle edges.
        {
            std::vector<char> goal(g.vertex_count(), 0);
            for (VertexId u : pair.cycle.vertices)
                if (u != z) goal[u] = 1;
            if (auto mid = path_toward(g, banned, v, goal)) {
                const VertexId c_hit = mid->back();
                GraphPath q_path;
                q_path.vertices.push_back(z);
                q_path.edges.push_back(f);
                q_path.vertices.insert(q_path.vertices.end(), mid->vertices.begin(), mid->vertices.end());
                q_path.edges.insert(q_path.edges.end(), mid->edges.begin(), mid->edges.end());

                GraphPath kept_arc = cycle_arc(g, pair.cycle, z, lab.e0, c_hit);
                OrientedCycle raw = close_cycle({q_path.reversed(), kept_arc});
                if (auto rerouted = orient_pair(g, raw, pair.path, z)) {
                    if (obstruction_count(g, *rerouted) < before) return *rerouted;
                }
            }
        }

        // Case 2: splice through a path vertex; the new cycle keeps e1 at z
        // and absorbs the far span of the path, which becomes part of the
        // cycle while the near span stays as the witness.
        {
            std::vector<char> goal(g.vertex_count(), 0);
            for (VertexId u : pair.path.vertices)
                if (u != z) goal[u] = 1;
            if (auto mid = path_toward(g, banned, v, goal)) {
                const VertexId x_hit = mid->back();
                // path runs x .. z (z == back); locate the hit
                GraphPath forward = (pair.path.back() == z) ? pair.path : pair.path.reversed();
                int hit_index = -1;
                for (size_t i = 0; i < forward.vertices.size(); ++i)
                    if (forward.vertices[i] == x_hit) hit_index = static_cast<int>(i);
                if (hit_index >= 0 && forward.vertices[hit_index] != z) {
                    GraphPath q_path;
                    q_path.vertices.push_back(z);
                    q_path.edges.push_back(f);
                    q_path.vertices.insert(q_path.vertices.end(), mid->vertices.begin(), mid->vertices.end());
                    q_path.edges.insert(q_path.edges.end(), mid->edges.begin(), mid->edges.end());

                    GraphPath far_span = subpath(forward, 0, hit_index);       // x .. x'
                    GraphPath near_span = subpath(forward, hit_index,
                                                  static_cast<int>(forward.edges.size())); // x' .. z
                    GraphPath kept_arc = cycle_arc(g, pair.cycle, z, lab.e1, forward.front());
                    OrientedCycle raw = close_cycle({q_path, far_span.reversed(), kept_arc.reversed()});
                    if (auto rerouted = orient_pair(g, raw, near_span, z)) {
                        if (obstruction_count(g, *rerouted) < before) return *rerouted;
                    }
                }
            }
        }
    }
    fail(ErrorKind::NotFound, "no valid reroute of the witness pair at '" + g.vertex_name(z) + "'");
}

// ----------------------------------------------------------- tight pairs ---

bool is_simple_graph(const RibbonGraph& g) {
    std::set<std::pair<VertexId, VertexId>> seen;
    for (EdgeId e = 0; e < g.edge_count(); ++e) {
        auto [a, b] = g.endpoints(e);
        if (!seen.insert({std::min(a, b), std::max(a, b)}).second) return false;
    }
    return true;
}

namespace {

// Minimum of the two interval lengths between the cycle edges at z.
int interval_measure(const RibbonGraph& g, const OrientedCycle& c, VertexId z) {
    EdgeId a = c.edge_in(z), b = c.edge_out(z);
    return std::min(static_cast<int>(g.interval(z, a, b).size()),
                    static_cast<int>(g.interval(z, b, a).size()));
}

// Whether the (unoriented) path p, with both endpoints z, serves as a witness
// for some orientation of the cycle c.
bool admits_witness(const RibbonGraph& g, const OrientedCycle& c, const GraphPath& p, VertexId z) {
    return orient_pair(g, c, p, z).has_value();
}

} // namespace

std::optional<WitnessPair> find_tight_witness_pair(const RibbonGraph& g) {
    if (find_proper_witness_pair(g)) return std::nullopt;
    const auto cycles = enumerate_cycles(g);

    for (const auto& base : cycles) {
        for (const OrientedCycle& c : {base, base.reversed()}) {
            for (GraphPath& p : WitnessSearch(g, c).candidates()) {
                if (p.front() != p.back()) continue;
                const VertexId z = p.front();

                // minimal interval measure over all cycles through z that
                // admit this path as a witness
                int best = interval_measure(g, c, z);
                for (const auto& other : cycles) {
                    if (!other.contains_vertex(z)) continue;
                    if (!admits_witness(g, other, p, z)) continue;
                    best = std::min(best, interval_measure(g, other, z));
                }
                if (interval_measure(g, c, z) != best) continue;

                // orient so the minimal interval is on the left
                WitnessPair w = make_pair(c, p, false);
                w.tight = true;
                const int left_len =
                    static_cast<int>(g.interval(z, c.edge_out(z), c.edge_in(z)).size());
                if (left_len != best) {
                    auto flipped = orient_pair(g, c.reversed(), p, z);
                    if (!flipped) continue;
                    w = *flipped;
                    w.tight = true;
                }
                validate_witness_pair(g, w);
                return w;
            }
        }
    }
    return std::nullopt;
}

TightSetup tight_pair_setup(const RibbonGraph& g, const WitnessPair& pair) {
    if (!is_simple_graph(g))
        fail(ErrorKind::NotApplicable, "the tight construction needs a graph without parallel edges");
    if (g.surface_genus() == 0) fail(ErrorKind::NotApplicable, "planar rotation system");
    if (find_proper_witness_pair(g))
        fail(ErrorKind::NotApplicable, "a proper witness pair exists; use the proper construction");
    if (!pair.tight || pair.proper) fail(ErrorKind::NotApplicable, "setup requires a tight witness pair");
    validate_witness_pair(g, pair);

    TightSetup setup;
    setup.pair = pair;
    setup.z = pair.z;
    const OrientedCycle& c = pair.cycle;
    setup.dropped_edge = c.edge_in(pair.z); // {z,q}, the cycle oriented q -> z
    setup.q = g.other_endpoint(setup.dropped_edge, pair.z);
    setup.next_edge = g.half_edge(g.successor(g.half_at(setup.q, setup.dropped_edge)));

    for (EdgeId e : g.edges_at(pair.z)) {
        if (c.contains_edge(e)) continue;
        VertexId y = g.other_endpoint(e, pair.z);
        (classify_edge_side(g, c, pair.z, e) == Side::Left ? setup.left : setup.right).push_back(y);
    }

    // union of the canonical minimal witness paths through z
    std::set<VertexId> h_vertices;
    std::set<EdgeId> h_edges;
    for (const GraphPath& p : WitnessSearch(g, c).candidates()) {
        if (p.front() != pair.z || p.back() != pair.z) continue;
        h_vertices.insert(p.vertices.begin(), p.vertices.end());
        h_edges.insert(p.edges.begin(), p.edges.end());
    }
    setup.witness_subgraph.assign(h_edges.begin(), h_edges.end());
    for (VertexId y : setup.left)
        if (h_vertices.count(y)) setup.left_h.push_back(y);
    for (VertexId y : setup.right)
        if (h_vertices.count(y)) setup.right_h.push_back(y);

    uint64_t required = 0;
    for (EdgeId e : c.edges)
        if (e != setup.dropped_edge) required |= uint64_t{1} << e;
    for (EdgeId e : g.edges_at(pair.z))
        if (e != setup.dropped_edge) required |= uint64_t{1} << e;
    setup.tree = extend_to_tree(g, required, uint64_t{1} << setup.dropped_edge);
    return setup;
}

// ------------------------------------------------------------ the driver ---

namespace {

Divisor generator_divisor(const RibbonGraph& g, VertexId v, VertexId q) {
    Divisor d = zero_divisor(g);
    d[v] += 1;
    d[q] -= 1;
    return d;
}

std::optional<DisagreementEvidence> evidence_from(const RibbonGraph& g, const TreeList& trees,
                                                  const WitnessPair& pair, VertexId q, VertexId z,
                                                  const SpanningTree& tree, EdgeId tour_edge,
                                                  const std::string& route) {
    DisagreementEvidence ev;
    ev.route = route;
    ev.pair = pair;
    ev.q = q;
    ev.z = z;
    ev.tree = tree;
    ev.tour_edge = tour_edge;
    ev.rotor_image = rotor_action(g, trees, q, generator_divisor(g, z, q), tree);
    ev.translated = add(generator_divisor(g, z, q), bernardi_break_divisor(g, tree, q, tour_edge));
    ev.image_break = bernardi_break_divisor(g, ev.rotor_image, q, tour_edge);
    if (linearly_equivalent(g, ev.translated, ev.image_break)) return std::nullopt;
    return ev;
}

} // namespace

std::optional<DisagreementEvidence> construct_disagreement(const RibbonGraph& g, const TreeList& trees) {
    if (g.surface_genus() == 0) return std::nullopt;

    for (const WitnessPair& found : all_proper_witness_pairs(g)) {
        for (const WitnessPair& start : {found, found.swapped_roles()}) {
            WitnessPair pair = start;
            for (int round = 0; round <= g.edge_count() + 1; ++round) {
                std::optional<ProperSetup> setup;
                try {
                    setup = proper_pair_setup(g, pair, /*ignore_detached=*/true);
                } catch (const Error& err) {
                    if (err.kind() != ErrorKind::PrecedenceFails) break;
                }
                if (setup) {
                    auto ev = evidence_from(g, trees, setup->pair, setup->q, setup->z, setup->tree,
                                            setup->dropped_cycle_edge, "proper-witness");
                    if (ev) return ev;
                    break; // theorem says this cannot happen; try the next pair
                }
                try {
                    WitnessPair next = reroute_witness(g, pair);
                    if (obstruction_count(g, next) >= obstruction_count(g, pair)) break;
                    pair = std::move(next);
                } catch (const Error&) {
                    break;
                }
            }
        }
    }

    if (is_simple_graph(g)) {
        if (auto tight = find_tight_witness_pair(g)) {
            TightSetup setup = tight_pair_setup(g, *tight);
            return evidence_from(g, trees, setup.pair, setup.q, setup.z, setup.tree, setup.dropped_edge,
                                 "tight-witness");
        }
    }
    return std::nullopt;
}

} // namespace treetorsor
