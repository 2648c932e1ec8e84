#include "treetorsor/ribbon_graph.hpp"

#include <algorithm>
#include <numeric>

namespace treetorsor {

const char* error_kind_name(ErrorKind kind) {
    switch (kind) {
        case ErrorKind::LoopEdge: return "LoopEdge";
        case ErrorKind::Disconnected: return "Disconnected";
        case ErrorKind::BadInvolution: return "BadInvolution";
        case ErrorKind::DuplicateHalfEdge: return "DuplicateHalfEdge";
        case ErrorKind::DuplicateVertex: return "DuplicateVertex";
        case ErrorKind::DuplicateEdge: return "DuplicateEdge";
        case ErrorKind::UnknownHalfEdge: return "UnknownHalfEdge";
        case ErrorKind::UnknownVertex: return "UnknownVertex";
        case ErrorKind::UnknownEdge: return "UnknownEdge";
        case ErrorKind::UnknownName: return "UnknownName";
        case ErrorKind::NotIncident: return "NotIncident";
        case ErrorKind::NotOnCycle: return "NotOnCycle";
        case ErrorKind::EdgeInCycle: return "EdgeInCycle";
        case ErrorKind::WouldDisconnect: return "WouldDisconnect";
        case ErrorKind::Infeasible: return "Infeasible";
        case ErrorKind::NotFound: return "NotFound";
        case ErrorKind::NonUnique: return "NonUnique";
        case ErrorKind::AtSink: return "AtSink";
        case ErrorKind::StepBudgetExceeded: return "StepBudgetExceeded";
        case ErrorKind::PrecedenceFails: return "PrecedenceFails";
        case ErrorKind::ComponentDisjoint: return "ComponentDisjoint";
        case ErrorKind::NotApplicable: return "NotApplicable";
        case ErrorKind::SyntaxError: return "SyntaxError";
        case ErrorKind::CalibrationFailed: return "CalibrationFailed";
        case ErrorKind::InternalError: return "InternalError";
    }
    return "Error";
}

RibbonGraph RibbonGraph::build(std::vector<VertexSpec> rotation, std::vector<EdgeSpec> pairing) {
    RibbonGraph g;

    int max_half = -1;
    for (const auto& v : rotation)
        for (int h : v.halves) {
            if (h < 0) fail(ErrorKind::UnknownHalfEdge, "negative half-edge id " + std::to_string(h));
            max_half = std::max(max_half, h);
        }
    g.halves_.assign(static_cast<size_t>(max_half + 1), Half{});

    for (auto& vs : rotation) {
        if (g.vertex_index_.count(vs.name))
            fail(ErrorKind::DuplicateVertex, "vertex '" + vs.name + "' declared twice");
        VertexId v = static_cast<VertexId>(g.vertex_names_.size());
        g.vertex_index_.emplace(vs.name, v);
        g.vertex_names_.push_back(vs.name);
        for (int h : vs.halves) {
            if (g.halves_[h].present)
                fail(ErrorKind::DuplicateHalfEdge, "half-edge " + std::to_string(h) + " occurs twice");
            g.halves_[h].present = true;
            g.halves_[h].vertex = v;
        }
        g.rotations_.push_back(std::move(vs.halves));
    }

    // successor/predecessor around each vertex
    for (VertexId v = 0; v < g.vertex_count(); ++v) {
        const auto& rot = g.rotations_[v];
        const int d = static_cast<int>(rot.size());
        for (int i = 0; i < d; ++i) {
            g.halves_[rot[i]].succ = rot[(i + 1) % d];
            g.halves_[rot[i]].pred = rot[(i + d - 1) % d];
        }
    }

    // pairing
    std::sort(pairing.begin(), pairing.end(),
              [](const EdgeSpec& a, const EdgeSpec& b) { return a.name < b.name; });
    for (const auto& es : pairing) {
        if (g.edge_index_.count(es.name))
            fail(ErrorKind::DuplicateEdge, "edge '" + es.name + "' declared twice");
        if (es.half_a == es.half_b)
            fail(ErrorKind::BadInvolution,
                 "edge '" + es.name + "' pairs half-edge " + std::to_string(es.half_a) + " with itself");
        for (int h : {es.half_a, es.half_b}) {
            if (h < 0 || h > max_half || !g.halves_[h].present)
                fail(ErrorKind::UnknownHalfEdge,
                     "edge '" + es.name + "' references unknown half-edge " + std::to_string(h));
            if (g.halves_[h].mate != -1)
                fail(ErrorKind::BadInvolution,
                     "half-edge " + std::to_string(h) + " paired twice (edge '" + es.name + "')");
        }
        if (g.halves_[es.half_a].vertex == g.halves_[es.half_b].vertex)
            fail(ErrorKind::LoopEdge, "edge '" + es.name + "' is a loop at vertex '" +
                                          g.vertex_names_[g.halves_[es.half_a].vertex] + "'");
        EdgeId e = static_cast<EdgeId>(g.edges_.size());
        int ha = es.half_a, hb = es.half_b;
        if (g.halves_[ha].vertex > g.halves_[hb].vertex) std::swap(ha, hb);
        g.edges_.push_back(EdgeRec{es.name, ha, hb});
        g.edge_index_.emplace(es.name, e);
        g.halves_[es.half_a].mate = es.half_b;
        g.halves_[es.half_b].mate = es.half_a;
        g.halves_[es.half_a].edge = e;
        g.halves_[es.half_b].edge = e;
    }

    for (int h = 0; h <= max_half; ++h) {
        if (g.halves_[h].present && g.halves_[h].mate == -1)
            fail(ErrorKind::BadInvolution, "half-edge " + std::to_string(h) + " has no pair");
        if (g.halves_[h].present) g.half_ids_.push_back(h);
    }

    // connectivity
    if (g.vertex_count() == 0) fail(ErrorKind::Disconnected, "graph has no vertices");
    std::vector<char> seen(g.vertex_count(), 0);
    std::vector<VertexId> stack{0};
    seen[0] = 1;
    while (!stack.empty()) {
        VertexId v = stack.back();
        stack.pop_back();
        for (int h : g.rotations_[v]) {
            VertexId w = g.halves_[g.halves_[h].mate].vertex;
            if (!seen[w]) {
                seen[w] = 1;
                stack.push_back(w);
            }
        }
    }
    for (VertexId v = 0; v < g.vertex_count(); ++v)
        if (!seen[v])
            fail(ErrorKind::Disconnected, "vertex '" + g.vertex_names_[v] + "' is unreachable from '" +
                                              g.vertex_names_[0] + "'");
    return g;
}

const RibbonGraph::Half& RibbonGraph::half(int id) const {
    if (id < 0 || id >= static_cast<int>(halves_.size()) || !halves_[id].present)
        fail(ErrorKind::UnknownHalfEdge, "half-edge " + std::to_string(id) + " not in graph");
    return halves_[id];
}

VertexId RibbonGraph::vertex(std::string_view name) const {
    auto it = vertex_index_.find(std::string(name));
    if (it == vertex_index_.end()) fail(ErrorKind::UnknownVertex, "no vertex '" + std::string(name) + "'");
    return it->second;
}

bool RibbonGraph::has_vertex(std::string_view name) const {
    return vertex_index_.count(std::string(name)) > 0;
}

EdgeId RibbonGraph::edge(std::string_view name) const {
    auto it = edge_index_.find(std::string(name));
    if (it == edge_index_.end()) fail(ErrorKind::UnknownEdge, "no edge '" + std::string(name) + "'");
    return it->second;
}

std::span<const int> RibbonGraph::rotation(VertexId v) const {
    if (v < 0 || v >= vertex_count()) fail(ErrorKind::UnknownVertex, "vertex index " + std::to_string(v));
    return rotations_[v];
}

int RibbonGraph::successor(int h) const { return half(h).succ; }
int RibbonGraph::predecessor(int h) const { return half(h).pred; }
int RibbonGraph::mate(int h) const { return half(h).mate; }
VertexId RibbonGraph::half_vertex(int h) const { return half(h).vertex; }
EdgeId RibbonGraph::half_edge(int h) const { return half(h).edge; }

int RibbonGraph::half_at(VertexId v, EdgeId e) const {
    const EdgeRec& rec = edges_.at(e);
    if (halves_[rec.half_a].vertex == v) return rec.half_a;
    if (halves_[rec.half_b].vertex == v) return rec.half_b;
    fail(ErrorKind::NotIncident, "edge '" + rec.name + "' is not incident to vertex '" + vertex_name(v) + "'");
}

std::pair<VertexId, VertexId> RibbonGraph::endpoints(EdgeId e) const {
    const EdgeRec& rec = edges_.at(e);
    return {halves_[rec.half_a].vertex, halves_[rec.half_b].vertex};
}

VertexId RibbonGraph::other_endpoint(EdgeId e, VertexId v) const {
    auto [a, b] = endpoints(e);
    if (a == v) return b;
    if (b == v) return a;
    fail(ErrorKind::NotIncident, "edge '" + edge_name(e) + "' is not incident to vertex '" + vertex_name(v) + "'");
}

bool RibbonGraph::incident(EdgeId e, VertexId v) const {
    auto [a, b] = endpoints(e);
    return a == v || b == v;
}

std::vector<EdgeId> RibbonGraph::edges_at(VertexId v) const {
    std::vector<EdgeId> out;
    out.reserve(rotation(v).size());
    for (int h : rotation(v)) out.push_back(halves_[h].edge);
    return out;
}

std::vector<EdgeId> RibbonGraph::interval(VertexId v, EdgeId e0, EdgeId e1) const {
    if (e0 == e1) fail(ErrorKind::NotIncident, "interval endpoints must be distinct edges");
    int h = half_at(v, e0);
    const int target = half_at(v, e1);
    std::vector<EdgeId> out{e0};
    while (h != target) {
        h = successor(h);
        out.push_back(halves_[h].edge);
    }
    return out;
}

std::vector<std::vector<int>> RibbonGraph::faces() const {
    std::vector<char> used(halves_.size(), 0);
    std::vector<std::vector<int>> faces;
    for (int start : half_ids_) {
        if (used[start]) continue;
        std::vector<int> orbit;
        int h = start;
        do {
            used[h] = 1;
            orbit.push_back(h);
            h = successor(mate(h));
        } while (h != start);
        faces.push_back(std::move(orbit));
    }
    return faces;
}

int RibbonGraph::surface_genus() const {
    const int f = static_cast<int>(faces().size());
    const int euler = vertex_count() - edge_count() + f;
    if ((2 - euler) % 2 != 0 || euler > 2)
        fail(ErrorKind::InternalError, "impossible Euler characteristic " + std::to_string(euler));
    return (2 - euler) / 2;
}

RibbonGraph RibbonGraph::delete_edge(EdgeId e) const {
    if (e < 0 || e >= edge_count()) fail(ErrorKind::UnknownEdge, "edge index " + std::to_string(e));
    const EdgeRec& rec = edges_[e];
    std::vector<VertexSpec> rot;
    for (VertexId v = 0; v < vertex_count(); ++v) {
        VertexSpec vs{vertex_names_[v], {}};
        for (int h : rotations_[v])
            if (h != rec.half_a && h != rec.half_b) vs.halves.push_back(h);
        rot.push_back(std::move(vs));
    }
    std::vector<EdgeSpec> pairs;
    for (EdgeId i = 0; i < edge_count(); ++i)
        if (i != e) pairs.push_back(EdgeSpec{edges_[i].name, edges_[i].half_a, edges_[i].half_b});
    try {
        return build(std::move(rot), std::move(pairs));
    } catch (const Error& err) {
        if (err.kind() == ErrorKind::Disconnected)
            fail(ErrorKind::WouldDisconnect, "deleting edge '" + rec.name + "' disconnects the graph");
        throw;
    }
}

RibbonGraph RibbonGraph::contract_edge(EdgeId e, int* loops_removed) const {
    if (e < 0 || e >= edge_count()) fail(ErrorKind::UnknownEdge, "edge index " + std::to_string(e));
    const EdgeRec& rec = edges_[e];
    VertexId keep = halves_[rec.half_a].vertex;
    VertexId gone = halves_[rec.half_b].vertex;
    int keep_half = rec.half_a, gone_half = rec.half_b;
    if (keep > gone) {
        std::swap(keep, gone);
        std::swap(keep_half, gone_half);
    }

    // Merged rotation: rotate each endpoint's list so the deleted half-edge is
    // first, then substitute the other endpoint's remainder for that slot.
    auto rotate_to = [](std::vector<int> rot, int first) {
        auto it = std::find(rot.begin(), rot.end(), first);
        std::rotate(rot.begin(), it, rot.end());
        return rot;
    };
    std::vector<int> keep_rot = rotate_to(rotations_[keep], keep_half);
    std::vector<int> gone_rot = rotate_to(rotations_[gone], gone_half);
    std::vector<int> merged(gone_rot.begin() + 1, gone_rot.end());
    merged.insert(merged.end(), keep_rot.begin() + 1, keep_rot.end());

    // Parallel copies of e become loops at the merged vertex; drop them.
    int loops = 0;
    std::vector<char> is_loop_half(halves_.size(), 0);
    for (EdgeId i = 0; i < edge_count(); ++i) {
        if (i == e) continue;
        auto [a, b] = endpoints(i);
        bool loops_here = (a == keep || a == gone) && (b == keep || b == gone);
        if (loops_here) {
            ++loops;
            is_loop_half[edges_[i].half_a] = 1;
            is_loop_half[edges_[i].half_b] = 1;
        }
    }
    if (loops_removed) *loops_removed = loops;
    std::erase_if(merged, [&](int h) { return is_loop_half[h] != 0; });

    std::vector<VertexSpec> rot;
    for (VertexId v = 0; v < vertex_count(); ++v) {
        if (v == gone) continue;
        VertexSpec vs{vertex_names_[v], {}};
        if (v == keep) {
            vs.halves = merged;
        } else {
            for (int h : rotations_[v])
                if (!is_loop_half[h]) vs.halves.push_back(h);
        }
        rot.push_back(std::move(vs));
    }
    std::vector<EdgeSpec> pairs;
    for (EdgeId i = 0; i < edge_count(); ++i) {
        if (i == e || is_loop_half[edges_[i].half_a]) continue;
        pairs.push_back(EdgeSpec{edges_[i].name, edges_[i].half_a, edges_[i].half_b});
    }
    return build(std::move(rot), std::move(pairs));
}

bool OrientedCycle::contains_vertex(VertexId v) const {
    return std::find(vertices.begin(), vertices.end(), v) != vertices.end();
}

bool OrientedCycle::contains_edge(EdgeId e) const {
    return std::find(edges.begin(), edges.end(), e) != edges.end();
}

int OrientedCycle::vertex_position(VertexId v) const {
    auto it = std::find(vertices.begin(), vertices.end(), v);
    return it == vertices.end() ? -1 : static_cast<int>(it - vertices.begin());
}

OrientedCycle OrientedCycle::reversed() const {
    // vertices (v0,...,v_{k-1}) -> (v0, v_{k-1}, ..., v1); edges reverse wholesale.
    OrientedCycle out;
    const int k = length();
    out.vertices.push_back(vertices[0]);
    for (int i = k - 1; i >= 1; --i) out.vertices.push_back(vertices[i]);
    for (int i = k - 1; i >= 0; --i) out.edges.push_back(edges[i]);
    return out;
}

EdgeId OrientedCycle::edge_in(VertexId v) const {
    int i = vertex_position(v);
    if (i < 0) fail(ErrorKind::NotOnCycle, "vertex not on cycle");
    const int k = length();
    return edges[(i + k - 1) % k];
}

EdgeId OrientedCycle::edge_out(VertexId v) const {
    int i = vertex_position(v);
    if (i < 0) fail(ErrorKind::NotOnCycle, "vertex not on cycle");
    return edges[i];
}

GraphPath GraphPath::reversed() const {
    GraphPath out;
    out.vertices.assign(vertices.rbegin(), vertices.rend());
    out.edges.assign(edges.rbegin(), edges.rend());
    return out;
}

Side classify_edge_side(const RibbonGraph& g, const OrientedCycle& c, VertexId v, EdgeId e) {
    if (!c.contains_vertex(v)) fail(ErrorKind::NotOnCycle, "vertex '" + g.vertex_name(v) + "' not on cycle");
    if (c.contains_edge(e)) fail(ErrorKind::EdgeInCycle, "edge '" + g.edge_name(e) + "' lies on the cycle");
    if (!g.incident(e, v))
        fail(ErrorKind::NotIncident, "edge '" + g.edge_name(e) + "' not incident to '" + g.vertex_name(v) + "'");
    const int h_out = g.half_at(v, c.edge_out(v));
    const int h_in = g.half_at(v, c.edge_in(v));
    const int h_e = g.half_at(v, e);
    // Walk from e_out toward e_in; meeting e first puts it on the left.
    int h = h_out;
    while (true) {
        h = g.successor(h);
        if (h == h_e) return Side::Left;
        if (h == h_in) return Side::Right;
    }
}

void validate_cycle(const RibbonGraph& g, const OrientedCycle& c) {
    const int k = c.length();
    if (k < 2 || static_cast<int>(c.vertices.size()) != k)
        fail(ErrorKind::InternalError, "cycle must alternate k vertices and k edges, k >= 2");
    std::vector<VertexId> vs = c.vertices;
    std::sort(vs.begin(), vs.end());
    if (std::adjacent_find(vs.begin(), vs.end()) != vs.end())
        fail(ErrorKind::InternalError, "cycle repeats a vertex");
    std::vector<EdgeId> es = c.edges;
    std::sort(es.begin(), es.end());
    if (std::adjacent_find(es.begin(), es.end()) != es.end())
        fail(ErrorKind::InternalError, "cycle repeats an edge");
    for (int i = 0; i < k; ++i) {
        VertexId a = c.vertices[i], b = c.vertices[(i + 1) % k];
        auto [x, y] = g.endpoints(c.edges[i]);
        if (!((x == a && y == b) || (x == b && y == a)))
            fail(ErrorKind::InternalError, "cycle edge '" + g.edge_name(c.edges[i]) + "' does not join its vertices");
    }
}

void validate_path(const RibbonGraph& g, const GraphPath& p) {
    if (p.vertices.size() != p.edges.size() + 1)
        fail(ErrorKind::InternalError, "path must alternate k+1 vertices and k edges");
    std::vector<EdgeId> es = p.edges;
    std::sort(es.begin(), es.end());
    if (std::adjacent_find(es.begin(), es.end()) != es.end())
        fail(ErrorKind::InternalError, "path repeats an edge");
    for (size_t i = 0; i < p.edges.size(); ++i) {
        VertexId a = p.vertices[i], b = p.vertices[i + 1];
        auto [x, y] = g.endpoints(p.edges[i]);
        if (!((x == a && y == b) || (x == b && y == a)))
            fail(ErrorKind::InternalError, "path edge '" + g.edge_name(p.edges[i]) + "' does not join its vertices");
    }
}

} // namespace treetorsor
