#include "treetorsor/catalog.hpp"

#include "treetorsor/divisor.hpp"
#include "treetorsor/text_format.hpp"
#include "treetorsor/torsor.hpp"
#include "treetorsor/trees.hpp"

#include <algorithm>
#include <map>

namespace treetorsor {

RibbonGraph graph_from_rotations(
    const std::vector<std::pair<std::string, std::vector<std::string>>>& rotations,
    const std::vector<std::pair<std::string, std::pair<std::string, std::string>>>& edges) {
    // slot ids per (vertex, edge-name)
    std::map<std::pair<std::string, std::string>, int> slot;
    std::vector<RibbonGraph::VertexSpec> vspecs;
    int next = 0;
    for (const auto& [vname, rot] : rotations) {
        RibbonGraph::VertexSpec vs{vname, {}};
        for (const std::string& ename : rot) {
            slot[{vname, ename}] = next;
            vs.halves.push_back(next++);
        }
        vspecs.push_back(std::move(vs));
    }
    std::vector<RibbonGraph::EdgeSpec> especs;
    for (const auto& [ename, ends] : edges) {
        auto a = slot.find({ends.first, ename});
        auto b = slot.find({ends.second, ename});
        if (a == slot.end() || b == slot.end())
            fail(ErrorKind::InternalError, "edge '" + ename + "' missing from a rotation list");
        especs.push_back(RibbonGraph::EdgeSpec{ename, a->second, b->second});
    }
    return RibbonGraph::build(std::move(vspecs), std::move(especs));
}

namespace {

using Rotations = std::vector<std::pair<std::string, std::vector<std::string>>>;
using EdgeEnds = std::vector<std::pair<std::string, std::pair<std::string, std::string>>>;

RibbonGraph make_triangle() {
    return graph_from_rotations({{"x", {"xy", "xz"}}, {"y", {"xy", "yz"}}, {"z", {"xz", "yz"}}},
                                {{"xy", {"x", "y"}}, {"xz", {"x", "z"}}, {"yz", {"y", "z"}}});
}

// Complete graph on a,b,c,d with the planar rotation; code character '1'
// reverses the rotation at the corresponding vertex.
RibbonGraph make_k4(const std::string& code) {
    if (code.size() != 4 || code.find_first_not_of("01") != std::string::npos)
        fail(ErrorKind::UnknownName, "k4 codes are four characters of 0 or 1, e.g. k4:0011");
    Rotations rot = {{"a", {"ab", "ad", "ac"}},
                     {"b", {"bc", "bd", "ab"}},
                     {"c", {"ac", "cd", "bc"}},
                     {"d", {"ad", "bd", "cd"}}};
    for (int i = 0; i < 4; ++i)
        if (code[i] == '1') std::reverse(rot[i].second.begin(), rot[i].second.end());
    return graph_from_rotations(rot, {{"ab", {"a", "b"}},
                                      {"ac", {"a", "c"}},
                                      {"ad", {"a", "d"}},
                                      {"bc", {"b", "c"}},
                                      {"bd", {"b", "d"}},
                                      {"cd", {"c", "d"}}});
}

RibbonGraph make_k5() {
    const std::string names = "abcde";
    Rotations rot;
    EdgeEnds edges;
    for (char v : names) {
        std::vector<std::string> r;
        for (char w : names) {
            if (w == v) continue;
            std::string e{std::min(v, w), std::max(v, w)};
            r.push_back(e);
            if (v < w) edges.push_back({e, {std::string(1, v), std::string(1, w)}});
        }
        rot.push_back({std::string(1, v), std::move(r)});
    }
    return graph_from_rotations(rot, edges);
}

RibbonGraph make_k33() {
    const std::string left = "abc", right = "xyz";
    Rotations rot;
    EdgeEnds edges;
    for (char v : left) {
        std::vector<std::string> r;
        for (char w : right) {
            std::string e{v, w};
            r.push_back(e);
            edges.push_back({e, {std::string(1, v), std::string(1, w)}});
        }
        rot.push_back({std::string(1, v), std::move(r)});
    }
    for (char w : right) {
        std::vector<std::string> r;
        for (char v : left) r.push_back(std::string{v, w});
        rot.push_back({std::string(1, w), std::move(r)});
    }
    return graph_from_rotations(rot, edges);
}

RibbonGraph make_rounded_bowtie(const std::vector<std::string>& hub_rotation) {
    return graph_from_rotations({{"a", {"ac1", "ac2"}}, {"b", {"bc1", "bc2"}}, {"c", hub_rotation}},
                                {{"ac1", {"a", "c"}},
                                 {"ac2", {"a", "c"}},
                                 {"bc1", {"b", "c"}},
                                 {"bc2", {"b", "c"}}});
}

RibbonGraph make_pointed_bowtie(const std::vector<std::string>& hub_rotation) {
    return graph_from_rotations({{"a", {"ab", "ap"}},
                                 {"b", {"ab", "bp"}},
                                 {"p", hub_rotation},
                                 {"c", {"cp", "cq"}},
                                 {"q", {"cq", "pq"}}},
                                {{"ab", {"a", "b"}},
                                 {"ap", {"a", "p"}},
                                 {"bp", {"b", "p"}},
                                 {"cp", {"c", "p"}},
                                 {"cq", {"c", "q"}},
                                 {"pq", {"p", "q"}}});
}

// Cyclic orders of the hub edges with the first one pinned, in lexicographic
// order of the remaining sequence.
std::vector<std::vector<std::string>> hub_orders(std::vector<std::string> edges) {
    std::sort(edges.begin(), edges.end());
    std::vector<std::string> rest(edges.begin() + 1, edges.end());
    std::vector<std::vector<std::string>> out;
    do {
        std::vector<std::string> order{edges.front()};
        order.insert(order.end(), rest.begin(), rest.end());
        out.push_back(std::move(order));
    } while (std::next_permutation(rest.begin(), rest.end()));
    return out;
}

bool rounded_bowtie_satisfies(const RibbonGraph& g) {
    if (g.surface_genus() == 0) return false;
    TreeList trees = enumerate_trees(g);
    for (VertexId q = 0; q < g.vertex_count(); ++q)
        if (!torsors_equal(g, trees, q)) return false;
    return true;
}

bool pointed_bowtie_satisfies(const RibbonGraph& g) {
    if (g.surface_genus() == 0) return false;
    TreeList trees = enumerate_trees(g);
    const VertexId a = g.vertex("a"), p = g.vertex("p"), q = g.vertex("q");
    if (!torsors_equal(g, trees, p)) return false;
    if (torsors_equal(g, trees, q)) return false;
    Divisor d = zero_divisor(g);
    d[a] += 1;
    d[p] -= 1;
    return difference(g, trees, q, d).cycle_type() == std::vector<int>{3, 3, 1, 1, 1};
}

CalibrationReport run_calibration(const std::string& name) {
    CalibrationReport report;
    report.graph = name;
    const bool rounded = name == "rounded-bowtie";
    report.hub_vertex = rounded ? "c" : "p";
    const std::vector<std::string> hub_edges =
        rounded ? std::vector<std::string>{"ac1", "ac2", "bc1", "bc2"}
                : std::vector<std::string>{"ap", "bp", "cp", "pq"};
    for (const auto& order : hub_orders(hub_edges)) {
        RibbonGraph g = rounded ? make_rounded_bowtie(order) : make_pointed_bowtie(order);
        CalibrationCandidate cand;
        cand.hub_rotation = order;
        cand.genus = g.surface_genus();
        cand.satisfies = rounded ? rounded_bowtie_satisfies(g) : pointed_bowtie_satisfies(g);
        if (cand.satisfies && report.selected < 0)
            report.selected = static_cast<int>(report.candidates.size());
        report.candidates.push_back(std::move(cand));
    }
    if (report.selected < 0)
        fail(ErrorKind::CalibrationFailed,
             "no rotation system of the " + name + " reproduces the expected torsor behavior");
    return report;
}

const CalibrationReport& cached_calibration(const std::string& name) {
    static std::map<std::string, CalibrationReport> cache;
    auto it = cache.find(name);
    if (it == cache.end()) it = cache.emplace(name, run_calibration(name)).first;
    return it->second;
}

} // namespace

CalibrationReport calibrate_catalog(const std::string& name) {
    if (name != "rounded-bowtie" && name != "pointed-bowtie")
        fail(ErrorKind::UnknownName,
             "only the bowtie graphs need calibration; '" + name + "' has a fixed rotation");
    return cached_calibration(name);
}

const std::vector<std::string>& catalog_names() {
    static const std::vector<std::string> names = [] {
        std::vector<std::string> out{"triangle", "k4", "k5", "k33", "rounded-bowtie", "pointed-bowtie"};
        for (int code = 0; code < 16; ++code) {
            std::string s = "k4:";
            for (int i = 3; i >= 0; --i) s.push_back((code >> i) & 1 ? '1' : '0');
            out.push_back(std::move(s));
        }
        return out;
    }();
    return names;
}

CatalogEntry catalog(const std::string& name) {
    CatalogEntry entry;
    entry.name = name;
    if (name == "triangle") {
        entry.graph = make_triangle();
        entry.note = "three vertices in one cycle; the unique (planar) rotation system";
    } else if (name == "k4" || name.rfind("k4:", 0) == 0) {
        const std::string code = name == "k4" ? "0000" : name.substr(3);
        entry.graph = make_k4(code);
        entry.note = "complete graph on four vertices; '1' flips a vertex of the planar rotation (code " +
                     code + ")";
    } else if (name == "k5") {
        entry.graph = make_k5();
        entry.note = "complete graph on five vertices, alphabetic rotations; nonplanar for every rotation";
    } else if (name == "k33") {
        entry.graph = make_k33();
        entry.note = "complete bipartite graph on {a,b,c} x {x,y,z}, alphabetic rotations; nonplanar "
                     "for every rotation";
    } else if (name == "rounded-bowtie") {
        const CalibrationReport& cal = cached_calibration(name);
        entry.graph = make_rounded_bowtie(cal.candidates[cal.selected].hub_rotation);
        entry.note = "two parallel pairs a=c and b=c on a torus; calibrated so both actions coincide "
                     "at every base";
    } else if (name == "pointed-bowtie") {
        const CalibrationReport& cal = cached_calibration(name);
        entry.graph = make_pointed_bowtie(cal.candidates[cal.selected].hub_rotation);
        entry.note = "triangles abp and pcq sharing p on a torus; calibrated so the actions agree at p "
                     "and differ at q";
    } else {
        fail(ErrorKind::UnknownName, "no catalog graph named '" + name + "'");
    }
    entry.planar = entry.graph.surface_genus() == 0;
    entry.serialized = serialize_graph(entry.graph);
    return entry;
}

RibbonGraph catalog_graph(const std::string& name) { return catalog(name).graph; }

} // namespace treetorsor
