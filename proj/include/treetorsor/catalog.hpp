#ifndef TREETORSOR_CATALOG_HPP
#define TREETORSOR_CATALOG_HPP

#include "treetorsor/ribbon_graph.hpp"

#include <string>
#include <vector>

namespace treetorsor {

/// Builds a ribbon graph from per-vertex rotations given as edge-name lists.
/// Half-edge ids are assigned sequentially along the vertex order.
RibbonGraph graph_from_rotations(
    const std::vector<std::pair<std::string, std::vector<std::string>>>& rotations,
    const std::vector<std::pair<std::string, std::pair<std::string, std::string>>>& edges);

struct CatalogEntry {
    std::string name;
    RibbonGraph graph;
    std::string note;
    bool planar = false;
    std::string serialized; // canonical text form; parses back byte-identically
};

/// Names the catalog can serve: triangle, k4:<wxyz> over {0,1}^4 (1 reverses
/// that vertex's planar rotation), k4, k5, k33, rounded-bowtie, pointed-bowtie.
const std::vector<std::string>& catalog_names();

/// UnknownName for anything else.
CatalogEntry catalog(const std::string& name);

RibbonGraph catalog_graph(const std::string& name);

/// One rotation system tried while pinning down a bowtie catalog entry.
struct CalibrationCandidate {
    std::vector<std::string> hub_rotation; // edge names around the high-degree vertex
    int genus = 0;
    bool satisfies = false; // nonplanar and reproduces the expected action behavior
};

struct CalibrationReport {
    std::string graph;
    std::string hub_vertex;
    std::vector<CalibrationCandidate> candidates;
    int selected = -1; // first satisfying candidate
};

/// Exhausts the rotation systems of the named bowtie graph and selects the
/// first nonplanar one whose torsor behavior matches the expected pattern:
/// the rounded bowtie must agree at every base; the pointed bowtie must agree
/// at p, disagree at q, with difference cycle type {3,3,1,1,1} on (a)-(p).
/// CalibrationFailed when no candidate qualifies.
CalibrationReport calibrate_catalog(const std::string& name);

} // namespace treetorsor

#endif
