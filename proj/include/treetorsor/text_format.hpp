#ifndef TREETORSOR_TEXT_FORMAT_HPP
#define TREETORSOR_TEXT_FORMAT_HPP

#include "treetorsor/divisor.hpp"
#include "treetorsor/ribbon_graph.hpp"

#include <string>
#include <string_view>

namespace treetorsor {

/// Parses the line-oriented graph format:
///
///   vertex <name> : <half-edge-id> ...
///   edge <name> : <half-edge-id> <half-edge-id>
///
/// Rotation lists are counterclockwise. '#' starts a comment. Diagnostics
/// carry 1-based line numbers.
RibbonGraph parse_graph(std::string_view text);

RibbonGraph load_graph_file(const std::string& path);

/// Canonical serialization: vertices in canonical order, then edges sorted by
/// name. parse_graph(serialize_graph(g)) reproduces g byte-identically.
std::string serialize_graph(const RibbonGraph& g);

/// Divisor literals: named "a=2,b=1,c=-1" or positional "(2,1,-1)" / "2,1,-1"
/// against the canonical vertex order. Unlisted vertices get 0 in named form.
Divisor parse_divisor(const RibbonGraph& g, std::string_view text);

/// Renders as a positional row vector "(2,1,-1)" in canonical vertex order.
std::string format_divisor(const RibbonGraph& g, const Divisor& d);

} // namespace treetorsor

#endif
