#pragma once
#include <string>

#include "gridcycle/cycle.hpp"
#include "gridcycle/grid_graph.hpp"

namespace gridcycle {

// Instance format: one `x y` pair per line, `#` comments, blank lines
// ignored. ParseError (with line number) on malformed lines, out-of-range
// coordinates, or duplicate points.
GridGraph parse_instance(const std::string& text);

// inverse of parse_instance: sorted `x y` lines, round-trip exact
std::string render_instance(const GridGraph& g);

// `cycle <L>` header plus one `x y` line per ring vertex
std::string render_cycle(const Cycle& c);

// standalone SVG: graph edges/vertices in gray, cycle on top in color
// (exactly one <line> per cycle edge inside <g id="cycle">), 20 px per
// lattice unit, origin bottom-left
std::string render_svg(const GridGraph& g, const Cycle& c);

// coarse terminal rendering: `*`/`o` vertices (on/off cycle), `-`/`|`
// cycle edges
std::string render_ascii(const GridGraph& g, const Cycle& c);

} // namespace gridcycle
