#pragma once
#include <optional>
#include <utility>
#include <vector>

#include "gridcycle/cycle.hpp"
#include "gridcycle/cycle_set.hpp"
#include "gridcycle/grid_graph.hpp"

namespace gridcycle {

using Edge = std::pair<Point, Point>;  // endpoints in either order

// boundary cycle with no flat vertex (no host-degree 3)
bool is_diamond(const Cycle& c, const std::vector<uint8_t>& host_degree);

// geometric counterpart used on rewired cycles: no straight-through vertex
bool ring_turns_everywhere(const Cycle& c);

struct DiamondGroup {
    std::vector<int32_t> chain;        // cycle indices, outermost -> innermost
    std::optional<Point> anchor_free;  // conversion seed; absent when the
                                       // group needs no conversion or will be
                                       // rewired via its central cell instead
};

// maximal nested chains of diamond cycles; anchor located for groups that
// must merge with surrounding cycles (singleton 4-cycles under non-diamond
// parents are left to the free-vertex merge moves)
std::vector<DiamondGroup> group_diamonds(const CycleSet& s);

// Rewire diamond groups so their members stop being diamond-shaped and
// expose merge sites: absorb the anchor free vertex into the innermost
// ring by a corner swap, cascade the displaced corner outward through the
// chain (and one step into a non-diamond parent when present). Covered
// vertex count and total length never decrease. Never removes `protect`.
CycleSet convert_diamonds(const CycleSet& s, const GridGraph& g,
                          std::optional<Edge> protect = std::nullopt);

struct MergePlan {
    // local configuration label: A = direct parallel-edge splice; B = two
    // one-free bridges; C = bridges absorbing two frees on one side; for a
    // 4-cycle inner: D = an L-bridge of two frees / two two-free bridges,
    // E = two one-free bridges
    char op = 'A';
    Point site{};                 // inner endpoint of the first bridge
    std::optional<Point> site_w;  // inner endpoint of the second bridge
    std::vector<Edge> edges_removed;  // one inner edge, one outer edge
    std::vector<Edge> edges_added;
    std::vector<Point> absorbed;  // free vertices pulled into the cycle
};

// First applicable merge between inner and outer: remove one edge of each,
// reconnect through two vertex-disjoint paths whose interiors are free
// vertices (at most two each). Scans inner edges in ring order from the
// lexicographic minimum. Throws NoMergeConfiguration when no site exists.
MergePlan plan_merge(const Cycle& inner, const Cycle& outer,
                     const std::vector<Point>& free, const GridGraph& g);

// Fold every cycle into the root, outermost-in, never removing edge e.
// Returns the merged simple cycle (re-validated, contains e).
Cycle merge_all(const CycleSet& s_prime, const GridGraph& g, Edge e);

// validate -> largest 2-connected block -> cycle set -> diamond conversion
// -> merge_all. pin defaults to the root cycle's first edge.
Cycle approximate_longest_cycle(const GridGraph& g, std::optional<Edge> pin = std::nullopt);

} // namespace gridcycle
