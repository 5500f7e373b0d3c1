#pragma once
#include <vector>

#include "gridcycle/grid_graph.hpp"
#include "gridcycle/point.hpp"

namespace gridcycle {

struct ValidationReport {
    bool connected = false;
    bool two_connected = false;
    bool solid = false;
};

// connected: single component. two_connected: connected, min degree >= 2,
// no cut vertex. solid: every bounded face is a unit square, tested via
// Euler's formula (#unit-cell faces == E - V + #components).
ValidationReport validate(const GridGraph& g);

struct BlockDecomposition {
    // nontrivial blocks only (>= 4 vertices, contain a cycle), each sorted;
    // ordered by (size desc, lex-min vertex asc)
    std::vector<std::vector<Point>> blocks;
    std::vector<Point> cut_vertices;  // sorted
    // disjoint greedy selection: kept (possibly shrunk) vertex sets, in the
    // order their source blocks were processed
    std::vector<std::vector<Point>> selection;
    std::vector<Point> outside_vertices;  // in no selected set, sorted
};

BlockDecomposition blocks(const GridGraph& g);

// maximum-size nontrivial block (tie: lexicographically smallest vertex);
// NoCycle if g has none (forest)
GridGraph largest_biconnected(const GridGraph& g);

} // namespace gridcycle
