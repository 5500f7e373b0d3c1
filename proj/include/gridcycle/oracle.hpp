#pragma once
#include <cstdint>
#include <functional>

#include "gridcycle/cycle.hpp"
#include "gridcycle/grid_graph.hpp"

namespace gridcycle {

struct OracleResult {
    int64_t optimum_length = 0;  // 0 when g has no cycle
    Cycle witness;               // empty ring when no cycle exists
    int64_t explored_nodes = 0;
};

// Exact longest cycle by backtracking over a <= 64 vertex bitmask.
// Prunes: bipartite color balance, connectivity flood between the path
// endpoint and its anchor, canonical anchor/direction dedup. Stops early
// when the global parity bound 2*min(#black, #white) is reached.
// Throws BudgetExceeded when more than `budget` nodes are expanded,
// InvalidParameters above 64 vertices.
OracleResult longest_cycle_exact(const GridGraph& g, int64_t budget = 10'000'000);

// All 2-connected solid grid graphs with 4 <= n <= max_n vertices, one per
// translation class, min corner at the origin. Grown as cell polyominoes
// (Redelmeier untried-set recursion), keeping only sets whose filled cells
// are exactly the fully-cornered cells of their vertex set, then filtered
// by validate().
void enumerate_instances(int max_n, const std::function<void(const GridGraph&)>& yield);

} // namespace gridcycle
