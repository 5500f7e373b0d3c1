#pragma once
#include <cstdint>
#include <string>
#include <vector>

#include "gridcycle/cycle.hpp"
#include "gridcycle/grid_graph.hpp"

namespace gridcycle {

struct StepStat {
    int32_t cycle_index = 0;
    int64_t ring_len = 0;
    int64_t host_size = 0;  // vertices of the host this cycle bounds
    int64_t freed = 0;      // host vertices in no cycle and no recursed child
};

// Vertex-disjoint nested cycles peeled off the host, pre-order by nesting.
struct CycleSet {
    std::vector<Cycle> cycles;
    std::vector<int32_t> parent;  // immediate enclosing cycle; -1 for the root
    // degree of each ring vertex within its host at extraction time,
    // aligned with the cycle's ring order
    std::vector<std::vector<uint8_t>> host_degree;
    std::vector<int64_t> host_size;
    std::vector<Point> free_vertices;  // sorted; in no cycle
    std::vector<StepStat> steps;
    // full host vertex sets (sorted); only with capture_hosts
    std::vector<std::vector<Point>> host_snapshot;
};

struct CycleSetOptions {
    bool capture_hosts = false;
};

// Recursively peel boundary cycles: emit the host boundary, split the
// interior into components, skip any component that is exactly a unit
// square, keep a disjoint family of the remaining interior blocks, recurse.
// Requires g 2-connected, solid, >= 4 vertices.
CycleSet find_cycle_set(const GridGraph& g, const CycleSetOptions& opt = {});

int64_t total_length(const CycleSet& s);

// one line per cycle `cycle <parent> <L>: x0 y0 x1 y1 ...`, then `free: ...`
std::string serialize(const CycleSet& s);

} // namespace gridcycle
