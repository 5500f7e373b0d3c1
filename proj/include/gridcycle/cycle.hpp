#pragma once
#include <cstdint>
#include <vector>

#include "gridcycle/grid_graph.hpp"
#include "gridcycle/point.hpp"

namespace gridcycle {

// Closed walk on the lattice; ring[i] -> ring[i+1] (cyclically) are unit
// steps. Vertices may repeat (cut vertices of a non-2-connected boundary).
// A single isolated vertex is represented as ring = {v} with length 0.
struct ClosedWalk {
    std::vector<Point> ring;
    size_t length() const { return ring.size() < 2 ? 0 : ring.size(); }
};

// Simple cycle: all ring vertices distinct, canonical form (see
// canonical_cycle). Length == ring.size().
struct Cycle {
    std::vector<Point> ring;
    size_t length() const { return ring.size(); }
};

// twice the signed area of the ring polygon (positive = counter-clockwise
// in y-up coordinates, which is the canonical orientation here)
int64_t ring_area2(const std::vector<Point>& ring);

// number of lattice points enclosed by the ring or on it (Pick's theorem);
// ring must be simple
int64_t enclosed_count(const std::vector<Point>& ring);

// rotate/orient ring so it starts at its lexicographically smallest vertex
// and has positive signed area; ring must be a simple cycle
Cycle canonical_cycle(std::vector<Point> ring);

// throws PreconditionViolated unless ring is a simple cycle in g:
// >= 4 distinct vertices, consecutive ones adjacent, all present in g
void validate_cycle(const GridGraph& g, const std::vector<Point>& ring);

} // namespace gridcycle
