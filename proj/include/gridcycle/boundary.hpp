#pragma once
#include <vector>

#include "gridcycle/cycle.hpp"
#include "gridcycle/grid_graph.hpp"

namespace gridcycle {

enum class BoundaryClass { Convex, Flat, Concave };

// Closed walk along the outer face. Precondition: g connected and nonempty.
// Starts at the lexicographically smallest vertex, first step +x (the
// deterministic orientation used everywhere; positive shoelace area).
// Cut vertices repeat once per extra block they join. Single vertex ->
// walk {v} of length 0; two vertices -> length-2 walk.
ClosedWalk boundary_walk(const GridGraph& g);

// Boundary walk of a 2-connected solid graph, guaranteed simple.
// Throws NoCycle if |g| < 4, NotTwoConnected if the walk repeats a vertex.
Cycle boundary_cycle(const GridGraph& g);

// Convex/Flat/Concave by degree of v in g (2/3/4). v must lie on c.
BoundaryClass classify(const GridGraph& g, const Cycle& c, Point v);

namespace detail {

// Outer-face wall follow over an arbitrary membership predicate.
// v0 must be a member; dead_dir a direction from v0 with no member.
// Returns the closed walk ring ({v0} alone if v0 has no member neighbor).
template <class Pred>
std::vector<Point> wall_follow(const Pred& at, Point v0, int dead_dir) {
    auto first_exit = [&](Point v, int din) {
        // wall on the right: right turn, straight, left turn, back
        int order[4] = {rotate_cw(din), din, rotate_ccw(din), reverse_dir(din)};
        for (int d : order)
            if (at(step(v, d))) return d;
        return -1;
    };
    int d0 = first_exit(v0, rotate_ccw(dead_dir));
    if (d0 < 0) return {v0};
    std::vector<Point> ring;
    Point v = v0;
    int d = d0;
    do {
        ring.push_back(v);
        v = step(v, d);
        d = first_exit(v, d);
    } while (!(v == v0 && d == d0));
    return ring;
}

// Interior sector at ring position: directions from v that point strictly
// inside the (positively oriented) ring, given arrival and departure
// directions. Calls fn(d) for each such direction.
template <class Fn>
void for_interior_dirs(int din, int dout, const Fn& fn) {
    for (int d = rotate_ccw(dout); d != reverse_dir(din); d = rotate_ccw(d)) fn(d);
}

} // namespace detail

} // namespace gridcycle
