#include "gridcycle/boundary.hpp"

#include <unordered_set>

#include "gridcycle/errors.hpp"

namespace gridcycle {

ClosedWalk boundary_walk(const GridGraph& g) {
    if (g.empty()) throw Error(Errc::EmptyGraph, "boundary_walk of empty graph");
    // points() is sorted, so front() is the lexicographic minimum; its -x
    // neighbor can never be present
    Point v0 = g.points().front();
    auto at = [&](Point p) { return g.contains(p); };
    return ClosedWalk{detail::wall_follow(at, v0, 2)};
}

Cycle boundary_cycle(const GridGraph& g) {
    if (g.size() < 4) throw Error(Errc::NoCycle, "fewer than 4 vertices");
    ClosedWalk w = boundary_walk(g);
    std::unordered_set<uint64_t> seen;
    seen.reserve(w.ring.size() * 2);
    for (Point p : w.ring)
        if (!seen.insert(pack(p)).second)
            throw Error(Errc::NotTwoConnected, "boundary walk repeats a vertex");
    if (w.ring.size() < 4) throw Error(Errc::NoCycle, "no cycle in graph");
    // walk is already canonical: starts at lex-min, positive orientation
    return Cycle{std::move(w.ring)};
}

BoundaryClass classify(const GridGraph& g, const Cycle& c, Point v) {
    bool on = false;
    for (Point p : c.ring)
        if (p == v) { on = true; break; }
    if (!on) throw Error(Errc::VertexNotOnCycle, "vertex not on cycle");
    int32_t i = g.index_of(v);
    if (i < 0) throw Error(Errc::VertexNotOnCycle, "vertex not in graph");
    switch (g.degree(i)) {
    case 2: return BoundaryClass::Convex;
    case 3: return BoundaryClass::Flat;
    case 4: return BoundaryClass::Concave;
    default: throw Error(Errc::PreconditionViolated, "boundary vertex of degree < 2");
    }
}

} // namespace gridcycle
