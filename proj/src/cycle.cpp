#include "gridcycle/cycle.hpp"

#include <algorithm>
#include <unordered_set>

#include "gridcycle/errors.hpp"

namespace gridcycle {

int64_t ring_area2(const std::vector<Point>& ring) {
    int64_t a2 = 0;
    size_t n = ring.size();
    for (size_t i = 0; i < n; ++i) {
        Point p = ring[i], q = ring[(i + 1) % n];
        a2 += int64_t(p.x) * q.y - int64_t(q.x) * p.y;
    }
    return a2;
}

int64_t enclosed_count(const std::vector<Point>& ring) {
    // Pick: A = I + B/2 - 1, so I + B = A + B/2 + 1. All boundary lattice
    // points are ring vertices (unit steps).
    int64_t a2 = ring_area2(ring);
    if (a2 < 0) a2 = -a2;
    return a2 / 2 + int64_t(ring.size()) / 2 + 1;
}

Cycle canonical_cycle(std::vector<Point> ring) {
    if (ring_area2(ring) < 0) std::reverse(ring.begin(), ring.end());
    size_t best = 0;
    for (size_t i = 1; i < ring.size(); ++i)
        if (ring[i] < ring[best]) best = i;
    std::rotate(ring.begin(), ring.begin() + ptrdiff_t(best), ring.end());
    return Cycle{std::move(ring)};
}

void validate_cycle(const GridGraph& g, const std::vector<Point>& ring) {
    if (ring.size() < 4)
        throw Error(Errc::PreconditionViolated, "cycle shorter than 4");
    std::unordered_set<uint64_t> seen;
    seen.reserve(ring.size() * 2);
    for (size_t i = 0; i < ring.size(); ++i) {
        if (!g.contains(ring[i]))
            throw Error(Errc::PreconditionViolated, "cycle vertex not in graph");
        if (!seen.insert(pack(ring[i])).second)
            throw Error(Errc::PreconditionViolated, "repeated cycle vertex");
        if (dir_of(ring[i], ring[(i + 1) % ring.size()]) < 0)
            throw Error(Errc::PreconditionViolated, "non-adjacent consecutive cycle vertices");
    }
}

} // namespace gridcycle
