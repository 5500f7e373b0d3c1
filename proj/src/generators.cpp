#include "gridcycle/generators.hpp"

#include <random>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "gridcycle/errors.hpp"

namespace gridcycle {

namespace {

GridGraph from_cells(const std::vector<Point>& cells) {
    std::unordered_set<uint64_t> verts;
    verts.reserve(cells.size() * 4);
    std::vector<Point> pts;
    for (Point c : cells)
        for (int dx = 0; dx <= 1; ++dx)
            for (int dy = 0; dy <= 1; ++dy) {
                Point p{c.x + dx, c.y + dy};
                if (verts.insert(pack(p)).second) pts.push_back(p);
            }
    return GridGraph{std::move(pts)};
}

GridGraph gen_rect(const Rectangle& r) {
    if (r.m < 1 || r.k < 1)
        throw Error(Errc::InvalidParameters, "rectangle sides must be positive");
    std::vector<Point> pts;
    pts.reserve(size_t(r.m) * size_t(r.k));
    for (int32_t x = 0; x < r.m; ++x)
        for (int32_t y = 0; y < r.k; ++y) pts.push_back({x, y});
    return GridGraph{std::move(pts)};
}

std::vector<Point> diamond_cells(int32_t radius) {
    std::vector<Point> cells;
    for (int32_t i = -radius; i <= radius; ++i)
        for (int32_t j = -radius; j <= radius; ++j)
            if (std::abs(i) + std::abs(j) <= radius) cells.push_back({i, j});
    return cells;
}

GridGraph gen_random(const RandomSolid& spec) {
    if (spec.cells < 1)
        throw Error(Errc::InvalidParameters, "cell count must be positive");
    std::mt19937_64 rng(spec.seed);

    std::unordered_set<uint64_t> cellset, verts, frontier_set;
    std::vector<Point> cells, frontier;
    int64_t V = 0, E = 0, F = 0;

    auto insert_vertex = [&](Point p) {
        verts.insert(pack(p));
        ++V;
        for (int d = 0; d < 4; ++d)
            if (verts.count(pack(step(p, d)))) ++E;
        // cells completed by this corner (each completes exactly once, at
        // its last inserted corner)
        for (int dx = -1; dx <= 0; ++dx)
            for (int dy = -1; dy <= 0; ++dy) {
                Point c{p.x + dx, p.y + dy};
                bool full = true;
                for (int ex = 0; ex <= 1 && full; ++ex)
                    for (int ey = 0; ey <= 1 && full; ++ey)
                        full = verts.count(pack(Point{c.x + ex, c.y + ey})) != 0;
                if (full) ++F;
            }
    };

    auto add_cell = [&](Point c) -> bool {
        int64_t v0 = V, e0 = E, f0 = F;
        std::vector<Point> added;
        for (int dx = 0; dx <= 1; ++dx)
            for (int dy = 0; dy <= 1; ++dy) {
                Point p{c.x + dx, c.y + dy};
                if (!verts.count(pack(p))) {
                    insert_vertex(p);
                    added.push_back(p);
                }
            }
        if (F == E - V + 1) {  // still hole-free (graph stays connected)
            cellset.insert(pack(c));
            cells.push_back(c);
            return true;
        }
        for (Point p : added) {  // rollback
            verts.erase(pack(p));
        }
        V = v0;
        E = e0;
        F = f0;
        return false;
    };

    add_cell({0, 0});
    auto push_frontier = [&](Point c) {
        if (!cellset.count(pack(c)) && frontier_set.insert(pack(c)).second)
            frontier.push_back(c);
    };
    for (int d = 0; d < 4; ++d) push_frontier(step({0, 0}, d));

    int64_t attempts = 0;
    while (int64_t(cells.size()) < spec.cells) {
        if (++attempts > 10000 * spec.cells + 10000)
            throw Error(Errc::InvalidParameters, "random growth stalled");
        size_t i = size_t(rng() % frontier.size());
        Point c = frontier[i];
        if (cellset.count(pack(c))) continue;
        if (add_cell(c)) {
            frontier[i] = frontier.back();
            frontier.pop_back();
            frontier_set.erase(pack(c));
            for (int d = 0; d < 4; ++d) push_frontier(step(c, d));
        }
        // rejected cells stay in the frontier: later growth may make them
        // hole-safe again
    }
    return from_cells(cells);
}

} // namespace

GridGraph generate(const GeneratorSpec& spec) {
    if (std::holds_alternative<Rectangle>(spec)) return gen_rect(std::get<Rectangle>(spec));
    if (std::holds_alternative<StaircaseDiamond>(spec)) {
        int32_t order = std::get<StaircaseDiamond>(spec).order;
        if (order < 1) throw Error(Errc::InvalidParameters, "diamond order must be positive");
        return from_cells(diamond_cells(order - 1));
    }
    if (std::holds_alternative<NestedDiamonds>(spec)) {
        int32_t depth = std::get<NestedDiamonds>(spec).depth;
        if (depth < 1) throw Error(Errc::InvalidParameters, "nesting depth must be positive");
        return from_cells(diamond_cells(2 * depth));
    }
    return gen_random(std::get<RandomSolid>(spec));
}

} // namespace gridcycle
