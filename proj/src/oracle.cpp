#include "gridcycle/oracle.hpp"

#include <algorithm>
#include <bit>
#include <unordered_set>
#include <vector>

#include "gridcycle/errors.hpp"
#include "gridcycle/validate.hpp"

namespace gridcycle {

namespace {

struct Search {
    const GridGraph& g;
    int n;
    int64_t budget;
    int64_t explored = 0;
    std::vector<uint64_t> nbr_mask;
    uint64_t black_mask = 0;  // (x+y) even
    int64_t best = 0;
    std::vector<int32_t> best_path;
    int64_t global_ub;
    bool done = false;

    std::vector<int32_t> path;
    uint64_t used = 0;
    int anchor = 0;

    explicit Search(const GridGraph& gg, int64_t b) : g(gg), n(int(gg.size())), budget(b) {
        nbr_mask.assign(size_t(n), 0);
        int64_t blacks = 0;
        for (int i = 0; i < n; ++i) {
            for (int d = 0; d < 4; ++d) {
                int32_t u = g.neighbor(i, d);
                if (u >= 0) nbr_mask[size_t(i)] |= uint64_t(1) << u;
            }
            Point p = g.point(i);
            if (((p.x + p.y) & 1) == 0) {
                black_mask |= uint64_t(1) << i;
                ++blacks;
            }
        }
        global_ub = 2 * std::min(blacks, int64_t(n) - blacks);
    }

    void record() {
        best = int64_t(path.size());
        best_path = path;
        if (best >= global_ub) done = true;
    }

    void extend(int e, uint64_t avail) {
        if (++explored > budget)
            throw Error(Errc::BudgetExceeded, "oracle node budget exceeded");
        uint64_t abit = uint64_t(1) << anchor;
        if ((nbr_mask[size_t(e)] & abit) && int64_t(path.size()) > best &&
            path.size() >= 4 && path[1] < e)
            record();
        if (done) return;

        // reachability of the anchor through available vertices
        uint64_t allowed = avail | abit;
        uint64_t reach = uint64_t(1) << e;
        uint64_t frontier = nbr_mask[size_t(e)] & allowed;
        reach |= frontier;
        while (frontier) {
            uint64_t nxt = 0;
            uint64_t f = frontier;
            while (f) {
                int i = std::countr_zero(f);
                f &= f - 1;
                nxt |= nbr_mask[size_t(i)];
            }
            nxt &= allowed & ~reach;
            reach |= nxt;
            frontier = nxt;
        }
        if (!(reach & abit)) return;

        uint64_t ravail = reach & avail;
        int64_t used_b = int64_t(std::popcount(used & black_mask));
        int64_t used_w = int64_t(path.size()) - used_b;
        int64_t ub = 2 * std::min(used_b + std::popcount(ravail & black_mask),
                                  used_w + std::popcount(ravail & ~black_mask));
        if (ub <= best) return;

        uint64_t cand = nbr_mask[size_t(e)] & ravail;
        while (cand) {
            int w = std::countr_zero(cand);
            cand &= cand - 1;
            path.push_back(w);
            used |= uint64_t(1) << w;
            extend(w, avail & ~(uint64_t(1) << w));
            path.pop_back();
            used &= ~(uint64_t(1) << w);
            if (done) return;
        }
    }

    void run() {
        for (int s = 0; s < n && !done; ++s) {
            anchor = s;
            path.assign(1, s);
            used = uint64_t(1) << s;
            // only vertices above the anchor: the anchor is the cycle's
            // minimum index, deduplicating rotations
            uint64_t avail = (s == 63) ? 0 : (~uint64_t(0) << (s + 1));
            if (n < 64) avail &= (uint64_t(1) << n) - 1;
            extend(s, avail);
        }
    }
};

} // namespace

OracleResult longest_cycle_exact(const GridGraph& g, int64_t budget) {
    if (g.size() > 64)
        throw Error(Errc::InvalidParameters, "oracle limited to 64 vertices");
    OracleResult res;
    if (g.size() < 4) return res;
    Search s{g, budget};
    s.run();
    res.optimum_length = s.best;
    res.explored_nodes = s.explored;
    if (s.best > 0) {
        std::vector<Point> ring;
        ring.reserve(s.best_path.size());
        for (int32_t i : s.best_path) ring.push_back(g.point(i));
        res.witness = canonical_cycle(std::move(ring));
    }
    return res;
}

namespace {

struct Cell {
    int32_t x, y;
    friend bool operator==(Cell a, Cell b) { return a.x == b.x && a.y == b.y; }
};
inline uint64_t cpack(Cell c) { return pack(Point{c.x, c.y}); }

struct Enumerator {
    int max_n;
    const std::function<void(const GridGraph&)>& yield;
    std::unordered_set<uint64_t> seen;
    std::vector<Cell> cells;
    std::unordered_set<uint64_t> verts;  // corner union of cells

    Enumerator(int m, const std::function<void(const GridGraph&)>& y) : max_n(m), yield(y) {}

    // canonical root: no cell below row 0, none left of the origin in row 0
    static bool allowed(Cell c) { return c.y > 0 || (c.y == 0 && c.x >= 0); }

    std::vector<uint64_t> add_cell(Cell c) {
        cells.push_back(c);
        std::vector<uint64_t> added;
        for (int dx = 0; dx <= 1; ++dx)
            for (int dy = 0; dy <= 1; ++dy) {
                uint64_t k = pack(Point{c.x + dx, c.y + dy});
                if (verts.insert(k).second) added.push_back(k);
            }
        return added;
    }
    void undo_cell(const std::vector<uint64_t>& added) {
        cells.pop_back();
        for (uint64_t k : added) verts.erase(k);
    }

    void emit() {
        std::vector<Point> pts;
        pts.reserve(verts.size());
        int32_t minx = INT32_MAX, miny = INT32_MAX;
        for (uint64_t k : verts) {
            Point p{int32_t(k >> 32), int32_t(k & 0xffffffffu)};
            pts.push_back(p);
            minx = std::min(minx, p.x);
            miny = std::min(miny, p.y);
        }
        // the cell set must be exactly the fully-cornered cells of the
        // vertex set, otherwise another polyomino yields the same vertices
        int64_t full = 0;
        for (Point p : pts)
            if (verts.count(pack({p.x + 1, p.y})) && verts.count(pack({p.x, p.y + 1})) &&
                verts.count(pack({p.x + 1, p.y + 1})))
                ++full;
        if (full != int64_t(cells.size())) return;
        for (Point& p : pts) p = {p.x - minx, p.y - miny};
        GridGraph gg{std::move(pts)};
        ValidationReport r = validate(gg);
        if (r.two_connected && r.solid) yield(gg);
    }

    void recurse(std::vector<Cell> untried) {
        while (!untried.empty()) {
            Cell c = untried.back();
            untried.pop_back();
            auto added = add_cell(c);
            if (int(verts.size()) <= max_n) {
                emit();
                std::vector<Cell> next = untried;
                std::vector<uint64_t> newly;
                const Cell nbrs[4] = {{c.x + 1, c.y}, {c.x, c.y + 1}, {c.x - 1, c.y}, {c.x, c.y - 1}};
                for (Cell nb : nbrs) {
                    if (!allowed(nb)) continue;
                    if (seen.insert(cpack(nb)).second) {
                        next.push_back(nb);
                        newly.push_back(cpack(nb));
                    }
                }
                recurse(std::move(next));
                for (uint64_t k : newly) seen.erase(k);
            }
            undo_cell(added);
            // c stays in `seen`: subsets without it that could re-add it
            // are enumerated in the branch that kept it
        }
    }

    void run() {
        Cell origin{0, 0};
        seen.insert(cpack(origin));
        recurse({origin});
    }
};

} // namespace

void enumerate_instances(int max_n, const std::function<void(const GridGraph&)>& yield) {
    if (max_n < 4) return;
    Enumerator e{max_n, yield};
    e.run();
}

} // namespace gridcycle
