#include "gridcycle/validate.hpp"

#include <algorithm>
#include <unordered_set>

#include "gridcycle/errors.hpp"

namespace gridcycle {

namespace {

// components + articulation vertices in one iterative lowlink pass
struct DfsResult {
    int components = 0;
    std::vector<uint8_t> is_cut;
};

DfsResult dfs_scan(const GridGraph& g) {
    int32_t n = int32_t(g.size());
    DfsResult r;
    r.is_cut.assign(size_t(n), 0);
    std::vector<int32_t> num(size_t(n), -1), low(size_t(n), 0), parent(size_t(n), -1);
    std::vector<int32_t> root_children(size_t(n), 0);
    struct Frame { int32_t v; int d; };
    std::vector<Frame> stack;
    int32_t counter = 0;
    for (int32_t s = 0; s < n; ++s) {
        if (num[size_t(s)] >= 0) continue;
        ++r.components;
        num[size_t(s)] = low[size_t(s)] = counter++;
        stack.push_back({s, 0});
        while (!stack.empty()) {
            auto& [v, d] = stack.back();
            if (d < 4) {
                int32_t u = g.neighbor(v, d);
                ++d;
                if (u < 0 || u == parent[size_t(v)]) continue;
                if (num[size_t(u)] >= 0) {
                    low[size_t(v)] = std::min(low[size_t(v)], num[size_t(u)]);
                } else {
                    parent[size_t(u)] = v;
                    if (v == s) ++root_children[size_t(s)];
                    num[size_t(u)] = low[size_t(u)] = counter++;
                    stack.push_back({u, 0});
                }
            } else {
                stack.pop_back();
                int32_t p = parent[size_t(v)];
                if (p >= 0) {
                    low[size_t(p)] = std::min(low[size_t(p)], low[size_t(v)]);
                    if (p != s && low[size_t(v)] >= num[size_t(p)]) r.is_cut[size_t(p)] = 1;
                }
            }
        }
        if (root_children[size_t(s)] > 1) r.is_cut[size_t(s)] = 1;
    }
    return r;
}

int64_t count_edges(const GridGraph& g) {
    int64_t e = 0;
    for (int32_t i = 0; i < int32_t(g.size()); ++i) {
        e += g.neighbor(i, 0) >= 0;  // east
        e += g.neighbor(i, 1) >= 0;  // north
    }
    return e;
}

int64_t count_unit_faces(const GridGraph& g) {
    // cell anchored at v = {v, v+E, v+N, v+NE}; induced graph has all 4
    // sides iff all 4 corners present
    int64_t f = 0;
    for (Point p : g.points())
        if (g.contains({p.x + 1, p.y}) && g.contains({p.x, p.y + 1}) &&
            g.contains({p.x + 1, p.y + 1}))
            ++f;
    return f;
}

} // namespace

ValidationReport validate(const GridGraph& g) {
    if (g.empty()) throw Error(Errc::EmptyGraph, "validate of empty graph");
    DfsResult d = dfs_scan(g);
    ValidationReport rep;
    rep.connected = d.components == 1;
    bool min_deg2 = true;
    for (int32_t i = 0; i < int32_t(g.size()); ++i)
        if (g.degree(i) < 2) { min_deg2 = false; break; }
    bool has_cut = std::find(d.is_cut.begin(), d.is_cut.end(), 1) != d.is_cut.end();
    rep.two_connected = rep.connected && min_deg2 && !has_cut;
    // Euler: bounded faces of a plane graph = E - V + #components; solid
    // iff they are all unit squares
    rep.solid = count_unit_faces(g) == count_edges(g) - int64_t(g.size()) + d.components;
    return rep;
}

namespace {

// nontrivial blocks (vertex sets) via iterative Tarjan with an edge stack
std::vector<std::vector<Point>> raw_blocks(const GridGraph& g) {
    int32_t n = int32_t(g.size());
    std::vector<int32_t> num(size_t(n), -1), low(size_t(n), 0), parent(size_t(n), -1);
    std::vector<std::pair<int32_t, int32_t>> estack;
    std::vector<std::vector<Point>> out;
    struct Frame { int32_t v; int d; };
    std::vector<Frame> stack;
    int32_t counter = 0;

    auto pop_block = [&](int32_t v, int32_t u) {
        std::vector<Point> verts;
        std::unordered_set<int32_t> seen;
        int64_t edges = 0;
        while (!estack.empty()) {
            auto [a, b] = estack.back();
            estack.pop_back();
            ++edges;
            if (seen.insert(a).second) verts.push_back(g.point(a));
            if (seen.insert(b).second) verts.push_back(g.point(b));
            if (a == v && b == u) break;
        }
        if (edges > 1) {  // more than a bridge -> contains a cycle
            std::sort(verts.begin(), verts.end());
            out.push_back(std::move(verts));
        }
    };

    for (int32_t s = 0; s < n; ++s) {
        if (num[size_t(s)] >= 0) continue;
        num[size_t(s)] = low[size_t(s)] = counter++;
        stack.push_back({s, 0});
        while (!stack.empty()) {
            auto& [v, d] = stack.back();
            if (d < 4) {
                int32_t u = g.neighbor(v, d);
                ++d;
                if (u < 0 || u == parent[size_t(v)]) continue;
                if (num[size_t(u)] >= 0) {
                    if (num[size_t(u)] < num[size_t(v)]) {
                        estack.push_back({v, u});
                        low[size_t(v)] = std::min(low[size_t(v)], num[size_t(u)]);
                    }
                } else {
                    estack.push_back({v, u});
                    parent[size_t(u)] = v;
                    num[size_t(u)] = low[size_t(u)] = counter++;
                    stack.push_back({u, 0});
                }
            } else {
                stack.pop_back();
                int32_t p = parent[size_t(v)];
                if (p >= 0) {
                    low[size_t(p)] = std::min(low[size_t(p)], low[size_t(v)]);
                    if (low[size_t(v)] >= num[size_t(p)]) pop_block(p, v);
                }
            }
        }
    }
    return out;
}

bool shrunk_ok(const std::vector<Point>& verts) {
    if (verts.size() < 4) return false;
    GridGraph h{verts};
    ValidationReport r = validate(h);
    return r.two_connected && r.solid;
}

} // namespace

BlockDecomposition blocks(const GridGraph& g) {
    BlockDecomposition out;
    if (g.empty()) return out;
    out.blocks = raw_blocks(g);
    std::sort(out.blocks.begin(), out.blocks.end(), [](const auto& a, const auto& b) {
        if (a.size() != b.size()) return a.size() > b.size();
        return a.front() < b.front();
    });

    // vertices in > 1 nontrivial block are cut vertices; so are the
    // articulation points from the lowlink scan (covers bridge joints)
    DfsResult d = dfs_scan(g);
    for (int32_t i = 0; i < int32_t(g.size()); ++i)
        if (d.is_cut[size_t(i)]) out.cut_vertices.push_back(g.point(i));
    std::sort(out.cut_vertices.begin(), out.cut_vertices.end());

    // greedy disjoint selection, largest block first; a block that lost
    // vertices to earlier picks survives only if the remainder is still a
    // valid host (>= 4 vertices, 2-connected, solid)
    std::unordered_set<uint64_t> claimed;
    for (const auto& b : out.blocks) {
        bool overlap = false;
        for (Point p : b)
            if (claimed.count(pack(p))) { overlap = true; break; }
        std::vector<Point> kept;
        if (!overlap) {
            kept = b;
        } else {
            for (Point p : b)
                if (!claimed.count(pack(p))) kept.push_back(p);
            if (!shrunk_ok(kept)) continue;
        }
        for (Point p : kept) claimed.insert(pack(p));
        out.selection.push_back(std::move(kept));
    }
    for (Point p : g.points())
        if (!claimed.count(pack(p))) out.outside_vertices.push_back(p);
    return out;
}

GridGraph largest_biconnected(const GridGraph& g) {
    if (g.empty()) throw Error(Errc::EmptyGraph, "empty graph");
    auto bs = raw_blocks(g);
    if (bs.empty()) throw Error(Errc::NoCycle, "graph has no cycle");
    const std::vector<Point>* best = &bs.front();
    for (const auto& b : bs)
        if (b.size() > best->size() ||
            (b.size() == best->size() && b.front() < best->front()))
            best = &b;
    return GridGraph{*best};
}

} // namespace gridcycle
