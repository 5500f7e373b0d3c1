#include "gridcycle/merge.hpp"

#include <algorithm>
#include <optional>
#include <string>
#include <unordered_map>
#include <unordered_set>

#include "gridcycle/errors.hpp"
#include "gridcycle/validate.hpp"

namespace gridcycle {
namespace {

Point unpack(uint64_t v) { return {int32_t(uint32_t(v >> 32)), int32_t(uint32_t(v))}; }

bool same_edge(const Edge& a, const Edge& b) {
    return (a.first == b.first && a.second == b.second) ||
           (a.first == b.second && a.second == b.first);
}

// doubly linked ring over points; grows as cycles are spliced in
struct RingState {
    std::unordered_map<uint64_t, Point> nxt, prv;
    size_t len = 0;

    explicit RingState(const std::vector<Point>& ring) : len(ring.size()) {
        nxt.reserve(ring.size() * 2);
        prv.reserve(ring.size() * 2);
        for (size_t i = 0; i < ring.size(); ++i) set(ring[i], ring[(i + 1) % ring.size()]);
    }
    bool contains(Point p) const { return nxt.count(pack(p)) != 0; }
    Point next(Point p) const { return nxt.at(pack(p)); }
    Point prev(Point p) const { return prv.at(pack(p)); }
    bool has_edge(const Edge& e) const {
        return contains(e.first) && contains(e.second) &&
               (next(e.first) == e.second || next(e.second) == e.first);
    }
    void set(Point a, Point b) {
        nxt[pack(a)] = b;
        prv[pack(b)] = a;
    }
};

// one bridge attachment: landing vertex on the outer ring plus the free
// vertices (at most two) strictly between the inner endpoint and the landing
struct Landing {
    Point gamma{};
    Point f[2] = {{}, {}};
    int k = 0;
};

void collect_landings(Point from, const RingState& outer,
                      const std::unordered_set<uint64_t>& free_set, const GridGraph& g,
                      std::vector<Landing>& out) {
    out.clear();
    auto is_free = [&](Point p) { return free_set.count(pack(p)) != 0; };
    for (int d = 0; d < 4; ++d) {
        Point u = step(from, d);
        if (!g.contains(u)) continue;
        if (outer.contains(u)) {
            out.push_back({u, {{}, {}}, 0});
            continue;
        }
        if (!is_free(u)) continue;
        for (int d2 = 0; d2 < 4; ++d2) {
            Point w = step(u, d2);
            if (w == from || !g.contains(w)) continue;
            if (outer.contains(w)) {
                out.push_back({w, {u, {}}, 1});
                continue;
            }
            if (!is_free(w)) continue;
            for (int d3 = 0; d3 < 4; ++d3) {
                Point z = step(w, d3);
                if (z == u || !g.contains(z)) continue;
                if (outer.contains(z)) out.push_back({z, {u, w}, 2});
            }
        }
    }
}

struct Splice {
    size_t t = 0;      // inner edge (ring[t], ring[t+1]) is removed
    Landing la, lb;    // bridges from ring[t] and ring[t+1]
    bool fwd = false;  // removed outer edge runs la.gamma -> lb.gamma
};

bool interiors_disjoint(const Landing& a, const Landing& b) {
    for (int i = 0; i < a.k; ++i)
        for (int j = 0; j < b.k; ++j)
            if (a.f[i] == b.f[j]) return false;
    return true;
}

// first edge of `ring` (in ring order) admitting two vertex-disjoint
// bridges to consecutive outer vertices; never removes `protect`
std::optional<Splice> search_splice(const std::vector<Point>& ring, const RingState& outer,
                                    const std::unordered_set<uint64_t>& free_set,
                                    const GridGraph& g, const std::optional<Edge>& protect) {
    size_t k = ring.size();
    std::vector<Landing> las, lbs;
    for (size_t t = 0; t < k; ++t) {
        collect_landings(ring[t], outer, free_set, g, las);
        if (las.empty()) continue;
        collect_landings(ring[(t + 1) % k], outer, free_set, g, lbs);
        for (const Landing& la : las) {
            for (const Landing& lb : lbs) {
                if (la.gamma == lb.gamma) continue;
                bool fwd = outer.next(la.gamma) == lb.gamma;
                if (!fwd && outer.prev(la.gamma) != lb.gamma) continue;
                if (!interiors_disjoint(la, lb)) continue;
                if (protect && same_edge({la.gamma, lb.gamma}, *protect)) continue;
                return Splice{t, la, lb, fwd};
            }
        }
    }
    return std::nullopt;
}

MergePlan make_plan(const std::vector<Point>& ring, const Splice& s) {
    size_t k = ring.size();
    Point a = ring[s.t], b = ring[(s.t + 1) % k];
    MergePlan p;
    int ka = s.la.k, kb = s.lb.k;
    if (ka + kb == 0) p.op = 'A';
    else if (k == 4) p.op = (ka == 1 && kb == 1) ? 'E' : 'D';
    else if (ka == 1 && kb == 1) p.op = 'B';
    else p.op = 'C';
    p.site = a;
    p.site_w = b;
    p.edges_removed = {{a, b}, {s.la.gamma, s.lb.gamma}};
    Point cur = a;
    for (int i = 0; i < ka; ++i) {
        p.edges_added.push_back({cur, s.la.f[i]});
        p.absorbed.push_back(s.la.f[i]);
        cur = s.la.f[i];
    }
    p.edges_added.push_back({cur, s.la.gamma});
    cur = b;
    for (int i = 0; i < kb; ++i) {
        p.edges_added.push_back({cur, s.lb.f[i]});
        p.absorbed.push_back(s.lb.f[i]);
        cur = s.lb.f[i];
    }
    p.edges_added.push_back({cur, s.lb.gamma});
    return p;
}

// reroute res through both bridges and the whole inner ring
void apply_splice(RingState& res, const std::vector<Point>& ring, const Splice& s) {
    size_t k = ring.size();
    Point a = ring[s.t], b = ring[(s.t + 1) % k];
    auto chain = [&res](Point from, const Landing& l, Point to) {
        Point cur = from;
        for (int i = 0; i < l.k; ++i) {
            res.set(cur, l.f[i]);
            cur = l.f[i];
        }
        res.set(cur, to);
    };
    auto chain_rev = [&res](Point from, const Landing& l, Point to) {
        Point cur = from;
        for (int i = l.k - 1; i >= 0; --i) {
            res.set(cur, l.f[i]);
            cur = l.f[i];
        }
        res.set(cur, to);
    };
    if (s.fwd) {
        // ... la.gamma -> [la reversed] -> a -> ring backwards -> b -> [lb] -> lb.gamma ...
        chain_rev(s.la.gamma, s.la, a);
        for (size_t j = 0; j + 1 < k; ++j)
            res.set(ring[(s.t + k - j) % k], ring[(s.t + k - j - 1) % k]);
        chain(b, s.lb, s.lb.gamma);
    } else {
        // ... lb.gamma -> [lb reversed] -> b -> ring forwards -> a -> [la] -> la.gamma ...
        chain_rev(s.lb.gamma, s.lb, b);
        for (size_t j = 0; j + 1 < k; ++j)
            res.set(ring[(s.t + 1 + j) % k], ring[(s.t + 2 + j) % k]);
        chain(a, s.la, s.la.gamma);
    }
    res.len += k + size_t(s.la.k + s.lb.k);
}

struct Chains {
    std::vector<std::vector<int32_t>> chains;    // each outermost -> innermost
    std::vector<std::vector<int32_t>> children;  // per cycle, in index order
    std::vector<char> dia;
};

Chains find_chains(const CycleSet& s) {
    size_t n = s.cycles.size();
    Chains c;
    c.children.resize(n);
    c.dia.resize(n);
    for (size_t i = 0; i < n; ++i) {
        c.dia[i] = is_diamond(s.cycles[i], s.host_degree[i]);
        if (s.parent[i] >= 0) c.children[size_t(s.parent[i])].push_back(int32_t(i));
    }
    std::vector<char> assigned(n, 0);
    for (size_t i = 0; i < n; ++i) {
        if (!c.dia[i] || assigned[i]) continue;
        std::vector<int32_t> chain{int32_t(i)};
        assigned[i] = 1;
        int32_t cur = int32_t(i);
        for (;;) {
            int32_t pick = -1;
            for (int32_t ch : c.children[size_t(cur)])
                if (c.dia[size_t(ch)] && !assigned[size_t(ch)]) {
                    pick = ch;
                    break;
                }
            if (pick < 0) break;
            assigned[size_t(pick)] = 1;
            chain.push_back(pick);
            cur = pick;
        }
        c.chains.push_back(std::move(chain));
    }
    return c;
}

// a group converts when it must merge through a diamond shape: nested
// chains, a parent above the group, or children below it. Singleton
// 4-cycles are left to the dedicated 4-cycle merge moves.
bool chain_needs_conversion(const CycleSet& s, const Chains& c, const std::vector<int32_t>& chain) {
    if (chain.size() >= 2) return true;
    int32_t i = chain[0];
    if (s.cycles[size_t(i)].ring.size() == 4) return false;
    return s.parent[size_t(i)] >= 0 || !c.children[size_t(i)].empty();
}

// position of the corner of `ring` whose diagonal opposite is v
std::optional<size_t> corner_for(const std::vector<Point>& ring, Point v) {
    size_t k = ring.size();
    for (size_t i = 0; i < k; ++i) {
        Point a = ring[(i + k - 1) % k], x = ring[i], c = ring[(i + 1) % k];
        if (Point{a.x + c.x - x.x, a.y + c.y - x.y} == v) return i;
    }
    return std::nullopt;
}

struct Swap {
    size_t cyc = 0;  // cycle index
    size_t pos = 0;  // ring position replaced
    Point in{};      // vertex moving onto the ring (old ring[pos] is released)
};

struct CascadePlan {
    std::vector<Swap> swaps;
    Point final_release{};  // vertex left free after the last swap
    bool extended = false;  // reached one step into the non-diamond parent
};

// push `enter` onto chain[from_j], cascade the displaced corners outward
// through chain[0], then optionally one step into parent_idx. Fails (for
// this seed) when a ring has no matching corner or a swap would drop
// `protect`; the parent step is skipped instead of failing.
std::optional<CascadePlan> plan_cascade(const CycleSet& s, const std::vector<int32_t>& chain,
                                        int from_j, Point enter, int32_t parent_idx,
                                        const std::optional<Edge>& protect) {
    CascadePlan cp;
    Point v = enter;
    for (int jj = from_j; jj >= 0; --jj) {
        const auto& ring = s.cycles[size_t(chain[size_t(jj)])].ring;
        auto pos = corner_for(ring, v);
        if (!pos) return std::nullopt;
        size_t k = ring.size();
        Point a = ring[(*pos + k - 1) % k], x = ring[*pos], c = ring[(*pos + 1) % k];
        if (protect && (same_edge({a, x}, *protect) || same_edge({x, c}, *protect)))
            return std::nullopt;
        cp.swaps.push_back({size_t(chain[size_t(jj)]), *pos, v});
        v = x;
    }
    cp.final_release = v;
    if (parent_idx >= 0) {
        const auto& ring = s.cycles[size_t(parent_idx)].ring;
        if (auto pos = corner_for(ring, v)) {
            size_t k = ring.size();
            Point a = ring[(*pos + k - 1) % k], x = ring[*pos], c = ring[(*pos + 1) % k];
            if (!protect || (!same_edge({a, x}, *protect) && !same_edge({x, c}, *protect))) {
                cp.swaps.push_back({size_t(parent_idx), *pos, v});
                cp.final_release = x;
                cp.extended = true;
            }
        }
    }
    return cp;
}

uint8_t geometric_degree(Point p, Point v, Point n) {
    int din = dir_of(p, v), dout = dir_of(v, n);
    if (dout == din) return 3;
    if (dout == rotate_ccw(din)) return 2;
    return 4;
}

// re-canonicalize a rewired ring; host degrees become the synthetic values
// implied by the new geometry (straight = 3, left turn = 2, right turn = 4)
void refresh_cycle(CycleSet& s, const GridGraph& g, size_t idx) {
    validate_cycle(g, s.cycles[idx].ring);
    Cycle c = canonical_cycle(std::move(s.cycles[idx].ring));
    size_t k = c.ring.size();
    auto& hd = s.host_degree[idx];
    hd.assign(k, 2);
    for (size_t i = 0; i < k; ++i)
        hd[i] = geometric_degree(c.ring[(i + k - 1) % k], c.ring[i], c.ring[(i + 1) % k]);
    s.cycles[idx] = std::move(c);
}

// demotion of an empty-interior diamond ring: its four concave corners
// bound the central cell; that cell becomes the cycle, everything else is
// released. Returns the replacement ring, appends released vertices.
std::vector<Point> demote_ring(const CycleSet& s, int32_t idx, std::vector<Point>& released) {
    const auto& ring = s.cycles[size_t(idx)].ring;
    const auto& hd = s.host_degree[size_t(idx)];
    std::vector<Point> concave;
    for (size_t i = 0; i < ring.size(); ++i)
        if (hd[i] == 4) concave.push_back(ring[i]);
    std::sort(concave.begin(), concave.end());
    Point p0 = concave.empty() ? Point{} : concave[0];
    bool cell = concave.size() == 4 && concave[1] == Point{p0.x, p0.y + 1} &&
                concave[2] == Point{p0.x + 1, p0.y} && concave[3] == Point{p0.x + 1, p0.y + 1};
    if (!cell)
        throw Error(Errc::MissingFreeVertex, "empty-interior diamond has no central cell");
    std::vector<Point> four{p0, {p0.x + 1, p0.y}, {p0.x + 1, p0.y + 1}, {p0.x, p0.y + 1}};
    std::unordered_set<uint64_t> keep;
    for (Point q : four) keep.insert(pack(q));
    for (Point q : ring)
        if (!keep.count(pack(q))) released.push_back(q);
    return four;
}

} // namespace

bool is_diamond(const Cycle& c, const std::vector<uint8_t>& host_degree) {
    if (host_degree.size() != c.ring.size())
        throw Error(Errc::InvalidParameters, "host degrees not aligned with the ring");
    for (uint8_t d : host_degree)
        if (d == 3) return false;
    return true;
}

bool ring_turns_everywhere(const Cycle& c) {
    size_t k = c.ring.size();
    for (size_t i = 0; i < k; ++i) {
        Point p = c.ring[(i + k - 1) % k], v = c.ring[i], n = c.ring[(i + 1) % k];
        if (dir_of(p, v) == dir_of(v, n)) return false;
    }
    return true;
}

std::vector<DiamondGroup> group_diamonds(const CycleSet& s) {
    Chains ch = find_chains(s);
    std::unordered_set<uint64_t> free_set;
    for (Point p : s.free_vertices) free_set.insert(pack(p));
    std::vector<DiamondGroup> out;
    for (auto& chain : ch.chains) {
        DiamondGroup gp;
        gp.chain = chain;
        if (chain_needs_conversion(s, ch, chain)) {
            int32_t inner = chain.back();
            const auto& ring = s.cycles[size_t(inner)].ring;
            bool empty_interior = s.host_size[size_t(inner)] == int64_t(ring.size());
            if (!empty_interior) {
                size_t k = ring.size();
                for (size_t i = 0; i < k && !gp.anchor_free; ++i) {
                    Point a = ring[(i + k - 1) % k], x = ring[i], c = ring[(i + 1) % k];
                    Point f{a.x + c.x - x.x, a.y + c.y - x.y};
                    if (free_set.count(pack(f))) gp.anchor_free = f;
                }
                if (!gp.anchor_free)
                    throw Error(Errc::MissingFreeVertex, "no free vertex borders the innermost diamond");
            }
            // empty interior: conversion rewires via the central cell instead
        }
        out.push_back(std::move(gp));
    }
    return out;
}

CycleSet convert_diamonds(const CycleSet& s, const GridGraph& g, std::optional<Edge> protect) {
    CycleSet out = s;
    Chains ch = find_chains(out);
    std::unordered_set<uint64_t> free_set;
    for (Point p : out.free_vertices) free_set.insert(pack(p));

    for (const auto& chain : ch.chains) {
        if (!chain_needs_conversion(out, ch, chain)) continue;
        int kc = int(chain.size());
        int32_t inner = chain.back();
        int32_t pext = out.parent[size_t(chain[0])];
        bool empty_interior =
            out.host_size[size_t(inner)] == int64_t(out.cycles[size_t(inner)].ring.size());

        std::optional<CascadePlan> plan;
        Point seed{};
        std::vector<Point> released;
        bool demoted = false;

        if (!empty_interior) {
            const auto& ring = out.cycles[size_t(inner)].ring;
            size_t k = ring.size();
            for (size_t i = 0; i < k && !plan; ++i) {
                Point a = ring[(i + k - 1) % k], x = ring[i], c = ring[(i + 1) % k];
                Point f{a.x + c.x - x.x, a.y + c.y - x.y};
                if (!free_set.count(pack(f))) continue;
                plan = plan_cascade(out, chain, kc - 1, f, pext, protect);
                if (plan) seed = f;
            }
            if (!plan)
                throw Error(Errc::MissingFreeVertex, "no usable free vertex for diamond group");
        } else {
            if (out.cycles[size_t(inner)].ring.size() == 4)
                throw Error(Errc::MissingFreeVertex, "nested 4-cycle cannot be converted");
            std::vector<Point> four = demote_ring(out, inner, released);
            std::optional<CascadePlan> best;
            Point best_seed{};
            for (Point arm : released) {
                auto cp = plan_cascade(out, chain, kc - 2, arm, pext, protect);
                if (!cp) continue;
                if (cp->extended) {
                    best = cp;
                    best_seed = arm;
                    break;
                }
                if (!best) {
                    best = cp;
                    best_seed = arm;
                }
            }
            if (!best && kc >= 2)
                throw Error(Errc::MissingFreeVertex, "no cascade seed after demotion");
            plan = best;
            seed = best_seed;
            out.cycles[size_t(inner)].ring = four;
            out.host_degree[size_t(inner)].assign(4, 2);
            out.host_size[size_t(inner)] = 4;
            for (Point q : released) free_set.insert(pack(q));
            demoted = true;
        }

        std::vector<size_t> touched;
        if (plan && !plan->swaps.empty()) {
            free_set.erase(pack(seed));
            for (const Swap& sw : plan->swaps) {
                out.cycles[sw.cyc].ring[sw.pos] = sw.in;
                touched.push_back(sw.cyc);
            }
            free_set.insert(pack(plan->final_release));
        }
        for (size_t idx : touched) refresh_cycle(out, g, idx);
        if (demoted) refresh_cycle(out, g, size_t(inner));

        for (int32_t idx : chain) {
            const Cycle& c = out.cycles[size_t(idx)];
            if (c.ring.size() > 4 && ring_turns_everywhere(c))
                throw Error(Errc::NoMergeConfiguration, "conversion left a diamond shape");
        }
    }

    out.free_vertices.clear();
    out.free_vertices.reserve(free_set.size());
    for (uint64_t v : free_set) out.free_vertices.push_back(unpack(v));
    std::sort(out.free_vertices.begin(), out.free_vertices.end());
    return out;
}

MergePlan plan_merge(const Cycle& inner, const Cycle& outer, const std::vector<Point>& free,
                     const GridGraph& g) {
    RingState res(outer.ring);
    std::unordered_set<uint64_t> free_set;
    for (Point p : free) free_set.insert(pack(p));
    auto sp = search_splice(inner.ring, res, free_set, g, std::nullopt);
    if (!sp) throw Error(Errc::NoMergeConfiguration, "no merge site between the two cycles");
    return make_plan(inner.ring, *sp);
}

Cycle merge_all(const CycleSet& s, const GridGraph& g, Edge e) {
    if (s.cycles.empty()) throw Error(Errc::PreconditionViolated, "empty cycle set");
    if (s.parent.empty() || s.parent[0] != -1)
        throw Error(Errc::PreconditionViolated, "cycle set has no root");
    RingState res(s.cycles[0].ring);
    if (!res.has_edge(e))
        throw Error(Errc::InvalidParameters, "pinned edge is not on the outer cycle");

    std::unordered_set<uint64_t> free_set;
    for (Point p : s.free_vertices) free_set.insert(pack(p));

    size_t n = s.cycles.size();
    std::vector<int> depth(n, 0);
    for (size_t i = 1; i < n; ++i) {
        if (s.parent[i] < 0 || size_t(s.parent[i]) >= i)
            throw Error(Errc::PreconditionViolated, "cycle set parents are not in preorder");
        depth[i] = depth[size_t(s.parent[i])] + 1;
    }
    std::vector<size_t> order;
    order.reserve(n - 1);
    for (size_t i = 1; i < n; ++i) order.push_back(i);
    std::sort(order.begin(), order.end(), [&](size_t x, size_t y) {
        if (depth[x] != depth[y]) return depth[x] < depth[y];
        return s.cycles[x].ring.front() < s.cycles[y].ring.front();
    });

    for (size_t idx : order) {
        auto sp = search_splice(s.cycles[idx].ring, res, free_set, g, e);
        if (!sp)
            throw Error(Errc::NoMergeConfiguration,
                        "no merge configuration for cycle " + std::to_string(idx));
        for (int i = 0; i < sp->la.k; ++i) free_set.erase(pack(sp->la.f[i]));
        for (int i = 0; i < sp->lb.k; ++i) free_set.erase(pack(sp->lb.f[i]));
        apply_splice(res, s.cycles[idx].ring, *sp);
    }

    std::vector<Point> walk;
    walk.reserve(res.len);
    walk.push_back(e.first);
    for (Point p = res.next(e.first); p != e.first; p = res.next(p)) {
        walk.push_back(p);
        if (walk.size() > res.len)
            throw Error(Errc::NoMergeConfiguration, "merged ring is inconsistent");
    }
    if (walk.size() != res.len)
        throw Error(Errc::NoMergeConfiguration, "merged ring is inconsistent");
    Cycle result = canonical_cycle(std::move(walk));
    validate_cycle(g, result.ring);
    return result;
}

Cycle approximate_longest_cycle(const GridGraph& g, std::optional<Edge> pin) {
    ValidationReport rep = validate(g);
    if (!rep.solid) throw Error(Errc::PreconditionViolated, "graph is not solid");
    GridGraph h = largest_biconnected(g);
    CycleSet s = find_cycle_set(h);
    Edge e = pin ? *pin : Edge{s.cycles[0].ring[0], s.cycles[0].ring[1]};
    {
        RingState root(s.cycles[0].ring);
        if (!root.has_edge(e))
            throw Error(Errc::InvalidParameters, "edge is not on the outer boundary cycle");
    }
    CycleSet s2 = convert_diamonds(s, h, e);
    return merge_all(s2, h, e);
}

} // namespace gridcycle
