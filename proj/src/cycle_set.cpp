#include "gridcycle/cycle_set.hpp"

#include <algorithm>
#include <sstream>
#include <unordered_map>
#include <unordered_set>
#include <variant>

#include "gridcycle/boundary.hpp"
#include "gridcycle/errors.hpp"
#include "gridcycle/validate.hpp"

namespace gridcycle {

namespace {

// split a component's boundary walk at repeated vertices: each repeat pops a
// simple closed sub-walk (a block boundary if length >= 4, a retraced bridge
// if length 2); the remnant wraps around to the walk start
std::vector<std::vector<Point>> split_walk(const std::vector<Point>& walk) {
    std::vector<std::vector<Point>> out;
    std::vector<Point> stack;
    std::unordered_map<uint64_t, size_t> open;  // vertex -> position on stack
    open.reserve(walk.size() * 2);
    for (Point p : walk) {
        auto it = open.find(pack(p));
        if (it == open.end()) {
            open.emplace(pack(p), stack.size());
            stack.push_back(p);
        } else {
            size_t from = it->second;
            if (stack.size() - from >= 4)
                out.emplace_back(stack.begin() + ptrdiff_t(from), stack.end());
            for (size_t i = from + 1; i < stack.size(); ++i) open.erase(pack(stack[i]));
            stack.resize(from + 1);
        }
    }
    if (stack.size() >= 4) out.push_back(std::move(stack));
    return out;
}

struct RingItem {
    std::vector<Point> ring;  // canonical; host = ring + enclosed vertices
    int32_t parent;
};
struct SubItem {
    std::vector<Point> verts;  // materialized host that lost cut vertices
    int32_t parent;
};
using WorkItem = std::variant<RingItem, SubItem>;

struct Builder {
    const GridGraph& g;
    CycleSetOptions opt;
    CycleSet out;
    std::vector<uint8_t> alive;
    std::vector<int32_t> stamp;
    int32_t gen = 0;
    std::vector<WorkItem> work;

    Builder(const GridGraph& gg, const CycleSetOptions& o) : g(gg), opt(o) {
        alive.assign(g.size(), 1);
        stamp.assign(g.size(), 0);
    }

    bool alive_at(Point p) const {
        int32_t i = g.index_of(p);
        return i >= 0 && alive[size_t(i)];
    }

    // ring + everything enclosed by it (interior vertices are all alive)
    std::vector<Point> materialize(const std::vector<Point>& ring) const {
        std::unordered_set<uint64_t> seen;
        seen.reserve(ring.size() * 4);
        for (Point p : ring) seen.insert(pack(p));
        std::vector<Point> verts = ring;
        size_t head = ring.size();
        size_t m = ring.size();
        for (size_t i = 0; i < m; ++i) {
            Point v = ring[i];
            int din = dir_of(ring[(i + m - 1) % m], v);
            int dout = dir_of(v, ring[(i + 1) % m]);
            detail::for_interior_dirs(din, dout, [&](int d) {
                Point u = step(v, d);
                if (alive_at(u) && seen.insert(pack(u)).second) verts.push_back(u);
            });
        }
        while (head < verts.size()) {
            Point u = verts[head++];
            for (int d = 0; d < 4; ++d) {
                Point w = step(u, d);
                if (alive_at(w) && seen.insert(pack(w)).second) verts.push_back(w);
            }
        }
        std::sort(verts.begin(), verts.end());
        return verts;
    }

    void process_ring(RingItem item) {
        const std::vector<Point>& ring = item.ring;
        size_t m = ring.size();
        int32_t idx = int32_t(out.cycles.size());

        std::unordered_set<uint64_t> on_ring;
        on_ring.reserve(m * 2);
        for (Point p : ring) on_ring.insert(pack(p));

        // host-degree snapshot: ring neighbors always count; other present
        // vertices count only when they lie strictly inside this ring
        std::vector<uint8_t> hd(m, 0);
        for (size_t i = 0; i < m; ++i) {
            Point v = ring[i];
            int din = dir_of(ring[(i + m - 1) % m], v);
            int dout = dir_of(v, ring[(i + 1) % m]);
            bool insec[4] = {false, false, false, false};
            detail::for_interior_dirs(din, dout, [&](int d) { insec[d] = true; });
            uint8_t k = 0;
            for (int d = 0; d < 4; ++d) {
                Point u = step(v, d);
                if (!g.contains(u)) continue;
                if (on_ring.count(pack(u)) || (insec[d] && alive_at(u))) ++k;
            }
            hd[i] = k;
        }

        if (opt.capture_hosts) out.host_snapshot.push_back(materialize(ring));
        out.cycles.push_back(Cycle{ring});
        out.parent.push_back(item.parent);
        out.host_degree.push_back(std::move(hd));
        int64_t host_n = enclosed_count(ring);
        out.host_size.push_back(host_n);

        for (Point p : ring) alive[size_t(g.index_of(p))] = 0;

        // discover interior components from ring-adjacent seeds and walk
        // their outer boundaries
        ++gen;
        std::vector<std::vector<Point>> walks;
        for (size_t i = 0; i < m; ++i) {
            Point v = ring[i];
            int din = dir_of(ring[(i + m - 1) % m], v);
            int dout = dir_of(v, ring[(i + 1) % m]);
            detail::for_interior_dirs(din, dout, [&](int d) {
                Point u = step(v, d);
                int32_t ui = g.index_of(u);
                if (ui < 0 || !alive[size_t(ui)] || stamp[size_t(ui)] == gen) return;
                auto at = [this](Point p) { return alive_at(p); };
                std::vector<Point> w = detail::wall_follow(at, u, reverse_dir(d));
                for (Point q : w) stamp[size_t(g.index_of(q))] = gen;
                walks.push_back(std::move(w));
            });
        }

        struct Cand {
            std::vector<Point> ring;
            int64_t size;
        };
        std::vector<Cand> cands;
        for (auto& w : walks) {
            if (w.size() == 4) {  // unit-square component: leave its vertices free
                std::unordered_set<uint64_t> uniq{pack(w[0]), pack(w[1]), pack(w[2]), pack(w[3])};
                if (uniq.size() == 4) continue;
            }
            for (auto& seg : split_walk(w)) {
                Cycle c = canonical_cycle(std::move(seg));
                int64_t sz = enclosed_count(c.ring);
                cands.push_back({std::move(c.ring), sz});
            }
        }
        std::sort(cands.begin(), cands.end(), [](const Cand& a, const Cand& b) {
            if (a.size != b.size) return a.size > b.size;
            return a.ring.front() < b.ring.front();
        });

        // disjoint greedy selection; a block that lost claimed cut vertices
        // survives only if the shrunk remainder is still a valid host
        std::unordered_set<uint64_t> claimed;
        struct Child {
            WorkItem item;
            Point key;
        };
        std::vector<Child> children;
        int64_t child_total = 0;
        for (auto& cand : cands) {
            bool overlap = false;
            for (Point p : cand.ring)
                if (claimed.count(pack(p))) { overlap = true; break; }
            if (!overlap) {
                for (Point p : cand.ring) claimed.insert(pack(p));
                child_total += cand.size;
                Point key = cand.ring.front();
                children.push_back({RingItem{std::move(cand.ring), idx}, key});
                continue;
            }
            std::vector<Point> verts = materialize(cand.ring);
            std::vector<Point> kept;
            kept.reserve(verts.size());
            for (Point p : verts)
                if (!claimed.count(pack(p))) kept.push_back(p);
            bool ok = kept.size() >= 4;
            if (ok) {
                ValidationReport r = validate(GridGraph{kept});
                ok = r.two_connected && r.solid;
            }
            if (!ok) continue;  // dropped: vertices stay free
            for (Point p : cand.ring) claimed.insert(pack(p));
            for (Point p : kept) alive[size_t(g.index_of(p))] = 0;
            child_total += int64_t(kept.size());
            Point key = kept.front();
            children.push_back({SubItem{std::move(kept), idx}, key});
        }

        out.steps.push_back({idx, int64_t(m), host_n, host_n - int64_t(m) - child_total});

        std::sort(children.begin(), children.end(),
                  [](const Child& a, const Child& b) { return a.key < b.key; });
        for (auto it = children.rbegin(); it != children.rend(); ++it)
            work.push_back(std::move(it->item));
    }

    void graft(CycleSet sub, int32_t parent) {
        int32_t off = int32_t(out.cycles.size());
        for (size_t j = 0; j < sub.cycles.size(); ++j) {
            out.cycles.push_back(std::move(sub.cycles[j]));
            out.parent.push_back(sub.parent[j] < 0 ? parent : sub.parent[j] + off);
            out.host_degree.push_back(std::move(sub.host_degree[j]));
            out.host_size.push_back(sub.host_size[j]);
        }
        if (opt.capture_hosts)
            for (auto& h : sub.host_snapshot) out.host_snapshot.push_back(std::move(h));
        for (StepStat st : sub.steps) {
            st.cycle_index += off;
            out.steps.push_back(st);
        }
        for (Point p : sub.free_vertices) out.free_vertices.push_back(p);
    }

    void run() {
        while (!work.empty()) {
            WorkItem item = std::move(work.back());
            work.pop_back();
            if (std::holds_alternative<RingItem>(item)) {
                process_ring(std::move(std::get<RingItem>(item)));
            } else {
                SubItem& s = std::get<SubItem>(item);
                graft(find_cycle_set(GridGraph{s.verts}, opt), s.parent);
            }
        }
        for (int32_t i = 0; i < int32_t(g.size()); ++i)
            if (alive[size_t(i)]) out.free_vertices.push_back(g.point(i));
        std::sort(out.free_vertices.begin(), out.free_vertices.end());
    }
};

} // namespace

CycleSet find_cycle_set(const GridGraph& g, const CycleSetOptions& opt) {
    if (g.size() < 4)
        throw Error(Errc::PreconditionViolated, "cycle set needs >= 4 vertices");
    ValidationReport r = validate(g);
    if (!r.two_connected)
        throw Error(Errc::PreconditionViolated, "cycle set host not 2-connected");
    if (!r.solid)
        throw Error(Errc::PreconditionViolated, "cycle set host not solid");
    Builder b{g, opt};
    b.work.push_back(RingItem{boundary_cycle(g).ring, -1});
    b.run();
    return std::move(b.out);
}

int64_t total_length(const CycleSet& s) {
    int64_t t = 0;
    for (const Cycle& c : s.cycles) t += int64_t(c.ring.size());
    return t;
}

std::string serialize(const CycleSet& s) {
    std::ostringstream os;
    for (size_t i = 0; i < s.cycles.size(); ++i) {
        os << "cycle " << s.parent[i] << ' ' << s.cycles[i].ring.size() << ':';
        for (Point p : s.cycles[i].ring) os << ' ' << p.x << ' ' << p.y;
        os << '\n';
    }
    os << "free:";
    for (Point p : s.free_vertices) os << ' ' << p.x << ' ' << p.y;
    os << '\n';
    return os.str();
}

} // namespace gridcycle
