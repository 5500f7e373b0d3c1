#include <algorithm>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "doctest.h"
#include "gridcycle/cycle.hpp"
#include "gridcycle/generators.hpp"
#include "gridcycle/oracle.hpp"
#include "gridcycle/validate.hpp"
#include "helpers.hpp"

using namespace gridcycle;

// A from-scratch enumeration of the same instance family, sharing no code
// with the library: polyomino growth, set-based floods, string keys. Used
// to cross-check enumerate_instances.
namespace {

using Cell = std::pair<int, int>;
using CellSet = std::set<Cell>;

CellSet normalized(const CellSet& v) {
    int mx = 1 << 30, my = 1 << 30;
    for (const Cell& c : v) {
        mx = std::min(mx, c.first);
        my = std::min(my, c.second);
    }
    CellSet out;
    for (const Cell& c : v) out.insert({c.first - mx, c.second - my});
    return out;
}

std::string set_key(const CellSet& v) {
    std::string s;
    for (const Cell& c : v)
        s += std::to_string(c.first) + "," + std::to_string(c.second) + ";";
    return s;
}

std::string graph_key(const GridGraph& g) {
    CellSet v;
    for (Point p : g.points()) v.insert({p.x, p.y});
    return set_key(normalized(v));
}

bool connected_without(const CellSet& v, const Cell* skip) {
    std::set<Cell> vis;
    std::vector<Cell> st;
    for (const Cell& c : v)
        if (!skip || !(c == *skip)) {
            st.push_back(c);
            vis.insert(c);
            break;
        }
    while (!st.empty()) {
        Cell c = st.back();
        st.pop_back();
        const int dx[] = {1, -1, 0, 0}, dy[] = {0, 0, 1, -1};
        for (int d = 0; d < 4; ++d) {
            Cell q{c.first + dx[d], c.second + dy[d]};
            if (!v.count(q) || (skip && q == *skip) || vis.count(q)) continue;
            vis.insert(q);
            st.push_back(q);
        }
    }
    return vis.size() == v.size() - (skip ? 1 : 0);
}

// 2-connected solid check written against the definitions: remove-one
// connectivity and a complement flood over the padded bounding box
bool indep_valid(const CellSet& v) {
    if (v.size() < 4) return false;
    if (!connected_without(v, nullptr)) return false;
    for (const Cell& c : v)
        if (!connected_without(v, &c)) return false;
    int mx = 0, my = 0;
    for (const Cell& c : v) {
        mx = std::max(mx, c.first);
        my = std::max(my, c.second);
    }
    CellSet outside{{-1, -1}};
    std::vector<Cell> st{{-1, -1}};
    while (!st.empty()) {
        Cell c = st.back();
        st.pop_back();
        const int dx[] = {1, -1, 0, 0}, dy[] = {0, 0, 1, -1};
        for (int d = 0; d < 4; ++d) {
            Cell q{c.first + dx[d], c.second + dy[d]};
            if (q.first < -1 || q.second < -1 || q.first > mx + 1 || q.second > my + 1) continue;
            if (v.count(q) || outside.count(q)) continue;
            outside.insert(q);
            st.push_back(q);
        }
    }
    for (int x = 0; x <= mx; ++x)
        for (int y = 0; y <= my; ++y)
            if (!v.count({x, y}) && !outside.count({x, y})) return false;
    return true;
}

void dual_enumerate(size_t max_n, std::map<size_t, int>& by_n, std::set<std::string>& keys) {
    std::set<std::string> seen;
    std::vector<std::vector<Cell>> cur{{{0, 0}}};
    std::vector<std::vector<Cell>> all = cur;
    seen.insert(set_key({{0, 0}}));
    for (int sz = 2; sz <= 9; ++sz) {
        std::vector<std::vector<Cell>> nxt;
        for (const auto& p : cur) {
            CellSet cs(p.begin(), p.end());
            for (const Cell& c : p) {
                const int dx[] = {1, -1, 0, 0}, dy[] = {0, 0, 1, -1};
                for (int d = 0; d < 4; ++d) {
                    Cell q{c.first + dx[d], c.second + dy[d]};
                    if (cs.count(q)) continue;
                    CellSet grown = cs;
                    grown.insert(q);
                    CellSet nrm = normalized(grown);
                    if (!seen.insert(set_key(nrm)).second) continue;
                    nxt.emplace_back(nrm.begin(), nrm.end());
                }
            }
        }
        all.insert(all.end(), nxt.begin(), nxt.end());
        cur = std::move(nxt);
    }
    std::set<std::string> inst_seen;
    for (const auto& p : all) {
        CellSet vs;
        for (const Cell& c : p) {
            vs.insert(c);
            vs.insert({c.first + 1, c.second});
            vs.insert({c.first, c.second + 1});
            vs.insert({c.first + 1, c.second + 1});
        }
        if (vs.size() > max_n) continue;
        CellSet v = normalized(vs);
        if (!inst_seen.insert(set_key(v)).second) continue;
        if (!indep_valid(v)) continue;
        by_n[v.size()]++;
        keys.insert(set_key(v));
    }
}

} // namespace

TEST_CASE("exact optima on rectangles") {
    auto opt = [](const GridGraph& g) {
        OracleResult r = longest_cycle_exact(g);
        REQUIRE(r.optimum_length >= 4);
        validate_cycle(g, r.witness.ring);
        CHECK(int64_t(r.witness.length()) == r.optimum_length);
        CHECK(r.explored_nodes > 0);
        return r.optimum_length;
    };
    CHECK(opt(testutil::rect(2, 2)) == 4);
    CHECK(opt(testutil::rect(3, 3)) == 8);
    CHECK(opt(testutil::rect(4, 4)) == 16);
    CHECK(opt(testutil::rect(5, 5)) == 24);
    CHECK(opt(testutil::rect(6, 6)) == 36);
    CHECK(opt(testutil::rect(4, 5)) == 20);
}

TEST_CASE("exact optima on staircase diamonds") {
    auto opt = [](const GridGraph& g) {
        OracleResult r = longest_cycle_exact(g);
        validate_cycle(g, r.witness.ring);
        CHECK(int64_t(r.witness.length()) == r.optimum_length);
        return r.optimum_length;
    };
    CHECK(opt(generate(StaircaseDiamond{1})) == 4);
    CHECK(opt(generate(StaircaseDiamond{2})) == 12);
    // 13/11 two-coloring caps the cycle at 22 of the 24 vertices
    CHECK(opt(generate(StaircaseDiamond{3})) == 22);
}

TEST_CASE("oracle edge cases") {
    GridGraph path{{{0, 0}, {1, 0}, {2, 0}}};
    OracleResult r = longest_cycle_exact(path);
    CHECK(r.optimum_length == 0);
    CHECK(r.witness.ring.empty());

    CHECK_ERRC(longest_cycle_exact(generate(StaircaseDiamond{3}), 50), BudgetExceeded);

    std::vector<Point> big;
    for (int x = 0; x < 9; ++x)
        for (int y = 0; y < 9; ++y) big.push_back({x, y});
    CHECK_ERRC(longest_cycle_exact(GridGraph{big}), InvalidParameters);
}

TEST_CASE("instance enumeration inventory") {
    std::map<size_t, int> by_n;
    std::set<std::string> keys;
    int total = 0;
    enumerate_instances(12, [&](const GridGraph& g) {
        ++total;
        REQUIRE(g.size() <= 12);
        ValidationReport rep = validate(g);
        CHECK(rep.connected);
        CHECK(rep.two_connected);
        CHECK(rep.solid);
        int mx = 1 << 30, my = 1 << 30;
        for (Point p : g.points()) {
            mx = std::min(mx, p.x);
            my = std::min(my, p.y);
        }
        CHECK(mx == 0);
        CHECK(my == 0);
        by_n[g.size()]++;
        CHECK(keys.insert(graph_key(g)).second);  // no duplicates
    });
    CHECK(total == 89);
    std::map<size_t, int> expected{{4, 1}, {6, 2}, {8, 6}, {9, 1}, {10, 18}, {11, 8}, {12, 53}};
    CHECK(by_n == expected);

    // the three smallest: unit square and the two dominoes
    std::set<std::string> small;
    enumerate_instances(6, [&](const GridGraph& g) { small.insert(graph_key(g)); });
    std::set<std::string> want{
        set_key({{0, 0}, {1, 0}, {0, 1}, {1, 1}}),
        set_key({{0, 0}, {1, 0}, {2, 0}, {0, 1}, {1, 1}, {2, 1}}),
        set_key({{0, 0}, {1, 0}, {0, 1}, {1, 1}, {0, 2}, {1, 2}}),
    };
    CHECK(small == want);
}

TEST_CASE("enumeration matches an independent construction") {
    std::set<std::string> lib_keys;
    enumerate_instances(12, [&](const GridGraph& g) { lib_keys.insert(graph_key(g)); });

    std::map<size_t, int> dual_by_n;
    std::set<std::string> dual_keys;
    dual_enumerate(12, dual_by_n, dual_keys);

    CHECK(dual_keys == lib_keys);
    std::map<size_t, int> expected{{4, 1}, {6, 2}, {8, 6}, {9, 1}, {10, 18}, {11, 8}, {12, 53}};
    CHECK(dual_by_n == expected);
}

TEST_CASE("window subsets recover every small instance") {
    // brute force over all vertex subsets of a 4x4 window: every valid
    // instance on at most 8 vertices fits in it up to translation
    std::set<std::string> subset_keys;
    std::map<size_t, int> by_n;
    for (uint32_t mask = 0; mask < (1u << 16); ++mask) {
        if (__builtin_popcount(mask) < 4 || __builtin_popcount(mask) > 8) continue;
        CellSet v;
        for (int i = 0; i < 16; ++i)
            if (mask & (1u << i)) v.insert({i % 4, i / 4});
        if (!indep_valid(v)) continue;
        if (subset_keys.insert(set_key(normalized(v))).second) by_n[v.size()]++;
    }
    std::map<size_t, int> expected{{4, 1}, {6, 2}, {8, 6}};
    CHECK(by_n == expected);

    std::set<std::string> lib_keys;
    enumerate_instances(8, [&](const GridGraph& g) { lib_keys.insert(graph_key(g)); });
    CHECK(subset_keys == lib_keys);
}
