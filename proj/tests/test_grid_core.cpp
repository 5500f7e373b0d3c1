#include <algorithm>
#include <map>
#include <set>
#include <vector>

#include "doctest.h"
#include "gridcycle/boundary.hpp"
#include "gridcycle/cycle.hpp"
#include "gridcycle/errors.hpp"
#include "gridcycle/generators.hpp"
#include "gridcycle/validate.hpp"
#include "helpers.hpp"

using namespace gridcycle;
using testutil::from_cells;
using testutil::rect;

TEST_CASE("grid graph basics") {
    GridGraph g = rect(3, 2);
    CHECK(g.size() == 6);
    CHECK(g.contains({2, 1}));
    CHECK(!g.contains({3, 0}));
    CHECK(g.points().front() == Point{0, 0});
    CHECK(std::is_sorted(g.points().begin(), g.points().end()));
    int32_t i = g.index_of({1, 0});
    REQUIRE(i >= 0);
    CHECK(g.degree(i) == 3);
    CHECK(g.neighbor(i, 1) == g.index_of({1, 1}));
    CHECK(g.neighbor(g.index_of({0, 0}), 2) == -1);
    CHECK_ERRC(GridGraph({{0, 0}, {0, 0}}), InvalidParameters);
}

TEST_CASE("remove builds the induced complement") {
    GridGraph g = rect(3, 3);
    GridGraph inner = remove(g, boundary_walk(g).ring);
    CHECK(inner.size() == 1);
    CHECK(inner.contains({1, 1}));
    GridGraph same = remove(g, {{100, 100}});
    CHECK(same.points() == g.points());
}

TEST_CASE("boundary walk of small shapes") {
    CHECK(boundary_walk(GridGraph{{{5, 7}}}).ring == std::vector<Point>{{5, 7}});
    CHECK(boundary_walk(GridGraph{{{5, 7}}}).length() == 0);

    ClosedWalk domino = boundary_walk(GridGraph{{{0, 0}, {0, 1}}});
    CHECK(domino.length() == 2);

    std::vector<Point> square{{0, 0}, {1, 0}, {1, 1}, {0, 1}};
    CHECK(boundary_walk(GridGraph{square}).ring == square);

    std::vector<Point> ring8{{0, 0}, {1, 0}, {2, 0}, {2, 1}, {2, 2}, {1, 2}, {0, 2}, {0, 1}};
    CHECK(boundary_walk(rect(3, 3)).ring == ring8);
}

TEST_CASE("boundary walk starts lex-min with +x step and positive area") {
    for (const GridGraph& g : {rect(4, 3), generate(StaircaseDiamond{3}),
                               from_cells({{0, 0}, {1, 0}, {0, 1}})}) {
        ClosedWalk w = boundary_walk(g);
        CHECK(w.ring.front() == g.points().front());
        CHECK(w.ring[1] == Point{w.ring[0].x + 1, w.ring[0].y});
        CHECK(ring_area2(w.ring) > 0);
        Cycle c = canonical_cycle(w.ring);
        CHECK(c.ring == w.ring);  // already canonical
    }
}

TEST_CASE("walk repeats cut vertices once per extra block") {
    // two unit squares sharing the corner (1,1)
    GridGraph g = from_cells({{0, 0}, {1, 1}});
    ClosedWalk w = boundary_walk(g);
    CHECK(w.length() == 8);
    int seen = int(std::count(w.ring.begin(), w.ring.end(), Point{1, 1}));
    CHECK(seen == 2);
    CHECK_ERRC(boundary_cycle(g), NotTwoConnected);
}

TEST_CASE("boundary cycle errors") {
    CHECK_ERRC(boundary_walk(GridGraph{}), EmptyGraph);
    CHECK_ERRC(boundary_cycle(GridGraph{{{0, 0}, {0, 1}}}), NoCycle);
}

TEST_CASE("classification on the L shape") {
    GridGraph g = from_cells({{0, 0}, {1, 0}, {0, 1}});
    Cycle c = boundary_cycle(g);
    std::vector<Point> want{{0, 0}, {1, 0}, {2, 0}, {2, 1}, {1, 1}, {1, 2}, {0, 2}, {0, 1}};
    CHECK(c.ring == want);
    std::map<BoundaryClass, std::vector<Point>> by;
    for (Point v : c.ring) by[classify(g, c, v)].push_back(v);
    CHECK(by[BoundaryClass::Concave] == std::vector<Point>{{1, 1}});
    CHECK(by[BoundaryClass::Flat].size() == 2);
    CHECK(by[BoundaryClass::Convex].size() == 5);
    CHECK_ERRC(classify(g, c, {9, 9}), VertexNotOnCycle);
}

TEST_CASE("convex count equals concave count plus four") {
    for (const GridGraph& g :
         {rect(2, 2), rect(5, 4), rect(6, 6), generate(StaircaseDiamond{3}),
          generate(StaircaseDiamond{4}), generate(NestedDiamonds{2}),
          from_cells({{0, 0}, {1, 0}, {0, 1}}),
          from_cells({{0, 0}, {1, 0}, {2, 0}, {2, 1}, {2, 2}})}) {
        Cycle c = boundary_cycle(g);
        int cv = 0, cc = 0;
        for (Point v : c.ring) {
            BoundaryClass b = classify(g, c, v);
            cv += b == BoundaryClass::Convex;
            cc += b == BoundaryClass::Concave;
        }
        CHECK(cv == cc + 4);
    }
}

TEST_CASE("validation report") {
    ValidationReport r = validate(rect(3, 3));
    CHECK(r.connected);
    CHECK(r.two_connected);
    CHECK(r.solid);

    // 3x3 minus the center: a non-unit bounded face
    std::vector<Point> donut{{0, 0}, {1, 0}, {2, 0}, {2, 1}, {2, 2}, {1, 2}, {0, 2}, {0, 1}};
    r = validate(GridGraph{donut});
    CHECK(r.connected);
    CHECK(r.two_connected);
    CHECK(!r.solid);

    // path: connected but a cut vertex everywhere
    r = validate(GridGraph{{{0, 0}, {1, 0}, {2, 0}}});
    CHECK(r.connected);
    CHECK(!r.two_connected);
    CHECK(r.solid);

    // square with a tail: solid but not 2-connected
    r = validate(GridGraph{{{0, 0}, {1, 0}, {1, 1}, {0, 1}, {2, 0}}});
    CHECK(r.connected);
    CHECK(!r.two_connected);
    CHECK(r.solid);

    // two far-apart squares: disconnected, still solid
    r = validate(GridGraph{
        {{0, 0}, {1, 0}, {1, 1}, {0, 1}, {5, 5}, {6, 5}, {6, 6}, {5, 6}}});
    CHECK(!r.connected);
    CHECK(!r.two_connected);
    CHECK(r.solid);

    CHECK_ERRC(validate(GridGraph{}), EmptyGraph);
}

TEST_CASE("block decomposition of a square with a tail") {
    GridGraph g{{{0, 0}, {1, 0}, {1, 1}, {0, 1}, {2, 0}}};
    BlockDecomposition d = blocks(g);
    REQUIRE(d.blocks.size() == 1);
    CHECK(d.blocks[0] == std::vector<Point>{{0, 0}, {0, 1}, {1, 0}, {1, 1}});
    CHECK(d.cut_vertices == std::vector<Point>{{1, 0}});
    REQUIRE(d.selection.size() == 1);
    CHECK(d.selection[0] == d.blocks[0]);
    CHECK(d.outside_vertices == std::vector<Point>{{2, 0}});
}

TEST_CASE("blocks sharing a cut vertex: second one shrinks away") {
    GridGraph g = from_cells({{0, 0}, {1, 1}});
    BlockDecomposition d = blocks(g);
    REQUIRE(d.blocks.size() == 2);
    CHECK(d.blocks[0].size() == 4);
    CHECK(d.blocks[1].size() == 4);
    CHECK(d.cut_vertices == std::vector<Point>{{1, 1}});
    // both 4-blocks contain the cut vertex; after the first is claimed the
    // second shrinks below the validity threshold and is discarded
    REQUIRE(d.selection.size() == 1);
    CHECK(d.selection[0] == std::vector<Point>{{0, 0}, {0, 1}, {1, 0}, {1, 1}});
    CHECK(d.outside_vertices == std::vector<Point>{{1, 2}, {2, 1}, {2, 2}});
}

TEST_CASE("largest biconnected block") {
    // 2x4 block plus an isolated vertex
    std::vector<Point> pts;
    for (int x = 0; x < 4; ++x)
        for (int y = 0; y < 2; ++y) pts.push_back({x, y});
    pts.push_back({0, 3});
    GridGraph h = largest_biconnected(GridGraph{pts});
    CHECK(h.size() == 8);
    CHECK(!h.contains({0, 3}));
    CHECK(validate(h).two_connected);

    CHECK_ERRC(largest_biconnected(GridGraph{{{0, 0}, {1, 0}, {2, 0}}}), NoCycle);
    CHECK_ERRC(largest_biconnected(GridGraph{}), EmptyGraph);
}

TEST_CASE("interior walk is shorter than the boundary by at least eight") {
    auto interior_walk_len = [](const GridGraph& g) -> long {
        GridGraph in = remove(g, boundary_cycle(g).ring);
        if (in.empty()) return -1;
        if (!validate(in).connected) return -1;
        return long(boundary_walk(in).length());
    };
    for (const GridGraph& g : {rect(3, 3), rect(5, 5), rect(6, 6), rect(4, 7),
                               generate(StaircaseDiamond{3}), generate(StaircaseDiamond{4}),
                               generate(NestedDiamonds{2}), generate(NestedDiamonds{3})}) {
        long w = interior_walk_len(g);
        REQUIRE(w >= 0);  // fixtures chosen with nonempty connected interior
        CHECK(long(boundary_cycle(g).length()) >= w + 8);
    }
}

TEST_CASE("cycle utilities") {
    std::vector<Point> sq{{0, 0}, {1, 0}, {1, 1}, {0, 1}};
    CHECK(ring_area2(sq) == 2);
    CHECK(enclosed_count(sq) == 4);
    std::vector<Point> rev{{0, 0}, {0, 1}, {1, 1}, {1, 0}};
    CHECK(ring_area2(rev) == -2);
    CHECK(canonical_cycle(rev).ring == sq);
    std::vector<Point> rot{{1, 1}, {0, 1}, {0, 0}, {1, 0}};
    CHECK(canonical_cycle(rot).ring == sq);
    CHECK(enclosed_count(boundary_cycle(rect(5, 5)).ring) == 25);

    GridGraph g = rect(2, 2);
    validate_cycle(g, sq);  // must not throw
    CHECK_ERRC(validate_cycle(g, {{0, 0}, {1, 0}, {1, 1}}), PreconditionViolated);
    CHECK_ERRC(validate_cycle(g, {{0, 0}, {1, 0}, {1, 1}, {0, 2}}), PreconditionViolated);
    CHECK_ERRC(validate_cycle(rect(3, 1), {{0, 0}, {1, 0}, {1, 1}, {0, 1}}),
               PreconditionViolated);
}
