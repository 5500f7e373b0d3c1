#pragma once
#include <set>
#include <vector>

#include "gridcycle/errors.hpp"
#include "gridcycle/grid_graph.hpp"

namespace testutil {

// vertex set covered by the given unit cells (cell = its lower-left corner)
inline gridcycle::GridGraph from_cells(const std::vector<gridcycle::Point>& cells) {
    std::set<gridcycle::Point> vs;
    for (gridcycle::Point c : cells) {
        vs.insert({c.x, c.y});
        vs.insert({c.x + 1, c.y});
        vs.insert({c.x, c.y + 1});
        vs.insert({c.x + 1, c.y + 1});
    }
    return gridcycle::GridGraph{{vs.begin(), vs.end()}};
}

inline gridcycle::GridGraph rect(int m, int k) {
    std::vector<gridcycle::Point> pts;
    for (int x = 0; x < m; ++x)
        for (int y = 0; y < k; ++y) pts.push_back({x, y});
    return gridcycle::GridGraph{std::move(pts)};
}

} // namespace testutil

// expects `expr` to throw gridcycle::Error with the given code
#define CHECK_ERRC(expr, code_)                                      \
    do {                                                             \
        bool caught_ = false;                                        \
        try {                                                        \
            (void)(expr);                                            \
        } catch (const gridcycle::Error& e_) {                       \
            caught_ = true;                                          \
            CHECK(e_.code() == gridcycle::Errc::code_);              \
        }                                                            \
        CHECK_MESSAGE(caught_, "expected " #code_ " from " #expr);   \
    } while (0)
