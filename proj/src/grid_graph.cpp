#include "gridcycle/grid_graph.hpp"

#include <algorithm>
#include <unordered_set>

#include "gridcycle/errors.hpp"

namespace gridcycle {

GridGraph::GridGraph(std::vector<Point> pts) : pts_(std::move(pts)) {
    std::sort(pts_.begin(), pts_.end());
    index_.reserve(pts_.size() * 2);
    for (size_t i = 0; i < pts_.size(); ++i) {
        if (i > 0 && pts_[i] == pts_[i - 1])
            throw Error(Errc::InvalidParameters, "duplicate vertex in instance");
        index_.emplace(pack(pts_[i]), int32_t(i));
    }
    nbr_.assign(pts_.size() * 4, -1);
    for (size_t i = 0; i < pts_.size(); ++i)
        for (int d = 0; d < 4; ++d)
            nbr_[i * 4 + size_t(d)] = index_of(step(pts_[i], d));
}

GridGraph remove(const GridGraph& g, const std::vector<Point>& s) {
    std::unordered_set<uint64_t> gone;
    gone.reserve(s.size() * 2);
    for (Point p : s) gone.insert(pack(p));
    std::vector<Point> kept;
    kept.reserve(g.size());
    for (Point p : g.points())
        if (!gone.count(pack(p))) kept.push_back(p);
    return GridGraph(std::move(kept));
}

} // namespace gridcycle
