#pragma once
#include <cstdint>
#include <unordered_map>
#include <vector>

#include "gridcycle/point.hpp"

namespace gridcycle {

// Immutable induced subgraph of the integer lattice. Vertices are lattice
// points; edges exist between every pair of points at distance 1.
class GridGraph {
public:
    GridGraph() = default;
    explicit GridGraph(std::vector<Point> pts);

    size_t size() const { return pts_.size(); }
    bool empty() const { return pts_.empty(); }
    const std::vector<Point>& points() const { return pts_; }
    Point point(int32_t i) const { return pts_[size_t(i)]; }

    bool contains(Point p) const { return index_.count(pack(p)) != 0; }
    // index of p, or -1
    int32_t index_of(Point p) const {
        auto it = index_.find(pack(p));
        return it == index_.end() ? -1 : it->second;
    }
    // neighbor index of vertex i in direction d, or -1
    int32_t neighbor(int32_t i, int d) const { return nbr_[size_t(i) * 4 + size_t(d)]; }
    int degree(int32_t i) const {
        int k = 0;
        for (int d = 0; d < 4; ++d) k += neighbor(i, d) >= 0;
        return k;
    }

private:
    std::vector<Point> pts_;  // sorted lexicographically
    std::unordered_map<uint64_t, int32_t> index_;
    std::vector<int32_t> nbr_;  // 4 entries per vertex
};

// induced subgraph on points() minus the given vertex set
GridGraph remove(const GridGraph& g, const std::vector<Point>& s);

} // namespace gridcycle
