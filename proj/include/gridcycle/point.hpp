#pragma once
#include <cstdint>
#include <functional>

namespace gridcycle {

struct Point {
    int32_t x = 0;
    int32_t y = 0;

    friend bool operator==(Point a, Point b) { return a.x == b.x && a.y == b.y; }
    friend bool operator!=(Point a, Point b) { return !(a == b); }
    // lexicographic: x first, then y
    friend bool operator<(Point a, Point b) {
        return a.x != b.x ? a.x < b.x : a.y < b.y;
    }
};

inline uint64_t pack(Point p) {
    return (uint64_t(uint32_t(p.x)) << 32) | uint64_t(uint32_t(p.y));
}

struct PointHash {
    size_t operator()(Point p) const {
        uint64_t v = pack(p);
        v ^= v >> 33;
        v *= 0xff51afd7ed558ccdULL;
        v ^= v >> 33;
        return size_t(v);
    }
};

// directions: 0=E 1=N 2=W 3=S, counter-clockwise order
inline constexpr Point DIRS[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};

inline constexpr int rotate_ccw(int d) { return (d + 1) & 3; }
inline constexpr int rotate_cw(int d) { return (d + 3) & 3; }
inline constexpr int reverse_dir(int d) { return (d + 2) & 3; }

inline Point step(Point p, int d) { return {p.x + DIRS[d].x, p.y + DIRS[d].y}; }

// direction index of the unit vector b - a; -1 if not a unit step
inline int dir_of(Point a, Point b) {
    int dx = b.x - a.x, dy = b.y - a.y;
    if (dx == 1 && dy == 0) return 0;
    if (dx == 0 && dy == 1) return 1;
    if (dx == -1 && dy == 0) return 2;
    if (dx == 0 && dy == -1) return 3;
    return -1;
}

} // namespace gridcycle
