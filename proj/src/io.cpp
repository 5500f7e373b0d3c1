#include "gridcycle/io.hpp"

#include <charconv>
#include <sstream>
#include <unordered_map>
#include <unordered_set>

#include "gridcycle/errors.hpp"

namespace gridcycle {

namespace {

[[noreturn]] void parse_fail(int line, const std::string& what) {
    throw Error(Errc::ParseError, "line " + std::to_string(line) + ": " + what);
}

bool parse_i32(std::string_view tok, int32_t& out) {
    int64_t v = 0;
    auto [p, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
    if (ec != std::errc() || p != tok.data() + tok.size()) return false;
    if (v < INT32_MIN || v > INT32_MAX) return false;
    out = int32_t(v);
    return true;
}

} // namespace

GridGraph parse_instance(const std::string& text) {
    std::vector<Point> pts;
    std::unordered_set<uint64_t> seen;
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (auto h = line.find('#'); h != std::string::npos) line.resize(h);
        std::istringstream ls(line);
        std::string a, b, extra;
        if (!(ls >> a)) continue;  // blank
        if (!(ls >> b)) parse_fail(lineno, "expected two coordinates");
        if (ls >> extra) parse_fail(lineno, "trailing tokens after coordinates");
        Point p;
        if (!parse_i32(a, p.x) || !parse_i32(b, p.y))
            parse_fail(lineno, "coordinates must be 32-bit integers");
        if (!seen.insert(pack(p)).second) parse_fail(lineno, "duplicate point");
        pts.push_back(p);
    }
    if (pts.empty()) throw Error(Errc::ParseError, "instance has no points");
    return GridGraph{std::move(pts)};
}

std::string render_instance(const GridGraph& g) {
    std::ostringstream os;
    for (Point p : g.points()) os << p.x << ' ' << p.y << '\n';
    return os.str();
}

std::string render_cycle(const Cycle& c) {
    std::ostringstream os;
    os << "cycle " << c.ring.size() << '\n';
    for (Point p : c.ring) os << p.x << ' ' << p.y << '\n';
    return os.str();
}

std::string render_svg(const GridGraph& g, const Cycle& c) {
    constexpr int unit = 20, margin = 20;
    int32_t minx = INT32_MAX, miny = INT32_MAX, maxx = INT32_MIN, maxy = INT32_MIN;
    for (Point p : g.points()) {
        minx = std::min(minx, p.x);
        maxx = std::max(maxx, p.x);
        miny = std::min(miny, p.y);
        maxy = std::max(maxy, p.y);
    }
    auto X = [&](int32_t x) { return margin + (x - minx) * unit; };
    auto Y = [&](int32_t y) { return margin + (maxy - y) * unit; };  // origin bottom-left
    int w = 2 * margin + (maxx - minx) * unit, h = 2 * margin + (maxy - miny) * unit;

    std::ostringstream os;
    os << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
    os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << w << "\" height=\"" << h
       << "\" viewBox=\"0 0 " << w << ' ' << h << "\">\n";
    os << "<g id=\"graph\" stroke=\"#999999\" stroke-width=\"2\">\n";
    for (int32_t i = 0; i < int32_t(g.size()); ++i) {
        Point p = g.point(i);
        for (int d = 0; d < 2; ++d) {  // east + north: each edge once
            if (g.neighbor(i, d) < 0) continue;
            Point q = step(p, d);
            os << "<line x1=\"" << X(p.x) << "\" y1=\"" << Y(p.y) << "\" x2=\"" << X(q.x)
               << "\" y2=\"" << Y(q.y) << "\"/>\n";
        }
    }
    for (Point p : g.points())
        os << "<circle cx=\"" << X(p.x) << "\" cy=\"" << Y(p.y)
           << "\" r=\"3\" fill=\"#999999\" stroke=\"none\"/>\n";
    os << "</g>\n";
    os << "<g id=\"cycle\" stroke=\"#d22d2d\" stroke-width=\"4\" stroke-linecap=\"round\">\n";
    size_t n = c.ring.size();
    for (size_t i = 0; i < n; ++i) {
        Point p = c.ring[i], q = c.ring[(i + 1) % n];
        os << "<line x1=\"" << X(p.x) << "\" y1=\"" << Y(p.y) << "\" x2=\"" << X(q.x)
           << "\" y2=\"" << Y(q.y) << "\"/>\n";
    }
    os << "</g>\n</svg>\n";
    return os.str();
}

std::string render_ascii(const GridGraph& g, const Cycle& c) {
    int32_t minx = INT32_MAX, miny = INT32_MAX, maxx = INT32_MIN, maxy = INT32_MIN;
    for (Point p : g.points()) {
        minx = std::min(minx, p.x);
        maxx = std::max(maxx, p.x);
        miny = std::min(miny, p.y);
        maxy = std::max(maxy, p.y);
    }
    size_t n = c.ring.size();
    std::unordered_map<uint64_t, size_t> pos;
    for (size_t i = 0; i < n; ++i) pos.emplace(pack(c.ring[i]), i);
    auto cycle_edge = [&](Point a, Point b) {
        auto ia = pos.find(pack(a)), ib = pos.find(pack(b));
        if (ia == pos.end() || ib == pos.end()) return false;
        size_t d = ia->second > ib->second ? ia->second - ib->second : ib->second - ia->second;
        return d == 1 || d == n - 1;
    };

    std::ostringstream os;
    for (int32_t y = maxy; y >= miny; --y) {
        std::string row, below;
        for (int32_t x = minx; x <= maxx; ++x) {
            Point p{x, y};
            if (!g.contains(p)) {
                row += ' ';
            } else if (pos.count(pack(p))) {
                row += '*';
            } else {
                row += 'o';
            }
            if (x < maxx)
                row += cycle_edge(p, {x + 1, y}) ? '-' : ' ';
            below += cycle_edge(p, {x, y - 1}) ? '|' : ' ';
            if (x < maxx) below += ' ';
        }
        os << row << '\n';
        if (y > miny) os << below << '\n';
    }
    return os.str();
}

} // namespace gridcycle
