#include "kedge/geometry.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <string>

#include "kedge/error.hpp"

namespace kedge {

int orient_sign(const Point& a, const Point& b, const Point& c) {
    Rat v = (b.x - a.x) * (c.y - a.y) - (b.y - a.y) * (c.x - a.x);
    return v.sign();
}

void validate_general_position(const PointSet& ps) {
    const auto& p = ps.pts;
    const int n = ps.size();
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (p[i] == p[j])
                throw Error(ErrorKind::DegeneratePointSet,
                            "duplicate points " + std::to_string(i) + "," + std::to_string(j));
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            for (int k = j + 1; k < n; ++k)
                if (orient_sign(p[i], p[j], p[k]) == 0)
                    throw Error(ErrorKind::DegeneratePointSet,
                                "collinear triple " + std::to_string(i) + "," +
                                    std::to_string(j) + "," + std::to_string(k));
}

std::vector<std::vector<ChordCrossing>>
intersect_segments(const std::vector<Point>& pts,
                   const std::vector<std::pair<int, int>>& segs) {
    const int m = static_cast<int>(segs.size());
    std::vector<std::vector<ChordCrossing>> out(m);
    for (int i = 0; i < m; ++i) {
        const Point& a = pts[segs[i].first];
        const Point& b = pts[segs[i].second];
        for (int j = i + 1; j < m; ++j) {
            if (segs[i].first == segs[j].first || segs[i].first == segs[j].second ||
                segs[i].second == segs[j].first || segs[i].second == segs[j].second)
                continue;  // adjacent segments share only the endpoint
            const Point& c = pts[segs[j].first];
            const Point& d = pts[segs[j].second];
            int o1 = orient_sign(a, b, c), o2 = orient_sign(a, b, d);
            int o3 = orient_sign(c, d, a), o4 = orient_sign(c, d, b);
            if (o1 * o2 > 0 || o3 * o4 > 0) continue;
            if (o1 == 0 || o2 == 0 || o3 == 0 || o4 == 0)
                throw Error(ErrorKind::DegenerateChords,
                            "segment touches endpoint or overlaps: " + std::to_string(i) +
                                " vs " + std::to_string(j));
            // proper crossing
            Rat denom = (b.x - a.x) * (d.y - c.y) - (b.y - a.y) * (d.x - c.x);
            Rat ti = ((c.x - a.x) * (d.y - c.y) - (c.y - a.y) * (d.x - c.x)) / denom;
            Rat tj = ((c.x - a.x) * (b.y - a.y) - (c.y - a.y) * (b.x - a.x)) / denom;
            int s = denom.sign();  // cross(dir_i, dir_j)
            out[i].push_back({j, ti, s});
            out[j].push_back({i, tj, -s});
        }
    }
    for (int i = 0; i < m; ++i) {
        auto& v = out[i];
        std::sort(v.begin(), v.end(),
                  [](const ChordCrossing& x, const ChordCrossing& y) { return x.t < y.t; });
        for (std::size_t k = 1; k < v.size(); ++k)
            if (v[k - 1].t == v[k].t)
                throw Error(ErrorKind::DegenerateChords,
                            "concurrent crossings on segment " + std::to_string(i));
    }
    return out;
}

namespace {

// half 0: y > 0, or y == 0 and x > 0; half 1: the rest
int dir_half(const Point& d) {
    int sy = d.y.sign();
    if (sy > 0) return 0;
    if (sy == 0 && d.x.sign() > 0) return 0;
    return 1;
}

}  // namespace

std::vector<int> sort_ccw(const std::vector<Point>& dirs) {
    std::vector<int> idx(dirs.size());
    std::iota(idx.begin(), idx.end(), 0);
    std::sort(idx.begin(), idx.end(), [&](int i, int j) {
        int hi = dir_half(dirs[i]), hj = dir_half(dirs[j]);
        if (hi != hj) return hi < hj;
        Rat c = dirs[i].x * dirs[j].y - dirs[i].y * dirs[j].x;
        int s = c.sign();
        if (s == 0)
            throw Error(ErrorKind::DegeneratePointSet, "coincident directions in rotation");
        return s > 0;
    });
    return idx;
}

const char* to_string(ErrorKind k) {
    switch (k) {
        case ErrorKind::InvalidSpec: return "InvalidSpec";
        case ErrorKind::InconsistentCrossings: return "InconsistentCrossings";
        case ErrorKind::NotSphere: return "NotSphere";
        case ErrorKind::GoodnessViolation: return "GoodnessViolation";
        case ErrorKind::UnknownVertex: return "UnknownVertex";
        case ErrorKind::DegenerateTriangle: return "DegenerateTriangle";
        case ErrorKind::DegeneratePointSet: return "DegeneratePointSet";
        case ErrorKind::ConstructionDegeneracy: return "ConstructionDegeneracy";
        case ErrorKind::DegenerateChords: return "DegenerateChords";
        case ErrorKind::MalformedCert: return "MalformedCert";
        case ErrorKind::NotOdd: return "NotOdd";
        case ErrorKind::ParseError: return "ParseError";
        case ErrorKind::Internal: return "Internal";
    }
    return "Error";
}

}
