#pragma once

#include <utility>
#include <vector>

#include "kedge/rational.hpp"

namespace kedge {

struct Point {
    Rat x, y;
    bool operator==(const Point& o) const { return x == o.x && y == o.y; }
};

/// Exact point set with the general-position invariants required by the
/// rectilinear constructions: distinct points, no three collinear.
struct PointSet {
    std::vector<Point> pts;
    int size() const { return static_cast<int>(pts.size()); }
};

// sign of cross(b-a, c-a): +1 if a,b,c counterclockwise, -1 clockwise, 0 collinear
int orient_sign(const Point& a, const Point& b, const Point& c);

// Throws DegeneratePointSet with a witness triple/pair on violation.
void validate_general_position(const PointSet& ps);

struct ChordCrossing {
    int other;  // index of the other segment
    Rat t;      // parameter along this segment, strictly in (0,1), from its a-end
    int sign;   // +1 iff the other segment crosses from right to left
};

// Pairwise proper intersections of straight segments (given as point-index
// pairs, directed a->b).  Result is parallel to `segs`, each list sorted by t.
// Throws DegenerateChords if two crossings coincide on a segment (concurrent
// chords) or a crossing falls on a segment endpoint shared improperly.
std::vector<std::vector<ChordCrossing>>
intersect_segments(const std::vector<Point>& pts,
                   const std::vector<std::pair<int, int>>& segs);

// Counterclockwise order of direction vectors, starting from the +x axis.
// Ties (equal directions) throw DegeneratePointSet.
std::vector<int> sort_ccw(const std::vector<Point>& dirs);

}
