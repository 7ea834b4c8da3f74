#pragma once

#include <cstdint>

#include "kedge/drawing.hpp"
#include "kedge/geometry.hpp"

namespace kedge {

/// Drawing from exact points: straight segments, crossings ordered by the
/// rational parameter along each edge, rotations by exact angular sort.
DrawingSpec from_points(const PointSet& ps);

// Convex-position drawing on the parabola (i, i^2), i = 1..n.
DrawingSpec gen_convex(int n);

// Hill-style cylindrical drawing: two concentric circles, cliques drawn
// convex in the two disks, annulus edges linear in (radius, angle) along the
// shorter arc.  Crossing count equals the Harary-Hill bound.
DrawingSpec gen_cylindrical(int n);

struct PageAssignment {
    int n = 0;
    std::vector<std::uint8_t> top;  // lex edge order; 1 = top page
    bool operator==(const PageAssignment&) const = default;
};

int edge_lex_index(int n, int i, int j);

// Spine on a circle (rational concyclic points); top-page edges as chords in
// one disk, bottom-page edges in the complementary disk.
DrawingSpec gen_twopage(int n, const PageAssignment& pages);

// Same-page interleaved pairs; equals the crossing count of gen_twopage.
std::int64_t count_interleaved_same_page(const PageAssignment& pages);

struct TwoPageSearchResult {
    PageAssignment pages;
    std::int64_t crossings = 0;
    bool optimal = false;  // false means the restart budget ran out first
};

// Steepest-descent page flips with random restarts; stops once the
// Harary-Hill value is reached or `budget` restarts are exhausted.
TwoPageSearchResult search_twopage_optimal(int n, std::uint64_t budget, std::uint64_t seed);

// Rejection-sampled integer grid points in general position; deterministic
// for a fixed seed.
DrawingSpec gen_random(int n, std::uint64_t seed);
PointSet random_point_set(int n, std::uint64_t seed);

// The unbounded face of the straight-line drawing of ps.
int geometric_outer_face(const PointSet& ps, const PlanarizedDrawing& d);

}
