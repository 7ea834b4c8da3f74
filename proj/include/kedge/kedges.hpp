#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "kedge/drawing.hpp"

namespace kedge {

// H(n), the conjectured crossing number of K_n.
std::int64_t harary_hill(int n);

// binomial coefficient, 0 whenever k < 0 or n < k
std::int64_t binom(std::int64_t n, std::int64_t k);

/// k-values of every edge with respect to every face, computed by 2-colouring
/// the faces along each triangle curve once and accumulating side counts.
struct KTable {
    int n = 0;
    std::vector<std::vector<int>> k;  // [edge index][face id]
};

KTable compute_k_table(const PlanarizedDrawing& d);

// Single k-value of edge {u,v} w.r.t. a reference face; orientation-free.
int k_value(const PlanarizedDrawing& d, Vertex u, Vertex v, int face);

struct KEdgeProfile {
    int n = 0;
    int face = -1;
    int m = 0;  // floor(n/2) - 2
    std::vector<std::int64_t> E, E2, E3;  // k = 0 .. floor(n/2)-1
    std::int64_t cr = 0, H = 0;

    std::int64_t E_at(int k) const { return (k < 0 || k >= (int)E.size()) ? 0 : E[k]; }
    std::int64_t E2_at(int k) const { return (k < 0 || k >= (int)E2.size()) ? 0 : E2[k]; }
    std::int64_t E3_at(int k) const { return (k < 0 || k >= (int)E3.size()) ? 0 : E3[k]; }
};

KEdgeProfile profile(const PlanarizedDrawing& d, int face);
KEdgeProfile profile_from_table(const PlanarizedDrawing& d, const KTable& t, int face);
std::vector<KEdgeProfile> profile_all(const PlanarizedDrawing& d, const KTable& t);

struct Verdict {
    bool ok = true;
    std::string detail;
};

// cr(D) = 2 E3_m - n(n-1)(n-3)/8 (n odd) or E3_m + E3_{m-1} - n(n-1)(n-2)/8
// (n even), exactly, for every face.  Requires n >= 5.
Verdict check_cr_identity(const PlanarizedDrawing& d);

// Sufficient condition for cr(D) >= H(n) from the triple cumulated values.
bool lower_bound_predicate(const KEdgeProfile& p);

// Triple cumulated value of the edges at v: sum of C(k+2-i, 2) over their
// k-values i.  Equals 2 C(k+3,3) when v touches the reference face.
std::int64_t vertex_triple_value(const PlanarizedDrawing& d, Vertex v, int face, int k);
std::int64_t vertex_triple_value_from_table(const PlanarizedDrawing& d, const KTable& t, Vertex v,
                                            int face, int k);

struct InvariantStats {
    Vertex deleted = -1;
    int face = -1;      // reference face in the parent drawing
    int face_sub = -1;  // its image in the subdrawing
    std::vector<std::int64_t> I;     // invariant k-edge counts, k = 0..floor(n/2)-1
    std::vector<std::int64_t> I2bar; // double cumulated

    std::int64_t I_at(int k) const { return (k < 0 || k >= (int)I.size()) ? 0 : I[k]; }
    std::int64_t I2_at(int k) const { return (k < 0 || k >= (int)I2bar.size()) ? 0 : I2bar[k]; }
};

InvariantStats invariant_stats(const PlanarizedDrawing& d, Vertex v, int face);
InvariantStats invariant_stats_from(const PlanarizedDrawing& d, const DeletionTrace& tr,
                                    const KTable& kd, const KTable& ks, int face);

// E3_k(D) = E3_{k-1}(D-v) + E3_k(D,v) + I2bar_k(D,D-v) for all k <= floor(n/2)-2.
Verdict check_recursion(const PlanarizedDrawing& d, Vertex v, int face);

// For u,v both incident to the reference face: the curve made of uv and an
// arc through the face splits the other vertices as {j, n-2-j} where j is the
// k-value of uv.
Verdict side_count_check(const PlanarizedDrawing& d, int face, Vertex u, Vertex v);

// For n odd: I2bar_m(D, D-v) agrees across every face incident to v.
Verdict check_invariant_face_independence(const PlanarizedDrawing& d, Vertex v);

}
