#include "doctest.h"

#include <algorithm>

#include "kedge/drawing.hpp"
#include "kedge/generators.hpp"
#include "kedge/kedges.hpp"

using namespace kedge;

namespace {

PointSet parabola(int n) {
    PointSet ps;
    for (int i = 1; i <= n; ++i) ps.pts.push_back({Rat(i), Rat(i) * i});
    return ps;
}

// straight-line oracle: k-value of an edge w.r.t. the outer face is the
// smaller number of points on either side of its supporting line
int rectilinear_k(const PointSet& ps, int a, int b) {
    int left = 0, right = 0;
    for (int w = 0; w < ps.size(); ++w) {
        if (w == a || w == b) continue;
        (orient_sign(ps.pts[a], ps.pts[b], ps.pts[w]) > 0 ? left : right)++;
    }
    return std::min(left, right);
}

// invariant i-edge counts restricted to the edges at w, after deleting v
std::vector<std::int64_t> invariant_at(const PlanarizedDrawing& d, const DeletionTrace& tr,
                                       const KTable& kd, const KTable& ks, int face, Vertex w) {
    std::vector<std::int64_t> cnt(d.n() / 2, 0);
    int face_sub = tr.face_map[face];
    for (Vertex x : tr.sub.labels()) {
        if (x == w) continue;
        int a = kd.k[d.edge_index(w, x)][face];
        int b = ks.k[tr.sub.edge_index(w, x)][face_sub];
        if (a == b) ++cnt[a];
    }
    return cnt;
}

}  // namespace

TEST_CASE("harary_hill formula values") {
    const std::int64_t want[] = {1, 3, 9, 18, 36, 60, 100, 150};
    for (int n = 5; n <= 12; ++n) CHECK(harary_hill(n) == want[n - 5]);
    CHECK(harary_hill(3) == 0);
    CHECK(harary_hill(4) == 0);
    CHECK(harary_hill(13) == 225);
}

TEST_CASE("K_3 has only 0-edges") {
    auto d = PlanarizedDrawing::build(gen_convex(3));
    for (int f = 0; f < d.face_count(); ++f) {
        CHECK(k_value(d, 0, 1, f) == 0);
        auto p = profile(d, f);
        CHECK(p.E == std::vector<std::int64_t>{3});
        CHECK(p.E2 == std::vector<std::int64_t>{3});
        CHECK(p.E3 == std::vector<std::int64_t>{3});
    }
}

TEST_CASE("convex K_5 profile at the outer face") {
    auto ps = parabola(5);
    auto d = PlanarizedDrawing::build(from_points(ps));
    int outer = geometric_outer_face(ps, d);
    CHECK(k_value(d, 0, 1, outer) == 0);  // hull edge
    CHECK(k_value(d, 0, 2, outer) == 1);  // diagonal
    auto p = profile(d, outer);
    CHECK(p.E == std::vector<std::int64_t>{5, 5});
    CHECK(p.E2 == std::vector<std::int64_t>{5, 15});
    CHECK(p.E3 == std::vector<std::int64_t>{5, 20});
    CHECK(p.cr == 5);
    CHECK(p.H == 1);
    CHECK(lower_bound_predicate(p));  // 5 >= 3*C(4,4)
}

TEST_CASE("k-values match the rectilinear oracle") {
    for (std::uint64_t seed : {5ull, 6ull}) {
        for (int n : {5, 6, 7}) {
            auto ps = random_point_set(n, seed);
            auto d = PlanarizedDrawing::build(from_points(ps));
            int outer = geometric_outer_face(ps, d);
            auto t = compute_k_table(d);
            for (int a = 0; a < n; ++a)
                for (int b = a + 1; b < n; ++b)
                    CHECK(t.k[d.edge_index(a, b)][outer] == rectilinear_k(ps, a, b));
        }
    }
}

TEST_CASE("profiles sum to all edges and cumulate consistently") {
    for (auto spec : {gen_convex(6), gen_cylindrical(7), gen_random(6, 17)}) {
        auto d = PlanarizedDrawing::build(spec);
        auto t = compute_k_table(d);
        for (const auto& p : profile_all(d, t)) {
            std::int64_t sum = 0;
            for (auto e : p.E) sum += e;
            CHECK(sum == d.n() * (d.n() - 1) / 2);
            // recompute the cumulations by running sums
            std::int64_t pre = 0;
            std::vector<std::int64_t> e2;
            for (std::size_t k = 0; k < p.E.size(); ++k) {
                pre += p.E[k];
                e2.push_back((k ? e2[k - 1] : 0) + pre);
            }
            CHECK(e2 == p.E2);
            for (std::size_t k = 0; k < p.E.size(); ++k)
                CHECK(p.E3[k] == (k ? p.E3[k - 1] : 0) + p.E2[k]);
        }
    }
}

TEST_CASE("crossing identity holds on every face") {
    for (auto spec : {gen_convex(5), gen_convex(6), gen_cylindrical(7), gen_twopage(6, search_twopage_optimal(6, 100, 3).pages), gen_random(7, 23)}) {
        auto d = PlanarizedDrawing::build(spec);
        CHECK(check_cr_identity(d).ok);
    }
}

TEST_CASE("cylindrical K_7 meets the tight lower bound") {
    auto d = PlanarizedDrawing::build(gen_cylindrical(7));
    auto t = compute_k_table(d);
    for (const auto& p : profile_all(d, t)) {
        CHECK(p.E3_at(1) == 15);  // (9 + 7*6*4/8) / 2
        CHECK(lower_bound_predicate(p));
    }
}

TEST_CASE("synthetic all-zero profile fails the bound") {
    KEdgeProfile p;
    p.n = 5;
    p.m = 0;
    p.E = p.E2 = p.E3 = {0, 0};
    CHECK_FALSE(lower_bound_predicate(p));
}

TEST_CASE("per-vertex triple value closed form at the reference face") {
    auto d = PlanarizedDrawing::build(gen_convex(5));
    auto t = compute_k_table(d);
    for (int f = 0; f < d.face_count(); ++f)
        for (Vertex v : d.face(f).vertices)
            for (int k = 0; k <= d.n() / 2 - 2; ++k)
                CHECK(vertex_triple_value_from_table(d, t, v, f, k) == 2 * binom(k + 3, 3));
    auto d3 = PlanarizedDrawing::build(gen_convex(3));
    CHECK(vertex_triple_value(d3, 0, 0, 0) == 2);
}

TEST_CASE("ccw edge labels at a face vertex have the lemma k-pattern") {
    for (auto spec : {gen_convex(6), gen_cylindrical(7), gen_random(7, 31)}) {
        auto d = PlanarizedDrawing::build(spec);
        auto t = compute_k_table(d);
        const int n = d.n();
        for (int f = 0; f < d.face_count(); ++f)
            for (Vertex v : d.face(f).vertices) {
                // find the rotation slot whose left face is f, label onwards
                auto darts = d.darts_at_node(d.vertex_slot(v));
                int start = -1;
                for (std::size_t i = 0; i < darts.size(); ++i)
                    if (d.dart_face(darts[i]) == f) {
                        CHECK(start == -1);  // v touches f in one sector only
                        start = static_cast<int>(i);
                    }
                REQUIRE(start >= 0);
                for (int i = 0; i + 1 < n; ++i) {
                    int dd = darts[(start + 1 + i) % darts.size()];
                    CHECK(t.k[d.dart_edge(dd)][f] == std::min(i, n - 2 - i));
                }
            }
    }
}

TEST_CASE("invariant stats on convex K_4") {
    auto d = PlanarizedDrawing::build(gen_convex(4));
    auto kd = compute_k_table(d);
    auto tr = delete_vertex(d, 3);
    auto ks = compute_k_table(tr.sub);
    for (int f = 0; f < d.face_count(); ++f) {
        auto st = invariant_stats_from(d, tr, kd, ks, f);
        // all surviving K_3 edges are 0-edges; invariants are those that were
        // 0-edges before
        std::int64_t want = 0;
        for (Vertex x : {0, 1, 2})
            for (Vertex y : {0, 1, 2})
                if (x < y && kd.k[d.edge_index(x, y)][f] == 0) ++want;
        CHECK(st.I_at(0) == want);
        CHECK(st.I_at(1) == 0);
    }
}

TEST_CASE("invariant-edge lemmas at the reference face") {
    for (auto spec : {gen_convex(6), gen_cylindrical(7), gen_random(8, 41)}) {
        auto d = PlanarizedDrawing::build(spec);
        auto kd = compute_k_table(d);
        const int n = d.n();
        for (Vertex v : d.labels()) {
            auto tr = delete_vertex(d, v);
            auto ks = compute_k_table(tr.sub);
            for (int f : d.faces_at(v))
                for (Vertex w : d.face(f).vertices) {
                    if (w == v) continue;
                    auto cnt = invariant_at(d, tr, kd, ks, f, w);
                    std::int64_t total = 0;
                    for (auto c : cnt) total += c;
                    CHECK(total >= n / 2 - 1);
                    for (int k = 0; k <= n / 2 - 2; ++k) {
                        std::int64_t dbl = 0;
                        for (int i = 0; i <= k; ++i) dbl += (k - i + 1) * cnt[i];
                        CHECK(dbl >= binom(k + 2, 2));
                    }
                }
        }
    }
}

TEST_CASE("triple cumulated recursion") {
    for (auto spec : {gen_convex(5), gen_random(7, 57)}) {
        auto d = PlanarizedDrawing::build(spec);
        for (Vertex v : d.labels())
            for (int f = 0; f < d.face_count(); ++f) {
                auto r = check_recursion(d, v, f);
                CHECK(r.ok);
                if (!r.ok) MESSAGE(r.detail);
            }
    }
}

TEST_CASE("side counts at the reference face") {
    auto ps5 = parabola(5);
    auto d5 = PlanarizedDrawing::build(from_points(ps5));
    int outer5 = geometric_outer_face(ps5, d5);
    CHECK(side_count_check(d5, outer5, 0, 1).ok);

    auto ps6 = parabola(6);
    auto d6 = PlanarizedDrawing::build(from_points(ps6));
    int outer6 = geometric_outer_face(ps6, d6);
    CHECK(k_value(d6, 0, 2, outer6) == 1);
    CHECK(side_count_check(d6, outer6, 0, 2).ok);

    auto d3 = PlanarizedDrawing::build(gen_convex(3));
    CHECK(side_count_check(d3, 0, 0, 1).ok);

    // exercise it across a whole drawing
    for (int f = 0; f < d5.face_count(); ++f) {
        const auto& verts = d5.face(f).vertices;
        for (std::size_t i = 0; i < verts.size(); ++i)
            for (std::size_t j = i + 1; j < verts.size(); ++j)
                CHECK(side_count_check(d5, f, verts[i], verts[j]).ok);
    }
}

TEST_CASE("double cumulated invariants agree across faces at a vertex") {
    auto d7 = PlanarizedDrawing::build(gen_cylindrical(7));
    for (Vertex v : d7.labels()) CHECK(check_invariant_face_independence(d7, v).ok);
    auto d9 = PlanarizedDrawing::build(gen_random(9, 71));
    for (Vertex v : d9.labels()) CHECK(check_invariant_face_independence(d9, v).ok);
    // n even: hypothesis excluded, reported as not asserted
    auto d6 = PlanarizedDrawing::build(gen_convex(6));
    auto verdict = check_invariant_face_independence(d6, 0);
    CHECK(verdict.ok);
    CHECK(verdict.detail == "not asserted for n even");
}

TEST_CASE("face invariance of the triple cumulated top values") {
    for (auto spec : {gen_convex(7), gen_convex(8), gen_random(7, 83), gen_random(8, 83)}) {
        auto d = PlanarizedDrawing::build(spec);
        auto t = compute_k_table(d);
        const int m = d.n() / 2 - 2;
        std::int64_t ref = -1;
        for (const auto& p : profile_all(d, t)) {
            std::int64_t val = d.n() % 2 ? p.E3_at(m) : p.E3_at(m) + p.E3_at(m - 1);
            if (ref == -1) ref = val;
            CHECK(val == ref);
        }
    }
}
