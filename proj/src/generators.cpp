#include "kedge/generators.hpp"

#include <algorithm>
#include <numeric>
#include <random>

#include "kedge/kedges.hpp"

namespace kedge {

namespace {

// point on the unit circle for parameter t, angle strictly increasing in t
Point circle_point(const Rat& t) {
    Rat den = 1 + t * t;
    return Point{(1 - t * t) / den, 2 * t / den};
}

struct EdgeRecordsBuilder {
    // crossing lists under assembly: per edge, (t-or-rank key ordered) records
    struct Rec {
        Rat key;
        int other_edge;
        int sign;
        int pair_id;  // shared by the two records of one crossing
    };
    std::map<int, std::vector<Rec>> recs;

    void add_pair(int e1, const Rat& t1, int e2, const Rat& t2, int sign1, int pair_id) {
        recs[e1].push_back({t1, e2, sign1, pair_id});
        recs[e2].push_back({t2, e1, -sign1, pair_id});
    }

    // sort, resolve mutual indices, write into spec.edges[*].records
    void emit(DrawingSpec& spec, ErrorKind dup_kind, const std::string& dup_msg) {
        std::map<std::pair<int, int>, int> pos;  // (edge, pair_id) -> position
        for (auto& [e, v] : recs) {
            std::stable_sort(v.begin(), v.end(),
                             [](const Rec& a, const Rec& b) { return a.key < b.key; });
            for (std::size_t i = 1; i < v.size(); ++i)
                if (v[i - 1].key == v[i].key) throw Error(dup_kind, dup_msg);
            for (int i = 0; i < static_cast<int>(v.size()); ++i) pos[{e, v[i].pair_id}] = i;
        }
        for (auto& [e, v] : recs) {
            auto& out = spec.edges[e].records;
            for (const auto& r : v)
                out.push_back({spec.edges[r.other_edge].u, spec.edges[r.other_edge].v,
                               pos.at({r.other_edge, r.pair_id}), r.sign});
        }
    }
};

DrawingSpec blank_spec(int n) {
    DrawingSpec spec;
    spec.vertices.resize(n);
    std::iota(spec.vertices.begin(), spec.vertices.end(), 0);
    spec.rotations.resize(n);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) spec.edges.push_back({i, j, {}});
    return spec;
}

}  // namespace

int edge_lex_index(int n, int i, int j) {
    if (i > j) std::swap(i, j);
    return i * n - i * (i + 1) / 2 + (j - i - 1);
}

DrawingSpec from_points(const PointSet& ps) {
    const int n = ps.size();
    if (n < 3) throw Error(ErrorKind::DegeneratePointSet, "need at least 3 points");
    validate_general_position(ps);

    std::vector<std::pair<int, int>> segs;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) segs.push_back({i, j});

    std::vector<std::vector<ChordCrossing>> hits;
    try {
        hits = intersect_segments(ps.pts, segs);
    } catch (const Error& e) {
        if (e.kind() == ErrorKind::DegenerateChords)
            throw Error(ErrorKind::DegeneratePointSet, e.what());
        throw;
    }

    DrawingSpec spec = blank_spec(n);
    for (int e = 0; e < static_cast<int>(segs.size()); ++e) {
        for (const auto& h : hits[e]) {
            int idx_on_other = 0;
            for (const auto& back : hits[h.other]) {
                if (back.other == e) break;
                ++idx_on_other;
            }
            spec.edges[e].records.push_back(
                {segs[h.other].first, segs[h.other].second, idx_on_other, h.sign});
        }
    }
    for (int i = 0; i < n; ++i) {
        std::vector<Point> dirs;
        std::vector<Vertex> who;
        for (int j = 0; j < n; ++j) {
            if (j == i) continue;
            dirs.push_back({ps.pts[j].x - ps.pts[i].x, ps.pts[j].y - ps.pts[i].y});
            who.push_back(j);
        }
        for (int k : sort_ccw(dirs)) spec.rotations[i].push_back(who[k]);
    }
    return spec;
}

DrawingSpec gen_convex(int n) {
    if (n < 3) throw Error(ErrorKind::InvalidSpec, "n must be at least 3");
    PointSet ps;
    for (int i = 1; i <= n; ++i) ps.pts.push_back({Rat(i), Rat(i) * i});
    DrawingSpec spec = from_points(ps);
    spec.meta.generator = "convex";
    return spec;
}

int geometric_outer_face(const PointSet& ps, const PlanarizedDrawing& d) {
    const int n = ps.size();
    int v0 = 0;
    for (int i = 1; i < n; ++i) {
        if (ps.pts[i].x < ps.pts[v0].x ||
            (ps.pts[i].x == ps.pts[v0].x && ps.pts[i].y < ps.pts[v0].y))
            v0 = i;
    }
    // ccw-most direction at the lexicographic minimum: all others strictly right
    // of it, so the reflex outer sector lies left of the dart towards it
    int h = -1;
    for (int j = 0; j < n; ++j) {
        if (j == v0) continue;
        if (h == -1 || orient_sign(ps.pts[v0], ps.pts[h], ps.pts[j]) > 0) h = j;
    }
    return d.face_left_of(v0, h);
}

DrawingSpec gen_random(int n, std::uint64_t seed) {
    PointSet ps = random_point_set(n, seed);
    DrawingSpec spec = from_points(ps);
    spec.meta.generator = "random";
    spec.meta.seed = seed;
    return spec;
}

PointSet random_point_set(int n, std::uint64_t seed) {
    if (n < 3) throw Error(ErrorKind::InvalidSpec, "n must be at least 3");
    std::mt19937_64 rng(seed);
    const std::uint64_t grid = 1u << 20;
    for (int attempt = 0; attempt < 1000; ++attempt) {
        PointSet ps;
        for (int i = 0; i < n; ++i) {
            Rat x(static_cast<long long>(rng() % grid));
            Rat y(static_cast<long long>(rng() % grid));
            ps.pts.push_back({x, y});
        }
        try {
            from_points(ps);  // full degeneracy screen, including concurrences
            return ps;
        } catch (const Error& e) {
            if (e.kind() != ErrorKind::DegeneratePointSet) throw;
        }
    }
    throw Error(ErrorKind::Internal, "random sampling failed to reach general position");
}

std::int64_t count_interleaved_same_page(const PageAssignment& pages) {
    const int n = pages.n;
    std::int64_t cnt = 0;
    for (int i = 0; i < n; ++i)
        for (int k = i + 1; k < n; ++k)
            for (int j = k + 1; j < n; ++j)
                for (int l = j + 1; l < n; ++l)
                    if (pages.top[edge_lex_index(n, i, j)] == pages.top[edge_lex_index(n, k, l)])
                        ++cnt;  // {i,j} x {k,l} with i<k<j<l interleave
    return cnt;
}

DrawingSpec gen_twopage(int n, const PageAssignment& pages) {
    if (n < 3) throw Error(ErrorKind::InvalidSpec, "n must be at least 3");
    if (pages.n != n || static_cast<int>(pages.top.size()) != n * (n - 1) / 2)
        throw Error(ErrorKind::InvalidSpec, "page assignment must cover all edges");

    for (int retry = 0; retry < 64; ++retry) {
        std::vector<Point> pts;
        for (int k = 0; k < n; ++k) pts.push_back(circle_point(Rat(k) + Rat(retry, retry + 1)));

        DrawingSpec spec = blank_spec(n);
        try {
            EdgeRecordsBuilder rb;
            int pair_id = 0;
            for (int page = 0; page < 2; ++page) {
                std::vector<std::pair<int, int>> segs;
                std::vector<int> seg_edge;
                for (int i = 0; i < n; ++i)
                    for (int j = i + 1; j < n; ++j)
                        if (pages.top[edge_lex_index(n, i, j)] == (page == 0)) {
                            segs.push_back({i, j});
                            seg_edge.push_back(edge_lex_index(n, i, j));
                        }
                auto hits = intersect_segments(pts, segs);
                int mirror = (page == 0) ? 1 : -1;  // bottom page is the reflected disk
                for (int s = 0; s < static_cast<int>(segs.size()); ++s)
                    for (const auto& h : hits[s])
                        if (h.other > s)
                            rb.add_pair(seg_edge[s], h.t, seg_edge[h.other],
                                        [&] {
                                            for (const auto& back : hits[h.other])
                                                if (back.other == s) return back.t;
                                            throw Error(ErrorKind::Internal, "missing reciprocal");
                                        }(),
                                        mirror * h.sign, pair_id++);
            }
            rb.emit(spec, ErrorKind::DegenerateChords, "concurrent chords");
        } catch (const Error& e) {
            if (e.kind() == ErrorKind::DegenerateChords) continue;  // re-sample circle points
            throw;
        }

        for (int v = 0; v < n; ++v) {
            std::vector<Vertex> tops, bots;
            for (int delta = 1; delta < n; ++delta) {
                int w = (v + delta) % n;
                (pages.top[edge_lex_index(n, v, w)] ? tops : bots).push_back(w);
            }
            std::reverse(bots.begin(), bots.end());
            auto& rot = spec.rotations[v];
            rot.insert(rot.end(), tops.begin(), tops.end());
            rot.insert(rot.end(), bots.begin(), bots.end());
        }
        spec.meta.generator = "twopage";
        return spec;
    }
    throw Error(ErrorKind::DegenerateChords, "could not find a non-degenerate circle placement");
}

TwoPageSearchResult search_twopage_optimal(int n, std::uint64_t budget, std::uint64_t seed) {
    if (n < 3) throw Error(ErrorKind::InvalidSpec, "n must be at least 3");
    const int m = n * (n - 1) / 2;
    std::vector<std::vector<int>> partners(m);  // interleaving edge pairs
    for (int i = 0; i < n; ++i)
        for (int k = i + 1; k < n; ++k)
            for (int j = k + 1; j < n; ++j)
                for (int l = j + 1; l < n; ++l) {
                    int e = edge_lex_index(n, i, j), f = edge_lex_index(n, k, l);
                    partners[e].push_back(f);
                    partners[f].push_back(e);
                }

    const std::int64_t target = harary_hill(n);
    std::mt19937_64 rng(seed);
    TwoPageSearchResult best;
    best.crossings = -1;

    for (std::uint64_t round = 0; round < std::max<std::uint64_t>(budget, 1); ++round) {
        PageAssignment cur{n, std::vector<std::uint8_t>(m)};
        for (auto& b : cur.top) b = static_cast<std::uint8_t>(rng() & 1);

        std::vector<int> same(m, 0);
        std::int64_t cost = 0;
        for (int e = 0; e < m; ++e)
            for (int f : partners[e])
                if (cur.top[e] == cur.top[f]) {
                    ++same[e];
                    if (f > e) ++cost;
                }
        for (;;) {
            int pick = -1, gain = 0;
            for (int e = 0; e < m; ++e) {
                int g = 2 * same[e] - static_cast<int>(partners[e].size());
                if (g > gain) { gain = g; pick = e; }
            }
            if (pick < 0) break;
            cur.top[pick] ^= 1;
            cost -= gain;
            same[pick] = static_cast<int>(partners[pick].size()) - same[pick];
            for (int f : partners[pick]) same[f] += (cur.top[f] == cur.top[pick]) ? 1 : -1;
        }
        if (best.crossings < 0 || cost < best.crossings) {
            best.crossings = cost;
            best.pages = cur;
        }
        if (best.crossings == target) break;
    }
    best.optimal = (best.crossings == target);
    return best;
}

DrawingSpec gen_cylindrical(int n) {
    if (n < 3) throw Error(ErrorKind::InvalidSpec, "n must be at least 3");
    const int a = (n + 1) / 2;  // outer circle
    const int b = n / 2;        // inner circle; inner vertex k has id a+k

    for (int q : {3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47}) {
        // a uniform inner offset cancels out of crossing-parameter differences,
        // so every vertex gets its own small deterministic perturbation
        const Rat delta(1, static_cast<long long>(a) * b * b * q);
        const Rat delta_out = delta / (7 * q + 2);
        std::vector<Rat> ang(n);
        for (int i = 0; i < a; ++i) ang[i] = Rat(i, a) + (i + 1) * (i + 2) * delta_out;
        for (int k = 0; k < b; ++k) ang[a + k] = Rat(k, b) + (k + 1) * delta;

        // shorter-arc displacement of each annulus edge, outer -> inner
        std::vector<std::vector<Rat>> disp(a, std::vector<Rat>(b));
        for (int i = 0; i < a; ++i)
            for (int k = 0; k < b; ++k) disp[i][k] = wrap_half(ang[a + k] - ang[i]);

        DrawingSpec spec = blank_spec(n);
        try {
            EdgeRecordsBuilder rb;
            int pair_id = 0;

            // annulus x annulus
            for (int i1 = 0; i1 < a; ++i1)
                for (int k1 = 0; k1 < b; ++k1)
                    for (int i2 = i1; i2 < a; ++i2)
                        for (int k2 = 0; k2 < b; ++k2) {
                            if (i2 == i1 && k2 <= k1) continue;
                            if (i1 == i2 || k1 == k2) continue;  // adjacent
                            Rat dd = disp[i1][k1] - disp[i2][k2];
                            if (dd == 0) continue;
                            Rat da = ang[i2] - ang[i1];
                            for (int c = -1; c <= 1; ++c) {
                                Rat t = (da + c) / dd;
                                if (t > 0 && t < 1)
                                    rb.add_pair(edge_lex_index(n, i1, a + k1), t,
                                                edge_lex_index(n, i2, a + k2), t,
                                                dd.sign() > 0 ? 1 : -1, pair_id++);
                            }
                        }

            // the two cliques, drawn convex in their disks; the outer disk is
            // the reflected side of the sphere, so its handedness flips
            for (int side = 0; side < 2; ++side) {
                const int cnt = (side == 0) ? b : a;
                const int off = (side == 0) ? a : 0;
                const int mirror = (side == 0) ? 1 : -1;
                if (cnt < 2) continue;
                std::vector<Point> pts;
                for (int k = 0; k < cnt; ++k)
                    pts.push_back(circle_point(Rat(k) + Rat(q, 3 * q + 1)));
                std::vector<std::pair<int, int>> segs;
                for (int i = 0; i < cnt; ++i)
                    for (int j = i + 1; j < cnt; ++j) segs.push_back({i, j});
                auto hits = intersect_segments(pts, segs);
                for (int s = 0; s < static_cast<int>(segs.size()); ++s)
                    for (const auto& h : hits[s])
                        if (h.other > s) {
                            Rat t2;
                            for (const auto& back : hits[h.other])
                                if (back.other == s) t2 = back.t;
                            rb.add_pair(edge_lex_index(n, off + segs[s].first, off + segs[s].second),
                                        h.t,
                                        edge_lex_index(n, off + segs[h.other].first,
                                                       off + segs[h.other].second),
                                        t2, mirror * h.sign, pair_id++);
                        }
            }
            rb.emit(spec, ErrorKind::ConstructionDegeneracy, "coincident crossings");
        } catch (const Error& e) {
            if (e.kind() == ErrorKind::ConstructionDegeneracy ||
                e.kind() == ErrorKind::DegenerateChords)
                continue;  // perturb the angular offsets
            throw;
        }

        for (int i = 0; i < a; ++i) {
            auto& rot = spec.rotations[i];
            std::vector<int> inner(b);
            std::iota(inner.begin(), inner.end(), 0);
            std::sort(inner.begin(), inner.end(),
                      [&](int x, int y) { return disp[i][x] > disp[i][y]; });
            for (int k : inner) rot.push_back(a + k);
            for (int delta = a - 1; delta >= 1; --delta) rot.push_back((i + delta) % a);
        }
        for (int k = 0; k < b; ++k) {
            auto& rot = spec.rotations[a + k];
            for (int delta = 1; delta < b; ++delta) rot.push_back(a + (k + delta) % b);
            std::vector<int> outer(a);
            std::iota(outer.begin(), outer.end(), 0);
            std::sort(outer.begin(), outer.end(),
                      [&](int x, int y) { return disp[x][k] > disp[y][k]; });
            for (int i : outer) rot.push_back(i);
        }
        spec.meta.generator = "cylindrical";
        return spec;
    }
    throw Error(ErrorKind::ConstructionDegeneracy, "no angular offset avoided coincidences");
}

}
