#include "kedge/drawing.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace kedge {

bool operator==(const CrossingRecord& a, const CrossingRecord& b) {
    return a.other_u == b.other_u && a.other_v == b.other_v &&
           a.index_on_other == b.index_on_other && a.sign == b.sign;
}

bool operator==(const EdgeCrossings& a, const EdgeCrossings& b) {
    return a.u == b.u && a.v == b.v && a.records == b.records;
}

bool DrawingSpec::operator==(const DrawingSpec& o) const {
    return vertices == o.vertices && rotations == o.rotations && edges == o.edges && meta == o.meta;
}

namespace {

struct Dsu {
    std::vector<int> p;
    explicit Dsu(int n) : p(n) { std::iota(p.begin(), p.end(), 0); }
    int find(int x) {
        while (p[x] != x) x = p[x] = p[p[x]];
        return x;
    }
    void unite(int a, int b) {
        a = find(a);
        b = find(b);
        if (a != b) p[std::max(a, b)] = std::min(a, b);
    }
};

std::string edge_name(Vertex u, Vertex v) {
    return "{" + std::to_string(u) + "," + std::to_string(v) + "}";
}

void check_spec_structure(const DrawingSpec& spec) {
    const int n = spec.n();
    if (n < 2 || n > 64)
        throw Error(ErrorKind::InvalidSpec, "vertex count out of range: " + std::to_string(n));
    for (int i = 1; i < n; ++i)
        if (spec.vertices[i - 1] >= spec.vertices[i])
            throw Error(ErrorKind::InvalidSpec, "vertex labels not sorted/distinct");
    if (static_cast<int>(spec.rotations.size()) != n)
        throw Error(ErrorKind::InvalidSpec, "rotation count mismatch");
    for (int i = 0; i < n; ++i) {
        std::vector<Vertex> others(spec.vertices);
        others.erase(others.begin() + i);
        std::vector<Vertex> rot = spec.rotations[i];
        std::sort(rot.begin(), rot.end());
        if (rot != others)
            throw Error(ErrorKind::InvalidSpec,
                        "rotation at vertex " + std::to_string(spec.vertices[i]) +
                            " is not a permutation of the other vertices");
    }
    const std::size_t want = static_cast<std::size_t>(n) * (n - 1) / 2;
    if (spec.edges.size() != want)
        throw Error(ErrorKind::InvalidSpec, "edge list does not cover all pairs");
    std::size_t at = 0;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j, ++at) {
            const auto& e = spec.edges[at];
            if (e.u != spec.vertices[i] || e.v != spec.vertices[j])
                throw Error(ErrorKind::InvalidSpec, "edges not lex sorted over all pairs");
        }
}

}  // namespace

GoodnessReport check_goodness(const DrawingSpec& spec) {
    check_spec_structure(spec);
    std::map<std::pair<Vertex, Vertex>, int> idx;
    for (int e = 0; e < static_cast<int>(spec.edges.size()); ++e)
        idx[{spec.edges[e].u, spec.edges[e].v}] = e;

    GoodnessReport rep;
    auto fail = [&](const std::string& what, const EdgeCrossings& e, Vertex fu, Vertex fv) {
        rep.ok = false;
        rep.what = what;
        rep.eu = e.u;
        rep.ev = e.v;
        rep.fu = fu;
        rep.fv = fv;
        return rep;
    };

    for (const auto& e : spec.edges) {
        std::set<std::pair<Vertex, Vertex>> seen;
        for (int p = 0; p < static_cast<int>(e.records.size()); ++p) {
            const auto& r = e.records[p];
            if (r.other_u >= r.other_v || !idx.count({r.other_u, r.other_v}))
                return fail("crossing references unknown edge " + edge_name(r.other_u, r.other_v),
                            e, r.other_u, r.other_v);
            if (r.sign != 1 && r.sign != -1)
                return fail("crossing sign must be +1 or -1", e, r.other_u, r.other_v);
            if (r.other_u == e.u || r.other_u == e.v || r.other_v == e.u || r.other_v == e.v)
                return fail("adjacent edges cross", e, r.other_u, r.other_v);
            if (!seen.insert({r.other_u, r.other_v}).second)
                return fail("edge pair crosses more than once", e, r.other_u, r.other_v);
            const auto& f = spec.edges[idx.at({r.other_u, r.other_v})];
            if (r.index_on_other < 0 || r.index_on_other >= static_cast<int>(f.records.size()))
                return fail("crossing index out of range on partner", e, f.u, f.v);
            const auto& back = f.records[r.index_on_other];
            if (back.other_u != e.u || back.other_v != e.v || back.index_on_other != p ||
                back.sign != -r.sign)
                return fail("inconsistent mutual crossing records", e, f.u, f.v);
        }
    }
    return rep;
}

PlanarizedDrawing PlanarizedDrawing::build(const DrawingSpec& spec) {
    GoodnessReport rep = check_goodness(spec);
    if (!rep.ok) {
        ErrorKind kind = rep.what == "inconsistent mutual crossing records"
                             ? ErrorKind::InconsistentCrossings
                             : ErrorKind::GoodnessViolation;
        throw Error(kind, rep.what + " (" + edge_name(rep.eu, rep.ev) + " vs " +
                              edge_name(rep.fu, rep.fv) + ")");
    }

    PlanarizedDrawing d;
    d.spec_ = spec;
    d.labels_ = spec.vertices;
    const int n = d.n();

    for (int e = 0; e < static_cast<int>(spec.edges.size()); ++e)
        d.edge_idx_[{spec.edges[e].u, spec.edges[e].v}] = e;

    // crossing nodes, one per unordered edge pair that crosses
    std::map<std::pair<int, int>, int> xn;  // (e1,e2) with e1<e2 -> node id
    for (int e = 0; e < static_cast<int>(spec.edges.size()); ++e)
        for (int p = 0; p < static_cast<int>(spec.edges[e].records.size()); ++p) {
            const auto& r = spec.edges[e].records[p];
            int f = d.edge_idx_.at({r.other_u, r.other_v});
            if (e < f) {
                int id = n + static_cast<int>(d.crossings_.size());
                d.crossings_.push_back({e, f, p, r.index_on_other, r.sign});
                xn[{e, f}] = id;
            }
        }

    // edge paths and dart layout
    int base = 0;
    for (int e = 0; e < static_cast<int>(spec.edges.size()); ++e) {
        const auto& ec = spec.edges[e];
        EdgeInfo info;
        info.u = ec.u;
        info.v = ec.v;
        info.base_dart = base;
        info.nseg = static_cast<int>(ec.records.size()) + 1;
        for (const auto& r : ec.records) {
            int f = d.edge_idx_.at({r.other_u, r.other_v});
            info.xnodes.push_back(xn.at({std::min(e, f), std::max(e, f)}));
        }
        base += 2 * info.nseg;
        d.edges_.push_back(std::move(info));
    }
    const int ndarts = base;
    d.dart_origin_.assign(ndarts, -1);
    d.dart_edge_.assign(ndarts, -1);
    d.sigma_.assign(ndarts, -1);

    auto vslot = [&](Vertex v) {
        return static_cast<int>(std::lower_bound(d.labels_.begin(), d.labels_.end(), v) -
                                d.labels_.begin());
    };
    for (int e = 0; e < static_cast<int>(d.edges_.size()); ++e) {
        const auto& info = d.edges_[e];
        for (int s = 0; s < info.nseg; ++s) {
            int fwd = info.base_dart + 2 * s;
            d.dart_edge_[fwd] = d.dart_edge_[fwd + 1] = e;
            d.dart_origin_[fwd] = (s == 0) ? vslot(info.u) : info.xnodes[s - 1];
            d.dart_origin_[fwd + 1] = (s == info.nseg - 1) ? vslot(info.v) : info.xnodes[s];
        }
    }

    // sigma at real vertices follows the prescribed rotation
    for (int i = 0; i < n; ++i) {
        const Vertex v = spec.vertices[i];
        const auto& rot = spec.rotations[i];
        std::vector<int> darts;
        darts.reserve(rot.size());
        for (Vertex w : rot) {
            int e = d.edge_idx_.at({std::min(v, w), std::max(v, w)});
            const auto& info = d.edges_[e];
            darts.push_back(v < w ? info.base_dart : info.base_dart + 2 * (info.nseg - 1) + 1);
        }
        for (std::size_t j = 0; j < darts.size(); ++j)
            d.sigma_[darts[j]] = darts[(j + 1) % darts.size()];
    }

    // sigma at crossing nodes per the stored handedness
    for (int c = 0; c < static_cast<int>(d.crossings_.size()); ++c) {
        const auto& x = d.crossings_[c];
        const auto& a = d.edges_[x.e1];
        const auto& b = d.edges_[x.e2];
        int af = a.base_dart + 2 * (x.pos1 + 1);      // onwards along e1
        int ab = a.base_dart + 2 * x.pos1 + 1;        // back along e1
        int bf = b.base_dart + 2 * (x.pos2 + 1);
        int bb = b.base_dart + 2 * x.pos2 + 1;
        if (x.sign == 1) {
            d.sigma_[af] = bf; d.sigma_[bf] = ab; d.sigma_[ab] = bb; d.sigma_[bb] = af;
        } else {
            d.sigma_[af] = bb; d.sigma_[bb] = ab; d.sigma_[ab] = bf; d.sigma_[bf] = af;
        }
    }

    // face tracing: next dart of the face left of d is sigma^-1(twin(d))
    std::vector<int> sigma_inv(ndarts, -1);
    for (int dd = 0; dd < ndarts; ++dd) {
        KEDGE_ASSERT(d.sigma_[dd] >= 0, "sigma not total");
        sigma_inv[d.sigma_[dd]] = dd;
    }
    d.dart_face_.assign(ndarts, -1);
    for (int start = 0; start < ndarts; ++start) {
        if (d.dart_face_[start] != -1) continue;
        Face f;
        f.id = static_cast<int>(d.faces_.size());
        f.min_dart = start;
        int cur = start;
        do {
            d.dart_face_[cur] = f.id;
            f.orbit.push_back(cur);
            cur = sigma_inv[cur ^ 1];
        } while (cur != start);
        for (int dd : f.orbit)
            if (d.dart_origin_[dd] < n) f.vertices.push_back(d.labels_[d.dart_origin_[dd]]);
        std::sort(f.vertices.begin(), f.vertices.end());
        f.vertices.erase(std::unique(f.vertices.begin(), f.vertices.end()), f.vertices.end());
        d.faces_.push_back(std::move(f));
    }

    const int euler = d.node_count() - d.segment_count() + d.face_count();
    if (euler != 2)
        throw Error(ErrorKind::NotSphere,
                    "Euler characteristic " + std::to_string(euler) +
                        " (nodes=" + std::to_string(d.node_count()) +
                        " segments=" + std::to_string(d.segment_count()) +
                        " faces=" + std::to_string(d.face_count()) + ")");
    return d;
}

GoodnessReport validate_goodness(const PlanarizedDrawing& d) {
    GoodnessReport rep = check_goodness(d.spec());
    if (!rep.ok) return rep;
    // crossing nodes must have degree 4 with the two edges alternating
    for (int c = 0; c < static_cast<int>(d.crossing_nodes().size()); ++c) {
        const auto& x = d.crossing_nodes()[c];
        int node = d.n() + c;
        auto darts = d.darts_at_node(node);
        if (darts.size() != 4) {
            rep.ok = false;
            rep.what = "crossing node of degree " + std::to_string(darts.size());
            rep.eu = d.edges()[x.e1].u;
            rep.ev = d.edges()[x.e1].v;
            rep.fu = d.edges()[x.e2].u;
            rep.fv = d.edges()[x.e2].v;
            return rep;
        }
        for (int j = 0; j < 4; ++j)
            if (d.dart_edge(darts[j]) == d.dart_edge(darts[(j + 1) % 4])) {
                rep.ok = false;
                rep.what = "edges do not alternate at crossing node";
                rep.eu = d.edges()[x.e1].u;
                rep.ev = d.edges()[x.e1].v;
                rep.fu = d.edges()[x.e2].u;
                rep.fv = d.edges()[x.e2].v;
                return rep;
            }
    }
    return rep;
}

int PlanarizedDrawing::edge_index(Vertex u, Vertex v) const {
    auto it = edge_idx_.find({std::min(u, v), std::max(u, v)});
    if (it == edge_idx_.end())
        throw Error(ErrorKind::UnknownVertex, "no edge " + edge_name(u, v));
    return it->second;
}

int PlanarizedDrawing::vertex_slot(Vertex v) const {
    auto it = std::lower_bound(labels_.begin(), labels_.end(), v);
    if (it == labels_.end() || *it != v)
        throw Error(ErrorKind::UnknownVertex, "no vertex " + std::to_string(v));
    return static_cast<int>(it - labels_.begin());
}

bool PlanarizedDrawing::has_vertex(Vertex v) const {
    return std::binary_search(labels_.begin(), labels_.end(), v);
}

int PlanarizedDrawing::oriented_dart(Vertex x, Vertex y) const {
    const auto& info = edges_[edge_index(x, y)];
    return x < y ? info.base_dart : info.base_dart + 2 * (info.nseg - 1) + 1;
}

bool PlanarizedDrawing::face_incident_to(int face_id, Vertex v) const {
    const auto& fv = faces_[face_id].vertices;
    return std::binary_search(fv.begin(), fv.end(), v);
}

std::vector<int> PlanarizedDrawing::faces_at(Vertex v) const {
    std::vector<int> out;
    for (int dd : darts_at_node(vertex_slot(v))) out.push_back(dart_face_[dd]);
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

std::vector<int> PlanarizedDrawing::darts_at_node(int node) const {
    int first = -1;
    for (int dd = 0; dd < dart_count(); ++dd)
        if (dart_origin_[dd] == node) { first = dd; break; }
    KEDGE_ASSERT(first >= 0, "node without darts");
    std::vector<int> out;
    int cur = first;
    do {
        out.push_back(cur);
        cur = sigma_[cur];
    } while (cur != first);
    return out;
}

namespace {

// Connected components of the face dual with the given edges' segments removed.
// Returns component index per face, numbered by first appearance.
std::vector<int> dual_components(const PlanarizedDrawing& d, const std::vector<int>& blocked_edges,
                                 int* ncomp_out) {
    std::vector<char> blocked(d.edges().size(), 0);
    for (int e : blocked_edges) blocked[e] = 1;
    std::vector<int> comp(d.face_count(), -1);
    int ncomp = 0;
    std::vector<int> stack;
    for (int f0 = 0; f0 < d.face_count(); ++f0) {
        if (comp[f0] != -1) continue;
        comp[f0] = ncomp;
        stack.push_back(f0);
        while (!stack.empty()) {
            int f = stack.back();
            stack.pop_back();
            for (int dd : d.face(f).orbit) {
                if (blocked[d.dart_edge(dd)]) continue;
                int g = d.dart_face(d.twin(dd));
                if (comp[g] == -1) {
                    comp[g] = ncomp;
                    stack.push_back(g);
                }
            }
        }
        ++ncomp;
    }
    if (ncomp_out) *ncomp_out = ncomp;
    return comp;
}

}  // namespace

std::vector<std::uint8_t> triangle_coloring(const PlanarizedDrawing& d, Vertex a, Vertex b,
                                            Vertex c) {
    if (a == b || b == c || a == c)
        throw Error(ErrorKind::DegenerateTriangle, "triangle vertices must be distinct");
    int ncomp = 0;
    auto comp = dual_components(
        d, {d.edge_index(a, b), d.edge_index(b, c), d.edge_index(a, c)}, &ncomp);
    KEDGE_ASSERT(ncomp == 2, "triangle curve must split the sphere in two");
    return std::vector<std::uint8_t>(comp.begin(), comp.end());
}

TrianglePartition triangle_partition(const PlanarizedDrawing& d, Vertex u, Vertex v, Vertex w) {
    auto color = triangle_coloring(d, u, v, w);
    TrianglePartition part;
    part.u = u;
    part.v = v;
    part.w = w;
    const std::uint8_t left = color[d.face_left_of(u, v)];
    for (int f = 0; f < d.face_count(); ++f)
        (color[f] == left ? part.left_faces : part.right_faces).push_back(f);
    for (Vertex x : d.labels()) {
        if (x == u || x == v || x == w) continue;
        auto fs = d.faces_at(x);
        for (int f : fs)
            KEDGE_ASSERT(color[f] == color[fs[0]], "vertex faces must fall on one side");
        (color[fs[0]] == left ? part.left_vertices : part.right_vertices).push_back(x);
    }
    return part;
}

DeletionTrace delete_vertex(const PlanarizedDrawing& d, Vertex v) {
    const DrawingSpec& spec = d.spec();
    int vi = d.vertex_slot(v);

    // merge faces across every removed segment
    Dsu dsu(d.face_count());
    std::vector<char> removed(d.edges().size(), 0);
    for (int e = 0; e < static_cast<int>(d.edges().size()); ++e) {
        const auto& info = d.edges()[e];
        if (info.u != v && info.v != v) continue;
        removed[e] = 1;
        for (int s = 0; s < info.nseg; ++s) {
            int fwd = info.base_dart + 2 * s;
            dsu.unite(d.dart_face(fwd), d.dart_face(fwd + 1));
        }
    }

    // subdrawing spec: drop v, filter crossing records, reindex positions
    DrawingSpec sub;
    sub.meta = spec.meta;
    sub.vertices = spec.vertices;
    sub.vertices.erase(sub.vertices.begin() + vi);
    for (int i = 0; i < spec.n(); ++i) {
        if (i == vi) continue;
        std::vector<Vertex> rot;
        for (Vertex x : spec.rotations[i])
            if (x != v) rot.push_back(x);
        sub.rotations.push_back(std::move(rot));
    }
    // per surviving edge: old crossing position -> new position (or -1)
    std::vector<std::vector<int>> pos_map(spec.edges.size());
    for (int e = 0; e < static_cast<int>(spec.edges.size()); ++e) {
        if (removed[e]) continue;
        int next = 0;
        for (const auto& r : spec.edges[e].records) {
            bool gone = (r.other_u == v || r.other_v == v);
            pos_map[e].push_back(gone ? -1 : next++);
        }
    }
    for (int e = 0; e < static_cast<int>(spec.edges.size()); ++e) {
        if (removed[e]) continue;
        EdgeCrossings ec;
        ec.u = spec.edges[e].u;
        ec.v = spec.edges[e].v;
        for (int p = 0; p < static_cast<int>(spec.edges[e].records.size()); ++p) {
            if (pos_map[e][p] < 0) continue;
            CrossingRecord r = spec.edges[e].records[p];
            int f = d.edge_index(r.other_u, r.other_v);
            r.index_on_other = pos_map[f][r.index_on_other];
            KEDGE_ASSERT(r.index_on_other >= 0, "partner record must survive");
            ec.records.push_back(r);
        }
        sub.edges.push_back(std::move(ec));
    }

    DeletionTrace trace{v, PlanarizedDrawing::build(sub), {}, -1};
    const PlanarizedDrawing& s = trace.sub;

    // map old faces through surviving darts; resolve orphans via the merge classes
    std::vector<int> direct(d.face_count(), -1);
    for (int f = 0; f < d.face_count(); ++f) {
        for (int dd : d.face(f).orbit) {
            int e = d.dart_edge(dd);
            if (removed[e]) continue;
            const auto& info = d.edges()[e];
            int seg = (dd - info.base_dart) / 2;
            int parity = (dd - info.base_dart) % 2;
            int new_seg = 0;  // surviving crossings strictly before this segment
            for (int p = 0; p < seg; ++p)
                if (pos_map[e][p] >= 0) ++new_seg;
            const auto& ninfo = s.edges()[s.edge_index(info.u, info.v)];
            direct[f] = s.dart_face(ninfo.base_dart + 2 * new_seg + parity);
            break;
        }
    }
    std::vector<int> class_face(d.face_count(), -1);
    for (int f = 0; f < d.face_count(); ++f) {
        if (direct[f] < 0) continue;
        int r = dsu.find(f);
        KEDGE_ASSERT(class_face[r] == -1 || class_face[r] == direct[f],
                     "merged faces must map to one face");
        class_face[r] = direct[f];
    }
    trace.face_map.assign(d.face_count(), -1);
    for (int f = 0; f < d.face_count(); ++f) {
        int m = class_face[dsu.find(f)];
        if (m < 0) {
            KEDGE_ASSERT(s.face_count() == 1, "orphan face class in a multi-face subdrawing");
            m = 0;
        }
        trace.face_map[f] = m;
    }

    for (int f : d.faces_at(v)) {
        if (trace.superface < 0) trace.superface = trace.face_map[f];
        KEDGE_ASSERT(trace.superface == trace.face_map[f],
                     "faces at the deleted vertex must share one image");
    }
    return trace;
}

}
