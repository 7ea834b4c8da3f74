#include "kedge/kedges.hpp"

#include <algorithm>
#include <numeric>

namespace kedge {

std::int64_t harary_hill(int n) {
    if (n < 3) throw Error(ErrorKind::InvalidSpec, "n must be at least 3");
    std::int64_t p = static_cast<std::int64_t>(n / 2) * ((n - 1) / 2) * ((n - 2) / 2) * ((n - 3) / 2);
    KEDGE_ASSERT(p % 4 == 0, "floor product not divisible by 4");
    return p / 4;
}

std::int64_t binom(std::int64_t n, std::int64_t k) {
    if (k < 0 || n < k) return 0;
    k = std::min(k, n - k);
    std::int64_t r = 1;
    for (std::int64_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

KTable compute_k_table(const PlanarizedDrawing& d) {
    const int n = d.n();
    const int nf = d.face_count();
    const auto& lab = d.labels();
    KTable t;
    t.n = n;
    std::vector<std::vector<int>> acc(d.edges().size(), std::vector<int>(nf, 0));
    for (int ia = 0; ia < n; ++ia)
        for (int ib = ia + 1; ib < n; ++ib)
            for (int ic = ib + 1; ic < n; ++ic) {
                auto color = triangle_coloring(d, lab[ia], lab[ib], lab[ic]);
                const Vertex tri[3][2] = {{lab[ia], lab[ib]}, {lab[ia], lab[ic]}, {lab[ib], lab[ic]}};
                for (const auto& e : tri) {
                    int ei = d.edge_index(e[0], e[1]);
                    std::uint8_t left = color[d.face_left_of(e[0], e[1])];
                    auto& row = acc[ei];
                    for (int f = 0; f < nf; ++f)
                        if (color[f] == left) ++row[f];
                }
            }
    t.k.assign(d.edges().size(), std::vector<int>(nf, 0));
    for (std::size_t e = 0; e < acc.size(); ++e)
        for (int f = 0; f < nf; ++f) t.k[e][f] = std::min(acc[e][f], n - 2 - acc[e][f]);
    return t;
}

int k_value(const PlanarizedDrawing& d, Vertex u, Vertex v, int face) {
    const int n = d.n();
    int i = 0;
    for (Vertex w : d.labels()) {
        if (w == u || w == v) continue;
        auto color = triangle_coloring(d, u, v, w);
        if (color[face] == color[d.face_left_of(u, v)]) ++i;
    }
    return std::min(i, n - 2 - i);
}

KEdgeProfile profile_from_table(const PlanarizedDrawing& d, const KTable& t, int face) {
    const int n = d.n();
    KEdgeProfile p;
    p.n = n;
    p.face = face;
    p.m = n / 2 - 2;
    const int width = std::max(n / 2, 0);
    p.E.assign(width, 0);
    for (std::size_t e = 0; e < t.k.size(); ++e) {
        int kv = t.k[e][face];
        KEDGE_ASSERT(kv >= 0 && kv < width, "k-value out of range");
        ++p.E[kv];
    }
    std::int64_t total = 0;
    for (auto x : p.E) total += x;
    KEDGE_ASSERT(total == static_cast<std::int64_t>(n) * (n - 1) / 2, "k-edge counts must cover all edges");
    p.E2.assign(width, 0);
    p.E3.assign(width, 0);
    for (int k = 0; k < width; ++k)
        for (int i = 0; i <= k; ++i) {
            p.E2[k] += (k + 1 - i) * p.E[i];
            p.E3[k] += binom(k + 2 - i, 2) * p.E[i];
        }
    p.cr = d.cr();
    p.H = harary_hill(std::max(n, 3));
    return p;
}

KEdgeProfile profile(const PlanarizedDrawing& d, int face) {
    return profile_from_table(d, compute_k_table(d), face);
}

std::vector<KEdgeProfile> profile_all(const PlanarizedDrawing& d, const KTable& t) {
    std::vector<KEdgeProfile> out;
    out.reserve(d.face_count());
    for (int f = 0; f < d.face_count(); ++f) out.push_back(profile_from_table(d, t, f));
    return out;
}

Verdict check_cr_identity(const PlanarizedDrawing& d) {
    const int n = d.n();
    if (n < 5) throw Error(ErrorKind::InvalidSpec, "identity needs n >= 5");
    const int m = n / 2 - 2;
    auto t = compute_k_table(d);
    for (int f = 0; f < d.face_count(); ++f) {
        auto p = profile_from_table(d, t, f);
        std::int64_t rhs;
        if (n % 2 == 1)
            rhs = 2 * p.E3_at(m) - static_cast<std::int64_t>(n) * (n - 1) * (n - 3) / 8;
        else
            rhs = p.E3_at(m) + p.E3_at(m - 1) - static_cast<std::int64_t>(n) * (n - 1) * (n - 2) / 8;
        if (rhs != d.cr())
            return {false, "IdentityViolation at face " + std::to_string(f) + ": cr=" +
                               std::to_string(d.cr()) + " expr=" + std::to_string(rhs)};
    }
    return {true, ""};
}

bool lower_bound_predicate(const KEdgeProfile& p) {
    const int n = p.n;
    if (n % 2 == 1) {
        int k = (n - 1) / 2 - 2;
        return p.E3_at(k) >= 3 * binom((n - 1) / 2 + 2, 4);
    }
    return p.E3_at(n / 2 - 2) >= 3 * binom(n / 2 + 2, 4) &&
           p.E3_at(n / 2 - 3) >= 3 * binom(n / 2 + 1, 4);
}

std::int64_t vertex_triple_value_from_table(const PlanarizedDrawing& d, const KTable& t, Vertex v,
                                            int face, int k) {
    std::int64_t sum = 0;
    for (Vertex w : d.labels()) {
        if (w == v) continue;
        int i = t.k[d.edge_index(v, w)][face];
        sum += binom(k + 2 - i, 2);
    }
    return sum;
}

std::int64_t vertex_triple_value(const PlanarizedDrawing& d, Vertex v, int face, int k) {
    return vertex_triple_value_from_table(d, compute_k_table(d), v, face, k);
}

InvariantStats invariant_stats_from(const PlanarizedDrawing& d, const DeletionTrace& tr,
                                    const KTable& kd, const KTable& ks, int face) {
    const int n = d.n();
    InvariantStats st;
    st.deleted = tr.deleted;
    st.face = face;
    st.face_sub = tr.face_map[face];
    const int width = std::max(n / 2, 0);
    st.I.assign(width, 0);
    for (const auto& e : tr.sub.edges()) {
        int kd_v = kd.k[d.edge_index(e.u, e.v)][face];
        int ks_v = ks.k[tr.sub.edge_index(e.u, e.v)][st.face_sub];
        if (kd_v == ks_v) ++st.I[kd_v];
    }
    st.I2bar.assign(width, 0);
    for (int k = 0; k < width; ++k)
        for (int i = 0; i <= k; ++i) st.I2bar[k] += (k - i + 1) * st.I[i];
    return st;
}

InvariantStats invariant_stats(const PlanarizedDrawing& d, Vertex v, int face) {
    auto tr = delete_vertex(d, v);
    return invariant_stats_from(d, tr, compute_k_table(d), compute_k_table(tr.sub), face);
}

Verdict check_recursion(const PlanarizedDrawing& d, Vertex v, int face) {
    const int n = d.n();
    if (n < 4) throw Error(ErrorKind::InvalidSpec, "recursion needs n >= 4");
    auto tr = delete_vertex(d, v);
    auto kd = compute_k_table(d);
    auto ks = compute_k_table(tr.sub);
    auto p = profile_from_table(d, kd, face);
    auto ps = profile_from_table(tr.sub, ks, tr.face_map[face]);
    auto st = invariant_stats_from(d, tr, kd, ks, face);
    for (int k = 0; k <= n / 2 - 2; ++k) {
        std::int64_t lhs = p.E3_at(k);
        std::int64_t rhs = ps.E3_at(k - 1) + vertex_triple_value_from_table(d, kd, v, face, k) +
                           st.I2_at(k);
        if (lhs != rhs)
            return {false, "RecursionViolation at k=" + std::to_string(k) + " v=" +
                               std::to_string(v) + " face=" + std::to_string(face) + ": " +
                               std::to_string(lhs) + " != " + std::to_string(rhs)};
    }
    return {true, ""};
}

Verdict side_count_check(const PlanarizedDrawing& d, int face, Vertex u, Vertex v) {
    const int n = d.n();
    if (!d.face_incident_to(face, u) || !d.face_incident_to(face, v))
        throw Error(ErrorKind::InvalidSpec, "both vertices must touch the reference face");
    const int j = k_value(d, u, v, face);

    // split the reference face along an arc from u to v through its interior
    const auto& orbit = d.face(face).orbit;
    int pos_u = -1, pos_v = -1;
    for (int i = 0; i < static_cast<int>(orbit.size()); ++i) {
        int org = d.dart_origin(orbit[i]);
        if (org < n) {
            Vertex x = d.labels()[org];
            if (x == u) {
                KEDGE_ASSERT(pos_u < 0, "face boundary visits a vertex twice");
                pos_u = i;
            } else if (x == v) {
                KEDGE_ASSERT(pos_v < 0, "face boundary visits a vertex twice");
                pos_v = i;
            }
        }
    }
    KEDGE_ASSERT(pos_u >= 0 && pos_v >= 0, "reference face must touch u and v");

    std::vector<int> arc(d.dart_count(), -1);  // 0/1 for darts on the split face
    for (int i = 0; i < static_cast<int>(orbit.size()); ++i) {
        bool first = pos_u <= pos_v ? (i >= pos_u && i < pos_v) : (i >= pos_u || i < pos_v);
        arc[orbit[i]] = first ? 0 : 1;
    }
    const int half_b = d.face_count();  // second half of the split face
    auto side_of = [&](int dart) {
        int f = d.dart_face(dart);
        if (f != face) return f;
        return arc[dart] == 0 ? face : half_b;
    };

    std::vector<int> parent(d.face_count() + 1);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    const int blocked = d.edge_index(u, v);
    for (int dd = 0; dd < d.dart_count(); dd += 2) {
        if (d.dart_edge(dd) == blocked) continue;
        int a = find(side_of(dd)), b = find(side_of(dd + 1));
        if (a != b) parent[std::max(a, b)] = std::min(a, b);
    }
    KEDGE_ASSERT(find(face) != find(half_b), "split curve must separate the sphere");

    int c = 0, total = 0;
    const int side_a = find(face);
    for (Vertex w : d.labels()) {
        if (w == u || w == v) continue;
        ++total;
        auto darts = d.darts_at_node(d.vertex_slot(w));
        int s = find(side_of(darts[0]));
        for (int dd : darts)
            KEDGE_ASSERT(find(side_of(dd)) == s, "vertex faces must fall on one side");
        if (s == side_a) ++c;
    }
    if (c == j || c == total - j) return {true, ""};
    return {false, "side counts {" + std::to_string(c) + "," + std::to_string(total - c) +
                       "} do not match j=" + std::to_string(j)};
}

Verdict check_invariant_face_independence(const PlanarizedDrawing& d, Vertex v) {
    const int n = d.n();
    if (n % 2 == 0) return {true, "not asserted for n even"};
    const int m = n / 2 - 2;
    if (m < 0) return {true, "m < 0"};
    auto tr = delete_vertex(d, v);
    auto kd = compute_k_table(d);
    auto ks = compute_k_table(tr.sub);
    std::int64_t ref = -1;
    for (int f : d.faces_at(v)) {
        auto st = invariant_stats_from(d, tr, kd, ks, f);
        if (ref == -1) ref = st.I2_at(m);
        if (st.I2_at(m) != ref)
            return {false, "I2bar_m differs between faces at vertex " + std::to_string(v)};
    }
    return {true, ""};
}

}
