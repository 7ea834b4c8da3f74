#pragma once

// Brute-force oracles for the sequence searches: enumerate every candidate
// tuple outright and validate each clause with drawing-core operations.  Only
// usable at small n; kept free of the search engine on purpose.

#include <optional>
#include <vector>

#include "kedge/drawing.hpp"

namespace kedge::naive {

inline void tuples_rec(const std::vector<Vertex>& pool, int len, std::vector<Vertex>& cur,
                       std::vector<std::vector<Vertex>>& out) {
    if (static_cast<int>(cur.size()) == len) {
        out.push_back(cur);
        return;
    }
    for (Vertex x : pool) {
        if (std::find(cur.begin(), cur.end(), x) != cur.end()) continue;
        cur.push_back(x);
        tuples_rec(pool, len, cur, out);
        cur.pop_back();
    }
}

inline std::vector<std::vector<Vertex>> all_tuples(const std::vector<Vertex>& pool, int len) {
    std::vector<std::vector<Vertex>> out;
    std::vector<Vertex> cur;
    tuples_rec(pool, len, cur, out);
    return out;
}

inline bool valid_simple_tuple(const PlanarizedDrawing& d, Vertex v, int face,
                               const std::vector<Vertex>& seq) {
    const PlanarizedDrawing* cur = &d;
    std::optional<PlanarizedDrawing> holder;
    int f = face;
    for (std::size_t i = 0; i < seq.size(); ++i) {
        if (seq[i] == v || !cur->face_incident_to(f, seq[i])) return false;
        if (i + 1 < seq.size()) {
            auto tr = delete_vertex(*cur, seq[i]);
            f = tr.face_map[f];
            holder = std::move(tr.sub);
            cur = &*holder;
        }
    }
    return true;
}

inline bool has_simple(const PlanarizedDrawing& d, Vertex v, int face, int len) {
    std::vector<Vertex> pool;
    for (Vertex x : d.labels())
        if (x != v) pool.push_back(x);
    for (const auto& t : all_tuples(pool, len))
        if (valid_simple_tuple(d, v, face, t)) return true;
    return false;
}

inline bool seq_shellable_for(const PlanarizedDrawing& d, int face, int k) {
    for (const auto& avec : all_tuples(d.labels(), k + 1)) {
        const PlanarizedDrawing* cur = &d;
        std::optional<PlanarizedDrawing> holder;
        int f = face;
        bool ok = true;
        for (int i = 0; i <= k && ok; ++i) {
            if (!cur->face_incident_to(f, avec[i]) || !has_simple(*cur, avec[i], f, k - i + 1)) {
                ok = false;
                break;
            }
            if (i < k) {
                auto tr = delete_vertex(*cur, avec[i]);
                f = tr.face_map[f];
                holder = std::move(tr.sub);
                cur = &*holder;
            }
        }
        if (ok) return true;
    }
    return false;
}

inline bool seq_shellable(const PlanarizedDrawing& d) {
    const int k = d.n() / 2 - 2;
    for (int f = 0; f < d.face_count(); ++f)
        if (seq_shellable_for(d, f, k)) return true;
    return false;
}

inline bool shares_face(const PlanarizedDrawing& d, Vertex a, Vertex b) {
    for (int f : d.faces_at(a))
        if (d.face_incident_to(f, b)) return true;
    return false;
}

inline bool valid_pair_tuple(const PlanarizedDrawing& d, Vertex v,
                             const std::vector<Vertex>& seq) {
    const int n0 = d.n();
    const int len = n0 / 2 - 1;
    const PlanarizedDrawing* cur = &d;
    std::optional<PlanarizedDrawing> holder;
    std::optional<int> constraint;
    for (int j = 0; j < len; ++j) {
        bool share = (j == 0) || (j >= 1 && j <= len - 2 && (n0 - j) % 2 == 1);
        if (share && !shares_face(*cur, seq[j], v)) return false;
        if (constraint && !cur->face_incident_to(*constraint, seq[j])) return false;
        auto tr = delete_vertex(*cur, seq[j]);
        constraint = (share && j >= 1) ? std::optional<int>(tr.superface) : std::nullopt;
        holder = std::move(tr.sub);
        cur = &*holder;
    }
    return true;
}

inline bool has_pair_sequence(const PlanarizedDrawing& d, Vertex v) {
    std::vector<Vertex> pool;
    for (Vertex x : d.labels())
        if (x != v) pool.push_back(x);
    for (const auto& t : all_tuples(pool, d.n() / 2 - 1))
        if (valid_pair_tuple(d, v, t)) return true;
    return false;
}

inline bool sps(const PlanarizedDrawing& d) {
    for (Vertex v : d.labels()) {
        if (!has_pair_sequence(d, v)) continue;
        auto tr = delete_vertex(d, v);
        if (seq_shellable_for(tr.sub, tr.superface, (d.n() - 1) / 2 - 2)) return true;
    }
    return false;
}

}
