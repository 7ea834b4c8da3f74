#include "kedge/shell.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <memory>
#include <set>
#include <tuple>

namespace kedge {

namespace {

void require(bool cond, const std::string& what) {
    if (!cond) throw Error(ErrorKind::MalformedCert, what);
}

// Common structural screen: entries distinct, known, different from the base.
void screen_sequence(const PlanarizedDrawing& d, Vertex base, const std::vector<Vertex>& seq) {
    require(seq.size() < static_cast<std::size_t>(d.n()), "sequence longer than the drawing");
    std::set<Vertex> seen;
    for (Vertex u : seq) {
        require(u != base, "sequence contains its base vertex");
        require(d.has_vertex(u), "sequence names an unknown vertex");
        require(seen.insert(u).second, "repeated vertex in sequence");
    }
}

// positions of a pair-sequence that must share a face with the base vertex
bool pair_needs_share(int n0, int len, int j) {
    return j == 0 || (j >= 1 && j <= len - 2 && (n0 - j) % 2 == 1);
}

/// Shared engine for all searches on one drawing: subdrawings and deletion
/// traces are cached by the deleted-vertex set, results memoised per query.
class Search {
  public:
    explicit Search(const PlanarizedDrawing& root) : root_(root) {}

    const PlanarizedDrawing& drawing(std::uint64_t mask) {
        if (mask == 0) return root_;
        auto it = drawings_.find(mask);
        if (it == drawings_.end()) {
            // materialize along any deletion order; the result is one drawing
            std::uint64_t low = mask & (~mask + 1);
            int slot = std::countr_zero(low);
            trace(mask & ~low, root_.labels()[slot]);
            it = drawings_.find(mask);
            KEDGE_ASSERT(it != drawings_.end(), "trace did not register its subdrawing");
        }
        return *it->second;
    }

    const DeletionTrace& trace(std::uint64_t mask, Vertex x) {
        auto key = std::make_pair(mask, x);
        auto it = traces_.find(key);
        if (it == traces_.end()) {
            auto tr = std::make_shared<DeletionTrace>(delete_vertex(drawing(mask), x));
            it = traces_.emplace(key, tr).first;
            std::uint64_t child = mask | bit(x);
            drawings_.emplace(child,
                              std::shared_ptr<const PlanarizedDrawing>(tr, &tr->sub));
        }
        return *it->second;
    }

    std::uint64_t bit(Vertex x) const { return std::uint64_t{1} << root_.vertex_slot(x); }

    // simple sequence of v with `len` entries w.r.t. the tracked face
    std::optional<std::vector<Vertex>> simple(std::uint64_t mask, int face, Vertex v, int len) {
        if (len == 0) return std::vector<Vertex>{};
        auto key = std::make_tuple(mask, face, v, len);
        if (auto it = simple_memo_.find(key); it != simple_memo_.end()) return it->second;
        std::optional<std::vector<Vertex>> result;
        const auto& d = drawing(mask);
        if (len > d.n() - 1) {
            simple_memo_.emplace(key, result);
            return result;  // not enough vertices besides v
        }
        for (Vertex u : d.labels()) {
            if (u == v || !d.face_incident_to(face, u)) continue;
            if (len == 1) {
                result = std::vector<Vertex>{u};
                break;
            }
            const auto& tr = trace(mask, u);
            auto rest = simple(mask | bit(u), tr.face_map[face], v, len - 1);
            if (rest) {
                rest->insert(rest->begin(), u);
                result = std::move(rest);
                break;
            }
        }
        simple_memo_.emplace(key, result);
        return result;
    }

    struct ShellPart {
        std::vector<Vertex> seq;
        std::vector<std::vector<Vertex>> simple_seqs;
    };

    // seq-shell suffix: a vertex on the tracked face with an (r+1)-entry
    // simple sequence, then recurse with r-1
    std::optional<ShellPart> shell(std::uint64_t mask, int face, int r) {
        auto key = std::make_tuple(mask, face, r);
        if (auto it = shell_memo_.find(key); it != shell_memo_.end()) return it->second;
        std::optional<ShellPart> result;
        const auto& d = drawing(mask);
        for (Vertex a : d.labels()) {
            if (!d.face_incident_to(face, a)) continue;
            auto s = simple(mask, face, a, r + 1);
            if (!s) continue;
            if (r == 0) {
                result = ShellPart{{a}, {*s}};
                break;
            }
            const auto& tr = trace(mask, a);
            auto rest = shell(mask | bit(a), tr.face_map[face], r - 1);
            if (rest) {
                rest->seq.insert(rest->seq.begin(), a);
                rest->simple_seqs.insert(rest->simple_seqs.begin(), *s);
                result = std::move(rest);
                break;
            }
        }
        shell_memo_.emplace(key, result);
        return result;
    }

    std::optional<PairSequenceCert> pair_seq(std::uint64_t mask, Vertex v) {
        const int n0 = drawing(mask).n();
        const int len = n0 / 2 - 1;
        PairSequenceCert cert;
        cert.v = v;
        if (pair_dfs(mask, v, n0, len, 0, std::nullopt, cert)) return cert;
        return std::nullopt;
    }

  private:
    bool pair_dfs(std::uint64_t mask, Vertex v, int n0, int len, int j,
                  std::optional<int> constraint, PairSequenceCert& cert) {
        if (j == len) return true;
        const auto& d = drawing(mask);
        const bool share = pair_needs_share(n0, len, j);
        for (Vertex u : d.labels()) {
            if (u == v) continue;
            if (constraint && !d.face_incident_to(*constraint, u)) continue;
            int witness = -1;
            if (share) {
                for (int f : d.faces_at(v))
                    if (d.face_incident_to(f, u)) {
                        witness = f;
                        break;
                    }
                if (witness < 0) continue;
            }
            const auto& tr = trace(mask, u);
            std::optional<int> next =
                (share && j >= 1) ? std::optional<int>(tr.superface) : std::nullopt;
            cert.seq.push_back(u);
            if (share) cert.face_witnesses.push_back({j, witness});
            if (pair_dfs(mask | bit(u), v, n0, len, j + 1, next, cert)) return true;
            cert.seq.pop_back();
            if (share) cert.face_witnesses.pop_back();
        }
        return false;
    }

    const PlanarizedDrawing& root_;
    std::map<std::uint64_t, std::shared_ptr<const PlanarizedDrawing>> drawings_;
    std::map<std::pair<std::uint64_t, Vertex>, std::shared_ptr<DeletionTrace>> traces_;
    std::map<std::tuple<std::uint64_t, int, Vertex, int>, std::optional<std::vector<Vertex>>>
        simple_memo_;
    std::map<std::tuple<std::uint64_t, int, int>, std::optional<ShellPart>> shell_memo_;
};

std::optional<AlternatingCert> alternating_search(const PlanarizedDrawing& d) {
    const int n = d.n();
    Search engine(d);
    std::map<std::uint64_t, std::optional<std::vector<AlternatingStep>>> memo;

    // steps for positions s..1 given the deleted suffix `mask`
    auto rec = [&](auto&& self, std::uint64_t mask) -> std::optional<std::vector<AlternatingStep>> {
        if (auto it = memo.find(mask); it != memo.end()) return it->second;
        const auto& cur = engine.drawing(mask);
        const int s = cur.n();
        std::optional<std::vector<AlternatingStep>> result;
        if (s <= 3) {
            // induction basis: positions 1..3 carry no requirement
            std::vector<AlternatingStep> steps;
            for (Vertex v : cur.labels()) steps.push_back({v, 0, {}, {}});
            result = std::move(steps);
        } else {
            for (Vertex v : cur.labels()) {
                AlternatingStep step;
                step.v = v;
                if (s % 2 == 1) {
                    auto pc = engine.pair_seq(mask, v);
                    if (!pc) continue;
                    step.kind = 1;
                    step.pair = *pc;
                } else {
                    bool found = false;
                    for (int f : cur.faces_at(v)) {
                        auto sp = engine.simple(mask, f, v, s / 2 - 1);
                        if (sp) {
                            step.kind = 2;
                            step.simple = {v, f, *sp};
                            found = true;
                            break;
                        }
                    }
                    if (!found) continue;
                }
                auto rest = self(self, mask | engine.bit(v));
                if (rest) {
                    result = *rest;
                    result->push_back(step);
                    break;
                }
            }
        }
        memo.emplace(mask, result);
        return result;
    };

    auto steps = rec(rec, 0);
    if (!steps) return std::nullopt;
    KEDGE_ASSERT(static_cast<int>(steps->size()) == n, "alternating cert must cover all positions");
    return AlternatingCert{*steps};
}

}  // namespace

bool verify_simple_sequence(const PlanarizedDrawing& d, const SimpleSequenceCert& cert) {
    require(!cert.seq.empty(), "empty simple sequence");
    require(cert.face >= 0 && cert.face < d.face_count(), "face id out of range");
    require(d.has_vertex(cert.v), "unknown base vertex");
    screen_sequence(d, cert.v, cert.seq);

    const PlanarizedDrawing* cur = &d;
    DeletionTrace tr;
    int face = cert.face;
    for (std::size_t i = 0; i < cert.seq.size(); ++i) {
        if (!cur->face_incident_to(face, cert.seq[i])) return false;
        if (i + 1 < cert.seq.size()) {
            tr = delete_vertex(*cur, cert.seq[i]);
            face = tr.face_map[face];
            cur = &tr.sub;
        }
    }
    return true;
}

bool verify_seq_shell(const PlanarizedDrawing& d, const SeqShellCert& cert) {
    require(!cert.seq.empty(), "empty vertex sequence");
    require(cert.face >= 0 && cert.face < d.face_count(), "face id out of range");
    require(cert.simple_seqs.size() == cert.seq.size(), "one simple sequence per vertex");
    const int k = static_cast<int>(cert.seq.size()) - 1;
    for (int i = 0; i <= k; ++i)
        require(static_cast<int>(cert.simple_seqs[i].size()) == k - i + 1,
                "simple sequence lengths must step down");
    {
        std::set<Vertex> seen;
        for (Vertex a : cert.seq) {
            require(d.has_vertex(a), "unknown vertex in sequence");
            require(seen.insert(a).second, "repeated vertex in sequence");
        }
    }

    std::optional<PlanarizedDrawing> holder;
    const PlanarizedDrawing* cur = &d;
    int face = cert.face;
    for (int i = 0; i <= k; ++i) {
        Vertex a = cert.seq[i];
        if (!cur->has_vertex(a) || !cur->face_incident_to(face, a)) return false;
        if (!verify_simple_sequence(*cur, {a, face, cert.simple_seqs[i]})) return false;
        if (i < k) {
            auto tr = delete_vertex(*cur, a);
            face = tr.face_map[face];
            holder = std::move(tr.sub);
            cur = &*holder;
        }
    }
    return true;
}

bool verify_pair_sequence(const PlanarizedDrawing& d, const PairSequenceCert& cert) {
    const int n0 = d.n();
    const int len = n0 / 2 - 1;
    require(d.has_vertex(cert.v), "unknown base vertex");
    require(static_cast<int>(cert.seq.size()) == len, "pair-sequence has the wrong length");
    screen_sequence(d, cert.v, cert.seq);

    std::map<int, int> witness;
    for (auto [j, f] : cert.face_witnesses) {
        require(j >= 0 && j < len && pair_needs_share(n0, len, j),
                "witness at a position with no face clause");
        require(!witness.count(j), "duplicate witness position");
        witness[j] = f;
    }
    for (int j = 0; j < len; ++j)
        if (pair_needs_share(n0, len, j))
            require(witness.count(j), "missing witness for a face clause");

    std::optional<PlanarizedDrawing> holder;
    const PlanarizedDrawing* cur = &d;
    std::optional<int> constraint;
    for (int j = 0; j < len; ++j) {
        Vertex u = cert.seq[j];
        const bool share = pair_needs_share(n0, len, j);
        if (share) {
            int f = witness.at(j);
            require(f >= 0 && f < cur->face_count(), "witness face out of range");
            if (!cur->face_incident_to(f, u) || !cur->face_incident_to(f, cert.v)) return false;
        }
        if (constraint && !cur->face_incident_to(*constraint, u)) return false;
        auto tr = delete_vertex(*cur, u);
        constraint = (share && j >= 1) ? std::optional<int>(tr.superface) : std::nullopt;
        holder = std::move(tr.sub);
        cur = &*holder;
    }
    return true;
}

bool verify_sps(const PlanarizedDrawing& d, const SPSCert& cert) {
    const int n = d.n();
    if (n % 2 == 0)
        throw Error(ErrorKind::NotOdd, "single-pair-seq-shellability needs an odd vertex count");
    require(cert.pair_seq.v == cert.v, "pair-sequence base must be the apex");
    require(static_cast<int>(cert.sub_shell.seq.size()) == (n - 1) / 2 - 1,
            "subdrawing certificate must witness full seq-shellability");
    if (!verify_pair_sequence(d, cert.pair_seq)) return false;
    auto tr = delete_vertex(d, cert.v);
    if (cert.sub_shell.face != tr.superface) return false;
    return verify_seq_shell(tr.sub, cert.sub_shell);
}

bool verify_alternating(const PlanarizedDrawing& d, const AlternatingCert& cert) {
    const int n = d.n();
    require(static_cast<int>(cert.steps.size()) == n, "one step per vertex");
    {
        std::vector<Vertex> order;
        for (const auto& st : cert.steps) order.push_back(st.v);
        std::sort(order.begin(), order.end());
        require(order == d.labels(), "steps must permute the vertices");
    }
    for (int i = 1; i <= std::min(n, 3); ++i)
        require(cert.steps[i - 1].kind == 0, "positions up to 3 carry no requirement");
    std::optional<PlanarizedDrawing> holder;
    const PlanarizedDrawing* cur = &d;
    for (int i = n; i >= 4; --i) {
        const auto& st = cert.steps[i - 1];
        const int want_kind = i % 2 == 1 ? 1 : 2;
        require(st.kind == want_kind, "step kind does not match its position");
        if (st.kind == 1) {
            require(st.pair.v == st.v, "pair-sequence base must be the step vertex");
            if (!verify_pair_sequence(*cur, st.pair)) return false;
        } else {
            require(st.simple.v == st.v, "simple-sequence base must be the step vertex");
            require(static_cast<int>(st.simple.seq.size()) == i / 2 - 1,
                    "simple sequence must have full length");
            if (!cur->face_incident_to(st.simple.face, st.v)) return false;
            if (!verify_simple_sequence(*cur, st.simple)) return false;
        }
        if (i > 4) {
            auto tr = delete_vertex(*cur, st.v);
            holder = std::move(tr.sub);
            cur = &*holder;
        }
    }
    return true;
}

bool verify_certificate(const PlanarizedDrawing& d, const Certificate& cert) {
    return std::visit(
        [&](const auto& c) -> bool {
            using T = std::decay_t<decltype(c)>;
            if constexpr (std::is_same_v<T, SimpleSequenceCert>)
                return verify_simple_sequence(d, c);
            else if constexpr (std::is_same_v<T, SeqShellCert>)
                return verify_seq_shell(d, c);
            else if constexpr (std::is_same_v<T, PairSequenceCert>)
                return verify_pair_sequence(d, c);
            else if constexpr (std::is_same_v<T, SPSCert>)
                return verify_sps(d, c);
            else
                return verify_alternating(d, c);
        },
        cert);
}

std::optional<SimpleSequenceCert> find_simple_sequence(const PlanarizedDrawing& d, Vertex v,
                                                       int face, int len) {
    if (len < 1) throw Error(ErrorKind::InvalidSpec, "sequence length must be positive");
    if (face < 0 || face >= d.face_count()) throw Error(ErrorKind::InvalidSpec, "face id out of range");
    d.vertex_slot(v);
    Search engine(d);
    auto seq = engine.simple(0, face, v, len);
    if (!seq) return std::nullopt;
    return SimpleSequenceCert{v, face, *seq};
}

std::optional<SeqShellCert> find_seq_shell(const PlanarizedDrawing& d, int face, int k) {
    if (k < 0 || face < 0 || face >= d.face_count())
        throw Error(ErrorKind::InvalidSpec, "bad search arguments");
    Search engine(d);
    auto part = engine.shell(0, face, k);
    if (!part) return std::nullopt;
    return SeqShellCert{face, part->seq, part->simple_seqs};
}

std::pair<bool, std::optional<SeqShellCert>> is_seq_shellable(const PlanarizedDrawing& d) {
    if (d.n() < 4) throw Error(ErrorKind::InvalidSpec, "seq-shellability needs n >= 4");
    Search engine(d);
    const int k = d.n() / 2 - 2;
    for (int f = 0; f < d.face_count(); ++f) {
        auto part = engine.shell(0, f, k);
        if (part) return {true, SeqShellCert{f, part->seq, part->simple_seqs}};
    }
    return {false, std::nullopt};
}

std::optional<PairSequenceCert> find_pair_sequence(const PlanarizedDrawing& d, Vertex v) {
    if (d.n() < 5) throw Error(ErrorKind::InvalidSpec, "pair-sequences need n >= 5");
    d.vertex_slot(v);
    Search engine(d);
    return engine.pair_seq(0, v);
}

std::pair<bool, std::optional<SPSCert>> is_sps(const PlanarizedDrawing& d) {
    const int n = d.n();
    if (n % 2 == 0)
        throw Error(ErrorKind::NotOdd, "single-pair-seq-shellability needs an odd vertex count");
    if (n < 5) throw Error(ErrorKind::InvalidSpec, "needs n >= 5");
    for (Vertex v : d.labels()) {
        auto pair = find_pair_sequence(d, v);
        if (!pair) continue;
        auto tr = delete_vertex(d, v);
        auto shell = find_seq_shell(tr.sub, tr.superface, (n - 1) / 2 - 2);
        if (shell) return {true, SPSCert{v, *pair, *shell}};
    }
    return {false, std::nullopt};
}

std::pair<bool, std::optional<AlternatingCert>> is_alternating_class(const PlanarizedDrawing& d) {
    if (d.n() < 3) throw Error(ErrorKind::InvalidSpec, "needs n >= 3");
    auto cert = alternating_search(d);
    if (!cert) return {false, std::nullopt};
    return {true, cert};
}

}
