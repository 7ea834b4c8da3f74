#include "kedge/deviations.hpp"

#include "kedge/shell.hpp"

namespace kedge {

DeviationReport deviations_from_profile(const KEdgeProfile& p) {
    DeviationReport r;
    r.n = p.n;
    r.face = p.face;
    r.m = p.m;
    r.cr = p.cr;
    r.H = p.H;
    r.delta_cr = p.cr - p.H;
    for (int k = 0; k <= r.m; ++k) {
        r.delta.push_back(p.E_at(k) - 3 * (k + 1));
        std::int64_t d2 = 0, d3 = 0;
        for (int i = 0; i <= k; ++i) {
            d2 += (k + 1 - i) * r.delta[i];
            d3 += binom(k + 2 - i, 2) * r.delta[i];
        }
        r.delta2.push_back(d2);
        r.delta3.push_back(d3);
    }
    r.conjecture_ok = r.m < 0 || r.delta3[r.m] >= r.delta2[r.m];
    return r;
}

DeviationReport deviations(const PlanarizedDrawing& d, int face) {
    return deviations_from_profile(profile(d, face));
}

Verdict check_kdev_identities(const PlanarizedDrawing& d) {
    const int n = d.n();
    if (n < 5) throw Error(ErrorKind::InvalidSpec, "identities need n >= 5");
    auto t = compute_k_table(d);
    for (int f = 0; f < d.face_count(); ++f) {
        auto r = deviations_from_profile(profile_from_table(d, t, f));
        for (int k = 0; k <= r.m; ++k)
            if (r.d3_at(k) != r.d3_at(k - 1) + r.d2_at(k))
                return {false, "IdentityViolation: delta3 recurrence at face " +
                                   std::to_string(f) + ", k=" + std::to_string(k)};
        std::int64_t expr = (n % 2 == 1) ? 2 * r.d3_at(r.m) : r.d3_at(r.m) + r.d3_at(r.m - 1);
        if (expr != r.delta_cr)
            return {false, "IdentityViolation: delta_cr mismatch at face " + std::to_string(f) +
                               ": " + std::to_string(expr) + " vs " + std::to_string(r.delta_cr)};
    }
    return {true, ""};
}

Verdict parity_check(const PlanarizedDrawing& d) {
    const int n = d.n();
    if (n % 2 == 0) throw Error(ErrorKind::InvalidSpec, "parity is asserted for n odd only");
    std::int64_t dcr = d.cr() - harary_hill(n);
    if (dcr % 2 != 0)
        return {false, "delta_cr = " + std::to_string(dcr) + " is odd"};
    return {true, ""};
}

DbgzeroVerdict check_dbgzero_report(const DeviationReport& r) {
    if (r.n < 6 || r.m < 1)
        throw Error(ErrorKind::InvalidSpec, "needs n >= 6 so that m-1 >= 0");
    if (r.delta_cr < 0)
        return {DbgzeroState::HypothesisNotMet, "cr < H(n)"};
    if (!r.conjecture_ok)
        return {DbgzeroState::HypothesisNotMet, "delta3_m < delta2_m at this face"};
    if (r.d3_at(r.m - 1) < 0)
        return {DbgzeroState::LemmaViolation,
                "delta3_{m-1} = " + std::to_string(r.d3_at(r.m - 1)) + " < 0"};
    return {DbgzeroState::Ok, ""};
}

DbgzeroVerdict check_dbgzero(const PlanarizedDrawing& d, int face) {
    return check_dbgzero_report(deviations(d, face));
}

std::vector<ConjectureHit> conjecture_violations(const PlanarizedDrawing& d) {
    std::vector<ConjectureHit> hits;
    if (d.n() / 2 - 2 < 0) return hits;  // no m to test below n = 4
    auto t = compute_k_table(d);
    for (int f = 0; f < d.face_count(); ++f) {
        auto r = deviations_from_profile(profile_from_table(d, t, f));
        if (!r.conjecture_ok) hits.push_back({f, r.d3_at(r.m), r.d2_at(r.m)});
    }
    return hits;
}

PipelineVerdict check_proposition_pipeline(const PlanarizedDrawing& d) {
    const int n = d.n();
    if (n < 4) throw Error(ErrorKind::InvalidSpec, "needs n >= 4");
    const std::int64_t H = harary_hill(n);

    if (n % 2 == 1) {
        for (Vertex v : d.labels()) {
            auto pair = find_pair_sequence(d, v);
            if (!pair) continue;
            auto tr = delete_vertex(d, v);
            if (!is_seq_shellable(tr.sub).first) continue;
            auto r = deviations(tr.sub, tr.superface);
            if (!r.conjecture_ok) continue;
            if (d.cr() >= H)
                return {PipelineState::AppliedOk,
                        "apex " + std::to_string(v) + ": cr = " + std::to_string(d.cr()) +
                            " >= H = " + std::to_string(H)};
            return {PipelineState::ConclusionViolated,
                    "apex " + std::to_string(v) + " met the hypotheses but cr < H"};
        }
        return {PipelineState::NotApplicable, "no vertex satisfies the hypotheses"};
    }

    const int len = n / 2 - 1;
    for (Vertex v : d.labels()) {
        bool has_simple = false;
        for (int f : d.faces_at(v))
            if (find_simple_sequence(d, v, f, len)) {
                has_simple = true;
                break;
            }
        if (!has_simple) continue;
        auto tr = delete_vertex(d, v);
        auto p = profile(tr.sub, tr.superface);
        if (p.E3_at(n / 2 - 3) < 3 * binom(n / 2 + 1, 4)) continue;
        if (d.cr() >= H)
            return {PipelineState::AppliedOk,
                    "vertex " + std::to_string(v) + ": cr = " + std::to_string(d.cr()) +
                        " >= H = " + std::to_string(H)};
        return {PipelineState::ConclusionViolated,
                "vertex " + std::to_string(v) + " met the hypotheses but cr < H"};
    }
    return {PipelineState::NotApplicable, "no vertex satisfies the hypotheses"};
}

}
