#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "kedge/kedges.hpp"

namespace kedge {

/// Differences between the k-edge counts and the values 3(k+1) attained by
/// crossing-optimal drawings, with their cumulations; defined for k up to
/// m = floor(n/2)-2 only.
struct DeviationReport {
    int n = 0;
    int face = -1;
    int m = -1;
    std::vector<std::int64_t> delta, delta2, delta3;  // k = 0..m
    std::int64_t delta_cr = 0, cr = 0, H = 0;
    bool conjecture_ok = true;  // delta3[m] >= delta2[m]

    std::int64_t d_at(int k) const { return (k < 0 || k > m) ? 0 : delta[k]; }
    std::int64_t d2_at(int k) const { return (k < 0 || k > m) ? 0 : delta2[k]; }
    std::int64_t d3_at(int k) const { return (k < 0 || k > m) ? 0 : delta3[k]; }
};

DeviationReport deviations_from_profile(const KEdgeProfile& p);
DeviationReport deviations(const PlanarizedDrawing& d, int face);

// delta3_k = delta3_{k-1} + delta2_k per face; delta_cr = 2 delta3_m (n odd)
// or delta3_m + delta3_{m-1} (n even), for every face.  Requires n >= 5.
Verdict check_kdev_identities(const PlanarizedDrawing& d);

// Kleitman parity: for n odd, delta_cr is even.
Verdict parity_check(const PlanarizedDrawing& d);

enum class DbgzeroState { Ok, HypothesisNotMet, LemmaViolation };

struct DbgzeroVerdict {
    DbgzeroState state = DbgzeroState::Ok;
    std::string detail;
};

// Under cr >= H(n) and delta3_m >= delta2_m at the face, delta3_{m-1} >= 0.
DbgzeroVerdict check_dbgzero_report(const DeviationReport& r);
DbgzeroVerdict check_dbgzero(const PlanarizedDrawing& d, int face);

struct ConjectureHit {
    int face = -1;
    std::int64_t delta3_m = 0, delta2_m = 0;
};

// Faces violating delta3_m >= delta2_m; empty on every drawing inspected so far.
std::vector<ConjectureHit> conjecture_violations(const PlanarizedDrawing& d);

enum class PipelineState { AppliedOk, NotApplicable, ConclusionViolated };

struct PipelineVerdict {
    PipelineState state = PipelineState::NotApplicable;
    std::string detail;
};

// Reference-face-relaxation route to cr(D) >= H(n): for n odd a vertex with a
// pair-sequence whose subdrawing is seq-shellable and meets the deviation
// inequality at its superface; for n even a vertex with a full simple
// sequence whose subdrawing meets the triple cumulated bound.  When the
// hypotheses hold the conclusion is cross-checked against the crossing count.
PipelineVerdict check_proposition_pipeline(const PlanarizedDrawing& d);

}
