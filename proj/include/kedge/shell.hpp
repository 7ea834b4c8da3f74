#pragma once

#include <optional>
#include <utility>
#include <variant>
#include <vector>

#include "kedge/drawing.hpp"

namespace kedge {

struct SimpleSequenceCert {
    Vertex v = -1;             // base vertex
    int face = -1;             // reference face in the drawing the cert applies to
    std::vector<Vertex> seq;   // u_0 ... u_k
    bool operator==(const SimpleSequenceCert&) const = default;
};

struct SeqShellCert {
    int face = -1;
    std::vector<Vertex> seq;                       // a_0 ... a_k
    std::vector<std::vector<Vertex>> simple_seqs;  // S_i lives in D - {a_0..a_{i-1}}
    bool operator==(const SeqShellCert&) const = default;
};

struct PairSequenceCert {
    Vertex v = -1;
    std::vector<Vertex> seq;  // u_0 ... u_{floor(n/2)-2}
    // witness faces for the positions that must share a face with v:
    // (position j, face id in D - {u_0..u_{j-1}})
    std::vector<std::pair<int, int>> face_witnesses;
    bool operator==(const PairSequenceCert&) const = default;
};

struct SPSCert {
    Vertex v = -1;
    PairSequenceCert pair_seq;  // in D
    SeqShellCert sub_shell;     // in D - v, reference face f(v)
    bool operator==(const SPSCert&) const = default;
};

struct AlternatingStep {
    Vertex v = -1;
    int kind = 0;  // 0 vacuous (positions 1..3), 1 pair-sequence, 2 simple sequence
    PairSequenceCert pair;
    SimpleSequenceCert simple;
    bool operator==(const AlternatingStep&) const = default;
};

struct AlternatingCert {
    std::vector<AlternatingStep> steps;  // steps[i] belongs to position i+1
    bool operator==(const AlternatingCert&) const = default;
};

using Certificate =
    std::variant<SimpleSequenceCert, SeqShellCert, PairSequenceCert, SPSCert, AlternatingCert>;

// Verifiers re-check every clause with drawing-core operations only; they
// never reuse search state.  Structural defects (repeats, unknown vertices,
// impossible lengths) throw MalformedCert; a well-formed certificate that
// fails a clause returns false.
bool verify_simple_sequence(const PlanarizedDrawing& d, const SimpleSequenceCert& cert);
bool verify_seq_shell(const PlanarizedDrawing& d, const SeqShellCert& cert);
bool verify_pair_sequence(const PlanarizedDrawing& d, const PairSequenceCert& cert);
bool verify_sps(const PlanarizedDrawing& d, const SPSCert& cert);
bool verify_alternating(const PlanarizedDrawing& d, const AlternatingCert& cert);
bool verify_certificate(const PlanarizedDrawing& d, const Certificate& cert);

// Exhaustive searches.  Candidates are tried in ascending vertex order and
// faces in ascending id order, so results are deterministic; absence of a
// certificate means no certificate exists.
std::optional<SimpleSequenceCert> find_simple_sequence(const PlanarizedDrawing& d, Vertex v,
                                                       int face, int len);
std::optional<SeqShellCert> find_seq_shell(const PlanarizedDrawing& d, int face, int k);
std::pair<bool, std::optional<SeqShellCert>> is_seq_shellable(const PlanarizedDrawing& d);
std::optional<PairSequenceCert> find_pair_sequence(const PlanarizedDrawing& d, Vertex v);
std::pair<bool, std::optional<SPSCert>> is_sps(const PlanarizedDrawing& d);
std::pair<bool, std::optional<AlternatingCert>> is_alternating_class(const PlanarizedDrawing& d);

}
