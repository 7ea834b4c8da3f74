#pragma once

#include <string>
#include <vector>

#include "kedge/deviations.hpp"
#include "kedge/drawing.hpp"

namespace kedge {

struct ScanViolation {
    std::string file;
    int n = 0;
    int face = -1;
    std::int64_t delta3_m = 0, delta2_m = 0, cr = 0, H = 0;
    DrawingSpec spec;  // full reproduction data
};

struct ScanDiagnostic {
    std::string file;
    std::string message;
};

struct ScanResult {
    std::vector<ScanViolation> violations;
    std::vector<ScanDiagnostic> errors;
    int files_scanned = 0;
};

// Scans drawing files for faces violating delta3_m >= delta2_m.  Files are
// processed in the given order and results merged deterministically; `jobs`
// <= 0 picks a default from KEDGE_SCAN_JOBS or the hardware.
ScanResult scan_conjecture(const std::vector<std::string>& files, int jobs = 0);

// Fixed columns: file,n,face_id,delta3_m,delta2_m,cr,H_n
std::string violation_csv(const ScanResult& r);

// Self-contained reproduction record for one violation (embeds the drawing).
std::string violation_json(const ScanViolation& v);

}
