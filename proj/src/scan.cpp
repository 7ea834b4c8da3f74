#include "kedge/scan.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <sstream>
#include <thread>

#include "json.hpp"

#include "kedge/io.hpp"
#include "kedge/version.hpp"

namespace kedge {

namespace {

int default_jobs() {
    if (const char* env = std::getenv("KEDGE_SCAN_JOBS")) {
        int v = std::atoi(env);
        if (v >= 1) return std::min(v, 64);
    }
    unsigned hw = std::thread::hardware_concurrency();
    return hw ? std::min<int>(hw, 16) : 1;
}

struct FileOutcome {
    std::vector<ScanViolation> violations;
    std::string error;
    bool ok = false;
};

FileOutcome scan_one(const std::string& path) {
    FileOutcome out;
    try {
        auto spec = parse_drawing(read_file(path));
        auto d = PlanarizedDrawing::build(spec);
        for (const auto& hit : conjecture_violations(d)) {
            ScanViolation v;
            v.file = path;
            v.n = d.n();
            v.face = hit.face;
            v.delta3_m = hit.delta3_m;
            v.delta2_m = hit.delta2_m;
            v.cr = d.cr();
            v.H = harary_hill(d.n());
            v.spec = spec;
            out.violations.push_back(std::move(v));
        }
        out.ok = true;
    } catch (const std::exception& e) {
        out.error = e.what();
    }
    return out;
}

}  // namespace

ScanResult scan_conjecture(const std::vector<std::string>& files, int jobs) {
    if (jobs <= 0) jobs = default_jobs();
    jobs = std::max(1, std::min<int>(jobs, static_cast<int>(files.size() ? files.size() : 1)));

    std::vector<FileOutcome> outcomes(files.size());
    std::vector<std::thread> pool;
    std::atomic<std::size_t> next{0};
    for (int t = 0; t < jobs; ++t)
        pool.emplace_back([&] {
            for (;;) {
                std::size_t i = next.fetch_add(1);
                if (i >= files.size()) return;
                outcomes[i] = scan_one(files[i]);
            }
        });
    for (auto& th : pool) th.join();

    ScanResult r;
    for (std::size_t i = 0; i < files.size(); ++i) {
        if (outcomes[i].ok) {
            ++r.files_scanned;
            for (auto& v : outcomes[i].violations) r.violations.push_back(std::move(v));
        } else {
            r.errors.push_back({files[i], outcomes[i].error});
        }
    }
    return r;
}

std::string violation_csv(const ScanResult& r) {
    std::ostringstream os;
    os << "# kedge " << kToolVersion << "\n";
    os << "file,n,face_id,delta3_m,delta2_m,cr,H_n\n";
    for (const auto& v : r.violations)
        os << v.file << "," << v.n << "," << v.face << "," << v.delta3_m << "," << v.delta2_m
           << "," << v.cr << "," << v.H << "\n";
    return os.str();
}

std::string violation_json(const ScanViolation& v) {
    nlohmann::ordered_json j;
    j["tool_version"] = kToolVersion;
    j["file"] = v.file;
    j["n"] = v.n;
    j["face_id"] = v.face;
    j["delta3_m"] = v.delta3_m;
    j["delta2_m"] = v.delta2_m;
    j["cr"] = v.cr;
    j["H_n"] = v.H;
    j["drawing"] = nlohmann::ordered_json::parse(serialize_drawing(v.spec));
    return j.dump(2) + "\n";
}

}
