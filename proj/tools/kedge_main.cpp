#include <algorithm>
#include <filesystem>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"

#include "kedge/deviations.hpp"
#include "kedge/generators.hpp"
#include "kedge/io.hpp"
#include "kedge/kedges.hpp"
#include "kedge/scan.hpp"
#include "kedge/shell.hpp"
#include "kedge/version.hpp"

namespace fs = std::filesystem;
using namespace kedge;

namespace {

PageAssignment parse_pages(int n, const std::string& s) {
    PageAssignment p{n, {}};
    if (static_cast<int>(s.size()) != n * (n - 1) / 2)
        throw Error(ErrorKind::InvalidSpec, "--pages needs one T/B per edge in lex order");
    for (char c : s) {
        if (c != 'T' && c != 'B')
            throw Error(ErrorKind::InvalidSpec, "--pages characters must be T or B");
        p.top.push_back(c == 'T');
    }
    return p;
}

int run_gen(const std::string& kind, int n, std::uint64_t seed, const std::string& pages_str,
            bool optimize, std::uint64_t budget, const std::string& out) {
    DrawingSpec spec;
    if (kind == "convex") {
        spec = gen_convex(n);
    } else if (kind == "cylindrical") {
        spec = gen_cylindrical(n);
    } else if (kind == "random") {
        spec = gen_random(n, seed);
    } else if (kind == "twopage") {
        PageAssignment pages;
        if (!pages_str.empty())
            pages = parse_pages(n, pages_str);
        else if (optimize)
            pages = search_twopage_optimal(n, budget, seed).pages;
        else
            throw Error(ErrorKind::InvalidSpec, "twopage needs --pages or --optimize");
        spec = gen_twopage(n, pages);
        if (pages_str.empty()) spec.meta.seed = seed;
    } else {
        throw Error(ErrorKind::InvalidSpec, "unknown kind " + kind);
    }
    auto d = PlanarizedDrawing::build(spec);  // never emit an invalid file
    write_file(out, serialize_drawing(spec));
    std::cout << "n=" << d.n() << " cr=" << d.cr() << " H=" << harary_hill(n) << "\n";
    return 0;
}

std::string stats_csv(const std::string& path, const DrawingSpec& spec,
                      const PlanarizedDrawing& d, const std::vector<int>& faces) {
    auto t = compute_k_table(d);
    std::ostringstream os;
    os << "# kedge " << kToolVersion << "\n";
    os << "# input " << path << " " << drawing_hash(spec) << "\n";
    os << "face,k,E_k,E2_k,E3_k,delta_k,delta2_k,delta3_k,cr,H,delta_cr\n";
    for (int f : faces) {
        auto p = profile_from_table(d, t, f);
        auto r = deviations_from_profile(p);
        for (int k = 0; k < static_cast<int>(p.E.size()); ++k) {
            os << f << "," << k << "," << p.E[k] << "," << p.E2[k] << "," << p.E3[k] << ",";
            if (k <= r.m)
                os << r.delta[k] << "," << r.delta2[k] << "," << r.delta3[k];
            else
                os << ",,";
            os << "," << p.cr << "," << p.H << "," << r.delta_cr << "\n";
        }
    }
    return os.str();
}

int run_stats(const std::string& path, int face, bool all_faces, const std::string& out) {
    auto spec = parse_drawing(read_file(path));
    auto d = PlanarizedDrawing::build(spec);
    std::vector<int> faces;
    if (all_faces)
        for (int f = 0; f < d.face_count(); ++f) faces.push_back(f);
    else
        faces.push_back(face < 0 ? 0 : face);
    for (int f : faces)
        if (f < 0 || f >= d.face_count()) throw Error(ErrorKind::InvalidSpec, "face out of range");

    std::string csv = stats_csv(path, spec, d, faces);
    if (out.empty() || out == "-")
        std::cout << csv;
    else
        write_file(out, csv);

    if (d.n() >= 5) {
        auto id1 = check_cr_identity(d);
        auto id2 = check_kdev_identities(d);
        if (!id1.ok || !id2.ok) {
            std::cerr << "identity check failed: " << (id1.ok ? id2.detail : id1.detail) << "\n";
            return 2;
        }
    }
    return 0;
}

int run_check(const std::string& path, const std::string& cls, const std::string& cert_out) {
    auto spec = parse_drawing(read_file(path));
    if (cls == "good") {
        auto rep = check_goodness(spec);
        if (rep.ok) {
            try {
                PlanarizedDrawing::build(spec);
            } catch (const Error& e) {
                std::cout << "class=good verdict=false (" << e.what() << ")\n";
                return 0;
            }
            std::cout << "class=good verdict=true\n";
        } else {
            std::cout << "class=good verdict=false (" << rep.what << ")\n";
        }
        return 0;
    }

    auto d = PlanarizedDrawing::build(spec);
    std::optional<Certificate> cert;
    bool verdict = false;
    if (cls == "seq-shellable") {
        auto [ok, c] = is_seq_shellable(d);
        verdict = ok;
        if (c) cert = *c;
    } else if (cls == "sps") {
        auto [ok, c] = is_sps(d);
        verdict = ok;
        if (c) cert = *c;
    } else if (cls == "alternating") {
        auto [ok, c] = is_alternating_class(d);
        verdict = ok;
        if (c) cert = *c;
    } else {
        throw Error(ErrorKind::InvalidSpec, "unknown class " + cls);
    }

    std::cout << "class=" << cls << " verdict=" << (verdict ? "true" : "false") << "\n";
    if (cert) {
        KEDGE_ASSERT(verify_certificate(d, *cert), "search emitted an unverifiable certificate");
        std::string text = serialize_certificate(*cert, drawing_hash(spec));
        if (!cert_out.empty()) {
            write_file(cert_out, text);
            std::cout << "certificate=" << cert_out << " (re-verified)\n";
        } else {
            std::cout << text;
        }
    }
    return 0;
}

int run_scan(const std::string& dir, const std::string& conjecture, const std::string& report,
             const std::string& repro_dir, int jobs) {
    if (conjecture != "con1")
        throw Error(ErrorKind::InvalidSpec, "only --conjecture con1 is supported");
    std::vector<std::string> files;
    for (const auto& entry : fs::directory_iterator(dir))
        if (entry.is_regular_file() && entry.path().extension() == ".json")
            files.push_back(entry.path().string());
    std::sort(files.begin(), files.end());

    auto result = scan_conjecture(files, jobs);
    std::string csv = violation_csv(result);
    if (report.empty() || report == "-")
        std::cout << csv;
    else
        write_file(report, csv);

    for (const auto& e : result.errors)
        std::cerr << "error: " << e.file << ": " << e.message << "\n";
    std::cerr << "scanned " << result.files_scanned << " file(s), " << result.violations.size()
              << " violation(s), " << result.errors.size() << " error(s)\n";

    if (!result.violations.empty()) {
        int i = 0;
        for (const auto& v : result.violations) {
            fs::path out = fs::path(repro_dir.empty() ? "." : repro_dir) /
                           ("violation" + std::to_string(i++) + ".json");
            write_file(out.string(), violation_json(v));
            std::cerr << "reproduction: " << out.string() << "\n";
        }
        return 3;
    }
    return result.errors.empty() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"crossing-number toolkit for good drawings of complete graphs"};
    app.set_version_flag("--version", kToolVersion);
    app.require_subcommand(1);

    auto* gen = app.add_subcommand("gen", "generate a drawing file");
    std::string kind, pages_str, out = "drawing.json";
    int n = 5;
    std::uint64_t seed = 0, budget = 2000;
    bool optimize = false;
    gen->add_option("--kind", kind, "convex|cylindrical|random|twopage")->required();
    gen->add_option("--n", n, "vertex count")->required();
    gen->add_option("--seed", seed, "rng seed");
    gen->add_option("--pages", pages_str, "T/B string over lex edges (twopage)");
    gen->add_flag("--optimize", optimize, "search for an optimal page assignment");
    gen->add_option("--budget", budget, "restart budget for the page search");
    gen->add_option("--out", out, "output file")->required();

    auto* stats = app.add_subcommand("stats", "per-face k-edge and deviation table");
    std::string stats_file, stats_out;
    int face = -1;
    bool all_faces = false;
    stats->add_option("file", stats_file, "drawing file")->required();
    stats->add_option("--face", face, "reference face id (default 0)");
    stats->add_flag("--all-faces", all_faces, "tabulate every face");
    stats->add_option("--out", stats_out, "write CSV here instead of stdout");

    auto* check = app.add_subcommand("check", "class membership with certificates");
    std::string check_file, cls, cert_out;
    check->add_option("file", check_file, "drawing file")->required();
    check->add_option("--class", cls, "good|seq-shellable|sps|alternating")->required();
    check->add_option("--cert-out", cert_out, "write the certificate JSON here");

    auto* scan = app.add_subcommand("scan", "scan a corpus directory for conjecture violations");
    std::string scan_dir, conjecture = "con1", report = "-", repro_dir = ".";
    int jobs = 0;
    scan->add_option("dir", scan_dir, "directory of drawing files")->required();
    scan->add_option("--conjecture", conjecture, "which conjecture to scan (con1)");
    scan->add_option("--report", report, "CSV report path ('-' for stdout)");
    scan->add_option("--repro-dir", repro_dir, "where violation reproductions go");
    scan->add_option("--jobs", jobs, "parallel workers (default: KEDGE_SCAN_JOBS or hardware)");

    CLI11_PARSE(app, argc, argv);
    try {
        if (gen->parsed()) return run_gen(kind, n, seed, pages_str, optimize, budget, out);
        if (stats->parsed()) return run_stats(stats_file, face, all_faces, stats_out);
        if (check->parsed()) return run_check(check_file, cls, cert_out);
        if (scan->parsed()) return run_scan(scan_dir, conjecture, report, repro_dir, jobs);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 1;
}
