#include "kedge/io.hpp"

#include <fstream>
#include <sstream>

#include "json.hpp"

namespace kedge {

using Json = nlohmann::ordered_json;

namespace {

Json spec_to_json(const DrawingSpec& spec) {
    const int n = spec.n();
    for (int i = 0; i < n; ++i)
        KEDGE_ASSERT(spec.vertices[i] == i, "files carry vertices labelled 0..n-1");
    Json j;
    j["format_version"] = 1;
    j["n"] = n;
    Json rots = Json::array();
    for (const auto& r : spec.rotations) rots.push_back(r);
    j["rotations"] = std::move(rots);
    Json edges = Json::array();
    for (const auto& e : spec.edges) {
        Json je;
        je["u"] = e.u;
        je["v"] = e.v;
        Json recs = Json::array();
        for (const auto& r : e.records) {
            Json jr;
            jr["other"] = Json::array({r.other_u, r.other_v});
            jr["index"] = r.index_on_other;
            jr["sign"] = r.sign;
            recs.push_back(std::move(jr));
        }
        je["crossings"] = std::move(recs);
        edges.push_back(std::move(je));
    }
    j["edges"] = std::move(edges);
    Json meta;
    if (!spec.meta.generator.empty()) meta["generator"] = spec.meta.generator;
    if (spec.meta.seed) meta["seed"] = *spec.meta.seed;
    if (!spec.meta.labels.empty()) meta["labels"] = spec.meta.labels;
    j["metadata"] = std::move(meta);
    return j;
}

DrawingSpec spec_from_json(const Json& j) {
    DrawingSpec spec;
    if (!j.is_object() || j.value("format_version", -1) != 1)
        throw Error(ErrorKind::ParseError, "missing or unsupported format_version");
    const int n = j.at("n").get<int>();
    if (n < 3 || n > 64) throw Error(ErrorKind::ParseError, "n out of range");
    spec.vertices.resize(n);
    for (int i = 0; i < n; ++i) spec.vertices[i] = i;
    for (const auto& r : j.at("rotations")) spec.rotations.push_back(r.get<std::vector<Vertex>>());
    for (const auto& je : j.at("edges")) {
        EdgeCrossings e;
        e.u = je.at("u").get<Vertex>();
        e.v = je.at("v").get<Vertex>();
        for (const auto& jr : je.at("crossings")) {
            CrossingRecord rec;
            const auto& other = jr.at("other");
            if (!other.is_array() || other.size() != 2)
                throw Error(ErrorKind::ParseError, "crossing 'other' must be a pair");
            rec.other_u = other[0].get<Vertex>();
            rec.other_v = other[1].get<Vertex>();
            rec.index_on_other = jr.at("index").get<int>();
            rec.sign = jr.at("sign").get<int>();
            e.records.push_back(rec);
        }
        spec.edges.push_back(std::move(e));
    }
    if (j.contains("metadata")) {
        const auto& m = j.at("metadata");
        spec.meta.generator = m.value("generator", std::string{});
        if (m.contains("seed")) spec.meta.seed = m.at("seed").get<std::uint64_t>();
        if (m.contains("labels"))
            spec.meta.labels = m.at("labels").get<std::map<std::string, std::string>>();
    }
    return spec;
}

std::uint64_t fnv1a(const std::string& s) {
    std::uint64_t h = 1469598103934665603ull;
    for (unsigned char c : s) {
        h ^= c;
        h *= 1099511628211ull;
    }
    return h;
}

Json simple_to_json(const SimpleSequenceCert& c) {
    return Json{{"v", c.v}, {"face", c.face}, {"seq", c.seq}};
}

SimpleSequenceCert simple_from_json(const Json& j) {
    return {j.at("v").get<Vertex>(), j.at("face").get<int>(),
            j.at("seq").get<std::vector<Vertex>>()};
}

Json shell_to_json(const SeqShellCert& c) {
    return Json{{"face", c.face}, {"seq", c.seq}, {"simple_seqs", c.simple_seqs}};
}

SeqShellCert shell_from_json(const Json& j) {
    return {j.at("face").get<int>(), j.at("seq").get<std::vector<Vertex>>(),
            j.at("simple_seqs").get<std::vector<std::vector<Vertex>>>()};
}

Json pair_to_json(const PairSequenceCert& c) {
    Json wit = Json::array();
    for (auto [j, f] : c.face_witnesses) wit.push_back(Json::array({j, f}));
    return Json{{"v", c.v}, {"seq", c.seq}, {"face_witnesses", std::move(wit)}};
}

PairSequenceCert pair_from_json(const Json& j) {
    PairSequenceCert c;
    c.v = j.at("v").get<Vertex>();
    c.seq = j.at("seq").get<std::vector<Vertex>>();
    for (const auto& w : j.at("face_witnesses"))
        c.face_witnesses.push_back({w.at(0).get<int>(), w.at(1).get<int>()});
    return c;
}

}  // namespace

std::string serialize_drawing(const DrawingSpec& spec) {
    return spec_to_json(spec).dump(2) + "\n";
}

DrawingSpec parse_drawing(const std::string& text) {
    try {
        return spec_from_json(Json::parse(text));
    } catch (const nlohmann::json::exception& e) {
        throw Error(ErrorKind::ParseError, e.what());
    }
}

std::string drawing_hash(const DrawingSpec& spec) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "fnv1a:%016llx",
                  static_cast<unsigned long long>(fnv1a(serialize_drawing(spec))));
    return buf;
}

std::string serialize_certificate(const Certificate& cert, const std::string& hash) {
    Json j;
    j["format_version"] = 1;
    std::visit(
        [&](const auto& c) {
            using T = std::decay_t<decltype(c)>;
            if constexpr (std::is_same_v<T, SimpleSequenceCert>) {
                j["type"] = "simple-sequence";
                j["drawing_hash"] = hash;
                j.update(simple_to_json(c));
            } else if constexpr (std::is_same_v<T, SeqShellCert>) {
                j["type"] = "seq-shell";
                j["drawing_hash"] = hash;
                j.update(shell_to_json(c));
            } else if constexpr (std::is_same_v<T, PairSequenceCert>) {
                j["type"] = "pair-sequence";
                j["drawing_hash"] = hash;
                j.update(pair_to_json(c));
            } else if constexpr (std::is_same_v<T, SPSCert>) {
                j["type"] = "sps";
                j["drawing_hash"] = hash;
                j["v"] = c.v;
                j["pair_seq"] = pair_to_json(c.pair_seq);
                j["sub_shell"] = shell_to_json(c.sub_shell);
            } else {
                j["type"] = "alternating";
                j["drawing_hash"] = hash;
                Json steps = Json::array();
                for (const auto& st : c.steps) {
                    Json js{{"v", st.v}, {"kind", st.kind}};
                    if (st.kind == 1) js["pair"] = pair_to_json(st.pair);
                    if (st.kind == 2) js["simple"] = simple_to_json(st.simple);
                    steps.push_back(std::move(js));
                }
                j["steps"] = std::move(steps);
            }
        },
        cert);
    return j.dump(2) + "\n";
}

Certificate parse_certificate(const std::string& text, std::string* hash_out) {
    try {
        Json j = Json::parse(text);
        if (j.value("format_version", -1) != 1)
            throw Error(ErrorKind::ParseError, "missing or unsupported format_version");
        if (hash_out) *hash_out = j.value("drawing_hash", std::string{});
        const std::string type = j.at("type").get<std::string>();
        if (type == "simple-sequence") return simple_from_json(j);
        if (type == "seq-shell") return shell_from_json(j);
        if (type == "pair-sequence") return pair_from_json(j);
        if (type == "sps") {
            SPSCert c;
            c.v = j.at("v").get<Vertex>();
            c.pair_seq = pair_from_json(j.at("pair_seq"));
            c.sub_shell = shell_from_json(j.at("sub_shell"));
            return c;
        }
        if (type == "alternating") {
            AlternatingCert c;
            for (const auto& js : j.at("steps")) {
                AlternatingStep st;
                st.v = js.at("v").get<Vertex>();
                st.kind = js.at("kind").get<int>();
                if (st.kind == 1) st.pair = pair_from_json(js.at("pair"));
                if (st.kind == 2) st.simple = simple_from_json(js.at("simple"));
                c.steps.push_back(std::move(st));
            }
            return c;
        }
        throw Error(ErrorKind::ParseError, "unknown certificate type " + type);
    } catch (const nlohmann::json::exception& e) {
        throw Error(ErrorKind::ParseError, e.what());
    }
}

bool verify_certificate_text(const PlanarizedDrawing& d, const std::string& text) {
    std::string hash;
    Certificate cert = parse_certificate(text, &hash);
    if (hash != drawing_hash(d.spec()))
        throw Error(ErrorKind::MalformedCert, "certificate bound to a different drawing");
    return verify_certificate(d, cert);
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error(ErrorKind::ParseError, "cannot read " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw Error(ErrorKind::ParseError, "cannot write " + path);
    out << content;
}

}
