#include "doctest.h"

#include "kedge/generators.hpp"
#include "kedge/io.hpp"
#include "kedge/shell.hpp"

using namespace kedge;

TEST_CASE("drawing files round-trip") {
    for (auto spec : {gen_convex(5), gen_cylindrical(6), gen_random(7, 13)}) {
        std::string text = serialize_drawing(spec);
        DrawingSpec back = parse_drawing(text);
        CHECK(back == spec);
        CHECK(serialize_drawing(back) == text);  // canonical form is a fixed point
        CHECK(drawing_hash(back) == drawing_hash(spec));
    }
}

TEST_CASE("hashes separate different drawings") {
    CHECK(drawing_hash(gen_convex(5)) != drawing_hash(gen_convex(6)));
    CHECK(drawing_hash(gen_random(6, 1)) != drawing_hash(gen_random(6, 2)));
}

TEST_CASE("parser rejects garbage") {
    CHECK_THROWS_AS(parse_drawing("not json"), Error);
    CHECK_THROWS_AS(parse_drawing("{}"), Error);
    CHECK_THROWS_AS(parse_drawing("{\"format_version\": 2}"), Error);
    CHECK_THROWS_AS(parse_drawing("{\"format_version\":1,\"n\":100}"), Error);
}

TEST_CASE("certificates round-trip and stay bound to their drawing") {
    auto spec = gen_convex(6);
    auto d = PlanarizedDrawing::build(spec);
    auto [ok, cert] = is_seq_shellable(d);
    REQUIRE(ok);

    std::string hash = drawing_hash(spec);
    std::string text = serialize_certificate(Certificate{*cert}, hash);
    std::string hash_back;
    Certificate back = parse_certificate(text, &hash_back);
    CHECK(hash_back == hash);
    CHECK(std::get<SeqShellCert>(back) == *cert);
    CHECK(verify_certificate_text(d, text));

    auto other = PlanarizedDrawing::build(gen_convex(7));
    CHECK_THROWS_AS(verify_certificate_text(other, text), Error);
}

TEST_CASE("every certificate type serializes") {
    auto d5 = PlanarizedDrawing::build(gen_convex(5));
    std::string hash = drawing_hash(d5.spec());

    auto pair = find_pair_sequence(d5, 0);
    REQUIRE(pair);
    CHECK(verify_certificate_text(d5, serialize_certificate(Certificate{*pair}, hash)));

    auto simple = find_simple_sequence(d5, 0, 0, 1);
    if (simple)
        CHECK(verify_certificate_text(d5, serialize_certificate(Certificate{*simple}, hash)));

    auto [sps_ok, sps_cert] = is_sps(d5);
    REQUIRE(sps_ok);
    CHECK(verify_certificate_text(d5, serialize_certificate(Certificate{*sps_cert}, hash)));

    auto [alt_ok, alt_cert] = is_alternating_class(d5);
    REQUIRE(alt_ok);
    CHECK(verify_certificate_text(d5, serialize_certificate(Certificate{*alt_cert}, hash)));
}
