#include "doctest.h"

#include "kedge/deviations.hpp"
#include "kedge/generators.hpp"
#include "kedge/shell.hpp"

using namespace kedge;

TEST_CASE("deviations of the convex K_5") {
    auto d = PlanarizedDrawing::build(gen_convex(5));
    for (int f = 0; f < d.face_count(); ++f) {
        auto r = deviations(d, f);
        CHECK(r.m == 0);
        CHECK(r.delta == std::vector<std::int64_t>{2});   // E_0 = 5 everywhere
        CHECK(r.delta3 == std::vector<std::int64_t>{2});
        CHECK(r.delta_cr == 4);
        CHECK(r.delta_cr == 2 * r.d3_at(0));
        CHECK(r.conjecture_ok);
    }
}

TEST_CASE("optimal two-page K_7 has zero top deviation on every face") {
    auto pages = search_twopage_optimal(7, 500, 9).pages;
    auto d = PlanarizedDrawing::build(gen_twopage(7, pages));
    REQUIRE(d.cr() == 9);
    for (int f = 0; f < d.face_count(); ++f) {
        auto r = deviations(d, f);
        CHECK(r.delta_cr == 0);
        CHECK(r.d3_at(1) == 0);
    }
}

TEST_CASE("deviation identities across the corpus sample") {
    for (auto spec : {gen_convex(5), gen_convex(6), gen_cylindrical(7), gen_random(8, 5)}) {
        auto d = PlanarizedDrawing::build(spec);
        CHECK(check_kdev_identities(d).ok);
    }
}

TEST_CASE("Kleitman parity for odd drawings") {
    for (std::uint64_t seed : {1ull, 2ull, 3ull}) {
        auto d = PlanarizedDrawing::build(gen_random(7, seed));
        CHECK(parity_check(d).ok);
    }
    auto even = PlanarizedDrawing::build(gen_convex(6));
    CHECK_THROWS_AS(parity_check(even), Error);
}

TEST_CASE("dbgzero on real and synthetic reports") {
    auto d = PlanarizedDrawing::build(gen_cylindrical(9));
    for (int f = 0; f < d.face_count(); ++f) {
        auto v = check_dbgzero(d, f);
        CHECK(v.state == DbgzeroState::Ok);
    }

    DeviationReport hypo_fail;
    hypo_fail.n = 8;
    hypo_fail.m = 2;
    hypo_fail.delta = {0, 0, 0};
    hypo_fail.delta2 = {0, 0, 5};
    hypo_fail.delta3 = {0, 0, 1};
    hypo_fail.delta_cr = 1;
    hypo_fail.conjecture_ok = false;
    CHECK(check_dbgzero_report(hypo_fail).state == DbgzeroState::HypothesisNotMet);

    DeviationReport lemma_fail;  // hypotheses hold, conclusion forced to fail
    lemma_fail.n = 8;
    lemma_fail.m = 2;
    lemma_fail.delta = {0, 0, 0};
    lemma_fail.delta2 = {0, -1, 2};
    lemma_fail.delta3 = {0, -1, 2};
    lemma_fail.delta_cr = 1;
    lemma_fail.conjecture_ok = true;
    CHECK(check_dbgzero_report(lemma_fail).state == DbgzeroState::LemmaViolation);

    DeviationReport cr_fail = lemma_fail;
    cr_fail.delta_cr = -1;
    CHECK(check_dbgzero_report(cr_fail).state == DbgzeroState::HypothesisNotMet);
}

TEST_CASE("conjecture scan finds nothing on the families") {
    for (auto spec : {gen_convex(5), gen_convex(7), gen_cylindrical(8), gen_random(6, 77),
                      gen_random(9, 78)}) {
        auto d = PlanarizedDrawing::build(spec);
        CHECK(conjecture_violations(d).empty());
    }
}

TEST_CASE("n = 5 can never violate the conjecture") {
    // m = 0 collapses both cumulations to delta_0
    for (std::uint64_t seed = 1; seed <= 10; ++seed) {
        auto d = PlanarizedDrawing::build(gen_random(5, seed));
        auto r = deviations(d, 0);
        CHECK(r.d3_at(0) == r.d2_at(0));
        CHECK(conjecture_violations(d).empty());
    }
}

TEST_CASE("proposition pipeline applies on both parities") {
    auto d7 = PlanarizedDrawing::build(gen_cylindrical(7));
    auto v7 = check_proposition_pipeline(d7);
    CHECK(v7.state == PipelineState::AppliedOk);

    auto pages = search_twopage_optimal(8, 500, 4).pages;
    auto d8 = PlanarizedDrawing::build(gen_twopage(8, pages));
    auto v8 = check_proposition_pipeline(d8);
    CHECK(v8.state == PipelineState::AppliedOk);

    auto d5 = PlanarizedDrawing::build(gen_convex(5));
    CHECK(check_proposition_pipeline(d5).state == PipelineState::AppliedOk);
}
