#include <doctest.h>

#include <stdexcept>

#include <algorithm>

#include "phenylo/closed_forms.hpp"
#include "phenylo/verify.hpp"

using namespace phenylo;

namespace {

bool has_label(const ValueGroup& g, const std::string& name) {
    return std::find(g.labels.begin(), g.labels.end(), name) != g.labels.end();
}

}  // namespace

TEST_SUITE("verify") {

TEST_CASE("ranking h=6: first four groups") {
    RankingReport r = rank(6);
    REQUIRE(r.groups.size() >= 4);
    CHECK(r.groups[0].value == 576);
    CHECK(r.groups[0].labels == std::vector<std::string>{"L_6"});
    CHECK(r.groups[1].value == 696);
    CHECK(r.groups[1].members.size() == 2);
    CHECK(has_label(r.groups[1], "CL(1,4)"));
    CHECK(has_label(r.groups[1], "CL(1,2,1)"));
    CHECK(r.groups[2].value == 720);
    CHECK(r.groups[2].labels == std::vector<std::string>{"PL(1,1,3)"});
    CHECK(r.groups[3].value == 768);
    CHECK(has_label(r.groups[3], "PL(1,2,2)"));
    CHECK(has_label(r.groups[3], "CL(2,3)"));
    for (size_t i = 1; i < r.groups.size(); ++i)
        CHECK(r.groups[i].value > r.groups[i - 1].value);
}

TEST_CASE("ranking h=4") {
    RankingReport r = rank(4);
    REQUIRE(r.groups.size() == 4);
    CHECK(r.groups[0].value == 240);
    CHECK(r.groups[1].value == 288);
    CHECK(r.groups[2].value == 312);
    CHECK(r.groups[2].members.size() == 2);
}

TEST_CASE("theorem verdicts") {
    for (int h : {2, 4, 6}) CHECK(verify_min(h).pass);

    Verdict v = verify_second(4);
    CHECK(v.pass);
    CHECK(v.observed_value == 288);
    v = verify_second(5);
    CHECK(v.pass);
    CHECK(v.observed_value == 480);
    v = verify_third(5);
    CHECK(v.pass);
    CHECK(v.observed_value == 504);
    v = verify_third(6);
    CHECK(v.pass);
    CHECK(v.observed_value == 720);

    RankingReport r7 = rank(7);
    v = verify_second(r7);
    CHECK(v.pass);
    CHECK(v.observed_value == 936);
    v = verify_third(r7);
    CHECK(v.pass);
    CHECK(v.observed_value == 960);
}

TEST_CASE("small h reported without a claim") {
    Verdict v = verify_second(3);
    CHECK_FALSE(v.asserted);
    CHECK(v.pass);
    CHECK(v.observed_value == 168);
    CHECK(v.observed_members == std::vector<std::string>{"CL(1,1)"});

    v = verify_third(4);
    CHECK_FALSE(v.asserted);
    CHECK(v.pass);

    v = verify_min(1);
    CHECK_FALSE(v.asserted);
}

TEST_CASE("verdicts stable across the overlap filter") {
    // h=7 is the smallest size with a self-overlapping class.
    EnumerateOptions planar;
    planar.planar_only = true;
    RankingReport all = rank(7);
    RankingReport filtered = rank(7, planar);
    CHECK(verify_min(all).pass == verify_min(filtered).pass);
    CHECK(verify_second(all).pass == verify_second(filtered).pass);
    CHECK(verify_third(all).pass == verify_third(filtered).pass);
}

TEST_CASE("attachment lemma: equality characterization") {
    // Terminal-hexagon edge, perpendicular cut: r_s=0, r_t=3 with k=2 gives
    // the equality case.
    Lemma31Result r = check_lemma_3_1(linear(4), 3, 2, 2);
    CHECK(r.pass);
    CHECK(r.r_s == 0);
    CHECK(r.r_t == 3);
    CHECK(r.equality_expected);
    CHECK(r.mo_p1 == r.mo_p2);
    CHECK(r.mo_p2 < r.mo_p3);

    // Turn-hexagon edge: both sides populated, min > 0, strict ordering.
    r = check_lemma_3_1(chain_from_turns("L"), 1, 4, 2);
    CHECK(r.pass);
    CHECK(std::min(r.r_s, r.r_t) > 0);
    CHECK_FALSE(r.equality_expected);
    CHECK(r.mo_p2 < r.mo_p1);

    CHECK_THROWS_AS(check_lemma_3_1(linear(3), 0, 0, 2), std::invalid_argument);  // occupied
    CHECK_THROWS_AS(check_lemma_3_1(linear(3), 2, 2, 1), std::invalid_argument);  // k < 2
    CHECK_THROWS_AS(check_lemma_3_1(linear(2), 1, 3, 5), std::invalid_argument);  // n < k-1
}

TEST_CASE("straightening at a turn hexagon") {
    PhenyleneTree turn3 = chain_from_turns("L");
    CHECK(check_corollary_3_2(turn3, 1, linear(2)).pass);
    CHECK(check_corollary_3_2(turn3, 1, chain_from_turns("L")).pass);
    CHECK(check_corollary_3_2(turn3, 1, cl({1, 0, 1})).pass);
    CHECK_THROWS_AS(check_corollary_3_2(turn3, 0, linear(2)), std::invalid_argument);
    CHECK_THROWS_AS(check_corollary_3_2(linear(3), 1, linear(2)), std::invalid_argument);
    CHECK_THROWS_AS(check_corollary_3_2(turn3, 1, pl(1, 1, 1)), std::invalid_argument);
}

TEST_CASE("branch merging on a terminal hexagon") {
    CHECK(check_lemma_3_3(linear(2), 1, 1, 1).pass);
    CHECK(check_lemma_3_3(linear(3), 2, 1, 2).pass);
    CHECK(check_lemma_3_3(cl({1, 1}), 2, 1, 1).pass);
    CHECK_THROWS_AS(check_lemma_3_3(linear(3), 2, 0, 1), std::invalid_argument);
    CHECK_THROWS_AS(check_lemma_3_3(linear(2), 1, 2, 2), std::invalid_argument);  // n < max
    CHECK_THROWS_AS(check_lemma_3_3(linear(4), 1, 1, 1), std::invalid_argument);  // not terminal
}

TEST_CASE("single-turn chain ordering in the turn position") {
    CHECK(check_lemma_4_1(4).pass);  // single j: vacuous
    CHECK(check_lemma_4_1(5).pass);
    CHECK(mostar_cut(cl({1, 3})) == 480);
    CHECK(mostar_cut(cl({2, 2})) == 528);
    CHECK(check_lemma_4_1(8).pass);
    CHECK_THROWS_AS(check_lemma_4_1(3), std::invalid_argument);
}

TEST_CASE("branched-vs-chain trichotomy") {
    for (int h : {5, 6, 7, 8}) CHECK(check_lemma_5_2(h).pass);
    CHECK(mostar_cut(pl(1, 2, 2)) == mostar_cut(cl({2, 3})));        // the h=6 tie
    CHECK(mostar_cut(pl(1, 1, 4)) < mostar_cut(cl({2, 4})));         // h=7
    CHECK(mostar_cut(pl(2, 2, 2)) < mostar_cut(cl({2, 4})));         // h=7
    CHECK(mostar_cut(pl(1, 2, 3)) > mostar_cut(cl({2, 4})));         // h=7
    CHECK(mostar_cut(pl(1, 2, 4)) > mostar_cut(cl({2, 5})));         // h=8
    CHECK_THROWS_AS(check_lemma_5_2(4), std::invalid_argument);
}

TEST_CASE("branched trees always above the single-turn chain") {
    for (int h = 4; h <= 8; ++h) {
        long long second_chain = mostar_cut(cl({1, h - 2}));
        for (int j = 1; j <= h; ++j)
            for (int k = j; j + 2 * k + 1 <= h; ++k) {
                int n = h - 1 - j - k;
                if (n < k) continue;
                long long mo = mostar_cut(pl(j, k, n));
                if (n >= 2)
                    CHECK(mo > second_chain);
                else
                    CHECK(mo < second_chain);  // only (1,1,1)
            }
    }
}

TEST_CASE("random generators honor the size and shape contracts") {
    std::mt19937_64 rng(31);
    for (int trial = 0; trial < 20; ++trial) {
        PhenyleneTree t = random_tree(1 + trial % 8, rng);
        CHECK(validate(t).empty());
        PhenyleneTree c = random_chain(1 + trial % 8, rng);
        CHECK(validate(c).empty());
        CHECK(classify_hexagons(c).is_chain);
    }
}

TEST_CASE("trial suites are deterministic per seed") {
    TrialSummary a = run_lemma_3_1_trials(50, 99);
    TrialSummary b = run_lemma_3_1_trials(50, 99);
    CHECK(a.pass);
    CHECK(a.failures == b.failures);
    CHECK(a.detail == b.detail);
    CHECK(run_corollary_3_2_trials(50, 99).pass);
    CHECK(run_lemma_3_3_trials(50, 99).pass);
}

}  // TEST_SUITE
