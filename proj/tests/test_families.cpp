#include <doctest.h>

#include <stdexcept>

#include "phenylo/cuts.hpp"
#include "phenylo/families.hpp"
#include "phenylo/isomorphism.hpp"
#include "phenylo/molecular_graph.hpp"

using namespace phenylo;

TEST_SUITE("families") {

TEST_CASE("linear") {
    CHECK(expand(linear(1)).edge_count() == 6);
    CHECK(mostar_cut(linear(4)) == 240);
    CHECK(classify_hexagons(linear(7)).turn_count == 0);
    CHECK_THROWS_AS(linear(0), std::invalid_argument);
}

TEST_CASE("chain_from_turns") {
    CHECK(are_isomorphic(expand(chain_from_turns("SSS")), expand(linear(5))));
    CHECK(are_isomorphic(expand(chain_from_turns("LR")), expand(cl({1, 0, 1}))));
    CHECK(certificate(expand(chain_from_turns("LL"))) ==
          certificate(expand(chain_from_turns("RR"))));
    CHECK(chain_from_turns("").h == 2);
    CHECK_THROWS_AS(chain_from_turns("LX"), std::invalid_argument);
}

TEST_CASE("segment_chain round-trips its spec") {
    for (SegmentSpec spec : {SegmentSpec{{1, 3}, {}}, SegmentSpec{{1, 2, 1}, {true}},
                             SegmentSpec{{2, 0, 2}, {false}},
                             SegmentSpec{{1, 1, 1, 1}, {true, false}}}) {
        PhenyleneTree t = segment_chain(spec);
        CHECK(validate(t).empty());
        auto segs = segments(t);
        REQUIRE(segs.size() == spec.t_values.size());
        for (size_t i = 0; i < segs.size(); ++i) {
            int expected = spec.t_values[i] + (i == 0 || i + 1 == segs.size() ? 1 : 2);
            CHECK(segs[i].length == expected);
            if (i > 0 && i + 1 < segs.size())
                CHECK((segs[i].kind == SegmentKind::Zigzag) == static_cast<bool>(spec.zigzag[i - 1]));
        }
    }
}

TEST_CASE("cl values") {
    CHECK(mostar_cut(cl({1, 3})) == 480);
    for (int h = 5; h <= 12; ++h)
        CHECK(mostar_cut(cl({1, h - 4, 1})) == mostar_cut(cl({1, h - 2})));
    CHECK(mostar_cut(cl({2, 3})) == 768);
    CHECK(cl({1, 0, 3}).h == 6);
    CHECK_THROWS_AS(cl({0, 3}), std::invalid_argument);  // terminal t must be >= 1
}

TEST_CASE("pl") {
    CHECK(mostar_cut(pl(1, 1, 1)) == 288);
    CHECK(mostar_cut(pl(1, 1, 4)) == 960);
    CHECK(mostar_cut(pl(2, 2, 2)) == 1008);
    CHECK(classify_hexagons(pl(2, 3, 4)).full_count == 1);
    CHECK(pl(2, 3, 4).h == 10);
    CHECK_THROWS_AS(pl(2, 1, 1), std::invalid_argument);
}

TEST_CASE("second_minimal_set") {
    FamilySet s6 = second_minimal_set(6);
    REQUIRE(s6.members.size() == 2);
    CHECK(s6.complete);
    for (const NamedTree& m : s6.members) CHECK(mostar_cut(m.tree) == 696);
    for (int h : {4, 5, 8}) {
        FamilySet s = second_minimal_set(h);
        REQUIRE(s.members.size() == 2);
        long long mo0 = mostar_cut(s.members[0].tree);
        CHECK(mo0 == mostar_cut(s.members[1].tree));
        if (h == 4) CHECK(mo0 == 312);
        CHECK_FALSE(are_isomorphic(expand(s.members[0].tree), expand(s.members[1].tree)));
    }
    CHECK_THROWS_AS(second_minimal_set(3), std::invalid_argument);
}

TEST_CASE("third_minimal_chain_set") {
    FamilySet s8 = third_minimal_chain_set(8);
    REQUIRE(s8.members.size() == 7);
    CHECK(s8.complete);
    for (const NamedTree& m : s8.members) CHECK(mostar_cut(m.tree) == 1344);

    FamilySet s6 = third_minimal_chain_set(6);
    CHECK(s6.members.size() == 7);
    for (const NamedTree& m : s6.members) {
        CHECK(mostar_cut(m.tree) == 768);
        CHECK_FALSE(are_isomorphic(expand(m.tree), expand(linear(6))));
    }
    for (size_t i = 0; i < s8.members.size(); ++i)
        for (size_t k = i + 1; k < s8.members.size(); ++k)
            CHECK(certificate(expand(s8.members[i].tree)) !=
                  certificate(expand(s8.members[k].tree)));
    CHECK_THROWS_AS(third_minimal_chain_set(4), std::invalid_argument);
}

TEST_CASE("parse_family_spec") {
    CHECK(parse_family_spec("linear:6").h == 6);
    CHECK(parse_family_spec("chain:LRL").h == 5);
    CHECK(parse_family_spec("cl:1,0,3").h == 6);
    CHECK(parse_family_spec("pl:1,1,3").h == 6);
    for (const char* bad : {"pl:2,1,1", "linear:0", "cl:", "nope:3", "pl:1,1", "chain:XY"})
        CHECK_THROWS_AS(parse_family_spec(bad), std::invalid_argument);
}

TEST_CASE("recognize_family") {
    CHECK(recognize_family(linear(5)).value() == "L_5");
    CHECK(recognize_family(pl(1, 2, 2)).value() == "PL(1,2,2)");
    CHECK(recognize_family(cl({1, 4})).value() == "CL(1,4)");
    // A mirror image is the same class and keeps the name.
    CHECK(recognize_family(mirror(cl({1, 2, 1}))).value() == "CL(1,2,1)");
}

}  // TEST_SUITE
