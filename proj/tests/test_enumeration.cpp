#include <doctest.h>

#include <stdexcept>

#include <cstdlib>
#include <set>

#include "naive_oracle.hpp"
#include "phenylo/enumeration.hpp"
#include "phenylo/families.hpp"
#include "phenylo/isomorphism.hpp"

using namespace phenylo;

TEST_SUITE("enumeration") {

TEST_CASE("class counts at small sizes") {
    int expected[] = {0, 1, 1, 2, 5, 12};
    for (int h = 1; h <= 5; ++h) CHECK(enumerate_phenylenes(h).total_classes == expected[h]);
}

TEST_CASE("naive pairwise-isomorphism oracle agrees for h <= 5") {
    for (int h = 1; h <= 5; ++h)
        CHECK(testing::naive_enumerate(h).size() ==
              static_cast<size_t>(enumerate_phenylenes(h).total_classes));
}

TEST_CASE("h=4 classes are the expected five") {
    ClassCatalog c = enumerate_phenylenes(4);
    REQUIRE(c.total_classes == 5);
    std::set<std::string> got;
    for (const CatalogEntry& e : c.entries) got.insert(e.cert);
    std::set<std::string> expected;
    for (const PhenyleneTree& t : {linear(4), cl({1, 2}), chain_from_turns("LR"),
                                   chain_from_turns("LL"), pl(1, 1, 1)})
        expected.insert(certificate(expand(t)));
    CHECK(got == expected);
    CHECK(c.chain_classes == 4);
    CHECK(c.by_full_hexagons.at(0) == 4);
    CHECK(c.by_full_hexagons.at(1) == 1);
}

TEST_CASE("chain classes equal distinct certificates over turn words") {
    for (int h = 2; h <= 7; ++h) {
        std::set<std::string> certs;
        int n = h - 2;
        std::string word(n, 'S');
        // Every word over {S,L,R} of length h-2.
        std::vector<int> digits(n, 0);
        while (true) {
            for (int i = 0; i < n; ++i) word[i] = "SLR"[digits[i]];
            certs.insert(certificate(expand(chain_from_turns(word))));
            int i = n - 1;
            while (i >= 0 && digits[i] == 2) digits[i--] = 0;
            if (i < 0) break;
            ++digits[i];
        }
        EnumerateOptions opts;
        opts.chains_only = true;
        CHECK(enumerate_phenylenes(h, opts).total_classes == static_cast<int>(certs.size()));
    }
}

TEST_CASE("h=4 histogram") {
    ClassCatalog c = enumerate_phenylenes(4);
    auto hist = count_by_invariant(c);
    REQUIRE(hist.size() == 4);
    auto members_of = [&](long long v) {
        std::set<std::string> names;
        for (int i : hist.at(v)) names.insert(certificate(expand(c.entries[i].tree)));
        return names;
    };
    CHECK(members_of(240) == std::set<std::string>{certificate(expand(linear(4)))});
    CHECK(members_of(288) == std::set<std::string>{certificate(expand(pl(1, 1, 1)))});
    CHECK(members_of(312) == std::set<std::string>{certificate(expand(cl({1, 2}))),
                                                   certificate(expand(chain_from_turns("LR")))});
    long long v4 = hist.rbegin()->first;
    CHECK(v4 > 312);
    CHECK(members_of(v4) ==
          std::set<std::string>{certificate(expand(chain_from_turns("LL")))});
    for (const auto& [value, members] : hist) CHECK(value % 6 == 0);
}

TEST_CASE("h=6 minimum") {
    auto hist = count_by_invariant(enumerate_phenylenes(6));
    CHECK(hist.begin()->first == 576);
    CHECK(hist.begin()->second.size() == 1);
}

TEST_CASE("chain counts monotone, totals dominate") {
    int prev_chain = 0;
    for (int h = 1; h <= 7; ++h) {
        ClassCatalog c = enumerate_phenylenes(h);
        CHECK(c.chain_classes >= prev_chain);
        CHECK(c.total_classes >= c.chain_classes);
        prev_chain = c.chain_classes;
    }
}

TEST_CASE("resource bound") {
    EnumerateOptions opts;
    opts.max_h = 3;
    CHECK_THROWS_AS(enumerate_phenylenes(4, opts), std::runtime_error);

    setenv("PHENYLO_MAX_H", "4", 1);
    CHECK(resource_bound(opts) == 4);
    CHECK(enumerate_phenylenes(4, opts).total_classes == 5);
    unsetenv("PHENYLO_MAX_H");
    CHECK(resource_bound(opts) == 3);

    CHECK_THROWS_AS(enumerate_phenylenes(0), std::invalid_argument);
}

TEST_CASE("planar filter drops overlapping spirals at h=7") {
    ClassCatalog all = enumerate_phenylenes(7);
    CHECK(all.overlap_classes == 1);
    EnumerateOptions opts;
    opts.planar_only = true;
    CHECK(enumerate_phenylenes(7, opts).total_classes ==
          all.total_classes - all.overlap_classes);
}

}  // TEST_SUITE
