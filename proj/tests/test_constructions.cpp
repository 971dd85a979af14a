#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "turan/constructions.hpp"
#include "turan/patterns.hpp"

using namespace turan;

TEST_CASE("pinned sizes of the named graphs") {
    CHECK(construct(ConstructionKind::star_plus(8)).edge_count() == 22);
    CHECK(construct(ConstructionKind::sp(8)).edge_count() == 22);
    CHECK(construct(ConstructionKind::sk(8)).edge_count() == 22);
    CHECK(construct(ConstructionKind::balloon(9)).edge_count() == 21);
    CHECK(construct(ConstructionKind::compact_balloon(8)).edge_count() == 17);
    Hypergraph3 k6k1 = construct(ConstructionKind::complete_plus_isolated(6, 1));
    CHECK(k6k1.vertex_count() == 7);
    CHECK(k6k1.edge_count() == 20);

    CHECK(expected_size(ConstructionKind::sk(9)) == 26);
    CHECK(expected_size(ConstructionKind::sp(9)) == 27);
    CHECK(expected_size(ConstructionKind::balloon(14)) == 56);
    CHECK(expected_size(ConstructionKind::star_plus(14)) == 79);
}

TEST_CASE("closed forms match the generators up to n = 20") {
    for (int n = 0; n <= 20; ++n)
        CHECK(construct(ConstructionKind::complete(n)).edge_count() ==
              static_cast<std::size_t>(expected_size(ConstructionKind::complete(n))));
    for (int n = 1; n <= 20; ++n)
        CHECK(construct(ConstructionKind::full_star(n)).edge_count() ==
              static_cast<std::size_t>(expected_size(ConstructionKind::full_star(n))));
    for (int n = 5; n <= 20; ++n)
        CHECK(construct(ConstructionKind::star_plus(n)).edge_count() ==
              static_cast<std::size_t>(expected_size(ConstructionKind::star_plus(n))));
    for (int n = 6; n <= 20; ++n) {
        CHECK(construct(ConstructionKind::sp(n)).edge_count() ==
              static_cast<std::size_t>(expected_size(ConstructionKind::sp(n))));
        CHECK(construct(ConstructionKind::sk(n)).edge_count() ==
              static_cast<std::size_t>(expected_size(ConstructionKind::sk(n))));
    }
    for (int n = 9; n <= 20; ++n)
        CHECK(construct(ConstructionKind::balloon(n)).edge_count() ==
              static_cast<std::size_t>(expected_size(ConstructionKind::balloon(n))));
    for (int n = 8; n <= 20; ++n)
        CHECK(construct(ConstructionKind::compact_balloon(n)).edge_count() ==
              static_cast<std::size_t>(
                  expected_size(ConstructionKind::compact_balloon(n))));
    for (int m = 0; m <= 10; ++m)
        CHECK(construct(ConstructionKind::complete_plus_isolated(m, 2)).edge_count() ==
              static_cast<std::size_t>(
                  expected_size(ConstructionKind::complete_plus_isolated(m, 2))));
    for (int a = 1; a <= 6; ++a) {
        std::vector<int> aset;
        for (int v = 1; v <= a; ++v) aset.push_back(v);
        ConstructionKind k = ConstructionKind::partial_star(10, aset);
        CHECK(construct(k).edge_count() == static_cast<std::size_t>(expected_size(k)));
    }
}

TEST_CASE("the five construction columns for n in 8..14") {
    // S^{+1}, SP, SK, CB, B
    const long long table[7][5] = {
        {22, 22, 22, 17, 17}, {29, 27, 26, 22, 21}, {37, 32, 30, 28, 26},
        {46, 37, 34, 35, 32}, {56, 42, 38, 43, 39}, {67, 47, 42, 52, 47},
        {79, 52, 46, 62, 56}};
    for (int n = 8; n <= 14; ++n) {
        const long long* row = table[n - 8];
        CHECK(expected_size(ConstructionKind::star_plus(n)) == row[0]);
        CHECK(expected_size(ConstructionKind::sp(n)) == row[1]);
        CHECK(expected_size(ConstructionKind::sk(n)) == row[2]);
        CHECK(expected_size(ConstructionKind::compact_balloon(n)) == row[3]);
        // the balloon column follows its closed form even below its range
        if (n >= 9)
            CHECK(expected_size(ConstructionKind::balloon(n)) == row[4]);
        else
            CHECK(binom2(n - 4) + 11 == row[4]);
    }
}

TEST_CASE("constructions are deterministic") {
    for (int n : {8, 11, 14}) {
        CHECK(construct(ConstructionKind::sp(n)) == construct(ConstructionKind::sp(n)));
        CHECK(construct(ConstructionKind::balloon(std::max(n, 9))) ==
              construct(ConstructionKind::balloon(std::max(n, 9))));
    }
}

TEST_CASE("out of range parameters are hard errors") {
    CHECK_THROWS_AS(construct(ConstructionKind::balloon(8)), std::invalid_argument);
    CHECK_THROWS_AS(construct(ConstructionKind::compact_balloon(7)),
                    std::invalid_argument);
    CHECK_THROWS_AS(construct(ConstructionKind::sp(5)), std::invalid_argument);
    CHECK_THROWS_AS(construct(ConstructionKind::sk(5)), std::invalid_argument);
    CHECK_THROWS_AS(construct(ConstructionKind::star_plus(4)), std::invalid_argument);
    CHECK_THROWS_AS(expected_size(ConstructionKind::balloon(8)),
                    std::invalid_argument);
}

TEST_CASE("self checks pass for the claimed properties") {
    CHECK(self_check(ConstructionKind::sp(10)).pass);
    CHECK(self_check(ConstructionKind::sk(10)).pass);
    CHECK(self_check(ConstructionKind::balloon(10)).pass);
    CHECK(self_check(ConstructionKind::compact_balloon(9)).pass);
    CHECK(self_check(ConstructionKind::star_plus(9)).pass);
    CHECK(self_check(ConstructionKind::complete_plus_isolated(6, 1)).pass);
    CHECK(self_check(ConstructionKind::cycle_c4()).pass);
}

TEST_CASE("minimal path members by signature") {
    // contact signatures and their vertex counts
    const std::pair<std::vector<int>, int> cases[] = {
        {{1, 1, 1}, 9}, {{2, 1, 1}, 8}, {{1, 2, 1}, 8}, {{2, 1, 2}, 7}};
    for (const auto& [sig, nv] : cases) {
        ConstructionKind k = ConstructionKind::minimal_path_member(sig);
        Hypergraph3 h = construct(k);
        CHECK(h.vertex_count() == nv);
        CHECK(h.edge_count() == 4);
        auto w = find_minimal_path(h, 4);
        REQUIRE(w.has_value());
        CHECK(w->size() == 4);
    }
    CHECK_THROWS_AS(construct(ConstructionKind::minimal_path_member({2, 2, 1})),
                    std::invalid_argument);
    CHECK_THROWS_AS(construct(ConstructionKind::minimal_path_member({3})),
                    std::invalid_argument);
}

TEST_CASE("linear path construction") {
    Hypergraph3 lp = construct(ConstructionKind::linear_path(4, 9));
    CHECK(lp.edge_count() == 4);
    CHECK(find_linear_path(lp, 4).has_value());
    Hypergraph3 padded = construct(ConstructionKind::linear_path(2, 8));
    CHECK(padded.vertex_count() == 8);
    CHECK(padded.edge_count() == 2);
}

TEST_CASE("self check reports individual claims") {
    SelfCheckReport rep = self_check(ConstructionKind::sp(10));
    REQUIRE(rep.claims.size() >= 4);
    bool saw_c4 = false;
    for (const auto& c : rep.claims)
        if (c.claim == "contains c4") saw_c4 = c.pass;
    CHECK(saw_c4);
}
