#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "turan/canonical.hpp"
#include "turan/constructions.hpp"
#include "turan/search.hpp"

using namespace turan;

namespace {
SearchConfig base_cfg(const std::string& family, int n) {
    SearchConfig cfg;
    cfg.family = FamilySpec::parse(family);
    cfg.n = n;
    return cfg;
}
}  // namespace

TEST_CASE("tiny cases match the subset enumeration oracle") {
    for (int n = 0; n <= 5; ++n) {
        TuranRecord rec = turan_exact(base_cfg("p4", n));
        long long expect = oracle::turan_by_enumeration(
            n, [](const Hypergraph3& h) { return !oracle::has_minimal_path(h, 4); });
        CHECK(rec.complete);
        CHECK(rec.value == expect);
        CHECK(rec.value == binom3(n));  // members need seven vertices
    }
    // a family that bites at n = 5: intersecting families
    TuranRecord m2 = turan_exact(base_cfg("m2", 5));
    long long expect = oracle::turan_by_enumeration(5, [](const Hypergraph3& h) {
        return oracle::matching_number(h) < 2;
    });
    CHECK(m2.complete);
    CHECK(m2.value == expect);
}

TEST_CASE("six vertices: the complete graph is the unique extremal graph") {
    TuranRecord rec = turan_exact(base_cfg("p4", 6));
    CHECK(rec.complete);
    CHECK(rec.value == 20);
    REQUIRE(rec.extremal.size() == 1);
    CHECK(rec.extremal[0] == canonical_form(Hypergraph3::complete(6)));
}

TEST_CASE("seven vertices: value 20 with a single extremal class") {
    TuranRecord rec = turan_exact(base_cfg("p4", 7));
    CHECK(rec.complete);
    CHECK(rec.value == 20);
    REQUIRE(rec.extremal.size() == 1);
    CHECK(rec.extremal[0] ==
          canonical_form(construct(ConstructionKind::complete_plus_isolated(6, 1))));

    TuranRecord dec;
    auto w = decide_exists(base_cfg("p4", 7), 21, &dec);
    CHECK_FALSE(w.has_value());
    CHECK(dec.complete);
}

TEST_CASE("intersecting families on seven vertices") {
    TuranRecord rec = turan_exact(base_cfg("m2", 7));
    CHECK(rec.complete);
    CHECK(rec.value == 15);
    REQUIRE(rec.extremal.size() == 1);
    CHECK(rec.extremal[0] ==
          canonical_form(construct(ConstructionKind::full_star(7))));

    TuranRecord second = turan_order(base_cfg("m2", 7), 2, std::vector{rec});
    CHECK(second.complete);
    CHECK(second.value == 13);
}

TEST_CASE("matchings of size two on six vertices") {
    TuranRecord rec = turan_exact(base_cfg("p2", 6));
    CHECK(rec.complete);
    CHECK(rec.value == 2);  // floor(6/3)
}

TEST_CASE("decide mode finds witnesses and exhausts refusals") {
    auto w22 = decide_exists(base_cfg("p4", 8), 22);
    REQUIRE(w22.has_value());
    CHECK(w22->edge_count() >= 22);

    TuranRecord rec;
    auto w21 = decide_exists(base_cfg("p4", 6), 21, &rec);
    CHECK_FALSE(w21.has_value());
    CHECK(rec.complete);
    auto w20 = decide_exists(base_cfg("p4", 6), 20);
    REQUIRE(w20.has_value());
    CHECK(w20->edge_count() == 20);
}

TEST_CASE("enumerate mode lists classes for a known value") {
    TuranRecord rec;
    auto classes = enumerate_extremal(base_cfg("p4", 7), 20, &rec);
    CHECK(rec.complete);
    REQUIRE(classes.size() == 1);
    CHECK(classes[0] ==
          canonical_form(construct(ConstructionKind::complete_plus_isolated(6, 1))));

    auto k6 = enumerate_extremal(base_cfg("p4", 6), 20);
    CHECK(k6.size() == 1);
}

TEST_CASE("monotone in the vertex count") {
    long long prev = -1;
    for (int n = 0; n <= 6; ++n) {
        TuranRecord rec = turan_exact(base_cfg("p4", n));
        CHECK(rec.value >= prev);
        prev = rec.value;
    }
    prev = -1;
    for (int n = 3; n <= 6; ++n) {
        TuranRecord rec = turan_exact(base_cfg("m2", n));
        CHECK(rec.value >= prev);
        prev = rec.value;
    }
}

TEST_CASE("worker counts do not change results") {
    for (int workers : {1, 2, 3}) {
        SearchConfig cfg = base_cfg("p4", 6);
        cfg.worker_count = workers;
        TuranRecord rec = turan_exact(cfg);
        CHECK(rec.value == 20);
        REQUIRE(rec.extremal.size() == 1);
        CHECK(rec.extremal[0] == canonical_form(Hypergraph3::complete(6)));
    }
    std::vector<std::vector<CanonicalForm>> all;
    for (int workers : {1, 2, 3}) {
        SearchConfig cfg = base_cfg("m2", 7);
        cfg.worker_count = workers;
        TuranRecord rec = turan_exact(cfg);
        CHECK(rec.value == 15);
        all.push_back(rec.extremal);
    }
    CHECK(all[0] == all[1]);
    CHECK(all[1] == all[2]);
}

TEST_CASE("conditional search with a required matching") {
    // connected p4-free hosts containing three disjoint edges, n = 9
    SearchConfig cfg = base_cfg("p4", 9);
    cfg.connected_only = true;
    cfg.required_subgraph = Hypergraph3::from_triples(
        9, {{{0, 1, 2}}, {{3, 4, 5}}, {{6, 7, 8}}});
    // a balloon relabeled so its three disjoint edges sit on the seed
    std::vector<int> perm{6, 0, 1, 2, 3, 4, 5, 7, 8};
    cfg.warm_start = relabel(construct(ConstructionKind::balloon(9)), perm);
    TuranRecord rec = turan_conditional(cfg);
    CHECK(rec.complete);
    CHECK(rec.value == 21);
    REQUIRE(rec.extremal.size() == 1);
    CHECK(rec.extremal[0] ==
          canonical_form(construct(ConstructionKind::balloon(9))));
}

TEST_CASE("conditional search with a required four cycle") {
    // connected {p4,m3}-free hosts containing the 6-vertex 4-cycle, n = 8
    SearchConfig cfg = base_cfg("m3+p4", 8);
    cfg.connected_only = true;
    cfg.required_subgraph = construct(ConstructionKind::cycle_c4());
    TuranRecord rec = turan_conditional(cfg);
    CHECK(rec.complete);
    CHECK(rec.value == 22);
    REQUIRE(rec.extremal.size() == 2);
    std::vector<CanonicalForm> want{
        canonical_form(construct(ConstructionKind::sp(8))),
        canonical_form(construct(ConstructionKind::sk(8)))};
    std::sort(want.begin(), want.end());
    CHECK(rec.extremal == want);
}

TEST_CASE("budget cutoffs are reported, never silent") {
    SearchConfig cfg = base_cfg("p4", 8);
    cfg.time_budget_seconds = 0.02;
    TuranRecord rec = turan_exact(cfg);
    if (!rec.complete) {
        CHECK(rec.value >= 0);
        if (rec.witness)
            CHECK(static_cast<long long>(rec.witness->edge_count()) == rec.value);
    }
    SearchConfig bad = base_cfg("p4", 6);
    bad.time_budget_seconds = 0;
    CHECK_THROWS_AS(turan_exact(bad), std::invalid_argument);
}

TEST_CASE("node limits mark records incomplete") {
    SearchConfig cfg = base_cfg("p4", 7);
    cfg.node_limit = 100;
    TuranRecord rec = turan_exact(cfg);
    CHECK_FALSE(rec.complete);
}

TEST_CASE("warm starts are validated") {
    SearchConfig cfg = base_cfg("p4", 7);
    cfg.warm_start = Hypergraph3::complete(7);  // contains members
    CHECK_THROWS_AS(turan_exact(cfg), std::invalid_argument);
}

TEST_CASE("required subgraph must be family-free") {
    SearchConfig cfg = base_cfg("p2", 7);
    cfg.required_subgraph = Hypergraph3::from_triples(
        7, {{{0, 1, 2}}, {{2, 3, 4}}});  // already a 2-path
    CHECK_THROWS_AS(turan_conditional(cfg), std::invalid_argument);
}

TEST_CASE("order search needs complete lower records") {
    TuranRecord fake;
    fake.family_code = "p4";
    fake.n = 7;
    fake.order = 1;
    fake.complete = false;
    CHECK_THROWS_AS(turan_order(base_cfg("p4", 7), 2, std::vector{fake}),
                    std::invalid_argument);
    CHECK_THROWS_AS(turan_order(base_cfg("p4", 7), 2, std::vector<TuranRecord>{}),
                    std::invalid_argument);
}

TEST_CASE("hierarchy for intersecting families on seven vertices") {
    std::vector<TuranRecord> chain = turan_hierarchy(base_cfg("m2", 7), 2);
    REQUIRE(chain.size() == 2);
    CHECK(chain[0].value == 15);
    CHECK(chain[1].value == 13);
    CHECK(chain[1].order == 2);
    CHECK(chain[1].complete);
}
