#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "turan/canonical.hpp"
#include "turan/constructions.hpp"
#include "turan/embed.hpp"

using namespace turan;

TEST_CASE("starplus is center-agnostic") {
    Hypergraph3 a = construct(ConstructionKind::star_plus(8));
    std::vector<int> perm{5, 1, 2, 3, 4, 0, 6, 7};  // move the center to 5
    Hypergraph3 b = relabel(a, perm);
    CHECK(is_isomorphic(a, b));
    CHECK(canonical_form(a) == canonical_form(b));
}

TEST_CASE("sp8 and sk8 are not isomorphic") {
    Hypergraph3 sp = construct(ConstructionKind::sp(8));
    Hypergraph3 sk = construct(ConstructionKind::sk(8));
    CHECK(sp.edge_count() == 22);
    CHECK(sk.edge_count() == 22);
    auto dsp = sp.degrees().degree;
    auto dsk = sk.degrees().degree;
    std::sort(dsp.begin(), dsp.end());
    std::sort(dsk.begin(), dsk.end());
    CHECK(dsp != dsk);
    CHECK_FALSE(is_isomorphic(sp, sk));
}

TEST_CASE("canonical form is invariant under relabeling") {
    std::mt19937 rng(17);
    for (int it = 0; it < 100; ++it) {
        int n = 4 + static_cast<int>(rng() % 5);  // 4..8
        Hypergraph3 h = oracle::random_hypergraph(n, 0.3, rng);
        auto perm = oracle::random_permutation(n, rng);
        Hypergraph3 g = relabel(h, perm);
        CHECK(canonical_form(h) == canonical_form(g));
        CHECK(is_isomorphic(h, g));
    }
}

TEST_CASE("isomorphism agrees with permutation brute force at n <= 5") {
    std::mt19937 rng(19);
    for (int it = 0; it < 200; ++it) {
        int n = 3 + static_cast<int>(rng() % 3);  // 3..5
        Hypergraph3 a = oracle::random_hypergraph(n, 0.4, rng);
        Hypergraph3 b = oracle::random_hypergraph(n, 0.4, rng);
        CHECK(is_isomorphic(a, b) == oracle::isomorphic_by_permutations(a, b));
    }
}

TEST_CASE("canonical forms distinguish close graphs") {
    // two 22-edge graphs on 8 vertices in different classes
    Hypergraph3 sp = construct(ConstructionKind::sp(8));
    Hypergraph3 splus = construct(ConstructionKind::star_plus(8));
    CHECK(canonical_form(sp) != canonical_form(splus));
}

TEST_CASE("canonical representative round trip") {
    std::mt19937 rng(23);
    for (int it = 0; it < 50; ++it) {
        Hypergraph3 h = oracle::random_hypergraph(7, 0.25, rng);
        CanonicalForm cf = canonical_form(h);
        Hypergraph3 rep = canonical_representative(cf);
        CHECK(canonical_form(rep) == cf);
        CHECK(is_isomorphic(rep, h));
        CHECK(CanonicalForm::from_hex(cf.hex()) == cf);
    }
}

TEST_CASE("canonical form handles degenerate symmetry") {
    CHECK(canonical_form(Hypergraph3(10)) == canonical_form(Hypergraph3(10)));
    CHECK(canonical_form(Hypergraph3::complete(9)).n == 9);
    Hypergraph3 e0(0), e1(1), e2(2);
    CHECK(canonical_form(e0).n == 0);
    CHECK(canonical_form(e1).bytes.size() == 1);
    CHECK(canonical_form(e2).bytes.size() == 1);
}

TEST_CASE("embeds finds and certifies maps") {
    Hypergraph3 m3 = Hypergraph3::from_triples(
        9, {{{0, 1, 2}}, {{3, 4, 5}}, {{6, 7, 8}}});
    Hypergraph3 b9 = construct(ConstructionKind::balloon(9));
    auto m = embeds(m3, b9);
    REQUIRE(m.has_value());
    for (const Triple& t : m3.edges())
        CHECK(b9.has_edge(sorted_triple((*m)[t.a], (*m)[t.b], (*m)[t.c])));

    Hypergraph3 cb8 = construct(ConstructionKind::compact_balloon(8));
    Hypergraph3 sp8 = construct(ConstructionKind::star_plus(8));
    CHECK_FALSE(embeds(cb8, sp8).has_value());

    CHECK(embeds(Hypergraph3(0), b9).has_value());
}

TEST_CASE("embeds on random subgraph pairs") {
    std::mt19937 rng(29);
    for (int it = 0; it < 60; ++it) {
        Hypergraph3 host = oracle::random_hypergraph(7, 0.35, rng);
        // build a pattern by relabeling a random sub-edge-set of the host
        std::vector<Triple> sub;
        for (const Triple& t : host.edges())
            if (rng() % 2) sub.push_back(t);
        Hypergraph3 pat0 = Hypergraph3::from_triples(7, sub);
        Hypergraph3 pat = relabel(pat0, oracle::random_permutation(7, rng));
        auto m = embeds(pat, host);
        REQUIRE(m.has_value());
        for (const Triple& t : pat.edges())
            CHECK(host.has_edge(sorted_triple((*m)[t.a], (*m)[t.b], (*m)[t.c])));
    }
}
