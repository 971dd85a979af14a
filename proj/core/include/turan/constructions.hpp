#pragma once

#include <string>
#include <vector>

#include "turan/hypergraph.hpp"

namespace turan {

// Deterministic generators for the named 3-graphs. Labeling convention:
// star centers sit at vertex 0 and the special structure (the 2-path, the
// K4, the y/z vertices) takes the next indices; remaining vertices ascend.
struct ConstructionKind {
    enum class Tag {
        Complete,             // K_n
        CompletePlusIsolated, // K_m plus i isolated vertices
        FullStar,             // all triples through vertex 0
        StarPlus,             // full star plus the edge {1,2,3}
        PartialStar,          // triples through 0 meeting a set A
        SP,                   // 2-path on {1..5} plus the star at 0 into it
        SK,                   // K4 on {1..4} plus the star at 0 into it
        Balloon,              // star core with a y-triple, z-triple and 9 spokes
        CompactBalloon,       // star core with 7 extra edges on y1 y2 z1 z2
        CycleC4,              // the 6-vertex minimal 4-cycle
        MinimalPathMember,    // a minimal 4-path with a given contact signature
        LinearPath,           // loose path of given length, padded to n
    };

    Tag tag = Tag::Complete;
    int n = 0;
    int extra = 0;               // isolated count / path length
    std::vector<int> signature;  // consecutive intersection sizes (1 or 2)
    std::vector<int> apex_set;   // PartialStar: the set A (vertices >= 1)

    static ConstructionKind complete(int n) { return {Tag::Complete, n}; }
    static ConstructionKind complete_plus_isolated(int m, int i) {
        return {Tag::CompletePlusIsolated, m + i, i};
    }
    static ConstructionKind full_star(int n) { return {Tag::FullStar, n}; }
    static ConstructionKind star_plus(int n) { return {Tag::StarPlus, n}; }
    static ConstructionKind partial_star(int n, std::vector<int> a) {
        return {Tag::PartialStar, n, 0, {}, std::move(a)};
    }
    static ConstructionKind sp(int n) { return {Tag::SP, n}; }
    static ConstructionKind sk(int n) { return {Tag::SK, n}; }
    static ConstructionKind balloon(int n) { return {Tag::Balloon, n}; }
    static ConstructionKind compact_balloon(int n) {
        return {Tag::CompactBalloon, n};
    }
    static ConstructionKind cycle_c4() { return {Tag::CycleC4, 6}; }
    static ConstructionKind minimal_path_member(std::vector<int> sig) {
        ConstructionKind k{Tag::MinimalPathMember, 0};
        k.signature = std::move(sig);
        return k;
    }
    static ConstructionKind linear_path(int len, int n) {
        return {Tag::LinearPath, n, len};
    }

    std::string name() const;
};

Hypergraph3 construct(const ConstructionKind& kind);
long long expected_size(const ConstructionKind& kind);

struct SelfCheckItem {
    std::string claim;
    bool pass = false;
};
struct SelfCheckReport {
    std::string kind;
    int n = 0;
    long long edges = 0;
    long long expected = 0;
    std::vector<SelfCheckItem> claims;
    bool pass = false;
};
SelfCheckReport self_check(const ConstructionKind& kind);

}  // namespace turan
