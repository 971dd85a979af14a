#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "turan/hypergraph.hpp"

namespace turan {

// Split of an edge set by intersection pattern with a fixed maximum
// matching M = {e_1,..,e_k}: part I holds the edges meeting e_i exactly for
// i in I. Parts are indexed by subset bitmask over [k].
struct MatchingDecomposition {
    std::vector<Triple> matching;
    std::map<std::uint32_t, std::vector<Triple>> parts;

    const std::vector<Triple>* part(std::uint32_t mask) const {
        auto it = parts.find(mask);
        return it == parts.end() ? nullptr : &it->second;
    }
};

// M must be a maximum matching inside H.
MatchingDecomposition decompose_by_matching(const Hypergraph3& h,
                                            std::span<const Triple> m);

bool cross_intersecting(std::span<const Triple> f1, std::span<const Triple> f2);

// The lexicographically first maximum matching by edge ranks.
std::vector<Triple> lex_min_maximum_matching(const Hypergraph3& h);

struct ClauseResult {
    std::string clause;
    bool pass = false;
    std::string detail;
};

struct SplitLemmaReport {
    int nu = 0;
    std::vector<Triple> matching;
    std::vector<ClauseResult> clauses;
    bool pass = false;
};

// Checks the decomposition clauses for a connected P4-free graph with
// matching number 2 or 3: part supports disjoint, singleton parts
// intersecting and non-empty, the full joint part non-empty, and the
// cross-intersection conditions.
SplitLemmaReport verify_split_lemma(const Hypergraph3& h);

struct PairClassification {
    int type_a = 0, type_b = 0, type_c = 0, type_d = 0;
    int unclassified = 0;
};

struct LemmaFiveReport {
    long long pairs_total = 0;
    long long free_pairs = 0;
    int max_sum = 0;
    long long at_max = 0;
    long long at_least_12 = 0;
    PairClassification types;
    long long iso_classes_ge12_with_swap = 0;
    long long iso_classes_ge12_without_swap = 0;
    bool corollary_k23 = false;  // K_{2,3} in R forces |B| <= 4
    bool corollary_c5 = false;   // C_5 in R and |R| >= 6 force |B| <= 4
    bool pass = false;
};

// Exhausts all pairs of graphs on 5 labeled vertices without an rr-bb path:
// the maximum of |R|+|B| is 13 and every pair with sum >= 12 matches one of
// the four structural types.
LemmaFiveReport verify_lemma_five(int worker_count = 1);

struct LemmaDegreeReport {
    int max_sum = 0;
    std::vector<std::pair<int, int>> witness_r, witness_b;
    bool k23_within_bound = true;
    bool pass = false;
};

// Same enumeration restricted to max degree 3 with at least three vertices
// of degree at most 2 on each side: the sum is at most 10.
LemmaDegreeReport verify_lemma_degree();

}  // namespace turan
