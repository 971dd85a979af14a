#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "turan/canonical.hpp"
#include "turan/hypergraph.hpp"
#include "turan/patterns.hpp"

namespace turan {

enum class SearchMode { Maximize, DecideAtLeast, EnumerateExtremal };

struct SearchConfig {
    FamilySpec family;
    int n = 0;
    SearchMode mode = SearchMode::Maximize;
    long long target = 0;  // DecideAtLeast threshold / EnumerateExtremal value
    bool connected_only = false;
    std::optional<Hypergraph3> required_subgraph;
    std::vector<Hypergraph3> excluded_supergraphs;
    double time_budget_seconds = 1e18;
    int worker_count = 1;
    std::optional<long long> node_limit;
    int split_depth = -1;  // parallel task depth, -1 = auto
    // Verified lower-bound seed for Maximize; must satisfy every constraint.
    std::optional<Hypergraph3> warm_start;
};

struct SearchStats {
    long long nodes = 0;
    long long prune_bound = 0;
    long long prune_pattern = 0;
    long long prune_orbit = 0;
    long long elapsed_ms = 0;
};

struct TuranRecord {
    std::string family_code;
    int n = 0;
    int order = 1;
    bool connected_only = false;
    std::string required_hex;  // canonical hex of the required subgraph, or ""
    long long value = -1;      // -1: no admissible graph exists
    std::vector<CanonicalForm> extremal;  // sorted by canonical bytes
    bool complete = false;
    SearchStats stats;
    std::optional<Hypergraph3> witness;  // decide witness / best graph found

    std::string key() const;
};

// Plain Turán number: max edges over family-free n-vertex graphs. When the
// record is complete the extremal list is the full set of extremal graphs
// up to isomorphism; otherwise value is a certified lower bound.
TuranRecord turan_exact(const SearchConfig& cfg);

// Conditional variant: hosts must contain cfg.required_subgraph (seeded on
// the lowest vertex indices), restricted to connected hosts when flagged.
TuranRecord turan_conditional(const SearchConfig& cfg);

// Higher-order variant: hosts must embed into no extremal graph of any
// record in `lower` (orders 1..order-1, all complete, same constraints).
TuranRecord turan_order(const SearchConfig& cfg, int order,
                        std::span<const TuranRecord> lower);

// Computes orders 1..max_order in sequence.
std::vector<TuranRecord> turan_hierarchy(const SearchConfig& cfg, int max_order);

// Is there an admissible graph with at least t edges? A returned witness is
// re-verified; a nullopt with record->complete is an exhaustive no.
std::optional<Hypergraph3> decide_exists(const SearchConfig& cfg, long long t,
                                         TuranRecord* record = nullptr);

// All extremal graphs for a known exact value, up to isomorphism.
std::vector<CanonicalForm> enumerate_extremal(const SearchConfig& cfg,
                                              long long value,
                                              TuranRecord* record = nullptr);

}  // namespace turan
