#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "turan/active_graph.hpp"
#include "turan/hypergraph.hpp"

namespace turan {

enum class PatternKind { MinimalPath, LinearPath, MinimalCycle, Matching, Explicit };

// A forbidden pattern: minimal/linear path, minimal cycle, matching, or an
// explicit hypergraph.
struct PatternSpec {
    PatternKind kind = PatternKind::MinimalPath;
    int param = 0;
    std::shared_ptr<const Hypergraph3> graph;  // Explicit payload

    static PatternSpec minimal_path(int len);
    static PatternSpec linear_path(int len);
    static PatternSpec minimal_cycle(int len);
    static PatternSpec matching(int size);
    static PatternSpec explicit_graph(Hypergraph3 g);

    std::string code() const;
};

struct FamilySpec {
    std::vector<PatternSpec> patterns;

    FamilySpec() = default;
    FamilySpec(std::initializer_list<PatternSpec> ps) : patterns(ps) { validate(); }
    explicit FamilySpec(std::vector<PatternSpec> ps) : patterns(std::move(ps)) {
        validate();
    }

    // "p4", "m3", "c4", "lp3", "p4+m3", "file:<path>", joined with '+'
    static FamilySpec parse(const std::string& code);
    std::string code() const;  // sorted member codes joined with '+'

private:
    void validate() const;
};

std::optional<std::vector<Triple>> find_minimal_path(const Hypergraph3& h, int len);
std::optional<std::vector<Triple>> find_linear_path(const Hypergraph3& h, int len);
std::optional<std::vector<Triple>> find_minimal_cycle(const Hypergraph3& h, int len);

int matching_number(const Hypergraph3& h);
bool contains_matching(const Hypergraph3& h, int s);

bool is_family_free(const Hypergraph3& h, const FamilySpec& family);

struct FamilyWitness {
    PatternSpec pattern;
    std::vector<Triple> edges;
};
std::optional<FamilyWitness> family_witness(const Hypergraph3& h,
                                            const FamilySpec& family);

// True iff some member of the family inside h uses edge e. e must be an
// edge of h.
bool pattern_through_edge(const Hypergraph3& h, const Triple& e,
                          const FamilySpec& family);

// True iff r1 r2 b1 b2 forms a 4-edge graph path (5 distinct vertices) with
// r1,r2 from R and b1,b2 from B.
bool rr_bb_path_exists(const Graph2& r, const Graph2& b);

// Incremental detector over an ActiveGraph; shared by the one-shot API and
// the search. Scratch space is reused across calls.
class PatternDetector {
public:
    explicit PatternDetector(const FamilySpec& family);

    // Some family member among g's edges uses the edge at `rank` (which must
    // already be pushed).
    bool through_edge(ActiveGraph& g, std::int64_t rank);
    // Some family member anywhere in g.
    bool anywhere(ActiveGraph& g);

    const FamilySpec& family() const { return family_; }

private:
    FamilySpec family_;
    std::vector<std::uint64_t> scratch_;
    std::vector<std::int64_t> seq_;
    bool path_through(ActiveGraph& g, std::int64_t rank, int len, bool linear);
    bool cycle_through(ActiveGraph& g, std::int64_t rank, int len);
    bool matching_through(ActiveGraph& g, std::int64_t rank, int size);
    friend std::optional<std::vector<Triple>> detail_find_path(const Hypergraph3&,
                                                               int, bool);
};

}  // namespace turan
