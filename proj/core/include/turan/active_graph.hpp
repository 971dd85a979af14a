#pragma once

#include <cstdint>
#include <vector>

#include "turan/combinat.hpp"
#include "turan/hypergraph.hpp"

namespace turan {

// Shared per-n tables over the full triple universe: vertex masks and, for
// every triple, the set of triples meeting it, as bitmasks over colex ranks.
struct TripleUniverse {
    int n = 0;
    std::int64_t total = 0;  // C(n,3)
    int words = 0;
    std::vector<Triple> triples;       // by rank
    std::vector<std::uint32_t> vmask;  // by rank
    std::vector<std::uint64_t> meets;  // rank*words: triples meeting it (incl. itself)
    std::vector<std::uint64_t> vinc;   // v*words: triples containing v

    static const TripleUniverse& of(int n);

    const std::uint64_t* meets_row(std::int64_t rank) const {
        return meets.data() + rank * words;
    }
    const std::uint64_t* vinc_row(int v) const { return vinc.data() + v * words; }
};

// A mutable edge set over the triple universe with per-vertex incidence,
// maintained as a stack. This is the working state of the pattern detectors
// and the Turán search; Hypergraph3 itself stays immutable.
class ActiveGraph {
public:
    explicit ActiveGraph(int n);
    static ActiveGraph of_hypergraph(const Hypergraph3& h);

    int vertex_count() const { return uni_->n; }
    const TripleUniverse& universe() const { return *uni_; }
    int words() const { return uni_->words; }
    std::size_t edge_count() const { return stack_.size(); }
    const std::vector<std::int64_t>& edge_ranks() const { return stack_; }
    const std::uint64_t* chosen() const { return chosen_.data(); }
    std::uint32_t support_mask() const { return support_; }

    void push(std::int64_t rank);
    void pop();
    bool contains(std::int64_t rank) const {
        return (chosen_[rank >> 6] >> (rank & 63)) & 1u;
    }

    Hypergraph3 to_hypergraph() const;

private:
    const TripleUniverse* uni_;
    std::vector<std::uint64_t> chosen_;
    std::vector<std::int64_t> stack_;
    std::vector<int> vcount_;  // per-vertex incidence counts
    std::uint32_t support_ = 0;
};

}  // namespace turan
