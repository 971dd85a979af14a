#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "turan/bitvec.hpp"
#include "turan/combinat.hpp"

namespace turan {

// Ordinary graph on vertices {0,..,n-1}; pairs stored by colex rank.
class Graph2 {
public:
    Graph2() = default;
    explicit Graph2(int n);
    static Graph2 from_pairs(int n, std::span<const std::pair<int, int>> pairs);

    int vertex_count() const { return n_; }
    std::size_t edge_count() const { return edge_count_; }
    bool has_edge(int a, int b) const;
    void add_edge(int a, int b);
    void remove_edge(int a, int b);

    // adjacency as a vertex bitmask
    std::uint32_t neighbors(int v) const { return adj_[v]; }
    int degree(int v) const;
    int max_degree() const;

    const BitVec& bits() const { return bits_; }
    std::vector<std::pair<int, int>> edges() const;

    bool operator==(const Graph2&) const = default;

private:
    int n_ = 0;
    std::size_t edge_count_ = 0;
    BitVec bits_;
    std::vector<std::uint32_t> adj_;
};

struct DegreeInfo {
    std::vector<int> degree;    // per vertex
    std::vector<int> pair_degree;  // by pair colex rank
    int max_degree = 0;         // Delta_1
    int min_degree = 0;         // delta_1
    int max_pair_degree = 0;    // Delta_2
};

// A 3-uniform hypergraph: vertex count plus a triple set held as a bit
// vector indexed by colex triple rank. Immutable after construction.
class Hypergraph3 {
public:
    Hypergraph3() : Hypergraph3(0) {}
    explicit Hypergraph3(int n);

    // Validates and deduplicates. Rejects repeated vertices, vertices >= n,
    // and negative n.
    static Hypergraph3 from_triples(int n, std::span<const Triple> triples);
    static Hypergraph3 from_triples(
        int n, std::initializer_list<std::array<int, 3>> triples);
    static Hypergraph3 from_bits(int n, BitVec bits);
    static Hypergraph3 complete(int n);

    int vertex_count() const { return n_; }
    std::size_t edge_count() const { return edges_.size(); }
    std::int64_t triple_universe() const { return binom3(n_); }

    bool has_edge(const Triple& t) const { return bits_.test(triple_rank(t)); }
    bool has_rank(std::int64_t r) const { return bits_.test(r); }
    const std::vector<Triple>& edges() const { return edges_; }
    const BitVec& bits() const { return bits_; }

    Graph2 link_graph(int v) const;
    int degree(int v) const;
    int pair_degree(int x, int y) const;
    DegreeInfo degrees() const;

    // Induced subgraph; vertices of W are re-indexed 0..|W|-1 in ascending
    // order.
    Hypergraph3 induced(std::span<const int> w) const;
    Hypergraph3 complement() const;

    // Intersecting-edge connectivity. Isolated vertices form singleton
    // components, so a hypergraph with an isolated vertex and n >= 2 is
    // disconnected; n <= 1 counts as connected.
    std::vector<std::vector<int>> components() const;
    bool is_connected() const;

    bool operator==(const Hypergraph3&) const = default;

private:
    int n_ = 0;
    BitVec bits_;
    std::vector<Triple> edges_;  // ascending colex rank
};

}  // namespace turan
