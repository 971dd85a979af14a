#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

#include "turan/hypergraph.hpp"

namespace turan {

// Relabeling-invariant key. Two hypergraphs on the same vertex count have
// equal canonical forms iff they are isomorphic. The byte string encodes
// the vertex count followed by the lexicographically smallest edge bit
// vector over the admissible vertex orderings, so a form can be decoded
// back into a concrete representative.
struct CanonicalForm {
    int n = 0;
    std::vector<std::uint8_t> bytes;

    bool operator==(const CanonicalForm&) const = default;
    auto operator<=>(const CanonicalForm& o) const {
        if (n != o.n) return n <=> o.n;
        return bytes <=> o.bytes;
    }

    std::string hex() const;
    static CanonicalForm from_hex(const std::string& s);
};

CanonicalForm canonical_form(const Hypergraph3& h);
Hypergraph3 canonical_representative(const CanonicalForm& cf);
bool is_isomorphic(const Hypergraph3& h1, const Hypergraph3& h2);

// Applies a vertex permutation: vertex v of h becomes perm[v].
Hypergraph3 relabel(const Hypergraph3& h, std::span<const int> perm);

}  // namespace turan
