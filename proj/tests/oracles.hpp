#pragma once

// Brute-force reference implementations used only by tests. These stay
// independent of the library's detectors: everything here enumerates
// tuples or permutations directly.

#include <algorithm>
#include <numeric>
#include <optional>
#include <random>
#include <vector>

#include "turan/combinat.hpp"
#include "turan/hypergraph.hpp"

namespace oracle {

using turan::Hypergraph3;
using turan::Triple;

inline bool tuple_is_minimal_path(const std::vector<Triple>& seq) {
    const int l = static_cast<int>(seq.size());
    for (int i = 0; i < l; ++i)
        for (int j = i + 1; j < l; ++j) {
            bool meet = seq[i].intersects(seq[j]);
            if ((j - i <= 1) != meet) return false;
        }
    return true;
}

inline bool tuple_is_linear_path(const std::vector<Triple>& seq) {
    if (!tuple_is_minimal_path(seq)) return false;
    for (std::size_t i = 0; i + 1 < seq.size(); ++i) {
        auto common = seq[i].vertex_mask() & seq[i + 1].vertex_mask();
        if (std::popcount(common) != 1) return false;
    }
    return true;
}

inline bool tuple_is_minimal_cycle(const std::vector<Triple>& seq) {
    const int l = static_cast<int>(seq.size());
    for (int i = 0; i < l; ++i)
        for (int j = i + 1; j < l; ++j) {
            int d = std::min(j - i, l - (j - i));
            bool meet = seq[i].intersects(seq[j]);
            if ((d <= 1) != meet) return false;
        }
    // no vertex may lie in more than two edges
    std::array<int, 32> count{};
    for (const Triple& t : seq) {
        ++count[t.a];
        ++count[t.b];
        ++count[t.c];
    }
    for (int c : count)
        if (c > 2) return false;
    return true;
}

template <typename Pred>
bool exists_tuple(const std::vector<Triple>& edges, int l, Pred&& pred) {
    std::vector<int> idx(l, 0);
    std::vector<Triple> seq(l);
    auto rec = [&](auto&& self, int pos) -> bool {
        if (pos == l) return pred(seq);
        for (std::size_t i = 0; i < edges.size(); ++i) {
            bool used = false;
            for (int j = 0; j < pos; ++j)
                if (idx[j] == static_cast<int>(i)) used = true;
            if (used) continue;
            idx[pos] = static_cast<int>(i);
            seq[pos] = edges[i];
            if (self(self, pos + 1)) return true;
        }
        return false;
    };
    return rec(rec, 0);
}

inline bool has_minimal_path(const Hypergraph3& h, int l) {
    return exists_tuple(h.edges(), l, [](const std::vector<Triple>& s) {
        return tuple_is_minimal_path(s);
    });
}

inline bool has_linear_path(const Hypergraph3& h, int l) {
    return exists_tuple(h.edges(), l, [](const std::vector<Triple>& s) {
        return tuple_is_linear_path(s);
    });
}

inline bool has_minimal_cycle(const Hypergraph3& h, int l) {
    return exists_tuple(h.edges(), l, [](const std::vector<Triple>& s) {
        return tuple_is_minimal_cycle(s);
    });
}

inline int matching_number(const Hypergraph3& h) {
    const auto& edges = h.edges();
    int best = 0;
    auto rec = [&](auto&& self, std::size_t i, std::uint32_t used, int cur) -> void {
        best = std::max(best, cur);
        for (std::size_t j = i; j < edges.size(); ++j)
            if (!(edges[j].vertex_mask() & used))
                self(self, j + 1, used | edges[j].vertex_mask(), cur + 1);
    };
    rec(rec, 0, 0, 0);
    return best;
}

inline bool isomorphic_by_permutations(const Hypergraph3& a, const Hypergraph3& b) {
    if (a.vertex_count() != b.vertex_count()) return false;
    if (a.edge_count() != b.edge_count()) return false;
    const int n = a.vertex_count();
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    do {
        bool ok = true;
        for (const Triple& t : a.edges()) {
            if (!b.has_edge(turan::sorted_triple(perm[t.a], perm[t.b], perm[t.c]))) {
                ok = false;
                break;
            }
        }
        if (ok) return true;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return false;
}

inline Hypergraph3 random_hypergraph(int n, double p, std::mt19937& rng) {
    std::bernoulli_distribution coin(p);
    std::vector<Triple> ts;
    for (std::int64_t r = 0; r < turan::binom3(n); ++r)
        if (coin(rng)) ts.push_back(turan::triple_unrank(r));
    return Hypergraph3::from_triples(n, ts);
}

inline Hypergraph3 random_hypergraph_with_edges(int n, int m, std::mt19937& rng) {
    std::vector<std::int64_t> ranks(turan::binom3(n));
    std::iota(ranks.begin(), ranks.end(), 0);
    std::shuffle(ranks.begin(), ranks.end(), rng);
    std::vector<Triple> ts;
    for (int i = 0; i < m && i < static_cast<int>(ranks.size()); ++i)
        ts.push_back(turan::triple_unrank(ranks[i]));
    return Hypergraph3::from_triples(n, ts);
}

inline std::vector<int> random_permutation(int n, std::mt19937& rng) {
    std::vector<int> p(n);
    std::iota(p.begin(), p.end(), 0);
    std::shuffle(p.begin(), p.end(), rng);
    return p;
}

// Brute-force Turán maximum over all edge subsets, n <= 5 scale. The
// freeness test is the tuple scan above, not the library detector.
template <typename FreePred>
long long turan_by_enumeration(int n, FreePred&& free) {
    const std::int64_t total = turan::binom3(n);
    long long best = 0;
    for (std::uint64_t mask = 0; mask < (std::uint64_t(1) << total); ++mask) {
        std::vector<Triple> ts;
        for (std::int64_t r = 0; r < total; ++r)
            if (mask & (std::uint64_t(1) << r)) ts.push_back(turan::triple_unrank(r));
        Hypergraph3 h = Hypergraph3::from_triples(n, ts);
        if (free(h)) best = std::max(best, static_cast<long long>(h.edge_count()));
    }
    return best;
}

}  // namespace oracle
