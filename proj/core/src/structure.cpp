#include "turan/structure.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <bit>
#include <numeric>
#include <set>
#include <stdexcept>
#include <thread>

#include "turan/patterns.hpp"

namespace turan {

namespace {

std::uint32_t support_of(std::span<const Triple> edges) {
    std::uint32_t m = 0;
    for (const Triple& t : edges) m |= t.vertex_mask();
    return m;
}

bool intersecting_family(std::span<const Triple> edges) {
    for (std::size_t i = 0; i < edges.size(); ++i)
        for (std::size_t j = i + 1; j < edges.size(); ++j)
            if (!edges[i].intersects(edges[j])) return false;
    return true;
}

Hypergraph3 edges_avoiding(const Hypergraph3& h, std::uint32_t mask) {
    std::vector<Triple> ts;
    for (const Triple& t : h.edges())
        if (!(t.vertex_mask() & mask)) ts.push_back(t);
    return Hypergraph3::from_triples(h.vertex_count(), ts);
}

}  // namespace

bool cross_intersecting(std::span<const Triple> f1, std::span<const Triple> f2) {
    for (const Triple& a : f1)
        for (const Triple& b : f2)
            if (!a.intersects(b)) return false;
    return true;
}

std::vector<Triple> lex_min_maximum_matching(const Hypergraph3& h) {
    const int nu = matching_number(h);
    std::vector<Triple> chosen;
    std::uint32_t used = 0;
    for (const Triple& e : h.edges()) {
        if (static_cast<int>(chosen.size()) == nu) break;
        if (e.vertex_mask() & used) continue;
        int rest = matching_number(edges_avoiding(h, used | e.vertex_mask()));
        if (static_cast<int>(chosen.size()) + 1 + rest == nu) {
            chosen.push_back(e);
            used |= e.vertex_mask();
        }
    }
    return chosen;
}

MatchingDecomposition decompose_by_matching(const Hypergraph3& h,
                                            std::span<const Triple> m) {
    const int k = static_cast<int>(m.size());
    std::uint32_t used = 0;
    for (int i = 0; i < k; ++i) {
        Triple t = sorted_triple(m[i].a, m[i].b, m[i].c);
        if (!h.has_edge(t))
            throw std::invalid_argument("decompose: matching edge not in graph");
        if (t.vertex_mask() & used)
            throw std::invalid_argument("decompose: edges are not disjoint");
        used |= t.vertex_mask();
    }
    if (matching_number(h) != k)
        throw std::invalid_argument("decompose: matching is not maximum");

    MatchingDecomposition d;
    d.matching.assign(m.begin(), m.end());
    for (const Triple& e : h.edges()) {
        std::uint32_t idx = 0;
        for (int i = 0; i < k; ++i)
            if (e.intersects(m[i])) idx |= 1u << i;
        if (idx == 0)
            throw std::invalid_argument(
                "decompose: edge disjoint from the matching, not maximal");
        d.parts[idx].push_back(e);
    }
    return d;
}

SplitLemmaReport verify_split_lemma(const Hypergraph3& h) {
    const FamilySpec p4{PatternSpec::minimal_path(4)};
    if (!h.is_connected())
        throw std::invalid_argument("verify_split_lemma: graph must be connected");
    if (!is_family_free(h, p4))
        throw std::invalid_argument("verify_split_lemma: graph must be p4-free");
    int nu = matching_number(h);
    if (nu != 2 && nu != 3)
        throw std::invalid_argument(
            "verify_split_lemma: matching number must be 2 or 3");

    std::vector<Triple> m = lex_min_maximum_matching(h);
    SplitLemmaReport rep;
    rep.nu = nu;

    auto part_or_empty = [](const MatchingDecomposition& d, std::uint32_t mask) {
        const auto* p = d.part(mask);
        return p ? *p : std::vector<Triple>{};
    };

    if (nu == 3) {
        // normalize so the one admissible pairwise class is F_12
        MatchingDecomposition probe = decompose_by_matching(h, m);
        int pairwise_nonempty = 0;
        std::uint32_t which = 0;
        for (std::uint32_t mask : {0b011u, 0b101u, 0b110u}) {
            if (!part_or_empty(probe, mask).empty()) {
                ++pairwise_nonempty;
                which = mask;
            }
        }
        rep.clauses.push_back(
            {"at most one pairwise class non-empty", pairwise_nonempty <= 1,
             std::to_string(pairwise_nonempty) + " non-empty"});
        if (which == 0b101u) std::swap(m[1], m[2]);
        if (which == 0b110u) std::swap(m[0], m[2]);
    }

    MatchingDecomposition d = decompose_by_matching(h, m);
    rep.matching = m;

    auto f1 = part_or_empty(d, 0b001), f2 = part_or_empty(d, 0b010);
    auto f12 = part_or_empty(d, nu == 2 ? 0b11 : 0b011);

    if (nu == 2) {
        rep.clauses.push_back({"support(F1) and support(F2) disjoint",
                               (support_of(f1) & support_of(f2)) == 0, ""});
        rep.clauses.push_back({"F1, F2 non-empty intersecting",
                               !f1.empty() && !f2.empty() &&
                                   intersecting_family(f1) &&
                                   intersecting_family(f2),
                               ""});
        rep.clauses.push_back({"F12 non-empty", !f12.empty(), ""});
        std::vector<Triple> f1f2 = f1;
        f1f2.insert(f1f2.end(), f2.begin(), f2.end());
        rep.clauses.push_back({"(F1+F2, F12) cross-intersecting",
                               cross_intersecting(f1f2, f12), ""});
    } else {
        auto f3 = part_or_empty(d, 0b100);
        auto f123 = part_or_empty(d, 0b111);
        bool disj = (support_of(f1) & support_of(f2)) == 0 &&
                    (support_of(f1) & support_of(f3)) == 0 &&
                    (support_of(f2) & support_of(f3)) == 0 &&
                    (support_of(f12) & support_of(f3)) == 0;
        rep.clauses.push_back(
            {"singleton supports pairwise disjoint, F12 avoids F3", disj, ""});
        rep.clauses.push_back({"F1, F2, F3 non-empty intersecting",
                               !f1.empty() && !f2.empty() && !f3.empty() &&
                                   intersecting_family(f1) &&
                                   intersecting_family(f2) &&
                                   intersecting_family(f3),
                               ""});
        rep.clauses.push_back({"F123 non-empty", !f123.empty(), ""});
        std::vector<Triple> all = f1;
        all.insert(all.end(), f2.begin(), f2.end());
        all.insert(all.end(), f3.begin(), f3.end());
        all.insert(all.end(), f12.begin(), f12.end());
        std::vector<Triple> f1f2 = f1;
        f1f2.insert(f1f2.end(), f2.begin(), f2.end());
        rep.clauses.push_back(
            {"(F1+F2+F3+F12, F123) and (F1+F2, F12) cross-intersecting",
             cross_intersecting(all, f123) && cross_intersecting(f1f2, f12), ""});
    }
    rep.pass = std::all_of(rep.clauses.begin(), rep.clauses.end(),
                           [](const ClauseResult& c) { return c.pass; });
    return rep;
}

// ---------------------------------------------------------------------------
// exhaustive 5-vertex two-graph enumeration

namespace {

constexpr int kPairs = 10;  // C(5,2)
constexpr int kMasks = 1 << kPairs;

struct PairTables {
    // adjacency bitmask of each vertex for every edge mask
    std::array<std::array<std::uint8_t, 5>, kMasks> adj;
    std::array<std::uint8_t, kMasks> degmax;
    std::array<std::uint8_t, kMasks> deg_le2;
    std::vector<std::uint16_t> k23_masks;   // all K_{2,3} edge sets
    std::vector<std::uint16_t> c5_masks;    // all 5-cycle edge sets
    std::array<std::uint16_t, 120> perm_of_pair[kPairs];  // bit image per perm
    std::vector<std::array<int, 5>> perms;

    PairTables() {
        for (int mask = 0; mask < kMasks; ++mask) {
            std::array<std::uint8_t, 5> a{};
            for (int b = 1; b < 5; ++b)
                for (int x = 0; x < b; ++x)
                    if (mask & (1 << pair_rank(x, b))) {
                        a[x] |= 1 << b;
                        a[b] |= 1 << x;
                    }
            adj[mask] = a;
            int dmax = 0, le2 = 0;
            for (int v = 0; v < 5; ++v) {
                int d = std::popcount(static_cast<unsigned>(a[v]));
                dmax = std::max(dmax, d);
                if (d <= 2) ++le2;
            }
            degmax[mask] = static_cast<std::uint8_t>(dmax);
            deg_le2[mask] = static_cast<std::uint8_t>(le2);
        }
        // K_{2,3}: choose the 2-side
        for (int s1 = 0; s1 < 5; ++s1)
            for (int s2 = s1 + 1; s2 < 5; ++s2) {
                std::uint16_t m = 0;
                for (int t = 0; t < 5; ++t) {
                    if (t == s1 || t == s2) continue;
                    m |= 1 << pair_rank(std::min(s1, t), std::max(s1, t));
                    m |= 1 << pair_rank(std::min(s2, t), std::max(s2, t));
                }
                k23_masks.push_back(m);
            }
        // 5-cycles: orderings up to rotation and reflection
        std::array<int, 5> v{0, 1, 2, 3, 4};
        std::array<int, 4> rest{1, 2, 3, 4};
        std::sort(rest.begin(), rest.end());
        do {
            if (rest[0] > rest[3]) continue;  // kill reflection
            std::uint16_t m = 0;
            int cyc[5] = {0, rest[0], rest[1], rest[2], rest[3]};
            for (int i = 0; i < 5; ++i) {
                int x = cyc[i], y = cyc[(i + 1) % 5];
                m |= 1 << pair_rank(std::min(x, y), std::max(x, y));
            }
            c5_masks.push_back(m);
        } while (std::next_permutation(rest.begin(), rest.end()));
        (void)v;
        // permutations acting on pair bits
        std::array<int, 5> p{0, 1, 2, 3, 4};
        do {
            perms.push_back(p);
        } while (std::next_permutation(p.begin(), p.end()));
        for (int b = 1; b < 5; ++b)
            for (int x = 0; x < b; ++x) {
                int bit = static_cast<int>(pair_rank(x, b));
                for (std::size_t pi = 0; pi < perms.size(); ++pi) {
                    int ix = perms[pi][x], ib = perms[pi][b];
                    perm_of_pair[bit][pi] = static_cast<std::uint16_t>(
                        1 << pair_rank(std::min(ix, ib), std::max(ix, ib)));
                }
            }
    }

    std::uint16_t apply_perm(std::uint16_t mask, std::size_t pi) const {
        std::uint16_t out = 0;
        while (mask) {
            int bit = std::countr_zero(mask);
            mask &= mask - 1;
            out |= perm_of_pair[bit][pi];
        }
        return out;
    }
};

const PairTables& tables() {
    static PairTables t;
    return t;
}

// An rr-bb path: v1v2 v2v3 in R, v3v4 v4v5 in B, five distinct vertices.
bool has_rr_bb(const std::array<std::uint8_t, 5>& r,
               const std::array<std::uint8_t, 5>& b) {
    for (int v2 = 0; v2 < 5; ++v2) {
        std::uint8_t r2 = r[v2];
        if (!r2) continue;
        for (int v3 = 0; v3 < 5; ++v3) {
            if (v3 == v2 || !(r2 & (1 << v3))) continue;
            std::uint8_t c4 = b[v3] & ~static_cast<std::uint8_t>((1 << v2) | (1 << v3));
            while (c4) {
                int v4 = std::countr_zero(static_cast<unsigned>(c4));
                c4 &= c4 - 1;
                std::uint8_t done = (1 << v2) | (1 << v3) | (1 << v4);
                std::uint8_t first = r[v2] & ~done;
                std::uint8_t last = b[v4] & ~done;
                if (!first || !last) continue;
                if (first == last &&
                    std::popcount(static_cast<unsigned>(first)) == 1)
                    continue;
                return true;
            }
        }
    }
    return false;
}

// type (A): some pair {a,b} with ab outside R and B inside T+{ab}, where T
// is the triangle on the other three vertices
bool matches_type_a(std::uint16_t r, std::uint16_t bmask) {
    for (int a = 0; a < 5; ++a)
        for (int b2 = a + 1; b2 < 5; ++b2) {
            int ab = static_cast<int>(pair_rank(a, b2));
            if (r & (1 << ab)) continue;
            std::uint16_t allowed = 1 << ab;
            int rest[3], ri = 0;
            for (int v = 0; v < 5; ++v)
                if (v != a && v != b2) rest[ri++] = v;
            for (int i = 0; i < 3; ++i)
                for (int j = i + 1; j < 3; ++j)
                    allowed |= 1 << pair_rank(std::min(rest[i], rest[j]),
                                              std::max(rest[i], rest[j]));
            if ((bmask & ~allowed) == 0) return true;
        }
    return false;
}

bool matches_type_b(std::uint16_t r, std::uint16_t bmask) {
    if (r != kMasks - 1) return false;
    if (std::popcount(static_cast<unsigned>(bmask)) != 2) return false;
    int b1 = std::countr_zero(static_cast<unsigned>(bmask));
    int b2 = std::countr_zero(static_cast<unsigned>(bmask & (bmask - 1)));
    auto [x1, y1] = pair_unrank(b1);
    auto [x2, y2] = pair_unrank(b2);
    std::uint32_t m1 = (1u << x1) | (1u << y1), m2 = (1u << x2) | (1u << y2);
    return (m1 & m2) == 0;
}

bool matches_type_c(std::uint16_t r, std::uint16_t bmask) {
    if (r != bmask) return false;
    for (int skip = 0; skip < 5; ++skip) {
        std::uint16_t k4 = 0;
        for (int b = 1; b < 5; ++b)
            for (int x = 0; x < b; ++x)
                if (x != skip && b != skip) k4 |= 1 << pair_rank(x, b);
        if (r == k4) return true;
    }
    return false;
}

bool matches_type_d(std::uint16_t r, std::uint16_t bmask) {
    for (int v = 0; v < 5; ++v) {
        std::uint16_t star = 0;
        for (int u = 0; u < 5; ++u)
            if (u != v) star |= 1 << pair_rank(std::min(u, v), std::max(u, v));
        if ((r & star) != star || (bmask & star) != star) continue;
        std::uint16_t m1 = r & ~star, m2 = bmask & ~star;
        if (m1 == m2) continue;
        auto is_pm = [&](std::uint16_t m) {
            if (std::popcount(static_cast<unsigned>(m)) != 2) return false;
            std::uint32_t verts = 0;
            std::uint16_t mm = m;
            while (mm) {
                int bit = std::countr_zero(static_cast<unsigned>(mm));
                mm &= mm - 1;
                auto [x, y] = pair_unrank(bit);
                verts |= (1u << x) | (1u << y);
            }
            return verts == (0x1fu & ~(1u << v));
        };
        if (is_pm(m1) && is_pm(m2)) return true;
    }
    return false;
}

}  // namespace

LemmaFiveReport verify_lemma_five(int worker_count) {
    const PairTables& t = tables();
    LemmaFiveReport rep;
    rep.pairs_total = static_cast<long long>(kMasks) * kMasks;

    struct Chunk {
        long long free_pairs = 0;
        int max_sum = 0;
        long long at_max = 0;
        std::vector<std::pair<std::uint16_t, std::uint16_t>> ge12;
        bool k23_ok = true, c5_ok = true;
    };

    int workers = std::max(1, worker_count);
    std::vector<Chunk> chunks(workers);
    std::vector<std::thread> pool;
    for (int wi = 0; wi < workers; ++wi) {
        pool.emplace_back([&, wi] {
            Chunk& ch = chunks[wi];
            for (int r = wi; r < kMasks; r += workers) {
                int rpc = std::popcount(static_cast<unsigned>(r));
                bool r_has_k23 = false, r_has_c5 = false;
                for (std::uint16_t m : t.k23_masks)
                    if ((r & m) == m) {
                        r_has_k23 = true;
                        break;
                    }
                for (std::uint16_t m : t.c5_masks)
                    if ((r & m) == m) {
                        r_has_c5 = true;
                        break;
                    }
                for (int b = 0; b < kMasks; ++b) {
                    if (has_rr_bb(t.adj[r], t.adj[b])) continue;
                    ++ch.free_pairs;
                    int sum = rpc + std::popcount(static_cast<unsigned>(b));
                    if (sum > ch.max_sum) {
                        ch.max_sum = sum;
                        ch.at_max = 0;
                    }
                    if (sum == ch.max_sum) ++ch.at_max;
                    if (sum >= 12)
                        ch.ge12.emplace_back(static_cast<std::uint16_t>(r),
                                             static_cast<std::uint16_t>(b));
                    int bpc = sum - rpc;
                    if (r_has_k23 && bpc > 4) ch.k23_ok = false;
                    if (r_has_c5 && rpc >= 6 && bpc > 4) ch.c5_ok = false;
                }
            }
        });
    }
    for (auto& th : pool) th.join();

    std::vector<std::pair<std::uint16_t, std::uint16_t>> ge12;
    rep.corollary_k23 = true;
    rep.corollary_c5 = true;
    for (const Chunk& ch : chunks) {
        rep.free_pairs += ch.free_pairs;
        if (ch.max_sum > rep.max_sum) {
            rep.max_sum = ch.max_sum;
            rep.at_max = 0;
        }
        if (ch.max_sum == rep.max_sum) rep.at_max += ch.at_max;
        ge12.insert(ge12.end(), ch.ge12.begin(), ch.ge12.end());
        rep.corollary_k23 = rep.corollary_k23 && ch.k23_ok;
        rep.corollary_c5 = rep.corollary_c5 && ch.c5_ok;
    }
    rep.at_least_12 = static_cast<long long>(ge12.size());

    std::set<std::uint32_t> classes_noswap, classes_swap;
    for (auto [r, b] : ge12) {
        std::uint32_t best_ns = 0xffffffffu, best_sw = 0xffffffffu;
        for (std::size_t pi = 0; pi < t.perms.size(); ++pi) {
            std::uint16_t rr = t.apply_perm(r, pi), bb = t.apply_perm(b, pi);
            best_ns = std::min(best_ns,
                               (std::uint32_t(rr) << kPairs) | bb);
            best_sw = std::min({best_sw, (std::uint32_t(rr) << kPairs) | bb,
                                (std::uint32_t(bb) << kPairs) | rr});
        }
        classes_noswap.insert(best_ns);
        classes_swap.insert(best_sw);

        // classify with |R| >= |B| normalized; on ties try both orientations
        int rc = std::popcount(static_cast<unsigned>(r));
        int bc = std::popcount(static_cast<unsigned>(b));
        std::uint16_t R = rc >= bc ? r : b, B = rc >= bc ? b : r;
        auto classify = [&](std::uint16_t rm, std::uint16_t bm) {
            if (matches_type_a(rm, bm)) return 'a';
            if (matches_type_b(rm, bm)) return 'b';
            if (matches_type_c(rm, bm)) return 'c';
            if (matches_type_d(rm, bm)) return 'd';
            return '?';
        };
        char cls = classify(R, B);
        if (cls == '?' && rc == bc) cls = classify(B, R);
        switch (cls) {
            case 'a': ++rep.types.type_a; break;
            case 'b': ++rep.types.type_b; break;
            case 'c': ++rep.types.type_c; break;
            case 'd': ++rep.types.type_d; break;
            default: ++rep.types.unclassified; break;
        }
    }
    rep.iso_classes_ge12_without_swap = static_cast<long long>(classes_noswap.size());
    rep.iso_classes_ge12_with_swap = static_cast<long long>(classes_swap.size());

    rep.pass = rep.max_sum == 13 && rep.types.unclassified == 0 &&
               rep.types.type_a > 0 && rep.types.type_b > 0 &&
               rep.types.type_c > 0 && rep.types.type_d > 0 &&
               rep.corollary_k23 && rep.corollary_c5;
    return rep;
}

LemmaDegreeReport verify_lemma_degree() {
    const PairTables& t = tables();
    std::vector<int> admissible;
    for (int m = 0; m < kMasks; ++m)
        if (t.degmax[m] <= 3 && t.deg_le2[m] >= 3) admissible.push_back(m);

    LemmaDegreeReport rep;
    bool k23_ok = true;
    for (int r : admissible) {
        bool r_has_k23 = false;
        for (std::uint16_t m : t.k23_masks)
            if ((r & m) == m) {
                r_has_k23 = true;
                break;
            }
        for (int b : admissible) {
            if (has_rr_bb(t.adj[r], t.adj[b])) continue;
            int sum = std::popcount(static_cast<unsigned>(r)) +
                      std::popcount(static_cast<unsigned>(b));
            if (sum > rep.max_sum) {
                rep.max_sum = sum;
                rep.witness_r.clear();
                rep.witness_b.clear();
                for (int bit = 0; bit < kPairs; ++bit) {
                    if (r & (1 << bit)) rep.witness_r.push_back(pair_unrank(bit));
                    if (b & (1 << bit)) rep.witness_b.push_back(pair_unrank(bit));
                }
            }
            if (r_has_k23 && sum > 10) k23_ok = false;
        }
    }
    rep.k23_within_bound = k23_ok;
    rep.pass = rep.max_sum <= 10 && rep.k23_within_bound;
    return rep;
}

}  // namespace turan
