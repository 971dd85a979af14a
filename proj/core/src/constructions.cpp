#include "turan/constructions.hpp"

#include <algorithm>
#include <stdexcept>

#include "turan/canonical.hpp"
#include "turan/embed.hpp"
#include "turan/patterns.hpp"

namespace turan {

namespace {

void require(bool ok, const std::string& msg) {
    if (!ok) throw std::invalid_argument(msg);
}

// all triples through vertex 0 that meet the set A (vertex mask)
void add_partial_star(std::vector<Triple>& ts, int n, std::uint32_t amask) {
    for (int b = 1; b < n; ++b)
        for (int c = b + 1; c < n; ++c)
            if (amask & ((1u << b) | (1u << c))) ts.push_back(Triple(0, b, c));
}

int minimal_path_vertices(const std::vector<int>& sig) {
    int total = 3;
    for (int s : sig) total += 3 - s;
    return total;
}

void validate_signature(const std::vector<int>& sig) {
    require(!sig.empty(), "minimal path signature must not be empty");
    for (int s : sig)
        require(s == 1 || s == 2, "signature entries must be 1 or 2");
    for (std::size_t i = 0; i + 1 < sig.size(); ++i)
        require(!(sig[i] == 2 && sig[i + 1] == 2),
                "adjacent overlaps of size 2 are impossible in a minimal path");
}

}  // namespace

std::string ConstructionKind::name() const {
    switch (tag) {
        case Tag::Complete: return "complete";
        case Tag::CompletePlusIsolated: return "complete-plus-isolated";
        case Tag::FullStar: return "star";
        case Tag::StarPlus: return "starplus";
        case Tag::PartialStar: return "partial-star";
        case Tag::SP: return "sp";
        case Tag::SK: return "sk";
        case Tag::Balloon: return "balloon";
        case Tag::CompactBalloon: return "cb";
        case Tag::CycleC4: return "c4";
        case Tag::MinimalPathMember: return "minpath";
        case Tag::LinearPath: return "linpath";
    }
    return "?";
}

Hypergraph3 construct(const ConstructionKind& kind) {
    using Tag = ConstructionKind::Tag;
    const int n = kind.n;
    std::vector<Triple> ts;
    switch (kind.tag) {
        case Tag::Complete:
            require(n >= 0, "complete: n must be non-negative");
            return Hypergraph3::complete(n);
        case Tag::CompletePlusIsolated: {
            int m = n - kind.extra;
            require(m >= 0 && kind.extra >= 0, "complete-plus-isolated: bad sizes");
            for (int a = 0; a < m; ++a)
                for (int b = a + 1; b < m; ++b)
                    for (int c = b + 1; c < m; ++c) ts.push_back(Triple(a, b, c));
            return Hypergraph3::from_triples(n, ts);
        }
        case Tag::FullStar:
            require(n >= 1, "star: n must be at least 1");
            for (int b = 1; b < n; ++b)
                for (int c = b + 1; c < n; ++c) ts.push_back(Triple(0, b, c));
            return Hypergraph3::from_triples(n, ts);
        case Tag::StarPlus:
            require(n >= 5, "starplus: n must be at least 5");
            for (int b = 1; b < n; ++b)
                for (int c = b + 1; c < n; ++c) ts.push_back(Triple(0, b, c));
            ts.push_back(Triple(1, 2, 3));
            return Hypergraph3::from_triples(n, ts);
        case Tag::PartialStar: {
            require(n >= 3, "partial-star: n must be at least 3");
            std::uint32_t amask = 0;
            for (int v : kind.apex_set) {
                require(v >= 1 && v < n, "partial-star: set must avoid the center");
                amask |= 1u << v;
            }
            require(amask != 0, "partial-star: set must be non-empty");
            add_partial_star(ts, n, amask);
            return Hypergraph3::from_triples(n, ts);
        }
        case Tag::SP:
            // 2-path (1,2,3),(3,4,5) plus all triples through 0 meeting it
            require(n >= 6, "sp: n must be at least 6");
            ts.push_back(Triple(1, 2, 3));
            ts.push_back(Triple(3, 4, 5));
            add_partial_star(ts, n, 0b111110);
            return Hypergraph3::from_triples(n, ts);
        case Tag::SK:
            // K4 on {1,2,3,4} plus all triples through 0 meeting it
            require(n >= 6, "sk: n must be at least 6");
            ts.push_back(Triple(1, 2, 3));
            ts.push_back(Triple(1, 2, 4));
            ts.push_back(Triple(1, 3, 4));
            ts.push_back(Triple(2, 3, 4));
            add_partial_star(ts, n, 0b11110);
            return Hypergraph3::from_triples(n, ts);
        case Tag::Balloon: {
            // center 0, y = {1,2,3}, z = {4,5,6}, star over {1,2,3,7,...}
            require(n >= 9, "balloon: n must be at least 9");
            for (int b = 1; b < n; ++b) {
                if (b >= 4 && b <= 6) continue;
                for (int c = b + 1; c < n; ++c) {
                    if (c >= 4 && c <= 6) continue;
                    ts.push_back(Triple(0, b, c));
                }
            }
            ts.push_back(Triple(1, 2, 3));
            ts.push_back(Triple(4, 5, 6));
            for (int y = 1; y <= 3; ++y)
                for (int z = 4; z <= 6; ++z) ts.push_back(Triple(0, y, z));
            return Hypergraph3::from_triples(n, ts);
        }
        case Tag::CompactBalloon: {
            // center 0, y = {1,2}, z = {3,4}, star over {1,2,5,...}
            require(n >= 8, "cb: n must be at least 8");
            for (int b = 1; b < n; ++b) {
                if (b == 3 || b == 4) continue;
                for (int c = b + 1; c < n; ++c) {
                    if (c == 3 || c == 4) continue;
                    ts.push_back(Triple(0, b, c));
                }
            }
            ts.push_back(Triple(1, 2, 3));
            ts.push_back(Triple(1, 2, 4));
            for (int y = 1; y <= 2; ++y)
                for (int z = 3; z <= 4; ++z) ts.push_back(Triple(0, y, z));
            ts.push_back(Triple(0, 3, 4));
            return Hypergraph3::from_triples(n, ts);
        }
        case Tag::CycleC4:
            return Hypergraph3::from_triples(
                6, {{{0, 1, 2}}, {{1, 2, 3}}, {{3, 4, 5}}, {{4, 5, 0}}});
        case Tag::MinimalPathMember: {
            validate_signature(kind.signature);
            int v = 0;
            Triple prev(0, 1, 2);
            ts.push_back(prev);
            v = 3;
            for (int s : kind.signature) {
                // reuse the last s vertices of prev, then fresh ones
                int keep[2] = {prev.c, prev.b};
                std::vector<int> nxt;
                for (int i = 0; i < s; ++i) nxt.push_back(keep[i]);
                while (static_cast<int>(nxt.size()) < 3) nxt.push_back(v++);
                std::sort(nxt.begin(), nxt.end());
                prev = Triple(nxt[0], nxt[1], nxt[2]);
                ts.push_back(prev);
            }
            return Hypergraph3::from_triples(v, ts);
        }
        case Tag::LinearPath: {
            int len = kind.extra;
            require(len >= 1, "linpath: length must be at least 1");
            require(n >= 2 * len + 1, "linpath: needs 2*len+1 vertices");
            for (int i = 0; i < len; ++i)
                ts.push_back(Triple(2 * i, 2 * i + 1, 2 * i + 2));
            return Hypergraph3::from_triples(n, ts);
        }
    }
    throw std::invalid_argument("construct: unknown kind");
}

long long expected_size(const ConstructionKind& kind) {
    using Tag = ConstructionKind::Tag;
    const int n = kind.n;
    switch (kind.tag) {
        case Tag::Complete:
            require(n >= 0, "complete: n must be non-negative");
            return binom3(n);
        case Tag::CompletePlusIsolated:
            require(n - kind.extra >= 0 && kind.extra >= 0,
                    "complete-plus-isolated: bad sizes");
            return binom3(n - kind.extra);
        case Tag::FullStar:
            require(n >= 1, "star: n must be at least 1");
            return binom2(n - 1);
        case Tag::StarPlus:
            require(n >= 5, "starplus: n must be at least 5");
            return binom2(n - 1) + 1;
        case Tag::PartialStar: {
            require(n >= 3, "partial-star: n must be at least 3");
            long long a = static_cast<long long>(kind.apex_set.size());
            return binom2(n - 1) - binom2(n - 1 - a);
        }
        case Tag::SP:
            require(n >= 6, "sp: n must be at least 6");
            return 5LL * n - 18;
        case Tag::SK:
            require(n >= 6, "sk: n must be at least 6");
            return 4LL * n - 10;
        case Tag::Balloon:
            require(n >= 9, "balloon: n must be at least 9");
            return binom2(n - 4) + 11;
        case Tag::CompactBalloon:
            require(n >= 8, "cb: n must be at least 8");
            return binom2(n - 3) + 7;
        case Tag::CycleC4:
            return 4;
        case Tag::MinimalPathMember:
            validate_signature(kind.signature);
            return static_cast<long long>(kind.signature.size()) + 1;
        case Tag::LinearPath:
            require(kind.extra >= 1 && n >= 2 * kind.extra + 1, "linpath: bad sizes");
            return kind.extra;
    }
    throw std::invalid_argument("expected_size: unknown kind");
}

SelfCheckReport self_check(const ConstructionKind& kind) {
    using Tag = ConstructionKind::Tag;
    Hypergraph3 h = construct(kind);
    SelfCheckReport rep;
    rep.kind = kind.name();
    rep.n = h.vertex_count();
    rep.edges = static_cast<long long>(h.edge_count());
    rep.expected = expected_size(kind);
    auto claim = [&](const std::string& name, bool ok) {
        rep.claims.push_back({name, ok});
    };
    claim("size matches closed form", rep.edges == rep.expected);

    const FamilySpec p4{PatternSpec::minimal_path(4)};
    switch (kind.tag) {
        case Tag::SP:
        case Tag::SK:
            claim("p4-free", is_family_free(h, p4));
            claim("m3-free", matching_number(h) < 3);
            claim("contains c4", find_minimal_cycle(h, 4).has_value());
            break;
        case Tag::Balloon:
            claim("p4-free", is_family_free(h, p4));
            claim("contains m3", matching_number(h) >= 3);
            break;
        case Tag::CompactBalloon: {
            claim("p4-free", is_family_free(h, p4));
            Hypergraph3 splus = construct(ConstructionKind::star_plus(kind.n));
            claim("not inside starplus", !embeds(h, splus).has_value());
            break;
        }
        case Tag::StarPlus:
        case Tag::FullStar:
        case Tag::PartialStar:
            claim("p4-free", is_family_free(h, p4));
            break;
        case Tag::Complete:
        case Tag::CompletePlusIsolated: {
            int core = kind.tag == Tag::Complete ? kind.n : kind.n - kind.extra;
            claim(core <= 6 ? "p4-free" : "contains p4",
                  is_family_free(h, p4) == (core <= 6));
            break;
        }
        case Tag::CycleC4:
            claim("is its own 4-cycle", find_minimal_cycle(h, 4).has_value());
            claim("p4-free", is_family_free(h, p4));
            break;
        case Tag::MinimalPathMember:
            claim("is a minimal path of its length",
                  find_minimal_path(h, static_cast<int>(kind.signature.size()) + 1)
                      .has_value());
            break;
        case Tag::LinearPath:
            if (kind.extra >= 2)
                claim("is a linear path of its length",
                      find_linear_path(h, kind.extra).has_value());
            break;
    }
    rep.pass = std::all_of(rep.claims.begin(), rep.claims.end(),
                           [](const SelfCheckItem& c) { return c.pass; });
    return rep;
}

}  // namespace turan
