#include "turan/canonical.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace turan {

namespace {
constexpr char kHexDigits[] = "0123456789abcdef";
}

std::string CanonicalForm::hex() const {
    std::string out;
    out.reserve(bytes.size() * 2);
    for (std::uint8_t b : bytes) {
        out.push_back(kHexDigits[b >> 4]);
        out.push_back(kHexDigits[b & 15]);
    }
    return out;
}

CanonicalForm CanonicalForm::from_hex(const std::string& s) {
    if (s.size() < 2 || s.size() % 2 != 0)
        throw std::invalid_argument("CanonicalForm: bad hex string");
    auto nibble = [](char c) -> int {
        if (c >= '0' && c <= '9') return c - '0';
        if (c >= 'a' && c <= 'f') return c - 'a' + 10;
        throw std::invalid_argument("CanonicalForm: bad hex digit");
    };
    CanonicalForm cf;
    cf.bytes.reserve(s.size() / 2);
    for (std::size_t i = 0; i < s.size(); i += 2)
        cf.bytes.push_back(
            static_cast<std::uint8_t>(nibble(s[i]) * 16 + nibble(s[i + 1])));
    cf.n = cf.bytes[0];
    return cf;
}

Hypergraph3 relabel(const Hypergraph3& h, std::span<const int> perm) {
    if (static_cast<int>(perm.size()) != h.vertex_count())
        throw std::invalid_argument("relabel: permutation size mismatch");
    std::vector<Triple> ts;
    ts.reserve(h.edge_count());
    for (const Triple& t : h.edges())
        ts.push_back(sorted_triple(perm[t.a], perm[t.b], perm[t.c]));
    return Hypergraph3::from_triples(h.vertex_count(), ts);
}

namespace {

// Iterated refinement. Vertex colors start from degrees and are re-ranked
// each round by (old color, sorted list of color pairs over incident edges).
// Color ids are ranks of sorted signatures, so they are label-invariant.
std::vector<int> refine_colors(const Hypergraph3& h) {
    const int n = h.vertex_count();
    std::vector<int> color(n, 0);
    for (const Triple& t : h.edges()) {
        ++color[t.a];
        ++color[t.b];
        ++color[t.c];
    }
    auto rerank = [&](std::vector<std::vector<int>>& sig) {
        std::vector<std::vector<int>> sorted = sig;
        std::sort(sorted.begin(), sorted.end());
        sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
        std::vector<int> next(n);
        for (int v = 0; v < n; ++v)
            next[v] = static_cast<int>(
                std::lower_bound(sorted.begin(), sorted.end(), sig[v]) -
                sorted.begin());
        return next;
    };
    {
        std::vector<std::vector<int>> sig(n);
        for (int v = 0; v < n; ++v) sig[v] = {color[v]};
        color = rerank(sig);
    }
    for (int round = 0; round < n; ++round) {
        std::vector<std::vector<int>> sig(n);
        for (int v = 0; v < n; ++v) sig[v] = {color[v]};
        for (const Triple& t : h.edges()) {
            auto fold = [&](int v, int x, int y) {
                int lo = std::min(color[x], color[y]);
                int hi = std::max(color[x], color[y]);
                sig[v].push_back(lo);
                sig[v].push_back(hi);
            };
            fold(t.a, t.b, t.c);
            fold(t.b, t.a, t.c);
            fold(t.c, t.a, t.b);
        }
        for (int v = 0; v < n; ++v)
            std::sort(sig[v].begin() + 1, sig[v].end());
        std::vector<int> next = rerank(sig);
        if (next == color) break;
        color = next;
    }
    return color;
}

struct CanonSearch {
    const Hypergraph3* h = nullptr;
    int n = 0;
    std::vector<std::vector<int>> class_order;  // vertices per color class
    std::vector<int> twin_class;                // twin equivalence id per vertex
    int twin_class_count = 0;
    std::vector<int> perm;        // position -> original vertex
    std::vector<char> used;       // original vertex assigned?
    BitVec cur, best;
    bool have_best = false;

    bool twins(int u, int w) const {
        for (int x = 0; x < n; ++x) {
            if (x == u || x == w) continue;
            for (int y = x + 1; y < n; ++y) {
                if (y == u || y == w) continue;
                if (h->has_edge(sorted_triple(u, x, y)) !=
                    h->has_edge(sorted_triple(w, x, y)))
                    return false;
            }
        }
        return true;
    }

    void compute_twins() {
        twin_class.assign(n, -1);
        int next = 0;
        for (int v = 0; v < n; ++v) {
            if (twin_class[v] >= 0) continue;
            twin_class[v] = next;
            for (int w = v + 1; w < n; ++w)
                if (twin_class[w] < 0 && twins(v, w)) twin_class[w] = next;
            ++next;
        }
        twin_class_count = next;
    }

    // Fills ranks [C(k,3), C(k+1,3)) given perm[0..k]; when comparing,
    // returns +1/0/-1 against the best vector.
    int fill_segment(int k, bool compare) {
        int cmp = 0;
        const int vk = perm[k];
        for (int j = 1; j < k; ++j) {
            for (int i = 0; i < j; ++i) {
                std::int64_t r = binom3(k) + binom2(j) + i;
                bool bit = h->has_edge(sorted_triple(perm[i], perm[j], vk));
                if (bit) cur.set(r);
                if (compare && cmp == 0 && bit != best.test(r))
                    cmp = bit ? 1 : -1;
            }
        }
        return cmp;
    }

    void clear_segment(int k) {
        for (std::int64_t r = binom3(k); r < binom3(k + 1); ++r) cur.reset(r);
    }

    // free_mode: the prefix is already strictly smaller than best, so no
    // comparisons are needed until best is replaced. Returns whether best
    // was updated somewhere in the subtree; the caller then resumes
    // comparing (its prefix now equals the prefix of the new best).
    bool dfs(int k, bool free_mode) {
        if (k == n) {
            if (free_mode || !have_best) {
                best = cur;
                have_best = true;
                return true;
            }
            return false;
        }
        int cls = 0;
        int covered = 0;
        for (std::size_t c = 0; c < class_order.size(); ++c) {
            covered += static_cast<int>(class_order[c].size());
            if (k < covered) {
                cls = static_cast<int>(c);
                break;
            }
        }
        bool updated_any = false;
        std::vector<char> tried(twin_class_count, 0);
        for (int v : class_order[cls]) {
            if (used[v]) continue;
            if (tried[twin_class[v]]) continue;
            tried[twin_class[v]] = 1;
            perm[k] = v;
            used[v] = 1;
            bool comparing = !free_mode && have_best;
            int cmp = fill_segment(k, comparing);
            if (!comparing || cmp <= 0) {
                bool child_free = free_mode || !have_best || cmp < 0;
                if (dfs(k + 1, child_free)) {
                    updated_any = true;
                    free_mode = false;
                }
            }
            clear_segment(k);
            used[v] = 0;
        }
        return updated_any;
    }
};

}  // namespace

CanonicalForm canonical_form(const Hypergraph3& h) {
    const int n = h.vertex_count();
    if (n > 255)
        throw std::invalid_argument("canonical_form: vertex count exceeds limit");
    CanonicalForm cf;
    cf.n = n;
    cf.bytes.push_back(static_cast<std::uint8_t>(n));
    if (n < 3) return cf;

    CanonSearch s;
    s.h = &h;
    s.n = n;
    std::vector<int> color = refine_colors(h);
    int classes = *std::max_element(color.begin(), color.end()) + 1;
    s.class_order.assign(classes, {});
    for (int v = 0; v < n; ++v) s.class_order[color[v]].push_back(v);
    s.compute_twins();
    s.perm.assign(n, -1);
    s.used.assign(n, 0);
    s.cur = BitVec(binom3(n));
    s.dfs(0, false);

    auto bytes = s.best.to_bytes();
    cf.bytes.insert(cf.bytes.end(), bytes.begin(), bytes.end());
    return cf;
}

Hypergraph3 canonical_representative(const CanonicalForm& cf) {
    if (cf.bytes.empty() || cf.bytes[0] != cf.n)
        throw std::invalid_argument("canonical_representative: corrupt form");
    int n = cf.n;
    std::vector<std::uint8_t> body(cf.bytes.begin() + 1, cf.bytes.end());
    return Hypergraph3::from_bits(
        n, BitVec::from_bytes(n >= 3 ? binom3(n) : 0, body));
}

bool is_isomorphic(const Hypergraph3& h1, const Hypergraph3& h2) {
    if (h1.vertex_count() != h2.vertex_count()) return false;
    if (h1.edge_count() != h2.edge_count()) return false;
    auto d1 = h1.degrees().degree;
    auto d2 = h2.degrees().degree;
    std::sort(d1.begin(), d1.end());
    std::sort(d2.begin(), d2.end());
    if (d1 != d2) return false;
    return canonical_form(h1) == canonical_form(h2);
}

}  // namespace turan
