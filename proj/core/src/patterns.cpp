#include "turan/patterns.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <mutex>
#include <stdexcept>

#include "turan/embed.hpp"
#include "turan/io.hpp"

namespace turan {

// ---------------------------------------------------------------------------
// TripleUniverse / ActiveGraph

const TripleUniverse& TripleUniverse::of(int n) {
    static std::mutex mu;
    static std::array<std::unique_ptr<TripleUniverse>, kMaxVertices + 1> cache;
    if (n < 0 || n > kMaxVertices)
        throw std::invalid_argument("TripleUniverse: vertex count out of range");
    std::lock_guard<std::mutex> lock(mu);
    if (!cache[n]) {
        auto u = std::make_unique<TripleUniverse>();
        u->n = n;
        u->total = binom3(n);
        u->words = static_cast<int>((u->total + 63) / 64);
        if (u->words == 0) u->words = 1;
        u->triples.reserve(u->total);
        u->vmask.reserve(u->total);
        for (std::int64_t r = 0; r < u->total; ++r) {
            Triple t = triple_unrank(r);
            u->triples.push_back(t);
            u->vmask.push_back(t.vertex_mask());
        }
        u->meets.assign(u->total * u->words, 0);
        u->vinc.assign(static_cast<std::size_t>(std::max(n, 1)) * u->words, 0);
        for (std::int64_t r = 0; r < u->total; ++r) {
            const Triple& t = u->triples[r];
            for (int v : {int(t.a), int(t.b), int(t.c)})
                u->vinc[v * u->words + (r >> 6)] |= std::uint64_t(1) << (r & 63);
        }
        for (std::int64_t r = 0; r < u->total; ++r) {
            std::uint64_t* row = u->meets.data() + r * u->words;
            const Triple& t = u->triples[r];
            for (int v : {int(t.a), int(t.b), int(t.c)}) {
                const std::uint64_t* inc = u->vinc.data() + v * u->words;
                for (int w = 0; w < u->words; ++w) row[w] |= inc[w];
            }
        }
        cache[n] = std::move(u);
    }
    return *cache[n];
}

ActiveGraph::ActiveGraph(int n) : uni_(&TripleUniverse::of(n)) {
    chosen_.assign(uni_->words, 0);
    vcount_.assign(std::max(n, 1), 0);
}

ActiveGraph ActiveGraph::of_hypergraph(const Hypergraph3& h) {
    ActiveGraph g(h.vertex_count());
    for (const Triple& t : h.edges()) g.push(triple_rank(t));
    return g;
}

void ActiveGraph::push(std::int64_t rank) {
    chosen_[rank >> 6] |= std::uint64_t(1) << (rank & 63);
    stack_.push_back(rank);
    const Triple& t = uni_->triples[rank];
    for (int v : {int(t.a), int(t.b), int(t.c)}) {
        if (vcount_[v]++ == 0) support_ |= 1u << v;
    }
}

void ActiveGraph::pop() {
    std::int64_t rank = stack_.back();
    stack_.pop_back();
    chosen_[rank >> 6] &= ~(std::uint64_t(1) << (rank & 63));
    const Triple& t = uni_->triples[rank];
    for (int v : {int(t.a), int(t.b), int(t.c)}) {
        if (--vcount_[v] == 0) support_ &= ~(1u << v);
    }
}

Hypergraph3 ActiveGraph::to_hypergraph() const {
    std::vector<Triple> ts;
    ts.reserve(stack_.size());
    for (std::int64_t r : stack_) ts.push_back(uni_->triples[r]);
    return Hypergraph3::from_triples(uni_->n, ts);
}

// ---------------------------------------------------------------------------
// word helpers

namespace {

inline void w_zero(std::uint64_t* d, int w) {
    for (int i = 0; i < w; ++i) d[i] = 0;
}
inline void w_copy(std::uint64_t* d, const std::uint64_t* a, int w) {
    for (int i = 0; i < w; ++i) d[i] = a[i];
}
inline void w_and(std::uint64_t* d, const std::uint64_t* a, int w) {
    for (int i = 0; i < w; ++i) d[i] &= a[i];
}
inline void w_andn(std::uint64_t* d, const std::uint64_t* a, int w) {
    for (int i = 0; i < w; ++i) d[i] &= ~a[i];
}
inline void w_clear(std::uint64_t* d, std::int64_t bit) {
    d[bit >> 6] &= ~(std::uint64_t(1) << (bit & 63));
}
inline bool w_any(const std::uint64_t* d, int w) {
    for (int i = 0; i < w; ++i)
        if (d[i]) return true;
    return false;
}

template <typename F>
inline bool w_for_each(const std::uint64_t* d, int w, F&& f) {
    for (int i = 0; i < w; ++i) {
        std::uint64_t x = d[i];
        while (x) {
            int b = std::countr_zero(x);
            x &= x - 1;
            if (f(std::int64_t(i) * 64 + b)) return true;
        }
    }
    return false;
}

// DFS for a minimal/linear path over the current edge set; seq holds colex
// ranks. Candidates run in ascending rank order so the first witness is the
// lexicographically smallest edge-rank sequence.
struct PathFinder {
    const ActiveGraph* g;
    const TripleUniverse* u;
    int w, len;
    bool linear;
    std::vector<std::int64_t> seq;
    std::vector<std::uint64_t> forb;  // per level: union of meets of seq[0..i-1]

    bool extend(int i) {
        if (i == len) return true;
        // candidates: meet seq[i-1], avoid everything before it
        std::vector<std::uint64_t> cand(w);
        w_copy(cand.data(), g->chosen(), w);
        w_and(cand.data(), u->meets_row(seq[i - 1]), w);
        w_andn(cand.data(), forb.data() + std::size_t(i - 1) * w, w);
        w_clear(cand.data(), seq[i - 1]);
        return w_for_each(cand.data(), w, [&](std::int64_t r) {
            if (linear &&
                std::popcount(u->vmask[r] & u->vmask[seq[i - 1]]) != 1)
                return false;
            seq[i] = r;
            if (i + 1 < len) {
                std::uint64_t* nf = forb.data() + std::size_t(i) * w;
                w_copy(nf, forb.data() + std::size_t(i - 1) * w, w);
                const std::uint64_t* m = u->meets_row(seq[i - 1]);
                for (int k = 0; k < w; ++k) nf[k] |= m[k];
            }
            return extend(i + 1);
        });
    }

    std::optional<std::vector<std::int64_t>> run() {
        seq.assign(len, 0);
        forb.assign(std::size_t(std::max(len - 1, 1)) * w, 0);
        std::optional<std::vector<std::int64_t>> out;
        w_for_each(g->chosen(), w, [&](std::int64_t r) {
            seq[0] = r;
            if (extend(1)) {
                out = seq;
                return true;
            }
            return false;
        });
        return out;
    }
};

// Minimal cycle finder; seq[0] is the smallest rank in the cycle.
struct CycleFinder {
    const ActiveGraph* g;
    const TripleUniverse* u;
    int w, len;
    std::vector<std::int64_t> seq;

    bool extend(int i) {
        std::vector<std::uint64_t> cand(w);
        w_copy(cand.data(), g->chosen(), w);
        w_and(cand.data(), u->meets_row(seq[i - 1]), w);
        if (i == len - 1) w_and(cand.data(), u->meets_row(seq[0]), w);
        // disjoint from all non-adjacent placed edges
        for (int j = (i == len - 1 ? 1 : 0); j <= i - 2; ++j)
            w_andn(cand.data(), u->meets_row(seq[j]), w);
        w_clear(cand.data(), seq[i - 1]);
        w_clear(cand.data(), seq[0]);
        return w_for_each(cand.data(), w, [&](std::int64_t r) {
            if (r < seq[0]) return false;  // rotation break: seq[0] is minimal
            seq[i] = r;
            if (i == len - 1) {
                if (len == 3) {
                    // explicitly forbid a vertex lying in all three edges
                    if (u->vmask[seq[0]] & u->vmask[seq[1]] & u->vmask[seq[2]])
                        return false;
                }
                return true;
            }
            return extend(i + 1);
        });
    }

    std::optional<std::vector<std::int64_t>> run() {
        seq.assign(len, 0);
        std::optional<std::vector<std::int64_t>> out;
        w_for_each(g->chosen(), w, [&](std::int64_t r) {
            seq[0] = r;
            if (extend(1)) {
                out = seq;
                return true;
            }
            return false;
        });
        return out;
    }
};

std::uint32_t edge_set_support(const ActiveGraph& g, const std::uint64_t* avail) {
    std::uint32_t s = 0;
    const auto& u = g.universe();
    w_for_each(avail, g.words(), [&](std::int64_t r) {
        s |= u.vmask[r];
        return false;
    });
    return s;
}

// Branch and bound for the matching number over `avail`; stops early once
// `target` disjoint edges are found (target < 0 searches for the maximum).
struct MatchingFinder {
    const ActiveGraph* g;
    const TripleUniverse* u;
    int w;
    int best = 0;
    int target = -1;
    std::vector<std::int64_t> chosen, best_witness;

    void dfs(std::vector<std::uint64_t>& avail, int cur) {
        if (target >= 0 && best >= target) return;
        if (cur > best) {
            best = cur;
            best_witness = chosen;
        }
        std::uint32_t support = edge_set_support(*g, avail.data());
        if (cur + std::popcount(support) / 3 <= best) return;
        std::int64_t t = -1;
        w_for_each(avail.data(), w, [&](std::int64_t r) {
            t = r;
            return true;
        });
        if (t < 0) return;
        std::vector<std::uint64_t> inc(avail);
        w_andn(inc.data(), u->meets_row(t), w);
        chosen.push_back(t);
        dfs(inc, cur + 1);
        chosen.pop_back();
        if (target >= 0 && best >= target) return;
        std::vector<std::uint64_t> exc(avail);
        w_clear(exc.data(), t);
        dfs(exc, cur);
    }

    int run(const std::uint64_t* avail0, int tgt) {
        target = tgt;
        best = 0;
        chosen.clear();
        best_witness.clear();
        std::vector<std::uint64_t> avail(avail0, avail0 + w);
        dfs(avail, 0);
        return best;
    }
};

}  // namespace

// ---------------------------------------------------------------------------
// PatternSpec / FamilySpec

PatternSpec PatternSpec::minimal_path(int len) {
    if (len < 2) throw std::invalid_argument("minimal path length must be >= 2");
    return {PatternKind::MinimalPath, len, nullptr};
}
PatternSpec PatternSpec::linear_path(int len) {
    if (len < 2) throw std::invalid_argument("linear path length must be >= 2");
    return {PatternKind::LinearPath, len, nullptr};
}
PatternSpec PatternSpec::minimal_cycle(int len) {
    if (len < 3) throw std::invalid_argument("minimal cycle length must be >= 3");
    return {PatternKind::MinimalCycle, len, nullptr};
}
PatternSpec PatternSpec::matching(int size) {
    if (size < 1) throw std::invalid_argument("matching size must be >= 1");
    return {PatternKind::Matching, size, nullptr};
}
PatternSpec PatternSpec::explicit_graph(Hypergraph3 g) {
    if (g.edge_count() == 0)
        throw std::invalid_argument("explicit pattern must not be empty");
    return {PatternKind::Explicit, 0,
            std::make_shared<const Hypergraph3>(std::move(g))};
}

std::string PatternSpec::code() const {
    switch (kind) {
        case PatternKind::MinimalPath:
            return "p" + std::to_string(param);
        case PatternKind::LinearPath:
            return "lp" + std::to_string(param);
        case PatternKind::MinimalCycle:
            return "c" + std::to_string(param);
        case PatternKind::Matching:
            return "m" + std::to_string(param);
        case PatternKind::Explicit: {
            std::string h = "xg:";
            for (const Triple& t : graph->edges())
                h += std::to_string(triple_rank(t)) + ",";
            return h + "n" + std::to_string(graph->vertex_count());
        }
    }
    return "?";
}

void FamilySpec::validate() const {
    if (patterns.empty())
        throw std::invalid_argument("family must contain at least one pattern");
}

FamilySpec FamilySpec::parse(const std::string& code) {
    std::vector<PatternSpec> ps;
    std::size_t pos = 0;
    while (pos <= code.size()) {
        std::size_t next = code.find('+', pos);
        std::string tok = code.substr(
            pos, next == std::string::npos ? std::string::npos : next - pos);
        if (tok.empty()) throw std::invalid_argument("empty pattern token");
        auto num = [&](std::size_t off) {
            if (off >= tok.size())
                throw std::invalid_argument("missing parameter in '" + tok + "'");
            return std::stoi(tok.substr(off));
        };
        if (tok.rfind("file:", 0) == 0) {
            ps.push_back(PatternSpec::explicit_graph(load_h3_file(tok.substr(5))));
        } else if (tok.rfind("lp", 0) == 0) {
            ps.push_back(PatternSpec::linear_path(num(2)));
        } else if (tok[0] == 'p') {
            ps.push_back(PatternSpec::minimal_path(num(1)));
        } else if (tok[0] == 'c') {
            ps.push_back(PatternSpec::minimal_cycle(num(1)));
        } else if (tok[0] == 'm') {
            ps.push_back(PatternSpec::matching(num(1)));
        } else {
            throw std::invalid_argument("unknown pattern code '" + tok + "'");
        }
        if (next == std::string::npos) break;
        pos = next + 1;
    }
    return FamilySpec(std::move(ps));
}

std::string FamilySpec::code() const {
    std::vector<std::string> codes;
    codes.reserve(patterns.size());
    for (const auto& p : patterns) codes.push_back(p.code());
    std::sort(codes.begin(), codes.end());
    std::string out;
    for (std::size_t i = 0; i < codes.size(); ++i) {
        if (i) out += '+';
        out += codes[i];
    }
    return out;
}

// ---------------------------------------------------------------------------
// one-shot finders

namespace {
std::vector<Triple> ranks_to_triples(const TripleUniverse& u,
                                     const std::vector<std::int64_t>& ranks) {
    std::vector<Triple> out;
    out.reserve(ranks.size());
    for (auto r : ranks) out.push_back(u.triples[r]);
    return out;
}
}  // namespace

std::optional<std::vector<Triple>> find_minimal_path(const Hypergraph3& h, int len) {
    if (len < 2) throw std::invalid_argument("find_minimal_path: length must be >= 2");
    ActiveGraph g = ActiveGraph::of_hypergraph(h);
    PathFinder f{&g, &g.universe(), g.words(), len, false, {}, {}};
    auto seq = f.run();
    if (!seq) return std::nullopt;
    return ranks_to_triples(g.universe(), *seq);
}

std::optional<std::vector<Triple>> find_linear_path(const Hypergraph3& h, int len) {
    if (len < 2) throw std::invalid_argument("find_linear_path: length must be >= 2");
    ActiveGraph g = ActiveGraph::of_hypergraph(h);
    PathFinder f{&g, &g.universe(), g.words(), len, true, {}, {}};
    auto seq = f.run();
    if (!seq) return std::nullopt;
    return ranks_to_triples(g.universe(), *seq);
}

std::optional<std::vector<Triple>> find_minimal_cycle(const Hypergraph3& h, int len) {
    if (len < 3) throw std::invalid_argument("find_minimal_cycle: length must be >= 3");
    ActiveGraph g = ActiveGraph::of_hypergraph(h);
    CycleFinder f{&g, &g.universe(), g.words(), len, {}};
    auto seq = f.run();
    if (!seq) return std::nullopt;
    return ranks_to_triples(g.universe(), *seq);
}

int matching_number(const Hypergraph3& h) {
    ActiveGraph g = ActiveGraph::of_hypergraph(h);
    MatchingFinder f{&g, &g.universe(), g.words()};
    return f.run(g.chosen(), -1);
}

bool contains_matching(const Hypergraph3& h, int s) {
    if (s < 1) throw std::invalid_argument("contains_matching: size must be >= 1");
    ActiveGraph g = ActiveGraph::of_hypergraph(h);
    MatchingFinder f{&g, &g.universe(), g.words()};
    return f.run(g.chosen(), s) >= s;
}

namespace {

std::optional<std::vector<Triple>> pattern_witness(ActiveGraph& g,
                                                   const PatternSpec& p) {
    const TripleUniverse& u = g.universe();
    switch (p.kind) {
        case PatternKind::MinimalPath:
        case PatternKind::LinearPath: {
            PathFinder f{&g, &u, g.words(), p.param,
                         p.kind == PatternKind::LinearPath, {}, {}};
            if (auto seq = f.run()) return ranks_to_triples(u, *seq);
            return std::nullopt;
        }
        case PatternKind::MinimalCycle: {
            CycleFinder f{&g, &u, g.words(), p.param, {}};
            if (auto seq = f.run()) return ranks_to_triples(u, *seq);
            return std::nullopt;
        }
        case PatternKind::Matching: {
            MatchingFinder f{&g, &u, g.words()};
            if (f.run(g.chosen(), p.param) >= p.param) {
                std::vector<std::int64_t> ranks = f.best_witness;
                ranks.resize(p.param);
                std::sort(ranks.begin(), ranks.end());
                return ranks_to_triples(u, ranks);
            }
            return std::nullopt;
        }
        case PatternKind::Explicit: {
            Hypergraph3 cur = g.to_hypergraph();
            if (auto m = embeds(*p.graph, cur)) {
                std::vector<Triple> out;
                for (const Triple& t : p.graph->edges())
                    out.push_back(
                        sorted_triple((*m)[t.a], (*m)[t.b], (*m)[t.c]));
                std::sort(out.begin(), out.end());
                return out;
            }
            return std::nullopt;
        }
    }
    return std::nullopt;
}

}  // namespace

bool is_family_free(const Hypergraph3& h, const FamilySpec& family) {
    ActiveGraph g = ActiveGraph::of_hypergraph(h);
    for (const auto& p : family.patterns)
        if (pattern_witness(g, p)) return false;
    return true;
}

std::optional<FamilyWitness> family_witness(const Hypergraph3& h,
                                            const FamilySpec& family) {
    ActiveGraph g = ActiveGraph::of_hypergraph(h);
    for (const auto& p : family.patterns)
        if (auto wtn = pattern_witness(g, p)) return FamilyWitness{p, *wtn};
    return std::nullopt;
}

bool pattern_through_edge(const Hypergraph3& h, const Triple& e,
                          const FamilySpec& family) {
    Triple t = sorted_triple(e.a, e.b, e.c);
    if (!h.has_edge(t))
        throw std::invalid_argument("pattern_through_edge: edge not in hypergraph");
    ActiveGraph g = ActiveGraph::of_hypergraph(h);
    PatternDetector det(family);
    return det.through_edge(g, triple_rank(t));
}

bool rr_bb_path_exists(const Graph2& r, const Graph2& b) {
    if (r.vertex_count() != b.vertex_count())
        throw std::invalid_argument("rr_bb_path_exists: vertex count mismatch");
    const int n = r.vertex_count();
    for (int v2 = 0; v2 < n; ++v2) {
        std::uint32_t r_adj2 = r.neighbors(v2);
        if (!r_adj2) continue;
        for (int v3 = 0; v3 < n; ++v3) {
            if (v3 == v2 || !(r_adj2 & (1u << v3))) continue;
            std::uint32_t b_adj3 = b.neighbors(v3) & ~(1u << v2);
            std::uint32_t cands4 = b_adj3 & ~(1u << v3);
            while (cands4) {
                int v4 = std::countr_zero(cands4);
                cands4 &= cands4 - 1;
                std::uint32_t done = (1u << v2) | (1u << v3) | (1u << v4);
                std::uint32_t first = r.neighbors(v2) & ~done;
                std::uint32_t last = b.neighbors(v4) & ~done;
                if (!first || !last) continue;
                if (first == last && std::popcount(first) == 1) continue;
                return true;
            }
        }
    }
    return false;
}

// ---------------------------------------------------------------------------
// PatternDetector

PatternDetector::PatternDetector(const FamilySpec& family) : family_(family) {}

// Path member using the pinned edge: place it at each position and grow the
// sequence leftwards then rightwards. Fill order for pivot p is
// p-1,...,0,p+1,...,len-1, so every placed non-neighbor is constrained
// exactly once. A reversed sequence is the same member, so only pivots in
// the first half need trying.
bool PatternDetector::path_through(ActiveGraph& g, std::int64_t rank, int len,
                                   bool linear) {
    const TripleUniverse& u = g.universe();
    const int w = g.words();
    if (seq_.size() < static_cast<std::size_t>(len)) seq_.resize(len);
    std::int64_t* seq = seq_.data();

    if (w == 1) {  // single-word fast path, the common search case
        const std::uint64_t chosen = g.chosen()[0];
        const std::uint64_t* meets = u.meets.data();
        const std::uint32_t* vmask = u.vmask.data();
        auto fill = [&](auto&& self, int p, int idx) -> bool {
            if (idx == len) return true;
            const int q = idx <= p ? p - idx : idx;
            const int nb = q < p ? q + 1 : q - 1;
            std::uint64_t cand =
                chosen & meets[seq[nb]] & ~(std::uint64_t(1) << seq[nb]);
            const int lo = q < p ? q + 2 : 0;
            const int hi = q < p ? p : q - 2;
            for (int j = lo; j <= hi; ++j) cand &= ~meets[seq[j]];
            while (cand) {
                std::int64_t rr = std::countr_zero(cand);
                cand &= cand - 1;
                if (linear && std::popcount(vmask[rr] & vmask[seq[nb]]) != 1)
                    continue;
                seq[q] = rr;
                if (self(self, p, idx + 1)) return true;
            }
            return false;
        };
        for (int p = 0; p < (len + 1) / 2; ++p) {
            seq[p] = rank;
            if (fill(fill, p, 1)) return true;
        }
        return false;
    }

    if (scratch_.size() < std::size_t(len + 1) * w)
        scratch_.resize(std::size_t(len + 1) * w);
    auto fill = [&](auto&& self, int p, int idx) -> bool {
        if (idx == len) return true;
        const int q = idx <= p ? p - idx : idx;
        const int nb = q < p ? q + 1 : q - 1;
        std::uint64_t* cand = scratch_.data() + std::size_t(idx) * w;
        w_copy(cand, g.chosen(), w);
        w_and(cand, u.meets_row(seq[nb]), w);
        w_clear(cand, seq[nb]);
        const int lo = q < p ? q + 2 : 0;
        const int hi = q < p ? p : q - 2;
        for (int j = lo; j <= hi; ++j) w_andn(cand, u.meets_row(seq[j]), w);
        return w_for_each(cand, w, [&](std::int64_t rr) {
            if (linear && std::popcount(u.vmask[rr] & u.vmask[seq[nb]]) != 1)
                return false;
            seq[q] = rr;
            return self(self, p, idx + 1);
        });
    };
    for (int p = 0; p < (len + 1) / 2; ++p) {
        seq[p] = rank;
        if (fill(fill, p, 1)) return true;
    }
    return false;
}

bool PatternDetector::cycle_through(ActiveGraph& g, std::int64_t rank, int len) {
    const TripleUniverse& u = g.universe();
    const int w = g.words();
    if (seq_.size() < static_cast<std::size_t>(len)) seq_.resize(len);
    std::int64_t* seq = seq_.data();
    seq[0] = rank;

    if (w == 1) {
        const std::uint64_t chosen = g.chosen()[0];
        const std::uint64_t* meets = u.meets.data();
        auto fill = [&](auto&& self, int i) -> bool {
            std::uint64_t cand = chosen & meets[seq[i - 1]];
            if (i == len - 1) cand &= meets[seq[0]];
            for (int j = (i == len - 1 ? 1 : 0); j <= i - 2; ++j)
                cand &= ~meets[seq[j]];
            cand &= ~(std::uint64_t(1) << seq[i - 1]);
            cand &= ~(std::uint64_t(1) << seq[0]);
            while (cand) {
                std::int64_t rr = std::countr_zero(cand);
                cand &= cand - 1;
                seq[i] = rr;
                if (i == len - 1) {
                    if (len == 3 &&
                        (u.vmask[seq[0]] & u.vmask[seq[1]] & u.vmask[seq[2]]))
                        continue;
                    return true;
                }
                if (self(self, i + 1)) return true;
            }
            return false;
        };
        return fill(fill, 1);
    }

    if (scratch_.size() < std::size_t(len + 1) * w)
        scratch_.resize(std::size_t(len + 1) * w);
    auto fill = [&](auto&& self, int i) -> bool {
        std::uint64_t* cand = scratch_.data() + std::size_t(i) * w;
        w_copy(cand, g.chosen(), w);
        w_and(cand, u.meets_row(seq[i - 1]), w);
        if (i == len - 1) w_and(cand, u.meets_row(seq[0]), w);
        for (int j = (i == len - 1 ? 1 : 0); j <= i - 2; ++j)
            w_andn(cand, u.meets_row(seq[j]), w);
        w_clear(cand, seq[i - 1]);
        w_clear(cand, seq[0]);
        return w_for_each(cand, w, [&](std::int64_t rr) {
            seq[i] = rr;
            if (i == len - 1) {
                if (len == 3 &&
                    (u.vmask[seq[0]] & u.vmask[seq[1]] & u.vmask[seq[2]]))
                    return false;
                return true;
            }
            return self(self, i + 1);
        });
    };
    return fill(fill, 1);
}

bool PatternDetector::matching_through(ActiveGraph& g, std::int64_t rank,
                                       int size) {
    if (size == 1) return true;  // the edge itself
    const int w = g.words();
    if (scratch_.size() < static_cast<std::size_t>(w)) scratch_.resize(w);
    std::uint64_t* avail = scratch_.data();
    w_copy(avail, g.chosen(), w);
    w_andn(avail, g.universe().meets_row(rank), w);
    if (size == 2) return w_any(avail, w);
    MatchingFinder f{&g, &g.universe(), w};
    return f.run(avail, size - 1) >= size - 1;
}

bool PatternDetector::through_edge(ActiveGraph& g, std::int64_t rank) {
    for (const auto& p : family_.patterns) {
        switch (p.kind) {
            case PatternKind::MinimalPath:
                if (path_through(g, rank, p.param, false)) return true;
                break;
            case PatternKind::LinearPath:
                if (path_through(g, rank, p.param, true)) return true;
                break;
            case PatternKind::MinimalCycle:
                if (cycle_through(g, rank, p.param)) return true;
                break;
            case PatternKind::Matching:
                if (matching_through(g, rank, p.param)) return true;
                break;
            case PatternKind::Explicit: {
                Hypergraph3 cur = g.to_hypergraph();
                if (embeds_using_edge(*p.graph, cur,
                                      g.universe().triples[rank]))
                    return true;
                break;
            }
        }
    }
    return false;
}

bool PatternDetector::anywhere(ActiveGraph& g) {
    for (const auto& p : family_.patterns)
        if (pattern_witness(g, p)) return true;
    return false;
}

}  // namespace turan
