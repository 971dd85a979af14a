#include "turan/hypergraph.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace turan {

Graph2::Graph2(int n) : n_(n), bits_(binom2(n)), adj_(n, 0) {
    if (n < 0) throw std::invalid_argument("Graph2: negative vertex count");
    if (n > kMaxVertices)
        throw std::invalid_argument("Graph2: vertex count exceeds limit");
}

Graph2 Graph2::from_pairs(int n, std::span<const std::pair<int, int>> pairs) {
    Graph2 g(n);
    for (auto [a, b] : pairs) g.add_edge(a, b);
    return g;
}

bool Graph2::has_edge(int a, int b) const {
    if (a > b) std::swap(a, b);
    return bits_.test(pair_rank(a, b));
}

void Graph2::add_edge(int a, int b) {
    if (a == b || a < 0 || b >= n_ || a >= n_ || b < 0)
        throw std::invalid_argument("Graph2: bad edge");
    if (a > b) std::swap(a, b);
    if (bits_.test(pair_rank(a, b))) return;
    bits_.set(pair_rank(a, b));
    adj_[a] |= 1u << b;
    adj_[b] |= 1u << a;
    ++edge_count_;
}

void Graph2::remove_edge(int a, int b) {
    if (a > b) std::swap(a, b);
    if (!bits_.test(pair_rank(a, b))) return;
    bits_.reset(pair_rank(a, b));
    adj_[a] &= ~(1u << b);
    adj_[b] &= ~(1u << a);
    --edge_count_;
}

int Graph2::degree(int v) const { return std::popcount(adj_[v]); }

int Graph2::max_degree() const {
    int d = 0;
    for (int v = 0; v < n_; ++v) d = std::max(d, degree(v));
    return d;
}

std::vector<std::pair<int, int>> Graph2::edges() const {
    std::vector<std::pair<int, int>> out;
    out.reserve(edge_count_);
    for (int b = 1; b < n_; ++b)
        for (int a = 0; a < b; ++a)
            if (bits_.test(pair_rank(a, b))) out.emplace_back(a, b);
    return out;
}

Hypergraph3::Hypergraph3(int n) : n_(n), bits_(n >= 3 ? binom3(n) : 0) {
    if (n < 0) throw std::invalid_argument("Hypergraph3: negative vertex count");
}

Hypergraph3 Hypergraph3::from_triples(int n, std::span<const Triple> triples) {
    Hypergraph3 h(n);
    for (const Triple& raw : triples) {
        Triple t = sorted_triple(raw.a, raw.b, raw.c);
        if (t.a == t.b || t.b == t.c)
            throw std::invalid_argument("Hypergraph3: repeated vertex in triple");
        if (t.c >= n)
            throw std::invalid_argument("Hypergraph3: vertex out of range");
        h.bits_.set(triple_rank(t));
    }
    for (std::int64_t r = 0; r < h.triple_universe(); ++r)
        if (h.bits_.test(r)) h.edges_.push_back(triple_unrank(r));
    return h;
}

Hypergraph3 Hypergraph3::from_triples(
    int n, std::initializer_list<std::array<int, 3>> triples) {
    std::vector<Triple> ts;
    ts.reserve(triples.size());
    for (const auto& t : triples) {
        for (int v : t)
            if (v < 0) throw std::invalid_argument("Hypergraph3: negative vertex");
        ts.push_back(Triple(t[0], t[1], t[2]));
    }
    return from_triples(n, ts);
}

Hypergraph3 Hypergraph3::from_bits(int n, BitVec bits) {
    Hypergraph3 h(n);
    if (bits.size() != static_cast<std::size_t>(h.triple_universe()))
        throw std::invalid_argument("Hypergraph3: bit vector length mismatch");
    h.bits_ = std::move(bits);
    for (std::int64_t r = 0; r < h.triple_universe(); ++r)
        if (h.bits_.test(r)) h.edges_.push_back(triple_unrank(r));
    return h;
}

Hypergraph3 Hypergraph3::complete(int n) {
    Hypergraph3 h(n);
    for (std::int64_t r = 0; r < h.triple_universe(); ++r) {
        h.bits_.set(r);
        h.edges_.push_back(triple_unrank(r));
    }
    return h;
}

Graph2 Hypergraph3::link_graph(int v) const {
    if (v < 0 || v >= n_)
        throw std::invalid_argument("link_graph: vertex out of range");
    Graph2 g(n_);
    for (const Triple& t : edges_) {
        if (!t.contains(v)) continue;
        if (t.a == v)
            g.add_edge(t.b, t.c);
        else if (t.b == v)
            g.add_edge(t.a, t.c);
        else
            g.add_edge(t.a, t.b);
    }
    return g;
}

int Hypergraph3::degree(int v) const {
    int d = 0;
    for (const Triple& t : edges_) d += t.contains(v);
    return d;
}

int Hypergraph3::pair_degree(int x, int y) const {
    int d = 0;
    for (const Triple& t : edges_) d += t.contains(x) && t.contains(y);
    return d;
}

DegreeInfo Hypergraph3::degrees() const {
    DegreeInfo info;
    info.degree.assign(n_, 0);
    info.pair_degree.assign(binom2(n_), 0);
    for (const Triple& t : edges_) {
        ++info.degree[t.a];
        ++info.degree[t.b];
        ++info.degree[t.c];
        ++info.pair_degree[pair_rank(t.a, t.b)];
        ++info.pair_degree[pair_rank(t.a, t.c)];
        ++info.pair_degree[pair_rank(t.b, t.c)];
    }
    if (n_ > 0) {
        info.max_degree = *std::max_element(info.degree.begin(), info.degree.end());
        info.min_degree = *std::min_element(info.degree.begin(), info.degree.end());
    }
    if (!info.pair_degree.empty())
        info.max_pair_degree =
            *std::max_element(info.pair_degree.begin(), info.pair_degree.end());
    return info;
}

Hypergraph3 Hypergraph3::induced(std::span<const int> w) const {
    std::vector<int> vs(w.begin(), w.end());
    std::sort(vs.begin(), vs.end());
    vs.erase(std::unique(vs.begin(), vs.end()), vs.end());
    for (int v : vs)
        if (v < 0 || v >= n_)
            throw std::invalid_argument("induced: vertex out of range");
    std::vector<int> index(n_, -1);
    for (std::size_t i = 0; i < vs.size(); ++i) index[vs[i]] = static_cast<int>(i);
    std::vector<Triple> ts;
    for (const Triple& t : edges_) {
        if (index[t.a] >= 0 && index[t.b] >= 0 && index[t.c] >= 0)
            ts.push_back(Triple(index[t.a], index[t.b], index[t.c]));
    }
    return from_triples(static_cast<int>(vs.size()), ts);
}

Hypergraph3 Hypergraph3::complement() const {
    Hypergraph3 h(n_);
    for (std::int64_t r = 0; r < triple_universe(); ++r) {
        if (!bits_.test(r)) {
            h.bits_.set(r);
            h.edges_.push_back(triple_unrank(r));
        }
    }
    return h;
}

namespace {
int uf_find(std::vector<int>& parent, int x) {
    while (parent[x] != x) {
        parent[x] = parent[parent[x]];
        x = parent[x];
    }
    return x;
}
}  // namespace

std::vector<std::vector<int>> Hypergraph3::components() const {
    std::vector<int> parent(n_);
    std::iota(parent.begin(), parent.end(), 0);
    for (const Triple& t : edges_) {
        int ra = uf_find(parent, t.a);
        int rb = uf_find(parent, t.b);
        int rc = uf_find(parent, t.c);
        parent[rb] = ra;
        parent[uf_find(parent, rc)] = uf_find(parent, ra);
    }
    std::vector<std::vector<int>> comps;
    std::vector<int> comp_of(n_, -1);
    for (int v = 0; v < n_; ++v) {
        int r = uf_find(parent, v);
        if (comp_of[r] < 0) {
            comp_of[r] = static_cast<int>(comps.size());
            comps.emplace_back();
        }
        comps[comp_of[r]].push_back(v);
    }
    return comps;
}

bool Hypergraph3::is_connected() const { return components().size() <= 1; }

}  // namespace turan
