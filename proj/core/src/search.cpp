#include "turan/search.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <map>
#include <mutex>
#include <set>
#include <stdexcept>
#include <thread>

#include "turan/embed.hpp"

namespace turan {

namespace {

using Clock = std::chrono::steady_clock;

struct SharedState {
    std::atomic<long long> best{-1};
    std::atomic<bool> stop{false};           // decide witness found
    std::atomic<bool> out_of_budget{false};  // time or node limit hit
    std::atomic<long long> nodes{0};
    Clock::time_point deadline;
    long long node_limit = -1;
};

struct LeafSet {
    long long value = -1;
    std::vector<BitVec> graphs;  // raw edge bit vectors at `value`
};

struct Searcher {
    const SearchConfig* cfg;
    SharedState* shared;
    ActiveGraph g;
    PatternDetector det;
    std::int64_t total;
    std::vector<char> forced;            // per rank
    std::vector<std::int64_t> order;     // step -> rank; forced ranks first
    std::vector<std::uint32_t> cover;    // per step: union of later vertex masks
    std::uint32_t full_mask;
    std::int64_t orbit_rep[3] = {-1, -1, -1};
    bool use_symmetry;
    SearchStats stats;
    LeafSet leaves;
    std::optional<BitVec> decide_witness;
    bool integrity_violation = false;
    long long local_nodes_since_check = 0;

    Searcher(const SearchConfig& c, SharedState& s)
        : cfg(&c), shared(&s), g(c.n), det(c.family) {
        total = binom3(c.n);
        forced.assign(std::max<std::int64_t>(total, 1), 0);
        if (c.required_subgraph) {
            for (const Triple& t : c.required_subgraph->edges())
                forced[triple_rank(t)] = 1;
        }
        // mandatory edges branch first so their pattern interactions prune
        // the tree from the top
        order.reserve(total);
        for (std::int64_t r = 0; r < total; ++r)
            if (forced[r]) order.push_back(r);
        for (std::int64_t r = 0; r < total; ++r)
            if (!forced[r]) order.push_back(r);
        cover.assign(total + 1, 0);
        const auto& uni = g.universe();
        for (std::int64_t i = total - 1; i >= 0; --i)
            cover[i] = cover[i + 1] | uni.vmask[order[i]];
        full_mask = c.n >= 1 ? (c.n >= 32 ? 0xffffffffu : (1u << c.n) - 1) : 0;
        use_symmetry = !c.required_subgraph.has_value();
        if (use_symmetry) {
            if (c.n >= 4) orbit_rep[0] = triple_rank(Triple(0, 1, 3));
            if (c.n >= 5) orbit_rep[1] = triple_rank(Triple(0, 3, 4));
            if (c.n >= 6) orbit_rep[2] = triple_rank(Triple(3, 4, 5));
        }
    }

    long long threshold() const {
        switch (cfg->mode) {
            case SearchMode::Maximize:
                return shared->best.load(std::memory_order_relaxed);
            case SearchMode::DecideAtLeast:
            case SearchMode::EnumerateExtremal:
                return cfg->target;
        }
        return 0;
    }

    bool out_of_budget() {
        if (++local_nodes_since_check < 4096) return false;
        shared->nodes.fetch_add(local_nodes_since_check,
                                std::memory_order_relaxed);
        local_nodes_since_check = 0;
        if (shared->out_of_budget.load(std::memory_order_relaxed)) return true;
        if (Clock::now() >= shared->deadline ||
            (shared->node_limit >= 0 &&
             shared->nodes.load(std::memory_order_relaxed) >
                 shared->node_limit)) {
            shared->out_of_budget.store(true, std::memory_order_relaxed);
            return true;
        }
        return false;
    }

    bool stopped() const {
        return shared->stop.load(std::memory_order_relaxed) ||
               shared->out_of_budget.load(std::memory_order_relaxed);
    }

    // Constraints beyond family-freeness: connectivity and the higher-order
    // exclusions. Required edges are forced into every graph.
    bool candidate_ok() {
        if (cfg->connected_only || !cfg->excluded_supergraphs.empty()) {
            Hypergraph3 h = g.to_hypergraph();
            if (cfg->connected_only && !h.is_connected()) return false;
            for (const Hypergraph3& sup : cfg->excluded_supergraphs)
                if (embeds(h, sup)) return false;
        }
        return true;
    }

    BitVec current_bits() const {
        BitVec b(total);
        for (std::int64_t r : g.edge_ranks()) b.set(r);
        return b;
    }

    void record_candidate() {
        long long v = static_cast<long long>(g.edge_count());
        switch (cfg->mode) {
            case SearchMode::Maximize: {
                long long best = shared->best.load(std::memory_order_relaxed);
                if (v < best) return;
                if (!candidate_ok()) return;
                // raise the shared bound (monotone max)
                while (v > best &&
                       !shared->best.compare_exchange_weak(
                           best, v, std::memory_order_relaxed)) {
                }
                if (v > leaves.value) {
                    leaves.value = v;
                    leaves.graphs.clear();
                }
                if (v == leaves.value) leaves.graphs.push_back(current_bits());
                break;
            }
            case SearchMode::DecideAtLeast:
                if (v >= cfg->target && candidate_ok()) {
                    decide_witness = current_bits();
                    shared->stop.store(true, std::memory_order_relaxed);
                }
                break;
            case SearchMode::EnumerateExtremal:
                if (v == cfg->target) {
                    if (!candidate_ok()) return;
                    if (v > leaves.value) {
                        leaves.value = v;
                        leaves.graphs.clear();
                    }
                    leaves.graphs.push_back(current_bits());
                } else if (v > cfg->target && candidate_ok()) {
                    integrity_violation = true;
                    shared->stop.store(true, std::memory_order_relaxed);
                }
                break;
        }
    }

    // Include-branch symmetry filter: without a seed, the first edge must be
    // {0,1,2} and the second the smallest of its orbit under the stabilizer
    // of {0,1,2} (one representative per intersection size with it).
    bool include_allowed(std::int64_t r) {
        if (!use_symmetry) return true;
        std::size_t k = g.edge_count();
        if (k == 0) return r == 0;
        if (k == 1 && g.edge_ranks()[0] == 0)
            return r == orbit_rep[0] || r == orbit_rep[1] || r == orbit_rep[2];
        return true;
    }

    void dfs(std::int64_t step) {
        if (stopped() || out_of_budget()) return;
        if (step == total) {
            record_candidate();
            return;
        }
        ++stats.nodes;
        long long potential =
            static_cast<long long>(g.edge_count()) + (total - step);
        if (potential < threshold()) {
            ++stats.prune_bound;
            return;
        }
        if (cfg->connected_only && cfg->n >= 2 &&
            (g.support_mask() | cover[step]) != full_mask) {
            ++stats.prune_bound;
            return;
        }
        const std::int64_t r = order[step];
        if (forced[r]) {
            g.push(r);
            if (det.through_edge(g, r)) {
                // a previously chosen optional edge clashes with the seed
                ++stats.prune_pattern;
                g.pop();
                return;
            }
            dfs(step + 1);
            g.pop();
            return;
        }
        // include first so large graphs are reached early
        if (include_allowed(r)) {
            g.push(r);
            if (det.through_edge(g, r)) {
                ++stats.prune_pattern;
            } else {
                if (cfg->mode == SearchMode::DecideAtLeast &&
                    static_cast<long long>(g.edge_count()) >= cfg->target &&
                    candidate_ok()) {
                    decide_witness = current_bits();
                    shared->stop.store(true, std::memory_order_relaxed);
                    g.pop();
                    return;
                }
                dfs(step + 1);
            }
            g.pop();
            if (stopped()) return;
        } else {
            ++stats.prune_orbit;
        }
        // exclude branch; skipping rank 0 without a seed leaves only the
        // empty graph, every other class has a representative through {0,1,2}
        if (use_symmetry && step == 0 && total > 0) {
            record_candidate();
            return;
        }
        dfs(step + 1);
    }
};

struct Task {
    std::vector<std::int64_t> included;  // chosen ranks among [0, depth)
    std::int64_t resume_step = 0;
};

// Expands the decision tree to a fixed depth, producing independent subtree
// tasks. Runs the same pruning rules as the full search so dead prefixes
// are dropped.
void generate_tasks(Searcher& s, std::int64_t depth, std::int64_t step,
                    std::vector<Task>& out) {
    if (s.stopped()) return;
    if (step == depth || step == s.total) {
        out.push_back(Task{s.g.edge_ranks(), step});
        return;
    }
    long long potential =
        static_cast<long long>(s.g.edge_count()) + (s.total - step);
    if (potential < s.threshold()) return;
    const std::int64_t r = s.order[step];
    if (s.forced[r]) {
        s.g.push(r);
        if (!s.det.through_edge(s.g, r)) generate_tasks(s, depth, step + 1, out);
        s.g.pop();
        return;
    }
    if (s.include_allowed(r)) {
        s.g.push(r);
        if (!s.det.through_edge(s.g, r)) generate_tasks(s, depth, step + 1, out);
        s.g.pop();
    }
    if (s.use_symmetry && step == 0 && s.total > 0) {
        s.record_candidate();
        return;
    }
    generate_tasks(s, depth, step + 1, out);
}

std::string mode_name(SearchMode m) {
    switch (m) {
        case SearchMode::Maximize: return "max";
        case SearchMode::DecideAtLeast: return "decide";
        case SearchMode::EnumerateExtremal: return "enum";
    }
    return "?";
}

void validate_config(const SearchConfig& cfg) {
    if (cfg.n < 0) throw std::invalid_argument("search: n must be non-negative");
    if (cfg.n > kMaxVertices)
        throw std::invalid_argument("search: n exceeds the supported limit");
    if (cfg.time_budget_seconds <= 0)
        throw std::invalid_argument("search: time budget must be positive");
    if (cfg.worker_count < 1)
        throw std::invalid_argument("search: worker count must be positive");
    if (cfg.required_subgraph) {
        if (cfg.required_subgraph->vertex_count() > cfg.n)
            throw std::invalid_argument("search: required subgraph has too many vertices");
        if (!is_family_free(*cfg.required_subgraph, cfg.family))
            throw std::invalid_argument(
                "search: required subgraph contains a forbidden pattern");
    }
    for (const Hypergraph3& sup : cfg.excluded_supergraphs)
        if (sup.vertex_count() != cfg.n)
            throw std::invalid_argument(
                "search: excluded supergraphs must live on the same vertex count");
}

Hypergraph3 bits_to_graph(int n, const BitVec& bits) {
    return Hypergraph3::from_bits(n, bits);
}

TuranRecord run_search(const SearchConfig& cfg) {
    validate_config(cfg);
    auto t0 = Clock::now();

    SharedState shared;
    if (cfg.time_budget_seconds > 3.0e9) {  // ~95 years: effectively unbounded
        shared.deadline = Clock::time_point::max();
    } else {
        shared.deadline =
            t0 + std::chrono::duration_cast<Clock::duration>(
                     std::chrono::duration<double>(cfg.time_budget_seconds));
    }
    shared.node_limit = cfg.node_limit.value_or(-1);
    if (cfg.mode != SearchMode::Maximize) shared.best.store(cfg.target);

    // verified warm start gives Maximize a sound initial bound
    std::optional<BitVec> warm_bits;
    if (cfg.warm_start && cfg.mode == SearchMode::Maximize) {
        const Hypergraph3& w = *cfg.warm_start;
        if (w.vertex_count() != cfg.n)
            throw std::invalid_argument("search: warm start vertex count mismatch");
        if (!is_family_free(w, cfg.family))
            throw std::invalid_argument("search: warm start is not family-free");
        if (cfg.connected_only && !w.is_connected())
            throw std::invalid_argument("search: warm start is not connected");
        for (const Hypergraph3& sup : cfg.excluded_supergraphs)
            if (embeds(w, sup))
                throw std::invalid_argument(
                    "search: warm start embeds into an excluded supergraph");
        if (cfg.required_subgraph && !embeds(*cfg.required_subgraph, w))
            throw std::invalid_argument(
                "search: warm start misses the required subgraph");
        shared.best.store(static_cast<long long>(w.edge_count()));
        warm_bits = w.bits();
    }

    std::vector<Searcher> workers;
    long long total_value = -1;
    std::vector<BitVec> collected;
    bool integrity = false;
    std::optional<BitVec> witness;

    if (cfg.worker_count <= 1) {
        Searcher s(cfg, shared);
        s.dfs(0);
        shared.nodes.fetch_add(s.local_nodes_since_check);
        workers.push_back(std::move(s));
    } else {
        Searcher gen(cfg, shared);
        std::int64_t depth = cfg.split_depth;
        if (depth < 0) {
            depth = 1;
            while (depth < gen.total && (std::int64_t(1) << depth) <
                                            8LL * cfg.worker_count)
                ++depth;
            depth = std::min<std::int64_t>(depth, 14);
        }
        std::vector<Task> tasks;
        generate_tasks(gen, depth, 0, tasks);
        workers.reserve(cfg.worker_count);
        for (int i = 0; i < cfg.worker_count; ++i)
            workers.emplace_back(cfg, shared);
        std::atomic<std::size_t> next{0};
        std::vector<std::thread> pool;
        for (int i = 0; i < cfg.worker_count; ++i) {
            pool.emplace_back([&, i] {
                Searcher& s = workers[i];
                for (;;) {
                    std::size_t idx = next.fetch_add(1);
                    if (idx >= tasks.size() || s.stopped()) break;
                    const Task& task = tasks[idx];
                    for (std::int64_t r : task.included) s.g.push(r);
                    s.dfs(task.resume_step);
                    while (s.g.edge_count() > 0) s.g.pop();
                }
                shared.nodes.fetch_add(s.local_nodes_since_check);
                s.local_nodes_since_check = 0;
            });
        }
        for (auto& th : pool) th.join();
        // the generator may have recorded the empty-graph candidate
        workers.push_back(std::move(gen));
    }

    SearchStats stats;
    for (Searcher& s : workers) {
        stats.nodes += s.stats.nodes;
        stats.prune_bound += s.stats.prune_bound;
        stats.prune_pattern += s.stats.prune_pattern;
        stats.prune_orbit += s.stats.prune_orbit;
        integrity = integrity || s.integrity_violation;
        if (s.decide_witness && !witness) witness = s.decide_witness;
    }

    const long long final_best = shared.best.load();
    if (cfg.mode == SearchMode::Maximize) {
        total_value = final_best;
        for (Searcher& s : workers)
            if (s.leaves.value == final_best)
                for (BitVec& b : s.leaves.graphs) collected.push_back(std::move(b));
        if (warm_bits && static_cast<long long>(cfg.warm_start->edge_count()) ==
                             final_best)
            collected.push_back(*warm_bits);
    } else if (cfg.mode == SearchMode::EnumerateExtremal) {
        total_value = cfg.target;
        for (Searcher& s : workers)
            for (BitVec& b : s.leaves.graphs) collected.push_back(std::move(b));
    }

    if (integrity)
        throw std::runtime_error(
            "search: found a graph above the claimed exact value");

    TuranRecord rec;
    rec.family_code = cfg.family.code();
    rec.n = cfg.n;
    rec.connected_only = cfg.connected_only;
    rec.required_hex = cfg.required_subgraph
                           ? canonical_form(*cfg.required_subgraph).hex()
                           : "";
    rec.value = total_value;
    rec.stats = stats;
    rec.complete = !shared.out_of_budget.load();

    if (cfg.mode == SearchMode::DecideAtLeast) {
        if (witness) {
            rec.witness = bits_to_graph(cfg.n, *witness);
            rec.complete = true;  // affirmative answers are definitive
        }
    } else {
        std::set<CanonicalForm> dedup;
        for (const BitVec& b : collected)
            dedup.insert(canonical_form(bits_to_graph(cfg.n, b)));
        rec.extremal.assign(dedup.begin(), dedup.end());
        if (!collected.empty())
            rec.witness = bits_to_graph(cfg.n, collected.front());
    }

    rec.stats.elapsed_ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                               Clock::now() - t0)
                               .count();
    return rec;
}

// Every reported extremal graph is re-checked with the one-shot detectors,
// independently of the incremental path used during the search.
void verify_record(const SearchConfig& cfg, const TuranRecord& rec) {
    for (const CanonicalForm& cf : rec.extremal) {
        Hypergraph3 h = canonical_representative(cf);
        if (static_cast<long long>(h.edge_count()) != rec.value)
            throw std::runtime_error("search: extremal graph has wrong size");
        if (!is_family_free(h, cfg.family))
            throw std::runtime_error("search: extremal graph is not family-free");
        if (cfg.connected_only && !h.is_connected())
            throw std::runtime_error("search: extremal graph is not connected");
        if (cfg.required_subgraph && !embeds(*cfg.required_subgraph, h))
            throw std::runtime_error(
                "search: extremal graph misses the required subgraph");
        for (const Hypergraph3& sup : cfg.excluded_supergraphs)
            if (embeds(h, sup))
                throw std::runtime_error(
                    "search: extremal graph embeds into an excluded class");
    }
    if (rec.witness && !is_family_free(*rec.witness, cfg.family))
        throw std::runtime_error("search: witness is not family-free");
}

}  // namespace

std::string TuranRecord::key() const {
    return family_code + "|n=" + std::to_string(n) +
           "|s=" + std::to_string(order) + "|conn=" +
           (connected_only ? "1" : "0") + "|req=" + required_hex;
}

TuranRecord turan_exact(const SearchConfig& cfg) {
    if (cfg.mode != SearchMode::Maximize)
        throw std::invalid_argument("turan_exact: mode must be Maximize");
    if (!cfg.excluded_supergraphs.empty())
        throw std::invalid_argument("turan_exact: no order exclusions allowed");
    TuranRecord rec = run_search(cfg);
    rec.order = 1;
    verify_record(cfg, rec);
    return rec;
}

TuranRecord turan_conditional(const SearchConfig& cfg) {
    if (!cfg.required_subgraph)
        throw std::invalid_argument("turan_conditional: required subgraph missing");
    TuranRecord rec = run_search(cfg);
    rec.order = 1;
    verify_record(cfg, rec);
    return rec;
}

TuranRecord turan_order(const SearchConfig& cfg, int order,
                        std::span<const TuranRecord> lower) {
    if (order < 2)
        throw std::invalid_argument("turan_order: order must be at least 2");
    std::vector<char> seen(order, 0);
    SearchConfig work = cfg;
    work.excluded_supergraphs.clear();
    for (const TuranRecord& r : lower) {
        if (r.order < 1 || r.order >= order) continue;
        if (!r.complete)
            throw std::invalid_argument("turan_order: lower-order record incomplete");
        if (r.n != cfg.n || r.family_code != cfg.family.code() ||
            r.connected_only != cfg.connected_only)
            throw std::invalid_argument("turan_order: lower-order record mismatch");
        seen[r.order] = 1;
        for (const CanonicalForm& cf : r.extremal)
            work.excluded_supergraphs.push_back(canonical_representative(cf));
    }
    for (int s = 1; s < order; ++s)
        if (!seen[s])
            throw std::invalid_argument("turan_order: missing record for order " +
                                        std::to_string(s));
    TuranRecord rec = run_search(work);
    rec.order = order;
    verify_record(work, rec);
    return rec;
}

std::vector<TuranRecord> turan_hierarchy(const SearchConfig& cfg, int max_order) {
    std::vector<TuranRecord> out;
    for (int s = 1; s <= max_order; ++s) {
        TuranRecord r = s == 1 ? (cfg.required_subgraph ? turan_conditional(cfg)
                                                        : turan_exact(cfg))
                               : turan_order(cfg, s, out);
        if (r.value < 0) break;  // hierarchy exhausted
        out.push_back(std::move(r));
    }
    return out;
}

std::optional<Hypergraph3> decide_exists(const SearchConfig& cfg, long long t,
                                         TuranRecord* record) {
    SearchConfig work = cfg;
    work.mode = SearchMode::DecideAtLeast;
    work.target = t;
    TuranRecord rec = run_search(work);
    verify_record(work, rec);
    if (rec.witness &&
        static_cast<long long>(rec.witness->edge_count()) < t)
        throw std::runtime_error("decide_exists: witness below threshold");
    if (record) *record = rec;
    return rec.witness;
}

std::vector<CanonicalForm> enumerate_extremal(const SearchConfig& cfg,
                                              long long value,
                                              TuranRecord* record) {
    SearchConfig work = cfg;
    work.mode = SearchMode::EnumerateExtremal;
    work.target = value;
    TuranRecord rec = run_search(work);
    verify_record(work, rec);
    if (record) *record = rec;
    return rec.extremal;
}

}  // namespace turan
