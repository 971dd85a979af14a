#include "turan/embed.hpp"

#include <algorithm>

namespace turan {

namespace {

struct EmbedState {
    const Hypergraph3* pattern;
    const Hypergraph3* host;
    std::vector<int> order;        // pattern vertices, most constrained first
    std::vector<int> map;          // pattern vertex -> host vertex or -1
    std::vector<char> host_used;
    std::vector<int> pat_deg, host_deg;
    // edges of the pattern grouped by the order position at which they
    // become fully assigned
    std::vector<std::vector<Triple>> check_at;

    bool consistent(const Triple& e) const {
        return host->has_edge(
            sorted_triple(map[e.a], map[e.b], map[e.c]));
    }

    bool dfs(std::size_t pos) {
        if (pos == order.size()) return true;
        int u = order[pos];
        for (int v = 0; v < host->vertex_count(); ++v) {
            if (host_used[v] || host_deg[v] < pat_deg[u]) continue;
            map[u] = v;
            host_used[v] = 1;
            bool ok = true;
            for (const Triple& e : check_at[pos])
                if (!consistent(e)) {
                    ok = false;
                    break;
                }
            if (ok && dfs(pos + 1)) return true;
            host_used[v] = 0;
            map[u] = -1;
        }
        return false;
    }
};

bool quick_reject(const Hypergraph3& pattern, const Hypergraph3& host) {
    if (pattern.vertex_count() > host.vertex_count()) return true;
    if (pattern.edge_count() > host.edge_count()) return true;
    auto dp = pattern.degrees().degree;
    auto dh = host.degrees().degree;
    std::sort(dp.rbegin(), dp.rend());
    std::sort(dh.rbegin(), dh.rend());
    for (std::size_t i = 0; i < dp.size(); ++i)
        if (dp[i] > dh[i]) return true;
    return false;
}

std::optional<std::vector<int>> run_embed(const Hypergraph3& pattern,
                                          const Hypergraph3& host,
                                          const std::vector<int>& preassigned) {
    EmbedState st;
    st.pattern = &pattern;
    st.host = &host;
    const int np = pattern.vertex_count();
    st.map.assign(np, -1);
    st.host_used.assign(host.vertex_count(), 0);
    st.pat_deg.assign(np, 0);
    st.host_deg.assign(host.vertex_count(), 0);
    for (const Triple& t : pattern.edges()) {
        ++st.pat_deg[t.a];
        ++st.pat_deg[t.b];
        ++st.pat_deg[t.c];
    }
    for (const Triple& t : host.edges()) {
        ++st.host_deg[t.a];
        ++st.host_deg[t.b];
        ++st.host_deg[t.c];
    }
    std::vector<char> pre(np, 0);
    for (std::size_t u = 0; u < preassigned.size(); ++u) {
        if (preassigned[u] < 0) continue;
        st.map[u] = preassigned[u];
        st.host_used[preassigned[u]] = 1;
        pre[u] = 1;
    }
    for (const Triple& t : pattern.edges())
        if (pre[t.a] && pre[t.b] && pre[t.c] && !st.consistent(t))
            return std::nullopt;

    st.order.reserve(np);
    for (int v = 0; v < np; ++v)
        if (!pre[v]) st.order.push_back(v);
    std::stable_sort(st.order.begin(), st.order.end(), [&](int a, int b) {
        return st.pat_deg[a] > st.pat_deg[b];
    });

    std::vector<int> when(np, -1);
    for (std::size_t i = 0; i < st.order.size(); ++i) when[st.order[i]] = static_cast<int>(i);
    st.check_at.assign(st.order.size(), {});
    for (const Triple& t : pattern.edges()) {
        int last = std::max({when[t.a], when[t.b], when[t.c]});
        if (last >= 0) st.check_at[last].push_back(t);
        // edges among preassigned vertices were checked above
    }

    if (!st.dfs(0)) return std::nullopt;
    return st.map;
}

}  // namespace

std::optional<std::vector<int>> embeds(const Hypergraph3& pattern,
                                       const Hypergraph3& host) {
    if (quick_reject(pattern, host)) return std::nullopt;
    return run_embed(pattern, host, {});
}

std::optional<std::vector<int>> embeds_using_edge(const Hypergraph3& pattern,
                                                  const Hypergraph3& host,
                                                  const Triple& host_edge) {
    if (!host.has_edge(host_edge)) return std::nullopt;
    if (quick_reject(pattern, host)) return std::nullopt;
    const int hv[3] = {host_edge.a, host_edge.b, host_edge.c};
    for (const Triple& e : pattern.edges()) {
        const int pv[3] = {e.a, e.b, e.c};
        int idx[3] = {0, 1, 2};
        do {
            std::vector<int> pre(pattern.vertex_count(), -1);
            pre[pv[0]] = hv[idx[0]];
            pre[pv[1]] = hv[idx[1]];
            pre[pv[2]] = hv[idx[2]];
            if (auto m = run_embed(pattern, host, pre)) return m;
        } while (std::next_permutation(idx, idx + 3));
    }
    return std::nullopt;
}

}  // namespace turan
