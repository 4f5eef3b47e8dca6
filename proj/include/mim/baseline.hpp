#pragma once

#include "mim/graph.hpp"

namespace mim {

// L(G^2): one node per edge of G, adjacent when the edges share an endpoint
// or an edge of G joins their endpoints. Independent sets correspond exactly
// to induced matchings of G; maximum degree is at most 12 for subcubic G.
struct ReducedGraph {
    std::vector<std::vector<int>> adj;  // sorted neighbour lists
    std::vector<Edge> back_map;         // node index -> original edge

    int n() const { return static_cast<int>(adj.size()); }
};

inline ReducedGraph build_l_g2(const Graph& g) {
    ReducedGraph rg;
    rg.back_map = g.edges();
    const auto& es = rg.back_map;
    rg.adj.resize(es.size());
    for (std::size_t i = 0; i < es.size(); ++i) {
        for (std::size_t j = i + 1; j < es.size(); ++j) {
            int ei[2] = {es[i].u, es[i].v};
            int ej[2] = {es[j].u, es[j].v};
            bool linked = false;
            for (int a : ei)
                for (int b : ej)
                    if (a == b || g.has_edge(a, b)) linked = true;
            if (linked) {
                rg.adj[i].push_back(static_cast<int>(j));
                rg.adj[j].push_back(static_cast<int>(i));
            }
        }
    }
    return rg;
}

namespace detail {

struct MisSearch {
    const std::vector<std::vector<int>>& adj;
    std::vector<int> best;

    void remove(std::vector<char>& alive, std::vector<int>& deg, int v) {
        alive[v] = false;
        for (int w : adj[v])
            if (alive[w]) --deg[w];
    }

    void rec(std::vector<char> alive, std::vector<int> deg, int live, std::vector<int> chosen) {
        // degree-0 and degree-1 nodes always join some maximum solution
        for (bool again = true; again;) {
            again = false;
            for (int v = 0; v < static_cast<int>(adj.size()); ++v) {
                if (!alive[v] || deg[v] > 1) continue;
                chosen.push_back(v);
                remove(alive, deg, v);
                --live;
                for (int w : adj[v])
                    if (alive[w]) {
                        remove(alive, deg, w);
                        --live;
                    }
                again = true;
            }
        }
        if (static_cast<int>(chosen.size()) + live <= static_cast<int>(best.size())) return;
        if (live == 0) {
            best = std::move(chosen);
            return;
        }
        int v = -1;
        for (int u = 0; u < static_cast<int>(adj.size()); ++u)
            if (alive[u] && (v < 0 || deg[u] > deg[v])) v = u;

        {  // include v: drop N[v]
            auto a2 = alive;
            auto d2 = deg;
            int l2 = live - 1;
            auto c2 = chosen;
            c2.push_back(v);
            remove(a2, d2, v);
            for (int w : adj[v])
                if (a2[w]) {
                    remove(a2, d2, w);
                    --l2;
                }
            rec(std::move(a2), std::move(d2), l2, std::move(c2));
        }
        {  // exclude v
            auto a2 = alive;
            auto d2 = deg;
            remove(a2, d2, v);
            rec(std::move(a2), std::move(d2), live - 1, std::move(chosen));
        }
    }
};

}  // namespace detail

// Exact maximum independent set: degree-<=1 reductions plus branching on a
// maximum-degree node. Plain and slow by design; it exists to cross-check.
inline std::vector<int> mis_solve(const ReducedGraph& rg) {
    detail::MisSearch search{rg.adj, {}};
    std::vector<int> deg(rg.adj.size());
    for (std::size_t v = 0; v < rg.adj.size(); ++v) deg[v] = static_cast<int>(rg.adj[v].size());
    search.rec(std::vector<char>(rg.adj.size(), true), std::move(deg), rg.n(), {});
    std::sort(search.best.begin(), search.best.end());
    return search.best;
}

// Maximum induced matching through the independent-set reduction.
inline EdgeSet cameron_mim(const Graph& g) {
    ReducedGraph rg = build_l_g2(g);
    EdgeSet out;
    for (int v : mis_solve(rg)) out.insert(rg.back_map[static_cast<std::size_t>(v)]);
    return out;
}

}  // namespace mim
