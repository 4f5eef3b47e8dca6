#pragma once

#include <cstdint>

#include "mim/graph.hpp"

namespace mim {

struct OracleResult {
    int size = 0;
    EdgeSet witness;
    long explored = 0;  // candidate sets visited
};

namespace detail {

struct OracleSearch {
    const std::vector<Edge>& edges;
    const std::vector<std::uint64_t>& conflict;
    long explored = 0;
    int best = -1;
    std::vector<int> current;
    std::vector<int> best_set;

    void dfs(std::size_t start, std::uint64_t blocked) {
        ++explored;
        if (static_cast<int>(current.size()) > best) {
            best = static_cast<int>(current.size());
            best_set = current;
        }
        for (std::size_t i = start; i < edges.size(); ++i) {
            if (blocked & (std::uint64_t{1} << i)) continue;
            current.push_back(static_cast<int>(i));
            dfs(i + 1, blocked | conflict[i]);
            current.pop_back();
        }
    }
};

}  // namespace detail

// Exhaustive maximum induced matching by DFS over edge subsets. Two edges
// conflict when they share an endpoint or a graph edge joins their
// endpoints; a subset avoiding all conflicts is exactly an induced matching.
inline OracleResult brute_force_mim(const Graph& g, int max_edges = 30) {
    if (g.m() > max_edges)
        throw std::invalid_argument("brute_force_mim: instance too large (" + std::to_string(g.m()) +
                                    " edges, guard " + std::to_string(max_edges) + ")");
    const std::vector<Edge> edges = g.edges();
    assert(edges.size() <= 63);

    std::vector<std::uint64_t> conflict(edges.size(), 0);
    for (std::size_t i = 0; i < edges.size(); ++i) {
        for (std::size_t j = 0; j < edges.size(); ++j) {
            if (i == j) continue;
            int ei[2] = {edges[i].u, edges[i].v};
            int ej[2] = {edges[j].u, edges[j].v};
            bool clash = false;
            for (int a : ei)
                for (int b : ej)
                    if (a == b || g.has_edge(a, b)) clash = true;
            if (clash) conflict[i] |= std::uint64_t{1} << j;
        }
    }

    detail::OracleSearch search{edges, conflict, 0, -1, {}, {}};
    search.dfs(0, 0);

    OracleResult res;
    res.size = search.best;
    res.explored = search.explored;
    for (int i : search.best_set) res.witness.insert(edges[static_cast<std::size_t>(i)]);
    return res;
}

}  // namespace mim
