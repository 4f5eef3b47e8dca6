#pragma once

#include <cmath>
#include <numeric>
#include <random>

#include "mim/graph.hpp"

namespace mim {

// mt19937 output is pinned by the standard; avoiding std::shuffle and the
// distribution classes keeps generated instances identical across stdlibs.
inline int rand_below(std::mt19937& rng, int k) {
    assert(k > 0);
    return static_cast<int>(rng() % static_cast<unsigned>(k));
}

template <typename T>
void det_shuffle(std::vector<T>& v, std::mt19937& rng) {
    for (int i = static_cast<int>(v.size()) - 1; i > 0; --i)
        std::swap(v[i], v[static_cast<std::size_t>(rand_below(rng, i + 1))]);
}

namespace detail {

inline bool pairing_to_graph(const std::vector<std::pair<int, int>>& pairs, int n, Graph& out) {
    Graph g(n);
    for (auto [u, v] : pairs) {
        if (u == v || g.has_edge(u, v)) return false;
        g.add_edge(u, v);
    }
    if (!g.connected()) return false;
    out = std::move(g);
    return true;
}

// Configuration-model attempt for the degree sequence (n3 threes, rest twos):
// pair shuffled stubs, then repair self-loops/duplicates by switching partners
// with randomly chosen pairs.
inline bool try_degree_sequence(int n, int n3, std::mt19937& rng, Graph& out) {
    std::vector<int> ids(n);
    std::iota(ids.begin(), ids.end(), 0);
    det_shuffle(ids, rng);
    std::vector<int> stubs;
    for (int i = 0; i < n; ++i) {
        int d = i < n3 ? 3 : 2;
        for (int c = 0; c < d; ++c) stubs.push_back(ids[i]);
    }
    det_shuffle(stubs, rng);
    std::vector<std::pair<int, int>> pairs;
    for (std::size_t i = 0; i + 1 < stubs.size(); i += 2) pairs.emplace_back(stubs[i], stubs[i + 1]);

    auto bad = [&](std::size_t i) {
        auto [u, v] = pairs[i];
        if (u == v) return true;
        for (std::size_t j = 0; j < pairs.size(); ++j) {
            if (j == i) continue;
            auto [a, b] = pairs[j];
            if ((a == u && b == v) || (a == v && b == u)) return true;
        }
        return false;
    };

    int budget = 20 * n + 100;
    for (std::size_t i = 0; i < pairs.size();) {
        if (!bad(i)) {
            ++i;
            continue;
        }
        if (--budget < 0) return false;
        std::size_t j = static_cast<std::size_t>(rand_below(rng, static_cast<int>(pairs.size())));
        if (j == i) continue;
        std::swap(pairs[i].second, pairs[j].second);
        i = 0;
    }
    return pairing_to_graph(pairs, n, out);
}

// Fallback that always succeeds: a Hamiltonian cycle on a random node order,
// plus chords between non-adjacent degree-2 nodes until the degree-3 target
// is met (best effort).
inline Graph cycle_with_chords(int n, int n3, std::mt19937& rng) {
    std::vector<int> order(n);
    std::iota(order.begin(), order.end(), 0);
    det_shuffle(order, rng);
    Graph g(n);
    for (int i = 0; i < n; ++i) g.add_edge(order[i], order[(i + 1) % n]);
    int want_chords = n3 / 2;
    int attempts = 40 * n + 100;
    while (want_chords > 0 && attempts-- > 0) {
        int u = rand_below(rng, n);
        int v = rand_below(rng, n);
        if (u == v || g.degree(u) != 2 || g.degree(v) != 2 || g.has_edge(u, v)) continue;
        g.add_edge(u, v);
        --want_chords;
    }
    return g;
}

}  // namespace detail

// Connected simple graph with maximum degree 3 and roughly a p3 fraction of
// degree-3 nodes. Deterministic for fixed (n, p3, seed).
inline Graph random_subcubic(int n, double p3, unsigned seed) {
    if (n < 1) throw std::invalid_argument("random_subcubic: n must be >= 1");
    if (p3 < 0.0 || p3 > 1.0) throw std::invalid_argument("random_subcubic: p3 must be in [0,1]");
    std::mt19937 rng(seed);
    if (n == 1) return Graph(1);
    if (n == 2) {
        Graph g(2);
        g.add_edge(0, 1);
        return g;
    }
    int n3 = static_cast<int>(std::lround(p3 * n));
    if (n3 % 2 != 0) n3 += (n3 + 1 <= n) ? 1 : -1;  // 2n + n3 stub parity
    n3 = std::max(0, std::min(n3, n));

    Graph g;
    for (int attempt = 0; attempt < 60; ++attempt)
        if (detail::try_degree_sequence(n, n3, rng, g)) return g;
    return detail::cycle_with_chords(n, n3, rng);
}

}  // namespace mim
