#pragma once

#include <map>
#include <optional>

#include "mim/generate.hpp"
#include "mim/graph.hpp"

namespace mim {

// A maximal chain of degree-2 nodes joining two degree-3 nodes, stored as an
// ordered path from a to b. A direct edge between degree-3 nodes is a strand
// with empty interior.
struct ContractedEdge {
    int a;
    int b;
    std::vector<int> interior;  // chain nodes, ordered from a to b
    std::vector<Edge> strand;   // original edges, ordered from a to b
};

// Degree <= 2 structure hanging off a single degree-3 node: a pendant path
// or a cycle returning to the anchor. Carries no contracted edge; its nodes
// inherit the anchor's side.
struct DanglingChain {
    int anchor;
    std::vector<int> nodes;
};

struct ContractedGraph {
    int capacity = 0;           // node-id space of the source graph
    std::vector<int> deg3;      // V', sorted
    std::vector<ContractedEdge> edges;  // parallel strands are separate entries
    std::vector<DanglingChain> dangling;

    int k() const { return static_cast<int>(deg3.size()); }

    // Distinct endpoint pairs with their strand multiplicity.
    std::map<std::pair<int, int>, int> pair_multiplicity() const {
        std::map<std::pair<int, int>, int> mult;
        for (const ContractedEdge& ce : edges)
            ++mult[{std::min(ce.a, ce.b), std::max(ce.a, ce.b)}];
        return mult;
    }
};

// Side assignment over original node ids; 0 = unassigned.
using SideMap = std::vector<std::int8_t>;

struct Cut {
    SideMap side;
    EdgeSet b;
};

inline ContractedGraph contract_degree2(const Graph& g) {
    ContractedGraph cg;
    cg.capacity = g.capacity();
    for (int v : g.live_nodes())
        if (g.degree(v) == 3) cg.deg3.push_back(v);
    if (cg.k() < 2) throw std::invalid_argument("contract_degree2: fewer than 2 degree-3 nodes");
    if (!g.connected()) throw std::invalid_argument("contract_degree2: graph must be connected");

    for (int v : cg.deg3) {
        for (int w : g.neighbors(v)) {
            std::vector<int> interior;
            std::vector<Edge> path{Edge(v, w)};
            int prev = v;
            int cur = w;
            while (g.degree(cur) == 2) {
                const auto& nb = g.neighbors(cur);
                int nxt = (nb[0] == prev) ? nb[1] : nb[0];
                interior.push_back(cur);
                path.emplace_back(cur, nxt);
                prev = cur;
                cur = nxt;
            }
            if (g.degree(cur) == 3) {
                if (cur == v) {
                    // cycle through v alone; seen once from each of its two
                    // chain ends, keep the lexicographically first traversal
                    if (w < prev) cg.dangling.push_back({v, interior});
                } else if (v < cur) {
                    cg.edges.push_back({v, cur, std::move(interior), std::move(path)});
                }
            } else {
                interior.push_back(cur);  // the degree-1 end
                cg.dangling.push_back({v, std::move(interior)});
            }
        }
    }

    for (const auto& [pair, mult] : cg.pair_multiplicity())
        if (mult > 2)
            throw std::invalid_argument("contract_degree2: triple link between degree-3 nodes (theta graph)");
    return cg;
}

namespace detail {

// Distinct endpoint pairs of the contracted graph; a double edge counts once,
// matching how the bisection treats it.
inline std::vector<std::pair<int, int>> distinct_pairs(const ContractedGraph& cg) {
    std::vector<std::pair<int, int>> out;
    for (const auto& [pair, mult] : cg.pair_multiplicity()) out.push_back(pair);
    return out;
}

inline int crossing_pairs(const std::vector<std::pair<int, int>>& pairs, const SideMap& side) {
    int c = 0;
    for (auto [a, b] : pairs)
        if (side[a] != side[b]) ++c;
    return c;
}

}  // namespace detail

// Splits V' into sides of ceil(k/2) and floor(k/2) nodes, minimising the
// number of distinct crossing contracted edges by multi-start pair-swap
// local search. Deterministic for a fixed seed.
inline SideMap balanced_bisect(const ContractedGraph& cg, unsigned seed, int starts = 8) {
    const int k = cg.k();
    if (k < 2) throw std::invalid_argument("balanced_bisect: need k >= 2");
    const auto pairs = detail::distinct_pairs(cg);
    std::vector<std::vector<int>> pairs_at(cg.capacity);
    for (std::size_t i = 0; i < pairs.size(); ++i) {
        pairs_at[pairs[i].first].push_back(static_cast<int>(i));
        pairs_at[pairs[i].second].push_back(static_cast<int>(i));
    }

    auto move_delta = [&](const SideMap& side, int u) {
        int d = 0;
        for (int pi : pairs_at[u]) {
            auto [a, b] = pairs[pi];
            d += (side[a] == side[b]) ? 1 : -1;
        }
        return d;
    };

    std::mt19937 rng(seed);
    SideMap best;
    int best_obj = -1;
    for (int start = 0; start < starts; ++start) {
        std::vector<int> order = cg.deg3;
        if (start > 0) det_shuffle(order, rng);
        SideMap side(cg.capacity, 0);
        const int half = (k + 1) / 2;
        for (int i = 0; i < k; ++i) side[order[i]] = (i < half) ? 1 : 2;

        bool improved = true;
        while (improved) {
            improved = false;
            for (int u : cg.deg3) {
                if (side[u] != 1) continue;
                for (int w : cg.deg3) {
                    if (side[w] != 2) continue;
                    int delta = move_delta(side, u) + move_delta(side, w);
                    for (int pi : pairs_at[u]) {
                        auto [a, b] = pairs[pi];
                        if (a == std::min(u, w) && b == std::max(u, w)) delta += 2;
                    }
                    if (delta < 0) {
                        side[u] = 2;
                        side[w] = 1;
                        improved = true;
                        break;  // u moved; restart its scan position
                    }
                }
            }
        }
        int obj = detail::crossing_pairs(pairs, side);
        if (best_obj < 0 || obj < best_obj) {
            best_obj = obj;
            best = std::move(side);
        }
    }
    return best;
}

// Moves one endpoint of every crossing double edge from the larger side to
// the smaller side (side 1 on ties), leaving both degree-3 counts within 1
// of k/2 and no double edge across the cut.
inline SideMap repair_double_edges(const ContractedGraph& cg, SideMap side) {
    std::vector<std::pair<int, int>> doubles;
    for (const auto& [pair, mult] : cg.pair_multiplicity())
        if (mult == 2) doubles.push_back(pair);

    int moves = 0;
    for (bool again = true; again;) {
        again = false;
        for (auto [a, b] : doubles) {
            if (side[a] == side[b]) continue;
            if (++moves > cg.k())
                throw std::runtime_error("repair_double_edges: move budget exceeded");
            int n1 = 0, n2 = 0;
            for (int v : cg.deg3) (side[v] == 1 ? n1 : n2)++;
            int from = (n1 >= n2) ? 1 : 2;
            int mover = (side[a] == from) ? a : b;
            side[mover] = static_cast<std::int8_t>(3 - side[mover]);
            again = true;
            break;
        }
    }
    return side;
}

// Assigns every remaining node a side and picks one representative original
// edge per crossing strand: the middle edge, ties toward the side-1 end.
inline Cut expand_cut(const Graph& g, const ContractedGraph& cg, SideMap side) {
    assert(static_cast<int>(side.size()) == g.capacity());
    (void)g;
    for (const auto& [pair, mult] : cg.pair_multiplicity())
        if (mult == 2 && side[pair.first] != side[pair.second])
            throw std::logic_error("expand_cut: crossing double edge, repair missing");
    Cut cut;
    for (const ContractedEdge& ce : cg.edges) {
        if (side[ce.a] == side[ce.b]) {
            for (int x : ce.interior) side[x] = side[ce.a];
        } else {
            const std::size_t n_edges = ce.strand.size();
            std::size_t from_s1 = (n_edges - 1) / 2;
            std::size_t rep = (side[ce.a] == 1) ? from_s1 : n_edges - 1 - from_s1;
            for (std::size_t i = 0; i < ce.interior.size(); ++i)
                side[ce.interior[i]] = (i + 1 <= rep) ? side[ce.a] : side[ce.b];
            bool fresh = cut.b.insert(ce.strand[rep]);
            assert(fresh);  // crossing double edges must have been repaired
            (void)fresh;
        }
    }
    for (const DanglingChain& dc : cg.dangling)
        for (int x : dc.nodes) side[x] = side[dc.anchor];
    cut.side = std::move(side);
    return cut;
}

// Checks the cut properties: B is exactly the set of crossing edges, every
// live node has a side, and the degree-3 counts differ from k/2 by at most 1.
inline void check_cut(const Graph& g, const Cut& cut) {
    int side_nodes[3] = {0, 0, 0};
    int deg3[3] = {0, 0, 0};
    for (int v : g.live_nodes()) {
        int s = cut.side[v];
        if (s != 1 && s != 2) throw std::logic_error("cut: node without side");
        ++side_nodes[s];
        if (g.degree(v) == 3) ++deg3[s];
    }
    for (const Edge& e : g.edges()) {
        bool crossing = cut.side[e.u] != cut.side[e.v];
        if (crossing != cut.b.contains(e))
            throw std::logic_error("cut: B does not match the crossing edges");
    }
    double half = (deg3[1] + deg3[2]) / 2.0;
    if (std::abs(deg3[1] - half) > 1.0 + 1e-9 || std::abs(deg3[2] - half) > 1.0 + 1e-9)
        throw std::logic_error("cut: degree-3 balance violated");
    if (side_nodes[1] > 0 && side_nodes[2] > 0 && cut.b.empty())
        throw std::logic_error("cut: connected graph split into nonempty sides needs a crossing edge");
}

// Full pipeline of one bisection: contract, bisect, repair, expand.
inline Cut compute_cut(const Graph& g, unsigned seed) {
    ContractedGraph cg = contract_degree2(g);
    SideMap side = balanced_bisect(cg, seed);
    side = repair_double_edges(cg, std::move(side));
    Cut cut = expand_cut(g, cg, std::move(side));
    check_cut(g, cut);
    return cut;
}

}  // namespace mim
