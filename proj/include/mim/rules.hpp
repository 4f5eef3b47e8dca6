#pragma once

#include <optional>

#include "mim/bisection.hpp"
#include "mim/graph.hpp"

namespace mim {

// One node of the recursion: current graph, edges already selected (their
// endpoints and original neighbours are gone from the graph), the remaining
// cut edges, and the side assignment backing them.
struct SolverState {
    Graph g;
    EdgeSet s;
    EdgeSet b;
    SideMap side;

    // Keeps only cut edges whose endpoints are both still alive.
    void prune_b() {
        b.erase_if([this](const Edge& e) { return !g.alive(e.u) || !g.alive(e.v); });
    }

    int b_count(int v) const {
        int c = 0;
        for (const Edge& e : b)
            if (e.u == v || e.v == v) ++c;
        return c;
    }
};

enum class Rule { S1, S2, S3, S4, B21, B22, B31, B32, B33, B41 };

inline const char* rule_name(Rule r) {
    switch (r) {
        case Rule::S1: return "S1";
        case Rule::S2: return "S2";
        case Rule::S3: return "S3";
        case Rule::S4: return "S4";
        case Rule::B21: return "B2.1";
        case Rule::B22: return "B2.2";
        case Rule::B31: return "B3.1";
        case Rule::B32: return "B3.2";
        case Rule::B33: return "B3.3";
        case Rule::B41: return "B4.1";
    }
    return "?";
}

// One branch outcome: nodes to delete and edges to append to S. For every
// added edge the delete set contains both endpoints and all their current
// neighbours.
struct Alternative {
    std::vector<int> del;
    std::vector<Edge> add_to_s;
};

struct RuleMatch {
    Rule rule;
    std::vector<int> anchor;  // the matched nodes, for diagnostics
    std::vector<Alternative> alternatives;
};

namespace detail {

inline void insert_unique(std::vector<int>& v, int x) {
    auto it = std::lower_bound(v.begin(), v.end(), x);
    if (it == v.end() || *it != x) v.insert(it, x);
}

// N[u] union N[v] as a sorted vector.
inline std::vector<int> closed_neighborhoods(const Graph& g, int u, int v) {
    std::vector<int> out;
    insert_unique(out, u);
    insert_unique(out, v);
    for (int x : g.neighbors(u)) insert_unique(out, x);
    for (int x : g.neighbors(v)) insert_unique(out, x);
    return out;
}

inline Alternative match_edge_alternative(const Graph& g, int u, int v) {
    return Alternative{closed_neighborhoods(g, u, v), {Edge(u, v)}};
}

}  // namespace detail

// --- S1: components without degree-3 nodes -------------------------------
//
// Isolated nodes contribute nothing; a path with e edges contributes
// ceil(e/3) edges and a cycle with e edges floor(e/3), picked with at least
// two skipped edges between consecutive picks.
inline EdgeSet apply_s1(const Graph& g, const std::vector<int>& component) {
    EdgeSet out;
    if (component.size() == 1) return out;
    std::vector<int> walk;
    int start = -1;
    for (int v : component) {
        if (g.degree(v) > 2) throw std::invalid_argument("apply_s1: component has a degree-3 node");
        if (g.degree(v) <= 1 && start < 0) start = v;  // path endpoint, smallest id
    }
    bool cycle = start < 0;
    if (cycle) start = component.front();
    walk.push_back(start);
    int prev = -1, cur = start;
    while (true) {
        const auto& nb = g.neighbors(cur);
        int nxt = -1;
        for (int w : nb)
            if (w != prev) {
                nxt = w;
                break;  // sorted, so the smaller eligible neighbour
            }
        if (nxt < 0 || nxt == start) break;
        walk.push_back(nxt);
        prev = cur;
        cur = nxt;
    }
    int e = static_cast<int>(walk.size()) - (cycle ? 0 : 1);
    if (e == 0) return out;
    int picks = cycle ? e / 3 : (e + 2) / 3;
    for (int i = 0; i < picks; ++i) {
        int j = 3 * i;
        out.insert(Edge(walk[j], walk[(j + 1) % walk.size()]));
    }
    return out;
}

// --- S2: components with at most kappa degree-3 nodes ---------------------
//
// While a degree-3 node a exists, pick a neighbour e and branch three ways:
// edge a-e into S, or a removed alone, or e removed alone. Leaves have
// maximum degree 2 and fall to S1, giving at most 3^kappa leaves.
namespace detail {

inline int walk_next(const Graph& g, int prev, int cur) {
    for (int w : g.neighbors(cur))
        if (w != prev) return w;
    return -1;
}

// Whole-graph S1 for the leaves of the S2 recursion: same edge choices as
// apply_s1 applied per component, but in one allocation-light sweep. The
// ascending scan meets each component first at its smallest node.
inline EdgeSet s1_sweep(const Graph& g) {
    EdgeSet out;
    std::vector<char> seen(static_cast<std::size_t>(g.capacity()), false);
    for (int v = 0; v < g.capacity(); ++v) {
        if (!g.alive(v) || seen[v]) continue;
        int d = g.degree(v);
        if (d == 0) {
            seen[v] = true;
            continue;
        }
        int prev = v, cur = g.neighbors(v)[0];
        while (cur != v && g.degree(cur) == 2) {
            int nxt = walk_next(g, prev, cur);
            prev = cur;
            cur = nxt;
        }
        if (cur == v) {  // cycle; v is its smallest node
            int e = 1;
            prev = v;
            cur = g.neighbors(v)[0];
            while (cur != v) {
                int nxt = walk_next(g, prev, cur);
                prev = cur;
                cur = nxt;
                ++e;
            }
            int picks = e / 3;
            seen[v] = true;
            int a = v, b = g.neighbors(v)[0], idx = 0, taken = 0;
            while (true) {
                if (idx % 3 == 0 && taken < picks) {
                    out.insert(Edge(a, b));
                    ++taken;
                }
                seen[b] = true;
                if (b == v) break;
                int nxt = walk_next(g, a, b);
                a = b;
                b = nxt;
                ++idx;
            }
        } else {  // path; cur is one endpoint, find the other and start low
            int start = (d <= 1) ? std::min(v, cur) : cur;
            if (d == 2) {
                int p2 = v, c2 = g.neighbors(v)[1];
                while (g.degree(c2) == 2) {
                    int nxt = walk_next(g, p2, c2);
                    p2 = c2;
                    c2 = nxt;
                }
                start = std::min(start, c2);
            }
            seen[start] = true;
            int p = -1, c = start, idx = 0;
            while (true) {
                int nxt = walk_next(g, p, c);
                if (nxt < 0) break;
                if (idx % 3 == 0) out.insert(Edge(c, nxt));
                seen[nxt] = true;
                p = c;
                c = nxt;
                ++idx;
            }
        }
    }
    return out;
}

inline EdgeSet s2_recurse(const Graph& g) {
    int a = -1;
    for (int v = 0; v < g.capacity(); ++v)
        if (g.alive(v) && g.degree(v) == 3) {
            a = v;
            break;
        }
    if (a < 0) return s1_sweep(g);
    int e = g.neighbors(a)[0];

    EdgeSet best = s2_recurse(g.without(detail::closed_neighborhoods(g, a, e)));
    best.insert(Edge(a, e));

    EdgeSet alt = s2_recurse(g.without(std::vector<int>{a}));
    if (alt.size() > best.size()) best = std::move(alt);

    alt = s2_recurse(g.without(std::vector<int>{e}));
    if (alt.size() > best.size()) best = std::move(alt);
    return best;
}

}  // namespace detail

inline EdgeSet solve_small_s2(const Graph& g, const std::vector<int>& component, int kappa) {
    // compact to local ids so the 3^kappa recursion copies component-sized
    // graphs, not capacity-sized ones
    auto local = [&](int v) {
        return static_cast<int>(std::lower_bound(component.begin(), component.end(), v) -
                                component.begin());
    };
    Graph sub(static_cast<int>(component.size()));
    for (int v : component)
        for (int w : g.neighbors(v))
            if (v < w) sub.add_edge(local(v), local(w));
    int k = sub.count_degree3();
    if (k < 1 || k > kappa)
        throw std::invalid_argument("solve_small_s2: component has " + std::to_string(k) +
                                    " degree-3 nodes, want 1.." + std::to_string(kappa));
    EdgeSet out;
    for (const Edge& e : detail::s2_recurse(sub))
        out.insert(Edge(component[static_cast<std::size_t>(e.u)],
                        component[static_cast<std::size_t>(e.v)]));
    return out;
}

// --- S3: dominated neighbourhood elimination ------------------------------
//
// A node d, a proper nonempty subset D of N(d) and C = N(D) minus ({d} + D)
// match when (i) some edge lies inside C+D and (ii) every edge touching C+D
// has one end in D and the other in C+D+{d}. Effect: a maximum legal edge
// set inside C+D goes into S and {d} + C + D is removed.
struct S3Match {
    int d;
    std::vector<int> d_set;
    std::vector<int> c_set;
    std::vector<Edge> chosen;

    std::vector<int> removed() const {
        std::vector<int> out{d};
        for (int x : d_set) detail::insert_unique(out, x);
        for (int x : c_set) detail::insert_unique(out, x);
        return out;
    }
};

namespace detail {

// Largest pairwise-compatible subset of the candidate edges, ties toward the
// lexicographically first subset in canonical edge order.
inline std::vector<Edge> max_legal_fragment(const Graph& g, const std::vector<Edge>& cand) {
    const std::size_t n = cand.size();
    assert(n <= 16);
    std::vector<Edge> best;
    for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
        std::vector<Edge> pick;
        for (std::size_t i = 0; i < n; ++i)
            if (mask & (1u << i)) pick.push_back(cand[i]);
        if (pick.size() <= best.size()) continue;
        bool ok = true;
        for (std::size_t i = 0; ok && i < pick.size(); ++i)
            for (std::size_t j = i + 1; ok && j < pick.size(); ++j) {
                int ei[2] = {pick[i].u, pick[i].v};
                int ej[2] = {pick[j].u, pick[j].v};
                for (int x : ei)
                    for (int y : ej)
                        if (x == y || g.has_edge(x, y)) ok = false;
            }
        if (ok) best = std::move(pick);
    }
    return best;
}

inline std::optional<S3Match> try_s3_at(const Graph& g, int d, const std::vector<int>& d_set) {
    std::vector<int> cd = d_set;  // C + D, sorted
    std::vector<int> c_set;
    for (int x : d_set)
        for (int y : g.neighbors(x)) {
            if (y == d || std::binary_search(d_set.begin(), d_set.end(), y)) continue;
            if (!std::binary_search(c_set.begin(), c_set.end(), y)) {
                insert_unique(c_set, y);
                insert_unique(cd, y);
            }
        }
    auto in = [](const std::vector<int>& v, int x) { return std::binary_search(v.begin(), v.end(), x); };

    std::vector<Edge> inside;
    for (int x : cd)
        for (int y : g.neighbors(x)) {
            bool x_in_d = in(d_set, x);
            bool y_in_d = in(d_set, y);
            bool y_in_cdd = y == d || in(cd, y);
            bool x_in_cdd = true;  // x is in C+D by construction
            if (!((x_in_d && y_in_cdd) || (y_in_d && x_in_cdd))) return std::nullopt;  // (ii)
            if (x < y && in(cd, y)) inside.push_back(Edge(x, y));
        }
    if (inside.empty()) return std::nullopt;  // (i)

    S3Match m;
    m.d = d;
    m.d_set = d_set;
    m.c_set = std::move(c_set);
    m.chosen = max_legal_fragment(g, inside);
    assert(!m.chosen.empty());
    return m;
}

// Allocation-free equivalent of the two match conditions: (ii) holds iff
// every node of C has all its neighbours inside D, and given that, (i) holds
// iff some D-node has a neighbour other than d.
inline bool s3_quick(const Graph& g, int d, std::span<const int> d_set) {
    auto in_d_set = [&](int z) {
        for (int x : d_set)
            if (x == z) return true;
        return false;
    };
    bool inside_edge = false;
    for (int x : d_set) {
        for (int y : g.neighbors(x)) {
            if (y == d) continue;
            inside_edge = true;
            if (in_d_set(y)) continue;
            for (int z : g.neighbors(y))  // y in C: all its edges must end in D
                if (!in_d_set(z)) return false;
        }
    }
    return inside_edge;
}

}  // namespace detail

// First match in node-id order; for each d the subsets D are tried as
// singletons then pairs, ascending.
inline std::optional<S3Match> find_s3(const Graph& g) {
    for (int d : g.live_nodes()) {
        const auto nb = g.neighbors(d);
        if (nb.size() < 2) continue;  // no proper nonempty subset otherwise
        int subsets[6][2] = {{nb[0], -1}, {nb[1], -1}, {-1, -1}, {-1, -1}, {-1, -1}, {-1, -1}};
        int count = 2;
        if (nb.size() == 3) {
            subsets[2][0] = nb[2];
            subsets[3][0] = nb[0], subsets[3][1] = nb[1];
            subsets[4][0] = nb[0], subsets[4][1] = nb[2];
            subsets[5][0] = nb[1], subsets[5][1] = nb[2];
            count = 6;
        }
        for (int i = 0; i < count; ++i) {
            std::span<const int> d_set(subsets[i], subsets[i][1] < 0 ? 1 : 2);
            if (!detail::s3_quick(g, d, d_set)) continue;
            auto m = detail::try_s3_at(g, d, std::vector<int>(d_set.begin(), d_set.end()));
            assert(m.has_value());
            return m;
        }
    }
    return std::nullopt;
}

// --- S4: transfer a degree-1 node across the cut ---------------------------
//
// A cut edge whose endpoint has degree 1 need not be branched: the endpoint
// moves to the other side and the edge leaves B. Returns false when no cut
// edge qualifies; processes only the first match.
inline bool apply_s4(SolverState& st) {
    for (const Edge& e : st.b) {
        for (int c : {e.u, e.v}) {
            if (st.g.degree(c) != 1) continue;
            int d = (c == e.u) ? e.v : e.u;
            st.side[c] = st.side[d];
            st.b.erase(e);
            return true;
        }
    }
    return false;
}

// --- Branching rules -------------------------------------------------------

struct StuckError : std::logic_error {
    StuckError() : std::logic_error("no branching rule applies although B is nonempty") {}
};

namespace detail {

inline std::vector<int> others(const Graph& g, int v, int excluded) {
    std::vector<int> out;
    for (int w : g.neighbors(v))
        if (w != excluded) out.push_back(w);
    return out;
}

inline std::optional<RuleMatch> match_b21(const SolverState& st, const Edge& e) {
    const Graph& g = st.g;
    for (int a : {e.u, e.v}) {
        if (g.degree(a) != 3) continue;
        int d = (a == e.u) ? e.v : e.u;
        for (int c : g.neighbors(a)) {
            if (g.degree(c) != 1 || st.b.contains(Edge(a, c))) continue;
            RuleMatch m{Rule::B21, {d, a, c}, {}};
            m.alternatives.push_back({{std::min(a, c), std::max(a, c)}, {}});
            m.alternatives.push_back(match_edge_alternative(g, a, c));
            return m;
        }
    }
    return std::nullopt;
}

inline std::optional<RuleMatch> match_b22(const SolverState& st, const Edge& e) {
    const Graph& g = st.g;
    for (int a : {e.u, e.v}) {
        if (g.degree(a) != 3) continue;
        int d = (a == e.u) ? e.v : e.u;
        std::vector<int> rest = others(g, a, d);
        if (rest.size() != 2) continue;
        for (auto [bb, dd] : {std::pair{rest[0], rest[1]}, std::pair{rest[1], rest[0]}}) {
            if (g.degree(bb) != 2 || !g.has_edge(bb, dd)) continue;
            RuleMatch m{Rule::B22, {d, a, bb, dd}, {}};
            m.alternatives.push_back({{a}, {}});
            m.alternatives.push_back(match_edge_alternative(g, a, bb));
            return m;
        }
    }
    return std::nullopt;
}

inline std::optional<RuleMatch> match_b31(const SolverState& st, const Edge& e) {
    const Graph& g = st.g;
    int b1 = e.u, b2 = e.v;
    if (g.degree(b1) != 2 || g.degree(b2) != 2) return std::nullopt;
    if (st.b_count(b1) != 1 || st.b_count(b2) != 1) return std::nullopt;
    int d1 = others(g, b1, b2)[0];
    int d2 = others(g, b2, b1)[0];
    if (g.degree(d1) < 2 || g.degree(d2) < 2) return std::nullopt;  // S3 precludes this
    RuleMatch m{Rule::B31, {d1, b1, b2, d2}, {}};
    m.alternatives.push_back(match_edge_alternative(g, d1, b1));
    m.alternatives.push_back(match_edge_alternative(g, b1, b2));
    m.alternatives.push_back(match_edge_alternative(g, b2, d2));
    return m;
}

inline std::optional<RuleMatch> match_b32(const SolverState& st, const Edge& e) {
    const Graph& g = st.g;
    for (int b : {e.u, e.v}) {
        int a = (b == e.u) ? e.v : e.u;
        if (g.degree(b) != 2 || g.degree(a) != 3) continue;
        if (st.b_count(b) != 1 || st.b_count(a) != 1) continue;
        bool ok = true;
        for (int x : g.neighbors(a))
            if (g.degree(x) < 2) ok = false;
        if (!ok) continue;
        int d = others(g, b, a)[0];
        RuleMatch m{Rule::B32, {d, b, a}, {}};
        m.alternatives.push_back(match_edge_alternative(g, d, b));
        m.alternatives.push_back(match_edge_alternative(g, b, a));
        m.alternatives.push_back({{b}, {}});
        return m;
    }
    return std::nullopt;
}

inline std::optional<RuleMatch> match_b33(const SolverState& st, const Edge& e) {
    const Graph& g = st.g;
    int a1 = e.u, a2 = e.v;
    if (g.degree(a1) != 3 || g.degree(a2) != 3) return std::nullopt;
    if (st.b_count(a1) != 1 || st.b_count(a2) != 1) return std::nullopt;
    for (int a : {a1, a2})
        for (int x : g.neighbors(a))
            if (g.degree(x) < 2) return std::nullopt;
    RuleMatch m{Rule::B33, {a1, a2}, {}};
    m.alternatives.push_back(match_edge_alternative(g, a1, a2));
    m.alternatives.push_back({{a1}, {}});
    m.alternatives.push_back({{a2}, {}});
    return m;
}

inline std::optional<RuleMatch> match_b41(const SolverState& st, const Edge& e) {
    const Graph& g = st.g;
    for (int dp : {e.u, e.v}) {
        if (st.b_count(dp) < 2) continue;
        RuleMatch m{Rule::B41, {dp}, {}};
        m.alternatives.push_back({{dp}, {}});
        for (int x : g.neighbors(dp)) m.alternatives.push_back(match_edge_alternative(g, dp, x));
        return m;
    }
    return std::nullopt;
}

}  // namespace detail

// First applicable branching rule, rules in the fixed order B2.1, B2.2,
// B3.1, B3.2, B3.3, B4.1, each scanned over B in canonical edge order.
// B must be nonempty and no simplification rule may apply.
inline RuleMatch match_branching(const SolverState& st) {
    using Matcher = std::optional<RuleMatch> (*)(const SolverState&, const Edge&);
    static constexpr Matcher matchers[] = {detail::match_b21, detail::match_b22, detail::match_b31,
                                           detail::match_b32, detail::match_b33, detail::match_b41};
    for (Matcher matcher : matchers)
        for (const Edge& e : st.b)
            if (auto m = matcher(st, e)) return *m;
    throw StuckError();
}

}  // namespace mim
