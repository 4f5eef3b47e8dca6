#pragma once

#include <array>
#include <functional>

#include "mim/bisection.hpp"
#include "mim/rules.hpp"

namespace mim {

struct Config {
    double s = 0.636;    // reporting only; the solver itself is measure-free
    int kappa = 12;      // degree-3 threshold below which S2 takes a component
    unsigned seed = 1;   // bisection seed
    int assert_level = 1;  // 0 none, 1 cheap invariants, 2 full state validation

    void validate() const {
        if (kappa < 3) throw std::invalid_argument("kappa must be >= 3");
    }
};

struct SolveStats {
    long nodes_expanded = 0;
    long leaves = 0;
    long bisections = 0;
    int max_depth = 0;
    std::array<long, 10> rule_counts{};  // indexed by Rule

    long& count(Rule r) { return rule_counts[static_cast<std::size_t>(r)]; }
    long count(Rule r) const { return rule_counts[static_cast<std::size_t>(r)]; }
};

namespace detail {

struct Solver {
    const Graph& original;
    Config cfg;
    SolveStats stats;

    // Step hook for tests: called with the state and chosen branching match.
    std::function<void(const SolverState&, const RuleMatch&)> on_branch;

    EdgeSet run(SolverState st, int depth) {
        ++stats.nodes_expanded;
        stats.max_depth = std::max(stats.max_depth, depth);
        if (cfg.assert_level >= 2) validate_state(st);

        // 1. nothing left
        if (st.g.n() == 0) {
            ++stats.leaves;
            return st.s;
        }

        const auto comps = st.g.components();

        // 2. cut fully processed and graph disconnected: solve components
        //    independently and union
        if (st.b.empty() && comps.size() >= 2) {
            EdgeSet out = st.s;
            for (const auto& comp : comps) {
                SolverState child{st.g.induced(comp), {}, {}, st.side};
                out.merge(run(std::move(child), depth + 1));
            }
            return out;
        }

        // 3. connected, no cut, too many degree-3 nodes for S2: bisect
        if (st.b.empty() && st.g.count_degree3() > cfg.kappa) {
            Cut cut = compute_cut(st.g, cfg.seed + 0x9e3779b9u * static_cast<unsigned>(stats.bisections));
            ++stats.bisections;
            if (cut.b.empty()) throw std::logic_error("bisection produced an empty cut");
            st.b = std::move(cut.b);
            st.side = std::move(cut.side);
            return run(std::move(st), depth + 1);
        }

        // 4. first applicable simplification rule
        std::vector<char> comp_has_b(comps.size(), false);
        if (!st.b.empty()) {
            std::vector<int> comp_of(st.g.capacity(), -1);
            for (std::size_t i = 0; i < comps.size(); ++i)
                for (int v : comps[i]) comp_of[v] = static_cast<int>(i);
            for (const Edge& e : st.b) comp_has_b[static_cast<std::size_t>(comp_of[e.u])] = true;
        }

        for (std::size_t i = 0; i < comps.size(); ++i) {  // S1
            if (comp_has_b[i]) continue;
            bool deg3_free = true;
            for (int v : comps[i])
                if (st.g.degree(v) == 3) deg3_free = false;
            if (!deg3_free) continue;
            ++stats.count(Rule::S1);
            st.s.merge(apply_s1(st.g, comps[i]));
            st.g.remove_nodes(comps[i]);
            return run(std::move(st), depth + 1);
        }

        for (std::size_t i = 0; i < comps.size(); ++i) {  // S2
            if (comp_has_b[i]) continue;
            int k = 0;
            for (int v : comps[i])
                if (st.g.degree(v) == 3) ++k;
            if (k < 1 || k > cfg.kappa) continue;
            ++stats.count(Rule::S2);
            st.s.merge(solve_small_s2(st.g, comps[i], cfg.kappa));
            st.g.remove_nodes(comps[i]);
            st.prune_b();
            return run(std::move(st), depth + 1);
        }

        if (auto m3 = find_s3(st.g)) {  // S3
            ++stats.count(Rule::S3);
            for (const Edge& e : m3->chosen) st.s.insert(e);
            st.g.remove_nodes(m3->removed());
            st.prune_b();
            return run(std::move(st), depth + 1);
        }

        if (apply_s4(st)) {  // S4
            ++stats.count(Rule::S4);
            return run(std::move(st), depth + 1);
        }

        // 5. branch on the first applicable rule; keep a largest result
        assert(!st.b.empty());
        RuleMatch match = match_branching(st);
        ++stats.count(match.rule);
        if (on_branch) on_branch(st, match);

        EdgeSet best;
        bool first = true;
        for (const Alternative& alt : match.alternatives) {
            SolverState child = st;
            for (const Edge& e : alt.add_to_s) child.s.insert(e);
            child.g.remove_nodes(alt.del);
            child.prune_b();
            if (cfg.assert_level >= 1 && child.b.size() >= st.b.size())
                throw std::logic_error("branching alternative failed to consume a cut edge");
            EdgeSet r = run(std::move(child), depth + 1);
            if (first || r.size() > best.size()) {
                best = std::move(r);
                first = false;
            }
        }
        return best;
    }

    void validate_state(const SolverState& st) const {
        if (!is_induced_matching(original, st.s))
            throw std::logic_error("solver invariant: S is not an induced matching");
        for (const Edge& e : st.b) {
            if (!st.g.has_edge(e)) throw std::logic_error("solver invariant: B not a subset of E");
            if (st.side[e.u] == st.side[e.v])
                throw std::logic_error("solver invariant: B edge does not cross the cut");
        }
        for (const Edge& e : st.s)
            for (int x : {e.u, e.v}) {
                if (st.g.alive(x)) throw std::logic_error("solver invariant: S endpoint still in V");
                for (int y : original.neighbors(x))
                    if (st.g.alive(y))
                        throw std::logic_error("solver invariant: S endpoint neighbour still in V");
            }
    }
};

}  // namespace detail

// Exact maximum induced matching via the five-step recursion: termination,
// component split, bisection, simplification, branching.
inline std::pair<EdgeSet, SolveStats> algo_mim(const Graph& g, const Config& cfg = {}) {
    cfg.validate();
    detail::Solver solver{g, cfg, {}, {}};
    SolverState root{g, {}, {}, SideMap(static_cast<std::size_t>(g.capacity()), 0)};
    EdgeSet s = solver.run(std::move(root), 0);
    return {std::move(s), solver.stats};
}

// Same recursion, with a callback invoked at every branching step; the
// callback sees the state before the alternatives are applied.
inline std::pair<EdgeSet, SolveStats> algo_mim_traced(
    const Graph& g, const Config& cfg,
    std::function<void(const SolverState&, const RuleMatch&)> on_branch) {
    cfg.validate();
    detail::Solver solver{g, cfg, {}, std::move(on_branch)};
    SolverState root{g, {}, {}, SideMap(static_cast<std::size_t>(g.capacity()), 0)};
    EdgeSet s = solver.run(std::move(root), 0);
    return {std::move(s), solver.stats};
}

// Solutions are checked against the graph the solve started from.
inline bool verify_solution(const Graph& g_original, const EdgeSet& s) {
    return is_induced_matching(g_original, s);
}

}  // namespace mim
