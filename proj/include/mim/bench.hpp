#pragma once

#include <chrono>
#include <cmath>

#include "mim/baseline.hpp"
#include "mim/generate.hpp"
#include "mim/oracle.hpp"
#include "mim/solver.hpp"

namespace mim {

struct BenchRecord {
    std::string instance;
    int n = 0;
    int m = 0;
    int deg3 = 0;
    int solver_size = -1;
    int oracle_size = -1;    // -1: skipped (guard)
    int baseline_size = -1;  // -1: disabled
    long leaves = 0;
    long nodes_expanded = 0;
    double wall_ms = 0.0;
    unsigned seed = 0;
    std::string note;  // nonempty on per-row failures
};

struct BenchOptions {
    std::vector<int> sizes;
    int trials = 1;
    unsigned seed = 1;
    double p3 = -1.0;  // < 0: rotate over a fixed palette per trial
    bool run_baseline = false;
    int oracle_max_edges = 30;
    int kappa = 12;
};

inline double bench_p3(const BenchOptions& opt, int trial) {
    if (opt.p3 >= 0.0) return opt.p3;
    static constexpr double palette[] = {0.3, 0.5, 0.7, 0.9};
    return palette[trial % 4];
}

// One row per (size, trial): generate, solve, optionally cross-check with
// the oracle and the reduction baseline. Deterministic except wall_ms.
inline std::vector<BenchRecord> run_bench(const BenchOptions& opt) {
    if (opt.sizes.empty()) throw std::invalid_argument("run_bench: no sizes given");
    if (opt.trials < 1) throw std::invalid_argument("run_bench: trials must be >= 1");
    std::vector<BenchRecord> rows;
    for (std::size_t si = 0; si < opt.sizes.size(); ++si) {
        int n = opt.sizes[si];
        for (int t = 0; t < opt.trials; ++t) {
            BenchRecord row;
            row.seed = opt.seed + 7919u * static_cast<unsigned>(si) + static_cast<unsigned>(t);
            row.instance = "n" + std::to_string(n) + "_t" + std::to_string(t);
            Graph g = random_subcubic(n, bench_p3(opt, t), row.seed);
            row.n = g.n();
            row.m = g.m();
            row.deg3 = g.count_degree3();

            Config cfg;
            cfg.kappa = opt.kappa;
            cfg.seed = row.seed;
            auto t0 = std::chrono::steady_clock::now();
            auto [s, stats] = algo_mim(g, cfg);
            auto t1 = std::chrono::steady_clock::now();
            row.wall_ms = std::chrono::duration<double, std::milli>(t1 - t0).count();
            row.solver_size = static_cast<int>(s.size());
            row.leaves = stats.leaves;
            row.nodes_expanded = stats.nodes_expanded;
            if (!verify_solution(g, s)) row.note = "solver output not an induced matching";

            if (g.m() <= opt.oracle_max_edges) {
                row.oracle_size = brute_force_mim(g, opt.oracle_max_edges).size;
                if (row.oracle_size != row.solver_size) row.note = "solver/oracle size mismatch";
            }
            if (opt.run_baseline) {
                row.baseline_size = static_cast<int>(cameron_mim(g).size());
                if (row.baseline_size != row.solver_size) row.note = "solver/baseline size mismatch";
            }
            rows.push_back(std::move(row));
        }
    }
    return rows;
}

inline void write_bench_csv(std::ostream& out, const std::vector<BenchRecord>& rows) {
    out << "instance,n,m,deg3,solver_size,oracle_size,baseline_size,leaves,nodes_expanded,"
           "wall_ms,seed,note\n";
    auto opt_int = [](int v) { return v < 0 ? std::string() : std::to_string(v); };
    for (const BenchRecord& r : rows) {
        out << r.instance << ',' << r.n << ',' << r.m << ',' << r.deg3 << ',' << r.solver_size << ','
            << opt_int(r.oracle_size) << ',' << opt_int(r.baseline_size) << ',' << r.leaves << ','
            << r.nodes_expanded << ',' << r.wall_ms << ',' << r.seed << ',' << r.note << '\n';
    }
}

// Least-squares slope of ln(leaves) against n; the solver's empirical
// growth rate is e^slope per node.
inline double fit_log_leaves_slope(const std::vector<BenchRecord>& rows) {
    if (rows.size() < 2) throw std::invalid_argument("fit_log_leaves_slope: need >= 2 rows");
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    for (const BenchRecord& r : rows) {
        double x = r.n;
        double y = std::log(static_cast<double>(std::max(r.leaves, 1L)));
        sx += x;
        sy += y;
        sxx += x * x;
        sxy += x * y;
    }
    double k = static_cast<double>(rows.size());
    double denom = k * sxx - sx * sx;
    if (std::abs(denom) < 1e-12) throw std::invalid_argument("fit_log_leaves_slope: degenerate n values");
    return (k * sxy - sx * sy) / denom;
}

}  // namespace mim
