#pragma once

#include <array>
#include <cmath>
#include <string>
#include <vector>

#include "mim/graph.hpp"

namespace mim {

// Degree-dependent node weight, parameterised by s in [1/2, 1].
struct Weighting {
    double s;
    explicit Weighting(double s_) : s(s_) {
        if (s < 0.5 || s > 1.0) throw std::invalid_argument("weight parameter s must be in [0.5, 1]");
    }
};

inline double node_weight(int degree, Weighting w) {
    switch (degree) {
        case 0:
        case 1: return 0.0;
        case 2: return w.s;
        case 3: return 1.0;
        default: throw std::invalid_argument("degree out of range 0..3");
    }
}

inline double graph_measure(const Graph& g, Weighting w) {
    double mu = 0.0;
    for (int v : g.live_nodes()) mu += node_weight(g.degree(v), w);
    return mu;
}

using BranchingVector = std::vector<double>;

// Branching factor: the unique root beta > 1 of sum_i x^{-t_i} = 1.
// The left side is strictly decreasing in x, so plain bisection suffices;
// beta <= r^{1/min t_i} gives a guaranteed bracket.
inline double tau(const BranchingVector& ts) {
    if (ts.size() < 2) throw std::invalid_argument("branching vector needs >= 2 entries");
    double tmin = ts[0];
    for (double t : ts) {
        if (t <= 0.0) throw std::invalid_argument("branching vector entries must be positive");
        tmin = std::min(tmin, t);
    }
    auto residual = [&](double x) {
        double sum = 0.0;
        for (double t : ts) sum += std::pow(x, -t);
        return sum - 1.0;
    };
    double lo = 1.0;
    double hi = std::max(2.0, std::pow(static_cast<double>(ts.size()), 1.0 / tmin));
    assert(residual(hi) <= 0.0);
    for (int it = 0; it < 200; ++it) {
        double mid = 0.5 * (lo + hi);
        (residual(mid) > 0.0 ? lo : hi) = mid;
    }
    return 0.5 * (lo + hi);
}

// Strict 4-decimal uprounding for display: never below the true value.
inline double upround4(double x) { return std::ceil(x * 1e4 - 1e-6) / 1e4; }

// One branching-vector entry of the runtime table: each component is an
// affine form base + coeff*s.
struct AffineTerm {
    double base;
    double s_coeff;
    double at(double s) const { return base + s_coeff * s; }
};

struct TableVector {
    std::string rule;
    std::string formula;
    std::vector<AffineTerm> terms;

    BranchingVector at(double s) const {
        BranchingVector v;
        v.reserve(terms.size());
        for (const AffineTerm& t : terms) v.push_back(t.at(s));
        return v;
    }
};

// The ten fixed branching vectors covering all branching rules.
inline const std::vector<TableVector>& analysis_vectors() {
    static const std::vector<TableVector> rows = {
        {"B2.1,B2.2", "tau(3+s,4)", {{3, 1}, {4, 0}}},
        {"B2.1,B2.2", "tau(4-s,5-s)", {{4, -1}, {5, -1}}},
        {"B3.1,B3.2 b-side", "tau(3+4s,3+4s,3+4s)", {{3, 4}, {3, 4}, {3, 4}}},
        {"B3.1,B3.2 b-side", "tau(4,4+s,5+s)", {{4, 0}, {4, 1}, {5, 1}}},
        {"B3.2 a-side,B3.3", "tau(4-s,4+2s,6)", {{4, -1}, {4, 2}, {6, 0}}},
        {"B3.2 a-side,B3.3", "tau(4-s,4+3s,4+3s)", {{4, -1}, {4, 3}, {4, 3}}},
        {"B3.2 a-side,B3.3", "tau(4-s,5,7-s)", {{4, -1}, {5, 0}, {7, -1}}},
        {"B3.2 a-side,B3.3", "tau(4-s,6-2s,6+s)", {{4, -1}, {6, -2}, {6, 1}}},
        {"B3.2 a-side,B3.3", "tau(4-s,6-2s,8-2s)", {{4, -1}, {6, -2}, {8, -2}}},
        {"B4.1", "tau(6+2s,6+2s,6+2s,6+2s)", {{6, 2}, {6, 2}, {6, 2}, {6, 2}}},
    };
    return rows;
}

struct TableRow {
    std::string rule;
    std::string formula;
    std::vector<double> raw;        // one per requested s
    std::vector<double> uprounded;  // upround4 of raw
};

// Evaluates the ten vectors at each s and appends an overall-max row.
inline std::vector<TableRow> branching_factor_table(const std::vector<double>& s_values) {
    std::vector<TableRow> rows;
    TableRow overall{"Overall", "Max of Above", {}, {}};
    overall.raw.assign(s_values.size(), 0.0);
    for (const TableVector& tv : analysis_vectors()) {
        TableRow row{tv.rule, tv.formula, {}, {}};
        for (std::size_t i = 0; i < s_values.size(); ++i) {
            double b = tau(tv.at(s_values[i]));
            row.raw.push_back(b);
            row.uprounded.push_back(upround4(b));
            overall.raw[i] = std::max(overall.raw[i], b);
        }
        rows.push_back(std::move(row));
    }
    for (double b : overall.raw) overall.uprounded.push_back(upround4(b));
    rows.push_back(std::move(overall));
    return rows;
}

// The published 4-decimal values at s = 0.6, 0.636, 0.7, kept for
// cross-checking; two of the thirty entries are misprints (see
// table_mismatches).
inline const std::vector<double>& published_s_values() {
    static const std::vector<double> s = {0.6, 0.636, 0.7};
    return s;
}

inline const std::array<std::array<double, 3>, 11>& published_table_values() {
    static const std::array<std::array<double, 3>, 11> printed = {{
        {1.2004, 1.1993, 1.1974},
        {1.1958, 1.1978, 1.2015},
        {1.2257, 1.2192, 1.2086},
        {1.2644, 1.2630, 1.2606},
        {1.2618, 1.2615, 1.2610},
        {1.2544, 1.2520, 1.2478},
        {1.2596, 1.2612, 1.2641},
        {1.2609, 1.2630, 1.669},
        {1.2582, 1.2617, 1.2683},
        {1.2124, 1.2030, 1.2061},
        {1.2644, 1.2630, 1.2683},
    }};
    return printed;
}

struct TableMismatch {
    int row;  // index into analysis_vectors(), 10 = overall
    double s;
    double printed;
    double computed;
};

// Recomputes the table at the published s values and lists entries whose
// uprounded value disagrees with the printed one.
inline std::vector<TableMismatch> table_mismatches() {
    const auto& s_values = published_s_values();
    const auto rows = branching_factor_table(s_values);
    const auto& printed = published_table_values();
    std::vector<TableMismatch> out;
    for (std::size_t r = 0; r < rows.size(); ++r)
        for (std::size_t i = 0; i < s_values.size(); ++i)
            if (std::abs(rows[r].uprounded[i] - printed[r][i]) > 1e-9)
                out.push_back({static_cast<int>(r), s_values[i], printed[r][i], rows[r].uprounded[i]});
    return out;
}

struct OptimumWeight {
    double s;
    double max_factor;  // raw, not uprounded
};

// Grid scan of the overall-max branching factor over s in [0.5, 1].
// Ties break toward smaller s.
inline OptimumWeight optimize_s(double step) {
    if (step <= 0.0) throw std::invalid_argument("optimize_s: step must be positive");
    OptimumWeight best{0.0, 0.0};
    bool first = true;
    for (int i = 0;; ++i) {
        double s = 0.5 + i * step;
        if (s > 1.0 + 1e-12) break;
        s = std::min(s, 1.0);
        double worst = 0.0;
        for (const TableVector& tv : analysis_vectors()) worst = std::max(worst, tau(tv.at(s)));
        if (first || worst < best.max_factor) {
            best = {s, worst};
            first = false;
        }
    }
    return best;
}

}  // namespace mim
