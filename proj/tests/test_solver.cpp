#include <catch2/catch_amalgamated.hpp>

#include "mim/generate.hpp"
#include "mim/oracle.hpp"
#include "mim/solver.hpp"
#include "test_util.hpp"

using namespace mim;

TEST_CASE("solver on named graphs") {
    CHECK(algo_mim(Graph()).first.empty());
    CHECK(algo_mim(test::path(5)).first.size() == 2);
    CHECK(algo_mim(test::k4()).first.size() == 1);
    CHECK(algo_mim(test::petersen()).first.size() == 3);
    CHECK(algo_mim(test::cycle(9)).first.size() == 3);
}

TEST_CASE("solver output is a valid matching with sane stats") {
    Graph g = random_subcubic(26, 0.7, 9);
    auto [s, stats] = algo_mim(g);
    CHECK(verify_solution(g, s));
    CHECK(stats.leaves <= stats.nodes_expanded);
    CHECK(stats.nodes_expanded > 0);
    CHECK(stats.max_depth >= 1);
}

TEST_CASE("disconnected inputs are split") {
    Graph g(9);  // P4 + C5 as one instance
    for (int i = 0; i + 1 < 4; ++i) g.add_edge(i, i + 1);
    for (int i = 0; i < 5; ++i) g.add_edge(4 + i, 4 + (i + 1) % 5);
    auto [s, stats] = algo_mim(g);
    CHECK(s.size() == 2);  // 1 from the path + 1 from the cycle
    CHECK(verify_solution(g, s));
}

TEST_CASE("solver equals oracle on random instances") {
    for (unsigned seed = 1; seed <= 50; ++seed) {
        Graph g = random_subcubic(16, 0.1 * (seed % 9), 2000 + seed);
        int opt = brute_force_mim(g).size;
        for (int kappa : {12, 3}) {
            Config cfg;
            cfg.kappa = kappa;
            cfg.seed = seed;
            cfg.assert_level = 2;
            auto [s, stats] = algo_mim(g, cfg);
            REQUIRE(verify_solution(g, s));
            REQUIRE(static_cast<int>(s.size()) == opt);
        }
    }
}

TEST_CASE("small kappa exercises the branching rules") {
    SolveStats total;
    for (unsigned seed = 1; seed <= 30; ++seed) {
        Graph g = random_subcubic(18, 0.8, 3000 + seed);
        Config cfg;
        cfg.kappa = 3;
        cfg.seed = seed;
        auto [s, stats] = algo_mim(g, cfg);
        REQUIRE(static_cast<int>(s.size()) == brute_force_mim(g).size);
        for (std::size_t r = 0; r < stats.rule_counts.size(); ++r)
            total.rule_counts[r] += stats.rule_counts[r];
        total.bisections += stats.bisections;
    }
    CHECK(total.bisections > 0);
    CHECK(total.count(Rule::S1) + total.count(Rule::S2) > 0);
    long branched = 0;
    for (Rule r : {Rule::B21, Rule::B22, Rule::B31, Rule::B32, Rule::B33, Rule::B41})
        branched += total.count(r);
    CHECK(branched > 0);
    std::ostringstream os;
    for (int r = 0; r < 10; ++r)
        os << rule_name(static_cast<Rule>(r)) << "=" << total.rule_counts[static_cast<std::size_t>(r)]
           << " ";
    WARN("rule usage over 30 solves: " << os.str());
}

TEST_CASE("solver is deterministic") {
    Graph g = random_subcubic(32, 0.75, 123);
    Config cfg;
    cfg.kappa = 6;
    cfg.seed = 17;
    auto [s1, st1] = algo_mim(g, cfg);
    auto [s2, st2] = algo_mim(g, cfg);
    CHECK(s1 == s2);
    CHECK(st1.nodes_expanded == st2.nodes_expanded);
    CHECK(st1.leaves == st2.leaves);
    CHECK(st1.rule_counts == st2.rule_counts);
}

TEST_CASE("kappa below 3 is rejected") {
    Config cfg;
    cfg.kappa = 2;
    CHECK_THROWS_AS(algo_mim(test::k4(), cfg), std::invalid_argument);
}
