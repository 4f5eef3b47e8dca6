#include <catch2/catch_amalgamated.hpp>

#include "mim/baseline.hpp"
#include "mim/generate.hpp"
#include "mim/oracle.hpp"
#include "mim/solver.hpp"
#include "test_util.hpp"

using namespace mim;

namespace {

long count_independent_sets(const ReducedGraph& rg) {
    long count = 0;
    const int n = rg.n();
    for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
        bool ok = true;
        for (int v = 0; ok && v < n; ++v) {
            if (!(mask & (1u << v))) continue;
            for (int w : rg.adj[static_cast<std::size_t>(v)])
                if (w > v && (mask & (1u << w))) ok = false;
        }
        if (ok) ++count;
    }
    return count;
}

}  // namespace

TEST_CASE("reduction of small graphs") {
    ReducedGraph p3 = build_l_g2(test::path(3));
    REQUIRE(p3.n() == 2);
    CHECK(p3.adj[0] == std::vector<int>{1});

    ReducedGraph p5 = build_l_g2(test::path(5));
    REQUIRE(p5.n() == 4);
    CHECK(p5.adj[0] == std::vector<int>{1, 2});  // e1 ~ e2, e3 but not e4

    ReducedGraph k4 = build_l_g2(test::k4());
    REQUIRE(k4.n() == 6);
    for (const auto& nb : k4.adj) CHECK(nb.size() == 5);  // complete
}

TEST_CASE("reduction degree stays below 12") {
    for (unsigned seed = 1; seed <= 20; ++seed) {
        Graph g = random_subcubic(30, 0.05 * (seed % 20), seed);
        ReducedGraph rg = build_l_g2(g);
        REQUIRE(rg.n() == g.m());
        for (const auto& nb : rg.adj) REQUIRE(nb.size() <= 12);
    }
}

TEST_CASE("mis_solve basics") {
    ReducedGraph complete = build_l_g2(test::k4());
    CHECK(mis_solve(complete).size() == 1);

    ReducedGraph edgeless;
    edgeless.adj.resize(5);
    for (int i = 0; i < 5; ++i) edgeless.back_map.push_back(Edge(i, i + 5));
    CHECK(mis_solve(edgeless).size() == 5);

    ReducedGraph p5 = build_l_g2(test::path(5));
    CHECK(mis_solve(p5) == std::vector<int>{0, 3});
}

TEST_CASE("cameron_mim equals the direct solvers") {
    EdgeSet p5 = cameron_mim(test::path(5));
    CHECK(p5 == EdgeSet{Edge(0, 1), Edge(3, 4)});

    EdgeSet pet = cameron_mim(test::petersen());
    CHECK(pet.size() == 3);
    CHECK(is_induced_matching(test::petersen(), pet));

    Graph single = test::path(2);
    CHECK(cameron_mim(single) == EdgeSet{Edge(0, 1)});

    for (unsigned seed = 1; seed <= 30; ++seed) {
        Graph g = random_subcubic(14, 0.07 * (seed % 13), 400 + seed);
        EdgeSet s = cameron_mim(g);
        REQUIRE(is_induced_matching(g, s));
        REQUIRE(static_cast<int>(s.size()) == brute_force_mim(g).size);
        REQUIRE(s.size() == algo_mim(g).first.size());
    }
}

TEST_CASE("independent sets of the reduction biject with induced matchings") {
    for (unsigned seed = 1; seed <= 15; ++seed) {
        Graph g = random_subcubic(8, 0.1 * (seed % 8), 60 + seed);
        if (g.m() > 10) continue;
        ReducedGraph rg = build_l_g2(g);
        REQUIRE(count_independent_sets(rg) == brute_force_mim(g).explored);
    }
}
