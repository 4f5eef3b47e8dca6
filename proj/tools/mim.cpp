#include <fstream>
#include <iomanip>
#include <iostream>

#include <CLI11.hpp>
#include <json.hpp>

#include "mim/baseline.hpp"
#include "mim/bench.hpp"
#include "mim/bisection.hpp"
#include "mim/generate.hpp"
#include "mim/measure.hpp"
#include "mim/oracle.hpp"
#include "mim/rules.hpp"
#include "mim/solver.hpp"

namespace {

mim::Graph load_graph(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    return mim::parse_graph(in);
}

void print_solution(const mim::EdgeSet& s) {
    std::cout << "s mim " << s.size() << "\n";
    for (const mim::Edge& e : s) std::cout << "e " << e.u + 1 << " " << e.v + 1 << "\n";
}

void print_stats_comments(const mim::SolveStats& st) {
    std::cout << "# nodes_expanded " << st.nodes_expanded << "\n";
    std::cout << "# leaves " << st.leaves << "\n";
    std::cout << "# bisections " << st.bisections << "\n";
    std::cout << "# max_depth " << st.max_depth << "\n";
    for (int r = 0; r < 10; ++r)
        std::cout << "# rule " << mim::rule_name(static_cast<mim::Rule>(r)) << " "
                  << st.rule_counts[static_cast<std::size_t>(r)] << "\n";
}

nlohmann::json stats_json(const mim::SolveStats& st) {
    nlohmann::json rules;
    for (int r = 0; r < 10; ++r)
        rules[mim::rule_name(static_cast<mim::Rule>(r))] = st.rule_counts[static_cast<std::size_t>(r)];
    return {{"nodes_expanded", st.nodes_expanded},
            {"leaves", st.leaves},
            {"bisections", st.bisections},
            {"max_depth", st.max_depth},
            {"rule_counts", rules}};
}

std::string fmt4(double x) {
    std::ostringstream os;
    os << std::fixed << std::setprecision(4) << x;
    return os.str();
}

// Cut files pair each node with its side: `n <id> <1|2>`, 1-based ids.
mim::SideMap load_cut(const std::string& path, const mim::Graph& g) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    mim::SideMap side(static_cast<std::size_t>(g.capacity()), 0);
    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        std::istringstream ls(line);
        std::string tag;
        if (!(ls >> tag) || tag == "c" || tag == "b") continue;
        if (tag != "n") throw mim::ParseError(line_no, "unrecognised cut line tag `" + tag + "`");
        int id = 0, s = 0;
        if (!(ls >> id >> s) || id < 1 || id > g.capacity() || (s != 1 && s != 2))
            throw mim::ParseError(line_no, "malformed side line (want `n <id> <1|2>`)");
        side[static_cast<std::size_t>(id - 1)] = static_cast<std::int8_t>(s);
    }
    for (int v : g.live_nodes())
        if (side[static_cast<std::size_t>(v)] == 0)
            throw std::runtime_error("cut file misses a side for node " + std::to_string(v + 1));
    return side;
}

void print_alternative(const mim::Alternative& alt) {
    std::cout << "  alternative: delete {";
    for (std::size_t i = 0; i < alt.del.size(); ++i)
        std::cout << (i ? "," : "") << alt.del[i] + 1;
    std::cout << "}";
    if (!alt.add_to_s.empty()) {
        std::cout << " add";
        for (const mim::Edge& e : alt.add_to_s) std::cout << " " << e.u + 1 << "-" << e.v + 1;
    }
    std::cout << "\n";
}

int cmd_rules(const std::string& file, const std::string& cutfile) {
    mim::Graph g = load_graph(file);
    mim::SolverState st{g, {}, {}, load_cut(cutfile, g)};
    for (const mim::Edge& e : g.edges())
        if (st.side[e.u] != st.side[e.v]) st.b.insert(e);

    auto comps = g.components();
    std::vector<char> comp_has_b(comps.size(), false);
    for (std::size_t i = 0; i < comps.size(); ++i)
        for (const mim::Edge& e : st.b)
            if (std::binary_search(comps[i].begin(), comps[i].end(), e.u)) comp_has_b[i] = true;

    for (std::size_t i = 0; i < comps.size(); ++i) {
        if (comp_has_b[i]) continue;
        bool deg3 = false;
        for (int v : comps[i]) deg3 |= g.degree(v) == 3;
        if (!deg3) {
            auto s = mim::apply_s1(g, comps[i]);
            std::cout << "match S1: component of " << comps[i].size() << " nodes, " << s.size()
                      << " edges into S\n";
            return 0;
        }
    }
    for (std::size_t i = 0; i < comps.size(); ++i) {
        if (comp_has_b[i]) continue;
        int k = 0;
        for (int v : comps[i]) k += g.degree(v) == 3;
        if (k >= 1 && k <= 12) {
            auto s = mim::solve_small_s2(g, comps[i], 12);
            std::cout << "match S2: component with " << k << " degree-3 nodes, " << s.size()
                      << " edges into S\n";
            return 0;
        }
    }
    if (auto m3 = mim::find_s3(g)) {
        std::cout << "match S3: d=" << m3->d + 1 << " D={";
        for (std::size_t i = 0; i < m3->d_set.size(); ++i)
            std::cout << (i ? "," : "") << m3->d_set[i] + 1;
        std::cout << "} C={";
        for (std::size_t i = 0; i < m3->c_set.size(); ++i)
            std::cout << (i ? "," : "") << m3->c_set[i] + 1;
        std::cout << "} chosen";
        for (const mim::Edge& e : m3->chosen) std::cout << " " << e.u + 1 << "-" << e.v + 1;
        std::cout << "\n";
        return 0;
    }
    {
        mim::SolverState copy = st;
        if (mim::apply_s4(copy)) {
            std::cout << "match S4: moved a degree-1 node across the cut (|B| " << st.b.size()
                      << " -> " << copy.b.size() << ")\n";
            return 0;
        }
    }
    if (st.b.empty()) {
        std::cout << "no rule matches: B is empty and no simplification applies\n";
        return 0;
    }
    mim::RuleMatch m = mim::match_branching(st);
    std::cout << "match " << mim::rule_name(m.rule) << ": anchor";
    for (int v : m.anchor) std::cout << " " << v + 1;
    std::cout << " (" << m.alternatives.size() << " alternatives)\n";
    for (const mim::Alternative& alt : m.alternatives) print_alternative(alt);
    return 0;
}

int cmd_table(std::vector<double> s_values, bool csv) {
    auto rows = mim::branching_factor_table(s_values);
    const auto& pub_s = mim::published_s_values();
    const auto& printed = mim::published_table_values();
    auto published_col = [&](double s) -> int {
        for (std::size_t i = 0; i < pub_s.size(); ++i)
            if (std::abs(pub_s[i] - s) < 1e-12) return static_cast<int>(i);
        return -1;
    };
    if (csv) {
        std::cout << "rule,formula";
        for (double s : s_values) std::cout << ",s=" << s;
        std::cout << "\n";
        for (const auto& row : rows) {
            std::cout << row.rule << "," << row.formula;
            for (double v : row.uprounded) std::cout << "," << fmt4(v);
            std::cout << "\n";
        }
    } else {
        std::cout << std::left << std::setw(18) << "Rule" << std::setw(26) << "Formula";
        for (double s : s_values) std::cout << std::right << std::setw(10) << ("s=" + fmt4(s));
        std::cout << "\n";
        for (std::size_t r = 0; r < rows.size(); ++r) {
            std::cout << std::left << std::setw(18) << rows[r].rule << std::setw(26)
                      << rows[r].formula;
            for (std::size_t i = 0; i < s_values.size(); ++i) {
                int col = published_col(s_values[i]);
                bool flag = col >= 0 && std::abs(printed[r][static_cast<std::size_t>(col)] -
                                                 rows[r].uprounded[i]) > 1e-9;
                std::cout << std::right << std::setw(9) << fmt4(rows[r].uprounded[i])
                          << (flag ? "*" : " ");
            }
            std::cout << "\n";
        }
    }
    bool any_flag = false;
    for (const auto& mm : mim::table_mismatches()) {
        for (double s : s_values)
            if (std::abs(s - mm.s) < 1e-12) {
                if (!any_flag) std::cout << "# published-value mismatches (presumed misprints):\n";
                any_flag = true;
                std::cout << "#   row " << rows[static_cast<std::size_t>(mm.row)].formula << " at s="
                          << mm.s << ": printed " << fmt4(mm.printed) << ", recomputed "
                          << fmt4(mm.computed) << "\n";
            }
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact maximum induced matching on subcubic graphs"};
    app.require_subcommand(1);

    // solve
    std::string file;
    int kappa = 12;
    unsigned seed = 1;
    bool stats_flag = false, json_flag = false;
    auto* solve = app.add_subcommand("solve", "run the branch-and-bound solver");
    solve->add_option("file", file)->required();
    solve->add_option("--kappa", kappa, "S2 threshold on degree-3 nodes")->check(CLI::Range(3, 20));
    solve->add_option("--seed", seed, "bisection seed");
    solve->add_flag("--stats", stats_flag, "print search statistics as # comments");
    solve->add_flag("--json", json_flag, "print search statistics as JSON");

    // oracle
    auto* oracle = app.add_subcommand("oracle", "brute-force reference solver (m <= 30)");
    oracle->add_option("file", file)->required();

    // baseline
    auto* baseline = app.add_subcommand("baseline", "reduction to maximum independent set");
    baseline->add_option("file", file)->required();
    baseline->add_flag("--stats", stats_flag);

    // bisect
    auto* bisect = app.add_subcommand("bisect", "balanced bisection cut of the degree-3 nodes");
    bisect->add_option("file", file)->required();
    bisect->add_option("--seed", seed);

    // rules
    std::string cutfile;
    auto* rules = app.add_subcommand("rules", "show the first matching rule for a state");
    rules->add_option("file", file)->required();
    rules->add_option("--cut", cutfile, "cut file as written by `bisect`")->required();

    // tau
    std::vector<double> ts;
    bool csv_flag = false;
    auto* tau_cmd = app.add_subcommand("tau", "branching factor of a branching vector");
    tau_cmd->add_option("t", ts, "measure decrements (>= 2 values)")->required()->expected(-2);
    tau_cmd->add_flag("--csv", csv_flag);

    // table
    std::string s_list = "0.6,0.636,0.7";
    auto* table = app.add_subcommand("table", "branching-factor table of the runtime analysis");
    table->add_option("--s", s_list, "comma-separated weight parameters");
    table->add_flag("--csv", csv_flag);

    // gen
    int gen_n = 0;
    double p3 = 0.7;
    std::string out_path;
    auto* gen = app.add_subcommand("gen", "generate a random connected subcubic instance");
    gen->add_option("n", gen_n)->required()->check(CLI::PositiveNumber);
    gen->add_option("--p3", p3, "target fraction of degree-3 nodes")->check(CLI::Range(0.0, 1.0));
    gen->add_option("--seed", seed);
    gen->add_option("-o,--out", out_path, "output file (default stdout)");

    // bench
    std::string sizes_list = "20,30,40,50,60";
    int trials = 10;
    std::string csv_path;
    bool bench_baseline = false;
    double bench_p3 = -1.0;
    auto* bench = app.add_subcommand("bench", "random benchmark with oracle cross-check");
    bench->add_option("--sizes", sizes_list, "comma-separated instance sizes");
    bench->add_option("--trials", trials)->check(CLI::PositiveNumber);
    bench->add_option("--seed", seed);
    bench->add_option("--csv", csv_path, "write rows to this CSV file");
    bench->add_option("--p3", bench_p3, "fixed degree-3 fraction (default: rotate)");
    bench->add_option("--kappa", kappa)->check(CLI::Range(3, 20));
    bench->add_flag("--baseline", bench_baseline, "also run the reduction baseline");

    CLI11_PARSE(app, argc, argv);

    try {
        if (*solve) {
            mim::Graph g = load_graph(file);
            mim::Config cfg;
            cfg.kappa = kappa;
            cfg.seed = seed;
            auto [s, st] = mim::algo_mim(g, cfg);
            if (!mim::verify_solution(g, s)) throw std::logic_error("output failed verification");
            print_solution(s);
            if (json_flag)
                std::cout << stats_json(st).dump() << "\n";
            else if (stats_flag)
                print_stats_comments(st);
        } else if (*oracle) {
            mim::Graph g = load_graph(file);
            mim::OracleResult res = mim::brute_force_mim(g);
            print_solution(res.witness);
            std::cout << "# explored " << res.explored << "\n";
        } else if (*baseline) {
            mim::Graph g = load_graph(file);
            mim::EdgeSet s = mim::cameron_mim(g);
            print_solution(s);
            if (stats_flag) {
                mim::ReducedGraph rg = mim::build_l_g2(g);
                int maxdeg = 0;
                for (const auto& nb : rg.adj) maxdeg = std::max(maxdeg, static_cast<int>(nb.size()));
                std::cout << "# reduction_nodes " << rg.n() << "\n";
                std::cout << "# reduction_max_degree " << maxdeg << "\n";
            }
        } else if (*bisect) {
            mim::Graph g = load_graph(file);
            mim::Cut cut = mim::compute_cut(g, seed);
            int nodes[3] = {0, 0, 0}, deg3[3] = {0, 0, 0};
            for (int v : g.live_nodes()) {
                ++nodes[cut.side[static_cast<std::size_t>(v)]];
                if (g.degree(v) == 3) ++deg3[cut.side[static_cast<std::size_t>(v)]];
            }
            std::cout << "c side sizes " << nodes[1] << " " << nodes[2] << "\n";
            std::cout << "c degree-3 balance " << deg3[1] << " " << deg3[2] << "\n";
            std::cout << "c cut size " << cut.b.size() << "\n";
            for (int v : g.live_nodes())
                std::cout << "n " << v + 1 << " " << int(cut.side[static_cast<std::size_t>(v)]) << "\n";
            for (const mim::Edge& e : cut.b) std::cout << "b " << e.u + 1 << " " << e.v + 1 << "\n";
        } else if (*rules) {
            return cmd_rules(file, cutfile);
        } else if (*tau_cmd) {
            double b = mim::tau(ts);
            if (csv_flag) {
                std::cout << "tau,uprounded\n" << std::setprecision(12) << b << "," << fmt4(mim::upround4(b)) << "\n";
            } else {
                std::cout << "tau = " << std::setprecision(12) << b << " (uprounded " << fmt4(mim::upround4(b))
                          << ")\n";
            }
        } else if (*table) {
            std::vector<double> svals;
            std::stringstream ss(s_list);
            std::string item;
            while (std::getline(ss, item, ',')) svals.push_back(std::stod(item));
            return cmd_table(svals, csv_flag);
        } else if (*gen) {
            mim::Graph g = mim::random_subcubic(gen_n, p3, seed);
            std::ostringstream comment;
            comment << "random subcubic n=" << gen_n << " p3=" << p3 << " seed=" << seed
                    << " deg3=" << g.count_degree3();
            if (out_path.empty()) {
                mim::write_graph(std::cout, g, comment.str());
            } else {
                std::ofstream out(out_path);
                if (!out) throw std::runtime_error("cannot write " + out_path);
                mim::write_graph(out, g, comment.str());
            }
        } else if (*bench) {
            mim::BenchOptions opt;
            std::stringstream ss(sizes_list);
            std::string item;
            while (std::getline(ss, item, ',')) opt.sizes.push_back(std::stoi(item));
            opt.trials = trials;
            opt.seed = seed;
            opt.p3 = bench_p3;
            opt.run_baseline = bench_baseline;
            opt.kappa = kappa;
            auto rows = mim::run_bench(opt);
            if (!csv_path.empty()) {
                std::ofstream out(csv_path);
                if (!out) throw std::runtime_error("cannot write " + csv_path);
                mim::write_bench_csv(out, rows);
            } else {
                mim::write_bench_csv(std::cout, rows);
            }
            int failures = 0;
            for (const auto& r : rows)
                if (!r.note.empty()) {
                    ++failures;
                    std::cerr << "row " << r.instance << ": " << r.note << "\n";
                }
            if (rows.size() >= 2) {
                double slope = mim::fit_log_leaves_slope(rows);
                std::cerr << "# ln(leaves) slope " << slope << " (growth " << std::exp(slope)
                          << "^n)\n";
            }
            if (failures > 0) return 1;
        }
    } catch (const std::exception& ex) {
        std::cerr << "error: " << ex.what() << "\n";
        return 1;
    }
    return 0;
}
