#pragma once

#include <algorithm>
#include <array>
#include <cassert>
#include <cstdint>
#include <istream>
#include <ostream>
#include <span>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace mim {

// Undirected edge with canonical endpoint order (u < v).
struct Edge {
    int u;
    int v;

    Edge(int a, int b) : u(std::min(a, b)), v(std::max(a, b)) {}

    friend bool operator==(const Edge&, const Edge&) = default;
    friend auto operator<=>(const Edge&, const Edge&) = default;
};

// Sorted set of canonical edges; deterministic iteration order.
class EdgeSet {
public:
    EdgeSet() = default;
    EdgeSet(std::initializer_list<Edge> es) {
        for (const Edge& e : es) insert(e);
    }

    bool contains(Edge e) const {
        return std::binary_search(edges_.begin(), edges_.end(), e);
    }

    // Returns false if the edge was already present.
    bool insert(Edge e) {
        auto it = std::lower_bound(edges_.begin(), edges_.end(), e);
        if (it != edges_.end() && *it == e) return false;
        edges_.insert(it, e);
        return true;
    }

    bool erase(Edge e) {
        auto it = std::lower_bound(edges_.begin(), edges_.end(), e);
        if (it == edges_.end() || *it != e) return false;
        edges_.erase(it);
        return true;
    }

    template <typename Pred>
    void erase_if(Pred&& pred) {
        edges_.erase(std::remove_if(edges_.begin(), edges_.end(), pred), edges_.end());
    }

    void merge(const EdgeSet& other) {
        for (const Edge& e : other) insert(e);
    }

    std::size_t size() const { return edges_.size(); }
    bool empty() const { return edges_.empty(); }
    void clear() { edges_.clear(); }

    std::vector<Edge>::const_iterator begin() const { return edges_.begin(); }
    std::vector<Edge>::const_iterator end() const { return edges_.end(); }
    const std::vector<Edge>& as_vector() const { return edges_; }

    friend bool operator==(const EdgeSet&, const EdgeSet&) = default;

private:
    std::vector<Edge> edges_;
};

// Simple undirected graph, maximum degree 3. Node ids are stable: removing
// a node never renumbers the others, so edge sets built against one graph
// stay meaningful in any graph derived from it by deletions. The degree cap
// allows flat fixed-width adjacency rows, which keeps the per-branch graph
// copies of the solver cheap.
class Graph {
public:
    Graph() = default;
    explicit Graph(int n) : adj_(n, {-1, -1, -1}), deg_(n, 0), alive_(n, true), live_(n) {}

    int capacity() const { return static_cast<int>(adj_.size()); }
    int n() const { return live_; }
    int m() const { return m_; }

    bool alive(int v) const { return v >= 0 && v < capacity() && alive_[v]; }

    void require_alive(int v) const {
        if (!alive(v)) throw std::invalid_argument("unknown node id " + std::to_string(v));
    }

    int degree(int v) const {
        require_alive(v);
        return deg_[v];
    }

    // Sorted list of live neighbours.
    std::span<const int> neighbors(int v) const {
        require_alive(v);
        return {adj_[v].data(), static_cast<std::size_t>(deg_[v])};
    }

    bool has_edge(int u, int v) const {
        if (!alive(u) || !alive(v)) return false;
        for (int i = 0; i < deg_[u]; ++i)
            if (adj_[u][i] == v) return true;
        return false;
    }

    bool has_edge(Edge e) const { return has_edge(e.u, e.v); }

    void add_edge(int u, int v) {
        require_alive(u);
        require_alive(v);
        if (u == v) throw std::invalid_argument("self-loop at node " + std::to_string(v));
        if (has_edge(u, v))
            throw std::invalid_argument("duplicate edge " + std::to_string(u) + "-" + std::to_string(v));
        if (deg_[u] >= 3 || deg_[v] >= 3)
            throw std::invalid_argument("degree overflow at edge " + std::to_string(u) + "-" +
                                        std::to_string(v));
        insert_sorted(u, v);
        insert_sorted(v, u);
        ++m_;
    }

    std::vector<int> live_nodes() const {
        std::vector<int> out;
        out.reserve(live_);
        for (int v = 0; v < capacity(); ++v)
            if (alive_[v]) out.push_back(v);
        return out;
    }

    // Canonical edge list: (u,v) with u < v, lexicographically ascending.
    std::vector<Edge> edges() const {
        std::vector<Edge> out;
        out.reserve(m_);
        for (int v = 0; v < capacity(); ++v) {
            if (!alive_[v]) continue;
            for (int w : neighbors(v))
                if (v < w) out.emplace_back(v, w);
        }
        return out;
    }

    void remove_node(int v) {
        require_alive(v);
        for (int i = 0; i < deg_[v]; ++i) erase_directed(adj_[v][i], v);
        m_ -= deg_[v];
        deg_[v] = 0;
        alive_[v] = false;
        --live_;
    }

    template <typename Container>
    void remove_nodes(const Container& dead) {
        for (int v : dead) remove_node(v);
    }

    // Value-semantics removal: the original graph is untouched.
    template <typename Container>
    Graph without(const Container& dead) const {
        Graph g = *this;
        g.remove_nodes(dead);
        return g;
    }

    // Keeps exactly the given nodes; everything else is dropped.
    Graph induced(const std::vector<int>& keep) const {
        std::vector<char> mark(capacity(), false);
        for (int v : keep) {
            require_alive(v);
            mark[v] = true;
        }
        std::vector<int> dead;
        for (int v = 0; v < capacity(); ++v)
            if (alive_[v] && !mark[v]) dead.push_back(v);
        return without(dead);
    }

    // Maximal connected node sets, each sorted, ordered by smallest member.
    std::vector<std::vector<int>> components() const {
        std::vector<std::vector<int>> comps;
        std::vector<char> seen(capacity(), false);
        std::vector<int> stack;
        for (int s = 0; s < capacity(); ++s) {
            if (!alive_[s] || seen[s]) continue;
            std::vector<int> comp;
            stack.push_back(s);
            seen[s] = true;
            while (!stack.empty()) {
                int v = stack.back();
                stack.pop_back();
                comp.push_back(v);
                for (int i = 0; i < deg_[v]; ++i) {
                    int w = adj_[v][i];
                    if (!seen[w]) {
                        seen[w] = true;
                        stack.push_back(w);
                    }
                }
            }
            std::sort(comp.begin(), comp.end());
            comps.push_back(std::move(comp));
        }
        return comps;
    }

    bool connected() const {
        if (live_ <= 1) return true;
        return components().size() == 1;
    }

    int count_degree3() const {
        int k = 0;
        for (int v = 0; v < capacity(); ++v)
            if (alive_[v] && deg_[v] == 3) ++k;
        return k;
    }

private:
    void insert_sorted(int u, int x) {
        auto& row = adj_[u];
        int i = deg_[u];
        while (i > 0 && row[i - 1] > x) {
            row[i] = row[i - 1];
            --i;
        }
        row[i] = x;
        ++deg_[u];
    }

    void erase_directed(int u, int x) {
        auto& row = adj_[u];
        int i = 0;
        while (row[i] != x) ++i;
        for (; i + 1 < deg_[u]; ++i) row[i] = row[i + 1];
        --deg_[u];
    }

    std::vector<std::array<int, 3>> adj_;
    std::vector<std::int8_t> deg_;
    std::vector<char> alive_;
    int live_ = 0;
    int m_ = 0;
};

// An induced matching: edges pairwise non-adjacent, and no graph edge joins
// endpoints of two distinct matching edges. Equivalently every vertex of the
// subgraph induced by the endpoint set has degree exactly 1.
inline bool is_induced_matching(const Graph& g, const EdgeSet& s) {
    std::vector<Edge> es(s.begin(), s.end());
    for (std::size_t i = 0; i < es.size(); ++i) {
        if (!g.has_edge(es[i])) return false;
        for (std::size_t j = i + 1; j < es.size(); ++j) {
            int ends_i[2] = {es[i].u, es[i].v};
            int ends_j[2] = {es[j].u, es[j].v};
            for (int a : ends_i)
                for (int b : ends_j)
                    if (a == b || g.has_edge(a, b)) return false;
        }
    }
    return true;
}

struct ParseError : std::runtime_error {
    int line;
    ParseError(int line_no, const std::string& what)
        : std::runtime_error("line " + std::to_string(line_no) + ": " + what), line(line_no) {}
};

// DIMACS-like format: `c` comments, one `p edge <n> <m>` header, then
// `e <u> <v>` with 1-based ids. Node i of the file becomes id i-1.
inline Graph parse_graph(std::istream& in) {
    Graph g;
    bool have_header = false;
    long declared_m = 0;
    long seen_m = 0;
    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        while (!line.empty() && (line.back() == '\r' || line.back() == ' ' || line.back() == '\t'))
            line.pop_back();
        if (line.empty()) continue;
        std::istringstream ls(line);
        std::string tag;
        ls >> tag;
        if (tag == "c") continue;
        if (tag == "p") {
            if (have_header) throw ParseError(line_no, "duplicate problem line");
            std::string kind;
            long n = -1, m = -1;
            if (!(ls >> kind >> n >> m) || kind != "edge" || n < 0 || m < 0)
                throw ParseError(line_no, "malformed problem line (want `p edge <n> <m>`)");
            std::string rest;
            if (ls >> rest) throw ParseError(line_no, "trailing tokens on problem line");
            g = Graph(static_cast<int>(n));
            declared_m = m;
            have_header = true;
        } else if (tag == "e") {
            if (!have_header) throw ParseError(line_no, "edge before problem line");
            long u = 0, v = 0;
            if (!(ls >> u >> v)) throw ParseError(line_no, "malformed edge line");
            std::string rest;
            if (ls >> rest) throw ParseError(line_no, "trailing tokens on edge line");
            if (u < 1 || u > g.capacity() || v < 1 || v > g.capacity())
                throw ParseError(line_no, "node id out of range");
            if (u == v) throw ParseError(line_no, "self-loop at node " + std::to_string(u));
            int iu = static_cast<int>(u) - 1, iv = static_cast<int>(v) - 1;
            if (g.has_edge(iu, iv))
                throw ParseError(line_no,
                                 "duplicate edge " + std::to_string(u) + " " + std::to_string(v));
            if (g.degree(iu) >= 3 || g.degree(iv) >= 3)
                throw ParseError(line_no, "degree overflow at node " +
                                              std::to_string(g.degree(iu) >= 3 ? u : v));
            g.add_edge(iu, iv);
            ++seen_m;
        } else {
            throw ParseError(line_no, "unrecognised line tag `" + tag + "`");
        }
    }
    if (!have_header) throw ParseError(line_no, "missing problem line");
    if (seen_m != declared_m)
        throw ParseError(line_no, "edge count mismatch: header says " + std::to_string(declared_m) +
                                      ", file has " + std::to_string(seen_m));
    return g;
}

inline Graph parse_graph(const std::string& text) {
    std::istringstream in(text);
    return parse_graph(in);
}

inline void write_graph(std::ostream& out, const Graph& g, const std::string& comment = "") {
    if (!comment.empty()) out << "c " << comment << "\n";
    out << "p edge " << g.capacity() << " " << g.m() << "\n";
    for (const Edge& e : g.edges()) out << "e " << e.u + 1 << " " << e.v + 1 << "\n";
}

}  // namespace mim
