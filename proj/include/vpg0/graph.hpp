#pragma once

#include <algorithm>
#include <array>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

namespace vpg0 {

// Finite simple undirected graph with stable, unique vertex labels.
// Vertices are addressed by index into the label list; labels only matter
// at the I/O boundary.
class Graph {
public:
    Graph() = default;

    explicit Graph(std::vector<std::string> labels) : labels_(std::move(labels)) {
        for (int i = 0; i < (int)labels_.size(); ++i) {
            if (!index_.emplace(labels_[i], i).second)
                throw std::invalid_argument("duplicate vertex label: " + labels_[i]);
        }
        adj_.assign(labels_.size(), std::vector<char>(labels_.size(), 0));
    }

    int size() const { return (int)labels_.size(); }
    const std::vector<std::string>& labels() const { return labels_; }
    const std::string& label(int v) const { return labels_.at(v); }

    bool hasLabel(const std::string& l) const { return index_.count(l) > 0; }

    int indexOf(const std::string& l) const {
        auto it = index_.find(l);
        if (it == index_.end()) throw std::invalid_argument("unknown vertex label: " + l);
        return it->second;
    }

    void addEdge(int u, int v) {
        checkVertex(u);
        checkVertex(v);
        if (u == v) throw std::invalid_argument("self-loop on vertex " + labels_[u]);
        adj_[u][v] = adj_[v][u] = 1;
    }

    void addEdge(const std::string& u, const std::string& v) {
        addEdge(indexOf(u), indexOf(v));
    }

    bool adjacent(int u, int v) const { return u != v && adj_[u][v] != 0; }

    bool adjacent(const std::string& u, const std::string& v) const {
        return adjacent(indexOf(u), indexOf(v));
    }

    int degree(int v) const {
        int d = 0;
        for (int u = 0; u < size(); ++u) d += adj_[v][u];
        return d;
    }

    std::vector<int> neighbors(int v) const {
        std::vector<int> out;
        for (int u = 0; u < size(); ++u)
            if (adj_[v][u]) out.push_back(u);
        return out;
    }

    int edgeCount() const {
        int m = 0;
        for (int u = 0; u < size(); ++u)
            for (int v = u + 1; v < size(); ++v) m += adj_[u][v];
        return m;
    }

    // Edges as index pairs (u, v) with u < v, in lexicographic order.
    std::vector<std::pair<int, int>> edges() const {
        std::vector<std::pair<int, int>> out;
        for (int u = 0; u < size(); ++u)
            for (int v = u + 1; v < size(); ++v)
                if (adj_[u][v]) out.emplace_back(u, v);
        return out;
    }

    friend bool operator==(const Graph& a, const Graph& b) {
        return a.labels_ == b.labels_ && a.adj_ == b.adj_;
    }

private:
    void checkVertex(int v) const {
        if (v < 0 || v >= size()) throw std::out_of_range("vertex index out of range");
    }

    std::vector<std::string> labels_;
    std::unordered_map<std::string, int> index_;
    std::vector<std::vector<char>> adj_;
};

inline Graph complement(const Graph& g) {
    Graph h(g.labels());
    for (int u = 0; u < g.size(); ++u)
        for (int v = u + 1; v < g.size(); ++v)
            if (!g.adjacent(u, v)) h.addEdge(u, v);
    return h;
}

// All 4-sets inducing a chordless 4-cycle, each reported once as a sorted
// index quadruple, in lexicographic order. Plain O(n^4) scan; instance
// sizes here are desk scale.
inline std::vector<std::array<int, 4>> inducedC4List(const Graph& g) {
    std::vector<std::array<int, 4>> out;
    const int n = g.size();
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b)
            for (int c = b + 1; c < n; ++c)
                for (int d = c + 1; d < n; ++d) {
                    int e = g.adjacent(a, b) + g.adjacent(a, c) + g.adjacent(a, d) +
                            g.adjacent(b, c) + g.adjacent(b, d) + g.adjacent(c, d);
                    if (e != 4) continue;
                    // A chordless 4-cycle is the unique 4-edge graph on 4
                    // vertices where every vertex has degree 2.
                    int da = g.adjacent(a, b) + g.adjacent(a, c) + g.adjacent(a, d);
                    int db = g.adjacent(a, b) + g.adjacent(b, c) + g.adjacent(b, d);
                    int dc = g.adjacent(a, c) + g.adjacent(b, c) + g.adjacent(c, d);
                    if (da == 2 && db == 2 && dc == 2) out.push_back({a, b, c, d});
                }
    return out;
}

struct Diamond {
    std::array<int, 4> vertices;   // sorted
    std::pair<int, int> diagonal;  // the edge between the two degree-3 vertices
};

// All induced diamonds (4 vertices, exactly 5 edges), each with its unique
// diagonal, in lexicographic order of the vertex set.
inline std::vector<Diamond> inducedDiamonds(const Graph& g) {
    std::vector<Diamond> out;
    const int n = g.size();
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b)
            for (int c = b + 1; c < n; ++c)
                for (int d = c + 1; d < n; ++d) {
                    std::array<int, 4> vs{a, b, c, d};
                    int e = 0;
                    std::array<int, 4> deg{0, 0, 0, 0};
                    for (int i = 0; i < 4; ++i)
                        for (int j = i + 1; j < 4; ++j)
                            if (g.adjacent(vs[i], vs[j])) {
                                ++e;
                                ++deg[i];
                                ++deg[j];
                            }
                    if (e != 5) continue;
                    std::vector<int> top;
                    for (int i = 0; i < 4; ++i)
                        if (deg[i] == 3) top.push_back(vs[i]);
                    out.push_back(Diamond{vs, {top[0], top[1]}});
                }
    return out;
}

// Edge set of all diamond diagonals, deduplicated, as sorted index pairs.
inline std::vector<std::pair<int, int>> diamondDiagonalEdges(const Graph& g) {
    std::vector<std::pair<int, int>> out;
    for (const Diamond& d : inducedDiamonds(g)) out.push_back(d.diagonal);
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

}  // namespace vpg0
