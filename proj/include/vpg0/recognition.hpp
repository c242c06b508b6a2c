#pragma once

#include <deque>
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "vpg0/errors.hpp"
#include "vpg0/graph.hpp"
#include "vpg0/poset.hpp"

namespace vpg0 {

// Antisymmetric arc set covering exactly the non-edges of the recognized
// graph, i.e. a transitive orientation of its complement.
struct Orientation {
    std::vector<std::pair<int, int>> arcs;  // (u, v) meaning u -> v

    bool has(int u, int v) const {
        for (auto [a, b] : arcs)
            if (a == u && b == v) return true;
        return false;
    }
};

// Triple x <_s y <_s z with xz an edge but xy, yz non-edges.
struct UmbrellaWitness {
    int x, y, z;
};

// Triple u <_s v <_s w joined by a u-w path avoiding N[v].
struct ForbiddenTripleWitness {
    int u, v, w;
    std::vector<int> path;  // from u to w inclusive
};

namespace detail {

// Orientation forcing on the graph h: repeatedly seed the lexicographically
// smallest undecided edge and close its implication class under the rule
// that two edges sharing an endpoint whose far ends are non-adjacent (in
// the remaining graph) must agree at the shared endpoint. Decided classes
// are removed from the remaining graph before the next seed. Fails exactly
// when some class forces an edge both ways.
inline std::optional<std::vector<std::pair<int, int>>> forceOrientation(const Graph& h) {
    const int n = h.size();
    std::vector<std::vector<char>> remaining(n, std::vector<char>(n, 0));
    for (auto [u, v] : h.edges()) remaining[u][v] = remaining[v][u] = 1;

    std::vector<std::pair<int, int>> result;

    while (true) {
        int su = -1, sv = -1;
        for (int u = 0; u < n && su < 0; ++u)
            for (int v = u + 1; v < n; ++v)
                if (remaining[u][v]) {
                    su = u;
                    sv = v;
                    break;
                }
        if (su < 0) break;

        // dir[{u,v}] with u < v: +1 means u->v, -1 means v->u.
        std::map<std::pair<int, int>, int> dir;
        auto keyOf = [](int a, int b) { return std::make_pair(std::min(a, b), std::max(a, b)); };
        auto signOf = [](int a, int b) { return a < b ? +1 : -1; };

        std::deque<std::pair<int, int>> queue;  // arcs (a, b) meaning a->b
        dir[keyOf(su, sv)] = +1;
        queue.emplace_back(su, sv);
        bool conflict = false;

        while (!queue.empty() && !conflict) {
            auto [a, b] = queue.front();
            queue.pop_front();
            for (int c = 0; c < n && !conflict; ++c) {
                if (c == a || c == b) continue;
                // a->b forces a->c when {a,c} remains an edge and {b,c} does not.
                if (remaining[a][c] && !remaining[b][c]) {
                    auto it = dir.find(keyOf(a, c));
                    if (it == dir.end()) {
                        dir[keyOf(a, c)] = signOf(a, c);
                        queue.emplace_back(a, c);
                    } else if (it->second != signOf(a, c)) {
                        conflict = true;
                    }
                }
                // a->b forces c->b when {c,b} remains an edge and {a,c} does not.
                if (remaining[c][b] && !remaining[a][c]) {
                    auto it = dir.find(keyOf(c, b));
                    if (it == dir.end()) {
                        dir[keyOf(c, b)] = signOf(c, b);
                        queue.emplace_back(c, b);
                    } else if (it->second != signOf(c, b)) {
                        conflict = true;
                    }
                }
            }
        }
        if (conflict) return std::nullopt;

        for (const auto& [key, s] : dir) {
            remaining[key.first][key.second] = remaining[key.second][key.first] = 0;
            if (s > 0)
                result.emplace_back(key.first, key.second);
            else
                result.emplace_back(key.second, key.first);
        }
    }
    return result;
}

inline bool arcsTransitive(int n, const std::vector<std::pair<int, int>>& arcs) {
    std::vector<std::vector<char>> to(n, std::vector<char>(n, 0));
    for (auto [u, v] : arcs) to[u][v] = 1;
    for (int u = 0; u < n; ++u)
        for (int v = 0; v < n; ++v)
            if (to[u][v])
                for (int w = 0; w < n; ++w)
                    if (to[v][w] && !to[u][w]) return false;
    return true;
}

}  // namespace detail

// Transitive orientation of complement(g), or nullopt when none exists.
// Deterministic given the vertex order.
inline std::optional<Orientation> transitiveOrientation(const Graph& g) {
    Graph h = complement(g);
    auto arcs = detail::forceOrientation(h);
    if (!arcs) return std::nullopt;
    if (!detail::arcsTransitive(g.size(), *arcs)) return std::nullopt;
    return Orientation{std::move(*arcs)};
}

// Reads the orientation as a strict order: u < v iff u -> v.
inline Poset posetFromOrientation(const Graph& g, const Orientation& o) {
    const int n = g.size();
    std::vector<std::vector<char>> less(n, std::vector<char>(n, 0));
    std::vector<std::vector<char>> covered(n, std::vector<char>(n, 0));
    for (auto [u, v] : o.arcs) {
        if (u == v || !(0 <= u && u < n && 0 <= v && v < n))
            throw NotTransitiveError("orientation arc out of range");
        if (g.adjacent(u, v))
            throw NotTransitiveError("orientation arc over a graph edge " + g.label(u) + "->" +
                                     g.label(v));
        if (less[v][u]) throw NotTransitiveError("orientation not antisymmetric");
        less[u][v] = 1;
        covered[u][v] = covered[v][u] = 1;
    }
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (!g.adjacent(u, v) && !covered[u][v])
                throw NotTransitiveError("orientation misses non-edge " + g.label(u) + "," +
                                         g.label(v));
    if (!detail::arcsTransitive(n, o.arcs))
        throw NotTransitiveError("orientation violates transitivity");
    return Poset(g.labels(), std::move(less));
}

// Cocomparability ordering fabricated deterministically from the forced
// orientation, when one exists.
inline std::optional<Ordering> umbrellaFreeOrdering(const Graph& g) {
    auto o = transitiveOrientation(g);
    if (!o) return std::nullopt;
    return linearExtension(posetFromOrientation(g, *o));
}

// Scans triples in position order and returns the first umbrella, if any.
inline std::optional<UmbrellaWitness> checkUmbrellaFree(const Graph& g, const Ordering& ord) {
    const int n = g.size();
    if (ord.size() != n) throw std::invalid_argument("ordering does not cover the graph");
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            for (int k = j + 1; k < n; ++k) {
                int x = ord.seq[i], y = ord.seq[j], z = ord.seq[k];
                if (g.adjacent(x, z) && !g.adjacent(x, y) && !g.adjacent(y, z))
                    return UmbrellaWitness{x, y, z};
            }
    return std::nullopt;
}

// Per-triple breadth-first reachability in g minus N[v]; returns the
// witness with lexicographically smallest positions (i, j, k), with the
// connecting path.
inline std::optional<ForbiddenTripleWitness> findForbiddenTriple(const Graph& g,
                                                                 const Ordering& ord) {
    const int n = g.size();
    if (ord.size() != n) throw std::invalid_argument("ordering does not cover the graph");
    for (int i = 0; i + 2 < n; ++i) {
        int u = ord.seq[i];
        for (int j = i + 1; j + 1 < n; ++j) {
            int v = ord.seq[j];
            if (u == v || g.adjacent(u, v)) continue;
            std::vector<char> blocked(n, 0);
            blocked[v] = 1;
            for (int x = 0; x < n; ++x)
                if (g.adjacent(x, v)) blocked[x] = 1;

            std::vector<int> parent(n, -2);
            std::deque<int> q{u};
            parent[u] = -1;
            while (!q.empty()) {
                int x = q.front();
                q.pop_front();
                for (int y = 0; y < n; ++y)
                    if (g.adjacent(x, y) && !blocked[y] && parent[y] == -2) {
                        parent[y] = x;
                        q.push_back(y);
                    }
            }
            for (int k = j + 1; k < n; ++k) {
                int w = ord.seq[k];
                if (blocked[w] || parent[w] == -2) continue;
                std::vector<int> path;
                for (int x = w; x != -1; x = parent[x]) path.push_back(x);
                std::reverse(path.begin(), path.end());
                return ForbiddenTripleWitness{u, v, w, std::move(path)};
            }
        }
    }
    return std::nullopt;
}

}  // namespace vpg0
