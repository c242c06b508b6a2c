#pragma once

#include <array>
#include <deque>
#include <functional>
#include <optional>
#include <utility>
#include <variant>
#include <vector>

#include "vpg0/graph.hpp"
#include "vpg0/poset.hpp"
#include "vpg0/recognition.hpp"

namespace vpg0 {

// Equivalence classes of the diamond relation: vertices joined by a path of
// diamond diagonals. Keeps the diagonal edge set so connecting paths can be
// recovered for witnesses.
class DiamondClasses {
public:
    DiamondClasses(int n, std::vector<std::pair<int, int>> diagonals)
        : parent_(n), diagonals_(std::move(diagonals)) {
        for (int i = 0; i < n; ++i) parent_[i] = i;
        for (auto [u, v] : diagonals_) unite(u, v);
    }

    int find(int v) const {
        while (parent_[v] != v) v = parent_[v];
        return v;
    }

    bool sameClass(int u, int v) const { return find(u) == find(v); }

    const std::vector<std::pair<int, int>>& diagonals() const { return diagonals_; }

    std::vector<std::vector<int>> classes() const {
        const int n = (int)parent_.size();
        std::vector<std::vector<int>> byRoot(n);
        for (int v = 0; v < n; ++v) byRoot[find(v)].push_back(v);
        std::vector<std::vector<int>> out;
        for (auto& c : byRoot)
            if (!c.empty()) out.push_back(std::move(c));
        return out;
    }

    // Shortest u-v path over diagonal edges, as a list of diagonal edges.
    // Empty when u, v are not diamond related (or equal).
    std::vector<std::pair<int, int>> diagonalPath(int u, int v) const {
        const int n = (int)parent_.size();
        std::vector<std::vector<int>> adj(n);
        for (auto [a, b] : diagonals_) {
            adj[a].push_back(b);
            adj[b].push_back(a);
        }
        std::vector<int> from(n, -2);
        std::deque<int> q{u};
        from[u] = -1;
        while (!q.empty()) {
            int x = q.front();
            q.pop_front();
            if (x == v) break;
            for (int y : adj[x])
                if (from[y] == -2) {
                    from[y] = x;
                    q.push_back(y);
                }
        }
        std::vector<std::pair<int, int>> path;
        if (from[v] == -2) return path;
        for (int x = v; from[x] != -1; x = from[x]) path.emplace_back(from[x], x);
        std::reverse(path.begin(), path.end());
        return path;
    }

private:
    void unite(int a, int b) {
        a = find(a);
        b = find(b);
        if (a != b) parent_[std::max(a, b)] = std::min(a, b);
    }

    mutable std::vector<int> parent_;
    std::vector<std::pair<int, int>> diagonals_;
};

inline DiamondClasses diamondClasses(const Graph& g) {
    return DiamondClasses(g.size(), diamondDiagonalEdges(g));
}

// Witness for the C4 condition: a C4 with two diamond-related vertices, plus the
// connecting diagonal path.
struct C4PairWitness {
    std::array<int, 4> c4;
    int u, v;
    std::vector<std::pair<int, int>> diagonalPath;
};

struct CoC6Witness {
    std::array<int, 6> six;
};

struct NotCocomparabilityWitness {};

using B0Witness = std::variant<C4PairWitness, CoC6Witness, NotCocomparabilityWitness>;

// Checks the C4 condition: no two vertices of an induced C4 are diamond
// related. Within each C4 the two non-adjacent pairs are checked first,
// then the four edges, so the canonical witness pairs up opposite corners.
inline std::optional<C4PairWitness> findDiamondRelatedC4Pair(const Graph& g) {
    DiamondClasses dc = diamondClasses(g);
    for (const auto& c4 : inducedC4List(g)) {
        std::vector<std::pair<int, int>> pairs;
        for (int i = 0; i < 4; ++i)
            for (int j = i + 1; j < 4; ++j)
                if (!g.adjacent(c4[i], c4[j])) pairs.emplace_back(c4[i], c4[j]);
        for (int i = 0; i < 4; ++i)
            for (int j = i + 1; j < 4; ++j)
                if (g.adjacent(c4[i], c4[j])) pairs.emplace_back(c4[i], c4[j]);
        for (auto [u, v] : pairs)
            if (dc.sameClass(u, v)) return C4PairWitness{c4, u, v, dc.diagonalPath(u, v)};
    }
    return std::nullopt;
}

// Brute force over 6-subsets for an induced triangular prism: exactly 9
// edges, 3-regular, and two vertex-disjoint triangles. Partial induced
// degrees above 3 prune the scan.
inline std::optional<std::array<int, 6>> findInducedCoC6(const Graph& g) {
    const int n = g.size();
    if (n < 6) return std::nullopt;
    std::vector<int> pick;
    std::array<int, 8> deg{};

    auto isPrism = [&](const std::vector<int>& vs) {
        int edges = 0;
        for (int i = 0; i < 6; ++i)
            for (int j = i + 1; j < 6; ++j) edges += g.adjacent(vs[i], vs[j]);
        if (edges != 9) return false;
        for (int i = 0; i < 6; ++i) {
            int d = 0;
            for (int j = 0; j < 6; ++j) d += g.adjacent(vs[i], vs[j]);
            if (d != 3) return false;
        }
        // Two vertex-disjoint triangles through vs[0].
        for (int i = 1; i < 6; ++i)
            for (int j = i + 1; j < 6; ++j) {
                if (!(g.adjacent(vs[0], vs[i]) && g.adjacent(vs[0], vs[j]) &&
                      g.adjacent(vs[i], vs[j])))
                    continue;
                std::vector<int> rest;
                for (int k = 1; k < 6; ++k)
                    if (k != i && k != j) rest.push_back(vs[k]);
                if (g.adjacent(rest[0], rest[1]) && g.adjacent(rest[0], rest[2]) &&
                    g.adjacent(rest[1], rest[2]))
                    return true;
            }
        return false;
    };

    std::optional<std::array<int, 6>> found;
    std::function<bool(int)> rec = [&](int next) -> bool {
        if ((int)pick.size() == 6) {
            if (isPrism(pick)) {
                std::array<int, 6> a;
                std::copy(pick.begin(), pick.end(), a.begin());
                found = a;
                return true;
            }
            return false;
        }
        for (int v = next; v < n; ++v) {
            if (g.degree(v) < 3) continue;
            bool ok = true;
            int dv = 0;
            for (int i = 0; i < (int)pick.size(); ++i) {
                int d = g.adjacent(pick[i], v);
                dv += d;
                deg[i] += d;
                if (deg[i] > 3) ok = false;
            }
            if (dv > 3) ok = false;
            if (ok) {
                pick.push_back(v);
                deg[pick.size() - 1] = dv;
                if (rec(v + 1)) return true;
                pick.pop_back();
            }
            for (int i = 0; i < (int)pick.size(); ++i) deg[i] -= g.adjacent(pick[i], v);
        }
        return false;
    };
    rec(0);
    return found;
}

enum class Verdict { Yes, No, NotCocomparability };

struct Classification {
    Verdict verdict;
    std::optional<B0Witness> witness;
    std::optional<Ordering> sigma;
    std::optional<Poset> poset;
};

// Two-condition decision: cocomparability first, then the C4 condition, then
// the prism condition. On yes, carries a deterministically fabricated poset and
// linear extension for the drawing stages.
inline Classification classifyB0(const Graph& g) {
    auto orientation = transitiveOrientation(g);
    if (!orientation)
        return Classification{Verdict::NotCocomparability, NotCocomparabilityWitness{},
                              std::nullopt, std::nullopt};
    Poset p = posetFromOrientation(g, *orientation);
    Ordering sigma = linearExtension(p);

    if (auto w = findDiamondRelatedC4Pair(g))
        return Classification{Verdict::No, B0Witness{*w}, std::move(sigma), std::move(p)};
    if (auto six = findInducedCoC6(g))
        return Classification{Verdict::No, B0Witness{CoC6Witness{*six}}, std::move(sigma),
                              std::move(p)};
    return Classification{Verdict::Yes, std::nullopt, std::move(sigma), std::move(p)};
}

}  // namespace vpg0
