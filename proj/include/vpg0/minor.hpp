#pragma once

#include <algorithm>
#include <deque>
#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "vpg0/characterization.hpp"
#include "vpg0/errors.hpp"
#include "vpg0/graph.hpp"
#include "vpg0/poset.hpp"
#include "vpg0/recognition.hpp"

namespace vpg0 {

// Partition of V(G) into connected branch sets plus the quotient graph.
// Branch ids are dense 0..k-1, ordered by the representative's position in
// the ordering the decomposition was built against.
struct BranchDecomposition {
    std::vector<int> branchOf;                  // vertex -> branch id
    std::vector<std::vector<int>> branchSets;   // branch id -> sorted vertices
    std::vector<std::vector<char>> quotientAdj; // branch id x branch id
    std::vector<int> representative;            // branch id -> leftmost vertex

    int branchCount() const { return (int)branchSets.size(); }

    bool quotientEdge(int i, int j) const { return i != j && quotientAdj[i][j] != 0; }

    std::vector<int> quotientNeighbors(int i) const {
        std::vector<int> out;
        for (int j = 0; j < branchCount(); ++j)
            if (quotientEdge(i, j)) out.push_back(j);
        return out;
    }

    // Quotient as a Graph labeled by representative labels.
    Graph quotientGraph(const Graph& g) const {
        std::vector<std::string> labels;
        for (int r : representative) labels.push_back(g.label(r));
        Graph q(labels);
        for (int i = 0; i < branchCount(); ++i)
            for (int j = i + 1; j < branchCount(); ++j)
                if (quotientAdj[i][j]) q.addEdge(i, j);
        return q;
    }
};

namespace detail {

// Rebuilds a BranchDecomposition from raw vertex groups: ids sorted by the
// representative (ordering-leftmost vertex) position, quotient edges from
// G-edges across groups, loops dropped and parallels merged.
inline BranchDecomposition assembleDecomposition(const Graph& g,
                                                 std::vector<std::vector<int>> groups,
                                                 const Ordering& ord) {
    std::vector<std::pair<int, int>> byRep;  // (rep position, group index)
    std::vector<int> repOf(groups.size());
    for (int gi = 0; gi < (int)groups.size(); ++gi) {
        int rep = groups[gi][0];
        for (int v : groups[gi])
            if (ord.pos[v] < ord.pos[rep]) rep = v;
        repOf[gi] = rep;
        byRep.emplace_back(ord.pos[rep], gi);
    }
    std::sort(byRep.begin(), byRep.end());

    BranchDecomposition bd;
    bd.branchOf.assign(g.size(), -1);
    for (auto [posIgnored, gi] : byRep) {
        std::vector<int> vs = groups[gi];
        std::sort(vs.begin(), vs.end());
        int id = (int)bd.branchSets.size();
        for (int v : vs) bd.branchOf[v] = id;
        bd.branchSets.push_back(std::move(vs));
        bd.representative.push_back(repOf[gi]);
    }
    const int k = bd.branchCount();
    bd.quotientAdj.assign(k, std::vector<char>(k, 0));
    for (auto [u, v] : g.edges()) {
        int bu = bd.branchOf[u], bv = bd.branchOf[v];
        if (bu != bv) bd.quotientAdj[bu][bv] = bd.quotientAdj[bv][bu] = 1;
    }
    return bd;
}

inline Ordering identityOrdering(int n) {
    std::vector<int> seq(n);
    for (int i = 0; i < n; ++i) seq[i] = i;
    return Ordering::fromSequence(std::move(seq));
}

}  // namespace detail

// Branch sets are the connected components of (V, diamond diagonals).
// Representatives default to input vertex order when no ordering is given.
inline BranchDecomposition ddMinor(const Graph& g, const Ordering& ord) {
    const int n = g.size();
    std::vector<int> comp(n, -1);
    std::vector<std::vector<int>> adj(n);
    for (auto [u, v] : diamondDiagonalEdges(g)) {
        adj[u].push_back(v);
        adj[v].push_back(u);
    }
    std::vector<std::vector<int>> groups;
    for (int s = 0; s < n; ++s) {
        if (comp[s] != -1) continue;
        int id = (int)groups.size();
        groups.emplace_back();
        std::deque<int> q{s};
        comp[s] = id;
        while (!q.empty()) {
            int x = q.front();
            q.pop_front();
            groups[id].push_back(x);
            for (int y : adj[x])
                if (comp[y] == -1) {
                    comp[y] = id;
                    q.push_back(y);
                }
        }
    }
    return detail::assembleDecomposition(g, std::move(groups), ord);
}

inline BranchDecomposition ddMinor(const Graph& g) {
    return ddMinor(g, detail::identityOrdering(g.size()));
}

// Decomposition from explicit vertex groups, for validating externally
// supplied partitions. Groups must cover V(g) exactly.
inline BranchDecomposition decompositionFromGroups(const Graph& g,
                                                   const std::vector<std::vector<int>>& groups,
                                                   const Ordering& ord) {
    std::vector<char> seen(g.size(), 0);
    for (const auto& grp : groups) {
        if (grp.empty()) throw std::invalid_argument("empty branch set");
        for (int v : grp) {
            if (v < 0 || v >= g.size() || seen[v])
                throw std::invalid_argument("groups do not partition the vertex set");
            seen[v] = 1;
        }
    }
    for (int v = 0; v < g.size(); ++v)
        if (!seen[v]) throw std::invalid_argument("groups do not partition the vertex set");
    return detail::assembleDecomposition(g, groups, ord);
}

// Greedy reduced dd-minor: starting from the dd-minor, repeatedly contract
// the first admissible quotient edge under the scan order (min rep
// position, max rep position); an edge is admissible when no induced-C4
// vertex pair of G straddles the two branch sets. The contracted branch
// keeps the ordering-leftmost representative. Stops when no edge is
// admissible, which is exactly minimality under further contraction.
inline BranchDecomposition reducedDdMinor(const Graph& g, const Ordering& ord) {
    if (checkUmbrellaFree(g, ord))
        throw std::invalid_argument("ordering is not umbrella-free");
    if (findDiamondRelatedC4Pair(g))
        throw DiamondRelatedC4Error(
            "two vertices of an induced C4 are diamond related; no reduced dd-minor exists");

    const int n = g.size();
    std::vector<std::vector<char>> c4pair(n, std::vector<char>(n, 0));
    for (const auto& c4 : inducedC4List(g))
        for (int i = 0; i < 4; ++i)
            for (int j = i + 1; j < 4; ++j)
                c4pair[c4[i]][c4[j]] = c4pair[c4[j]][c4[i]] = 1;

    BranchDecomposition bd = ddMinor(g, ord);
    std::vector<std::vector<int>> groups = bd.branchSets;

    auto conflict = [&](const std::vector<int>& a, const std::vector<int>& b) {
        for (int u : a)
            for (int v : b)
                if (c4pair[u][v]) return true;
        return false;
    };

    while (true) {
        bd = detail::assembleDecomposition(g, groups, ord);
        // Quotient edges keyed by (min rep pos, max rep pos); ids are
        // already sorted by rep position, so id order is the scan order.
        int pickI = -1, pickJ = -1;
        for (int i = 0; i < bd.branchCount() && pickI < 0; ++i)
            for (int j = i + 1; j < bd.branchCount(); ++j) {
                if (!bd.quotientEdge(i, j)) continue;
                if (!conflict(bd.branchSets[i], bd.branchSets[j])) {
                    pickI = i;
                    pickJ = j;
                    break;
                }
            }
        if (pickI < 0) break;
        std::vector<int> merged = bd.branchSets[pickI];
        merged.insert(merged.end(), bd.branchSets[pickJ].begin(), bd.branchSets[pickJ].end());
        groups.clear();
        for (int i = 0; i < bd.branchCount(); ++i)
            if (i != pickI && i != pickJ) groups.push_back(bd.branchSets[i]);
        groups.push_back(std::move(merged));
    }
    return bd;
}

// Vertices in branch j with a G-neighbor in branch i (the set B_{j,i}).
inline std::vector<int> computeBji(const Graph& g, const BranchDecomposition& bd, int j, int i) {
    if (!bd.quotientEdge(i, j))
        throw NotAdjacentError("branches " + std::to_string(j) + " and " + std::to_string(i) +
                               " are not adjacent in the quotient");
    std::vector<int> out;
    for (int v : bd.branchSets[j]) {
        bool hit = false;
        for (int u : bd.branchSets[i])
            if (g.adjacent(u, v)) hit = true;
        if (hit) out.push_back(v);
    }
    return out;
}

struct CheckResult {
    std::string name;
    bool pass;
    std::string detail;
};

struct ValidationReport {
    std::vector<CheckResult> checks;

    bool pass() const {
        for (const auto& c : checks)
            if (!c.pass) return false;
        return true;
    }
};

namespace detail {

inline bool branchConnected(const Graph& g, const std::vector<int>& vs) {
    if (vs.empty()) return false;
    std::set<int> inSet(vs.begin(), vs.end());
    std::set<int> seen{vs[0]};
    std::deque<int> q{vs[0]};
    while (!q.empty()) {
        int x = q.front();
        q.pop_front();
        for (int y : vs)
            if (!seen.count(y) && g.adjacent(x, y)) {
                seen.insert(y);
                q.push_back(y);
            }
    }
    return seen.size() == vs.size();
}

inline bool isClique(const Graph& g, const std::vector<int>& vs) {
    for (int i = 0; i < (int)vs.size(); ++i)
        for (int j = i + 1; j < (int)vs.size(); ++j)
            if (!g.adjacent(vs[i], vs[j])) return false;
    return true;
}

// Looks for an induced 4-cycle of G hitting the four branch sets of a
// quotient C4 in cyclic order, one vertex each.
inline bool liftableQuotientC4(const Graph& g, const BranchDecomposition& bd,
                               const std::array<int, 4>& cycle) {
    for (int b0 : bd.branchSets[cycle[0]])
        for (int b1 : bd.branchSets[cycle[1]])
            for (int b2 : bd.branchSets[cycle[2]])
                for (int b3 : bd.branchSets[cycle[3]]) {
                    if (g.adjacent(b0, b1) && g.adjacent(b1, b2) && g.adjacent(b2, b3) &&
                        g.adjacent(b3, b0) && !g.adjacent(b0, b2) && !g.adjacent(b1, b3))
                        return true;
                }
    return false;
}

}  // namespace detail

// Structural validation of a (claimed) reduced dd-minor: branch-set
// connectivity, the C4-pair constraint, minimality, bipartite triangle-free
// quotient, the clique property of each interface, and liftability of
// quotient 4-cycles.
inline ValidationReport validateReduced(const Graph& g, const BranchDecomposition& bd) {
    ValidationReport rep;
    const int n = g.size();

    {
        std::vector<char> seen(n, 0);
        bool partition = true;
        for (const auto& b : bd.branchSets)
            for (int v : b) {
                if (v < 0 || v >= n || seen[v]) partition = false;
                else seen[v] = 1;
            }
        for (int v = 0; v < n; ++v)
            if (!seen[v]) partition = false;
        rep.checks.push_back({"partition", partition, partition ? "" : "branch sets do not partition V"});
        if (!partition) return rep;
    }

    {
        bool ok = true;
        std::string detail;
        for (int i = 0; i < bd.branchCount(); ++i)
            if (!detail::branchConnected(g, bd.branchSets[i])) {
                ok = false;
                detail = "branch " + std::to_string(i) + " is disconnected";
            }
        rep.checks.push_back({"branch-connectivity", ok, detail});
    }

    std::vector<std::vector<char>> c4pair(n, std::vector<char>(n, 0));
    for (const auto& c4 : inducedC4List(g))
        for (int i = 0; i < 4; ++i)
            for (int j = i + 1; j < 4; ++j)
                c4pair[c4[i]][c4[j]] = c4pair[c4[j]][c4[i]] = 1;

    {
        bool ok = true;
        std::string detail;
        for (int i = 0; i < bd.branchCount() && ok; ++i) {
            const auto& b = bd.branchSets[i];
            for (int x = 0; x < (int)b.size() && ok; ++x)
                for (int y = x + 1; y < (int)b.size(); ++y)
                    if (c4pair[b[x]][b[y]]) {
                        ok = false;
                        detail = "branch " + std::to_string(i) + " holds C4 pair " +
                                 g.label(b[x]) + "," + g.label(b[y]);
                        break;
                    }
        }
        rep.checks.push_back({"c4-pair-constraint", ok, detail});
    }

    {
        bool minimal = true;
        std::string detail;
        for (int i = 0; i < bd.branchCount() && minimal; ++i)
            for (int j = i + 1; j < bd.branchCount(); ++j) {
                if (!bd.quotientEdge(i, j)) continue;
                bool admissible = true;
                for (int u : bd.branchSets[i])
                    for (int v : bd.branchSets[j])
                        if (c4pair[u][v]) admissible = false;
                if (admissible) {
                    minimal = false;
                    detail = "quotient edge " + std::to_string(i) + "-" + std::to_string(j) +
                             " is still contractible";
                    break;
                }
            }
        rep.checks.push_back({"minimality", minimal, detail});
    }

    {
        // 2-color the quotient; odd cycles fail here.
        const int k = bd.branchCount();
        std::vector<int> color(k, -1);
        bool bip = true;
        for (int s = 0; s < k && bip; ++s) {
            if (color[s] != -1) continue;
            color[s] = 0;
            std::deque<int> q{s};
            while (!q.empty() && bip) {
                int x = q.front();
                q.pop_front();
                for (int y = 0; y < k; ++y) {
                    if (!bd.quotientEdge(x, y)) continue;
                    if (color[y] == -1) {
                        color[y] = 1 - color[x];
                        q.push_back(y);
                    } else if (color[y] == color[x]) {
                        bip = false;
                    }
                }
            }
        }
        bool triangleFree = true;
        for (int a = 0; a < k && triangleFree; ++a)
            for (int b = a + 1; b < k && triangleFree; ++b)
                for (int c = b + 1; c < k; ++c)
                    if (bd.quotientEdge(a, b) && bd.quotientEdge(b, c) && bd.quotientEdge(a, c)) {
                        triangleFree = false;
                        break;
                    }
        rep.checks.push_back({"quotient-bipartite", bip, bip ? "" : "quotient has an odd cycle"});
        rep.checks.push_back(
            {"quotient-triangle-free", triangleFree, triangleFree ? "" : "quotient has a triangle"});
    }

    {
        bool ok = true;
        std::string detail;
        for (int i = 0; i < bd.branchCount() && ok; ++i)
            for (int j = i + 1; j < bd.branchCount(); ++j) {
                if (!bd.quotientEdge(i, j)) continue;
                std::vector<int> iface = computeBji(g, bd, i, j);
                std::vector<int> other = computeBji(g, bd, j, i);
                iface.insert(iface.end(), other.begin(), other.end());
                if (!detail::isClique(g, iface)) {
                    ok = false;
                    detail = "interface of quotient edge " + std::to_string(i) + "-" +
                             std::to_string(j) + " is not a clique";
                    break;
                }
            }
        rep.checks.push_back({"interface-cliques", ok, detail});
    }

    {
        // Quotient C4s must lift to induced C4s of G with one vertex per
        // branch set. (Quotient triangles are already rejected above.)
        bool ok = true;
        std::string detail;
        const int k = bd.branchCount();
        for (int a = 0; a < k && ok; ++a)
            for (int b = 0; b < k; ++b)
                for (int c = 0; c < k; ++c)
                    for (int d2 = 0; d2 < k; ++d2) {
                        if (!(a < b && a < c && a < d2 && b < d2)) continue;  // canonical cycle
                        if (!(bd.quotientEdge(a, b) && bd.quotientEdge(b, c) &&
                              bd.quotientEdge(c, d2) && bd.quotientEdge(d2, a)))
                            continue;
                        if (bd.quotientEdge(a, c) || bd.quotientEdge(b, d2)) continue;
                        if (!detail::liftableQuotientC4(g, bd, {a, b, c, d2})) {
                            ok = false;
                            detail = "quotient C4 (" + std::to_string(a) + "," + std::to_string(b) +
                                     "," + std::to_string(c) + "," + std::to_string(d2) +
                                     ") does not lift to an induced C4 of G";
                        }
                    }
        rep.checks.push_back({"quotient-c4-lift", ok, detail});
    }

    return rep;
}

// Branch labeling: per quotient component the side holding the component's
// earliest representative takes odd indices; odd indices then run 1,3,5,...
// across all odd-side branches in representative order, even indices
// 0,2,4,... likewise. Isolated branch sets count as odd.
struct LabeledDecomposition {
    BranchDecomposition bd;
    Ordering sigma;                 // the vertex ordering the labeling respects
    std::vector<int> indexOfBranch; // branch id -> assigned index
    std::vector<int> branchOfIndex; // assigned index -> branch id (-1 when unused)

    bool isOdd(int branchId) const { return indexOfBranch[branchId] % 2 != 0; }

    int indexOfVertex(int v) const { return indexOfBranch[bd.branchOf[v]]; }

    std::vector<int> branchVertices(int index) const {
        return bd.branchSets[branchOfIndex[index]];
    }
};

inline LabeledDecomposition labelBranchSets(const BranchDecomposition& bd, const Ordering& ord) {
    const int k = bd.branchCount();
    std::vector<int> color(k, -1);  // 0 = earliest-rep side (odd), 1 = other
    for (int s = 0; s < k; ++s) {
        if (color[s] != -1) continue;
        // Branch ids are sorted by rep position, so s is the component's
        // earliest representative among unvisited ones.
        color[s] = 0;
        std::deque<int> q{s};
        while (!q.empty()) {
            int x = q.front();
            q.pop_front();
            for (int y = 0; y < k; ++y) {
                if (!bd.quotientEdge(x, y)) continue;
                if (color[y] == -1) {
                    color[y] = 1 - color[x];
                    q.push_back(y);
                } else if (color[y] == color[x]) {
                    throw NotBipartiteError("quotient graph is not bipartite");
                }
            }
        }
    }

    LabeledDecomposition ld;
    ld.bd = bd;
    ld.sigma = ord;
    ld.indexOfBranch.assign(k, -1);
    int nextOdd = 1, nextEven = 0;
    for (int id = 0; id < k; ++id) {  // id order == rep position order
        if (color[id] == 0) {
            ld.indexOfBranch[id] = nextOdd;
            nextOdd += 2;
        } else {
            ld.indexOfBranch[id] = nextEven;
            nextEven += 2;
        }
    }
    int maxIndex = 0;
    for (int id = 0; id < k; ++id) maxIndex = std::max(maxIndex, ld.indexOfBranch[id]);
    ld.branchOfIndex.assign(maxIndex + 1, -1);
    for (int id = 0; id < k; ++id) ld.branchOfIndex[ld.indexOfBranch[id]] = id;
    return ld;
}

}  // namespace vpg0
