#pragma once

#include <algorithm>
#include <map>
#include <set>
#include <vector>

#include "vpg0/errors.hpp"
#include "vpg0/graph.hpp"
#include "vpg0/minor.hpp"
#include "vpg0/poset.hpp"
#include "vpg0/rational.hpp"

namespace vpg0 {

// Interval representation of a branch set plus one anchor point per
// quotient neighbor, keyed by the neighbor's assigned index.
struct AnchoredIntervalRep {
    std::map<int, RInterval> intervals;  // vertex -> closed interval
    std::map<int, Rational> anchors;     // neighbor index -> anchor point
};

// Closure of the branch with assigned index idx: the branch set plus, for
// each quotient neighbor, the neighbor vertices with an edge into it.
inline std::vector<int> closure(const Graph& g, const LabeledDecomposition& ld, int idx) {
    int id = ld.branchOfIndex.at(idx);
    std::vector<int> out = ld.bd.branchSets[id];
    for (int j : ld.bd.quotientNeighbors(id)) {
        std::vector<int> bji = computeBji(g, ld.bd, j, id);
        out.insert(out.end(), bji.begin(), bji.end());
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

// Canonical interval representation of an interval order via nested
// predecessor sets: with D_0 c D_1 c ... c D_{k-1} the distinct strict
// predecessor sets within s, l(x) is the rank of Pred(x) and r(x) the
// largest t with x not in D_t. Then r(x) < l(y) iff x < y in the subposet.
// Throws TwoPlusTwoError when the predecessor sets fail to form a chain.
inline std::map<int, RInterval> intervalOrderRep(const Poset& p, const std::vector<int>& s) {
    const int m = (int)s.size();
    std::vector<std::vector<char>> pred(m);  // pred[i][j]: s[j] < s[i] within s
    for (int i = 0; i < m; ++i) {
        pred[i].assign(m, 0);
        for (int j = 0; j < m; ++j)
            if (p.less(s[j], s[i])) pred[i][j] = 1;
    }

    auto subsetEq = [&](int a, int b) {  // pred[a] subseteq pred[b]
        for (int j = 0; j < m; ++j)
            if (pred[a][j] && !pred[b][j]) return false;
        return true;
    };

    // The sets must be linearly ordered by inclusion; otherwise extract an
    // honest 2+2 witness.
    for (int a = 0; a < m; ++a)
        for (int b = a + 1; b < m; ++b) {
            if (subsetEq(a, b) || subsetEq(b, a)) continue;
            int x = -1, y = -1;
            for (int j = 0; j < m; ++j) {
                if (pred[a][j] && !pred[b][j]) x = j;
                if (pred[b][j] && !pred[a][j]) y = j;
            }
            throw TwoPlusTwoError(
                "subposet contains a 2+2",
                {p.element(s[x]), p.element(s[a]), p.element(s[y]), p.element(s[b])});
        }

    // Distinct predecessor sets, sorted by popcount (inclusion chain).
    std::vector<int> reps;  // indices into pred, one per distinct set
    for (int i = 0; i < m; ++i) {
        bool seen = false;
        for (int r : reps)
            if (pred[i] == pred[r]) seen = true;
        if (!seen) reps.push_back(i);
    }
    std::sort(reps.begin(), reps.end(), [&](int a, int b) {
        int ca = std::count(pred[a].begin(), pred[a].end(), 1);
        int cb = std::count(pred[b].begin(), pred[b].end(), 1);
        return ca < cb;
    });
    const int k = (int)reps.size();

    std::map<int, RInterval> out;
    for (int i = 0; i < m; ++i) {
        int l = -1;
        for (int t = 0; t < k; ++t)
            if (pred[i] == pred[reps[t]]) l = t;
        int r = 0;
        for (int t = 0; t < k; ++t)
            if (!pred[reps[t]][i]) r = t;  // x not in D_t
        out[s[i]] = RInterval(Rational(l), Rational(r));
    }
    return out;
}

// For each quotient neighbor of the branch, computes the common region of
// the interface clique, anchors its midpoint, and collapses the closure-only
// interface vertices onto it. Regions are computed against the incoming
// representation so neighbor order cannot matter.
inline AnchoredIntervalRep shrinkToAnchors(const std::map<int, RInterval>& rep, const Graph& g,
                                           const LabeledDecomposition& ld, int idx) {
    int id = ld.branchOfIndex.at(idx);
    AnchoredIntervalRep out;
    out.intervals = rep;

    std::vector<int> neighborIdx;
    for (int j : ld.bd.quotientNeighbors(id)) neighborIdx.push_back(ld.indexOfBranch[j]);
    std::sort(neighborIdx.begin(), neighborIdx.end());

    std::map<int, std::vector<int>> toShrink;
    for (int jIdx : neighborIdx) {
        int j = ld.branchOfIndex.at(jIdx);
        std::vector<int> clique = computeBji(g, ld.bd, j, id);
        std::vector<int> own = computeBji(g, ld.bd, id, j);
        toShrink[jIdx] = clique;
        clique.insert(clique.end(), own.begin(), own.end());

        Rational lo, hi;
        bool first = true;
        for (int v : clique) {
            const RInterval& iv = rep.at(v);
            if (first) {
                lo = iv.lo;
                hi = iv.hi;
                first = false;
            } else {
                lo = rmax(lo, iv.lo);
                hi = rmin(hi, iv.hi);
            }
        }
        if (first || hi < lo)
            throw EmptyCliqueRegionError("interface of branch " + std::to_string(idx) +
                                         " toward " + std::to_string(jIdx) +
                                         " has no common region");
        out.anchors[jIdx] = midpoint(lo, hi);
    }

    for (const auto& [jIdx, vs] : toShrink) {
        const Rational& pt = out.anchors[jIdx];
        for (int v : vs) out.intervals[v] = RInterval(pt, pt);
    }

    Rational prev;
    bool first = true;
    for (const auto& [jIdx, pt] : out.anchors) {
        if (!first && !(prev < pt))
            throw PinOrderMismatchError("anchor points not increasing with neighbor index");
        prev = pt;
        first = false;
    }
    return out;
}

// Drops the intervals of closure-only vertices; anchors stay.
inline AnchoredIntervalRep restrictToBranch(const AnchoredIntervalRep& arep,
                                            const LabeledDecomposition& ld, int idx) {
    int id = ld.branchOfIndex.at(idx);
    AnchoredIntervalRep out;
    out.anchors = arep.anchors;
    for (int v : ld.bd.branchSets[id]) out.intervals[v] = arep.intervals.at(v);
    return out;
}

// Full representation stage for one branch: closure, canonical interval order
// representation of the induced subposet, anchor shrinking, restriction.
inline AnchoredIntervalRep buildBranchRep(const Graph& g, const Poset& p,
                                          const LabeledDecomposition& ld, int idx) {
    std::vector<int> cl = closure(g, ld, idx);
    std::map<int, RInterval> rep = intervalOrderRep(p, cl);
    AnchoredIntervalRep anchored = shrinkToAnchors(rep, g, ld, idx);
    return restrictToBranch(anchored, ld, idx);
}

}  // namespace vpg0
