#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "vpg0/graph.hpp"
#include "vpg0/layout.hpp"
#include "vpg0/poset.hpp"
#include "vpg0/rational.hpp"

namespace vpg0 {

// Closed axis-parallel segments share a point: covers perpendicular
// crossings, endpoint touches, and collinear overlap. Exact arithmetic.
inline bool segmentsIntersect(const Segment& a, const Segment& b) {
    if (a.vertical && b.vertical)
        return a.at == b.at && a.span.intersects(b.span);
    if (!a.vertical && !b.vertical)
        return a.at == b.at && a.span.intersects(b.span);
    const Segment& v = a.vertical ? a : b;
    const Segment& h = a.vertical ? b : a;
    return h.span.contains(v.at) && v.span.contains(h.at);
}

// Graph on the drawing's vertices with edges wherever segments intersect.
inline Graph intersectionGraph(const Drawing& d) {
    Graph g(d.labels);
    for (int u = 0; u < d.size(); ++u)
        for (int v = u + 1; v < d.size(); ++v)
            if (segmentsIntersect(d.segments[u], d.segments[v])) g.addEdge(u, v);
    return g;
}

// The drawing order relations: vh reads "below, or level and to the left",
// hv reads "left, or aligned and below"; which one counts as x before y
// depends on the orientation of x's segment.
struct DRel {
    bool vh = false;
    bool hv = false;
    bool d = false;
};

inline DRel dRelation(const Drawing& dr, int x, int y) {
    const Segment& ix = dr.segments[x];
    const Segment& iy = dr.segments[y];
    DRel r;
    bool below = ix.maxY() < iy.minY();
    bool left = ix.maxX() < iy.minX();
    bool shareHorizontalLine = ix.maxY() >= iy.minY() && iy.maxY() >= ix.minY();
    bool shareVerticalLine = ix.maxX() >= iy.minX() && iy.maxX() >= ix.minX();
    r.vh = below || (shareHorizontalLine && left);
    r.hv = left || (shareVerticalLine && below);
    r.d = ix.vertical ? r.hv : r.vh;
    return r;
}

struct PairViolation {
    int x, y;
    std::string what;
};

struct OrderCheckReport {
    std::vector<PairViolation> violations;
    int pairsChecked = 0;
    bool pass() const { return violations.empty(); }
};

// The order-isomorphism check: comparable pairs must be drawn disjoint with
// the drawing order agreeing with the poset, incomparable pairs must
// intersect. The drawing order is only consulted for disjoint pairs.
inline OrderCheckReport checkOrderIsomorphism(const Drawing& d, const Poset& p) {
    OrderCheckReport rep;
    if (p.size() != d.size())
        throw std::invalid_argument("drawing vertices and poset elements differ");
    std::vector<int> toPoset(d.size());
    for (int v = 0; v < d.size(); ++v) toPoset[v] = p.indexOf(d.labels[v]);

    for (int x = 0; x < d.size(); ++x)
        for (int y = 0; y < d.size(); ++y) {
            if (x == y) continue;
            ++rep.pairsChecked;
            bool meet = segmentsIntersect(d.segments[x], d.segments[y]);
            bool lessP = p.less(toPoset[x], toPoset[y]);
            bool cmp = lessP || p.less(toPoset[y], toPoset[x]);
            if (!cmp) {
                if (!meet)
                    rep.violations.push_back({x, y, "incomparable pair drawn disjoint"});
                continue;
            }
            if (meet) {
                rep.violations.push_back({x, y, "comparable pair drawn intersecting"});
                continue;
            }
            bool dxy = dRelation(d, x, y).d;
            if (lessP && !dxy)
                rep.violations.push_back({x, y, "x < y in P but not x < y in D"});
            if (!lessP && dxy)
                rep.violations.push_back({x, y, "x < y in D but y < x in P"});
        }
    return rep;
}

// Antisymmetry of the drawing order over disjoint pairs, plus the stronger
// positional fact the proof rests on: no segment sits strictly bottom-right
// of an opposite-orientation segment.
inline std::optional<std::pair<int, int>> checkAntisymmetry(const Drawing& d) {
    for (int x = 0; x < d.size(); ++x)
        for (int y = x + 1; y < d.size(); ++y) {
            if (segmentsIntersect(d.segments[x], d.segments[y])) continue;
            if (dRelation(d, x, y).d && dRelation(d, y, x).d) return std::make_pair(x, y);
        }
    for (int b = 0; b < d.size(); ++b)
        for (int t = 0; t < d.size(); ++t) {
            if (b == t || d.segments[b].vertical == d.segments[t].vertical) continue;
            bool bBelow = d.segments[b].maxY() < d.segments[t].minY();
            bool bRight = d.segments[b].minX() > d.segments[t].maxX();
            if (bBelow && bRight) return std::make_pair(b, t);
        }
    return std::nullopt;
}

// Label-set-aware graph equality plus edge diff, for verification reports.
struct GraphDiff {
    std::vector<std::pair<std::string, std::string>> missing;  // in expected, not in actual
    std::vector<std::pair<std::string, std::string>> extra;    // in actual, not in expected
    bool same() const { return missing.empty() && extra.empty(); }
};

inline GraphDiff diffGraphs(const Graph& expected, const Graph& actual) {
    GraphDiff d;
    for (auto [u, v] : expected.edges()) {
        const std::string &lu = expected.label(u), &lv = expected.label(v);
        if (!actual.hasLabel(lu) || !actual.hasLabel(lv) || !actual.adjacent(lu, lv))
            d.missing.emplace_back(lu, lv);
    }
    for (auto [u, v] : actual.edges()) {
        const std::string &lu = actual.label(u), &lv = actual.label(v);
        if (!expected.hasLabel(lu) || !expected.hasLabel(lv) || !expected.adjacent(lu, lv))
            d.extra.emplace_back(lu, lv);
    }
    if (expected.size() != actual.size()) d.missing.emplace_back("<vertex-count>", "<mismatch>");
    return d;
}

}  // namespace vpg0
