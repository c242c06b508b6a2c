#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "vpg0/characterization.hpp"
#include "vpg0/errors.hpp"
#include "vpg0/graph.hpp"
#include "vpg0/intervalrep.hpp"
#include "vpg0/minor.hpp"
#include "vpg0/poset.hpp"
#include "vpg0/rational.hpp"
#include "vpg0/recognition.hpp"

namespace vpg0 {

// One axis-parallel closed segment. Vertical segments live at x = at with
// y spanning span; horizontal segments at y = at with x spanning span.
struct Segment {
    bool vertical = false;
    Rational at;
    RInterval span;

    Rational minX() const { return vertical ? at : span.lo; }
    Rational maxX() const { return vertical ? at : span.hi; }
    Rational minY() const { return vertical ? span.lo : at; }
    Rational maxY() const { return vertical ? span.hi : at; }
};

struct Drawing {
    std::vector<std::string> labels;    // vertex -> label
    std::vector<Segment> segments;      // vertex -> segment
    std::vector<int> branchIndexOf;     // vertex -> branch index (may be empty for parsed input)
    std::vector<int> sigmaSeq;          // sigma used (may be empty for parsed input)

    int size() const { return (int)labels.size(); }

    int indexOf(const std::string& l) const {
        for (int i = 0; i < size(); ++i)
            if (labels[i] == l) return i;
        throw std::invalid_argument("unknown vertex label: " + l);
    }
};

namespace detail {

// Strictly increasing piecewise-linear map through the given knots.
struct PiecewiseLinearMap {
    std::vector<std::pair<Rational, Rational>> knots;  // increasing in both coordinates

    Rational operator()(const Rational& x) const {
        if (knots.size() == 1) return x - knots[0].first + knots[0].second;
        if (x < knots.front().first || knots.back().first < x)
            throw std::logic_error("rescale input outside knot range");
        for (size_t i = 0; i + 1 < knots.size(); ++i) {
            const auto& [p1, t1] = knots[i];
            const auto& [p2, t2] = knots[i + 1];
            if (x <= p2) return t1 + (x - p1) * (t2 - t1) / (p2 - p1);
        }
        return knots.back().second;
    }
};

}  // namespace detail

// Strictly-increasing piecewise-linear rescale: each anchor lands exactly on
// its pin target, endpoints below the first anchor spread over [lo, t_first]
// and endpoints above the last anchor over [t_last, hi]. With no anchors the
// whole representation is squeezed affinely onto the span. Ties are
// preserved: equal inputs map to equal outputs, distinct stay distinct.
inline std::map<int, RInterval> monotoneRescale(const AnchoredIntervalRep& arep,
                                                const std::map<int, Rational>& pins,
                                                const RInterval& outerSpan) {
    if (pins.size() != arep.anchors.size())
        throw std::invalid_argument("pin targets must cover the anchors exactly");

    std::vector<std::pair<Rational, Rational>> knots;  // (anchor point, target)
    {
        Rational prevP, prevT;
        bool first = true;
        for (const auto& [idx, p] : arep.anchors) {
            auto it = pins.find(idx);
            if (it == pins.end())
                throw std::invalid_argument("missing pin target for anchor " + std::to_string(idx));
            if (!first && !(prevP < p && prevT < it->second))
                throw PinOrderMismatchError("anchor order disagrees with pin target order");
            knots.emplace_back(p, it->second);
            prevP = p;
            prevT = it->second;
            first = false;
        }
    }
    if (!knots.empty() &&
        !(outerSpan.lo < knots.front().second && knots.back().second < outerSpan.hi))
        throw std::invalid_argument("outer span must strictly contain all pin targets");

    if (arep.intervals.empty()) return {};

    Rational m = arep.intervals.begin()->second.lo;
    Rational M = arep.intervals.begin()->second.hi;
    for (const auto& [v, iv] : arep.intervals) {
        m = rmin(m, iv.lo);
        M = rmax(M, iv.hi);
    }

    std::map<int, RInterval> out;
    if (knots.empty()) {
        if (m == M) {
            Rational mid = midpoint(outerSpan.lo, outerSpan.hi);
            for (const auto& [v, iv] : arep.intervals) out[v] = RInterval(mid, mid);
            return out;
        }
        detail::PiecewiseLinearMap f{{{m, outerSpan.lo}, {M, outerSpan.hi}}};
        for (const auto& [v, iv] : arep.intervals)
            out[v] = RInterval(f(iv.lo), f(iv.hi));
        return out;
    }

    if (m < knots.front().first) knots.insert(knots.begin(), {m, outerSpan.lo});
    if (knots.back().first < M) knots.emplace_back(M, outerSpan.hi);
    detail::PiecewiseLinearMap f{std::move(knots)};
    for (const auto& [v, iv] : arep.intervals) out[v] = RInterval(f(iv.lo), f(iv.hi));
    return out;
}

namespace detail {

// Interval endpoints out of the down-set construction sit on integers and
// anchors on integers or half-integers, with unit gaps between disjoint
// intervals. Widening every interval by 1/4 keeps the whole pattern intact
// (intersections, anchor containment, left-of order) while making each
// anchor interior to the intervals that carry it, so the rescaled
// representation reaches the full drawn span like the construction asks.
inline AnchoredIntervalRep widen(const AnchoredIntervalRep& arep) {
    AnchoredIntervalRep out;
    out.anchors = arep.anchors;
    Rational quarter(1, 4);
    for (const auto& [v, iv] : arep.intervals)
        out.intervals[v] = RInterval(iv.lo - quarter, iv.hi + quarter);
    return out;
}

}  // namespace detail

// Placement: odd-indexed branches become vertical columns at x = index spanning
// the rows of their extreme even neighbors (plus a half-unit margin), even
// branches become horizontal rows symmetrically, and every anchor is pinned
// onto its shared grid point. An isolated branch B_o occupies the strip
// strictly between row e* and the next row level, where e* is the largest
// even index whose representative precedes B_o's in sigma (-1 when none).
inline Drawing place(const Graph& g, const LabeledDecomposition& ld,
                     const std::map<int, AnchoredIntervalRep>& reps) {
    Drawing d;
    d.labels = g.labels();
    d.segments.assign(g.size(), Segment{});
    d.branchIndexOf.assign(g.size(), -1);
    d.sigmaSeq = ld.sigma.seq;

    for (int id = 0; id < ld.bd.branchCount(); ++id) {
        int idx = ld.indexOfBranch[id];
        bool odd = idx % 2 != 0;
        const AnchoredIntervalRep& arep = reps.at(idx);

        std::vector<int> neighborIdx;
        for (int j : ld.bd.quotientNeighbors(id)) neighborIdx.push_back(ld.indexOfBranch[j]);
        std::sort(neighborIdx.begin(), neighborIdx.end());

        RInterval span;
        std::map<int, Rational> pins;
        if (neighborIdx.empty()) {
            int eStar = -1;
            int myPos = ld.sigma.pos[ld.bd.representative[id]];
            for (int other = 0; other < ld.bd.branchCount(); ++other) {
                int oIdx = ld.indexOfBranch[other];
                if (oIdx % 2 != 0) continue;
                if (ld.sigma.pos[ld.bd.representative[other]] < myPos)
                    eStar = std::max(eStar, oIdx);
            }
            span = RInterval(Rational(eStar) + Rational(1, 4), Rational(eStar) + Rational(3, 4));
        } else {
            span = RInterval(Rational(neighborIdx.front()) - Rational::half(),
                             Rational(neighborIdx.back()) + Rational::half());
            for (int e : neighborIdx) pins[e] = Rational(e);
        }

        std::map<int, RInterval> placed = monotoneRescale(detail::widen(arep), pins, span);
        for (const auto& [v, iv] : placed) {
            d.segments[v] = Segment{odd, Rational(idx), iv};
            d.branchIndexOf[v] = idx;
        }
    }
    return d;
}

struct DrawOutcome {
    Classification classification;
    std::optional<Drawing> drawing;
    std::optional<LabeledDecomposition> decomposition;
};

namespace detail {

// Reorders a poset's elements to the graph's label order; throws when the
// label universes differ.
inline Poset alignPoset(const Graph& g, const Poset& p) {
    if (p.size() != g.size()) throw InvalidPosetError("poset and graph sizes differ");
    std::vector<int> toPoset(g.size());
    for (int v = 0; v < g.size(); ++v) {
        try {
            toPoset[v] = p.indexOf(g.label(v));
        } catch (const std::invalid_argument&) {
            throw InvalidPosetError("poset is missing element " + g.label(v));
        }
    }
    std::vector<std::vector<char>> less(g.size(), std::vector<char>(g.size(), 0));
    for (int u = 0; u < g.size(); ++u)
        for (int v = 0; v < g.size(); ++v)
            if (p.less(toPoset[u], toPoset[v])) less[u][v] = 1;
    return Poset(g.labels(), std::move(less));
}

}  // namespace detail

// Whole pipeline: recognition (or validation of a supplied poset/sigma),
// both characterization conditions, then the three construction steps. On a no
// instance the classification carries the witness and no drawing is made.
inline DrawOutcome drawB0(const Graph& g, const std::optional<Poset>& posetIn = std::nullopt,
                          const std::optional<Ordering>& sigmaIn = std::nullopt) {
    Poset p;
    Ordering sigma;
    bool conditionsChecked = false;

    if (posetIn) {
        p = detail::alignPoset(g, *posetIn);
        if (!(cocomparabilityGraph(p) == g))
            throw InvalidPosetError("supplied poset's cocomparability graph differs from the input");
        if (sigmaIn) {
            if (sigmaIn->size() != g.size())
                throw InvalidSigmaError("sigma does not cover the vertex set");
            if (!isLinearExtension(p, *sigmaIn))
                throw InvalidSigmaError("sigma is not a linear extension of the poset");
            sigma = *sigmaIn;
        } else {
            sigma = linearExtension(p);
        }
    } else if (sigmaIn) {
        // Orient each non-edge along sigma; transitivity of that orientation
        // is exactly sigma being umbrella-free.
        if (sigmaIn->size() != g.size())
            throw InvalidSigmaError("sigma does not cover the vertex set");
        Orientation o;
        for (int i = 0; i < g.size(); ++i)
            for (int j = i + 1; j < g.size(); ++j) {
                int u = sigmaIn->seq[i], v = sigmaIn->seq[j];
                if (!g.adjacent(u, v)) o.arcs.emplace_back(u, v);
            }
        try {
            p = posetFromOrientation(g, o);
        } catch (const NotTransitiveError&) {
            throw InvalidSigmaError("sigma is not an umbrella-free ordering of the graph");
        }
        sigma = *sigmaIn;
    } else {
        Classification c = classifyB0(g);
        if (c.verdict != Verdict::Yes)
            return DrawOutcome{std::move(c), std::nullopt, std::nullopt};
        p = *c.poset;
        sigma = *c.sigma;
        conditionsChecked = true;
    }

    if (!conditionsChecked) {
        if (auto w = findDiamondRelatedC4Pair(g))
            return DrawOutcome{
                Classification{Verdict::No, B0Witness{*w}, std::move(sigma), std::move(p)},
                std::nullopt, std::nullopt};
        if (auto six = findInducedCoC6(g))
            return DrawOutcome{Classification{Verdict::No, B0Witness{CoC6Witness{*six}},
                                              std::move(sigma), std::move(p)},
                               std::nullopt, std::nullopt};
    }

    BranchDecomposition bd = reducedDdMinor(g, sigma);
    LabeledDecomposition ld = labelBranchSets(bd, sigma);
    std::map<int, AnchoredIntervalRep> reps;
    for (int id = 0; id < ld.bd.branchCount(); ++id) {
        int idx = ld.indexOfBranch[id];
        reps[idx] = buildBranchRep(g, p, ld, idx);
    }
    Drawing d = place(g, ld, reps);
    return DrawOutcome{Classification{Verdict::Yes, std::nullopt, sigma, p}, std::move(d),
                       std::move(ld)};
}

}  // namespace vpg0
