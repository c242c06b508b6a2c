#include <gtest/gtest.h>

#include <set>

#include "fixtures.hpp"
#include "vpg0/harness.hpp"
#include "vpg0/layout.hpp"
#include "vpg0/verify.hpp"

using namespace vpg0;

namespace {

Segment vseg(long x, Rational lo, Rational hi) { return Segment{true, Rational(x), {lo, hi}}; }
Segment hseg(long y, Rational lo, Rational hi) { return Segment{false, Rational(y), {lo, hi}}; }

// A reference drawing of the ten-vertex running example, keyed by label.
Drawing referenceDrawing() {
    Drawing d;
    auto add = [&](const std::string& l, Segment s) {
        d.labels.push_back(l);
        d.segments.push_back(s);
    };
    add("b", vseg(1, Rational(-1, 2), Rational(5, 2)));
    add("c", vseg(3, Rational(-1, 2), Rational(5, 2)));
    add("e", vseg(3, Rational(3, 2), Rational(9, 2)));
    add("i", vseg(5, Rational(3, 2), Rational(9, 2)));
    add("h", vseg(5, Rational(3, 2), Rational(9, 2)));
    add("a", hseg(0, Rational(1, 2), Rational(7, 2)));
    add("d", hseg(2, Rational(1, 2), Rational(7, 2)));
    add("f", hseg(2, Rational(5, 2), Rational(11, 2)));
    add("g", hseg(4, Rational(5, 2), Rational(11, 2)));
    add("j", hseg(4, Rational(9, 2), Rational(11, 2)));
    return d;
}

}  // namespace

TEST(SegmentsIntersect, PerpendicularCross) {
    EXPECT_TRUE(segmentsIntersect(vseg(1, Rational(0), Rational(2)),
                                  hseg(1, Rational(0), Rational(2))));
}

TEST(SegmentsIntersect, CollinearTouch) {
    EXPECT_TRUE(segmentsIntersect(hseg(0, Rational(0), Rational(1)),
                                  hseg(0, Rational(1), Rational(2))));
}

TEST(SegmentsIntersect, DisjointPerpendicular) {
    EXPECT_FALSE(segmentsIntersect(vseg(1, Rational(0), Rational(2)),
                                   hseg(3, Rational(0), Rational(2))));
}

TEST(SegmentsIntersect, EndpointOnlyTouchAtCorner) {
    EXPECT_TRUE(segmentsIntersect(vseg(2, Rational(0), Rational(1)),
                                  hseg(1, Rational(2), Rational(5))));
    EXPECT_FALSE(segmentsIntersect(vseg(2, Rational(0), Rational(1)),
                                   hseg(1, Rational(5, 2), Rational(5))));
}

// Exhaustive sampling oracle: scale to integers and enumerate every lattice
// point of each segment. Any shared point of two axis-parallel segments
// with integer endpoints is a lattice point.
TEST(SegmentsIntersect, AgreesWithPointSamplingOracle) {
    SplitMix64 rng(77);
    auto randSeg = [&]() {
        bool vertical = rng.below(2) == 0;
        long at2 = (long)rng.below(25) - 12;  // half-units
        long a2 = (long)rng.below(25) - 12;
        long b2 = (long)rng.below(25) - 12;
        if (a2 > b2) std::swap(a2, b2);
        return Segment{vertical, Rational(at2, 2), {Rational(a2, 2), Rational(b2, 2)}};
    };
    auto samplePoints = [](const Segment& s) {
        // Doubled coordinates are integers.
        std::set<std::pair<long, long>> pts;
        long at = s.at.num() * (2 / s.at.den());
        long lo = s.span.lo.num() * (2 / s.span.lo.den());
        long hi = s.span.hi.num() * (2 / s.span.hi.den());
        for (long t = lo; t <= hi; ++t)
            pts.insert(s.vertical ? std::make_pair(at, t) : std::make_pair(t, at));
        return pts;
    };
    int trials = 10000;
    for (int i = 0; i < trials; ++i) {
        Segment s1 = randSeg(), s2 = randSeg();
        auto p1 = samplePoints(s1), p2 = samplePoints(s2);
        bool oracle = false;
        for (const auto& p : p1)
            if (p2.count(p)) oracle = true;
        EXPECT_EQ(segmentsIntersect(s1, s2), oracle) << "trial " << i;
    }
}

TEST(IntersectionGraph, SingleVertex) {
    Drawing d;
    d.labels = {"x"};
    d.segments = {vseg(0, Rational(0), Rational(1))};
    Graph g = intersectionGraph(d);
    EXPECT_EQ(g.size(), 1);
    EXPECT_EQ(g.edgeCount(), 0);
}

TEST(IntersectionGraph, C4Drawing) {
    Drawing d;
    d.labels = {"a", "b", "c", "d"};
    // Two verticals crossed by two horizontals, as in the unique C4 pattern.
    d.segments = {vseg(0, Rational(0), Rational(3)), hseg(1, Rational(-1), Rational(2)),
                  vseg(2, Rational(0), Rational(3)), hseg(2, Rational(-1), Rational(2))};
    Graph g = intersectionGraph(d);
    EXPECT_EQ(g.edgeCount(), 4);
    EXPECT_TRUE(g.adjacent("a", "b"));
    EXPECT_TRUE(g.adjacent("b", "c"));
    EXPECT_TRUE(g.adjacent("c", "d"));
    EXPECT_TRUE(g.adjacent("d", "a"));
    EXPECT_FALSE(g.adjacent("a", "c"));
    EXPECT_FALSE(g.adjacent("b", "d"));
}

TEST(IntersectionGraph, ReferenceDrawingMatchesExampleTen) {
    Graph expected = fixtures::exampleTenGraph();
    GraphDiff diff = diffGraphs(expected, intersectionGraph(referenceDrawing()));
    EXPECT_TRUE(diff.same());
}

TEST(DRelation, ParallelHorizontalsBelow) {
    Drawing d;
    d.labels = {"x", "y"};
    d.segments = {hseg(0, Rational(0), Rational(1)), hseg(2, Rational(5), Rational(6))};
    DRel r = dRelation(d, 0, 1);
    EXPECT_TRUE(r.vh);
    EXPECT_TRUE(r.d);
    EXPECT_FALSE(dRelation(d, 1, 0).d);
}

TEST(DRelation, TwoVerticalsSameBandLeftWins) {
    Drawing d;
    d.labels = {"x", "y"};
    d.segments = {vseg(1, Rational(0), Rational(2)), vseg(3, Rational(1), Rational(3))};
    DRel r = dRelation(d, 0, 1);
    EXPECT_TRUE(r.hv);
    EXPECT_TRUE(r.d);
    EXPECT_FALSE(dRelation(d, 1, 0).d);
}

TEST(DRelation, ReferenceDrawingAPrecedesD) {
    Drawing d = referenceDrawing();
    EXPECT_TRUE(dRelation(d, d.indexOf("a"), d.indexOf("d")).d);
    EXPECT_FALSE(dRelation(d, d.indexOf("d"), d.indexOf("a")).d);
}

TEST(CheckOrderIsomorphism, TwoElementChain) {
    Poset p = posetFromCovers({"x", "y"}, {{"x", "y"}});
    Drawing d;
    d.labels = {"x", "y"};
    d.segments = {vseg(1, Rational(0), Rational(1)), vseg(2, Rational(0), Rational(1))};
    OrderCheckReport rep = checkOrderIsomorphism(d, p);
    EXPECT_EQ(rep.pairsChecked, 2);
    EXPECT_TRUE(rep.pass());
}

TEST(CheckOrderIsomorphism, ReferenceDrawingHasZeroViolations) {
    OrderCheckReport rep = checkOrderIsomorphism(referenceDrawing(), fixtures::exampleTenPoset());
    EXPECT_EQ(rep.pairsChecked, 90);
    EXPECT_TRUE(rep.pass()) << rep.violations.size() << " violations";
}

TEST(CheckOrderIsomorphism, MutatedDrawingFails) {
    Drawing d = referenceDrawing();
    // Shift I_a up across the row at y = 2.
    d.segments[d.indexOf("a")].at = Rational(3);
    OrderCheckReport rep = checkOrderIsomorphism(d, fixtures::exampleTenPoset());
    EXPECT_FALSE(rep.pass());
}

TEST(CheckAntisymmetry, SingleBranchOk) {
    Drawing d;
    d.labels = {"x", "y"};
    d.segments = {vseg(1, Rational(0), Rational(1)), vseg(1, Rational(2), Rational(3))};
    EXPECT_FALSE(checkAntisymmetry(d).has_value());
}

TEST(CheckAntisymmetry, ReferenceDrawingOk) {
    EXPECT_FALSE(checkAntisymmetry(referenceDrawing()).has_value());
}

TEST(CheckAntisymmetry, BottomRightPairCaught) {
    Drawing d;
    d.labels = {"t", "b"};
    // Horizontal strictly below and strictly right of a vertical.
    d.segments = {vseg(1, Rational(5), Rational(8)), hseg(0, Rational(10), Rational(12))};
    auto bad = checkAntisymmetry(d);
    ASSERT_TRUE(bad.has_value());
}

TEST(CheckAntisymmetry, VerticalBottomRightOfHorizontalCaught) {
    Drawing d;
    d.labels = {"h", "v"};
    d.segments = {hseg(5, Rational(0), Rational(1)), vseg(10, Rational(0), Rational(1))};
    auto bad = checkAntisymmetry(d);
    ASSERT_TRUE(bad.has_value());
}

TEST(DiffGraphs, ReportsMissingAndExtra) {
    Graph a({"x", "y", "z"});
    a.addEdge("x", "y");
    Graph b({"x", "y", "z"});
    b.addEdge("y", "z");
    GraphDiff diff = diffGraphs(a, b);
    EXPECT_FALSE(diff.same());
    ASSERT_EQ(diff.missing.size(), 1u);
    ASSERT_EQ(diff.extra.size(), 1u);
    EXPECT_EQ(diff.missing[0], std::make_pair(std::string("x"), std::string("y")));
    EXPECT_EQ(diff.extra[0], std::make_pair(std::string("y"), std::string("z")));
}
