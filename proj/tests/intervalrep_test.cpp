#include <gtest/gtest.h>

#include <set>

#include "fixtures.hpp"
#include "vpg0/harness.hpp"
#include "vpg0/intervalrep.hpp"
#include "vpg0/layout.hpp"

using namespace vpg0;

namespace {

LabeledDecomposition referenceLabeled(const Graph& g, const Ordering& sigma) {
    auto ix = [&](const char* l) { return g.indexOf(l); };
    std::vector<std::vector<int>> groups{
        {ix("b")}, {ix("c"), ix("e")}, {ix("i"), ix("h")},
        {ix("a")}, {ix("d"), ix("f")}, {ix("g"), ix("j")}};
    return labelBranchSets(decompositionFromGroups(g, groups, sigma), sigma);
}

std::set<std::string> labelSet(const Graph& g, const std::vector<int>& vs) {
    std::set<std::string> out;
    for (int v : vs) out.insert(g.label(v));
    return out;
}

// Left-of/less-than law: r(x) < l(y) exactly when x < y in the subposet.
void expectIntervalLaw(const Poset& p, const std::vector<int>& s,
                       const std::map<int, RInterval>& rep) {
    for (int x : s)
        for (int y : s) {
            if (x == y) continue;
            EXPECT_EQ(rep.at(x).strictlyLeftOf(rep.at(y)), p.less(x, y))
                << p.element(x) << " vs " << p.element(y);
        }
}

}  // namespace

TEST(Closure, IsolatedBranchIsItself) {
    Graph g = fixtures::complete(3);
    Ordering sigma = *umbrellaFreeOrdering(g);
    LabeledDecomposition ld = labelBranchSets(reducedDdMinor(g, sigma), sigma);
    EXPECT_EQ(closure(g, ld, 1), (std::vector<int>{0, 1, 2}));
}

TEST(Closure, PaperBranchThree) {
    Graph g = fixtures::exampleTenGraph();
    LabeledDecomposition ld = referenceLabeled(g, fixtures::exampleTenSigma(g));
    EXPECT_EQ(labelSet(g, closure(g, ld, 3)),
              (std::set<std::string>{"c", "e", "a", "d", "f", "g"}));
}

TEST(Closure, PaperBranchOne) {
    Graph g = fixtures::exampleTenGraph();
    LabeledDecomposition ld = referenceLabeled(g, fixtures::exampleTenSigma(g));
    EXPECT_EQ(labelSet(g, closure(g, ld, 1)), (std::set<std::string>{"b", "a", "d"}));
}

TEST(IntervalOrderRep, AntichainAllAtZero) {
    Poset p = posetFromCovers({"x", "y", "z"}, {});
    auto rep = intervalOrderRep(p, {0, 1, 2});
    for (int v = 0; v < 3; ++v) EXPECT_EQ(rep.at(v), RInterval(Rational(0), Rational(0)));
}

TEST(IntervalOrderRep, ChainGivesPoints) {
    Poset p = posetFromCovers({"x", "y", "z"}, {{"x", "y"}, {"y", "z"}});
    auto rep = intervalOrderRep(p, {0, 1, 2});
    EXPECT_EQ(rep.at(0), RInterval(Rational(0), Rational(0)));
    EXPECT_EQ(rep.at(1), RInterval(Rational(1), Rational(1)));
    EXPECT_EQ(rep.at(2), RInterval(Rational(2), Rational(2)));
}

TEST(IntervalOrderRep, PaperBranchThreeClosure) {
    Graph g = fixtures::exampleTenGraph();
    Poset p = fixtures::exampleTenPoset();
    LabeledDecomposition ld = referenceLabeled(g, fixtures::exampleTenSigma(g));
    std::vector<int> s = closure(g, ld, 3);
    auto rep = intervalOrderRep(p, s);
    expectIntervalLaw(p, s, rep);
    EXPECT_EQ(rep.at(g.indexOf("a")), RInterval(Rational(0), Rational(0)));
    EXPECT_EQ(rep.at(g.indexOf("c")), RInterval(Rational(0), Rational(1)));
    EXPECT_EQ(rep.at(g.indexOf("d")), RInterval(Rational(1), Rational(1)));
    EXPECT_EQ(rep.at(g.indexOf("e")), RInterval(Rational(1), Rational(2)));
    EXPECT_EQ(rep.at(g.indexOf("f")), RInterval(Rational(1), Rational(1)));
    EXPECT_EQ(rep.at(g.indexOf("g")), RInterval(Rational(2), Rational(2)));
}

TEST(IntervalOrderRep, TwoPlusTwoRejected) {
    Poset p = posetFromCovers({"a", "b", "c", "d"}, {{"a", "b"}, {"c", "d"}});
    try {
        intervalOrderRep(p, {0, 1, 2, 3});
        FAIL() << "expected TwoPlusTwoError";
    } catch (const TwoPlusTwoError& e) {
        std::set<std::string> w(e.witness.begin(), e.witness.end());
        EXPECT_EQ(w, (std::set<std::string>{"a", "b", "c", "d"}));
    }
}

TEST(IntervalOrderRep, LawOnRandomIntervalOrders) {
    for (std::uint64_t seed = 1; seed <= 60; ++seed) {
        Poset p = genIntervalOrder({9, 0.5, seed});
        std::vector<int> all;
        for (int v = 0; v < p.size(); ++v) all.push_back(v);
        expectIntervalLaw(p, all, intervalOrderRep(p, all));
    }
}

TEST(ShrinkToAnchors, PaperBranchThreeAnchors) {
    Graph g = fixtures::exampleTenGraph();
    Poset p = fixtures::exampleTenPoset();
    LabeledDecomposition ld = referenceLabeled(g, fixtures::exampleTenSigma(g));
    std::vector<int> s = closure(g, ld, 3);
    AnchoredIntervalRep arep = shrinkToAnchors(intervalOrderRep(p, s), g, ld, 3);
    ASSERT_EQ(arep.anchors.size(), 3u);
    EXPECT_EQ(arep.anchors.at(0), Rational(0));
    EXPECT_EQ(arep.anchors.at(2), Rational(1));
    EXPECT_EQ(arep.anchors.at(4), Rational(2));
    // Interface vertices collapse onto their anchors.
    EXPECT_EQ(arep.intervals.at(g.indexOf("a")), RInterval(Rational(0), Rational(0)));
    EXPECT_EQ(arep.intervals.at(g.indexOf("d")), RInterval(Rational(1), Rational(1)));
    EXPECT_EQ(arep.intervals.at(g.indexOf("f")), RInterval(Rational(1), Rational(1)));
    EXPECT_EQ(arep.intervals.at(g.indexOf("g")), RInterval(Rational(2), Rational(2)));
}

TEST(ShrinkToAnchors, PreservesIntersectionPattern) {
    Graph g = fixtures::exampleTenGraph();
    Poset p = fixtures::exampleTenPoset();
    LabeledDecomposition ld = referenceLabeled(g, fixtures::exampleTenSigma(g));
    for (int idx = 0; idx <= 5; ++idx) {
        std::vector<int> s = closure(g, ld, idx);
        auto before = intervalOrderRep(p, s);
        AnchoredIntervalRep after = shrinkToAnchors(before, g, ld, idx);
        for (int x : s)
            for (int y : s) {
                if (x >= y) continue;
                EXPECT_EQ(before.at(x).intersects(before.at(y)),
                          after.intervals.at(x).intersects(after.intervals.at(y)))
                    << "branch " << idx << ": " << g.label(x) << "," << g.label(y);
            }
    }
}

TEST(ShrinkToAnchors, SingletonInterfacesAnchorAtSharedPoint) {
    Graph g = fixtures::exampleTenGraph();
    Poset p = fixtures::exampleTenPoset();
    LabeledDecomposition ld = referenceLabeled(g, fixtures::exampleTenSigma(g));
    std::vector<int> s = closure(g, ld, 1);  // {b, a, d}
    AnchoredIntervalRep arep = shrinkToAnchors(intervalOrderRep(p, s), g, ld, 1);
    EXPECT_EQ(arep.anchors.at(0), Rational(0));
    EXPECT_EQ(arep.anchors.at(2), Rational(1));
}

TEST(ShrinkToAnchors, BadPartitionHasEmptyRegion) {
    Graph g = fixtures::path(4);
    Ordering sigma = *umbrellaFreeOrdering(g);
    Poset p = posetFromOrientation(g, *transitiveOrientation(g));
    // Splitting the path as {1,4} | {2,3} makes the interface all of P4,
    // which is not a clique, so its intervals share no common point.
    std::vector<std::vector<int>> groups{{0, 3}, {1, 2}};
    LabeledDecomposition ld = labelBranchSets(decompositionFromGroups(g, groups, sigma), sigma);
    int idx = ld.indexOfBranch[0];
    std::vector<int> s = closure(g, ld, idx);
    EXPECT_THROW(shrinkToAnchors(intervalOrderRep(p, s), g, ld, idx), EmptyCliqueRegionError);
}

TEST(RestrictToBranch, IdentityWhenClosureEqualsBranch) {
    Graph g = fixtures::complete(3);
    Ordering sigma = *umbrellaFreeOrdering(g);
    Poset p = posetFromOrientation(g, *transitiveOrientation(g));
    LabeledDecomposition ld = labelBranchSets(reducedDdMinor(g, sigma), sigma);
    std::vector<int> s = closure(g, ld, 1);
    AnchoredIntervalRep arep = shrinkToAnchors(intervalOrderRep(p, s), g, ld, 1);
    AnchoredIntervalRep restricted = restrictToBranch(arep, ld, 1);
    EXPECT_EQ(restricted.intervals.size(), 3u);
    EXPECT_TRUE(restricted.anchors.empty());
}

TEST(RestrictToBranch, PaperBranchThreeKeepsAnchors) {
    Graph g = fixtures::exampleTenGraph();
    Poset p = fixtures::exampleTenPoset();
    LabeledDecomposition ld = referenceLabeled(g, fixtures::exampleTenSigma(g));
    AnchoredIntervalRep r = buildBranchRep(g, p, ld, 3);
    std::vector<int> kept;
    for (const auto& [v, iv] : r.intervals) kept.push_back(v);
    EXPECT_EQ(labelSet(g, kept), (std::set<std::string>{"c", "e"}));
    ASSERT_EQ(r.anchors.size(), 3u);
    EXPECT_EQ(r.anchors.at(0), Rational(0));
    EXPECT_EQ(r.anchors.at(2), Rational(1));
    EXPECT_EQ(r.anchors.at(4), Rational(2));
}

TEST(RestrictToBranch, PaperBranchOneAnchorsInsideInterval) {
    Graph g = fixtures::exampleTenGraph();
    Poset p = fixtures::exampleTenPoset();
    LabeledDecomposition ld = referenceLabeled(g, fixtures::exampleTenSigma(g));
    AnchoredIntervalRep r = buildBranchRep(g, p, ld, 1);
    ASSERT_EQ(r.intervals.size(), 1u);
    const RInterval& ib = r.intervals.at(g.indexOf("b"));
    EXPECT_TRUE(ib.contains(r.anchors.at(0)));
    EXPECT_TRUE(ib.contains(r.anchors.at(2)));
}

TEST(BranchRep, RestrictedIntersectionGraphMatchesInducedSubgraph) {
    for (std::uint64_t seed = 1; seed <= 50; ++seed) {
        Poset p = genIntervalOrder({10, 0.5, seed});
        Graph g = cocomparabilityGraph(p);
        Ordering sigma = linearExtension(p);
        LabeledDecomposition ld = labelBranchSets(reducedDdMinor(g, sigma), sigma);
        for (int id = 0; id < ld.bd.branchCount(); ++id) {
            int idx = ld.indexOfBranch[id];
            AnchoredIntervalRep r = buildBranchRep(g, p, ld, idx);
            const auto& branch = ld.bd.branchSets[id];
            for (int x : branch)
                for (int y : branch) {
                    if (x >= y) continue;
                    EXPECT_EQ(r.intervals.at(x).intersects(r.intervals.at(y)), g.adjacent(x, y))
                        << "seed " << seed;
                }
        }
    }
}

TEST(BranchRep, AnchorsStrictlyIncreaseWithNeighborIndex) {
    for (std::uint64_t seed = 1; seed <= 50; ++seed) {
        Poset p = genIntervalOrder({10, 0.5, seed});
        Graph g = cocomparabilityGraph(p);
        Ordering sigma = linearExtension(p);
        LabeledDecomposition ld = labelBranchSets(reducedDdMinor(g, sigma), sigma);
        for (int id = 0; id < ld.bd.branchCount(); ++id) {
            AnchoredIntervalRep r = buildBranchRep(g, p, ld, ld.indexOfBranch[id]);
            Rational prev;
            bool first = true;
            for (const auto& [idx, pt] : r.anchors) {
                if (!first) EXPECT_LT(prev, pt) << "seed " << seed;
                prev = pt;
                first = false;
            }
        }
    }
}
