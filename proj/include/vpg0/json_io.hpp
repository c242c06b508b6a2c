#pragma once

#include <algorithm>
#include <map>
#include <string>
#include <vector>

#include "json.hpp"
#include "vpg0/characterization.hpp"
#include "vpg0/layout.hpp"
#include "vpg0/minor.hpp"
#include "vpg0/verify.hpp"

namespace vpg0 {

using Json = nlohmann::ordered_json;

inline Json witnessToJson(const Graph& g, const B0Witness& w) {
    Json j;
    if (const auto* c = std::get_if<C4PairWitness>(&w)) {
        j["type"] = "c4pair";
        Json c4 = Json::array();
        for (int v : c->c4) c4.push_back(g.label(v));
        j["c4"] = c4;
        j["u"] = g.label(c->u);
        j["v"] = g.label(c->v);
        Json path = Json::array();
        for (auto [x, y] : c->diagonalPath) path.push_back({g.label(x), g.label(y)});
        j["diagonalPath"] = path;
    } else if (const auto* six = std::get_if<CoC6Witness>(&w)) {
        j["type"] = "coC6";
        Json s = Json::array();
        for (int v : six->six) s.push_back(g.label(v));
        j["six"] = s;
    } else {
        j["type"] = "not-cocomparability";
    }
    return j;
}

inline Json classificationToJson(const Graph& g, const Classification& c) {
    Json j;
    switch (c.verdict) {
        case Verdict::Yes: j["verdict"] = "yes"; break;
        case Verdict::No: j["verdict"] = "no"; break;
        case Verdict::NotCocomparability: j["verdict"] = "not-cocomparability"; break;
    }
    if (c.witness) j["witness"] = witnessToJson(g, *c.witness);
    return j;
}

// {"branches": {"0": ["a"], ...}, "quotientEdges": [[0, 1], ...]} keyed by
// the assigned branch indices.
inline Json decompositionToJson(const Graph& g, const LabeledDecomposition& ld) {
    Json branches = Json::object();
    std::vector<int> indices;
    for (int id = 0; id < ld.bd.branchCount(); ++id) indices.push_back(ld.indexOfBranch[id]);
    std::sort(indices.begin(), indices.end());
    for (int idx : indices) {
        Json vs = Json::array();
        for (int v : ld.bd.branchSets[ld.branchOfIndex[idx]]) vs.push_back(g.label(v));
        branches[std::to_string(idx)] = vs;
    }
    Json edges = Json::array();
    std::vector<std::pair<int, int>> pairs;
    for (int i = 0; i < ld.bd.branchCount(); ++i)
        for (int j = i + 1; j < ld.bd.branchCount(); ++j)
            if (ld.bd.quotientEdge(i, j)) {
                int a = ld.indexOfBranch[i], b = ld.indexOfBranch[j];
                pairs.emplace_back(std::min(a, b), std::max(a, b));
            }
    std::sort(pairs.begin(), pairs.end());
    for (auto [a, b] : pairs) edges.push_back({a, b});
    Json j;
    j["branches"] = branches;
    j["quotientEdges"] = edges;
    return j;
}

// Canonical drawing schema: segments sorted by vertex label, rationals as
// "num/den" strings. Emission of a parsed drawing is byte-identical.
inline Json drawingToJson(const Drawing& d) {
    std::vector<int> order(d.size());
    for (int i = 0; i < d.size(); ++i) order[i] = i;
    std::sort(order.begin(), order.end(),
              [&](int a, int b) { return d.labels[a] < d.labels[b]; });
    Json segs = Json::array();
    for (int v : order) {
        const Segment& s = d.segments[v];
        Json e;
        e["v"] = d.labels[v];
        e["dir"] = s.vertical ? "V" : "H";
        e["at"] = s.at.str();
        e["span"] = {s.span.lo.str(), s.span.hi.str()};
        segs.push_back(e);
    }
    Json j;
    j["segments"] = segs;
    return j;
}

inline std::string drawingToJsonText(const Drawing& d) { return drawingToJson(d).dump(2) + "\n"; }

inline Drawing drawingFromJson(const Json& j) {
    if (!j.contains("segments") || !j["segments"].is_array())
        throw std::invalid_argument("drawing JSON needs a 'segments' array");
    Drawing d;
    for (const auto& e : j["segments"]) {
        if (!e.contains("v") || !e.contains("dir") || !e.contains("at") || !e.contains("span") ||
            !e["span"].is_array() || e["span"].size() != 2)
            throw std::invalid_argument("segment entry missing v/dir/at/span");
        std::string dir = e["dir"].get<std::string>();
        if (dir != "V" && dir != "H") throw std::invalid_argument("segment dir must be V or H");
        Segment s;
        s.vertical = dir == "V";
        s.at = Rational::parse(e["at"].get<std::string>());
        s.span = RInterval(Rational::parse(e["span"][0].get<std::string>()),
                           Rational::parse(e["span"][1].get<std::string>()));
        d.labels.push_back(e["v"].get<std::string>());
        d.segments.push_back(s);
    }
    for (size_t i = 0; i < d.labels.size(); ++i)
        for (size_t k = i + 1; k < d.labels.size(); ++k)
            if (d.labels[i] == d.labels[k])
                throw std::invalid_argument("duplicate segment vertex " + d.labels[i]);
    return d;
}

inline Json orderCheckReportToJson(const Drawing& d, const OrderCheckReport& rep) {
    Json violations = Json::array();
    for (const auto& v : rep.violations)
        violations.push_back({{"x", d.labels[v.x]}, {"y", d.labels[v.y]}, {"what", v.what}});
    Json j;
    j["pass"] = rep.pass();
    j["pairsChecked"] = rep.pairsChecked;
    j["violations"] = violations;
    return j;
}

inline Json validationReportToJson(const ValidationReport& rep) {
    Json checks = Json::array();
    for (const auto& c : rep.checks) {
        Json e;
        e["name"] = c.name;
        e["pass"] = c.pass;
        if (!c.detail.empty()) e["detail"] = c.detail;
        checks.push_back(e);
    }
    Json j;
    j["pass"] = rep.pass();
    j["checks"] = checks;
    return j;
}

}  // namespace vpg0
