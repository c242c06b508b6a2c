#pragma once

#include <istream>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "vpg0/errors.hpp"
#include "vpg0/graph.hpp"
#include "vpg0/poset.hpp"

namespace vpg0 {

namespace detail {

struct LineReader {
    std::istream& in;
    int lineNo = 0;

    // Returns false at EOF; skips blank lines.
    bool next(std::string& out) {
        while (std::getline(in, out)) {
            ++lineNo;
            while (!out.empty() && (out.back() == '\r' || out.back() == ' ' || out.back() == '\t'))
                out.pop_back();
            if (!out.empty()) return true;
        }
        return false;
    }

    std::string require(const std::string& what) {
        std::string s;
        if (!next(s)) throw ParseError(lineNo + 1, "unexpected end of file, expected " + what);
        return s;
    }
};

inline std::vector<std::string> splitWs(const std::string& s) {
    std::istringstream iss(s);
    std::vector<std::string> out;
    std::string tok;
    while (iss >> tok) out.push_back(tok);
    return out;
}

}  // namespace detail

// Text format:
//   graph <n>
//   <label>        (n lines)
//   edges
//   <u> <v>        (one per line)
inline Graph parseGraph(std::istream& in) {
    detail::LineReader r{in};
    auto header = detail::splitWs(r.require("'graph <n>' header"));
    if (header.size() != 2 || header[0] != "graph")
        throw ParseError(r.lineNo, "expected 'graph <n>' header");
    int n;
    try {
        n = std::stoi(header[1]);
    } catch (const std::logic_error&) {
        throw ParseError(r.lineNo, "bad vertex count: " + header[1]);
    }
    if (n < 0) throw ParseError(r.lineNo, "negative vertex count");

    std::vector<std::string> labels;
    for (int i = 0; i < n; ++i) {
        auto toks = detail::splitWs(r.require("vertex label"));
        if (toks.size() != 1) throw ParseError(r.lineNo, "vertex label must be a single token");
        labels.push_back(toks[0]);
    }
    Graph g(labels);

    auto kw = r.require("'edges' keyword");
    if (kw != "edges") throw ParseError(r.lineNo, "expected 'edges', got '" + kw + "'");

    std::string line;
    while (r.next(line)) {
        auto toks = detail::splitWs(line);
        if (toks.size() != 2) throw ParseError(r.lineNo, "expected 'u v' edge line");
        if (!g.hasLabel(toks[0])) throw ParseError(r.lineNo, "unknown vertex label: " + toks[0]);
        if (!g.hasLabel(toks[1])) throw ParseError(r.lineNo, "unknown vertex label: " + toks[1]);
        if (toks[0] == toks[1]) throw ParseError(r.lineNo, "self-loop on " + toks[0]);
        g.addEdge(toks[0], toks[1]);
    }
    return g;
}

inline void emitGraph(const Graph& g, std::ostream& out) {
    out << "graph " << g.size() << "\n";
    for (const auto& l : g.labels()) out << l << "\n";
    out << "edges\n";
    for (auto [u, v] : g.edges()) out << g.label(u) << " " << g.label(v) << "\n";
}

// Text format:
//   poset <n>
//   <label>        (n lines)
//   covers
//   <u> < <v>      (one per line)
inline Poset parsePoset(std::istream& in) {
    detail::LineReader r{in};
    auto header = detail::splitWs(r.require("'poset <n>' header"));
    if (header.size() != 2 || header[0] != "poset")
        throw ParseError(r.lineNo, "expected 'poset <n>' header");
    int n;
    try {
        n = std::stoi(header[1]);
    } catch (const std::logic_error&) {
        throw ParseError(r.lineNo, "bad element count: " + header[1]);
    }
    if (n < 0) throw ParseError(r.lineNo, "negative element count");

    std::vector<std::string> labels;
    for (int i = 0; i < n; ++i) {
        auto toks = detail::splitWs(r.require("element label"));
        if (toks.size() != 1) throw ParseError(r.lineNo, "element label must be a single token");
        labels.push_back(toks[0]);
    }

    auto kw = r.require("'covers' keyword");
    if (kw != "covers") throw ParseError(r.lineNo, "expected 'covers', got '" + kw + "'");

    std::vector<std::pair<std::string, std::string>> covers;
    std::string line;
    while (r.next(line)) {
        auto toks = detail::splitWs(line);
        if (toks.size() != 3 || toks[1] != "<")
            throw ParseError(r.lineNo, "expected 'u < v' cover line");
        covers.emplace_back(toks[0], toks[2]);
    }
    try {
        return posetFromCovers(labels, covers);
    } catch (const CycleError& e) {
        throw ParseError(r.lineNo, e.what());
    } catch (const std::invalid_argument& e) {
        throw ParseError(r.lineNo, e.what());
    }
}

inline void emitPoset(const Poset& p, std::ostream& out) {
    out << "poset " << p.size() << "\n";
    for (const auto& l : p.elements()) out << l << "\n";
    out << "covers\n";
    for (auto [u, v] : p.covers()) out << p.element(u) << " < " << p.element(v) << "\n";
}

// Parses a comma-separated label sequence against a graph's label universe.
inline Ordering parseOrderingCsv(const Graph& g, const std::string& csv) {
    std::vector<int> seq;
    std::string tok;
    std::istringstream iss(csv);
    while (std::getline(iss, tok, ',')) {
        size_t a = tok.find_first_not_of(" \t");
        size_t b = tok.find_last_not_of(" \t");
        if (a == std::string::npos) throw std::invalid_argument("empty label in ordering");
        seq.push_back(g.indexOf(tok.substr(a, b - a + 1)));
    }
    if ((int)seq.size() != g.size())
        throw std::invalid_argument("ordering does not cover all vertices");
    return Ordering::fromSequence(std::move(seq));
}

}  // namespace vpg0
