#pragma once

#include <string>
#include <vector>

#include "vpg0/graph.hpp"
#include "vpg0/io.hpp"
#include "vpg0/poset.hpp"

namespace fixtures {

using vpg0::Graph;
using vpg0::Ordering;
using vpg0::Poset;

// The ten-vertex running example: cocomparability graph with 18 edges.
inline Graph exampleTenGraph() {
    Graph g({"a", "b", "c", "d", "e", "f", "g", "h", "i", "j"});
    for (auto [u, v] : std::vector<std::pair<const char*, const char*>>{
             {"a", "b"}, {"a", "c"}, {"c", "d"}, {"b", "d"}, {"c", "e"}, {"e", "f"},
             {"e", "d"}, {"e", "g"}, {"g", "h"}, {"f", "h"}, {"i", "g"}, {"i", "f"},
             {"i", "j"}, {"g", "j"}, {"h", "j"}, {"i", "h"}, {"d", "f"}, {"c", "f"}})
        g.addEdge(u, v);
    return g;
}

// Its companion poset, given by Hasse covers.
inline Poset exampleTenPoset() {
    std::vector<std::pair<std::string, std::string>> covers;
    for (auto [u, v] : std::vector<std::pair<const char*, const char*>>{
             {"a", "e"}, {"a", "d"}, {"a", "f"}, {"b", "e"}, {"b", "c"}, {"b", "f"},
             {"e", "i"}, {"e", "h"}, {"e", "j"}, {"d", "i"}, {"d", "h"}, {"d", "j"},
             {"d", "g"}, {"c", "i"}, {"c", "h"}, {"c", "j"}, {"c", "g"}, {"f", "j"},
             {"f", "g"}})
        covers.emplace_back(u, v);
    return vpg0::posetFromCovers({"a", "b", "c", "d", "e", "f", "g", "h", "i", "j"}, covers);
}

// The linear extension used throughout: (b, a, c, d, f, e, g, i, h, j).
inline Ordering exampleTenSigma(const Graph& g) {
    std::vector<int> seq;
    for (const char* l : {"b", "a", "c", "d", "f", "e", "g", "i", "h", "j"})
        seq.push_back(g.indexOf(l));
    return Ordering::fromSequence(seq);
}

inline Graph cycle(int n) {
    std::vector<std::string> labels;
    for (int i = 1; i <= n; ++i) labels.push_back(std::to_string(i));
    Graph g(labels);
    for (int i = 0; i < n; ++i) g.addEdge(i, (i + 1) % n);
    return g;
}

inline Graph path(int n) {
    std::vector<std::string> labels;
    for (int i = 1; i <= n; ++i) labels.push_back(std::to_string(i));
    Graph g(labels);
    for (int i = 0; i + 1 < n; ++i) g.addEdge(i, i + 1);
    return g;
}

inline Graph complete(int n) {
    std::vector<std::string> labels;
    for (int i = 1; i <= n; ++i) labels.push_back(std::to_string(i));
    Graph g(labels);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) g.addEdge(i, j);
    return g;
}

inline Graph edgeless(int n) {
    std::vector<std::string> labels;
    for (int i = 1; i <= n; ++i) labels.push_back(std::to_string(i));
    return Graph(labels);
}

// Triangular prism = complement of C6: triangles {1,3,5} and {2,4,6} plus
// the matching 14, 25, 36.
inline Graph prism() { return vpg0::complement(cycle(6)); }

// C4 on a, b, c, d (cycle order) plus a universal vertex u.
inline Graph wheel4() {
    Graph g({"a", "b", "c", "d", "u"});
    g.addEdge("a", "b");
    g.addEdge("b", "c");
    g.addEdge("c", "d");
    g.addEdge("d", "a");
    for (const char* x : {"a", "b", "c", "d"}) g.addEdge("u", x);
    return g;
}

// Diamond: C4 a-b-c-d plus the chord ac.
inline Graph diamond() {
    Graph g({"a", "b", "c", "d"});
    g.addEdge("a", "b");
    g.addEdge("b", "c");
    g.addEdge("c", "d");
    g.addEdge("d", "a");
    g.addEdge("a", "c");
    return g;
}

}  // namespace fixtures
