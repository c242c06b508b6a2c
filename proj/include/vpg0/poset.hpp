#pragma once

#include <algorithm>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "vpg0/errors.hpp"
#include "vpg0/graph.hpp"

namespace vpg0 {

// Strict partial order stored as its full comparability relation, so that
// less(u, v) is a single lookup. Covers are an input format only.
class Poset {
public:
    Poset() = default;

    // Takes the closure relation directly; validates strictness.
    Poset(std::vector<std::string> elements, std::vector<std::vector<char>> less)
        : elements_(std::move(elements)), less_(std::move(less)) {
        const int n = (int)elements_.size();
        if ((int)less_.size() != n) throw std::invalid_argument("relation size mismatch");
        for (int i = 0; i < n; ++i) {
            if (!index_.emplace(elements_[i], i).second)
                throw std::invalid_argument("duplicate element label: " + elements_[i]);
            if ((int)less_[i].size() != n) throw std::invalid_argument("relation size mismatch");
        }
        for (int u = 0; u < n; ++u) {
            if (less_[u][u]) throw std::invalid_argument("relation not irreflexive");
            for (int v = 0; v < n; ++v) {
                if (less_[u][v] && less_[v][u])
                    throw std::invalid_argument("relation not antisymmetric");
                if (!less_[u][v]) continue;
                for (int w = 0; w < n; ++w)
                    if (less_[v][w] && !less_[u][w])
                        throw std::invalid_argument("relation not transitive");
            }
        }
    }

    int size() const { return (int)elements_.size(); }
    const std::vector<std::string>& elements() const { return elements_; }
    const std::string& element(int i) const { return elements_.at(i); }

    int indexOf(const std::string& l) const {
        auto it = index_.find(l);
        if (it == index_.end()) throw std::invalid_argument("unknown element label: " + l);
        return it->second;
    }

    bool less(int u, int v) const { return less_[u][v] != 0; }
    bool less(const std::string& u, const std::string& v) const {
        return less(indexOf(u), indexOf(v));
    }
    bool comparable(int u, int v) const { return less_[u][v] || less_[v][u]; }

    // Cover pairs (u, v): u < v with no w strictly between.
    std::vector<std::pair<int, int>> covers() const {
        std::vector<std::pair<int, int>> out;
        const int n = size();
        for (int u = 0; u < n; ++u)
            for (int v = 0; v < n; ++v) {
                if (!less_[u][v]) continue;
                bool cover = true;
                for (int w = 0; w < n && cover; ++w)
                    if (less_[u][w] && less_[w][v]) cover = false;
                if (cover) out.emplace_back(u, v);
            }
        return out;
    }

    friend bool operator==(const Poset& a, const Poset& b) {
        return a.elements_ == b.elements_ && a.less_ == b.less_;
    }

private:
    std::vector<std::string> elements_;
    std::unordered_map<std::string, int> index_;
    std::vector<std::vector<char>> less_;
};

// Builds the strict order as the transitive closure of the given cover
// digraph. Throws CycleError when the covers contain a directed cycle.
inline Poset posetFromCovers(const std::vector<std::string>& elements,
                             const std::vector<std::pair<std::string, std::string>>& covers) {
    const int n = (int)elements.size();
    std::unordered_map<std::string, int> index;
    for (int i = 0; i < n; ++i)
        if (!index.emplace(elements[i], i).second)
            throw std::invalid_argument("duplicate element label: " + elements[i]);

    std::vector<std::vector<char>> less(n, std::vector<char>(n, 0));
    for (const auto& [a, b] : covers) {
        auto ia = index.find(a), ib = index.find(b);
        if (ia == index.end()) throw std::invalid_argument("unknown element label: " + a);
        if (ib == index.end()) throw std::invalid_argument("unknown element label: " + b);
        if (ia->second == ib->second) throw CycleError("cover from " + a + " to itself");
        less[ia->second][ib->second] = 1;
    }
    // Warshall closure.
    for (int w = 0; w < n; ++w)
        for (int u = 0; u < n; ++u)
            if (less[u][w])
                for (int v = 0; v < n; ++v)
                    if (less[w][v]) less[u][v] = 1;
    for (int u = 0; u < n; ++u) {
        if (less[u][u]) throw CycleError("covers contain a directed cycle through " + elements[u]);
        for (int v = u + 1; v < n; ++v)
            if (less[u][v] && less[v][u])
                throw CycleError("covers contain a directed cycle through " + elements[u]);
    }
    return Poset(elements, std::move(less));
}

// Edge uv iff u and v are incomparable. Vertex list order matches the
// element list order, so indices line up across the pair.
inline Graph cocomparabilityGraph(const Poset& p) {
    Graph g(p.elements());
    for (int u = 0; u < p.size(); ++u)
        for (int v = u + 1; v < p.size(); ++v)
            if (!p.comparable(u, v)) g.addEdge(u, v);
    return g;
}

// Permutation of 0..n-1 plus its inverse; shared by graphs and posets over
// the same label universe.
struct Ordering {
    std::vector<int> seq;  // position -> vertex
    std::vector<int> pos;  // vertex -> position

    Ordering() = default;

    static Ordering fromSequence(std::vector<int> sequence) {
        Ordering o;
        o.seq = std::move(sequence);
        o.pos.assign(o.seq.size(), -1);
        for (int i = 0; i < (int)o.seq.size(); ++i) {
            int v = o.seq[i];
            if (v < 0 || v >= (int)o.seq.size() || o.pos[v] != -1)
                throw std::invalid_argument("sequence is not a permutation");
            o.pos[v] = i;
        }
        return o;
    }

    int size() const { return (int)seq.size(); }
    bool before(int u, int v) const { return pos[u] < pos[v]; }
};

inline bool isLinearExtension(const Poset& p, const Ordering& ord) {
    if (ord.size() != p.size()) throw std::invalid_argument("ordering does not cover the poset");
    for (int u = 0; u < p.size(); ++u)
        for (int v = 0; v < p.size(); ++v)
            if (p.less(u, v) && !ord.before(u, v)) return false;
    return true;
}

// Deterministic linear extension: repeatedly remove the minimal element
// that comes earliest in the input element order.
inline Ordering linearExtension(const Poset& p) {
    const int n = p.size();
    std::vector<char> removed(n, 0);
    std::vector<int> seq;
    seq.reserve(n);
    for (int step = 0; step < n; ++step) {
        int pick = -1;
        for (int v = 0; v < n && pick < 0; ++v) {
            if (removed[v]) continue;
            bool minimal = true;
            for (int u = 0; u < n && minimal; ++u)
                if (!removed[u] && p.less(u, v)) minimal = false;
            if (minimal) pick = v;
        }
        removed[pick] = 1;
        seq.push_back(pick);
    }
    return Ordering::fromSequence(std::move(seq));
}

}  // namespace vpg0
