#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <string>
#include <utility>
#include <vector>

#include "vpg0/errors.hpp"
#include "vpg0/graph.hpp"
#include "vpg0/poset.hpp"

namespace vpg0 {

// SplitMix64: the fixed pseudo-random source for all generators. Chosen for
// portability; the exact stream is part of the instance-reproducibility
// contract, see README.
struct SplitMix64 {
    std::uint64_t state;

    explicit SplitMix64(std::uint64_t seed) : state(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state += 0x9E3779B97F4A7C15ULL);
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    }

    // Bounded draw by plain modulo; the bias is irrelevant here and the
    // result is identical on every platform.
    std::uint64_t below(std::uint64_t n) { return n == 0 ? 0 : next() % n; }

    double unit() { return (double)(next() >> 11) * (1.0 / 9007199254740992.0); }
};

struct GenConfig {
    int n = 8;
    double density = 0.5;
    std::uint64_t seed = 1;
};

namespace detail {

inline std::vector<std::string> genLabels(int n) {
    std::vector<std::string> labels;
    for (int i = 1; i <= n; ++i) labels.push_back("v" + std::to_string(i));
    return labels;
}

}  // namespace detail

// Random linear order, each forward pair kept with probability density,
// then the transitive closure.
inline Poset genRandomPoset(const GenConfig& cfg) {
    if (cfg.n < 1) throw std::invalid_argument("n must be at least 1");
    SplitMix64 rng(cfg.seed);
    const int n = cfg.n;
    std::vector<int> order(n);
    std::iota(order.begin(), order.end(), 0);
    for (int i = n - 1; i > 0; --i)
        std::swap(order[i], order[rng.below(i + 1)]);

    std::vector<std::vector<char>> less(n, std::vector<char>(n, 0));
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (rng.unit() < cfg.density) less[order[i]][order[j]] = 1;
    for (int w = 0; w < n; ++w)
        for (int u = 0; u < n; ++u)
            if (less[u][w])
                for (int v = 0; v < n; ++v)
                    if (less[w][v]) less[u][v] = 1;
    return Poset(detail::genLabels(n), std::move(less));
}

// Interval order from explicit closed intervals: x < y iff x's interval is
// disjoint from and entirely left of y's.
inline Poset posetFromIntervals(const std::vector<std::pair<long, long>>& intervals) {
    const int n = (int)intervals.size();
    std::vector<std::vector<char>> less(n, std::vector<char>(n, 0));
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y)
            if (x != y && intervals[x].second < intervals[y].first) less[x][y] = 1;
    return Poset(detail::genLabels(n), std::move(less));
}

// n random integer intervals on [0, 4n); provably (2+2)-free.
inline Poset genIntervalOrder(const GenConfig& cfg) {
    if (cfg.n < 1) throw std::invalid_argument("n must be at least 1");
    SplitMix64 rng(cfg.seed);
    std::vector<std::pair<long, long>> intervals;
    for (int i = 0; i < cfg.n; ++i) {
        long a = (long)rng.below(4 * (std::uint64_t)cfg.n);
        long b = (long)rng.below(4 * (std::uint64_t)cfg.n);
        intervals.emplace_back(std::min(a, b), std::max(a, b));
    }
    return posetFromIntervals(intervals);
}

// Permutation diagram that is a shuffle of two increasing sequences:
// classOf[i] gives the part of position i, and the positions of part 0 take
// the sorted values in valuesForPart0 while part 1 takes the complement in
// sorted order. Inversions then only straddle the two parts, which is
// exactly the bipartite permutation pattern.
inline Graph bipartitePermutationFromShuffle(const std::vector<int>& classOf,
                                             const std::vector<int>& valuesForPart0) {
    const int n = (int)classOf.size();
    std::vector<char> taken(n, 0);
    for (int v : valuesForPart0) {
        if (v < 0 || v >= n || taken[v]) throw std::invalid_argument("bad value set");
        taken[v] = 1;
    }
    std::vector<int> part0 = valuesForPart0;
    std::sort(part0.begin(), part0.end());
    std::vector<int> part1;
    for (int v = 0; v < n; ++v)
        if (!taken[v]) part1.push_back(v);

    std::vector<int> pi(n);
    size_t i0 = 0, i1 = 0;
    for (int i = 0; i < n; ++i) pi[i] = classOf[i] == 0 ? part0[i0++] : part1[i1++];

    Graph g(detail::genLabels(n));
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (classOf[i] != classOf[j] && pi[i] > pi[j]) g.addEdge(i, j);
    return g;
}

inline Graph genBipartitePermutation(const GenConfig& cfg) {
    if (cfg.n < 1) throw std::invalid_argument("n must be at least 1");
    SplitMix64 rng(cfg.seed);
    const int n = cfg.n;
    std::vector<int> classOf(n);
    int count0 = 0;
    for (int i = 0; i < n; ++i) {
        classOf[i] = rng.unit() < cfg.density ? 1 : 0;
        if (classOf[i] == 0) ++count0;
    }
    std::vector<int> values(n);
    std::iota(values.begin(), values.end(), 0);
    for (int i = n - 1; i > 0; --i)
        std::swap(values[i], values[rng.below(i + 1)]);
    values.resize(count0);
    return bipartitePermutationFromShuffle(classOf, values);
}

namespace detail {

// Backtracking isomorphism over vertices grouped by a refinement code.
class IsoTester {
public:
    IsoTester(const std::vector<std::vector<char>>& a, const std::vector<std::vector<char>>& b,
              const std::vector<std::uint64_t>& codeA, const std::vector<std::uint64_t>& codeB)
        : a_(a), b_(b), codeA_(codeA), codeB_(codeB), n_((int)a.size()), map_(n_, -1),
          used_(n_, 0) {}

    bool run() { return extend(0); }

private:
    bool extend(int v) {
        if (v == n_) return true;
        for (int w = 0; w < n_; ++w) {
            if (used_[w] || codeA_[v] != codeB_[w]) continue;
            bool ok = true;
            for (int u = 0; u < v && ok; ++u)
                if (a_[v][u] != b_[w][map_[u]]) ok = false;
            if (!ok) continue;
            map_[v] = w;
            used_[w] = 1;
            if (extend(v + 1)) return true;
            used_[w] = 0;
        }
        return false;
    }

    const std::vector<std::vector<char>>& a_;
    const std::vector<std::vector<char>>& b_;
    const std::vector<std::uint64_t>& codeA_;
    const std::vector<std::uint64_t>& codeB_;
    int n_;
    std::vector<int> map_;
    std::vector<char> used_;
};

inline std::vector<std::uint64_t> refineCodes(const std::vector<std::vector<char>>& adj,
                                              int rounds) {
    const int n = (int)adj.size();
    std::vector<std::uint64_t> code(n);
    for (int v = 0; v < n; ++v) {
        int d = 0;
        for (int u = 0; u < n; ++u) d += adj[v][u];
        code[v] = (std::uint64_t)d;
    }
    for (int r = 0; r < rounds; ++r) {
        std::vector<std::uint64_t> next(n);
        for (int v = 0; v < n; ++v) {
            std::vector<std::uint64_t> nb;
            for (int u = 0; u < n; ++u)
                if (adj[v][u]) nb.push_back(code[u]);
            std::sort(nb.begin(), nb.end());
            std::uint64_t h = code[v] * 1099511628211ULL + 14695981039346656037ULL;
            for (std::uint64_t x : nb) h = (h ^ x) * 1099511628211ULL;
            next[v] = h;
        }
        code = next;
    }
    return code;
}

inline std::string signatureOf(const std::vector<std::uint64_t>& codes) {
    std::vector<std::uint64_t> sorted = codes;
    std::sort(sorted.begin(), sorted.end());
    std::string s;
    for (std::uint64_t c : sorted) s += std::to_string(c) + ",";
    return s;
}

}  // namespace detail

// All graphs on n labeled vertices up to isomorphism, built by vertex
// augmentation from the (n-1)-vertex list with exact within-bucket
// isomorphism dedup. Counts match the known sequence 1, 2, 4, 11, 34, 156,
// 1044, 12346.
inline std::vector<Graph> enumerateGraphs(int n) {
    if (n < 1 || n > 8) throw SizeLimitError("enumerateGraphs supports 1 <= n <= 8");

    using Adj = std::vector<std::vector<char>>;
    std::vector<Adj> current{Adj{{0}}};  // the one-vertex graph
    for (int k = 2; k <= n; ++k) {
        std::map<std::string, std::vector<int>> buckets;  // signature -> indices into next
        std::vector<Adj> next;
        std::vector<std::vector<std::uint64_t>> codes;
        for (const Adj& base : current) {
            for (std::uint32_t nb = 0; nb < (1u << (k - 1)); ++nb) {
                Adj cand(k, std::vector<char>(k, 0));
                for (int i = 0; i < k - 1; ++i)
                    for (int j = 0; j < k - 1; ++j) cand[i][j] = base[i][j];
                for (int i = 0; i < k - 1; ++i)
                    if (nb & (1u << i)) cand[i][k - 1] = cand[k - 1][i] = 1;

                auto code = detail::refineCodes(cand, 2);
                std::string sig = detail::signatureOf(code);
                bool dup = false;
                for (int idx : buckets[sig]) {
                    detail::IsoTester t(cand, next[idx], code, codes[idx]);
                    if (t.run()) {
                        dup = true;
                        break;
                    }
                }
                if (!dup) {
                    buckets[sig].push_back((int)next.size());
                    next.push_back(std::move(cand));
                    codes.push_back(std::move(code));
                }
            }
        }
        current = std::move(next);
    }

    std::vector<Graph> out;
    for (const Adj& adj : current) {
        Graph g(detail::genLabels(n));
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v)
                if (adj[u][v]) g.addEdge(u, v);
        out.push_back(std::move(g));
    }
    return out;
}

// Exhaustive search for a transitive orientation of the complement, written
// independently of the recognition path: bit enumeration over orientations
// when the complement is small, otherwise orientation along each vertex
// permutation (every transitive orientation is recovered by its own linear
// extension).
inline bool oracleCocomparability(const Graph& g) {
    const int n = g.size();
    if (n > 8) throw SizeLimitError("oracleCocomparability supports n <= 8");
    if (n <= 2) return true;

    std::vector<std::pair<int, int>> nonEdges;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (!g.adjacent(u, v)) nonEdges.emplace_back(u, v);
    const int m = (int)nonEdges.size();

    auto transitive = [&](const std::vector<std::vector<char>>& to) {
        for (int u = 0; u < n; ++u)
            for (int v = 0; v < n; ++v)
                if (to[u][v])
                    for (int w = 0; w < n; ++w)
                        if (to[v][w] && !to[u][w]) return false;
        return true;
    };

    if (m <= 16) {
        for (std::uint32_t bits = 0; bits < (1u << m); ++bits) {
            std::vector<std::vector<char>> to(n, std::vector<char>(n, 0));
            for (int e = 0; e < m; ++e) {
                auto [u, v] = nonEdges[e];
                if (bits & (1u << e))
                    to[u][v] = 1;
                else
                    to[v][u] = 1;
            }
            if (transitive(to)) return true;
        }
        return false;
    }

    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    do {
        std::vector<std::vector<char>> to(n, std::vector<char>(n, 0));
        std::vector<int> pos(n);
        for (int i = 0; i < n; ++i) pos[perm[i]] = i;
        for (auto [u, v] : nonEdges) {
            if (pos[u] < pos[v])
                to[u][v] = 1;
            else
                to[v][u] = 1;
        }
        if (transitive(to)) return true;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return false;
}

}  // namespace vpg0
