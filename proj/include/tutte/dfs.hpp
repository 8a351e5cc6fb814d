#pragma once

#include <algorithm>
#include <array>
#include <bit>
#include <cstdint>
#include <stdexcept>
#include <vector>

#include "tutte/contracted_graph.hpp"
#include "tutte/parallel.hpp"
#include "tutte/partition.hpp"
#include "tutte/unipoly.hpp"

namespace tutte {

// A spanning subgraph of the complete graph K_m with root vertex 1.
// Vertices are labeled 1..m; the mask ranges over the C(m,2) edges of K_m in
// lexicographic order (1,2),(1,3),...,(1,m),(2,3),...
class RootedSimpleGraph {
public:
    RootedSimpleGraph(int m, std::uint64_t mask) : m_(m), mask_(mask) {
        if (m < 1 || m > 16)
            throw std::invalid_argument("RootedSimpleGraph: vertex count out of range");
        const int ecount = m * (m - 1) / 2;
        if (ecount < 64 && (mask >> ecount) != 0)
            throw std::invalid_argument("RootedSimpleGraph: mask wider than K_m edge set");
    }

    static int edge_index(int m, int a, int b) {
        if (a > b) std::swap(a, b);
        if (a < 1 || b > m || a == b)
            throw std::invalid_argument("edge_index: bad vertex pair");
        return (a - 1) * m - a * (a - 1) / 2 + (b - a - 1);
    }

    static RootedSimpleGraph from_edges(int m, const std::vector<std::pair<int, int>>& edges) {
        std::uint64_t mask = 0;
        for (const auto& [a, b] : edges) mask |= std::uint64_t(1) << edge_index(m, a, b);
        return RootedSimpleGraph(m, mask);
    }

    int vertex_count() const { return m_; }
    std::uint64_t mask() const { return mask_; }

    bool has_edge(int a, int b) const {
        return (mask_ >> edge_index(m_, a, b)) & 1u;
    }

    int degree(int label) const {
        return std::popcount(static_cast<unsigned>(neighbor_masks()[static_cast<std::size_t>(label - 1)]));
    }

    // Adjacency as vertex bitmasks, 0-based: bit j of entry i set <=> vertices
    // i+1 and j+1 adjacent.
    std::array<std::uint16_t, 16> neighbor_masks() const {
        std::array<std::uint16_t, 16> nbr{};
        int idx = 0;
        for (int a = 0; a < m_; ++a)
            for (int b = a + 1; b < m_; ++b, ++idx)
                if ((mask_ >> idx) & 1u) {
                    nbr[static_cast<std::size_t>(a)] |= std::uint16_t(1) << b;
                    nbr[static_cast<std::size_t>(b)] |= std::uint16_t(1) << a;
                }
        return nbr;
    }

private:
    int m_;
    std::uint64_t mask_;
};

namespace detail {

// Greatest-neighbor-first depth-first search from vertex 0 (label 1) over
// adjacency bitmasks. Appends every move to tau when requested: each forward
// step appends the new vertex, each backtrack appends the parent. Returns
// the visited-vertex bitmask.
template <bool RecordTau>
inline std::uint16_t dfs_walk(const std::uint16_t* nbr, std::vector<int>* tau,
                              std::vector<int>* word) {
    std::array<std::int8_t, 16> parent{};
    parent.fill(-1);
    std::uint16_t visited = 1;
    int cur = 0;
    if constexpr (RecordTau) tau->push_back(1);
    for (;;) {
        const std::uint16_t cand =
            static_cast<std::uint16_t>(nbr[static_cast<std::size_t>(cur)] & ~visited);
        if (cand) {
            const int next = 15 - std::countl_zero(static_cast<std::uint16_t>(cand));
            parent[static_cast<std::size_t>(next)] = static_cast<std::int8_t>(cur);
            visited |= std::uint16_t(1) << next;
            cur = next;
            if constexpr (RecordTau) tau->push_back(cur + 1);
            if (word) word->push_back(cur + 1);
        } else {
            if (cur == 0) break;
            cur = parent[static_cast<std::size_t>(cur)];
            if constexpr (RecordTau) tau->push_back(cur + 1);
        }
    }
    return visited;
}

inline void require_spanning_connected(std::uint16_t visited, int m) {
    if (std::popcount(static_cast<unsigned>(visited)) != m)
        throw std::invalid_argument("dfs: graph is not spanning connected");
}

// Subword lengths of the first-visit word, cut in front of every letter
// adjacent to the root, in traversal order. Returns the subword count (the
// root degree). The first letter is always root-adjacent.
inline int dfs_subword_lengths(const std::uint16_t* nbr, int m, std::uint8_t* lengths) {
    std::array<std::int8_t, 16> parent{};
    std::uint16_t visited = 1;
    const std::uint16_t root_adj = nbr[0];
    int cur = 0;
    int count = 0;
    int len = 0;
    for (;;) {
        const std::uint16_t cand =
            static_cast<std::uint16_t>(nbr[static_cast<std::size_t>(cur)] & ~visited);
        if (cand) {
            const int next = 15 - std::countl_zero(static_cast<std::uint16_t>(cand));
            parent[static_cast<std::size_t>(next)] = static_cast<std::int8_t>(cur);
            visited |= std::uint16_t(1) << next;
            cur = next;
            if ((root_adj >> next) & 1u) {
                if (len > 0) lengths[count - 1] = static_cast<std::uint8_t>(len);
                ++count;
                len = 1;
            } else {
                ++len;
            }
        } else {
            if (cur == 0) break;
            cur = parent[static_cast<std::size_t>(cur)];
        }
    }
    if (count > 0) lengths[count - 1] = static_cast<std::uint8_t>(len);
    if (std::popcount(static_cast<unsigned>(visited)) != m)
        return -1;  // not spanning connected
    return count;
}

}  // namespace detail

// Visit sequence tau: starts and ends at 1, records every forward move and
// every backtrack.
inline std::vector<int> dfs_traverse(const RootedSimpleGraph& g) {
    const auto nbr = g.neighbor_masks();
    std::vector<int> tau;
    const std::uint16_t visited = detail::dfs_walk<true>(nbr.data(), &tau, nullptr);
    detail::require_spanning_connected(visited, g.vertex_count());
    return tau;
}

// First-visit word w: the subsequence of tau keeping the first occurrence of
// every vertex other than 1, in visit order.
inline std::vector<int> dfs_word(const RootedSimpleGraph& g) {
    const auto nbr = g.neighbor_masks();
    std::vector<int> word;
    const std::uint16_t visited = detail::dfs_walk<false>(nbr.data(), nullptr, &word);
    detail::require_spanning_connected(visited, g.vertex_count());
    return word;
}

// Word-level core of the class statistic: cut the word in front of every
// letter adjacent to the root and sort the subword lengths non-increasingly.
// root_adjacent has bit (label-1) set for every vertex adjacent to 1.
inline Partition partition_from_word(const std::vector<int>& word, std::uint16_t root_adjacent) {
    std::vector<int> lengths;
    for (int letter : word) {
        if ((root_adjacent >> (letter - 1)) & 1u)
            lengths.push_back(1);
        else if (!lengths.empty())
            ++lengths.back();
        else
            throw std::invalid_argument("partition_from_word: first letter not adjacent to root");
    }
    std::sort(lengths.begin(), lengths.end(), std::greater<int>());
    return Partition(std::move(lengths));
}

struct DfsResult {
    std::vector<int> tau;
    std::vector<int> word;
    Partition lambda;
};

inline Partition lambda_of(const RootedSimpleGraph& g) {
    const auto nbr = g.neighbor_masks();
    std::array<std::uint8_t, 16> lengths{};
    const int count = detail::dfs_subword_lengths(nbr.data(), g.vertex_count(), lengths.data());
    if (count < 0) throw std::invalid_argument("dfs: graph is not spanning connected");
    std::vector<int> parts(lengths.begin(), lengths.begin() + count);
    std::sort(parts.begin(), parts.end(), std::greater<int>());
    return Partition(std::move(parts));
}

inline DfsResult dfs_full(const RootedSimpleGraph& g) {
    DfsResult res;
    res.tau = dfs_traverse(g);
    const auto nbr = g.neighbor_masks();
    for (std::size_t i = 1; i < res.tau.size(); ++i) {
        const int v = res.tau[i];
        if (v != 1 && std::find(res.word.begin(), res.word.end(), v) == res.word.end())
            res.word.push_back(v);
    }
    res.lambda = partition_from_word(res.word, nbr[0]);
    return res;
}

// Exhaustive classification of the spanning connected subgraphs of K_{n+1}
// by the class statistic: bucket lambda accumulates t^{e(C)} over the class,
// and per-root-degree totals are tallied on the same pass.
struct ClassBucket {
    Partition lambda;
    UniPoly enumerator;
};

struct ClassificationReport {
    int n = 0;
    std::uint64_t mask_count = 0;
    std::vector<ClassBucket> classes;   // canonical partition order, all partitions of n
    std::vector<UniPoly> by_degree;     // index s-1: enumerator of root-degree-s subgraphs
};

inline ClassificationReport classify_all(int n, const EnumerationOptions& opts = {}) {
    if (n < 1) throw std::invalid_argument("classify_all: n must be >= 1");
    opts.check_bit_limit_valid();
    const int m = n + 1;
    const int ecount = m * (m - 1) / 2;
    if (ecount > opts.bit_limit) throw enumeration_limit_error(ecount, opts.bit_limit);

    const std::vector<Partition> parts = all_partitions(n);
    // Pack a non-increasing parts vector into a lookup key, 4 bits per part.
    auto pack = [](const std::uint8_t* lengths, int count) {
        std::uint64_t key = 0;
        for (int i = 0; i < count; ++i) key = (key << 4) | lengths[i];
        return key;
    };
    std::vector<std::pair<std::uint64_t, int>> index;
    index.reserve(parts.size());
    for (std::size_t i = 0; i < parts.size(); ++i) {
        std::array<std::uint8_t, 16> tmp{};
        const auto& pv = parts[i].parts();
        for (std::size_t k = 0; k < pv.size(); ++k) tmp[k] = static_cast<std::uint8_t>(pv[k]);
        index.emplace_back(pack(tmp.data(), parts[i].length()), static_cast<int>(i));
    }
    std::sort(index.begin(), index.end());

    // Edge endpoint tables for the K_m lexicographic indexing.
    std::array<std::uint8_t, 64> ea{}, eb{};
    {
        int idx = 0;
        for (int a = 0; a < m; ++a)
            for (int b = a + 1; b < m; ++b, ++idx) {
                ea[static_cast<std::size_t>(idx)] = static_cast<std::uint8_t>(a);
                eb[static_cast<std::size_t>(idx)] = static_cast<std::uint8_t>(b);
            }
    }

    struct Acc {
        // classes x (E+1) edge histogram, then degrees x (E+1)
        std::vector<std::uint64_t> class_hist;
        std::vector<std::uint64_t> degree_hist;
    };

    const std::uint64_t total = std::uint64_t(1) << ecount;
    const std::size_t hist_w = static_cast<std::size_t>(ecount) + 1;

    auto acc = chunked_reduce<Acc>(
        total, opts,
        [&] {
            Acc a;
            a.class_hist.assign(parts.size() * hist_w, 0);
            a.degree_hist.assign(static_cast<std::size_t>(n) * hist_w, 0);
            return a;
        },
        [&](Acc& a, std::uint64_t begin, std::uint64_t end) {
            detail::ComponentScratch uf;
            std::array<std::uint16_t, 16> nbr{};
            std::array<std::uint8_t, 16> lengths{};
            for (std::uint64_t mask = begin; mask < end; ++mask) {
                const int e = std::popcount(mask);
                if (e < m - 1) continue;
                nbr.fill(0);
                uf.reset(m);
                int components = m;
                std::uint64_t bits = mask;
                while (bits) {
                    const int b = std::countr_zero(bits);
                    bits &= bits - 1;
                    const int va = ea[static_cast<std::size_t>(b)];
                    const int vb = eb[static_cast<std::size_t>(b)];
                    nbr[static_cast<std::size_t>(va)] |= std::uint16_t(1) << vb;
                    nbr[static_cast<std::size_t>(vb)] |= std::uint16_t(1) << va;
                    if (uf.unite(va, vb)) --components;
                }
                if (components != 1) continue;
                const int count = detail::dfs_subword_lengths(nbr.data(), m, lengths.data());
                // spanning connectivity already established; count is the root degree
                std::sort(lengths.begin(), lengths.begin() + count, std::greater<std::uint8_t>());
                const std::uint64_t key = pack(lengths.data(), count);
                const auto it = std::lower_bound(
                    index.begin(), index.end(), std::make_pair(key, 0),
                    [](const auto& x, const auto& y) { return x.first < y.first; });
                a.class_hist[static_cast<std::size_t>(it->second) * hist_w +
                             static_cast<std::size_t>(e)] += 1;
                a.degree_hist[static_cast<std::size_t>(count - 1) * hist_w +
                              static_cast<std::size_t>(e)] += 1;
            }
        },
        [](Acc& a, Acc&& b) {
            for (std::size_t i = 0; i < a.class_hist.size(); ++i) a.class_hist[i] += b.class_hist[i];
            for (std::size_t i = 0; i < a.degree_hist.size(); ++i) a.degree_hist[i] += b.degree_hist[i];
        });

    ClassificationReport report;
    report.n = n;
    report.mask_count = total;
    report.classes.reserve(parts.size());
    auto hist_to_poly = [&](const std::uint64_t* h) {
        std::vector<Int> coeffs(hist_w);
        for (std::size_t i = 0; i < hist_w; ++i) coeffs[i] = h[i];
        return UniPoly(std::move(coeffs));
    };
    for (std::size_t i = 0; i < parts.size(); ++i)
        report.classes.push_back(ClassBucket{parts[i], hist_to_poly(&acc.class_hist[i * hist_w])});
    report.by_degree.reserve(static_cast<std::size_t>(n));
    for (int s = 1; s <= n; ++s)
        report.by_degree.push_back(
            hist_to_poly(&acc.degree_hist[static_cast<std::size_t>(s - 1) * hist_w]));
    return report;
}

}  // namespace tutte
