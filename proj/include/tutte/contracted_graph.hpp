#pragma once

#include <array>
#include <bit>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "tutte/bipoly.hpp"
#include "tutte/parallel.hpp"
#include "tutte/unipoly.hpp"

namespace tutte {

// The multigraph obtained from the complete graph K_n by contracting all
// edges among a chosen r-subset. Vertex 0 is the contracted hub; vertices
// 1..n-r are the remaining (outer) vertices w_1..w_{n-r}.
//
// Canonical edge indexing (fixed for bit-exact mask reproducibility):
//   - for k in 1..n-r, i in 1..r: the parallel hub edge (u_i, w_k) has
//     index (k-1)*r + (i-1); hub edges come first, blocked by outer vertex;
//   - then the simple outer edges {w_j, w_k}, j < k, lexicographically,
//     starting at offset r*(n-r).
class ContractedGraph {
public:
    struct Edge {
        int a;  // lower vertex index (0 = hub)
        int b;  // higher vertex index
    };

    ContractedGraph(int n, int r) : n_(n), r_(r) {
        if (r < 1 || n < r)
            throw std::invalid_argument("ContractedGraph: require n >= r >= 1");
        const int outer = n - r;
        edges_.reserve(static_cast<std::size_t>(edge_count()));
        for (int k = 1; k <= outer; ++k)
            for (int i = 0; i < r; ++i) edges_.push_back(Edge{0, k});
        for (int j = 1; j <= outer; ++j)
            for (int k = j + 1; k <= outer; ++k) edges_.push_back(Edge{j, k});
    }

    int n() const { return n_; }
    int contracted_size() const { return r_; }
    int outer_count() const { return n_ - r_; }
    int vertex_count() const { return n_ - r_ + 1; }
    int edge_count() const {
        const int outer = n_ - r_;
        return r_ * outer + outer * (outer - 1) / 2;
    }

    const Edge& edge(int index) const { return edges_.at(static_cast<std::size_t>(index)); }
    const std::vector<Edge>& edges() const { return edges_; }

    bool is_hub_edge(int index) const { return index < r_ * (n_ - r_); }

private:
    int n_;
    int r_;
    std::vector<Edge> edges_;
};

// A spanning subgraph as an edge bitmask: bit b set <=> edge with canonical
// index b is present. Width always equals the owning graph's edge count.
struct EdgeSubset {
    std::uint64_t bits = 0;
    int width = 0;

    std::string to_hex() const {
        static const char* digits = "0123456789abcdef";
        const int nibbles = std::max(1, (width + 3) / 4);
        std::string out(static_cast<std::size_t>(nibbles), '0');
        for (int i = 0; i < nibbles; ++i)
            out[static_cast<std::size_t>(nibbles - 1 - i)] = digits[(bits >> (4 * i)) & 0xf];
        return out;
    }

    static EdgeSubset from_hex(const std::string& hex, int width) {
        if (hex.empty() || hex.size() > 16)
            throw std::invalid_argument("EdgeSubset: bad hex string '" + hex + "'");
        std::uint64_t bits = 0;
        for (char c : hex) {
            int v;
            if (c >= '0' && c <= '9') v = c - '0';
            else if (c >= 'a' && c <= 'f') v = c - 'a' + 10;
            else if (c >= 'A' && c <= 'F') v = c - 'A' + 10;
            else throw std::invalid_argument("EdgeSubset: bad hex string '" + hex + "'");
            bits = (bits << 4) | static_cast<std::uint64_t>(v);
        }
        if (width < 64 && (bits >> width) != 0)
            throw std::invalid_argument("EdgeSubset: mask wider than graph");
        return EdgeSubset{bits, width};
    }
};

struct SubgraphStats {
    int components = 0;
    int edges = 0;
    int vertices = 0;
};

namespace detail {

// Allocation-free union-find over at most 16 vertices, rebuilt per mask.
struct ComponentScratch {
    std::array<std::uint8_t, 16> parent{};

    void reset(int count) {
        for (int i = 0; i < count; ++i) parent[static_cast<std::size_t>(i)] = static_cast<std::uint8_t>(i);
    }

    int find(int v) {
        while (parent[static_cast<std::size_t>(v)] != v) {
            parent[static_cast<std::size_t>(v)] =
                parent[parent[static_cast<std::size_t>(v)]];  // path halving
            v = parent[static_cast<std::size_t>(v)];
        }
        return v;
    }

    // Returns true if the union reduced the component count.
    bool unite(int a, int b) {
        a = find(a);
        b = find(b);
        if (a == b) return false;
        parent[static_cast<std::size_t>(b)] = static_cast<std::uint8_t>(a);
        return true;
    }
};

inline void check_enumerable(const ContractedGraph& g, const EnumerationOptions& opts) {
    opts.check_bit_limit_valid();
    if (g.edge_count() > opts.bit_limit)
        throw enumeration_limit_error(g.edge_count(), opts.bit_limit);
}

}  // namespace detail

// Component/edge/vertex statistics of the spanning subgraph selected by the
// mask. Isolated vertices count as components.
inline SubgraphStats stats(const ContractedGraph& g, const EdgeSubset& h) {
    if (h.width != g.edge_count())
        throw std::invalid_argument("stats: mask width does not match graph");
    detail::ComponentScratch uf;
    const int v = g.vertex_count();
    uf.reset(v);
    int components = v;
    std::uint64_t m = h.bits;
    while (m) {
        const int b = std::countr_zero(m);
        m &= m - 1;
        const auto& e = g.edge(b);
        if (uf.unite(e.a, e.b)) --components;
    }
    return SubgraphStats{components, std::popcount(h.bits), v};
}

struct BruteTutteResult {
    BiPoly tutte;
    // Masks with c=1 and e=v-1, tallied on the same pass; cross-checks
    // tutte(1,1).
    std::uint64_t spanning_trees = 0;
};

namespace detail {

// Per-worker tally grid over the shifted-power basis: cell (a, b) counts
// masks with (x-1)^a (y-1)^b, a = c-1, b = e+c-v.
struct WhitneyAcc {
    std::vector<std::uint64_t> cells;  // (v) x (E+1), flattened
    std::uint64_t trees = 0;
    int rows = 0, cols = 0;

    static WhitneyAcc make(int v, int e_max) {
        WhitneyAcc acc;
        acc.rows = v;
        acc.cols = e_max + 1;
        acc.cells.assign(static_cast<std::size_t>(acc.rows) * acc.cols, 0);
        return acc;
    }

    void merge(WhitneyAcc&& other) {
        for (std::size_t i = 0; i < cells.size(); ++i) cells[i] += other.cells[i];
        trees += other.trees;
    }
};

inline std::vector<std::vector<Int>> to_int_grid(const WhitneyAcc& acc) {
    std::vector<std::vector<Int>> grid(static_cast<std::size_t>(acc.rows));
    for (int a = 0; a < acc.rows; ++a) {
        grid[static_cast<std::size_t>(a)].assign(static_cast<std::size_t>(acc.cols), Int(0));
        for (int b = 0; b < acc.cols; ++b)
            grid[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] =
                acc.cells[static_cast<std::size_t>(a) * acc.cols + b];
    }
    return grid;
}

}  // namespace detail

// Tutte polynomial by direct expansion over all 2^E spanning subgraphs:
//   sum_H (x-1)^{c(H)-1} (y-1)^{e(H)+c(H)-v(H)}.
inline BruteTutteResult brute_tutte_full(const ContractedGraph& g,
                                         const EnumerationOptions& opts = {}) {
    detail::check_enumerable(g, opts);
    const int v = g.vertex_count();
    const int ecount = g.edge_count();
    const std::uint64_t total = std::uint64_t(1) << ecount;
    const auto& edges = g.edges();

    auto acc = chunked_reduce<detail::WhitneyAcc>(
        total, opts, [&] { return detail::WhitneyAcc::make(v, ecount); },
        [&](detail::WhitneyAcc& a, std::uint64_t begin, std::uint64_t end) {
            detail::ComponentScratch uf;
            for (std::uint64_t mask = begin; mask < end; ++mask) {
                uf.reset(v);
                int components = v;
                std::uint64_t m = mask;
                while (m) {
                    const int b = std::countr_zero(m);
                    m &= m - 1;
                    if (uf.unite(edges[static_cast<std::size_t>(b)].a,
                                 edges[static_cast<std::size_t>(b)].b))
                        --components;
                }
                const int e = std::popcount(mask);
                const int ypow = e + components - v;
                if (ypow < 0)
                    throw std::logic_error("brute_tutte: negative nullity");
                ++a.cells[static_cast<std::size_t>(components - 1) * a.cols + ypow];
                if (components == 1 && e == v - 1) ++a.trees;
            }
        },
        [](detail::WhitneyAcc& a, detail::WhitneyAcc&& b) { a.merge(std::move(b)); });

    return BruteTutteResult{expand_shifted_counts(detail::to_int_grid(acc)), acc.trees};
}

inline BiPoly brute_tutte(const ContractedGraph& g, const EnumerationOptions& opts = {}) {
    return brute_tutte_full(g, opts).tutte;
}

// Same expansion, partitioned by the exact set S of outer vertices adjacent
// to the hub. Keys are bitmasks over outer vertices (bit k-1 = w_k); the
// values sum to brute_tutte(g).
inline std::map<std::uint32_t, BiPoly> brute_tutte_by_neighbor_set(
    const ContractedGraph& g, const EnumerationOptions& opts = {}) {
    detail::check_enumerable(g, opts);
    const int v = g.vertex_count();
    const int ecount = g.edge_count();
    const int outer = g.outer_count();
    const int hub_edges = g.contracted_size() * outer;
    const std::uint64_t total = std::uint64_t(1) << ecount;
    const auto& edges = g.edges();

    struct Acc {
        std::vector<detail::WhitneyAcc> by_set;
        void merge(Acc&& other) {
            for (std::size_t i = 0; i < by_set.size(); ++i)
                by_set[i].merge(std::move(other.by_set[i]));
        }
    };

    auto acc = chunked_reduce<Acc>(
        total, opts,
        [&] {
            Acc a;
            a.by_set.assign(std::size_t(1) << outer, detail::WhitneyAcc::make(v, ecount));
            return a;
        },
        [&](Acc& a, std::uint64_t begin, std::uint64_t end) {
            detail::ComponentScratch uf;
            for (std::uint64_t mask = begin; mask < end; ++mask) {
                uf.reset(v);
                int components = v;
                std::uint32_t sset = 0;
                std::uint64_t m = mask;
                while (m) {
                    const int b = std::countr_zero(m);
                    m &= m - 1;
                    const auto& e = edges[static_cast<std::size_t>(b)];
                    if (b < hub_edges) sset |= std::uint32_t(1) << (e.b - 1);
                    if (uf.unite(e.a, e.b)) --components;
                }
                const int e = std::popcount(mask);
                const int ypow = e + components - v;
                if (ypow < 0)
                    throw std::logic_error("brute_tutte_by_neighbor_set: negative nullity");
                auto& cell = a.by_set[sset];
                ++cell.cells[static_cast<std::size_t>(components - 1) * cell.cols + ypow];
            }
        },
        [](Acc& a, Acc&& b) { a.merge(std::move(b)); });

    std::map<std::uint32_t, BiPoly> out;
    for (std::uint32_t s = 0; s < acc.by_set.size(); ++s)
        out.emplace(s, expand_shifted_counts(detail::to_int_grid(acc.by_set[s])));
    return out;
}

// Edge-count enumerator of the spanning connected subgraphs:
// sum over masks with c(H) = 1 of t^{e(H)}.
inline UniPoly brute_connected_enumerator(const ContractedGraph& g,
                                          const EnumerationOptions& opts = {}) {
    detail::check_enumerable(g, opts);
    const int v = g.vertex_count();
    const int ecount = g.edge_count();
    const std::uint64_t total = std::uint64_t(1) << ecount;
    const auto& edges = g.edges();

    using Hist = std::vector<std::uint64_t>;
    auto hist = chunked_reduce<Hist>(
        total, opts, [&] { return Hist(static_cast<std::size_t>(ecount) + 1, 0); },
        [&](Hist& h, std::uint64_t begin, std::uint64_t end) {
            detail::ComponentScratch uf;
            const int min_edges = v - 1;
            for (std::uint64_t mask = begin; mask < end; ++mask) {
                if (std::popcount(mask) < min_edges) continue;
                uf.reset(v);
                int components = v;
                std::uint64_t m = mask;
                while (m) {
                    const int b = std::countr_zero(m);
                    m &= m - 1;
                    if (uf.unite(edges[static_cast<std::size_t>(b)].a,
                                 edges[static_cast<std::size_t>(b)].b))
                        --components;
                }
                if (components == 1) ++h[static_cast<std::size_t>(std::popcount(mask))];
            }
        },
        [](Hist& a, Hist&& b) {
            for (std::size_t i = 0; i < a.size(); ++i) a[i] += b[i];
        });

    std::vector<Int> coeffs(hist.size());
    for (std::size_t i = 0; i < hist.size(); ++i) coeffs[i] = hist[i];
    return UniPoly(std::move(coeffs));
}

}  // namespace tutte
