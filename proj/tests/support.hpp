#pragma once

// Instance generators shared by the unit and acceptance tests.

#include "dcsr/graph.hpp"
#include "dcsr/oracle.hpp"
#include "dcsr/trail.hpp"

#include <algorithm>
#include <memory>
#include <numeric>
#include <random>
#include <set>
#include <utility>
#include <vector>

namespace dcsr::testing {

using EdgeList = std::vector<std::pair<Vertex, Vertex>>;

inline GraphPtr make_graph(int n, EdgeList edges) { return std::make_shared<const Graph>(n, std::move(edges)); }

inline DegreeBounds uniform_bounds(int n, int a, int b) {
    return {std::vector<int>(n, a), std::vector<int>(n, b)};
}

inline Subgraph sub(const GraphPtr& g, std::vector<EdgeId> edges) { return Subgraph(g, std::move(edges)); }

inline GraphPtr cycle_graph(int n) {
    EdgeList e;
    for (int i = 0; i < n; ++i) e.emplace_back(i, (i + 1) % n);
    return make_graph(n, e);
}

inline bool connected(int n, const EdgeList& edges) {
    std::vector<int> parent(n);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    int parts = n;
    for (auto [u, v] : edges) {
        int ru = find(u), rv = find(v);
        if (ru != rv) parent[ru] = rv, --parts;
    }
    return parts == 1;
}

/// One representative per isomorphism class of connected graphs on 2..max_n vertices.
inline std::vector<std::pair<int, EdgeList>> connected_graphs(int max_n) {
    std::vector<std::pair<int, EdgeList>> out;
    for (int n = 2; n <= max_n; ++n) {
        std::vector<std::pair<int, int>> pairs;
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v) pairs.emplace_back(u, v);
        std::vector<std::vector<int>> perms;
        std::vector<int> p(n);
        std::iota(p.begin(), p.end(), 0);
        do perms.push_back(p);
        while (std::next_permutation(p.begin(), p.end()));
        auto index_of = [&](int u, int v) {
            if (u > v) std::swap(u, v);
            return static_cast<int>(std::find(pairs.begin(), pairs.end(), std::make_pair(u, v)) - pairs.begin());
        };
        std::set<unsigned> seen;
        for (unsigned mask = 1; mask < (1u << pairs.size()); ++mask) {
            EdgeList edges;
            for (std::size_t i = 0; i < pairs.size(); ++i)
                if (mask >> i & 1) edges.push_back(pairs[i]);
            if (!connected(n, edges)) continue;
            unsigned canon = ~0u;
            for (const auto& perm : perms) {
                unsigned m = 0;
                for (auto [u, v] : edges) m |= 1u << index_of(perm[u], perm[v]);
                canon = std::min(canon, m);
            }
            if (seen.insert(canon).second) out.emplace_back(n, edges);
        }
    }
    return out;
}

inline DegreeBounds random_bounds(const Graph& g, std::mt19937_64& rng) {
    DegreeBounds b;
    for (Vertex v = 0; v < g.num_vertices(); ++v) {
        const int d = g.degree(v);
        int lo = std::uniform_int_distribution<int>(0, d)(rng);
        int hi = std::uniform_int_distribution<int>(0, d)(rng);
        if (lo > hi) std::swap(lo, hi);
        b.a.push_back(lo);
        b.b.push_back(hi);
    }
    return b;
}

/// Bounds with a narrow window b - a in {0, 1, 2}; produces many tight vertices.
inline DegreeBounds narrow_bounds(const Graph& g, std::mt19937_64& rng) {
    DegreeBounds b;
    for (Vertex v = 0; v < g.num_vertices(); ++v) {
        const int hi = std::uniform_int_distribution<int>(0, g.degree(v))(rng);
        b.b.push_back(hi);
        b.a.push_back(std::max(0, hi - std::uniform_int_distribution<int>(0, 2)(rng)));
    }
    return b;
}

inline GraphPtr random_graph(std::mt19937_64& rng, int n, int m) {
    std::vector<std::pair<int, int>> pairs;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) pairs.emplace_back(u, v);
    std::shuffle(pairs.begin(), pairs.end(), rng);
    pairs.resize(std::min<std::size_t>(pairs.size(), static_cast<std::size_t>(m)));
    std::sort(pairs.begin(), pairs.end());
    return make_graph(n, pairs);
}

/// Random small instance: host with at most max_edges edges, random bounds
/// (optionally narrow) with at least two feasible states, M and N drawn from the feasible set.
inline Instance random_small_instance(std::mt19937_64& rng, int max_edges, int k, bool narrow = false) {
    for (;;) {
        const int n = std::uniform_int_distribution<int>(2, 8)(rng);
        const int m = std::uniform_int_distribution<int>(1, max_edges)(rng);
        GraphPtr g = random_graph(rng, n, m);
        DegreeBounds b = narrow ? narrow_bounds(*g, rng) : random_bounds(*g, rng);
        auto states = enumerate_ab_constrained(g, b, 0);
        if (states.size() < 2) continue;
        std::uniform_int_distribution<std::size_t> pick(0, states.size() - 1);
        return Instance{g, b, states[pick(rng)], states[pick(rng)], k};
    }
}

/// Large instance: two random edge subsets, with bounds set one or two
/// around their degrees so both are feasible.
inline Instance random_large_instance(std::mt19937_64& rng, int n, int m, int k) {
    GraphPtr g = random_graph(rng, n, m);
    Subgraph s(g), t(g);
    std::bernoulli_distribution coin(0.5);
    for (EdgeId e = 0; e < g->num_edges(); ++e) {
        if (coin(rng)) s.insert(e);
        if (coin(rng)) t.insert(e);
    }
    std::uniform_int_distribution<int> extra(1, 2);
    DegreeBounds b;
    for (Vertex v = 0; v < n; ++v) {
        b.a.push_back(std::max(0, std::min(s.degree(v), t.degree(v)) - extra(rng)));
        b.b.push_back(std::min(g->degree(v), std::max(s.degree(v), t.degree(v)) + extra(rng)));
    }
    return Instance{g, b, s, t, k};
}

// Two alternating cycles glued into one open even trail:
// 0-1-2-3-0 then 0-4-5-6-7-8-5, edges in trail order, even positions in M.
struct FigureTrail {
    GraphPtr g;
    DegreeBounds bounds;
    Subgraph m, n;
    Trail trail;
};

inline FigureTrail figure_trail() {
    auto g = make_graph(9, {{0, 1}, {1, 2}, {2, 3}, {3, 0}, {0, 4}, {4, 5}, {5, 6}, {6, 7}, {7, 8}, {8, 5}});
    DegreeBounds b{std::vector<int>(9, 0), std::vector<int>(9, 1)};
    b.b[0] = 2;
    b.b[5] = 2;
    Trail t = make_trail(*g, 0, {0, 1, 2, 3, 4, 5, 6, 7, 8, 9});
    return {g, b, sub(g, {0, 2, 4, 6, 8}), sub(g, {1, 3, 5, 7, 9}), t};
}

}  // namespace dcsr::testing
