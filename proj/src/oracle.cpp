#include "dcsr/oracle.hpp"

#include <algorithm>
#include <bit>
#include <deque>
#include <string>

namespace dcsr {
namespace {

void check_cap(const Graph& g, int cap) {
    if (g.num_edges() > cap || cap > 31)
        throw OracleCapExceeded("oracle refuses " + std::to_string(g.num_edges()) + " edges (cap " +
                                std::to_string(cap) + ")");
}

struct Space {
    const Graph& g;
    const DegreeBounds& bounds;
    std::vector<EdgeMask> incident;

    Space(const Graph& graph, const DegreeBounds& b) : g(graph), bounds(b), incident(graph.num_vertices(), 0) {
        for (EdgeId e = 0; e < g.num_edges(); ++e) {
            auto [u, v] = g.endpoints(e);
            incident[u] |= EdgeMask{1} << e;
            incident[v] |= EdgeMask{1} << e;
        }
    }

    bool vertex_ok(EdgeMask s, Vertex v) const {
        const int d = std::popcount(s & incident[v]);
        return d >= bounds.a[v] && d <= bounds.b[v];
    }
    bool feasible(EdgeMask s) const {
        for (Vertex v = 0; v < g.num_vertices(); ++v)
            if (!vertex_ok(s, v)) return false;
        return true;
    }
};

std::vector<char> bfs(const Space& sp, EdgeMask start, long floor) {
    const int m = sp.g.num_edges();
    std::vector<char> seen(std::size_t{1} << m, 0);
    if (std::popcount(start) < floor || !sp.feasible(start)) return seen;
    std::deque<EdgeMask> queue{start};
    seen[start] = 1;
    while (!queue.empty()) {
        const EdgeMask s = queue.front();
        queue.pop_front();
        for (EdgeId e = 0; e < m; ++e) {
            const EdgeMask t = s ^ (EdgeMask{1} << e);
            if (seen[t] || std::popcount(t) < floor) continue;
            auto [u, v] = sp.g.endpoints(e);
            if (!sp.vertex_ok(t, u) || !sp.vertex_ok(t, v)) continue;
            seen[t] = 1;
            queue.push_back(t);
        }
    }
    return seen;
}

}  // namespace

EdgeMask to_mask(const Subgraph& s) {
    EdgeMask mask = 0;
    for (EdgeId e : s.edge_list()) mask |= EdgeMask{1} << e;
    return mask;
}

Subgraph from_mask(const GraphPtr& g, EdgeMask mask) {
    Subgraph s(g);
    for (EdgeId e = 0; e < g->num_edges(); ++e)
        if (mask >> e & 1) s.insert(e);
    return s;
}

std::vector<Subgraph> enumerate_ab_constrained(const GraphPtr& g, const DegreeBounds& bounds, long size_floor,
                                               int cap) {
    check_cap(*g, cap);
    bounds.validate(*g);
    const Space sp(*g, bounds);
    std::vector<Subgraph> out;
    for (EdgeMask s = 0; s < (EdgeMask{1} << g->num_edges()); ++s)
        if (std::popcount(s) >= size_floor && sp.feasible(s)) out.push_back(from_mask(g, s));
    return out;
}

std::vector<EdgeMask> reachable_states(const GraphPtr& g, const DegreeBounds& bounds, const Subgraph& start,
                                       long size_floor, int cap) {
    check_cap(*g, cap);
    const Space sp(*g, bounds);
    const auto seen = bfs(sp, to_mask(start), size_floor);
    std::vector<EdgeMask> out;
    for (std::size_t s = 0; s < seen.size(); ++s)
        if (seen[s]) out.push_back(static_cast<EdgeMask>(s));
    return out;
}

bool oracle_decide(const Instance& inst, int cap) {
    check_cap(*inst.graph, cap);
    inst.validate();
    const Space sp(*inst.graph, inst.bounds);
    return bfs(sp, to_mask(inst.source), inst.size_floor())[to_mask(inst.target)] != 0;
}

std::optional<int> oracle_min_k(const Instance& inst, int cap) {
    check_cap(*inst.graph, cap);
    const Space sp(*inst.graph, inst.bounds);
    const long base = static_cast<long>(std::min(inst.source.size(), inst.target.size()));
    const EdgeMask target = to_mask(inst.target);
    for (int k = 1;; ++k) {
        if (bfs(sp, to_mask(inst.source), base - k)[target]) return k;
        if (base - k <= 0) return std::nullopt;
    }
}

}  // namespace dcsr
