#include "dcsr/dcs_solver.hpp"

#include "dcsr/trail.hpp"
#include "gadget.hpp"

#include <algorithm>

namespace dcsr {
namespace {

DegreeBounds normalized(const Graph& g, const DegreeBounds& bounds, bool& ok) {
    DegreeBounds out = bounds;
    ok = out.a.size() == static_cast<std::size_t>(g.num_vertices()) && out.b.size() == out.a.size();
    if (!ok) return out;
    for (Vertex v = 0; v < g.num_vertices(); ++v) {
        out.a[v] = std::max(0, out.a[v]);
        out.b[v] = std::min(out.b[v], g.degree(v));
        if (out.a[v] > out.b[v]) ok = false;
    }
    return out;
}

// Raises deficient degrees one unit at a time: each step applies an
// alternating trail that starts at a vertex below its lower bound and either
// ends at a vertex with spare capacity or gives up an edge at a vertex above
// its lower bound.
bool repair_deficiency(Subgraph& s, const DegreeBounds& bounds) {
    const Graph& g = s.host();
    const std::vector<char> all(g.num_edges(), 1);
    for (;;) {
        std::vector<Vertex> deficient;
        for (Vertex v = 0; v < g.num_vertices(); ++v)
            if (s.degree(v) < bounds.a[v]) deficient.push_back(v);
        if (deficient.empty()) return true;

        detail::TrailGadget gadget(s, all, bounds.b);
        std::vector<int> roots;
        for (Vertex v : deficient)
            for (int slot : gadget.free_slots(v)) roots.push_back(slot);
        for (Vertex v = 0; v < g.num_vertices(); ++v)
            if (s.degree(v) > bounds.a[v]) gadget.add_release(v);
        auto found = gadget.search(roots);
        if (!found || found->edges.empty()) return false;
        for (EdgeId e : found->edges) s.flip(e);
    }
}

void grow_greedily(Subgraph& s, const DegreeBounds& bounds) {
    const Graph& g = s.host();
    for (EdgeId e = 0; e < g.num_edges(); ++e) {
        if (s.contains(e)) continue;
        auto [u, v] = g.endpoints(e);
        if (s.degree(u) < bounds.b[u] && s.degree(v) < bounds.b[v]) s.insert(e);
    }
}

}  // namespace

std::optional<Subgraph> feasible_dcs(const GraphPtr& g, const DegreeBounds& bounds) {
    bool ok = false;
    const DegreeBounds nb = normalized(*g, bounds, ok);
    if (!ok) return std::nullopt;
    Subgraph s(g);
    grow_greedily(s, nb);
    if (!repair_deficiency(s, nb)) return std::nullopt;
    return s;
}

std::optional<Subgraph> maximum_dcs(const GraphPtr& g, const DegreeBounds& bounds) {
    bool ok = false;
    const DegreeBounds nb = normalized(*g, bounds, ok);
    if (!ok) return std::nullopt;
    auto s = feasible_dcs(g, nb);
    if (!s) return std::nullopt;
    grow_greedily(*s, nb);
    while (auto bigger = augment(nb, *s)) s = std::move(bigger);
    return s;
}

std::optional<Subgraph> augment(const DegreeBounds& bounds, const Subgraph& m) {
    const std::vector<char> all(m.host().num_edges(), 1);
    auto t = find_augmenting_trail_within(m, bounds, all);
    if (!t) return std::nullopt;
    Subgraph out = m;
    for (EdgeId e : t->edges) out.flip(e);
    return out;
}

bool is_maximum(const DegreeBounds& bounds, const Subgraph& m) { return !augment(bounds, m); }

}  // namespace dcsr
