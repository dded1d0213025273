#include "dcsr/trail.hpp"

#include "gadget.hpp"

#include <algorithm>
#include <deque>
#include <set>

namespace dcsr {

Trail Trail::reversed() const {
    return {{vertices.rbegin(), vertices.rend()}, {edges.rbegin(), edges.rend()}};
}

Trail make_trail(const Graph& g, Vertex start, const std::vector<EdgeId>& edges) {
    Trail t{{start}, {}};
    for (EdgeId e : edges) {
        t.vertices.push_back(g.other_end(e, t.vertices.back()));
        t.edges.push_back(e);
    }
    return t;
}

void require_alternating(const Trail& t, const Subgraph& m) {
    const Graph& g = m.host();
    if (t.vertices.size() != t.edges.size() + 1) throw ContractError("trail vertex/edge counts disagree");
    std::set<EdgeId> seen;
    for (std::size_t i = 0; i < t.edges.size(); ++i) {
        const EdgeId e = t.edges[i];
        if (!g.has_edge(e)) throw ContractError("trail uses an unknown edge");
        if (!seen.insert(e).second) throw ContractError("trail repeats edge " + std::to_string(e));
        auto [x, y] = g.endpoints(e);
        const Vertex u = t.vertices[i], v = t.vertices[i + 1];
        if (!((x == u && y == v) || (x == v && y == u)))
            throw ContractError("trail edge " + std::to_string(e) + " does not join its listed vertices");
        if (i > 0 && m.contains(e) == m.contains(t.edges[i - 1]))
            throw ContractError("trail is not alternating at edge " + std::to_string(e));
    }
}

std::string_view to_string(TrailClass c) {
    switch (c) {
        case TrailClass::OpenEvenOrUnlockedCycle: return "even";
        case TrailClass::MAugmenting: return "m-augmenting";
        case TrailClass::NAugmenting: return "n-augmenting";
        case TrailClass::BTightCycle: return "b-tight-cycle";
        case TrailClass::AltAbTightCycle: return "alt-ab-tight-cycle";
    }
    return "?";
}

Trail find_maximal_alternating_trail(const Subgraph& diff, const Subgraph& m, EdgeId start_edge) {
    const Graph& g = diff.host();
    if (!diff.contains(start_edge)) throw ContractError("start edge is not in the difference set");
    std::deque<Vertex> verts;
    std::deque<EdgeId> edges;
    std::vector<char> used(g.num_edges(), 0);
    auto [u, v] = g.endpoints(start_edge);
    verts = {u, v};
    edges = {start_edge};
    used[start_edge] = 1;

    auto next_edge = [&](Vertex at, bool want_in_m) -> EdgeId {
        EdgeId best = -1;
        for (EdgeId e : g.incident(at))
            if (diff.contains(e) && !used[e] && m.contains(e) == want_in_m && (best < 0 || e < best))
                best = e;
        return best;
    };
    for (;;) {
        const EdgeId e = next_edge(verts.back(), !m.contains(edges.back()));
        if (e < 0) break;
        used[e] = 1;
        edges.push_back(e);
        verts.push_back(g.other_end(e, verts.back()));
    }
    for (;;) {
        const EdgeId e = next_edge(verts.front(), !m.contains(edges.front()));
        if (e < 0) break;
        used[e] = 1;
        edges.push_front(e);
        verts.push_front(g.other_end(e, verts.front()));
    }
    Trail t{{verts.begin(), verts.end()}, {edges.begin(), edges.end()}};
    if (t.edges.front() > t.edges.back()) t = t.reversed();
    return t;
}

std::optional<Trail> find_augmenting_trail_within(const Subgraph& s, const DegreeBounds& bounds,
                                                  const std::vector<char>& usable) {
    const Graph& g = s.host();
    std::vector<int> capacity(g.num_vertices());
    for (Vertex v = 0; v < g.num_vertices(); ++v) {
        int outside = 0;
        for (EdgeId e : g.incident(v))
            if (!usable[e] && s.contains(e)) ++outside;
        capacity[v] = bounds.b[v] - outside;
    }
    detail::TrailGadget gadget(s, usable, capacity);
    std::vector<int> roots;
    for (Vertex v = 0; v < g.num_vertices(); ++v)
        for (int slot : gadget.free_slots(v)) roots.push_back(slot);
    auto found = gadget.search(roots);
    if (!found) return std::nullopt;
    return Trail{std::move(found->vertices), std::move(found->edges)};
}

std::optional<Trail> find_augmenting_trail(const DegreeBounds& bounds, const Subgraph& mi,
                                           const Subgraph& n) {
    const Graph& g = mi.host();
    std::vector<char> usable(g.num_edges(), 0);
    for (EdgeId e = 0; e < g.num_edges(); ++e) usable[e] = mi.contains(e) != n.contains(e);
    return find_augmenting_trail_within(mi, bounds, usable);
}

Decomposition alternating_trail_decomposition(const DegreeBounds& bounds, const Subgraph& m,
                                              const Subgraph& n) {
    if (m == n) throw ContractError("decomposition needs M != N");
    Decomposition out;
    Subgraph cur = m;
    while (cur != n) {
        auto t = find_augmenting_trail(bounds, cur, n);
        if (!t) {
            const Subgraph diff = symmetric_difference(cur, n);
            t = find_maximal_alternating_trail(diff, cur, diff.edge_list().front());
        }
        out.states.push_back(cur);
        for (EdgeId e : t->edges) cur.flip(e);
        if (!is_ab_constrained(cur, bounds))
            throw std::logic_error("alternating trail decomposition left the feasible region");
        out.trails.push_back(std::move(*t));
    }
    return out;
}

bool all_vertices_b_tight(const Trail& t, const Subgraph& m, const DegreeBounds& bounds) {
    return std::all_of(t.vertices.begin(), t.vertices.end(),
                       [&](Vertex v) { return is_b_tight(m, bounds, v); });
}

bool all_vertices_a_tight(const Trail& t, const Subgraph& m, const DegreeBounds& bounds) {
    return std::all_of(t.vertices.begin(), t.vertices.end(),
                       [&](Vertex v) { return is_a_tight(m, bounds, v); });
}

bool is_alternatingly_ab_tight(const Trail& c, const Subgraph& m, const DegreeBounds& bounds) {
    if (!c.closed() || c.length() % 2 != 0)
        throw ContractError("alternating ab-tightness is defined for closed even trails only");
    bool phase_a = true, phase_b = true;
    for (std::size_t i = 0; i < c.vertices.size(); ++i) {
        const auto t = vertex_tightness(m, bounds, c.vertices[i]);
        const bool even = i % 2 == 0;
        phase_a = phase_a && t.a_tight == even && t.b_tight == !even;
        phase_b = phase_b && t.b_tight == even && t.a_tight == !even;
    }
    return phase_a || phase_b;
}

TrailClass classify_trail(const Trail& t, const Subgraph& m, const DegreeBounds& bounds) {
    if (t.empty()) throw ContractError("cannot classify an empty trail");
    require_alternating(t, m);
    if (t.length() % 2 == 1)
        return m.contains(t.edges.front()) ? TrailClass::NAugmenting : TrailClass::MAugmenting;
    if (!t.closed()) return TrailClass::OpenEvenOrUnlockedCycle;
    if (all_vertices_b_tight(t, m, bounds)) return TrailClass::BTightCycle;
    if (is_alternatingly_ab_tight(t, m, bounds)) return TrailClass::AltAbTightCycle;
    return TrailClass::OpenEvenOrUnlockedCycle;
}

}  // namespace dcsr
