#include "dcsr/obstructions.hpp"

#include <algorithm>

namespace dcsr {

Subgraph m_fixed_subgraph(const DegreeBounds& bounds, const Subgraph& m) {
    const Graph& g = m.host();
    Subgraph fixed(m.host_ptr());
    for (Vertex v = 0; v < g.num_vertices(); ++v)
        if (vertex_tightness(m, bounds, v).ab_fixed())
            for (EdgeId e : g.incident(v)) fixed.insert(e);

    // one sweep over all vertices per round until nothing new is fixed
    std::size_t before;
    do {
        before = fixed.size();
        const Subgraph snapshot = fixed;
        for (Vertex v = 0; v < g.num_vertices(); ++v) {
            const auto& inc = g.incident(v);
            const int d = m.degree(v);
            const bool b_rule = d == bounds.b[v] && std::all_of(inc.begin(), inc.end(), [&](EdgeId e) {
                                    return !m.contains(e) || snapshot.contains(e);
                                });
            const bool a_rule = d == bounds.a[v] && std::all_of(inc.begin(), inc.end(), [&](EdgeId e) {
                                    return m.contains(e) || snapshot.contains(e);
                                });
            if (b_rule || a_rule)
                for (EdgeId e : inc) fixed.insert(e);
        }
    } while (fixed.size() > before);
    return fixed;
}

std::optional<EdgeId> fixed_edge_witness(const Subgraph& m, const Subgraph& n, const Subgraph& f) {
    for (EdgeId e = 0; e < m.host().num_edges(); ++e)
        if (f.contains(e) && m.contains(e) != n.contains(e)) return e;
    return std::nullopt;
}

RestrictedInstance restrict_instance(const Instance& inst, const Subgraph& removed) {
    if (fixed_edge_witness(inst.source, inst.target, removed))
        throw ContractError("restriction would drop an edge on which source and target differ");
    const Graph& g = *inst.graph;
    RestrictedInstance out;
    std::vector<std::pair<Vertex, Vertex>> kept;
    std::vector<EdgeId> to_child(g.num_edges(), -1);
    for (EdgeId e = 0; e < g.num_edges(); ++e) {
        if (removed.contains(e)) continue;
        to_child[e] = static_cast<EdgeId>(kept.size());
        kept.push_back(g.endpoints(e));
        out.to_parent.push_back(e);
    }
    auto h = std::make_shared<const Graph>(g.num_vertices(), std::move(kept));
    DegreeBounds bounds;
    bounds.a.resize(g.num_vertices());
    bounds.b.resize(g.num_vertices());
    for (Vertex v = 0; v < g.num_vertices(); ++v) {
        int dropped = 0, kept_degree = 0;
        for (EdgeId e : g.incident(v)) {
            if (!removed.contains(e)) ++kept_degree;
            else if (inst.source.contains(e)) ++dropped;
        }
        bounds.a[v] = std::max(0, inst.bounds.a[v] - dropped);
        // capped at deg_H(v): identical feasible sets, and b_H <= deg_H holds
        bounds.b[v] = std::min(inst.bounds.b[v] - dropped, kept_degree);
    }
    auto project = [&](const Subgraph& s) {
        Subgraph p(h);
        for (EdgeId e = 0; e < g.num_edges(); ++e)
            if (to_child[e] >= 0 && s.contains(e)) p.insert(to_child[e]);
        return p;
    };
    out.instance = Instance{h, std::move(bounds), project(inst.source), project(inst.target), inst.slack};
    return out;
}

}  // namespace dcsr
