#include "gadget.hpp"

#include <algorithm>
#include <stdexcept>

namespace dcsr::detail {

TrailGadget::TrailGadget(const Subgraph& s, const std::vector<char>& usable,
                         const std::vector<int>& capacity)
    : g_(s.host()), search_(0) {
    const int m = g_.num_edges();
    const int n = g_.num_vertices();
    edge_node_.assign(m, -1);
    for (EdgeId e = 0; e < m; ++e) {
        if (!usable[e]) continue;
        edge_node_[e] = search_.add_vertex();
        search_.add_vertex();
        search_.add_edge(edge_node_[e], edge_node_[e] + 1);
        if (!s.contains(e)) search_.match(edge_node_[e], edge_node_[e] + 1);
    }
    auto end_node = [&](EdgeId e, Vertex v) {
        return edge_node_[e] + (g_.endpoints(e).first == v ? 0 : 1);
    };

    slots_.assign(n, {});
    free_begin_.assign(n, 0);
    for (Vertex v = 0; v < n; ++v) {
        std::vector<EdgeId> inc;
        int used = 0;
        for (EdgeId e : g_.incident(v)) {
            if (!usable[e]) continue;
            inc.push_back(e);
            if (s.contains(e)) ++used;
        }
        const int spare = capacity[v] - used;
        if (spare < 0) throw std::logic_error("gadget capacity below current degree");
        const int total = used + std::min(2, spare);
        for (int i = 0; i < total; ++i) {
            const int slot = search_.add_vertex();
            slots_[v].push_back(slot);
            for (EdgeId e : inc) search_.add_edge(slot, end_node(e, v));
        }
        int k = 0;
        for (EdgeId e : inc)
            if (s.contains(e)) search_.match(slots_[v][k++], end_node(e, v));
        free_begin_[v] = used;
    }

}

std::vector<int> TrailGadget::free_slots(Vertex v) const {
    return {slots_[v].begin() + free_begin_[v], slots_[v].end()};
}

int TrailGadget::add_release(Vertex v) {
    const int node = search_.add_vertex();
    for (int slot : slots_[v]) search_.add_edge(node, slot);
    return node;
}

std::optional<DecodedTrail> TrailGadget::search(const std::vector<int>& roots) {
    auto path = search_.find_augmenting_path(roots);
    if (path.empty()) return std::nullopt;
    return decode(path);
}

DecodedTrail TrailGadget::decode(const std::vector<int>& path) const {
    DecodedTrail out;
    // edge nodes occupy ids [0, edge_nodes_end), allocated before any slot
    int edge_nodes_end = 0;
    for (int id : edge_node_)
        if (id >= 0) edge_nodes_end = id + 2;

    // map gadget node -> (edge, endpoint) by linear scan table
    std::vector<std::pair<EdgeId, Vertex>> owner(edge_nodes_end, {-1, -1});
    for (EdgeId e = 0; e < g_.num_edges(); ++e) {
        if (edge_node_[e] < 0) continue;
        owner[edge_node_[e]] = {e, g_.endpoints(e).first};
        owner[edge_node_[e] + 1] = {e, g_.endpoints(e).second};
    }
    for (std::size_t i = 0; i + 1 < path.size(); ++i) {
        const int x = path[i], y = path[i + 1];
        if (x >= edge_nodes_end || y >= edge_nodes_end) continue;
        const auto [ex, vx] = owner[x];
        const auto [ey, vy] = owner[y];
        if (ex != ey) continue;
        if (out.vertices.empty()) out.vertices.push_back(vx);
        if (out.vertices.back() != vx) throw std::logic_error("gadget path decodes to a broken trail");
        out.edges.push_back(ex);
        out.vertices.push_back(vy);
    }
    return out;
}

}  // namespace dcsr::detail
