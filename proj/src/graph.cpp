#include "dcsr/graph.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace dcsr {

Graph::Graph(int num_vertices, std::vector<std::pair<Vertex, Vertex>> edges)
    : num_vertices_(num_vertices), edges_(std::move(edges)) {
    if (num_vertices_ < 0) throw InputError("negative vertex count");
    incident_.assign(num_vertices_, {});
    std::set<std::pair<Vertex, Vertex>> seen;
    for (EdgeId e = 0; e < num_edges(); ++e) {
        auto [u, v] = edges_[e];
        if (!has_vertex(u) || !has_vertex(v)) {
            std::ostringstream os;
            os << "edge " << e << " has an endpoint outside 0.." << num_vertices_ - 1;
            throw InputError(os.str());
        }
        if (u == v) throw InputError("edge " + std::to_string(e) + " is a self-loop");
        if (!seen.insert({std::min(u, v), std::max(u, v)}).second)
            throw InputError("edge " + std::to_string(e) + " is a parallel edge");
        incident_[u].push_back(e);
        incident_[v].push_back(e);
    }
}

Vertex Graph::other_end(EdgeId e, Vertex v) const {
    const auto& [x, y] = endpoints(e);
    if (x == v) return y;
    if (y == v) return x;
    throw ContractError("vertex " + std::to_string(v) + " is not an endpoint of edge " +
                        std::to_string(e));
}

void DegreeBounds::validate(const Graph& g) const {
    const auto n = static_cast<std::size_t>(g.num_vertices());
    if (a.size() != n || b.size() != n)
        throw InputError("degree bounds must list one value per vertex");
    for (Vertex v = 0; v < g.num_vertices(); ++v) {
        if (a[v] < 0) throw InputError("a(" + std::to_string(v) + ") is negative");
        if (a[v] > b[v])
            throw InputError("a(" + std::to_string(v) + ") exceeds b(" + std::to_string(v) + ")");
        if (b[v] > g.degree(v))
            throw InputError("b(" + std::to_string(v) + ") exceeds the degree of vertex " +
                             std::to_string(v));
    }
}

Subgraph::Subgraph(GraphPtr host) : host_(std::move(host)) {
    if (!host_) throw ContractError("subgraph needs a host graph");
    member_.assign(host_->num_edges(), 0);
    degree_.assign(host_->num_vertices(), 0);
}

Subgraph::Subgraph(GraphPtr host, const std::vector<EdgeId>& edges) : Subgraph(std::move(host)) {
    for (EdgeId e : edges) {
        if (!host_->has_edge(e)) throw InputError("edge index " + std::to_string(e) + " out of range");
        if (contains(e)) throw InputError("edge index " + std::to_string(e) + " listed twice");
        insert(e);
    }
}

int Subgraph::degree(Vertex v) const {
    if (!host_->has_vertex(v)) throw InputError("unknown vertex " + std::to_string(v));
    return degree_[v];
}

void Subgraph::insert(EdgeId e) {
    if (member_.at(e)) return;
    member_[e] = 1;
    auto [u, v] = host_->endpoints(e);
    ++degree_[u];
    ++degree_[v];
    ++size_;
}

void Subgraph::erase(EdgeId e) {
    if (!member_.at(e)) return;
    member_[e] = 0;
    auto [u, v] = host_->endpoints(e);
    --degree_[u];
    --degree_[v];
    --size_;
}

std::vector<EdgeId> Subgraph::edge_list() const {
    std::vector<EdgeId> out;
    out.reserve(size_);
    for (EdgeId e = 0; e < static_cast<EdgeId>(member_.size()); ++e)
        if (member_[e]) out.push_back(e);
    return out;
}

int degree_in(const Subgraph& s, Vertex v) { return s.degree(v); }

static void require_same_host(const Subgraph& h, const Subgraph& k) {
    if (h.host_ptr() != k.host_ptr() && h.host().edges() != k.host().edges())
        throw InputError("subgraphs belong to different host graphs");
}

Subgraph symmetric_difference(const Subgraph& h, const Subgraph& k) {
    require_same_host(h, k);
    Subgraph out(h.host_ptr());
    for (EdgeId e = 0; e < h.host().num_edges(); ++e)
        if (h.contains(e) != k.contains(e)) out.insert(e);
    return out;
}

Subgraph intersection(const Subgraph& h, const Subgraph& k) {
    require_same_host(h, k);
    Subgraph out(h.host_ptr());
    for (EdgeId e = 0; e < h.host().num_edges(); ++e)
        if (h.contains(e) && k.contains(e)) out.insert(e);
    return out;
}

bool is_ab_constrained(const Subgraph& s, const DegreeBounds& bounds) {
    for (Vertex v = 0; v < s.host().num_vertices(); ++v) {
        const int d = s.degree(v);
        if (d < bounds.a.at(v) || d > bounds.b.at(v)) return false;
    }
    return true;
}

Tightness vertex_tightness(const Subgraph& s, const DegreeBounds& bounds, Vertex v) {
    const int d = s.degree(v);
    return {d == bounds.a.at(v), d == bounds.b.at(v)};
}

MoveSequence invert_sequence(const MoveSequence& seq) {
    MoveSequence out;
    out.reserve(seq.size());
    for (auto it = seq.rbegin(); it != seq.rend(); ++it) out.push_back(it->inverse());
    return out;
}

void apply_move_inplace(Subgraph& s, const Move& m, std::size_t step) {
    if (!s.host().has_edge(m.edge))
        throw IllegalMoveError(step, "step " + std::to_string(step) + ": edge " +
                                         std::to_string(m.edge) + " does not exist");
    const bool present = s.contains(m.edge);
    if (m.kind == Move::Kind::Add) {
        if (present)
            throw IllegalMoveError(step, "step " + std::to_string(step) + ": edge " +
                                             std::to_string(m.edge) + " added twice");
        s.insert(m.edge);
    } else {
        if (!present)
            throw IllegalMoveError(step, "step " + std::to_string(step) + ": edge " +
                                             std::to_string(m.edge) + " removed but absent");
        s.erase(m.edge);
    }
}

Subgraph apply_move(const Subgraph& s, const Move& m, std::size_t step) {
    Subgraph out = s;
    apply_move_inplace(out, m, step);
    return out;
}

long Instance::size_floor() const {
    return static_cast<long>(std::min(source.size(), target.size())) - slack;
}

void Instance::validate() const {
    if (!graph) throw InputError("instance has no graph");
    bounds.validate(*graph);
    if (slack < 1) throw InputError("slack k must be at least 1");
    if (!is_ab_constrained(source, bounds)) throw InputError("source subgraph violates the degree bounds");
    if (!is_ab_constrained(target, bounds)) throw InputError("target subgraph violates the degree bounds");
}

VerifyResult verify_move_sequence(const Instance& inst, const MoveSequence& seq) {
    const long floor = inst.size_floor();
    Subgraph state = inst.source;
    if (!is_ab_constrained(state, inst.bounds))
        return {false, std::nullopt, "source subgraph violates the degree bounds"};
    for (std::size_t i = 0; i < seq.size(); ++i) {
        try {
            apply_move_inplace(state, seq[i], i);
        } catch (const IllegalMoveError& err) {
            return {false, i, err.what()};
        }
        const auto [u, v] = inst.graph->endpoints(seq[i].edge);
        for (Vertex x : {u, v}) {
            const int d = state.degree(x);
            if (d < inst.bounds.a[x] || d > inst.bounds.b[x])
                return {false, i,
                        "step " + std::to_string(i) + ": degree of vertex " + std::to_string(x) +
                            " leaves [a, b]"};
        }
        if (static_cast<long>(state.size()) < floor)
            return {false, i,
                    "step " + std::to_string(i) + ": subgraph has " + std::to_string(state.size()) +
                        " edges, below the floor " + std::to_string(floor)};
    }
    if (state != inst.target)
        return {false, std::nullopt, "final subgraph differs from the target"};
    return {};
}

}  // namespace dcsr
