#pragma once

#include "dcsr/graph.hpp"

#include <optional>
#include <string_view>
#include <vector>

namespace dcsr {

/// A walk v0 -e0- v1 ... -e_{t-1}- v_t with pairwise distinct edges. Vertices
/// may repeat. The trail is closed when it is non-empty and v0 == v_t.
struct Trail {
    std::vector<Vertex> vertices;
    std::vector<EdgeId> edges;

    std::size_t length() const noexcept { return edges.size(); }
    bool empty() const noexcept { return edges.empty(); }
    bool closed() const { return !edges.empty() && vertices.front() == vertices.back(); }
    Trail reversed() const;
    bool operator==(const Trail&) const = default;
};

/// Builds the trail that starts at `start` and follows `edges` in order.
Trail make_trail(const Graph& g, Vertex start, const std::vector<EdgeId>& edges);

/// Throws ContractError unless `t` is a well-formed trail in the host graph
/// whose edges alternate between membership and non-membership in `m`.
void require_alternating(const Trail& t, const Subgraph& m);

enum class TrailClass { OpenEvenOrUnlockedCycle, MAugmenting, NAugmenting, BTightCycle, AltAbTightCycle };

std::string_view to_string(TrailClass c);

Trail find_maximal_alternating_trail(const Subgraph& diff, const Subgraph& m, EdgeId start_edge);

/// Odd alternating trail inside `usable` that starts and ends with edges
/// outside `s`, whose end vertices are not b-tight, and whose symmetric
/// difference with `s` stays ab-constrained. `s` must be ab-constrained.
std::optional<Trail> find_augmenting_trail_within(const Subgraph& s, const DegreeBounds& bounds,
                                                  const std::vector<char>& usable);

/// M_i-augmenting trail in M_i (sym-diff) N with non-b-tight ends.
std::optional<Trail> find_augmenting_trail(const DegreeBounds& bounds, const Subgraph& mi,
                                           const Subgraph& n);

struct Decomposition {
    std::vector<Subgraph> states;  // M_0 = M, ..., M_{i-1}
    std::vector<Trail> trails;     // T_j turns states[j] into states[j+1] (or N)
};

Decomposition alternating_trail_decomposition(const DegreeBounds& bounds, const Subgraph& m,
                                              const Subgraph& n);

bool all_vertices_b_tight(const Trail& t, const Subgraph& m, const DegreeBounds& bounds);
bool all_vertices_a_tight(const Trail& t, const Subgraph& m, const DegreeBounds& bounds);
bool is_alternatingly_ab_tight(const Trail& c, const Subgraph& m, const DegreeBounds& bounds);

TrailClass classify_trail(const Trail& t, const Subgraph& m, const DegreeBounds& bounds);

}  // namespace dcsr
