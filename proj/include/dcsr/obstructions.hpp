#pragma once

#include "dcsr/graph.hpp"

#include <optional>

namespace dcsr {

/// Edges that no feasible reconfiguration of M can ever flip: the least
/// fixpoint seeded with edges at vertices where a(v) = deg_M(v) = b(v) and
/// closed under
///   deg_M(v) = b(v) and every M-edge at v fixed      => all edges at v fixed
///   deg_M(v) = a(v) and every non-M edge at v fixed  => all edges at v fixed
Subgraph m_fixed_subgraph(const DegreeBounds& bounds, const Subgraph& m);

/// Smallest-index edge of (M sym-diff N) intersected with F, if any.
std::optional<EdgeId> fixed_edge_witness(const Subgraph& m, const Subgraph& n, const Subgraph& f);

/// Subinstance on H = G - removed, with
///   a_H(v) = max(0, a(v) - deg_{removed & M}(v)),  b_H(v) = b(v) - deg_{removed & M}(v).
struct RestrictedInstance {
    Instance instance;
    std::vector<EdgeId> to_parent;  // edge of H -> edge of G
};

RestrictedInstance restrict_instance(const Instance& inst, const Subgraph& removed);

}  // namespace dcsr
