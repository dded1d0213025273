#pragma once

#include "dcsr/graph.hpp"

#include <optional>

namespace dcsr {

/// Some ab-constrained subgraph of `g`, or nullopt when the lower bounds
/// cannot be met. Bounds outside 0 <= a <= b are accepted and reported
/// infeasible; b above the degree is treated as the degree.
std::optional<Subgraph> feasible_dcs(const GraphPtr& g, const DegreeBounds& bounds);

/// An ab-constrained subgraph with the greatest number of edges, or nullopt.
std::optional<Subgraph> maximum_dcs(const GraphPtr& g, const DegreeBounds& bounds);

/// M with one augmenting trail applied (one more edge, still ab-constrained),
/// or nullopt when M is maximum. M must be ab-constrained.
std::optional<Subgraph> augment(const DegreeBounds& bounds, const Subgraph& m);

bool is_maximum(const DegreeBounds& bounds, const Subgraph& m);

}  // namespace dcsr
