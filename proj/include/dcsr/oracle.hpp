#pragma once

#include "dcsr/graph.hpp"

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <vector>

namespace dcsr {

inline constexpr int kOracleEdgeCap = 16;

class OracleCapExceeded : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

using EdgeMask = std::uint32_t;

EdgeMask to_mask(const Subgraph& s);
Subgraph from_mask(const GraphPtr& g, EdgeMask mask);

/// Every ab-constrained edge subset with at least `size_floor` edges.
std::vector<Subgraph> enumerate_ab_constrained(const GraphPtr& g, const DegreeBounds& bounds, long size_floor,
                                               int cap = kOracleEdgeCap);

/// All states reachable from `start` by single flips through ab-constrained
/// subgraphs of size >= size_floor. Sorted.
std::vector<EdgeMask> reachable_states(const GraphPtr& g, const DegreeBounds& bounds, const Subgraph& start,
                                       long size_floor, int cap = kOracleEdgeCap);

/// Breadth-first search over the reconfiguration state graph.
bool oracle_decide(const Instance& inst, int cap = kOracleEdgeCap);

/// Smallest slack k >= 1 for which the target is reachable; the instance's
/// own slack is ignored. nullopt when unreachable for every k.
std::optional<int> oracle_min_k(const Instance& inst, int cap = kOracleEdgeCap);

}  // namespace dcsr
