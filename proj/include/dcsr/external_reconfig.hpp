#pragma once

#include "dcsr/graph.hpp"
#include "dcsr/trail.hpp"

#include <optional>
#include <stdexcept>
#include <vector>

namespace dcsr {

/// Vertices that are not b-tight in M, plus vertices that are not a-tight and
/// start an even M-alternating trail (first edge in M) ending at a vertex that
/// is not b-tight. For maximum M this is the set of vertices left below their
/// upper bound by some maximum feasible subgraph.
struct EvenSet {
    std::vector<Vertex> members;  // ascending
    bool contains(Vertex v) const;
};

EvenSet compute_even_set(const DegreeBounds& bounds, const Subgraph& m);

/// The witnessing trail for v, or nullopt when v is not in the even set.
std::optional<Trail> even_witness_trail(const DegreeBounds& bounds, const Subgraph& m, Vertex v);

class LockedCycle : public std::runtime_error {
public:
    LockedCycle(Trail cycle, const std::string& what) : std::runtime_error(what), cycle_(std::move(cycle)) {}
    const Trail& cycle() const noexcept { return cycle_; }

private:
    Trail cycle_;
};

/// Swaps a b-tight even cycle with one edge of slack by first routing an
/// alternating trail from a cycle vertex to a vertex with spare capacity,
/// then swapping the cycle, then undoing the detour. Needs M maximum and no
/// ab-fixed vertices. Throws LockedCycle when no cycle vertex is in the even set.
MoveSequence reconfigure_btight_cycle(const Trail& c, const Subgraph& m, const DegreeBounds& bounds);

/// An ab-constrained M' that agrees with M on the cycle's edges and in which
/// the cycle is not alternatingly ab-tight, or nullopt if none exists.
std::optional<Subgraph> exists_unlocking_subgraph(const Trail& c, const Subgraph& m, const DegreeBounds& bounds);

/// Swaps an alternatingly ab-tight cycle using M' from exists_unlocking_subgraph.
/// Edges outside the cycle end where they started; the floor is |M| - 1.
MoveSequence reconfigure_alt_abtight_cycle(const Trail& c, const Subgraph& m, const Subgraph& mprime,
                                           const DegreeBounds& bounds);

}  // namespace dcsr
