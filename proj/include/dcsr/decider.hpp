#pragma once

#include "dcsr/graph.hpp"
#include "dcsr/trail.hpp"

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace dcsr {

struct Witness {
    enum class Kind { FixedEdge, LockedBTightCycle, LockedAltAbTightCycle };
    Kind kind = Kind::FixedEdge;
    EdgeId edge = -1;  // FixedEdge
    Trail cycle;       // locked cycles, edge ids of the input graph
    /// Reachable state in which the cycle was found locked (locked cycles only).
    std::optional<Subgraph> state;
    int slack = 1;
    std::string context;  // regime in which the witness is conclusive
};

std::string_view to_string(Witness::Kind k);

struct Decision {
    bool yes = false;
    MoveSequence moves;
    std::optional<Witness> witness;
};

struct TraceEntry {
    TrailClass trail_class;
    std::string routine;
    std::size_t moves = 0;
    Trail trail;  // edge ids of the input graph
};

/// Thrown when a produced sequence fails the internal verifier; never
/// accompanied by output.
class InternalError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

Decision decide(const Instance& inst);
Decision decide_with_trace(const Instance& inst, std::vector<TraceEntry>& trace);

/// |E|^2 + 2|E|
std::size_t step_bound(const Graph& g);

/// Re-checks a No-certificate against the instance: a fixed edge must lie in
/// (M sym-diff N) and the fixed subgraph; a locked cycle must satisfy its
/// characterisation in the recorded state.
bool check_witness(const Instance& inst, const Witness& w);

}  // namespace dcsr
