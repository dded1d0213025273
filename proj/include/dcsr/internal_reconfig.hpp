#pragma once

#include "dcsr/graph.hpp"
#include "dcsr/trail.hpp"

#include <stdexcept>
#include <string>

namespace dcsr {

enum class InternalCondition {
    Satisfied,
    AbFixedVertex,     // some trail vertex is ab-fixed
    OpenStartATight,   // open trail, start vertex (at the M-edge end) is a-tight
    OpenEndBTight,     // open trail, end vertex (at the N-edge end) is b-tight
    ClosedBTight,      // closed trail, every vertex b-tight
    ClosedATight,      // closed trail, every vertex a-tight
    ClosedAltAbTight,  // closed trail alternates a-tight / b-tight
};

std::string_view to_string(InternalCondition c);

struct ConditionCheck {
    InternalCondition condition = InternalCondition::Satisfied;
    Vertex witness = -1;
    bool ok() const noexcept { return condition == InternalCondition::Satisfied; }
};

class NotInternallyReconfigurable : public std::runtime_error {
public:
    NotInternallyReconfigurable(ConditionCheck check, const std::string& what)
        : std::runtime_error(what), check_(check) {}
    const ConditionCheck& check() const noexcept { return check_; }

private:
    ConditionCheck check_;
};

class NeedsK2Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Conditions under which an even alternating trail can be swapped inside
/// itself by elementary moves with the edge count never more than one below
/// its start. The trail is read with its M-edge first (reversed if needed).
ConditionCheck check_internal_conditions(const Trail& t, const Subgraph& m, const DegreeBounds& bounds);

/// Exactly |T| moves, each pair removing one M-edge of T and adding one
/// N-edge of T. Throws NotInternallyReconfigurable if the conditions fail.
MoveSequence reconfigure_elementary(const Trail& t, const Subgraph& m, const DegreeBounds& bounds);

/// True when neither end of `t` can be extended by an unused edge of M (sym-diff) N.
bool is_maximal_trail(const Trail& t, const Subgraph& m, const Subgraph& n);

MoveSequence reconfigure_open_even_maximal(const Trail& t, const Subgraph& m, const Subgraph& n,
                                           const DegreeBounds& bounds);

enum class Direction {
    MtoN,  // trail starts and ends with edges not in M; one edge is gained
    NtoM,  // trail starts and ends with edges of M; one edge is lost
};

/// Odd trail swap. MtoN never drops more than one edge below |M|; NtoM never
/// drops more than two below |M|.
MoveSequence reconfigure_odd_maximal(const Trail& t, const Subgraph& m, const Subgraph& n,
                                     const DegreeBounds& bounds, Direction direction);

/// Closed even trail swap. Uses elementary moves when the conditions hold;
/// an a-tight cycle starts with an addition (floor |M|); a b-tight cycle
/// starts with a removal and dips to |M| - 2, which requires allow_k2.
MoveSequence reconfigure_closed_even(const Trail& t, const Subgraph& m, const DegreeBounds& bounds,
                                     bool allow_k2);

namespace detail {

/// Accumulates moves against a working copy of the current subgraph.
class MoveRecorder {
public:
    MoveRecorder(const Subgraph& start, const DegreeBounds& bounds) : state_(start), bounds_(&bounds) {}

    const Subgraph& state() const noexcept { return state_; }
    const DegreeBounds& bounds() const noexcept { return *bounds_; }
    const MoveSequence& moves() const noexcept { return moves_; }
    MoveSequence take() { return std::move(moves_); }

    bool can_add(EdgeId e) const;
    bool can_remove(EdgeId e) const;
    /// Applies a move; throws std::logic_error if it would break the bounds.
    void add(EdgeId e);
    void remove(EdgeId e);
    void append(const MoveSequence& seq);

private:
    Subgraph state_;
    const DegreeBounds* bounds_;
    MoveSequence moves_;
};

/// Elementary-move swap of `t` against the recorder's state. On
/// failure returns false and leaves the recorder untouched.
bool run_elementary(MoveRecorder& rec, const Trail& t);
bool run_odd(MoveRecorder& rec, const Trail& t, Direction direction);
/// Closed even trail; throws like reconfigure_closed_even.
bool run_closed_even(MoveRecorder& rec, const Trail& t, bool allow_k2);
/// Orientation with the first edge in `s` (reversed when needed).
Trail oriented(const Trail& t, const Subgraph& s);

}  // namespace detail

}  // namespace dcsr
