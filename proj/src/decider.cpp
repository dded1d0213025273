#include "dcsr/decider.hpp"

#include "dcsr/dcs_solver.hpp"
#include "dcsr/external_reconfig.hpp"
#include "dcsr/internal_reconfig.hpp"
#include "dcsr/obstructions.hpp"

#include <algorithm>

namespace dcsr {

using detail::MoveRecorder;

std::string_view to_string(Witness::Kind k) {
    switch (k) {
        case Witness::Kind::FixedEdge: return "fixed-edge";
        case Witness::Kind::LockedBTightCycle: return "locked-btight-cycle";
        case Witness::Kind::LockedAltAbTightCycle: return "locked-alt-abtight-cycle";
    }
    return "?";
}

std::size_t step_bound(const Graph& g) {
    const std::size_t m = static_cast<std::size_t>(g.num_edges());
    return m * m + 2 * m;
}

namespace {

constexpr const char* kAnyK = "conclusive for every k >= 1";
constexpr const char* kTightRegime = "conclusive for k = 1 when |M| = |N| and both are maximum";

struct Outcome {
    bool yes = false;
    MoveSequence moves;
    std::optional<Witness> witness;  // edges of the working graph
};

Outcome no_with(Witness::Kind kind, const Trail& cycle, const Subgraph& state, int slack, const char* context) {
    Outcome out;
    out.witness = Witness{kind, -1, cycle, state, slack, context};
    return out;
}

long lowest_size(std::size_t start, const MoveSequence& seq, std::size_t from) {
    long size = static_cast<long>(start), low = size;
    for (std::size_t i = from; i < seq.size(); ++i) {
        size += seq[i].kind == Move::Kind::Add ? 1 : -1;
        low = std::min(low, size);
    }
    return low;
}

class Solver {
public:
    Solver(const DegreeBounds& bounds, int slack, std::vector<TraceEntry>* trace)
        : bounds_(bounds), slack_(slack), trace_(trace) {}

    // |M| <= |N| assumed.
    Outcome solve(const Subgraph& m, const Subgraph& n) {
        const long floor = static_cast<long>(m.size()) - slack_;
        if (m == n) return {true, {}, std::nullopt};
        if (slack_ == 1 && m.size() == n.size() && !is_maximum(bounds_, n)) return via_larger_target(m, n, floor);
        return run_trails(m, n, floor);
    }

private:
    const DegreeBounds& bounds_;
    int slack_;
    std::vector<TraceEntry>* trace_;

    void log(TrailClass cls, const char* routine, std::size_t moves, const Trail& t) {
        if (trace_) trace_->push_back({cls, routine, moves, t});
    }

    void check_floor(const Subgraph& before, const MoveSequence& seq, std::size_t from, long floor,
                     const char* routine) {
        if (lowest_size(before.size(), seq, from) < floor)
            throw InternalError(std::string(routine) + " went below the size floor");
    }

    Outcome run_trails(const Subgraph& m, const Subgraph& n, long floor) {
        if (m == n) return {true, {}, std::nullopt};
        const Decomposition d = alternating_trail_decomposition(bounds_, m, n);
        MoveRecorder rec(m, bounds_);
        for (const Trail& t : d.trails) {
            const Subgraph before = rec.state();
            const long s = static_cast<long>(before.size());
            const std::size_t mark = rec.moves().size();
            const TrailClass cls = classify_trail(t, before, bounds_);
            const char* routine = "";
            bool ok = false;
            switch (cls) {
                case TrailClass::MAugmenting:
                    routine = "odd-gain";
                    ok = detail::run_odd(rec, t, Direction::MtoN);
                    break;
                case TrailClass::NAugmenting:
                    routine = "odd-loss";
                    ok = detail::run_odd(rec, detail::oriented(t, before), Direction::NtoM);
                    break;
                case TrailClass::OpenEvenOrUnlockedCycle:
                    if (t.closed()) {
                        routine = "closed-one-slack";
                        ok = detail::run_closed_even(rec, t, false);
                    } else {
                        routine = "elementary";
                        ok = detail::run_elementary(rec, t);
                    }
                    break;
                case TrailClass::BTightCycle:
                    if (s - 2 >= floor) {
                        routine = "closed-two-slack";
                        ok = detail::run_closed_even(rec, t, true);
                    } else {
                        routine = "btight-detour";
                        try {
                            rec.append(reconfigure_btight_cycle(t, before, bounds_));
                            ok = true;
                        } catch (const LockedCycle&) {
                            if (slack_ != 1 || m.size() != n.size())
                                throw InternalError("locked b-tight cycle outside the tight regime");
                            return no_with(Witness::Kind::LockedBTightCycle, t, before, slack_, kTightRegime);
                        }
                    }
                    break;
                case TrailClass::AltAbTightCycle: {
                    routine = "unlock-detour";
                    auto mp = exists_unlocking_subgraph(t, before, bounds_);
                    if (!mp) return no_with(Witness::Kind::LockedAltAbTightCycle, t, before, slack_, kAnyK);
                    rec.append(reconfigure_alt_abtight_cycle(t, before, *mp, bounds_));
                    ok = true;
                    break;
                }
            }
            if (!ok) throw InternalError(std::string(routine) + " failed on a " + std::string(to_string(cls)) + " trail");
            check_floor(before, rec.moves(), mark, floor, routine);
            Subgraph expect = before;
            for (EdgeId e : t.edges) expect.flip(e);
            if (rec.state() != expect) throw InternalError(std::string(routine) + " touched edges off its trail");
            log(cls, routine, rec.moves().size() - mark, t);
        }
        if (rec.state() != n) throw InternalError("trail processing did not reach the target");
        return {true, rec.take(), std::nullopt};
    }

    // Equal sizes, one edge of slack, neither side maximum: aim for N plus an
    // augmenting trail, then give that trail back.
    Outcome via_larger_target(const Subgraph& m, const Subgraph& n, long floor) {
        const std::vector<char> all(n.host().num_edges(), 1);
        auto t = find_augmenting_trail_within(n, bounds_, all);
        if (!t) throw InternalError("non-maximum subgraph without an augmenting trail");
        Subgraph bigger = n;
        for (EdgeId e : t->edges) bigger.flip(e);
        Outcome out = run_trails(m, bigger, floor);
        if (!out.yes) {
            const Trail& c = out.witness->cycle;
            const bool touches = std::any_of(c.edges.begin(), c.edges.end(),
                                             [&](EdgeId e) { return m.contains(e) != n.contains(e); });
            if (!touches) throw InternalError("locked cycle lies entirely on the augmenting trail");
            return out;
        }
        MoveRecorder rec(bigger, bounds_);
        if (!detail::run_odd(rec, detail::oriented(*t, bigger), Direction::NtoM))
            throw InternalError("could not undo the target augmentation");
        check_floor(bigger, rec.moves(), 0, floor, "restore-target");
        if (rec.state() != n) throw InternalError("target restoration missed the target");
        log(TrailClass::NAugmenting, "restore-target", rec.moves().size(), *t);
        out.moves.insert(out.moves.end(), rec.moves().begin(), rec.moves().end());
        return out;
    }
};

}  // namespace

namespace {

Trail lift_trail(const Trail& t, const std::vector<EdgeId>& to_parent) {
    Trail out{t.vertices, {}};
    for (EdgeId e : t.edges) out.edges.push_back(to_parent[e]);
    return out;
}

Decision decide_impl(const Instance& inst, std::vector<TraceEntry>* trace) {
    inst.validate();
    const Subgraph fixed = m_fixed_subgraph(inst.bounds, inst.source);
    if (auto e = fixed_edge_witness(inst.source, inst.target, fixed)) {
        Decision d;
        d.witness = Witness{Witness::Kind::FixedEdge, *e, {}, std::nullopt, inst.slack, kAnyK};
        return d;
    }
    if (inst.source == inst.target) return {true, {}, std::nullopt};

    const RestrictedInstance r = restrict_instance(inst, fixed);
    const Instance& h = r.instance;
    const bool swapped = h.source.size() > h.target.size();
    std::vector<TraceEntry> local;
    Outcome out;
    try {
        Solver solver(h.bounds, h.slack, trace ? &local : nullptr);
        out = swapped ? solver.solve(h.target, h.source) : solver.solve(h.source, h.target);
    } catch (const NotInternallyReconfigurable& ex) {
        throw InternalError(std::string("unexpected trail obstruction: ") + ex.what());
    } catch (const NeedsK2Error& ex) {
        throw InternalError(ex.what());
    }

    if (trace)
        for (TraceEntry& t : local) trace->push_back({t.trail_class, t.routine, t.moves, lift_trail(t.trail, r.to_parent)});

    Decision d;
    if (!out.yes) {
        Witness w = *out.witness;
        w.cycle = lift_trail(w.cycle, r.to_parent);
        Subgraph state = intersection(inst.source, fixed);
        for (EdgeId e : w.state->edge_list()) state.insert(r.to_parent[e]);
        w.state = std::move(state);
        d.witness = std::move(w);
        return d;
    }
    for (const Move& mv : out.moves) d.moves.push_back({mv.kind, r.to_parent[mv.edge]});
    if (swapped) d.moves = invert_sequence(d.moves);
    d.yes = true;

    const VerifyResult check = verify_move_sequence(inst, d.moves);
    if (!check.ok) throw InternalError("produced sequence failed verification: " + check.reason);
    if (d.moves.size() > step_bound(*inst.graph)) throw InternalError("produced sequence exceeds the step bound");
    return d;
}

}  // namespace

Decision decide(const Instance& inst) { return decide_impl(inst, nullptr); }

Decision decide_with_trace(const Instance& inst, std::vector<TraceEntry>& trace) {
    trace.clear();
    return decide_impl(inst, &trace);
}

bool check_witness(const Instance& inst, const Witness& w) {
    const Subgraph fixed = m_fixed_subgraph(inst.bounds, inst.source);
    if (w.kind == Witness::Kind::FixedEdge)
        return inst.graph->has_edge(w.edge) && fixed.contains(w.edge) &&
               inst.source.contains(w.edge) != inst.target.contains(w.edge);
    if (!w.state || fixed_edge_witness(inst.source, inst.target, fixed)) return false;

    const RestrictedInstance r = restrict_instance(inst, fixed);
    std::vector<EdgeId> to_child(inst.graph->num_edges(), -1);
    for (std::size_t i = 0; i < r.to_parent.size(); ++i) to_child[r.to_parent[i]] = static_cast<EdgeId>(i);
    const GraphPtr& h = r.instance.graph;
    const DegreeBounds& hb = r.instance.bounds;

    Subgraph state(h);
    for (EdgeId e : w.state->edge_list()) {
        if (to_child[e] >= 0) state.insert(to_child[e]);
        else if (!inst.source.contains(e)) return false;  // state must agree with M on F
    }
    for (EdgeId e : fixed.edge_list())
        if (inst.source.contains(e) && !w.state->contains(e)) return false;
    Trail c{w.cycle.vertices, {}};
    for (EdgeId e : w.cycle.edges) {
        if (to_child[e] < 0) return false;
        c.edges.push_back(to_child[e]);
    }
    // the cycle must separate source from target somewhere
    if (std::none_of(w.cycle.edges.begin(), w.cycle.edges.end(),
                     [&](EdgeId e) { return inst.source.contains(e) != inst.target.contains(e); }))
        return false;
    try {
        if (!c.closed() || c.length() % 2 != 0) return false;
        require_alternating(c, state);
        if (!is_ab_constrained(state, hb)) return false;
        if (w.kind == Witness::Kind::LockedBTightCycle) {
            if (!all_vertices_b_tight(c, state, hb)) return false;
            const EvenSet even = compute_even_set(hb, state);
            return std::none_of(c.vertices.begin(), c.vertices.end(), [&](Vertex v) { return even.contains(v); });
        }
        return is_alternatingly_ab_tight(c, state, hb) && !exists_unlocking_subgraph(c, state, hb);
    } catch (const ContractError&) {
        return false;
    }
}

}  // namespace dcsr
