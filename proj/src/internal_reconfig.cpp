#include "dcsr/internal_reconfig.hpp"

#include <algorithm>
#include <array>
#include <set>

namespace dcsr {

std::string_view to_string(InternalCondition c) {
    switch (c) {
        case InternalCondition::Satisfied: return "satisfied";
        case InternalCondition::AbFixedVertex: return "ab-fixed vertex on trail";
        case InternalCondition::OpenStartATight: return "open trail starts at an a-tight vertex";
        case InternalCondition::OpenEndBTight: return "open trail ends at a b-tight vertex";
        case InternalCondition::ClosedBTight: return "closed trail is b-tight";
        case InternalCondition::ClosedATight: return "closed trail is a-tight";
        case InternalCondition::ClosedAltAbTight: return "closed trail is alternatingly ab-tight";
    }
    return "?";
}

namespace detail {

bool MoveRecorder::can_add(EdgeId e) const {
    if (state_.contains(e)) return false;
    auto [u, v] = state_.host().endpoints(e);
    return state_.degree(u) < bounds_->b[u] && state_.degree(v) < bounds_->b[v];
}

bool MoveRecorder::can_remove(EdgeId e) const {
    if (!state_.contains(e)) return false;
    auto [u, v] = state_.host().endpoints(e);
    return state_.degree(u) > bounds_->a[u] && state_.degree(v) > bounds_->a[v];
}

void MoveRecorder::add(EdgeId e) {
    if (!can_add(e)) throw std::logic_error("adding edge " + std::to_string(e) + " breaks the bounds");
    state_.insert(e);
    moves_.push_back(Move::add(e));
}

void MoveRecorder::remove(EdgeId e) {
    if (!can_remove(e)) throw std::logic_error("removing edge " + std::to_string(e) + " breaks the bounds");
    state_.erase(e);
    moves_.push_back(Move::remove(e));
}

void MoveRecorder::append(const MoveSequence& seq) {
    for (const Move& m : seq) m.kind == Move::Kind::Add ? add(m.edge) : remove(m.edge);
}

Trail oriented(const Trail& t, const Subgraph& s) {
    if (t.empty() || s.contains(t.edges.front())) return t;
    return t.reversed();
}

}  // namespace detail

namespace {

using detail::MoveRecorder;
using detail::oriented;

Trail slice(const Trail& t, std::size_t from, std::size_t to) {
    return {{t.vertices.begin() + from, t.vertices.begin() + to + 1},
            {t.edges.begin() + from, t.edges.begin() + to}};
}

// Contiguous arc of a closed trail: `len` edges starting at edge index `start`.
Trail arc(const Trail& t, std::size_t start, std::size_t len) {
    const std::size_t n = t.length();
    Trail out;
    out.vertices.push_back(t.vertices[start % n]);
    for (std::size_t k = 0; k < len; ++k) {
        out.edges.push_back(t.edges[(start + k) % n]);
        out.vertices.push_back(t.vertices[(start + k + 1) % n]);
    }
    return out;
}

ConditionCheck check_oriented(const Trail& t, const Subgraph& s, const DegreeBounds& bounds) {
    for (Vertex v : t.vertices)
        if (vertex_tightness(s, bounds, v).ab_fixed()) return {InternalCondition::AbFixedVertex, v};
    if (!t.closed()) {
        if (is_a_tight(s, bounds, t.vertices.front()))
            return {InternalCondition::OpenStartATight, t.vertices.front()};
        if (is_b_tight(s, bounds, t.vertices.back()))
            return {InternalCondition::OpenEndBTight, t.vertices.back()};
        return {};
    }
    if (all_vertices_b_tight(t, s, bounds)) return {InternalCondition::ClosedBTight, t.vertices.front()};
    if (all_vertices_a_tight(t, s, bounds)) return {InternalCondition::ClosedATight, t.vertices.front()};
    if (is_alternatingly_ab_tight(t, s, bounds))
        return {InternalCondition::ClosedAltAbTight, t.vertices.front()};
    return {};
}

ConditionCheck check_in(const Trail& t, const Subgraph& s, const DegreeBounds& bounds) {
    return check_oriented(oriented(t, s), s, bounds);
}

// Whether processing `parts` in the given order keeps each part valid when
// its turn comes. A fully processed part is exactly its own symmetric
// difference, so the walk only needs to flip edges in a scratch copy.
bool order_is_valid(const std::vector<Trail>& parts, Subgraph& scratch, const DegreeBounds& bounds) {
    std::size_t done = 0;
    bool ok = true;
    for (; done < parts.size(); ++done) {
        if (!check_in(parts[done], scratch, bounds).ok()) {
            ok = false;
            break;
        }
        for (EdgeId e : parts[done].edges) scratch.flip(e);
    }
    for (std::size_t k = 0; k < done; ++k)
        for (EdgeId e : parts[k].edges) scratch.flip(e);
    return ok;
}

std::vector<Trail> first_valid_order(std::vector<Trail> parts, Subgraph& scratch, const DegreeBounds& bounds) {
    static constexpr std::array<std::array<int, 3>, 6> kOrders{
        {{0, 1, 2}, {0, 2, 1}, {1, 0, 2}, {1, 2, 0}, {2, 0, 1}, {2, 1, 0}}};
    std::vector<std::vector<int>> orders;
    if (parts.size() == 2) orders = {{0, 1}, {1, 0}};
    else
        for (const auto& o : kOrders) orders.push_back({o.begin(), o.end()});
    for (const auto& order : orders) {
        std::vector<Trail> candidate;
        for (int i : order) candidate.push_back(parts[i]);
        if (order_is_valid(candidate, scratch, bounds)) return candidate;
    }
    return {};
}

// Splits an oriented trail of length >= 4 that satisfies the conditions into
// smaller even parts with a processing order in which each part is valid.
std::vector<Trail> split_for_elementary(const Trail& t, const Subgraph& s, const DegreeBounds& bounds) {
    const std::size_t len = t.length();
    Subgraph scratch = s;
    if (!t.closed()) {
        // Q = v_i v_{i+1} v_{i+2} with v_i not a-tight and v_{i+2} not b-tight;
        // R and S are what lies before and after Q.
        for (std::size_t i = 0; i + 2 <= len; i += 2) {
            if (is_a_tight(s, bounds, t.vertices[i]) || is_b_tight(s, bounds, t.vertices[i + 2])) continue;
            // preference: Q first, then R first, then S first
            std::vector<Trail> parts{slice(t, i, i + 2)};
            if (i > 0) parts.push_back(slice(t, 0, i));
            if (i + 2 < len) parts.push_back(slice(t, i + 2, len));
            auto order = first_valid_order(parts, scratch, bounds);
            if (!order.empty()) return order;
        }
        for (std::size_t j = 2; j + 2 <= len; j += 2) {
            auto order = first_valid_order({slice(t, 0, j), slice(t, j, len)}, scratch, bounds);
            if (!order.empty()) return order;
        }
        return {};
    }
    // closed: cut into two arcs, shortest first arcs tried first
    for (std::size_t q = 2; q + 2 <= len; q += 2)
        for (std::size_t start = 0; start < len; ++start) {
            auto order = first_valid_order({arc(t, start, q), arc(t, start + q, len - q)}, scratch, bounds);
            if (!order.empty()) return order;
        }
    return {};
}

bool ends_ok(const Trail& rest, const Subgraph& s, const DegreeBounds& bounds, Direction dir) {
    for (Vertex v : {rest.vertices.front(), rest.vertices.back()}) {
        if (dir == Direction::MtoN ? is_b_tight(s, bounds, v) : is_a_tight(s, bounds, v)) return false;
    }
    return true;
}

}  // namespace

namespace detail {

bool run_elementary(MoveRecorder& rec, const Trail& t) {
    MoveRecorder local = rec;
    const DegreeBounds& bounds = rec.bounds();
    std::vector<Trail> stack{t};
    while (!stack.empty()) {
        const Trail seg = oriented(stack.back(), local.state());
        stack.pop_back();
        if (seg.length() % 2 != 0 || seg.empty()) return false;
        if (!check_oriented(seg, local.state(), bounds).ok()) return false;
        if (seg.length() == 2) {
            const EdgeId out = seg.edges[0], in = seg.edges[1];
            if (is_b_tight(local.state(), bounds, seg.vertices[1])) {
                local.remove(out);
                local.add(in);
            } else {
                local.add(in);
                local.remove(out);
            }
            continue;
        }
        auto parts = split_for_elementary(seg, local.state(), bounds);
        if (parts.empty()) return false;
        for (auto it = parts.rbegin(); it != parts.rend(); ++it) stack.push_back(*it);
    }
    rec = std::move(local);
    return true;
}

bool run_odd(MoveRecorder& rec, const Trail& t, Direction dir) {
    MoveRecorder local = rec;
    const DegreeBounds& bounds = rec.bounds();
    Trail seg = t;
    while (!seg.empty()) {
        const bool front_in = local.state().contains(seg.edges.front());
        if (front_in != (dir == Direction::NtoM)) return false;
        const std::size_t len = seg.length();
        if (len == 1) {
            const EdgeId e = seg.edges.front();
            if (dir == Direction::MtoN ? !local.can_add(e) : !local.can_remove(e)) return false;
            dir == Direction::MtoN ? local.add(e) : local.remove(e);
            break;
        }
        bool progressed = false;
        // split off an even part at one end, keeping the odd rest swappable
        Subgraph scratch = local.state();
        for (std::size_t i = 1; i < len && !progressed; ++i) {
            Trail part = i % 2 == 0 ? slice(seg, 0, i) : slice(seg, i, len);
            Trail rest = i % 2 == 0 ? slice(seg, i, len) : slice(seg, 0, i);
            if (!check_in(part, scratch, bounds).ok()) continue;
            for (EdgeId e : part.edges) scratch.flip(e);
            const bool good = ends_ok(rest, scratch, bounds, dir);
            for (EdgeId e : part.edges) scratch.flip(e);
            if (!good || !run_elementary(local, part)) continue;
            seg = std::move(rest);
            progressed = true;
        }
        if (progressed) continue;
        // otherwise move one end edge first and swap the even remainder
        for (bool at_front : {true, false}) {
            const EdgeId e = at_front ? seg.edges.front() : seg.edges.back();
            if (dir == Direction::MtoN ? !local.can_add(e) : !local.can_remove(e)) continue;
            Trail rest = at_front ? slice(seg, 1, len) : slice(seg, 0, len - 1);
            scratch.flip(e);
            const bool good = check_in(rest, scratch, bounds).ok();
            scratch.flip(e);
            if (!good) continue;
            MoveRecorder attempt = local;
            dir == Direction::MtoN ? attempt.add(e) : attempt.remove(e);
            if (!run_elementary(attempt, rest)) continue;
            local = std::move(attempt);
            seg = {};
            progressed = true;
            break;
        }
        if (!progressed) return false;
    }
    rec = std::move(local);
    return true;
}

bool run_closed_even(MoveRecorder& rec, const Trail& t, bool allow_k2) {
    const Trail c = oriented(t, rec.state());
    const auto check = check_oriented(c, rec.state(), rec.bounds());
    if (check.ok()) return run_elementary(rec, c);
    const std::size_t len = c.length();
    switch (check.condition) {
        case InternalCondition::ClosedBTight: {
            if (!allow_k2) throw NeedsK2Error("b-tight cycle needs two edges of slack");
            MoveRecorder attempt = rec;
            attempt.remove(c.edges.front());
            if (!run_odd(attempt, slice(c, 1, len), Direction::MtoN)) return false;
            rec = std::move(attempt);
            return true;
        }
        case InternalCondition::ClosedATight: {
            MoveRecorder attempt = rec;
            attempt.add(c.edges.back());
            if (!run_odd(attempt, slice(c, 0, len - 1), Direction::NtoM)) return false;
            rec = std::move(attempt);
            return true;
        }
        default:
            throw NotInternallyReconfigurable(check, std::string("closed trail: ") +
                                                         std::string(to_string(check.condition)));
    }
}

}  // namespace detail

ConditionCheck check_internal_conditions(const Trail& t, const Subgraph& m, const DegreeBounds& bounds) {
    if (t.empty() || t.length() % 2 != 0) throw ContractError("internal conditions apply to even, non-empty trails");
    require_alternating(t, m);
    return check_in(t, m, bounds);
}

MoveSequence reconfigure_elementary(const Trail& t, const Subgraph& m, const DegreeBounds& bounds) {
    const auto check = check_internal_conditions(t, m, bounds);
    if (!check.ok())
        throw NotInternallyReconfigurable(check, std::string(to_string(check.condition)) + " at vertex " +
                                                     std::to_string(check.witness));
    MoveRecorder rec(m, bounds);
    if (!detail::run_elementary(rec, t)) throw std::logic_error("elementary synthesis failed on a valid trail");
    return rec.take();
}

bool is_maximal_trail(const Trail& t, const Subgraph& m, const Subgraph& n) {
    if (t.empty()) return false;
    const Graph& g = m.host();
    std::set<EdgeId> used(t.edges.begin(), t.edges.end());
    auto extendable = [&](Vertex at, EdgeId last) {
        const bool want_in_m = !m.contains(last);
        for (EdgeId e : g.incident(at))
            if (!used.count(e) && m.contains(e) != n.contains(e) && m.contains(e) == want_in_m) return true;
        return false;
    };
    return !extendable(t.vertices.front(), t.edges.front()) && !extendable(t.vertices.back(), t.edges.back());
}

MoveSequence reconfigure_open_even_maximal(const Trail& t, const Subgraph& m, const Subgraph& n,
                                           const DegreeBounds& bounds) {
    if (t.empty() || t.length() % 2 != 0 || t.closed()) throw ContractError("expected an open trail of even length");
    require_alternating(t, m);
    if (!is_maximal_trail(t, m, n)) throw ContractError("trail is not maximal");
    return reconfigure_elementary(t, m, bounds);
}

MoveSequence reconfigure_odd_maximal(const Trail& t, const Subgraph& m, const Subgraph& n,
                                     const DegreeBounds& bounds, Direction direction) {
    if (t.length() % 2 != 1) throw ContractError("expected an odd trail");
    require_alternating(t, m);
    if (!is_maximal_trail(t, m, n)) throw ContractError("trail is not maximal");
    if (m.contains(t.edges.front()) != (direction == Direction::NtoM))
        throw ContractError("trail end edges do not match the requested direction");
    MoveRecorder rec(m, bounds);
    if (!detail::run_odd(rec, t, direction))
        throw NotInternallyReconfigurable({}, "odd trail: tightness pattern contradicts maximality");
    return rec.take();
}

MoveSequence reconfigure_closed_even(const Trail& t, const Subgraph& m, const DegreeBounds& bounds,
                                     bool allow_k2) {
    if (!t.closed() || t.length() % 2 != 0) throw ContractError("expected a closed trail of even length");
    require_alternating(t, m);
    MoveRecorder rec(m, bounds);
    if (!detail::run_closed_even(rec, t, allow_k2))
        throw std::logic_error("closed trail synthesis failed");
    return rec.take();
}

}  // namespace dcsr
