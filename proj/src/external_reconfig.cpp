#include "dcsr/external_reconfig.hpp"

#include "dcsr/dcs_solver.hpp"
#include "dcsr/internal_reconfig.hpp"
#include "gadget.hpp"

#include <algorithm>
#include <set>

namespace dcsr {

using detail::MoveRecorder;
using detail::run_elementary;

bool EvenSet::contains(Vertex v) const { return std::binary_search(members.begin(), members.end(), v); }

std::optional<Trail> even_witness_trail(const DegreeBounds& bounds, const Subgraph& m, Vertex v) {
    if (!is_b_tight(m, bounds, v)) return Trail{{v}, {}};
    if (is_a_tight(m, bounds, v)) return std::nullopt;
    const Graph& g = m.host();
    const std::vector<char> all(g.num_edges(), 1);
    detail::TrailGadget gadget(m, all, bounds.b);
    const int release = gadget.add_release(v);
    auto found = gadget.search({release});
    if (!found) return std::nullopt;
    Trail t{std::move(found->vertices), std::move(found->edges)};
    // the path is found from the release end, i.e. it arrives at v last
    if (!t.empty() && t.vertices.front() != v) t = t.reversed();
    return t;
}

EvenSet compute_even_set(const DegreeBounds& bounds, const Subgraph& m) {
    EvenSet out;
    for (Vertex v = 0; v < m.host().num_vertices(); ++v)
        if (even_witness_trail(bounds, m, v)) out.members.push_back(v);
    return out;
}

namespace {

Trail concat(const Trail& a, const Trail& b) {
    if (a.empty()) return b;
    if (b.empty()) return a;
    if (a.vertices.back() != b.vertices.front()) throw std::logic_error("trails do not meet");
    Trail out = a;
    out.edges.insert(out.edges.end(), b.edges.begin(), b.edges.end());
    out.vertices.insert(out.vertices.end(), b.vertices.begin() + 1, b.vertices.end());
    return out;
}

Trail slice(const Trail& t, std::size_t from, std::size_t to) {
    return {{t.vertices.begin() + from, t.vertices.begin() + to + 1},
            {t.edges.begin() + from, t.edges.begin() + to}};
}

// The cycle read from position `pos` all the way round, reversed if needed so
// that its first edge lies outside `s`.
Trail rotate_to(const Trail& c, std::size_t pos, const Subgraph& s) {
    const std::size_t n = c.length();
    Trail out{{c.vertices[pos]}, {}};
    for (std::size_t k = 0; k < n; ++k) {
        out.edges.push_back(c.edges[(pos + k) % n]);
        out.vertices.push_back(c.vertices[(pos + k + 1) % n]);
    }
    if (s.contains(out.edges.front())) out = out.reversed();
    return out;
}

Subgraph flipped(const Subgraph& s, const Trail& t) {
    Subgraph out = s;
    for (EdgeId e : t.edges) out.flip(e);
    return out;
}

std::optional<MoveSequence> btight_via(const Trail& c, const Subgraph& m, const DegreeBounds& bounds,
                                       const Trail& p) {
    const std::set<EdgeId> cycle_edges(c.edges.begin(), c.edges.end());
    std::optional<std::size_t> last;
    for (std::size_t i = 0; i < p.length(); ++i)
        if (cycle_edges.count(p.edges[i])) last = i;

    MoveRecorder rec(m, bounds);
    if (!last || !m.contains(p.edges[*last])) {
        // detour starts at a cycle vertex with a non-cycle M-edge
        const Trail detour = last ? slice(p, *last + 1, p.length()) : p;
        if (detour.empty()) return std::nullopt;
        if (!run_elementary(rec, detour) || !run_elementary(rec, c) || !run_elementary(rec, detour))
            return std::nullopt;
    } else {
        // detour begins with the cycle M-edge f = (x, u0)
        const std::size_t j = *last;
        const EdgeId f = p.edges[j];
        const Vertex x = p.vertices[j], u0 = p.vertices[j + 1];
        const Trail head = slice(p, j, p.length());
        if (!run_elementary(rec, head)) return std::nullopt;
        const std::size_t cpos = static_cast<std::size_t>(
            std::find(c.edges.begin(), c.edges.end(), f) - c.edges.begin());
        // rest of the cycle from u0 round to x, without f
        const Subgraph none(m.host_ptr());
        Trail around = rotate_to(c, (cpos + 1) % c.length(), none);
        around = slice(around, 0, around.length() - 1);
        if (around.vertices.front() != u0) around = around.reversed();
        if (around.vertices.front() != u0 || around.vertices.back() != x) return std::nullopt;
        const Trail back = concat(slice(p, j + 1, p.length()).reversed(), around);
        if (!run_elementary(rec, back)) return std::nullopt;
    }
    if (rec.state() != flipped(m, c)) return std::nullopt;
    return rec.take();
}

// Greedy open (S, S')-alternating trail from v whose first edge is in S - S',
// extended at its far end only.
Trail detour_from(Vertex v, EdgeId first, const Subgraph& s, const Subgraph& sp) {
    const Graph& g = s.host();
    std::vector<char> used(g.num_edges(), 0);
    Trail t{{v, g.other_end(first, v)}, {first}};
    used[first] = 1;
    for (;;) {
        const bool want_in_s = !s.contains(t.edges.back());
        EdgeId best = -1;
        for (EdgeId e : g.incident(t.vertices.back()))
            if (!used[e] && s.contains(e) != sp.contains(e) && s.contains(e) == want_in_s && (best < 0 || e < best))
                best = e;
        if (best < 0) break;
        used[best] = 1;
        t.vertices.push_back(g.other_end(best, t.vertices.back()));
        t.edges.push_back(best);
    }
    return t;
}

// Cycle vertex b-tight in S but not in S': swap the cycle by threading it
// through a detour in S sym-diff S', then restore the detour.
std::optional<MoveSequence> unlock_at_btight(const Trail& c, const Subgraph& s, const Subgraph& sp,
                                             const DegreeBounds& bounds) {
    const Graph& g = s.host();
    const Subgraph target = flipped(s, c);
    for (std::size_t pos = 0; pos < c.length(); ++pos) {
        const Vertex v = c.vertices[pos];
        if (!is_b_tight(s, bounds, v) || is_b_tight(sp, bounds, v)) continue;
        const Trail around = rotate_to(c, pos, s);  // v -> ... -> v, first edge outside S
        for (EdgeId first : g.incident(v)) {
            if (!s.contains(first) || sp.contains(first)) continue;
            const Trail t = detour_from(v, first, s, sp);
            MoveRecorder rec(s, bounds);
            bool ok;
            if (t.length() % 2 == 0) {
                ok = run_elementary(rec, concat(t.reversed(), around)) && run_elementary(rec, t);
            } else {
                const std::size_t n = around.length();
                const Trail r = concat(t.reversed(), slice(around, 0, n - 1));
                const Trail rest = concat(slice(around, n - 1, n), t);
                ok = run_elementary(rec, r) && run_elementary(rec, rest);
            }
            if (ok && rec.state() == target) return rec.take();
        }
    }
    return std::nullopt;
}

Subgraph complement(const Subgraph& s) {
    Subgraph out(s.host_ptr());
    for (EdgeId e = 0; e < s.host().num_edges(); ++e)
        if (!s.contains(e)) out.insert(e);
    return out;
}

DegreeBounds complement_bounds(const Graph& g, const DegreeBounds& bounds) {
    DegreeBounds out;
    for (Vertex v = 0; v < g.num_vertices(); ++v) {
        out.a.push_back(g.degree(v) - bounds.b[v]);
        out.b.push_back(g.degree(v) - bounds.a[v]);
    }
    return out;
}

void require_closed_even(const Trail& c, const Subgraph& m) {
    if (!c.closed() || c.length() % 2 != 0) throw ContractError("expected a closed trail of even length");
    require_alternating(c, m);
}

}  // namespace

MoveSequence reconfigure_btight_cycle(const Trail& c, const Subgraph& m, const DegreeBounds& bounds) {
    require_closed_even(c, m);
    if (!all_vertices_b_tight(c, m, bounds)) throw ContractError("cycle is not b-tight");
    bool any_witness = false;
    std::set<Vertex> tried;
    for (Vertex v : c.vertices) {
        if (!tried.insert(v).second) continue;
        auto p = even_witness_trail(bounds, m, v);
        if (!p) continue;
        any_witness = true;
        if (auto seq = btight_via(c, m, bounds, *p)) return *seq;
    }
    if (!any_witness) throw LockedCycle(c, "no vertex of the b-tight cycle is in the even set");
    throw std::logic_error("b-tight cycle has an even-set vertex but the detour construction failed");
}

std::optional<Subgraph> exists_unlocking_subgraph(const Trail& c, const Subgraph& m, const DegreeBounds& bounds) {
    require_closed_even(c, m);
    if (!is_alternatingly_ab_tight(c, m, bounds)) throw ContractError("cycle is not alternatingly ab-tight");
    const Graph& g = m.host();
    const std::set<EdgeId> cycle_edges(c.edges.begin(), c.edges.end());

    std::vector<std::pair<Vertex, Vertex>> rest_edges;
    std::vector<EdgeId> to_parent;
    for (EdgeId e = 0; e < g.num_edges(); ++e) {
        if (cycle_edges.count(e)) continue;
        rest_edges.push_back(g.endpoints(e));
        to_parent.push_back(e);
    }
    auto h = std::make_shared<const Graph>(g.num_vertices(), std::move(rest_edges));
    DegreeBounds hb;
    std::vector<int> frozen(g.num_vertices(), 0);
    for (EdgeId e : c.edges)
        if (m.contains(e)) {
            ++frozen[g.endpoints(e).first];
            ++frozen[g.endpoints(e).second];
        }
    for (Vertex v = 0; v < g.num_vertices(); ++v) {
        hb.a.push_back(std::max(0, bounds.a[v] - frozen[v]));
        hb.b.push_back(bounds.b[v] - frozen[v]);
    }

    std::set<Vertex> seen;
    for (Vertex v : c.vertices) {
        if (!seen.insert(v).second) continue;
        const auto tight = vertex_tightness(m, bounds, v);
        for (int goal = 0; goal < 2; ++goal) {
            DegreeBounds probe = hb;
            if (goal == 0) {
                if (!tight.b_tight) continue;
                probe.b[v] -= 1;  // leave v below its upper bound
            } else {
                if (!tight.a_tight) continue;
                probe.a[v] = bounds.a[v] + 1 - frozen[v];  // lift v above its lower bound
            }
            auto sol = feasible_dcs(h, probe);
            if (!sol) continue;
            Subgraph mp(m.host_ptr());
            for (EdgeId e : c.edges)
                if (m.contains(e)) mp.insert(e);
            for (EdgeId e : sol->edge_list()) mp.insert(to_parent[e]);
            if (is_ab_constrained(mp, bounds) && !is_alternatingly_ab_tight(c, mp, bounds)) return mp;
        }
    }
    return std::nullopt;
}

MoveSequence reconfigure_alt_abtight_cycle(const Trail& c, const Subgraph& m, const Subgraph& mprime,
                                           const DegreeBounds& bounds) {
    require_closed_even(c, m);
    for (EdgeId e : c.edges)
        if (m.contains(e) != mprime.contains(e)) throw ContractError("M' must agree with M on the cycle");
    if (!is_ab_constrained(mprime, bounds) || is_alternatingly_ab_tight(c, mprime, bounds))
        throw ContractError("M' does not unlock the cycle");

    if (auto seq = unlock_at_btight(c, m, mprime, bounds)) return *seq;

    // a-tight in M but not in M': the same construction on complements,
    // where a-tight and b-tight trade places and additions become removals
    const Graph& g = m.host();
    const DegreeBounds cb = complement_bounds(g, bounds);
    if (auto seq = unlock_at_btight(c, complement(m), complement(mprime), cb)) {
        for (Move& mv : *seq) mv = mv.inverse();
        return *seq;
    }
    throw ContractError("M' gave no usable detour for the cycle");
}

}  // namespace dcsr
