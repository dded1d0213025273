#include "dcsr/io.hpp"

#include <json.hpp>

#include <algorithm>

namespace dcsr {

using json = nlohmann::ordered_json;

std::string_view to_string(ParseErrorCode c) {
    switch (c) {
        case ParseErrorCode::Malformed: return "malformed";
        case ParseErrorCode::BoundOrder: return "bound-order";
        case ParseErrorCode::BoundExceedsDegree: return "bound-exceeds-degree";
        case ParseErrorCode::InfeasibleSource: return "infeasible-source";
        case ParseErrorCode::InfeasibleTarget: return "infeasible-target";
    }
    return "?";
}

namespace {

[[noreturn]] void fail(ParseErrorCode code, const std::string& field, const std::string& msg) {
    throw ParseError(code, field, field.empty() ? msg : "field '" + field + "': " + msg);
}

json parse_json(std::string_view text) {
    try {
        return json::parse(text);
    } catch (const json::parse_error& ex) {
        // report line and column of the offending byte
        std::size_t line = 1, col = 1;
        for (std::size_t i = 0; i + 1 < ex.byte && i < text.size(); ++i) {
            if (text[i] == '\n') ++line, col = 1;
            else ++col;
        }
        fail(ParseErrorCode::Malformed, "",
             "line " + std::to_string(line) + ", column " + std::to_string(col) + ": not valid JSON");
    }
}

const json& field_of(const json& doc, const char* name) {
    if (!doc.contains(name)) fail(ParseErrorCode::Malformed, name, "missing");
    return doc.at(name);
}

long integer(const json& v, const std::string& field) {
    if (!v.is_number_integer()) fail(ParseErrorCode::Malformed, field, "expected an integer");
    return v.get<long>();
}

std::vector<int> int_array(const json& v, const std::string& field) {
    if (!v.is_array()) fail(ParseErrorCode::Malformed, field, "expected an array");
    std::vector<int> out;
    for (std::size_t i = 0; i < v.size(); ++i)
        out.push_back(static_cast<int>(integer(v[i], field + "[" + std::to_string(i) + "]")));
    return out;
}

Subgraph edge_set(const GraphPtr& g, const json& v, const std::string& field) {
    Subgraph s(g);
    const auto ids = int_array(v, field);
    for (std::size_t i = 0; i < ids.size(); ++i) {
        const std::string at = field + "[" + std::to_string(i) + "]";
        if (!g->has_edge(ids[i])) fail(ParseErrorCode::Malformed, at, "no edge " + std::to_string(ids[i]));
        if (s.contains(ids[i])) fail(ParseErrorCode::Malformed, at, "edge listed twice");
        s.insert(ids[i]);
    }
    return s;
}

json edges_json(const Subgraph& s) {
    auto ids = s.edge_list();
    std::sort(ids.begin(), ids.end());
    return json(ids);
}

json trail_json(const Trail& t) { return {{"vertices", t.vertices}, {"edges", t.edges}}; }

}  // namespace

Instance parse_instance(std::string_view text) {
    const json doc = parse_json(text);
    if (!doc.is_object()) fail(ParseErrorCode::Malformed, "", "document must be an object");
    if (integer(field_of(doc, "version"), "version") != 1) fail(ParseErrorCode::Malformed, "version", "unsupported version");
    const long n = integer(field_of(doc, "vertices"), "vertices");
    if (n < 0) fail(ParseErrorCode::Malformed, "vertices", "must be non-negative");

    const json& ej = field_of(doc, "edges");
    if (!ej.is_array()) fail(ParseErrorCode::Malformed, "edges", "expected an array");
    std::vector<std::pair<Vertex, Vertex>> edges;
    for (std::size_t i = 0; i < ej.size(); ++i) {
        const std::string at = "edges[" + std::to_string(i) + "]";
        if (!ej[i].is_array() || ej[i].size() != 2) fail(ParseErrorCode::Malformed, at, "expected [u, v]");
        edges.emplace_back(static_cast<Vertex>(integer(ej[i][0], at)), static_cast<Vertex>(integer(ej[i][1], at)));
    }
    GraphPtr g;
    try {
        g = std::make_shared<const Graph>(static_cast<int>(n), std::move(edges));
    } catch (const InputError& ex) {
        fail(ParseErrorCode::Malformed, "edges", ex.what());
    }

    DegreeBounds bounds{int_array(field_of(doc, "a"), "a"), int_array(field_of(doc, "b"), "b")};
    if (bounds.a.size() != static_cast<std::size_t>(n)) fail(ParseErrorCode::Malformed, "a", "needs one entry per vertex");
    if (bounds.b.size() != static_cast<std::size_t>(n)) fail(ParseErrorCode::Malformed, "b", "needs one entry per vertex");
    for (Vertex v = 0; v < n; ++v) {
        const std::string at = "[" + std::to_string(v) + "]";
        if (bounds.a[v] < 0) fail(ParseErrorCode::Malformed, "a" + at, "must be non-negative");
        if (bounds.a[v] > bounds.b[v]) fail(ParseErrorCode::BoundOrder, "a" + at, "a(v) exceeds b(v)");
        if (bounds.b[v] > g->degree(v)) fail(ParseErrorCode::BoundExceedsDegree, "b" + at, "b(v) exceeds the degree");
    }

    Subgraph source = edge_set(g, field_of(doc, "source"), "source");
    Subgraph target = edge_set(g, field_of(doc, "target"), "target");
    const long k = integer(field_of(doc, "k"), "k");
    if (k < 1) fail(ParseErrorCode::Malformed, "k", "must be at least 1");
    if (!is_ab_constrained(source, bounds)) fail(ParseErrorCode::InfeasibleSource, "source", "violates the degree bounds");
    if (!is_ab_constrained(target, bounds)) fail(ParseErrorCode::InfeasibleTarget, "target", "violates the degree bounds");
    return Instance{g, std::move(bounds), std::move(source), std::move(target), static_cast<int>(k)};
}

std::string serialize_instance(const Instance& inst) {
    json edges = json::array();
    for (auto [u, v] : inst.graph->edges()) edges.push_back({u, v});
    const json doc = {{"version", 1},
                      {"vertices", inst.graph->num_vertices()},
                      {"edges", edges},
                      {"a", inst.bounds.a},
                      {"b", inst.bounds.b},
                      {"source", edges_json(inst.source)},
                      {"target", edges_json(inst.target)},
                      {"k", inst.slack}};
    return doc.dump() + "\n";
}

std::string serialize_decision(const Decision& d) {
    json doc;
    if (d.yes) {
        json moves = json::array();
        for (const Move& m : d.moves)
            moves.push_back({{"op", m.kind == Move::Kind::Add ? "add" : "remove"}, {"edge", m.edge}});
        doc = {{"answer", "yes"}, {"moves", moves}};
    } else {
        const Witness& w = *d.witness;
        json wj = {{"kind", to_string(w.kind)}};
        if (w.kind == Witness::Kind::FixedEdge) wj["edge"] = w.edge;
        else wj["cycle"] = trail_json(w.cycle);
        if (w.state) wj["state"] = edges_json(*w.state);
        wj["k"] = w.slack;
        wj["context"] = w.context;
        doc = {{"answer", "no"}, {"witness", wj}};
    }
    return doc.dump() + "\n";
}

MoveSequence parse_moves(std::string_view text) {
    json doc = parse_json(text);
    if (doc.is_object()) doc = field_of(doc, "moves");
    if (!doc.is_array()) fail(ParseErrorCode::Malformed, "moves", "expected an array");
    MoveSequence out;
    for (std::size_t i = 0; i < doc.size(); ++i) {
        const std::string at = "moves[" + std::to_string(i) + "]";
        const json& m = doc[i];
        if (!m.is_object() || !m.contains("op") || !m["op"].is_string())
            fail(ParseErrorCode::Malformed, at, "expected {\"op\":..., \"edge\":...}");
        const std::string op = m["op"].get<std::string>();
        if (op != "add" && op != "remove") fail(ParseErrorCode::Malformed, at + ".op", "must be add or remove");
        const EdgeId e = static_cast<EdgeId>(integer(field_of(m, "edge"), at + ".edge"));
        out.push_back(op == "add" ? Move::add(e) : Move::remove(e));
    }
    return out;
}

std::string serialize_edges(const Subgraph& s) { return edges_json(s).dump() + "\n"; }

std::string serialize_trace(const std::vector<TraceEntry>& trace) {
    json out = json::array();
    for (const TraceEntry& t : trace)
        out.push_back({{"class", to_string(t.trail_class)},
                       {"routine", t.routine},
                       {"moves", t.moves},
                       {"trail", trail_json(t.trail)}});
    return out.dump() + "\n";
}

}  // namespace dcsr
