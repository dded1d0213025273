#pragma once

#include "dcsr/decider.hpp"
#include "dcsr/graph.hpp"

#include <string>
#include <string_view>

namespace dcsr {

enum class ParseErrorCode {
    Malformed = 10,            // not JSON, wrong shape, bad graph
    BoundOrder = 11,           // a(v) > b(v)
    BoundExceedsDegree = 12,   // b(v) > deg(v)
    InfeasibleSource = 13,
    InfeasibleTarget = 14,
};

std::string_view to_string(ParseErrorCode c);

class ParseError : public InputError {
public:
    ParseError(ParseErrorCode code, std::string field, const std::string& what)
        : InputError(what), code_(code), field_(std::move(field)) {}
    ParseErrorCode code() const noexcept { return code_; }
    const std::string& field() const noexcept { return field_; }

private:
    ParseErrorCode code_;
    std::string field_;
};

/// Document fields: version (1), vertices, edges [[u,v],...], a, b, source,
/// target (edge indices), k.
Instance parse_instance(std::string_view text);
/// Canonical form: fixed key order, sorted edge sets, one line.
std::string serialize_instance(const Instance& inst);

std::string serialize_decision(const Decision& d);
/// Accepts a decision document with "moves" or a bare array of
/// {"op":"add"|"remove","edge":i} objects.
MoveSequence parse_moves(std::string_view text);

std::string serialize_edges(const Subgraph& s);
std::string serialize_trace(const std::vector<TraceEntry>& trace);

}  // namespace dcsr
