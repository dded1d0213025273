#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace dcsr {

using Vertex = int;
using EdgeId = int;

class InputError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// A precondition of a library routine was violated by the caller.
class ContractError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

class IllegalMoveError : public std::runtime_error {
public:
    IllegalMoveError(std::size_t step, const std::string& what)
        : std::runtime_error(what), step_(step) {}
    std::size_t step() const noexcept { return step_; }

private:
    std::size_t step_;
};

/// Simple undirected graph on vertices 0..n-1. Edges are identified by their
/// insertion index, which never changes.
class Graph {
public:
    Graph() = default;
    Graph(int num_vertices, std::vector<std::pair<Vertex, Vertex>> edges);

    int num_vertices() const noexcept { return num_vertices_; }
    int num_edges() const noexcept { return static_cast<int>(edges_.size()); }

    const std::pair<Vertex, Vertex>& endpoints(EdgeId e) const { return edges_.at(e); }
    const std::vector<std::pair<Vertex, Vertex>>& edges() const noexcept { return edges_; }
    const std::vector<EdgeId>& incident(Vertex v) const { return incident_.at(v); }
    int degree(Vertex v) const { return static_cast<int>(incident(v).size()); }

    Vertex other_end(EdgeId e, Vertex v) const;
    bool has_vertex(Vertex v) const noexcept { return v >= 0 && v < num_vertices_; }
    bool has_edge(EdgeId e) const noexcept { return e >= 0 && e < num_edges(); }

private:
    int num_vertices_ = 0;
    std::vector<std::pair<Vertex, Vertex>> edges_;
    std::vector<std::vector<EdgeId>> incident_;
};

using GraphPtr = std::shared_ptr<const Graph>;

struct DegreeBounds {
    std::vector<int> a;
    std::vector<int> b;

    /// Throws InputError unless 0 <= a(v) <= b(v) <= deg_G(v) for every vertex.
    void validate(const Graph& g) const;
};

/// Edge subset of a host graph with an incrementally maintained degree table.
class Subgraph {
public:
    Subgraph() = default;
    explicit Subgraph(GraphPtr host);
    Subgraph(GraphPtr host, const std::vector<EdgeId>& edges);

    const Graph& host() const { return *host_; }
    const GraphPtr& host_ptr() const noexcept { return host_; }

    bool contains(EdgeId e) const { return member_.at(e) != 0; }
    std::size_t size() const noexcept { return size_; }
    bool empty() const noexcept { return size_ == 0; }
    int degree(Vertex v) const;

    void insert(EdgeId e);
    void erase(EdgeId e);
    void flip(EdgeId e) { contains(e) ? erase(e) : insert(e); }

    /// Edge indices in ascending order.
    std::vector<EdgeId> edge_list() const;

    bool operator==(const Subgraph& other) const { return member_ == other.member_; }
    bool operator!=(const Subgraph& other) const { return !(*this == other); }

private:
    GraphPtr host_;
    std::vector<char> member_;
    std::vector<int> degree_;
    std::size_t size_ = 0;
};

int degree_in(const Subgraph& s, Vertex v);
Subgraph symmetric_difference(const Subgraph& h, const Subgraph& k);
Subgraph intersection(const Subgraph& h, const Subgraph& k);
bool is_ab_constrained(const Subgraph& s, const DegreeBounds& bounds);

struct Tightness {
    bool a_tight = false;
    bool b_tight = false;
    bool ab_fixed() const noexcept { return a_tight && b_tight; }
};

Tightness vertex_tightness(const Subgraph& s, const DegreeBounds& bounds, Vertex v);
inline bool is_a_tight(const Subgraph& s, const DegreeBounds& bounds, Vertex v) {
    return s.degree(v) == bounds.a[v];
}
inline bool is_b_tight(const Subgraph& s, const DegreeBounds& bounds, Vertex v) {
    return s.degree(v) == bounds.b[v];
}

struct Move {
    enum class Kind { Add, Remove };
    Kind kind = Kind::Add;
    EdgeId edge = 0;

    static Move add(EdgeId e) { return {Kind::Add, e}; }
    static Move remove(EdgeId e) { return {Kind::Remove, e}; }
    Move inverse() const { return {kind == Kind::Add ? Kind::Remove : Kind::Add, edge}; }
    bool operator==(const Move&) const = default;
};

using MoveSequence = std::vector<Move>;

/// Reverses the order and swaps Add/Remove: the result undoes `seq`.
MoveSequence invert_sequence(const MoveSequence& seq);

/// Applies `m` in place; `step` is reported in the error on a precondition failure.
void apply_move_inplace(Subgraph& s, const Move& m, std::size_t step = 0);
Subgraph apply_move(const Subgraph& s, const Move& m, std::size_t step = 0);

struct Instance {
    GraphPtr graph;
    DegreeBounds bounds;
    Subgraph source;
    Subgraph target;
    int slack = 1;

    /// min(|M|, |N|) - k; every intermediate state must have at least this many edges.
    long size_floor() const;
    /// Bounds valid, source/target ab-constrained, slack >= 1.
    void validate() const;
};

struct VerifyResult {
    bool ok = true;
    std::optional<std::size_t> failed_step;  // index of the offending move, if any
    std::string reason;
    explicit operator bool() const noexcept { return ok; }
};

VerifyResult verify_move_sequence(const Instance& inst, const MoveSequence& seq);

}  // namespace dcsr
