#pragma once

// Vertex-splitting gadget: a degree-constrained subgraph S of (a subset of)
// the host graph becomes a matching in an auxiliary graph, so that
// alternating trails relative to S correspond to alternating paths.
//
//   edge e = uv      -> two gadget vertices e@u, e@v joined by an "internal" edge
//   vertex v         -> one "slot" per S-edge at v (matched to that e@v), plus
//                       up to two free slots while v has spare capacity
//   e in S           <=> e@u, e@v are matched to slots of u and v
//   e not in S       <=> e@u is matched to e@v
//
// A path flips exactly the edges whose internal edge it traverses, in order.
// Optional "release" vertices attached to all slots of v let a path end by
// giving up one S-edge at v.

#include "blossom.hpp"
#include "dcsr/graph.hpp"

#include <optional>
#include <vector>

namespace dcsr::detail {

struct DecodedTrail {
    std::vector<Vertex> vertices;
    std::vector<EdgeId> edges;
};

class TrailGadget {
public:
    /// `usable[e]` selects the host edges present in the gadget; `capacity[v]`
    /// is the upper degree bound of v counted over usable edges only.
    TrailGadget(const Subgraph& s, const std::vector<char>& usable, const std::vector<int>& capacity);

    std::vector<int> free_slots(Vertex v) const;
    /// Adds a release vertex for v and returns its id.
    int add_release(Vertex v);

    std::optional<DecodedTrail> search(const std::vector<int>& roots);

private:
    DecodedTrail decode(const std::vector<int>& path) const;

    const Graph& g_;
    BlossomSearch search_;
    std::vector<int> edge_node_;  // gadget id of e@first endpoint; +1 for second
    std::vector<std::vector<int>> slots_;
    std::vector<int> free_begin_;  // index into slots_[v] where free slots start
};

}  // namespace dcsr::detail
