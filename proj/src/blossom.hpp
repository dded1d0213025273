#pragma once

// Edmonds' blossom search for augmenting paths in a general graph, run over
// a forest of selected roots. Used on the vertex-splitting gadget that turns
// degree-constrained alternating trails into alternating paths.

#include <vector>

namespace dcsr::detail {

class BlossomSearch {
public:
    explicit BlossomSearch(int num_vertices);

    int add_vertex();
    void add_edge(int u, int v);
    /// Marks u and v as matched to each other; both must currently be exposed.
    void match(int u, int v);
    int mate(int v) const { return mate_[v]; }
    int size() const { return static_cast<int>(adj_.size()); }

    /// Searches for an alternating path that starts at one of `roots` and ends
    /// at a different exposed vertex (another root qualifies). Every root must
    /// be exposed. Returns the vertex sequence of the path, or empty if none.
    std::vector<int> find_augmenting_path(const std::vector<int>& roots);

    /// Flips matched/unmatched status along `path`.
    void augment(const std::vector<int>& path);

private:
    int lca(int a, int b);
    void mark_path(int v, int b, int child);
    std::vector<int> walk_to_root(int even_vertex) const;

    std::vector<std::vector<int>> adj_;
    std::vector<int> mate_;
    // per-search scratch
    std::vector<int> parent_, base_, tree_;
    std::vector<char> even_, in_blossom_, lca_mark_;
    std::vector<int> queue_;
};

}  // namespace dcsr::detail
