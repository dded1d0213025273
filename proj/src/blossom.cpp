#include "blossom.hpp"

#include <algorithm>
#include <stdexcept>

namespace dcsr::detail {

BlossomSearch::BlossomSearch(int num_vertices) : adj_(num_vertices), mate_(num_vertices, -1) {}

int BlossomSearch::add_vertex() {
    adj_.emplace_back();
    mate_.push_back(-1);
    return size() - 1;
}

void BlossomSearch::add_edge(int u, int v) {
    adj_[u].push_back(v);
    adj_[v].push_back(u);
}

void BlossomSearch::match(int u, int v) {
    if (mate_[u] != -1 || mate_[v] != -1) throw std::logic_error("vertex already matched");
    mate_[u] = v;
    mate_[v] = u;
}

int BlossomSearch::lca(int a, int b) {
    std::fill(lca_mark_.begin(), lca_mark_.end(), 0);
    for (;;) {
        a = base_[a];
        lca_mark_[a] = 1;
        if (mate_[a] == -1) break;
        a = parent_[mate_[a]];
    }
    for (;;) {
        b = base_[b];
        if (lca_mark_[b]) return b;
        b = parent_[mate_[b]];
    }
}

void BlossomSearch::mark_path(int v, int b, int child) {
    while (base_[v] != b) {
        in_blossom_[base_[v]] = in_blossom_[base_[mate_[v]]] = 1;
        parent_[v] = child;
        child = mate_[v];
        v = parent_[mate_[v]];
    }
}

std::vector<int> BlossomSearch::walk_to_root(int x) const {
    std::vector<int> seq{x};
    while (mate_[x] != -1) {
        const int m = mate_[x];
        seq.push_back(m);
        x = parent_[m];
        seq.push_back(x);
    }
    return seq;
}

std::vector<int> BlossomSearch::find_augmenting_path(const std::vector<int>& roots) {
    const int n = size();
    parent_.assign(n, -1);
    base_.resize(n);
    for (int i = 0; i < n; ++i) base_[i] = i;
    tree_.assign(n, -1);
    even_.assign(n, 0);
    in_blossom_.assign(n, 0);
    lca_mark_.assign(n, 0);
    queue_.clear();
    for (int r : roots) {
        if (mate_[r] != -1) throw std::logic_error("search root is matched");
        if (even_[r]) continue;
        even_[r] = 1;
        tree_[r] = r;
        queue_.push_back(r);
    }

    for (std::size_t head = 0; head < queue_.size(); ++head) {
        const int v = queue_[head];
        for (int to : adj_[v]) {
            if (base_[v] == base_[to] || mate_[v] == to) continue;
            if (even_[to]) {
                if (tree_[to] != tree_[v]) {
                    auto left = walk_to_root(v);
                    std::reverse(left.begin(), left.end());
                    auto right = walk_to_root(to);
                    left.insert(left.end(), right.begin(), right.end());
                    return left;
                }
                const int cur = lca(v, to);
                std::fill(in_blossom_.begin(), in_blossom_.end(), 0);
                mark_path(v, cur, to);
                mark_path(to, cur, v);
                for (int i = 0; i < n; ++i) {
                    if (!in_blossom_[base_[i]]) continue;
                    base_[i] = cur;
                    if (!even_[i]) {
                        even_[i] = 1;
                        tree_[i] = tree_[v];
                        queue_.push_back(i);
                    }
                }
            } else if (parent_[to] == -1) {
                parent_[to] = v;
                tree_[to] = tree_[v];
                if (mate_[to] == -1) {
                    auto path = walk_to_root(v);
                    std::reverse(path.begin(), path.end());
                    path.push_back(to);
                    return path;
                }
                const int m = mate_[to];
                even_[m] = 1;
                tree_[m] = tree_[v];
                queue_.push_back(m);
            }
        }
    }
    return {};
}

void BlossomSearch::augment(const std::vector<int>& path) {
    // path = x0 - x1 - ... - x_{2m+1}; edges (x0,x1), (x2,x3), ... become matched
    for (std::size_t i = 0; i + 1 < path.size(); i += 2) {
        mate_[path[i]] = path[i + 1];
        mate_[path[i + 1]] = path[i];
    }
}

}  // namespace dcsr::detail
