#ifndef COLKERN_GRAPH_HPP
#define COLKERN_GRAPH_HPP

#include <cstdint>
#include <set>
#include <stdexcept>
#include <utility>
#include <vector>

namespace colkern {

/// Simple undirected graph on vertices 0..n-1. Loops are rejected;
/// repeated edge insertions are absorbed.
class Graph {
public:
    explicit Graph(int n);

    int vertex_count() const { return n_; }
    std::size_t edge_count() const { return edges_; }

    void add_edge(int u, int v);
    bool has_edge(int u, int v) const;
    const std::set<int>& neighbors(int v) const;
    int degree(int v) const { return static_cast<int>(neighbors(v).size()); }

    /// All edges as (u, v) with u < v, sorted ascending.
    std::vector<std::pair<int, int>> edges() const;

    friend bool operator==(const Graph&, const Graph&) = default;

private:
    void check_vertex(int v) const;

    int n_;
    std::vector<std::set<int>> adj_;
    std::size_t edges_ = 0;
};

}  // namespace colkern

#endif
