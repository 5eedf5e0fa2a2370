#include "colkern/graph.hpp"

#include <string>

namespace colkern {

Graph::Graph(int n) : n_(n), adj_(static_cast<std::size_t>(n < 0 ? 0 : n)) {
    if (n < 0) throw std::invalid_argument("vertex count must be nonnegative");
}

void Graph::check_vertex(int v) const {
    if (v < 0 || v >= n_)
        throw std::out_of_range("vertex " + std::to_string(v) + " outside [0, " + std::to_string(n_) + ")");
}

void Graph::add_edge(int u, int v) {
    check_vertex(u);
    check_vertex(v);
    if (u == v) throw std::invalid_argument("loops are not allowed");
    if (adj_[static_cast<std::size_t>(u)].insert(v).second) {
        adj_[static_cast<std::size_t>(v)].insert(u);
        ++edges_;
    }
}

bool Graph::has_edge(int u, int v) const {
    check_vertex(u);
    check_vertex(v);
    return adj_[static_cast<std::size_t>(u)].count(v) > 0;
}

const std::set<int>& Graph::neighbors(int v) const {
    check_vertex(v);
    return adj_[static_cast<std::size_t>(v)];
}

std::vector<std::pair<int, int>> Graph::edges() const {
    std::vector<std::pair<int, int>> out;
    out.reserve(edges_);
    for (int u = 0; u < n_; ++u)
        for (int v : adj_[static_cast<std::size_t>(u)])
            if (u < v) out.emplace_back(u, v);
    return out;
}

}  // namespace colkern
