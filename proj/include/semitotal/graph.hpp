#pragma once

#include <limits>
#include <span>
#include <utility>
#include <vector>

#include "semitotal/vertex_set.hpp"

namespace semitotal {

/// Immutable simple undirected graph on vertices 0..n-1.
///
/// Adjacency is stored as one VertexSet per vertex and the full hop-distance
/// table is computed at construction (BFS from every vertex). Unreachable
/// pairs hold kUnreachable.
class Graph {
public:
    static constexpr int kUnreachable = std::numeric_limits<int>::max();

    /// Throws EdgeError on loops or out-of-range endpoints; duplicate edges collapse.
    static Graph from_edge_list(int n, std::span<const std::pair<int, int>> edges);
    static Graph from_edge_list(int n, const std::vector<std::pair<int, int>>& edges) {
        return from_edge_list(n, std::span<const std::pair<int, int>>(edges));
    }

    int order() const { return n_; }
    int edge_count() const { return edge_count_; }
    int degree(int v) const { return degrees_[static_cast<std::size_t>(v)]; }
    int max_degree() const;

    const VertexSet& neighbors(int v) const { return adj_[static_cast<std::size_t>(v)]; }
    bool adjacent(int u, int v) const { return adj_[static_cast<std::size_t>(u)].contains(v); }
    int dist(int u, int v) const { return dist_[static_cast<std::size_t>(u * n_ + v)]; }

    /// Sorted (u < v) edge list.
    std::vector<std::pair<int, int>> edges() const;

    VertexSet empty_set() const { return VertexSet(n_); }
    VertexSet all_vertices() const { return VertexSet::full(n_); }

    bool operator==(const Graph& other) const { return n_ == other.n_ && adj_ == other.adj_; }

private:
    Graph(int n, std::vector<VertexSet> adj);

    int n_ = 0;
    int edge_count_ = 0;
    std::vector<VertexSet> adj_;
    std::vector<int> degrees_;
    std::vector<int> dist_;
};

/// N(S): every vertex adjacent to some member of S.
VertexSet open_neighborhood(const Graph& g, const VertexSet& s);
/// N[S] = N(S) ∪ S.
VertexSet closed_neighborhood(const Graph& g, const VertexSet& s);
/// Vertices within hop distance `radius` of v, v excluded.
VertexSet ball(const Graph& g, int v, int radius);
bool is_isolate_free(const Graph& g);

/// G□H with flat index g·n_H + h. Keeps both factors.
class ProductGraph {
public:
    static constexpr int kDefaultVertexCap = 4096;

    const Graph& graph() const { return graph_; }
    const Graph& left() const { return left_; }
    const Graph& right() const { return right_; }
    int n_g() const { return left_.order(); }
    int n_h() const { return right_.order(); }

    int encode(int g, int h) const { return g * n_h() + h; }
    std::pair<int, int> decode(int index) const { return {index / n_h(), index % n_h()}; }

    friend ProductGraph cartesian_product(const Graph& g, const Graph& h, int vertex_cap);

private:
    ProductGraph(Graph left, Graph right, Graph product)
        : left_(std::move(left)), right_(std::move(right)), graph_(std::move(product)) {}

    Graph left_;
    Graph right_;
    Graph graph_;
};

/// Throws InputError when n_G·n_H exceeds vertex_cap.
ProductGraph cartesian_product(const Graph& g, const Graph& h,
                               int vertex_cap = ProductGraph::kDefaultVertexCap);

}  // namespace semitotal
