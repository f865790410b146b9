#include "semitotal/graph.hpp"

#include <algorithm>
#include <deque>
#include <string>

#include "semitotal/errors.hpp"

namespace semitotal {

Graph Graph::from_edge_list(int n, std::span<const std::pair<int, int>> edges) {
    if (n < 1) throw InputError("graph must have at least one vertex, got n=" + std::to_string(n));
    std::vector<VertexSet> adj(static_cast<std::size_t>(n), VertexSet(n));
    for (auto [u, v] : edges) {
        auto pair_text = "(" + std::to_string(u) + "," + std::to_string(v) + ")";
        if (u < 0 || v < 0 || u >= n || v >= n)
            throw EdgeError("edge " + pair_text + " has an endpoint outside 0.." + std::to_string(n - 1), u, v);
        if (u == v) throw EdgeError("loop edge " + pair_text, u, v);
        adj[static_cast<std::size_t>(u)].insert(v);
        adj[static_cast<std::size_t>(v)].insert(u);
    }
    return Graph(n, std::move(adj));
}

Graph::Graph(int n, std::vector<VertexSet> adj) : n_(n), adj_(std::move(adj)) {
    degrees_.resize(static_cast<std::size_t>(n));
    for (int v = 0; v < n; ++v) {
        degrees_[static_cast<std::size_t>(v)] = adj_[static_cast<std::size_t>(v)].size();
        edge_count_ += degrees_[static_cast<std::size_t>(v)];
    }
    edge_count_ /= 2;

    dist_.assign(static_cast<std::size_t>(n) * static_cast<std::size_t>(n), kUnreachable);
    std::deque<int> queue;
    for (int s = 0; s < n; ++s) {
        int* row = &dist_[static_cast<std::size_t>(s * n)];
        row[s] = 0;
        queue.assign(1, s);
        while (!queue.empty()) {
            int u = queue.front();
            queue.pop_front();
            for (int w : adj_[static_cast<std::size_t>(u)]) {
                if (row[w] == kUnreachable) {
                    row[w] = row[u] + 1;
                    queue.push_back(w);
                }
            }
        }
    }
}

int Graph::max_degree() const { return degrees_.empty() ? 0 : *std::max_element(degrees_.begin(), degrees_.end()); }

std::vector<std::pair<int, int>> Graph::edges() const {
    std::vector<std::pair<int, int>> out;
    out.reserve(static_cast<std::size_t>(edge_count_));
    for (int u = 0; u < n_; ++u)
        for (int v = adj_[static_cast<std::size_t>(u)].next(u + 1); v < n_; v = adj_[static_cast<std::size_t>(u)].next(v + 1))
            out.emplace_back(u, v);
    return out;
}

VertexSet open_neighborhood(const Graph& g, const VertexSet& s) {
    VertexSet out = g.empty_set();
    for (int u : s) out |= g.neighbors(u);
    return out;
}

VertexSet closed_neighborhood(const Graph& g, const VertexSet& s) { return open_neighborhood(g, s) | s; }

VertexSet ball(const Graph& g, int v, int radius) {
    VertexSet out = g.empty_set();
    for (int w = 0; w < g.order(); ++w)
        if (w != v && g.dist(v, w) <= radius) out.insert(w);
    return out;
}

bool is_isolate_free(const Graph& g) {
    for (int v = 0; v < g.order(); ++v)
        if (g.degree(v) == 0) return false;
    return true;
}

ProductGraph cartesian_product(const Graph& g, const Graph& h, int vertex_cap) {
    const long long total = static_cast<long long>(g.order()) * h.order();
    if (total > vertex_cap)
        throw InputError("product has " + std::to_string(total) + " vertices, cap is " + std::to_string(vertex_cap));
    const int nh = h.order();
    std::vector<std::pair<int, int>> edges;
    edges.reserve(static_cast<std::size_t>(g.order() * h.edge_count() + nh * g.edge_count()));
    for (int a = 0; a < g.order(); ++a)
        for (auto [x, y] : h.edges()) edges.emplace_back(a * nh + x, a * nh + y);
    for (auto [a, b] : g.edges())
        for (int x = 0; x < nh; ++x) edges.emplace_back(a * nh + x, b * nh + x);
    return ProductGraph(g, h, Graph::from_edge_list(static_cast<int>(total), edges));
}

}  // namespace semitotal
